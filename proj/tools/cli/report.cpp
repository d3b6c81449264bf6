#include "report.hpp"

#include "clforms/attenuated.hpp"

namespace clforms::cli {

std::string num(const BigInt& v) { return to_decimal(v); }
std::string num(const Rational& v) { return to_decimal(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }
std::string num(std::int64_t v) { return std::to_string(v); }
std::string num(unsigned v) { return std::to_string(v); }

Json params_json(const SpaceParams& sp) {
  return Json{{"q", num(sp.q)}, {"n", num(sp.n)}, {"l", num(sp.l)}};
}

Json vertex_json(const SpaceParams& sp, std::uint64_t key) {
  Json entries = Json::array();
  for (auto d : digits_of_index(sp.q, key, std::size_t{sp.n} * sp.l)) entries.push_back(num(unsigned{d}));
  return Json{{"index", num(key)}, {"entries", entries}};
}

Json to_json(const CLVerdict& v, const SpaceParams& sp, Level level) {
  Json j;
  j["is_cl"] = v.is_cl;
  j["x"] = num(v.x);
  j["level"] = level == Level::Fast ? "fast" : "full";
  j["integral_size"] = v.integral_size;
  Json per;
  for (std::size_t i = 0; i < kDefinitions.size(); ++i) per[kDefinitions[i]] = to_string(v.per_definition[i]);
  j["per_definition"] = per;
  j["eigen_zero_vector"] = v.eigen_zero_vector;
  Json ws = Json::array();
  for (const auto& w : v.witnesses) {
    Json e{{"definition", w.definition}, {"detail", w.detail}};
    if (w.vertex) e["vertex"] = vertex_json(sp, *w.vertex);
    ws.push_back(e);
  }
  if (!ws.empty()) j["witness"] = ws.front();
  j["witnesses"] = ws;
  return j;
}

namespace {

Json eigen_checks(const std::vector<EigenCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back(Json{{"value", num(c.value)},
                       {"expected_multiplicity", num(c.expected_multiplicity)},
                       {"nullity", num(std::uint64_t{c.nullity})},
                       {"ok", c.ok}});
  return out;
}

Json counts_by_parameter(const std::map<std::int64_t, std::uint64_t>& m) {
  Json out = Json::object();
  for (const auto& [x, n] : m) out[num(x)] = num(n);
  return out;
}

Json members(const VertexSet& s) {
  Json out = Json::array();
  for (auto v : s.indices()) out.push_back(num(v));
  return out;
}

}  // namespace

Json to_json(const SpectralReport& r) {
  Json j;
  j["rank_m"] = {{"value", num(std::uint64_t{r.rank_m})}, {"expected", num(r.expected_rank_m)}, {"ok", r.rank_ok}};
  j["gram_identity"] = {{"ok", r.gram_ok}};
  j["point_graph_spectrum"] = {{"eigenvalues", eigen_checks(r.point_graph)}, {"ok", r.point_graph_ok}};
  j["gram_spectrum"] = {{"eigenvalues", eigen_checks(r.gram_spectrum)}, {"ok", r.gram_spectrum_ok}};
  j["kneser_spectrum"] = {{"eigenvalues", eigen_checks(r.kneser)},
                          {"row_sums_ok", r.kneser_row_sums_ok},
                          {"ok", r.kneser_ok}};
  j["kernel_vectors"] = {{"ok", r.kernel_vector_ok}};
  j["all_ok"] = r.all_ok();
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["params"] = params_json(r.sp);
  j["method"] = to_string(r.method);
  j["x"] = r.x ? Json(num(*r.x)) : Json(nullptr);
  j["count"] = num(std::uint64_t{r.sets.size()});
  j["by_parameter"] = counts_by_parameter(r.by_parameter);
  j["nodes"] = num(r.nodes);
  j["reverify_failures"] = num(r.reverify_failures);
  j["dedup"] = "raw bit vector; no isomorphism reduction";
  Json sets = Json::array();
  for (const auto& s : r.sets) sets.push_back(Json{{"size", num(s.size())}, {"members", members(s)}});
  j["sets"] = sets;
  return j;
}

Json to_json(const DefinitionCensus& c) {
  Json j;
  j["params"] = params_json(c.sp);
  j["subsets"] = num(c.subsets);
  j["pass_kernel_orth"] = num(c.pass_kernel);
  j["pass_disjoint_count"] = num(c.pass_disjoint);
  j["pass_eigen_V1"] = num(c.pass_eigen);
  j["disagreements"] = num(c.disagreements);
  Json ex = Json::array();
  for (auto m : c.disagreement_examples) ex.push_back(num(m));
  j["disagreement_examples"] = ex;
  j["cl_sets"] = num(std::uint64_t{c.cl_masks.size()});
  j["by_parameter"] = counts_by_parameter(c.by_parameter);
  j["integral_parameters"] = c.integral_parameters;
  j["complement_closed"] = c.complement_closed;
  j["spreads_checked"] = num(c.spreads_checked);
  j["spreads_ok"] = c.spreads_ok;
  Json masks = Json::array();
  for (auto m : c.cl_masks) masks.push_back(num(m));
  j["cl_masks"] = masks;
  j["ok"] = c.ok();
  return j;
}

Json to_json(const ClassificationBounds& b) {
  Json j;
  j["in_range"] = b.in_range;
  j["ekr_bound"] = num(b.ekr_bound);
  j["hm_bound"] = num(b.hm_bound);
  j["delta"] = num(b.delta);
  j["c"] = num(b.c);
  j["w_sigma"] = num(b.w_sigma);
  j["s1"] = num(b.s1);
  j["s2_prime"] = num(b.s2_prime);
  j["point_meet_count"] = num(b.point_meet_count);
  j["delta_order_ok"] = b.delta_order_ok;
  j["delta_vs_c_ok"] = b.delta_vs_c_ok;
  j["w_sigma_gap_ok"] = b.w_sigma_gap_ok;
  j["greedy_union_ok"] = b.greedy_union_ok;
  j["pair_bound_ok"] = b.pair_bound_ok;
  j["union_bound_ok"] = b.union_bound_ok;
  j["c_bound_ok"] = b.c_bound_ok;
  return j;
}

Json to_json(const TrivialityReport& t, const SpaceParams& sp) {
  Json j;
  j["trivial_as_pencil_union"] = t.trivial_as_pencil_union;
  Json cover = Json::array();
  for (const auto& p : t.cover) cover.push_back(num(point_key(sp, p)));
  j["pencil_points"] = cover;
  j["subspace_blocks"] = num(std::uint64_t{t.subspace_cover.size()});
  j["unresolved"] = t.unresolved;
  j["nontrivial_certified"] = t.nontrivial_certified;
  j["max_intersecting"] = num(t.max_intersecting);
  j["search_exhausted"] = t.search_exhausted;
  return j;
}

std::string render(const Json& j) { return j.dump() + "\n"; }

}  // namespace clforms::cli
