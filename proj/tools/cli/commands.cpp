#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "clforms/attenuated.hpp"
#include "clforms/census.hpp"
#include "clforms/clsets.hpp"
#include "clforms/counting.hpp"
#include "clforms/error.hpp"
#include "clforms/search.hpp"
#include "clforms/spectral.hpp"
#include "clforms/spreads.hpp"
#include "report.hpp"
#include "vertex_file.hpp"

namespace clforms::cli {

namespace {

struct Common {
  unsigned q = 0, n = 0, l = 0;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

void add_space_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--q", c.q, "field size (prime power)")->required();
  cmd->add_option("--n", c.n, "vertex dimension")->required();
  cmd->add_option("--l", c.l, "dimension of E")->required();
}

std::vector<std::int64_t> parse_values(const std::string& key, const std::string& list) {
  std::vector<std::int64_t> out;
  std::stringstream ss(list);
  std::string item;
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) fail(ErrorCode::ParseError, "grid: bad value '" + s + "' for " + key);
    return v;
  };
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const auto lo = parse_int(item.substr(0, dots)), hi = parse_int(item.substr(dots + 2));
    if (hi < lo) fail(ErrorCode::ParseError, "grid: empty range " + item);
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) fail(ErrorCode::ParseError, "grid: no values for " + key);
  return out;
}

std::vector<unsigned> as_unsigned(const std::string& key, const std::vector<std::int64_t>& v) {
  std::vector<unsigned> out;
  for (auto x : v) {
    if (x < 0) fail(ErrorCode::ParseError, "grid: negative value for " + key);
    out.push_back(static_cast<unsigned>(x));
  }
  return out;
}

int exit_for(const Error& e) { return e.code() == ErrorCode::CapExceeded ? kCap : kUsage; }

// ---- count ----

struct CountArgs {
  FormulaArgs f;
  std::string formula;
  bool oracle = false;
  std::uint64_t cap = census::kDefaultCensusCap;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  const auto r = evaluate_formula(a.formula, a.f);
  Json j;
  j["value"] = num(r.value);
  if (!a.oracle) {
    out << render(j);
    return kOk;
  }
  const Rational oracle = census::evaluate(a.formula, a.f, a.cap);
  const bool match = oracle == r.value;
  j["oracle"] = num(oracle);
  j["match"] = match;
  out << render(j);
  return match ? kOk : kCheckFailed;
}

// ---- verify / classify ----

int cmd_verify(const std::string& file, const std::string& level_name, const Common& c, std::ostream& out) {
  const VertexSet l = read_vertex_set_file(file);
  const Level level = level_name == "full" ? Level::Full : Level::Fast;
  AttenuatedSpace space(l.params());
  VerdictEngine engine(space, VerdictOptions{8, c.seed});
  out << render(to_json(engine.verdict(l, level), l.params(), level));
  return kOk;
}

int cmd_classify(const std::string& file, std::uint64_t budget, std::ostream& out) {
  const VertexSet l = read_vertex_set_file(file);
  AttenuatedSpace space(l.params());
  VerdictEngine engine(space);
  Json j;
  j["params"] = params_json(l.params());
  j["size"] = num(l.size());
  j["x"] = num(cl_parameter(l));
  j["classification"] = to_json(classify_trivial(engine, l, budget), l.params());
  out << render(j);
  return kOk;
}

// ---- construct ----

struct ConstructArgs {
  std::string kind;
  std::uint64_t point = 0;
  std::optional<std::uint64_t> hyperplane;
  std::uint64_t k = 0;
  std::uint64_t y = 1;
  std::string out_file;
};

const std::vector<std::string> kKinds = {"pencil",           "hyperplane", "pencil_hyperplane",
                                         "e1_pencils", "hyperplane_union", "nontrivial",
                                         "spread",           "empty",      "full"};

int cmd_construct(const ConstructArgs& a, const Common& c, std::ostream& out) {
  const auto sp = SpaceParams::make(c.q, c.n, c.l);
  AttenuatedSpace space(sp);
  auto point_at = [&](std::uint64_t i) {
    if (i >= space.point_count()) fail(ErrorCode::BadIndices, "point index out of range");
    return space.points()[i];
  };
  auto hyperplane_at = [&](std::uint64_t i) {
    const auto hs = enumerate_typed_hyperplanes(sp);
    if (i >= hs.size()) fail(ErrorCode::BadIndices, "hyperplane index out of range");
    return hs[i];
  };

  VertexSet s(sp);
  std::string what = a.kind;
  if (a.kind == "pencil") {
    s = point_pencil(space, point_at(a.point));
  } else if (a.kind == "hyperplane") {
    s = hyperplane_set(sp, hyperplane_at(a.hyperplane.value_or(0)));
  } else if (a.kind == "pencil_hyperplane") {
    // Default pair: tau = <e_1 + e_{n+1}>, V = {A : first row 0}; tau is not in V.
    std::vector<Elem> e1(sp.l, 0), zero(sp.n, 0);
    e1[0] = 1;
    const Point tau = a.point ? point_at(a.point) : e1_point(sp, e1);
    const auto v = a.hyperplane ? hyperplane_at(*a.hyperplane) : first_row_hyperplane(sp, zero);
    s = pencil_hyperplane_union(space, tau, v);
  } else if (a.kind == "e1_pencils") {
    s = e1_pencil_union(space, a.k);
    what += " k=" + std::to_string(a.k);
  } else if (a.kind == "hyperplane_union") {
    s = hyperplane_union(sp, a.y);
    what += " y=" + std::to_string(a.y);
  } else if (a.kind == "nontrivial") {
    s = nontrivial_family(sp, a.y);
    what += " y=" + std::to_string(a.y);
  } else if (a.kind == "spread") {
    s = to_vertex_set(sp, spread(sp, c.seed).members);
    what += " seed=" + std::to_string(c.seed);
  } else if (a.kind == "full") {
    s = VertexSet::full(sp);
  }

  if (a.out_file.empty()) {
    write_vertex_set(out, s, what);
    return kOk;
  }
  write_vertex_set_file(a.out_file, s, what);
  Json j;
  j["kind"] = a.kind;
  j["params"] = params_json(sp);
  j["size"] = num(s.size());
  j["x"] = num(cl_parameter(s));
  j["file"] = a.out_file;
  out << render(j);
  return kOk;
}

// ---- search / equivalence ----

int cmd_search(const std::string& method, std::optional<std::int64_t> x, const std::string& out_dir,
               std::uint64_t node_cap, const Common& c, std::ostream& out) {
  const auto sp = SpaceParams::make(c.q, c.n, c.l);
  AttenuatedSpace space(sp);
  VerdictEngine engine(space, VerdictOptions{8, c.seed});
  SearchOptions opts;
  opts.method = parse_search_method(method);
  opts.x = x;
  opts.threads = c.threads;
  opts.node_cap = node_cap;
  const auto report = exhaustive(engine, opts);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const auto width = std::to_string(report.sets.size()).size();
    for (std::size_t i = 0; i < report.sets.size(); ++i) {
      std::ostringstream name;
      name << "set_" << std::setw(static_cast<int>(width)) << std::setfill('0') << i << ".vset";
      write_vertex_set_file((std::filesystem::path(out_dir) / name.str()).string(), report.sets[i],
                            "x=" + to_decimal(cl_parameter(report.sets[i])));
    }
  }
  out << render(to_json(report));
  return report.reverify_failures == 0 ? kOk : kCheckFailed;
}

int cmd_equivalence(const Common& c, std::ostream& out) {
  const auto sp = SpaceParams::make(c.q, c.n, c.l);
  AttenuatedSpace space(sp);
  VerdictEngine engine(space, VerdictOptions{8, c.seed});
  const auto census = definition_census(engine, c.threads);
  out << render(to_json(census));
  return census.ok() ? kOk : kCheckFailed;
}

// ---- spectra / ekr / inequalities ----

int cmd_spectra(const Common& c, std::ostream& out) {
  const auto sp = SpaceParams::make(c.q, c.n, c.l);
  AttenuatedSpace space(sp);
  Spectral spectral(space);
  const auto r = spectral.report();
  Json j;
  j["params"] = params_json(sp);
  const Json body = to_json(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  out << render(j);
  return r.all_ok() ? kOk : kCheckFailed;
}

int cmd_ekr(const Common& c, std::ostream& out) {
  const auto sp = SpaceParams::make(c.q, c.n, c.l);
  AttenuatedSpace space(sp);
  const std::uint64_t found = ekr_check(space);
  const BigInt expected = ipow(std::uint64_t{sp.q}, std::uint64_t{sp.n - 1} * sp.l);
  Json j;
  j["params"] = params_json(sp);
  j["max_intersecting"] = num(found);
  j["expected"] = num(expected);
  j["match"] = BigInt(found) == expected;
  out << render(j);
  return BigInt(found) == expected ? kOk : kCheckFailed;
}

bool required_checks(const ClassificationBounds& b) {
  return b.delta_order_ok && b.delta_vs_c_ok && b.w_sigma_gap_ok && b.greedy_union_ok && b.pair_bound_ok;
}

int cmd_inequalities(const std::string& grid_text, bool with_census, std::uint64_t cap, std::ostream& out) {
  const Grid g = parse_grid(grid_text);
  Json rows = Json::array();
  Json skipped = Json::array();
  bool all_ok = true;
  for (auto q : g.q)
    for (auto n : g.n)
      for (auto l : g.l) {
        const auto sp = SpaceParams::make(q, n, l);
        if (!(l >= 2 * n && n >= 2)) {
          skipped.push_back(Json{{"params", params_json(sp)}, {"reason", "needs l >= 2n >= 4"}});
          continue;
        }
        std::optional<census::PointCensus> pc;
        if (with_census) {
          try {
            pc = census::w_sigma(sp, cap);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::CapExceeded) throw;
          }
        }
        std::vector<std::int64_t> xs = g.x;
        if (xs.empty())
          for (std::int64_t x = 2; classification_bounds(sp, x).in_range; ++x) xs.push_back(x);
        for (auto x : xs) {
          if (x < 2) continue;
          const auto b = classification_bounds(sp, x);
          Json row;
          row["params"] = params_json(sp);
          row["x"] = num(x);
          const Json body = to_json(b);
          for (const auto& [k, v] : body.items()) row[k] = v;
          bool ok = required_checks(b);
          if (pc) {
            const bool census_gap = Rational(pc->max) <= Rational(b.delta - b.c);
            row["w_sigma_census"] = {{"min", num(pc->min)}, {"max", num(pc->max)}, {"average", num(pc->average())}};
            row["w_sigma_census_gap_ok"] = census_gap;
            ok = ok && census_gap;
          }
          row["ok"] = ok;
          if (b.in_range && !ok) all_ok = false;
          rows.push_back(row);
        }
      }
  Json j;
  j["rows"] = rows;
  j["skipped"] = skipped;
  j["all_ok"] = all_ok;
  out << render(j);
  return all_ok ? kOk : kCheckFailed;
}

}  // namespace

Grid parse_grid(const std::string& text) {
  Grid g;
  bool seen_q = false, seen_n = false, seen_l = false;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char ch) { return std::isspace(ch); }),
               part.end());
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "grid: expected key=values in '" + part + "'");
    const std::string key = part.substr(0, eq);
    const auto values = parse_values(key, part.substr(eq + 1));
    if (key == "q") {
      g.q = as_unsigned(key, values), seen_q = true;
    } else if (key == "n") {
      g.n = as_unsigned(key, values), seen_n = true;
    } else if (key == "l") {
      g.l = as_unsigned(key, values), seen_l = true;
    } else if (key == "x") {
      g.x = values;
    } else {
      fail(ErrorCode::ParseError, "grid: unknown key '" + key + "'");
    }
  }
  if (!seen_q || !seen_n || !seen_l) fail(ErrorCode::ParseError, "grid: q, n and l are required");
  return g;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cameron-Liebler sets of the bilinear forms graph: counts, verdicts, searches"};
  app.name("clforms");
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "worker threads for chunkable operations")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--seed", common.seed, "seed for every pseudorandom choice");

  CountArgs count;
  auto* c_count = app.add_subcommand("count", "evaluate a closed-form count, optionally against a census");
  c_count->add_option("--q", count.f.q)->required();
  c_count->add_option("--n", count.f.n)->required();
  c_count->add_option("--l", count.f.l)->required();
  c_count->add_option("--formula", count.formula)->required()->check(CLI::IsMember(formula_ids()));
  c_count->add_option("--i", count.f.i);
  c_count->add_option("--j", count.f.j);
  c_count->add_option("--k", count.f.k);
  c_count->add_option("--m", count.f.m);
  c_count->add_option("--x", count.f.x);
  c_count->add_flag("--pi-in-v", count.f.pi_in_v);
  c_count->add_flag("--oracle", count.oracle, "also run the brute-force census");
  c_count->add_option("--cap", count.cap, "census enumeration cap");

  std::string file, level = "fast";
  auto* c_verify = app.add_subcommand("verify", "CL verdict for a vertex-set file");
  c_verify->add_option("file", file)->required();
  c_verify->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}));

  std::uint64_t budget = 1'000'000;
  auto* c_classify = app.add_subcommand("classify", "trivial decomposition or non-triviality certificate");
  c_classify->add_option("file", file)->required();
  c_classify->add_option("--budget", budget, "clique search node budget");

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "write a constructed vertex set");
  add_space_options(c_construct, common);
  c_construct->add_option("--kind", construct.kind)->required()->check(CLI::IsMember(kKinds));
  c_construct->add_option("--point", construct.point, "point index");
  c_construct->add_option("--hyperplane", construct.hyperplane, "typed hyperplane index");
  c_construct->add_option("--k", construct.k, "number of e_1 pencils");
  c_construct->add_option("--y", construct.y, "number of first-row hyperplanes");
  c_construct->add_option("--out", construct.out_file, "output file (default: stdout)");

  std::string method = "kernel_constrained", out_dir;
  std::optional<std::int64_t> x;
  std::uint64_t node_cap = 100'000'000;
  auto* c_search = app.add_subcommand("search", "exhaustive CL set search");
  add_space_options(c_search, common);
  c_search->add_option("--x", x);
  c_search->add_option("--method", method)
      ->check(CLI::IsMember({"full_power_set", "fixed_x_subsets", "kernel_constrained"}));
  c_search->add_option("--out-dir", out_dir, "write one vertex-set file per found set");
  c_search->add_option("--node-cap", node_cap);

  auto* c_equiv = app.add_subcommand("equivalence", "compare the CL definitions over every subset");
  add_space_options(c_equiv, common);

  auto* c_spectra = app.add_subcommand("spectra", "exact rank, Gram identity and spectra");
  add_space_options(c_spectra, common);

  auto* c_ekr = app.add_subcommand("ekr", "maximum intersecting family size");
  add_space_options(c_ekr, common);

  std::string grid;
  bool with_census = false;
  std::uint64_t census_cap = census::kDefaultCensusCap;
  auto* c_ineq = app.add_subcommand("inequalities", "classification inequalities over a grid");
  c_ineq->add_option("--grid", grid, "e.g. \"q=2,3;n=2;l=4..6\" (optional x=...)")->required();
  c_ineq->add_flag("--census", with_census, "also check the census maximum of W_Sigma");
  c_ineq->add_option("--cap", census_cap, "census enumeration cap");

  app.fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_count) return cmd_count(count, out);
    if (*c_verify) return cmd_verify(file, level, common, out);
    if (*c_classify) return cmd_classify(file, budget, out);
    if (*c_construct) return cmd_construct(construct, common, out);
    if (*c_search) return cmd_search(method, x, out_dir, node_cap, common, out);
    if (*c_equiv) return cmd_equivalence(common, out);
    if (*c_spectra) return cmd_spectra(common, out);
    if (*c_ekr) return cmd_ekr(common, out);
    if (*c_ineq) return cmd_inequalities(grid, with_census, census_cap, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace clforms::cli
