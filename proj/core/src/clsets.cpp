#include "clforms/clsets.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "clforms/counting.hpp"
#include "clforms/error.hpp"
#include "clforms/graph.hpp"

namespace clforms {

namespace {

std::uint64_t upow(unsigned q, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

// Indices of L disjoint from w.
std::uint64_t disjoint_in(const AttenuatedSpace& space, const VertexSet& l, std::uint64_t w) {
  if (space.vertex_count() <= kMaxDisjointnessVertices) return space.disjoint_set(w).intersection_size(l);
  std::uint64_t c = 0;
  for (auto u : l.indices())
    if (space.disjoint(w, u)) ++c;
  return c;
}

}  // namespace

VertexSet point_pencil(const AttenuatedSpace& space, const Point& p) { return space.pencil(space.point_index(p)); }

VertexSet hyperplane_set(const SpaceParams& sp, const TypedHyperplane& h) { return vertices_in_hyperplane(sp, h); }

VertexSet pencil_hyperplane_union(const AttenuatedSpace& space, const Point& tau, const TypedHyperplane& v) {
  if (in_hyperplane(space.params(), v, tau))
    fail(ErrorCode::PreconditionViolated, "the point lies in the hyperplane; pencil and hyperplane set overlap");
  return point_pencil(space, tau) | hyperplane_set(space.params(), v);
}

VertexSet e1_pencil_union(const AttenuatedSpace& space, std::uint64_t k) {
  const auto& sp = space.params();
  const std::uint64_t ql = upow(sp.q, sp.l);
  if (k > ql) fail(ErrorCode::BadParams, "at most q^l e_1 pencils");
  VertexSet out(sp);
  for (std::uint64_t i = 0; i < k; ++i) out |= point_pencil(space, e1_point(sp, digits_of_index(sp.q, i, sp.l)));
  return out;
}

VertexSet hyperplane_union(const SpaceParams& sp, std::uint64_t y) {
  if (y > upow(sp.q, sp.n)) fail(ErrorCode::BadParams, "at most q^n first-row hyperplanes");
  VertexSet out(sp);
  for (std::uint64_t i = 0; i < y; ++i)
    out |= hyperplane_set(sp, first_row_hyperplane(sp, digits_of_index(sp.q, i, sp.n)));
  return out;
}

VertexSet nontrivial_family(const SpaceParams& sp, std::uint64_t y) {
  if (!(sp.l > sp.n && sp.n >= 2))
    fail(ErrorCode::BadParams, "nontrivial_family needs l > n >= 2, got n=" + std::to_string(sp.n) +
                                   " l=" + std::to_string(sp.l));
  if (y < 1 || y >= upow(sp.q, sp.n - 1))
    fail(ErrorCode::BadParams, "nontrivial_family needs 1 <= y < q^{n-1}");
  return hyperplane_union(sp, y);
}

VertexSet closure(const VertexSet& a, const VertexSet& b, ClosureOp op) {
  switch (op) {
    case ClosureOp::Complement:
      return a.complement();
    case ClosureOp::UnionDisjoint:
      if (a.intersects(b)) fail(ErrorCode::PreconditionViolated, "union_disjoint: the sets intersect");
      return a | b;
    case ClosureOp::DifferenceNested:
      if (!b.is_subset_of(a)) fail(ErrorCode::PreconditionViolated, "difference_nested: b is not contained in a");
      return a - b;
  }
  fail(ErrorCode::BadParams, "unknown closure operation");
}

Rational cl_parameter(const VertexSet& s) {
  const auto& sp = s.params();
  return Rational(BigInt(s.size()), ipow(sp.q, std::uint64_t{sp.n - 1} * sp.l));
}

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::Skipped:
      return "skipped";
  }
  return "?";
}

Outcome CLVerdict::outcome(const std::string& definition) const {
  for (std::size_t i = 0; i < kDefinitions.size(); ++i)
    if (definition == kDefinitions[i]) return per_definition[i];
  fail(ErrorCode::BadParams, "unknown definition '" + definition + "'");
}

VerdictEngine::VerdictEngine(const AttenuatedSpace& space, VerdictOptions opts)
    : space_(&space),
      opts_(opts),
      delta_(delta(space.params())),
      block_(ipow(space.params().q, std::uint64_t{space.params().n - 1} * space.params().l)) {
  const auto& sp = space.params();
  spreads_.push_back(spread(sp));
  for (unsigned i = 0; i < opts_.transformed_spreads; ++i)
    spreads_.push_back(transformed_spread(sp, spreads_.front(), opts_.seed + i));
}

const Spectral& VerdictEngine::spectral() const {
  std::call_once(spectral_once_, [&] { spectral_ = std::make_unique<Spectral>(*space_); });
  return *spectral_;
}

std::optional<std::uint64_t> VerdictEngine::disjoint_count_violation(const VertexSet& l) const {
  // block * count == (|L| - [w in L] block) * Delta keeps everything integral.
  const BigInt size(l.size());
  for (std::uint64_t w = 0; w < space_->vertex_count(); ++w) {
    const BigInt count(disjoint_in(*space_, l, w));
    const BigInt expect = (size - (l.contains(w) ? block_ : BigInt(0))) * delta_;
    if (block_ * count != expect) return w;
  }
  return std::nullopt;
}

bool VerdictEngine::kernel_orthogonal(const VertexSet& l) const {
  std::vector<std::uint8_t> bits(l.universe(), 0);
  for (auto i : l.indices()) bits[i] = 1;
  return spectral().image().contains_indicator(bits);
}

bool VerdictEngine::in_image(const VertexSet& l) const {
  const ExactMatrix& m = spectral().incidence();
  std::call_once(rank_once_, [&] { rank_m_ = exact_rank(m); });
  ExactMatrix aug(m.cols(), m.rows() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) aug(c, r) = m(r, c);
  for (auto i : l.indices()) aug(i, m.rows()) = 1;
  return exact_rank(aug) == rank_m_;
}

Membership VerdictEngine::eigen_v1(const VertexSet& l) const {
  return spectral().eigen_membership_v1(centered_vector(l));
}

CLVerdict VerdictEngine::verdict(const VertexSet& l, Level level) const {
  CLVerdict v;
  v.per_definition.fill(Outcome::Skipped);
  v.x = cl_parameter(l);
  auto set = [&](std::size_t idx, bool ok) { v.per_definition[idx] = ok ? Outcome::Pass : Outcome::Fail; };

  if (!is_integer(v.x)) {
    v.integral_size = false;
    v.witnesses.push_back({"size", std::nullopt,
                           "|L| = " + std::to_string(l.size()) + " is not a multiple of " + to_decimal(block_)});
    return v;
  }
  const BigInt x = numerator(v.x);

  const auto bad = disjoint_count_violation(l);
  set(2, !bad);
  if (bad) {
    const BigInt want = (x - (l.contains(*bad) ? 1 : 0)) * delta_;
    v.witnesses.push_back({kDefinitions[2], *bad,
                           std::to_string(disjoint_in(*space_, l, *bad)) + " members disjoint, expected " +
                               to_decimal(want)});
  }
  v.is_cl = !bad;
  if (level == Level::Fast) return v;

  const bool image = in_image(l);
  set(0, image);
  if (!image) v.witnesses.push_back({kDefinitions[0], std::nullopt, "rank of [M^t | chi] exceeds rank of M"});

  std::vector<std::uint8_t> bits(l.universe(), 0);
  for (auto i : l.indices()) bits[i] = 1;
  const long k = spectral().image().first_violation(bits);
  set(1, k < 0);
  if (k >= 0)
    v.witnesses.push_back({kDefinitions[1], std::nullopt, "not orthogonal to kernel vector " + std::to_string(k)});

  const Membership em = eigen_v1(l);
  v.eigen_zero_vector = em == Membership::ZeroVector;
  set(3, em != Membership::NonMember);
  if (em == Membership::NonMember)
    v.witnesses.push_back({kDefinitions[3], std::nullopt, "K v != lambda_1 v for v = chi_L - x q^{-l} j"});

  bool spreads_ok = true;
  for (const auto& s : spreads_) {
    const auto meet = VertexSet(space_->params(), s.members).intersection_size(l);
    if (BigInt(meet) != x) {
      if (spreads_ok)
        v.witnesses.push_back({kDefinitions[4], std::nullopt,
                               "meets spread (" + s.origin + ") in " + std::to_string(meet) + " members"});
      spreads_ok = false;
    }
  }
  set(4, spreads_ok);

  bool switching_ok = true;
  const VertexSet base(space_->params(), spreads_.front().members);
  for (std::size_t i = 1; i < spreads_.size(); ++i) {
    const VertexSet other(space_->params(), spreads_[i].members);
    const VertexSet r = base - other, r2 = other - base;
    if (covered_points(*space_, r.indices()) != covered_points(*space_, r2.indices())) continue;
    if (r.intersection_size(l) != r2.intersection_size(l)) {
      if (switching_ok)
        v.witnesses.push_back({kDefinitions[5], std::nullopt,
                               "unequal meets with the switching pair from spread " + std::to_string(i)});
      switching_ok = false;
    }
  }
  set(5, switching_ok);

  v.is_cl = v.is_cl && image && k < 0 && em != Membership::NonMember;
  return v;
}

TrivialityReport classify_trivial(const VerdictEngine& engine, const VertexSet& l, std::uint64_t node_budget) {
  const AttenuatedSpace& space = engine.space();
  const auto& sp = space.params();
  const CLVerdict v = engine.verdict(l, Level::Fast);
  if (!v.is_cl) fail(ErrorCode::NotCL, "classify_trivial needs a CL set with integral parameter");
  const std::uint64_t x = to_u64(numerator(v.x), "x");

  TrivialityReport rep;
  if (x == 0) {
    rep.trivial_as_pencil_union = true;
    rep.unresolved = false;
    rep.search_exhausted = true;
    return rep;
  }

  // Candidate blocks: maximum intersecting families inside L.
  struct Block {
    VertexSet set;
    std::optional<std::size_t> point;
    std::optional<Subspace> u;
  };
  std::vector<Block> blocks;
  for (std::size_t p = 0; p < space.point_count(); ++p)
    if (space.pencil(p).is_subset_of(l)) blocks.push_back({space.pencil(p), p, std::nullopt});
  if (sp.n == sp.l) {
    std::vector<Subspace> vsubs;
    for (std::uint64_t w = 0; w < space.vertex_count(); ++w) vsubs.push_back(vertex_subspace(sp, space.vertex(w)));
    for (auto& u : enumerate_typed_subspaces(sp, 2 * sp.n - 1, sp.n - 1)) {
      VertexSet inside(sp);
      for (std::uint64_t w = 0; w < space.vertex_count(); ++w)
        if (contains(u, vsubs[w])) inside.insert(w);
      if (inside.is_subset_of(l)) blocks.push_back({std::move(inside), std::nullopt, std::move(u)});
    }
  }

  std::vector<std::size_t> chosen;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  std::function<bool(const VertexSet&)> cover = [&](const VertexSet& remaining) -> bool {
    if (remaining.empty()) return true;
    if (chosen.size() == x) return false;
    if (++nodes > node_budget) {
      out_of_budget = true;
      return false;
    }
    const std::uint64_t first = remaining.indices().front();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (!blocks[b].set.contains(first) || !blocks[b].set.is_subset_of(remaining)) continue;
      chosen.push_back(b);
      if (cover(remaining - blocks[b].set)) return true;
      chosen.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  };

  if (cover(l)) {
    bool pencils_only = true;
    for (auto b : chosen) {
      if (blocks[b].point) {
        rep.cover.push_back(space.points()[*blocks[b].point]);
      } else {
        pencils_only = false;
        rep.subspace_cover.push_back(*blocks[b].u);
      }
    }
    rep.trivial_as_pencil_union = pencils_only;
    rep.unresolved = false;
    rep.search_exhausted = true;
    return rep;
  }
  rep.search_exhausted = !out_of_budget;

  // Certificate: L is a union of x intersecting families only if
  // x * (largest intersecting subfamily of L) >= |L|.
  const auto members = l.indices();
  if (members.size() <= 4096) {
    Graph g(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!space.disjoint(members[i], members[j])) g.add_edge(i, j);
    try {
      rep.max_intersecting = max_clique(g, node_budget).size();
      rep.nontrivial_certified = x * rep.max_intersecting < members.size();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
    }
  }
  rep.unresolved = !rep.nontrivial_certified;
  return rep;
}

std::uint64_t meeting_count(const AttenuatedSpace& space, const VertexSet& l, std::uint64_t w) {
  return l.size() - disjoint_in(space, l, w);
}

std::uint64_t common_disjoint_count(const AttenuatedSpace& space, const VertexSet& l, std::uint64_t a,
                                    std::uint64_t b) {
  std::uint64_t c = 0;
  for (auto u : l.indices())
    if (space.disjoint(a, u) && space.disjoint(b, u)) ++c;
  return c;
}

PairCensus pair_census(const AttenuatedSpace& space, const VertexSet& l, std::uint64_t pi, std::uint64_t pi_prime) {
  const auto& sp = space.params();
  const Rational xr = cl_parameter(l);
  if (!is_integer(xr)) fail(ErrorCode::PreconditionViolated, "pair_census needs an integral parameter");
  const auto x = static_cast<std::int64_t>(to_u64(numerator(xr), "x"));

  PairCensus c;
  c.pi = pi;
  c.pi_prime = pi_prime;
  c.s0_meet = VertexSet(sp, sigma_spread(space, pi, pi_prime)).intersection_size(l);
  c.d2 = common_disjoint_count(space, l, pi, pi_prime);
  for (auto u : l.indices())
    if (!space.disjoint(pi, u) && !space.disjoint(pi_prime, u)) ++c.s2;
  c.d2_formula = d2_formula(sp, x, c.s0_meet);
  c.s2_formula = s2_formula(sp, x, c.s0_meet);
  c.d2_prime = s_bounds(sp, x).d2_prime;
  return c;
}

}  // namespace clforms
