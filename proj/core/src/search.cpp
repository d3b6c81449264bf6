#include "clforms/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "clforms/counting.hpp"
#include "clforms/error.hpp"
#include "clforms/exact.hpp"
#include "clforms/graph.hpp"

namespace clforms {

const char* to_string(SearchMethod m) noexcept {
  switch (m) {
    case SearchMethod::FullPowerSet:
      return "full_power_set";
    case SearchMethod::FixedXSubsets:
      return "fixed_x_subsets";
    case SearchMethod::KernelConstrained:
      return "kernel_constrained";
  }
  return "?";
}

SearchMethod parse_search_method(const std::string& s) {
  for (auto m : {SearchMethod::FullPowerSet, SearchMethod::FixedXSubsets, SearchMethod::KernelConstrained})
    if (s == to_string(m)) return m;
  fail(ErrorCode::BadParams, "unknown search method '" + s + "'");
}

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t to_i64(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::int32_t>::max()) || v < BigInt(std::numeric_limits<std::int32_t>::min()))
    fail(ErrorCode::CapExceeded, "kernel coefficient " + to_decimal(v) + " too large for the search");
  return static_cast<std::int64_t>(v);
}

std::vector<Row> kernel_rows(const std::vector<IntVector>& basis) {
  std::vector<Row> out;
  for (const auto& v : basis) {
    Row r;
    for (const auto& e : v) r.push_back(to_i64(e));
    out.push_back(std::move(r));
  }
  return out;
}

// Runs fn(task) for task in [0, count) on `threads` workers.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= count) return;
      try {
        fn(t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
        return;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

std::uint64_t block_size(const SpaceParams& sp) {
  return to_u64(ipow(sp.q, std::uint64_t{sp.n - 1} * sp.l), "q^{(n-1)l}");
}

// ---- kernel-constrained depth-first search ----
//
// The kernel basis is brought to echelon form from the right, so row j has
// its last nonzero entry in a column c_j where every other row vanishes.
// When the search reaches c_j the bit there is forced by equation j.

struct KernelSystem {
  std::size_t length = 0;
  std::vector<Row> rows;
  std::vector<long> pivot_row;             // column -> row closed there, or -1
  std::vector<std::vector<std::int64_t>> pos_suffix, neg_suffix;  // per row, per column
};

KernelSystem make_system(const std::vector<IntVector>& basis, std::size_t length) {
  KernelSystem ks;
  ks.length = length;
  ks.pivot_row.assign(length, -1);
  if (basis.empty()) return ks;
  ExactMatrix rev(basis.size(), length);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < length; ++c) rev(r, length - 1 - c) = basis[r][c];
  const IntegerReduction red = fraction_free_reduce(rev);
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    IntVector v(length);
    BigInt g = 0;
    for (std::size_t c = 0; c < length; ++c) {
      v[c] = red.form(r, length - 1 - c);
      g = boost::multiprecision::gcd(g, v[c]);
    }
    for (auto& e : v) e /= g;
    Row row;
    for (const auto& e : v) row.push_back(to_i64(e));
    ks.pivot_row[length - 1 - red.pivots[r]] = static_cast<long>(ks.rows.size());
    ks.rows.push_back(std::move(row));
  }
  for (const auto& row : ks.rows) {
    std::vector<std::int64_t> pos(length + 1, 0), neg(length + 1, 0);
    for (std::size_t c = length; c-- > 0;) {
      pos[c] = pos[c + 1] + std::max<std::int64_t>(row[c], 0);
      neg[c] = neg[c + 1] + std::min<std::int64_t>(row[c], 0);
    }
    ks.pos_suffix.push_back(std::move(pos));
    ks.neg_suffix.push_back(std::move(neg));
  }
  return ks;
}

struct DfsState {
  std::vector<std::uint8_t> bits;
  std::vector<std::int64_t> sums;
  std::uint64_t count = 0;
  std::size_t pos = 0;
};

struct Dfs {
  const KernelSystem& ks;
  std::optional<std::uint64_t> target;  // exact size
  std::uint64_t node_cap;
  std::atomic<std::uint64_t>& nodes;
  std::size_t stop_at;  // positions at which to emit states instead of recursing
  std::vector<DfsState>* emitted = nullptr;
  std::vector<std::vector<std::uint8_t>>* found = nullptr;

  bool feasible(const DfsState& s) const {
    const std::size_t i = s.pos;
    for (std::size_t j = 0; j < ks.rows.size(); ++j) {
      const std::int64_t need = -s.sums[j];
      if (need < ks.neg_suffix[j][i] || need > ks.pos_suffix[j][i]) return false;
    }
    if (target) {
      if (s.count > *target || s.count + (ks.length - i) < *target) return false;
    }
    return true;
  }

  void assign(DfsState& s, std::uint8_t b) const {
    s.bits[s.pos] = b;
    if (b) {
      for (std::size_t j = 0; j < ks.rows.size(); ++j) s.sums[j] += ks.rows[j][s.pos];
      ++s.count;
    }
    ++s.pos;
  }

  void run(DfsState& s) {
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > node_cap)
      fail(ErrorCode::CapExceeded, "kernel-constrained search exceeded " + std::to_string(node_cap) + " nodes");
    if (!feasible(s)) return;
    if (s.pos == ks.length) {
      found->push_back(s.bits);
      return;
    }
    if (s.pos == stop_at && emitted) {
      emitted->push_back(s);
      return;
    }
    const long j = ks.pivot_row[s.pos];
    if (j >= 0) {
      const std::int64_t sum = s.sums[j], coef = ks.rows[j][s.pos];
      std::uint8_t b;
      if (sum == 0) {
        b = 0;
      } else if (sum + coef == 0) {
        b = 1;
      } else {
        return;
      }
      DfsState next = s;
      assign(next, b);
      run(next);
      return;
    }
    for (std::uint8_t b : {std::uint8_t{0}, std::uint8_t{1}}) {
      DfsState next = s;
      assign(next, b);
      run(next);
    }
  }
};

std::vector<std::vector<std::uint8_t>> kernel_constrained(const ImageTester& image, std::size_t length,
                                                          std::optional<std::uint64_t> target, unsigned threads,
                                                          std::uint64_t node_cap, std::uint64_t& nodes_out) {
  const KernelSystem ks = make_system(image.kernel(), length);
  std::atomic<std::uint64_t> nodes{0};
  // Split after enough free positions to feed the workers.
  std::size_t stop_at = 0, free_seen = 0;
  while (stop_at < length && free_seen < 8) {
    if (ks.pivot_row[stop_at] < 0) ++free_seen;
    ++stop_at;
  }
  std::vector<DfsState> tasks;
  std::vector<std::vector<std::uint8_t>> prefix_found;
  DfsState root{std::vector<std::uint8_t>(length, 0), std::vector<std::int64_t>(ks.rows.size(), 0), 0, 0};
  Dfs splitter{ks, target, node_cap, nodes, stop_at, &tasks, &prefix_found};
  splitter.run(root);

  std::vector<std::vector<std::vector<std::uint8_t>>> per_task(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t t) {
    Dfs d{ks, target, node_cap, nodes, length + 1, nullptr, &per_task[t]};
    DfsState s = tasks[t];
    // The emitted state was already counted and checked by the splitter.
    nodes.fetch_sub(1, std::memory_order_relaxed);
    d.run(s);
  });
  std::vector<std::vector<std::uint8_t>> out = std::move(prefix_found);
  for (auto& v : per_task)
    for (auto& bits : v) out.push_back(std::move(bits));
  nodes_out = nodes.load();
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

SearchReport exhaustive(const VerdictEngine& engine, const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const AttenuatedSpace& space = engine.space();
  const auto& sp = space.params();
  const std::uint64_t v = space.vertex_count();
  const std::uint64_t block = block_size(sp);
  const std::uint64_t ql = to_u64(ipow(sp.q, sp.l), "q^l");

  SearchReport rep;
  rep.sp = sp;
  rep.method = opts.method;
  rep.x = opts.x;
  std::optional<std::uint64_t> target;
  if (opts.x) {
    if (*opts.x < 0 || static_cast<std::uint64_t>(*opts.x) > ql)
      fail(ErrorCode::BadParams, "x must lie in [0, q^l]");
    target = static_cast<std::uint64_t>(*opts.x) * block;
  }

  const ImageTester& image = engine.spectral().image();
  const std::vector<Row> kernel = kernel_rows(image.kernel());
  auto orthogonal = [&](const std::vector<std::uint8_t>& bits) {
    for (const auto& k : kernel) {
      std::int64_t dot = 0;
      for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) dot += k[i];
      if (dot != 0) return false;
    }
    return true;
  };

  std::vector<std::vector<std::uint8_t>> found;
  switch (opts.method) {
    case SearchMethod::FullPowerSet: {
      if (v > 16) fail(ErrorCode::CapExceeded, "full_power_set needs q^{nl} <= 16, have " + std::to_string(v));
      const std::uint64_t total = std::uint64_t{1} << v;
      const std::size_t chunks = 64;
      std::vector<std::vector<std::vector<std::uint8_t>>> per(chunks);
      parallel_for(chunks, opts.threads, [&](std::size_t c) {
        std::vector<std::uint8_t> bits(v);
        for (std::uint64_t mask = c * total / chunks; mask < (c + 1) * total / chunks; ++mask) {
          if (target && static_cast<std::uint64_t>(std::popcount(mask)) != *target) continue;
          for (std::uint64_t i = 0; i < v; ++i) bits[i] = (mask >> i) & 1U;
          if (orthogonal(bits)) per[c].push_back(bits);
        }
      });
      for (auto& p : per)
        for (auto& b : p) found.push_back(std::move(b));
      rep.nodes = total;
      break;
    }
    case SearchMethod::FixedXSubsets: {
      if (!target) fail(ErrorCode::BadParams, "fixed_x_subsets needs x");
      const BigInt subsets = binomial(v, *target);
      if (subsets > BigInt(opts.node_cap))
        fail(ErrorCode::CapExceeded, "fixed_x_subsets would visit " + to_decimal(subsets) + " subsets, cap is " +
                                         std::to_string(opts.node_cap));
      const std::size_t t = *target;
      std::vector<std::vector<std::vector<std::uint8_t>>> per(v + 1);
      // Task f enumerates the subsets whose smallest member is f (task v: the empty set).
      parallel_for(t == 0 ? 1 : v, opts.threads, [&](std::size_t f) {
        std::vector<std::uint8_t> bits(v, 0);
        if (t == 0) {
          if (orthogonal(bits)) per[v].push_back(bits);
          return;
        }
        std::vector<std::size_t> idx(t);
        idx[0] = f;
        if (f + t > v) return;
        for (std::size_t i = 1; i < t; ++i) idx[i] = f + i;
        for (;;) {
          std::fill(bits.begin(), bits.end(), 0);
          for (auto i : idx) bits[i] = 1;
          if (orthogonal(bits)) per[f].push_back(bits);
          std::size_t k = t;
          while (k > 1 && idx[k - 1] == v - t + k - 1) --k;
          if (k == 1) break;
          ++idx[k - 1];
          for (std::size_t i = k; i < t; ++i) idx[i] = idx[i - 1] + 1;
        }
      });
      for (auto& p : per)
        for (auto& b : p) found.push_back(std::move(b));
      rep.nodes = static_cast<std::uint64_t>(subsets);
      break;
    }
    case SearchMethod::KernelConstrained:
      found = kernel_constrained(image, v, target, opts.threads, opts.node_cap, rep.nodes);
      break;
  }

  for (const auto& bits : found) {
    VertexSet s(sp);
    for (std::uint64_t i = 0; i < v; ++i)
      if (bits[i]) s.insert(i);
    if (engine.disjoint_count_violation(s)) ++rep.reverify_failures;
    const Rational x = cl_parameter(s);
    if (!is_integer(x)) {
      ++rep.reverify_failures;
    } else {
      ++rep.by_parameter[static_cast<std::int64_t>(to_u64(numerator(x), "x"))];
    }
    rep.sets.push_back(std::move(s));
  }
  std::sort(rep.sets.begin(), rep.sets.end(),
            [](const VertexSet& a, const VertexSet& b) { return canonical_compare(a, b) < 0; });
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::uint64_t max_disjoint_in(const AttenuatedSpace& space, const VertexSet& l) {
  const auto members = l.indices();
  if (members.size() > 4096) fail(ErrorCode::CapExceeded, "max_disjoint_in needs |L| <= 4096");
  Graph g(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (space.disjoint(members[i], members[j])) g.add_edge(i, j);
  return max_clique(g).size();
}

std::vector<std::uint64_t> max_intersecting_family(const AttenuatedSpace& space) {
  const std::uint64_t v = space.vertex_count();
  if (v > 256) fail(ErrorCode::CapExceeded, "ekr_check needs q^{nl} <= 256, have " + std::to_string(v));
  Graph g(v);
  for (std::uint64_t a = 0; a < v; ++a)
    for (std::uint64_t b = a + 1; b < v; ++b)
      if (!space.disjoint(a, b)) g.add_edge(a, b);
  const auto clique = max_clique(g);
  return {clique.begin(), clique.end()};
}

std::uint64_t ekr_check(const AttenuatedSpace& space) { return max_intersecting_family(space).size(); }

DefinitionCensus definition_census(const VerdictEngine& engine, unsigned threads) {
  const AttenuatedSpace& space = engine.space();
  const auto& sp = space.params();
  const std::uint64_t v = space.vertex_count();
  if (v > 16) fail(ErrorCode::CapExceeded, "definition census needs q^{nl} <= 16");

  const std::int64_t block = static_cast<std::int64_t>(block_size(sp));
  const std::int64_t ql = static_cast<std::int64_t>(to_u64(ipow(sp.q, sp.l), "q^l"));
  const std::int64_t big = block * ql;  // q^{nl}
  const std::int64_t delta_v = static_cast<std::int64_t>(to_u64(delta(sp), "Delta"));
  const std::int64_t lambda1 = static_cast<std::int64_t>(engine.spectral().lambda1());
  const std::vector<Row> kernel = kernel_rows(engine.spectral().image().kernel());

  std::vector<std::uint32_t> disj(v, 0);
  for (std::uint64_t a = 0; a < v; ++a)
    for (std::uint64_t b = 0; b < v; ++b)
      if (space.disjoint(a, b)) disj[a] |= std::uint32_t{1} << b;

  struct Partial {
    std::uint64_t pk = 0, pd = 0, pe = 0, dis = 0;
    std::vector<std::uint64_t> examples, cl;
  };
  const std::uint64_t total = std::uint64_t{1} << v;
  const std::size_t chunks = 256;
  std::vector<Partial> parts(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    Partial& p = parts[c];
    for (std::uint64_t mask = c * total / chunks; mask < (c + 1) * total / chunks; ++mask) {
      const auto m = static_cast<std::uint32_t>(mask);
      const std::int64_t size = std::popcount(m);

      bool kernel_ok = true;
      for (const auto& k : kernel) {
        std::int64_t dot = 0;
        for (std::uint64_t i = 0; i < v; ++i)
          if ((m >> i) & 1U) dot += k[i];
        if (dot != 0) {
          kernel_ok = false;
          break;
        }
      }

      // Disjoint counts scaled by q^{(n-1)l}; eigenvector test with v' = q^{nl} chi - |L| j.
      bool disjoint_ok = true, eigen_ok = true;
      for (std::uint64_t w = 0; w < v; ++w) {
        const std::int64_t in = (m >> w) & 1U;
        const std::int64_t hits = std::popcount(m & disj[w]);
        if (block * hits != (size - in * block) * delta_v) disjoint_ok = false;
        const std::int64_t deg = std::popcount(disj[w]);
        const std::int64_t kv = big * hits - size * deg;
        if (kv != lambda1 * (big * in - size)) eigen_ok = false;
      }

      p.pk += kernel_ok;
      p.pd += disjoint_ok;
      p.pe += eigen_ok;
      if (kernel_ok != disjoint_ok || kernel_ok != eigen_ok) {
        ++p.dis;
        if (p.examples.size() < 8) p.examples.push_back(mask);
      }
      if (kernel_ok && disjoint_ok && eigen_ok) p.cl.push_back(mask);
    }
  });

  DefinitionCensus out;
  out.sp = sp;
  out.subsets = total;
  for (auto& p : parts) {
    out.pass_kernel += p.pk;
    out.pass_disjoint += p.pd;
    out.pass_eigen += p.pe;
    out.disagreements += p.dis;
    for (auto e : p.examples)
      if (out.disagreement_examples.size() < 8) out.disagreement_examples.push_back(e);
    out.cl_masks.insert(out.cl_masks.end(), p.cl.begin(), p.cl.end());
  }

  std::vector<std::uint32_t> spread_masks;
  for (const auto& s : engine.spreads()) {
    std::uint32_t m = 0;
    for (auto i : s.members) m |= std::uint32_t{1} << i;
    spread_masks.push_back(m);
  }
  out.spreads_checked = spread_masks.size();
  const std::uint64_t full = total - 1;
  for (auto mask : out.cl_masks) {
    const std::int64_t size = std::popcount(mask);
    if (size % block != 0 || size / block > ql) {
      out.integral_parameters = false;
      continue;
    }
    const std::int64_t x = size / block;
    ++out.by_parameter[x];
    if (!std::binary_search(out.cl_masks.begin(), out.cl_masks.end(), full ^ mask)) out.complement_closed = false;
    for (auto sm : spread_masks)
      if (std::popcount(static_cast<std::uint32_t>(mask) & sm) != x) out.spreads_ok = false;
  }
  return out;
}

}  // namespace clforms
