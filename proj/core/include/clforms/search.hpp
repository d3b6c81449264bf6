#pragma once

// Exhaustive enumeration of Cameron-Liebler sets at small parameters,
// maximum disjoint subfamilies and the maximum intersecting family size.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clforms/attenuated.hpp"
#include "clforms/clsets.hpp"
#include "clforms/vertex_set.hpp"

namespace clforms {

enum class SearchMethod { FullPowerSet, FixedXSubsets, KernelConstrained };

const char* to_string(SearchMethod m) noexcept;
/// "full_power_set", "fixed_x_subsets" or "kernel_constrained"; BadParams otherwise.
SearchMethod parse_search_method(const std::string& s);

struct SearchOptions {
  SearchMethod method = SearchMethod::KernelConstrained;
  std::optional<std::int64_t> x;
  unsigned threads = 1;
  std::uint64_t node_cap = 100'000'000;
};

struct SearchReport {
  SpaceParams sp;
  SearchMethod method = SearchMethod::KernelConstrained;
  std::optional<std::int64_t> x;
  std::map<std::int64_t, std::uint64_t> by_parameter;
  std::vector<VertexSet> sets;  // canonical order
  std::uint64_t nodes = 0;
  std::uint64_t reverify_failures = 0;  // found sets failing the disjointness count
  double elapsed_seconds = 0;
};

/// All CL sets (optionally with parameter x). full_power_set needs
/// q^{nl} <= 16; fixed_x_subsets needs x and at most node_cap subsets.
/// Throws CapExceeded with an estimate otherwise. The result does not
/// depend on the thread count.
SearchReport exhaustive(const VerdictEngine& engine, const SearchOptions& opts);

/// Largest set of pairwise disjoint members of L. Throws CapExceeded for |L| > 4096.
std::uint64_t max_disjoint_in(const AttenuatedSpace& space, const VertexSet& l);
/// Largest intersecting family of vertices. Throws CapExceeded unless q^{nl} <= 256.
std::uint64_t ekr_check(const AttenuatedSpace& space);
/// One maximum intersecting family, ascending.
std::vector<std::uint64_t> max_intersecting_family(const AttenuatedSpace& space);

/// Over every subset of the vertices (q^{nl} <= 16): kernel orthogonality,
/// disjoint counts and the eigenvector test, compared set by set.
struct DefinitionCensus {
  SpaceParams sp;
  std::uint64_t subsets = 0;
  std::uint64_t pass_kernel = 0;
  std::uint64_t pass_disjoint = 0;
  std::uint64_t pass_eigen = 0;
  std::uint64_t disagreements = 0;
  std::vector<std::uint64_t> disagreement_examples;  // first few masks
  std::vector<std::uint64_t> cl_masks;               // ascending; bit i = vertex i
  std::map<std::int64_t, std::uint64_t> by_parameter;
  bool integral_parameters = true;  // every CL set has integer x in [0, q^l]
  bool complement_closed = true;
  std::uint64_t spreads_checked = 0;
  bool spreads_ok = true;  // every CL set meets every sampled spread in x members

  bool ok() const noexcept {
    return disagreements == 0 && integral_parameters && complement_closed && spreads_ok;
  }
};

DefinitionCensus definition_census(const VerdictEngine& engine, unsigned threads = 1);

}  // namespace clforms
