#pragma once

// Exhaustive backtracking for small signed group weighing matrices and
// signed group orthogonal designs.
//
// Normalization: columns are permuted and right-scaled so that row 0 reads
// (x_1 ... x_1, x_2 ... x_2, ..., 0 ... 0); every later row is left-scaled
// so that its first nonzero entry has coefficient 1, and rows 1..n-1 are
// taken in strictly increasing candidate order.  Every row of an SOD of type
// (u_1, ..., u_k) holds exactly u_i entries in x_i (compare the diagonal of
// X X*), so candidates are generated with those multiplicities.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sodforge/design.hpp"

namespace sodforge {

struct SearchOptions {
  std::uint64_t node_budget = 0;  // 0 = default_search_budget()
  unsigned jobs = 1;
  /// Required for groups with more than one generator.
  bool allow_large_groups = false;
  std::size_t max_candidates = 40000;
};

struct SearchReport {
  std::string kind;  // "sw", "sh" or "sod"
  std::size_t n = 0;
  std::vector<std::int64_t> type;
  std::string group;
  bool found = false;
  std::optional<DesignMatrix> witness;  // verified before it is reported
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
  double elapsed_seconds = 0;
  std::string normalization;
};

/// SODFORGE_BUDGET if set, else 10^10.
std::uint64_t default_search_budget();

SearchReport search_sod(std::size_t n, const std::vector<std::int64_t>& type, const GroupPresentation& group,
                        const SearchOptions& options = {});
/// SW(n, w, S): an SOD(n; w) in one variable.
SearchReport search_sw(std::size_t n, std::size_t w, const GroupPresentation& group, const SearchOptions& options = {});
/// Full SH(n, S), i.e. SW(n, n, S).
SearchReport search_full_sh(std::size_t n, const GroupPresentation& group, const SearchOptions& options = {});

/// {result, kind, n, type, group, nodes, candidates, elapsed, normalization, scope[, witness]}.
std::string report_json(const SearchReport& report, bool include_elapsed = true);

}  // namespace sodforge
