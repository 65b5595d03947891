#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bookfold/core.hpp"

namespace bookfold {

struct SearchConfig {
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget_seconds;
  std::optional<std::size_t> collect_limit;  // enumeration mode only
  // Fails a branch as soon as a closed edge traps the open endpoint of a
  // same-page edge. Sound: the crossing it predicts is unavoidable. Turning
  // it off never changes any verdict, only the node count.
  bool lookahead_prune = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::size_t max_depth = 0;
};

enum class SearchVerdict { Feasible, Infeasible, BudgetExhausted };

struct SearchOutcome {
  SearchVerdict verdict = SearchVerdict::Infeasible;
  std::optional<Ordering> witness;
  SearchStats stats;
};

// Backtracking over topological prefixes; candidates are tried in ascending
// insertion index, so the witness is the lexicographically smallest valid
// ordering and runs are deterministic. Infeasible is reported only after the
// search space is exhausted.
SearchOutcome solve_exact(const Instance& inst, const SearchConfig& cfg = {});

struct EnumerationResult {
  std::vector<Ordering> orderings;  // in lexicographic order of vertex indices
  bool complete = false;            // false when a budget or limit cut the walk
  SearchStats stats;
};

// Every valid ordering, up to collect_limit. Intended for small instances.
EnumerationResult enumerate_valid_orderings(const Instance& inst,
                                            const SearchConfig& cfg = {});

// Streaming variant; the visitor returns false to stop early. Returns true
// when the search space was fully explored.
bool for_each_valid_ordering(const Instance& inst, const SearchConfig& cfg,
                             const std::function<bool(const Ordering&)>& visit,
                             SearchStats* stats = nullptr);

}  // namespace bookfold
