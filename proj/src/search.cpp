#include "bookfold/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace bookfold {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
  const Instance& inst;
  const SearchConfig& cfg;
  const std::function<bool(const Ordering&)>& visit;

  std::size_t n;
  std::vector<std::vector<std::size_t>> out_edges;  // by src, edge indices
  std::vector<std::vector<std::size_t>> in_edges;   // by dst
  std::vector<std::size_t> indeg;
  std::vector<std::size_t> rank;  // SIZE_MAX while unplaced
  std::vector<std::size_t> prefix;
  std::vector<std::vector<std::size_t>> open;    // per page, open edge indices
  std::vector<std::vector<std::size_t>> closed;  // per page, closed edge indices

  SearchStats stats;
  bool budget_hit = false;
  bool stopped_by_visitor = false;
  Clock::time_point deadline;
  bool has_deadline = false;

  Searcher(const Instance& i, const SearchConfig& c,
           const std::function<bool(const Ordering&)>& v)
      : inst(i), cfg(c), visit(v), n(i.vertex_count()) {
    out_edges.resize(n);
    in_edges.resize(n);
    indeg.assign(n, 0);
    rank.assign(n, SIZE_MAX);
    const std::size_t pages = static_cast<std::size_t>(inst.page_count()) + 1;
    open.resize(pages);
    closed.resize(pages);
    for (std::size_t ei = 0; ei < inst.edges().size(); ++ei) {
      const Edge& e = inst.edges()[ei];
      out_edges[e.src].push_back(ei);
      in_edges[e.dst].push_back(ei);
      ++indeg[e.dst];
    }
    if (cfg.time_budget_seconds) {
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(
                                        *cfg.time_budget_seconds));
      has_deadline = true;
    }
  }

  bool over_budget() {
    if (cfg.node_budget && stats.nodes >= *cfg.node_budget) return true;
    if (has_deadline && (stats.nodes & 1023) == 0 && Clock::now() >= deadline)
      return true;
    return false;
  }

  // True iff the prefix stays viable after v's incoming edges closed. With
  // the look-ahead on, closed edges can never come to cross each other, so
  // only open edges need scanning; with it off, each closing edge is checked
  // against the closed set instead, which delays the refusal until the
  // crossing materializes.
  bool closing_checks_pass(std::size_t v) {
    for (std::size_t ei : in_edges[v]) {
      const Edge& e = inst.edges()[ei];
      const std::size_t p = static_cast<std::size_t>(e.page.value);
      const std::size_t ru = rank[e.src];
      if (cfg.lookahead_prune) {
        for (std::size_t oi : open[p]) {
          const Edge& f = inst.edges()[oi];
          if (rank[f.src] > ru) return false;
        }
      } else {
        for (std::size_t ci : closed[p]) {
          const Edge& f = inst.edges()[ci];
          if (rank[f.src] < ru && ru < rank[f.dst]) return false;
        }
      }
    }
    return true;
  }

  // Depth-first over viable prefixes. Returns false to unwind the whole
  // search (budget hit or visitor stop).
  bool descend(std::size_t depth) {
    if (depth == n) {
      auto ord = Ordering::from_sequence(prefix);
      if (!visit(*ord)) {
        stopped_by_visitor = true;
        return false;
      }
      return true;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (rank[v] != SIZE_MAX || indeg[v] != 0) continue;
      ++stats.nodes;
      stats.max_depth = std::max(stats.max_depth, depth + 1);
      if (over_budget()) {
        budget_hit = true;
        return false;
      }

      rank[v] = depth;
      prefix.push_back(v);
      // Close incoming edges before the viability scan so that edges ending
      // at v never count as open against each other.
      for (std::size_t ei : in_edges[v]) {
        const std::size_t p = static_cast<std::size_t>(inst.edges()[ei].page.value);
        auto& vec = open[p];
        vec.erase(std::find(vec.begin(), vec.end(), ei));
      }
      bool viable = closing_checks_pass(v);
      if (viable) {
        for (std::size_t ei : in_edges[v]) {
          closed[static_cast<std::size_t>(inst.edges()[ei].page.value)].push_back(ei);
        }
        for (std::size_t ei : out_edges[v]) {
          const Edge& e = inst.edges()[ei];
          open[static_cast<std::size_t>(e.page.value)].push_back(ei);
          --indeg[e.dst];
        }
        bool keep_going = descend(depth + 1);
        for (std::size_t ei : out_edges[v]) {
          const Edge& e = inst.edges()[ei];
          auto& vec = open[static_cast<std::size_t>(e.page.value)];
          vec.erase(std::find(vec.begin(), vec.end(), ei));
          ++indeg[e.dst];
        }
        for (std::size_t ei : in_edges[v]) {
          closed[static_cast<std::size_t>(inst.edges()[ei].page.value)].pop_back();
        }
        if (!keep_going) {
          undo_placement(v);
          return false;
        }
      }
      undo_placement(v);
    }
    return true;
  }

  void undo_placement(std::size_t v) {
    for (std::size_t ei : in_edges[v]) {
      open[static_cast<std::size_t>(inst.edges()[ei].page.value)].push_back(ei);
    }
    rank[v] = SIZE_MAX;
    prefix.pop_back();
  }

  bool run() {
    // Sources start open-side bookkeeping: an edge is open once its source
    // is placed, so nothing is open at depth 0.
    return descend(0) && !budget_hit;
  }
};

}  // namespace

bool for_each_valid_ordering(const Instance& inst, const SearchConfig& cfg,
                             const std::function<bool(const Ordering&)>& visit,
                             SearchStats* stats) {
  Searcher searcher(inst, cfg, visit);
  bool complete = searcher.run() && !searcher.stopped_by_visitor;
  if (stats) *stats = searcher.stats;
  return complete && !searcher.budget_hit;
}

SearchOutcome solve_exact(const Instance& inst, const SearchConfig& cfg) {
  SearchOutcome outcome;
  std::optional<Ordering> found;
  bool complete = for_each_valid_ordering(
      inst, cfg,
      [&](const Ordering& ord) {
        found = ord;
        return false;  // first hit is the lexicographic minimum
      },
      &outcome.stats);
  if (found) {
    outcome.verdict = SearchVerdict::Feasible;
    outcome.witness = std::move(found);
  } else {
    outcome.verdict = complete ? SearchVerdict::Infeasible
                               : SearchVerdict::BudgetExhausted;
  }
  return outcome;
}

EnumerationResult enumerate_valid_orderings(const Instance& inst,
                                            const SearchConfig& cfg) {
  EnumerationResult result;
  const std::size_t limit =
      cfg.collect_limit.value_or(std::numeric_limits<std::size_t>::max());
  bool complete = for_each_valid_ordering(
      inst, cfg,
      [&](const Ordering& ord) {
        result.orderings.push_back(ord);
        return result.orderings.size() < limit;
      },
      &result.stats);
  // Hitting the collect limit on the last ordering still means we stopped
  // the walk early, so completeness is not claimed.
  result.complete = complete;
  return result;
}

}  // namespace bookfold
