#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bookfold {

struct Triple {
  std::string a, b, c;
};

// A set L of elements and a set C of ordered triples over L. A total order
// satisfies <a,b,c> when b lies strictly between a and c, in either
// direction.
struct BetweennessInstance {
  std::vector<std::string> elements;
  std::vector<Triple> triples;

  std::size_t element_count() const { return elements.size(); }
  std::size_t triple_count() const { return triples.size(); }
};

// A candidate total order phi, as a permutation of the elements.
using ElementOrdering = std::vector<std::string>;

bool eval_betweenness(const BetweennessInstance& bw,
                      std::span<const std::string> phi);

// Lexicographically first satisfying permutation under element insertion
// order, or nullopt. Exhaustive; intended for n <= ~10.
std::optional<ElementOrdering> solve_betweenness_bruteforce(
    const BetweennessInstance& bw);

}  // namespace bookfold
