#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bookfold/betweenness.hpp"
#include "bookfold/core.hpp"

namespace bookfold {

// Vertex names double as structured role labels (one role per vertex):
//   "x@<j>/<e>"              element copy e_j
//   "l@<i>" "alpha@<i>" "omega@<i>" "h@<i>"   triple gadget i (odd)
//   "x'@<i>/<e>" "x''@<i>/<e>"                prime / double-prime vertices
//   "g@<i>"                  guard vertex of the 4-page triple gadget
//   "r@<j>"                  order gadget root
//   "p@<j>/<e>/<t>"          path interior t on the path serving element e
//   "t@<j>/<q>"              order-preserving tree internal node (4-page)
//   "x*@<j>/<e>"             tree leaf (4-page)
//   "s"                      the apex vertex (3-page reduction only)
namespace roles {
std::string element(int copy, std::string_view e);
std::string prime(int i, std::string_view e);
std::string double_prime(int i, std::string_view e);
std::string path_interior(int j, std::string_view e, int t);
std::string gadget_l(int i);
std::string gadget_alpha(int i);
std::string gadget_omega(int i);
std::string gadget_h(int i);
std::string gadget_guard(int i);
std::string root(int j);
std::string tree_node(int j, int q);
std::string tree_leaf(int j, std::string_view e);
inline std::string apex() { return "s"; }
}  // namespace roles

// An instance whose vertex names are the structured roles above, plus the
// parameters needed to read element copies back out of an ordering.
struct LabeledInstance {
  Instance instance;
  std::vector<std::string> elements;
  std::size_t triple_count = 0;  // m; copies = 2m-1
  const std::vector<std::string>& labels() const { return instance.vertex_names(); }
};

// Ordered triple gadget for odd i, as a standalone 3-page fragment:
// 7 vertices, 9 edges (2 red, 4 blue, 3 green).
LabeledInstance build_triple_gadget(int i, const Triple& triple);

// Order preserving gadget for copy j. Odd j carries the ((j+1)/2)-th
// triple and has 7n+4 vertices (root, n element copies, 3 double-primed,
// 6n path interiors); even j carries none and has n+1 vertices with n red
// edges into the root.
LabeledInstance build_order_gadget(int j, const BetweennessInstance& bw,
                                   const Triple* triple);

// The full 3-page reduction: m triple gadgets, 2m-1 order gadgets, the apex
// s, and the inter-gadget edges. 8mn + 12m - n vertices. Requires m >= 1.
LabeledInstance assemble_upbe3(const BetweennessInstance& bw);

struct WitnessResult {
  bool ok = false;  // false: phi does not satisfy bw (precondition violated)
  std::vector<std::string> order;
};

// A valid ordering of assemble_upbe3(bw) built from a satisfying phi, per
// the explicit embedding: even copies in phi order at the low ranks, then s,
// then blocks 2m-1 down to 1, each triple gadget followed by its order
// gadget with the alternating paths threaded through the double-primed
// vertices.
WitnessResult witness_upbe3(const BetweennessInstance& bw,
                            std::span<const std::string> phi);

// Reads phi back from the relative order of one element copy (the first
// even copy, or copy 1 when m = 1).
ElementOrdering extract_phi(const LabeledInstance& lab, const Ordering& ord);

// The 4-page matching reduction: adapted triple gadgets whose element edges
// lead directly to the element copies, binary order-preserving trees with
// per-leaf paths of n edges, and yellow/red inter-gadget edges. Every page
// of the output is a matching.
LabeledInstance assemble_umpbe4(const BetweennessInstance& bw);

WitnessResult witness_umpbe4(const BetweennessInstance& bw,
                             std::span<const std::string> phi);

}  // namespace bookfold
