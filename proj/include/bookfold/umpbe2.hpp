#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bookfold/core.hpp"
#include "bookfold/origami.hpp"

namespace bookfold {

// One edge of a component, in traversal order. `forward` is true when the
// instance edge points in the traversal direction.
struct ComponentCrease {
  std::size_t edge_index;
  bool forward;
  PageId page;
};

// A connected component of the undirected view of a 2-page matching
// instance: a path or a cycle whose edge pages alternate. Faces are vertex
// indices in traversal order; paths start at their lowest-index endpoint,
// cycles at their lowest-index vertex heading toward its lower neighbor.
struct Component {
  enum class Kind { Path, Cycle };
  Kind kind = Kind::Path;
  std::vector<std::size_t> faces;
  std::vector<ComponentCrease> creases;
};

enum class DecomposeStatus { Ok, NotMatching, WrongPageCount };

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::Ok;
  std::vector<Component> components;
  std::size_t offending_vertex = 0;  // NotMatching certificate
  int offending_page = 0;
};

// Splits a 2-page matching-partitioned instance into path/cycle components.
// Isolated vertices become single-face path components with no creases.
DecomposeResult decompose(const Instance& inst);

// One crease letter per component edge: mountain iff a page-1 edge runs with
// the traversal or a page-2 edge against it.
CreasePattern to_crease_pattern(const Component& comp);

// Faces become vertices f1..fn; crease i joins f_{i+1} and f_{i+2} on page 2
// for even i, page 1 for odd i, directed from the effectively-lower face to
// the upper one. The result is matching-partitioned with k = 2.
Instance from_crease_pattern(const CreasePattern& pattern);

enum class Umpbe2Status {
  Feasible,
  Infeasible,
  NotMatching,
  WrongPageCount,
  MalformedInstance,
};

struct Umpbe2Result {
  Umpbe2Status status = Umpbe2Status::Infeasible;
  std::optional<Ordering> ordering;
  std::size_t offending_vertex = 0;
  int offending_page = 0;
  std::vector<InstanceError> instance_errors;
};

// The linear-time UMPBE-2 decision: decompose, fold each component, and
// concatenate per-component layer orders (bottom face first) in
// decomposition order.
Umpbe2Result solve_umpbe2(const Instance& inst);

}  // namespace bookfold
