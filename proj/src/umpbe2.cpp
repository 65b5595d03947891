#include "bookfold/umpbe2.hpp"

#include <algorithm>
#include <array>

namespace bookfold {

DecomposeResult decompose(const Instance& inst) {
  DecomposeResult result;
  if (inst.page_count() != 2) {
    result.status = DecomposeStatus::WrongPageCount;
    return result;
  }
  MatchingReport matching = is_matching_partition(inst);
  if (!matching.ok) {
    result.status = DecomposeStatus::NotMatching;
    result.offending_vertex = matching.vertex;
    result.offending_page = matching.page;
    return result;
  }

  const std::size_t n = inst.vertex_count();
  // Per-vertex arms (at most one edge per page).
  std::vector<std::array<std::size_t, 2>> arm(n, {SIZE_MAX, SIZE_MAX});
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t ei = 0; ei < inst.edges().size(); ++ei) {
    const Edge& e = inst.edges()[ei];
    for (std::size_t v : {e.src, e.dst}) {
      arm[v][degree[v]++] = ei;
    }
  }

  auto other_end = [&](std::size_t ei, std::size_t v) {
    const Edge& e = inst.edges()[ei];
    return e.src == v ? e.dst : e.src;
  };

  std::vector<char> visited(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;

    // Walk the component once to find its vertices and whether it is a cycle.
    std::vector<std::size_t> members;
    bool is_cycle = true;
    {
      std::vector<std::size_t> stack{start};
      visited[start] = 1;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        members.push_back(v);
        if (degree[v] < 2) is_cycle = false;
        for (std::size_t a = 0; a < degree[v]; ++a) {
          std::size_t w = other_end(arm[v][a], v);
          if (!visited[w]) {
            visited[w] = 1;
            stack.push_back(w);
          }
        }
      }
    }

    Component comp;
    if (members.size() == 1 && degree[members[0]] == 0) {
      comp.kind = Component::Kind::Path;
      comp.faces.push_back(members[0]);
      result.components.push_back(std::move(comp));
      continue;
    }

    std::size_t first, second_edge;
    if (is_cycle) {
      comp.kind = Component::Kind::Cycle;
      first = *std::min_element(members.begin(), members.end());
      // Head toward the lower-indexed neighbor.
      std::size_t n0 = other_end(arm[first][0], first);
      std::size_t n1 = other_end(arm[first][1], first);
      second_edge = n0 < n1 ? arm[first][0] : arm[first][1];
    } else {
      comp.kind = Component::Kind::Path;
      first = SIZE_MAX;
      for (std::size_t v : members) {
        if (degree[v] <= 1 && (first == SIZE_MAX || v < first)) first = v;
      }
      second_edge = arm[first][0];
    }

    std::size_t v = first;
    std::size_t via = second_edge;
    comp.faces.push_back(v);
    while (via != SIZE_MAX) {
      const Edge& e = inst.edges()[via];
      comp.creases.push_back({via, e.src == v, e.page});
      std::size_t w = other_end(via, v);
      if (w == first) break;  // cycle closed
      comp.faces.push_back(w);
      std::size_t cont = SIZE_MAX;
      for (std::size_t a = 0; a < degree[w]; ++a) {
        if (arm[w][a] != via) cont = arm[w][a];
      }
      v = w;
      via = cont;
    }
    result.components.push_back(std::move(comp));
  }
  return result;
}

CreasePattern to_crease_pattern(const Component& comp) {
  std::vector<Crease> creases;
  creases.reserve(comp.creases.size());
  for (const ComponentCrease& c : comp.creases) {
    bool mountain = (c.page.value == 1) == c.forward;
    creases.push_back(mountain ? Crease::Mountain : Crease::Valley);
  }
  return CreasePattern(std::move(creases), comp.kind == Component::Kind::Cycle);
}

Instance from_crease_pattern(const CreasePattern& pattern) {
  const std::size_t faces = pattern.face_count();
  Instance inst(2);
  for (std::size_t i = 0; i < faces; ++i) {
    inst.add_vertex("f" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < pattern.crease_count(); ++i) {
    std::size_t a = i;
    std::size_t b = (i + 1) % faces;
    int page = (i % 2 == 0) ? 2 : 1;
    if (effective_below(pattern, i)) {
      inst.add_edge(b, a, page);  // next face lies below: edge points up to a
    } else {
      inst.add_edge(a, b, page);
    }
  }
  return inst;
}

Umpbe2Result solve_umpbe2(const Instance& inst) {
  Umpbe2Result result;
  auto errors = check_instance(inst);
  // A directed cycle alone is not a malformed input here: in a 2-page
  // matching instance it can only be a cycle component wound consistently
  // (the bridge image of an alternating M/V single-vertex pattern), and the
  // fold decides those as infeasible.
  bool only_cycles = true;
  for (const InstanceError& e : errors) {
    if (e.kind != InstanceErrorKind::NotADag) only_cycles = false;
  }
  if (!errors.empty() && !only_cycles) {
    result.status = Umpbe2Status::MalformedInstance;
    result.instance_errors = std::move(errors);
    return result;
  }
  DecomposeResult parts = decompose(inst);
  if (parts.status == DecomposeStatus::WrongPageCount) {
    result.status = Umpbe2Status::WrongPageCount;
    return result;
  }
  if (parts.status == DecomposeStatus::NotMatching) {
    result.status = Umpbe2Status::NotMatching;
    result.offending_vertex = parts.offending_vertex;
    result.offending_page = parts.offending_page;
    return result;
  }

  std::vector<std::size_t> order;
  order.reserve(inst.vertex_count());
  for (const Component& comp : parts.components) {
    if (comp.creases.empty()) {
      order.push_back(comp.faces[0]);
      continue;
    }
    CreasePattern pattern = to_crease_pattern(comp);
    LayerOrder layers;
    if (comp.kind == Component::Kind::Cycle) {
      FoldResult fold = fold_cycle(pattern);
      if (fold.status != FoldStatus::Folded) {
        result.status = Umpbe2Status::Infeasible;
        return result;
      }
      layers = std::move(fold.layers);
    } else {
      layers = fold_path(pattern);
    }
    // Edges point from the face below to the face above when the first
    // traversal edge sits on page 2; the mirrored phase (page 1 first) folds
    // to the upside-down stack, so read it top-to-bottom.
    bool mirrored = comp.creases.front().page.value == 1;
    if (mirrored) {
      std::reverse(layers.bottom_to_top.begin(), layers.bottom_to_top.end());
    }
    for (std::size_t f : layers.bottom_to_top) {
      order.push_back(comp.faces[f]);
    }
  }
  result.status = Umpbe2Status::Feasible;
  result.ordering = Ordering::from_sequence(std::move(order));
  return result;
}

}  // namespace bookfold
