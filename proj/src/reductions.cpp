#include "bookfold/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

namespace bookfold {

namespace roles {

std::string element(int copy, std::string_view e) {
  return "x@" + std::to_string(copy) + "/" + std::string(e);
}
std::string prime(int i, std::string_view e) {
  return "x'@" + std::to_string(i) + "/" + std::string(e);
}
std::string double_prime(int i, std::string_view e) {
  return "x''@" + std::to_string(i) + "/" + std::string(e);
}
std::string path_interior(int j, std::string_view e, int t) {
  return "p@" + std::to_string(j) + "/" + std::string(e) + "/" + std::to_string(t);
}
std::string gadget_l(int i) { return "l@" + std::to_string(i); }
std::string gadget_alpha(int i) { return "alpha@" + std::to_string(i); }
std::string gadget_omega(int i) { return "omega@" + std::to_string(i); }
std::string gadget_h(int i) { return "h@" + std::to_string(i); }
std::string gadget_guard(int i) { return "g@" + std::to_string(i); }
std::string root(int j) { return "r@" + std::to_string(j); }
std::string tree_node(int j, int q) {
  return "t@" + std::to_string(j) + "/" + std::to_string(q);
}
std::string tree_leaf(int j, std::string_view e) {
  return "x*@" + std::to_string(j) + "/" + std::string(e);
}

}  // namespace roles

namespace {

constexpr int kR = 1, kB = 2, kG = 3, kY = 4;

void check_bw(const BetweennessInstance& bw) {
  if (bw.triples.empty()) {
    throw std::invalid_argument("reduction needs at least one triple");
  }
  if (bw.elements.size() < 3) {
    throw std::invalid_argument("reduction needs at least three elements");
  }
  std::unordered_map<std::string, int> seen;
  for (const auto& e : bw.elements) {
    if (++seen[e] > 1) throw std::invalid_argument("duplicate element " + e);
  }
  for (const Triple& t : bw.triples) {
    if (!seen.count(t.a) || !seen.count(t.b) || !seen.count(t.c)) {
      throw std::invalid_argument("triple names unknown element");
    }
    if (t.a == t.b || t.b == t.c || t.a == t.c) {
      throw std::invalid_argument("triple entries must be pairwise distinct");
    }
  }
}

void add_triple_gadget_vertices(Instance& inst, int i, const Triple& t) {
  inst.add_vertex(roles::gadget_l(i));
  inst.add_vertex(roles::gadget_alpha(i));
  inst.add_vertex(roles::gadget_omega(i));
  inst.add_vertex(roles::prime(i, t.a));
  inst.add_vertex(roles::prime(i, t.b));
  inst.add_vertex(roles::prime(i, t.c));
  inst.add_vertex(roles::gadget_h(i));
}

void add_triple_gadget_edges(Instance& inst, int i, const Triple& t) {
  const std::string l = roles::gadget_l(i);
  const std::string al = roles::gadget_alpha(i);
  const std::string om = roles::gadget_omega(i);
  const std::string h = roles::gadget_h(i);
  inst.add_edge(l, al, kR);
  inst.add_edge(l, om, kR);
  inst.add_edge(al, roles::prime(i, t.a), kB);
  inst.add_edge(al, roles::prime(i, t.b), kB);
  inst.add_edge(om, roles::prime(i, t.b), kB);
  inst.add_edge(om, roles::prime(i, t.c), kB);
  inst.add_edge(roles::prime(i, t.a), h, kG);
  inst.add_edge(roles::prime(i, t.b), h, kG);
  inst.add_edge(roles::prime(i, t.c), h, kG);
}

bool in_triple(const Triple& t, const std::string& e) {
  return e == t.a || e == t.b || e == t.c;
}

// Odd order gadget: root, per element six path interiors, the double-primed
// vertices for the carried triple, and the element copies. Paths run
// red-green alternating, starting and ending red; triple elements are
// reached through their double-primed vertex plus a blue edge.
void add_order_gadget_upbe3(Instance& inst, int j,
                            const BetweennessInstance& bw, const Triple* t) {
  if (t == nullptr) {
    for (const auto& e : bw.elements) inst.add_vertex(roles::element(j, e));
    inst.add_vertex(roles::root(j));
    for (const auto& e : bw.elements) {
      inst.add_edge(roles::element(j, e), roles::root(j), kR);
    }
    return;
  }
  inst.add_vertex(roles::root(j));
  for (const auto& e : bw.elements) {
    for (int step = 1; step <= 6; ++step) {
      inst.add_vertex(roles::path_interior(j, e, step));
    }
    if (in_triple(*t, e)) inst.add_vertex(roles::double_prime(j, e));
    inst.add_vertex(roles::element(j, e));
  }
  for (const auto& e : bw.elements) {
    const std::string target =
        in_triple(*t, e) ? roles::double_prime(j, e) : roles::element(j, e);
    for (int step = 1; step <= 7; ++step) {
      std::string src =
          step == 1 ? roles::root(j) : roles::path_interior(j, e, step - 1);
      std::string dst = step == 7 ? target : roles::path_interior(j, e, step);
      inst.add_edge(src, dst, step % 2 == 1 ? kR : kG);
    }
  }
  for (const auto& e : bw.elements) {
    if (in_triple(*t, e)) {
      inst.add_edge(roles::double_prime(j, e), roles::element(j, e), kB);
    }
  }
}

}  // namespace

LabeledInstance build_triple_gadget(int i, const Triple& triple) {
  LabeledInstance lab;
  lab.instance = Instance(3);
  lab.triple_count = 1;
  add_triple_gadget_vertices(lab.instance, i, triple);
  add_triple_gadget_edges(lab.instance, i, triple);
  return lab;
}

LabeledInstance build_order_gadget(int j, const BetweennessInstance& bw,
                                   const Triple* triple) {
  if (j % 2 == 1 && triple == nullptr) {
    throw std::invalid_argument("odd order gadgets carry a triple");
  }
  if (j % 2 == 0 && triple != nullptr) {
    throw std::invalid_argument("even order gadgets carry no triple");
  }
  LabeledInstance lab;
  lab.instance = Instance(3);
  lab.elements = bw.elements;
  add_order_gadget_upbe3(lab.instance, j, bw, triple);
  return lab;
}

LabeledInstance assemble_upbe3(const BetweennessInstance& bw) {
  check_bw(bw);
  const int m = static_cast<int>(bw.triples.size());
  const int copies = 2 * m - 1;

  LabeledInstance lab;
  lab.instance = Instance(3);
  lab.elements = bw.elements;
  lab.triple_count = static_cast<std::size_t>(m);
  Instance& inst = lab.instance;

  for (int j = 1; j <= copies; ++j) {
    if (j % 2 == 1) {
      const Triple& t = bw.triples[static_cast<std::size_t>((j - 1) / 2)];
      add_triple_gadget_vertices(inst, j, t);
      add_triple_gadget_edges(inst, j, t);
      add_order_gadget_upbe3(inst, j, bw, &t);
    } else {
      add_order_gadget_upbe3(inst, j, bw, nullptr);
    }
  }
  inst.add_vertex(roles::apex());

  // Inter-gadget wiring (the assembly edge list).
  for (int i = 1; i <= copies; i += 2) {
    const Triple& t = bw.triples[static_cast<std::size_t>((i - 1) / 2)];
    for (const std::string* e : {&t.a, &t.b, &t.c}) {
      inst.add_edge(roles::prime(i, *e), roles::double_prime(i, *e), kR);
    }
    inst.add_edge(roles::gadget_h(i), roles::root(i), kR);
  }
  for (int j = 2; j <= copies - 1; j += 2) {
    inst.add_edge(roles::root(j), roles::gadget_l(j - 1), kR);
    inst.add_edge(roles::root(j), roles::gadget_l(j + 1), kR);
    for (const auto& e : bw.elements) {
      inst.add_edge(roles::element(j, e), roles::element(j - 1, e), kB);
      inst.add_edge(roles::element(j, e), roles::element(j + 1, e), kG);
    }
  }
  for (const auto& e : bw.elements) {
    inst.add_edge(roles::apex(), roles::element(copies, e), kB);
  }
  if (m >= 2) {
    // The red (r_{2m-2}, l_{2m-1}) edge is already present: it is the
    // j = 2m-2 case of the (r_j, l_{j+1}) family above.
    inst.add_edge(roles::root(copies - 1), roles::apex(), kB);
  }
  inst.add_edge(roles::apex(), roles::gadget_l(copies), kB);
  return lab;
}

namespace {

// The threaded embedding of one odd block (triple gadget followed by its
// order gadget). Paths toggle between red and green exactly when crossing a
// double-primed vertex or a triple element copy; in-flight paths reverse
// their nesting order at every toggle gap, and a path leaving the transit
// dumps its remaining interiors right before its target.
void emit_odd_block_upbe3(int i, const Triple& t,
                          const std::vector<std::string>& layout,
                          std::vector<std::string>& out) {
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t q = 0; q < layout.size(); ++q) pos[layout[q]] = q;

  std::vector<std::string> ys{t.a, t.b, t.c};
  std::sort(ys.begin(), ys.end(),
            [&](const std::string& x, const std::string& y) { return pos[x] < pos[y]; });
  const bool ascending = pos[t.a] < pos[t.c];  // layout restriction is (a,b,c)

  out.push_back(roles::gadget_l(i));
  if (ascending) {
    out.push_back(roles::gadget_alpha(i));
    out.push_back(roles::gadget_omega(i));
  } else {
    out.push_back(roles::gadget_omega(i));
    out.push_back(roles::gadget_alpha(i));
  }
  out.push_back(roles::prime(i, ys[2]));
  out.push_back(roles::prime(i, ys[1]));
  out.push_back(roles::prime(i, ys[0]));
  out.push_back(roles::gadget_h(i));
  out.push_back(roles::root(i));

  std::vector<std::string> groups[4];  // before y0 / y0..y1 / y1..y2 / after y2
  for (const auto& e : layout) {
    if (in_triple(t, e)) continue;
    std::size_t bucket = 0;
    if (pos[e] > pos[ys[0]]) bucket = 1;
    if (pos[e] > pos[ys[1]]) bucket = 2;
    if (pos[e] > pos[ys[2]]) bucket = 3;
    groups[bucket].push_back(e);
  }

  std::unordered_map<std::string, int> used;
  auto interior = [&](const std::string& e) {
    out.push_back(roles::path_interior(i, e, ++used[e]));
  };
  auto dump_and_land = [&](const std::string& e, const std::string& target) {
    while (used[e] < 6) interior(e);
    out.push_back(target);
  };

  for (const auto& e : groups[0]) dump_and_land(e, roles::element(i, e));

  std::vector<std::string> transit;
  for (const auto& e : groups[1]) transit.push_back(e);
  for (const auto& e : groups[2]) transit.push_back(e);
  for (const auto& e : groups[3]) transit.push_back(e);
  transit.push_back(ys[2]);
  transit.push_back(ys[1]);

  for (std::size_t stage = 0; stage < 3; ++stage) {
    const std::string& lander = ys[stage];
    for (const auto& e : transit) {
      if (e != lander) interior(e);
    }
    dump_and_land(lander, roles::double_prime(i, lander));
    transit.erase(std::remove(transit.begin(), transit.end(), lander), transit.end());
    std::reverse(transit.begin(), transit.end());
    for (const auto& e : transit) interior(e);
    out.push_back(roles::element(i, lander));
    for (const auto& e : groups[stage + 1]) {
      transit.erase(std::remove(transit.begin(), transit.end(), e), transit.end());
      dump_and_land(e, roles::element(i, e));
    }
    std::reverse(transit.begin(), transit.end());
  }
}

}  // namespace

WitnessResult witness_upbe3(const BetweennessInstance& bw,
                            std::span<const std::string> phi) {
  check_bw(bw);
  if (!eval_betweenness(bw, phi)) return {};
  const int m = static_cast<int>(bw.triples.size());
  const int copies = 2 * m - 1;

  WitnessResult result;
  result.ok = true;
  std::vector<std::string>& out = result.order;

  for (int j = 2; j <= copies - 1; j += 2) {
    for (const auto& e : phi) out.push_back(roles::element(j, e));
    out.push_back(roles::root(j));
  }
  out.push_back(roles::apex());

  std::vector<std::string> layout(phi.rbegin(), phi.rend());
  for (int i = copies; i >= 1; i -= 2) {
    const Triple& t = bw.triples[static_cast<std::size_t>((i - 1) / 2)];
    emit_odd_block_upbe3(i, t, layout, out);
  }
  return result;
}

ElementOrdering extract_phi(const LabeledInstance& lab, const Ordering& ord) {
  const int copy = lab.triple_count >= 2 ? 2 : 1;
  std::vector<std::pair<std::size_t, std::string>> ranked;
  ranked.reserve(lab.elements.size());
  for (const auto& e : lab.elements) {
    auto v = lab.instance.find_vertex(roles::element(copy, e));
    assert(v);
    ranked.push_back({ord.rank_of(*v), e});
  }
  std::sort(ranked.begin(), ranked.end());
  ElementOrdering phi;
  phi.reserve(ranked.size());
  for (auto& [rank, e] : ranked) phi.push_back(std::move(e));
  return phi;
}

// ---------------------------------------------------------------------------
// UMPBE-4
// ---------------------------------------------------------------------------

namespace {

// Binary order-preserving tree with all leaves at one depth d, d == n mod 2,
// padded by unary nodes. Level-e edges use the {Green, Blue} pair for even e
// and {Yellow, Red} for odd e; a left child takes the first member, a right
// or unary child the second.
struct TreePlan {
  int depth = 1;
  struct Node {
    std::string name;
    int depth = 0;
    std::vector<std::string> kids;  // first-member child first
  };
  std::vector<Node> nodes;  // post-order; looked up by name
  struct TEdge { std::string src, dst; int page; };
  std::vector<TEdge> edges;
};

int pair_first(int level) { return level % 2 == 0 ? kG : kY; }
int pair_second(int level) { return level % 2 == 0 ? kB : kR; }

std::string grow_tree(TreePlan& plan, int j, const BetweennessInstance& bw,
                      int depth, std::size_t lo, std::size_t hi, int& counter) {
  if (depth == plan.depth) {
    assert(hi - lo == 1);
    return roles::tree_leaf(j, bw.elements[lo]);
  }
  std::string name = depth == 0 ? roles::root(j) : roles::tree_node(j, counter++);
  TreePlan::Node node{name, depth, {}};
  const std::size_t size = hi - lo;
  if (size == 1) {
    std::string kid = grow_tree(plan, j, bw, depth + 1, lo, hi, counter);
    plan.edges.push_back({name, kid, pair_second(depth)});
    node.kids.push_back(kid);
  } else {
    const std::size_t mid = lo + (size + 1) / 2;
    std::string left = grow_tree(plan, j, bw, depth + 1, lo, mid, counter);
    plan.edges.push_back({name, left, pair_first(depth)});
    std::string right = grow_tree(plan, j, bw, depth + 1, mid, hi, counter);
    plan.edges.push_back({name, right, pair_second(depth)});
    node.kids.push_back(left);
    node.kids.push_back(right);
  }
  plan.nodes.push_back(std::move(node));
  return name;
}

TreePlan make_tree_plan(int j, const BetweennessInstance& bw) {
  const std::size_t n = bw.elements.size();
  TreePlan plan;
  int d = 1;
  while ((std::size_t{1} << d) < n) ++d;
  if (d % 2 != static_cast<int>(n % 2)) ++d;
  plan.depth = d;
  int counter = 0;
  grow_tree(plan, j, bw, 0, 0, n, counter);
  return plan;
}

// Color of path edge `step` (1..n) on the path of the q-th element (1-based):
// default alternation between Blue and Red continuing the tree's level pairs,
// except the q-th edge of the q-th path flips to Green/Yellow (q < n).
int path_edge_color(const TreePlan& plan, std::size_t n, std::size_t q, int step) {
  const int level = plan.depth + step - 1;
  int color = pair_second(level);
  if (static_cast<std::size_t>(step) == q && q <= n - 1) color = pair_first(level);
  return color;
}

// Adds one 4-page order gadget. Odd gadgets point root-to-elements; even
// gadgets are the mirror image with every edge reversed.
void add_order_gadget_umpbe4(Instance& inst, int j,
                             const BetweennessInstance& bw) {
  const std::size_t n = bw.elements.size();
  TreePlan plan = make_tree_plan(j, bw);
  inst.add_vertex(roles::root(j));
  for (const auto& node : plan.nodes) inst.add_vertex(node.name);
  for (const auto& e : bw.elements) {
    inst.add_vertex(roles::tree_leaf(j, e));
    for (std::size_t step = 1; step + 1 <= n; ++step) {
      inst.add_vertex(roles::path_interior(j, e, static_cast<int>(step)));
    }
    inst.add_vertex(roles::element(j, e));
  }
  const bool mirrored = j % 2 == 0;
  auto wire = [&](const std::string& src, const std::string& dst, int page) {
    if (mirrored) {
      inst.add_edge(dst, src, page);
    } else {
      inst.add_edge(src, dst, page);
    }
  };
  for (const auto& te : plan.edges) wire(te.src, te.dst, te.page);
  for (std::size_t q = 1; q <= n; ++q) {
    const std::string& e = bw.elements[q - 1];
    for (int step = 1; step <= static_cast<int>(n); ++step) {
      std::string src = step == 1 ? roles::tree_leaf(j, e)
                                  : roles::path_interior(j, e, step - 1);
      std::string dst = step == static_cast<int>(n)
                            ? roles::element(j, e)
                            : roles::path_interior(j, e, step);
      wire(src, dst, path_edge_color(plan, n, q, step));
    }
  }
}

void add_triple_gadget_umpbe4(Instance& inst, int i, const Triple& t) {
  const std::string l = roles::gadget_l(i);
  const std::string al = roles::gadget_alpha(i);
  const std::string om = roles::gadget_omega(i);
  const std::string h = roles::gadget_h(i);
  const std::string g = roles::gadget_guard(i);
  for (const std::string& v : {l, al, om}) inst.add_vertex(v);
  for (const std::string* e : {&t.a, &t.b, &t.c}) inst.add_vertex(roles::prime(i, *e));
  inst.add_vertex(h);
  inst.add_vertex(g);
  inst.add_edge(l, al, kG);
  inst.add_edge(l, om, kB);
  inst.add_edge(al, roles::prime(i, t.a), kY);
  inst.add_edge(al, roles::prime(i, t.b), kR);
  inst.add_edge(om, roles::prime(i, t.b), kY);
  inst.add_edge(om, roles::prime(i, t.c), kR);
  for (const std::string* e : {&t.a, &t.b, &t.c}) {
    inst.add_edge(roles::prime(i, *e), roles::element(i, *e), kB);
  }
  inst.add_edge(roles::prime(i, t.b), h, kG);
  inst.add_edge(roles::prime(i, t.c), g, kG);
  inst.add_edge(h, roles::root(i), kY);
  inst.add_edge(g, roles::root(i), kR);
}

}  // namespace

LabeledInstance assemble_umpbe4(const BetweennessInstance& bw) {
  check_bw(bw);
  const int m = static_cast<int>(bw.triples.size());
  const int copies = 2 * m - 1;

  LabeledInstance lab;
  lab.instance = Instance(4);
  lab.elements = bw.elements;
  lab.triple_count = static_cast<std::size_t>(m);
  Instance& inst = lab.instance;

  for (int j = 1; j <= copies; ++j) {
    add_order_gadget_umpbe4(inst, j, bw);
    if (j % 2 == 1) {
      add_triple_gadget_umpbe4(inst, j,
                               bw.triples[static_cast<std::size_t>((j - 1) / 2)]);
    }
  }
  for (int i = 1; i <= copies; i += 2) {
    if (i > 1) inst.add_edge(roles::root(i - 1), roles::gadget_l(i), kY);
    if (i < copies) inst.add_edge(roles::root(i + 1), roles::gadget_l(i), kR);
  }
  for (int j = 2; j <= copies - 1; j += 2) {
    for (const auto& e : bw.elements) {
      inst.add_edge(roles::element(j, e), roles::element(j - 1, e), kG);
      inst.add_edge(roles::element(j, e), roles::element(j + 1, e), kY);
    }
  }
  return lab;
}

namespace {

// Witness layout of one 4-page order gadget in root-first orientation with
// the element copies landing in `target` order. Tree layers reverse their
// parents level by level; path layers reverse at every step except for the
// one strand whose exceptional edge lets it move freely (insertion sort).
std::vector<std::string> order_gadget_layout_umpbe4(
    int j, const BetweennessInstance& bw,
    const std::vector<std::string>& target) {
  const std::size_t n = bw.elements.size();
  TreePlan plan = make_tree_plan(j, bw);
  std::unordered_map<std::string, const TreePlan::Node*> by_name;
  for (const auto& node : plan.nodes) by_name[node.name] = &node;

  std::vector<std::string> out;
  std::vector<std::string> level{roles::root(j)};
  out.push_back(roles::root(j));
  for (int d = 1; d <= plan.depth; ++d) {
    std::vector<std::string> next;
    for (auto it = level.rbegin(); it != level.rend(); ++it) {
      auto found = by_name.find(*it);
      if (found == by_name.end()) continue;
      for (const auto& kid : found->second->kids) next.push_back(kid);
    }
    for (const auto& v : next) out.push_back(v);
    level = std::move(next);
  }

  // Strand names for the path layers: leaf layer order by element.
  std::vector<std::string> strands;
  strands.reserve(n);
  for (const auto& leaf : level) {
    // leaf name is "x*@j/<e>"
    strands.push_back(leaf.substr(leaf.find('/') + 1));
  }

  std::vector<std::string> goal(target.rbegin(), target.rend());
  std::unordered_map<std::string, std::size_t> goal_pos;
  for (std::size_t q = 0; q < goal.size(); ++q) goal_pos[goal[q]] = q;

  std::vector<char> passive(n + 1, 0);
  std::unordered_map<std::string, std::size_t> elem_index;
  for (std::size_t q = 0; q < n; ++q) elem_index[bw.elements[q]] = q;
  passive[elem_index[bw.elements[n - 1]]] = 1;

  std::vector<std::string> layer = strands;
  for (std::size_t step = 1; step + 1 <= n; ++step) {
    std::reverse(layer.begin(), layer.end());
    const std::string free = bw.elements[step - 1];
    layer.erase(std::remove(layer.begin(), layer.end(), free), layer.end());
    passive[elem_index[free]] = 1;

    // Desired relative order of the settled strands at this layer.
    std::vector<std::string> desired;
    for (const auto& e : goal) {
      if (passive[elem_index[e]]) desired.push_back(e);
    }
    if ((n - 1 - step) % 2 == 1) std::reverse(desired.begin(), desired.end());

    std::size_t di = 0;
    while (desired[di] != free) ++di;
    std::size_t insert_at = 0;
    if (di > 0) {
      const std::string& pred = desired[di - 1];
      for (std::size_t q = 0; q < layer.size(); ++q) {
        if (layer[q] == pred) insert_at = q + 1;
      }
    }
    layer.insert(layer.begin() + static_cast<std::ptrdiff_t>(insert_at), free);
    for (const auto& e : layer) {
      out.push_back(roles::path_interior(j, e, static_cast<int>(step)));
    }
  }
  for (const auto& e : target) out.push_back(roles::element(j, e));
  return out;
}

void emit_odd_block_umpbe4(int i, const Triple& t,
                           const BetweennessInstance& bw,
                           const std::vector<std::string>& layout,
                           std::vector<std::string>& out) {
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t q = 0; q < layout.size(); ++q) pos[layout[q]] = q;
  const bool ascending = pos[t.a] < pos[t.c];

  std::vector<std::string> ys{t.a, t.b, t.c};
  std::sort(ys.begin(), ys.end(),
            [&](const std::string& x, const std::string& y) { return pos[x] < pos[y]; });

  out.push_back(roles::gadget_l(i));
  if (ascending) {
    // alpha < omega; primes descend (c', b', a'); guard after h.
    out.push_back(roles::gadget_alpha(i));
    out.push_back(roles::gadget_omega(i));
    out.push_back(roles::prime(i, ys[2]));
    out.push_back(roles::prime(i, ys[1]));
    out.push_back(roles::prime(i, ys[0]));
    out.push_back(roles::gadget_h(i));
    out.push_back(roles::gadget_guard(i));
  } else {
    out.push_back(roles::gadget_omega(i));
    out.push_back(roles::gadget_alpha(i));
    out.push_back(roles::prime(i, ys[2]));
    out.push_back(roles::prime(i, ys[1]));
    out.push_back(roles::prime(i, ys[0]));
    out.push_back(roles::gadget_guard(i));
    out.push_back(roles::gadget_h(i));
  }
  for (const auto& v : order_gadget_layout_umpbe4(i, bw, layout)) out.push_back(v);
}

}  // namespace

WitnessResult witness_umpbe4(const BetweennessInstance& bw,
                             std::span<const std::string> phi) {
  check_bw(bw);
  if (!eval_betweenness(bw, phi)) return {};
  const int m = static_cast<int>(bw.triples.size());
  const int copies = 2 * m - 1;

  WitnessResult result;
  result.ok = true;
  std::vector<std::string>& out = result.order;

  std::vector<std::string> layout(phi.rbegin(), phi.rend());
  for (int j = 2; j <= copies - 1; j += 2) {
    std::vector<std::string> seq = order_gadget_layout_umpbe4(j, bw, layout);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(*it);
  }
  for (int i = copies; i >= 1; i -= 2) {
    const Triple& t = bw.triples[static_cast<std::size_t>((i - 1) / 2)];
    emit_odd_block_umpbe4(i, t, bw, layout, out);
  }
  return result;
}

}  // namespace bookfold
