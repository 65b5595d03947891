#include "bookfold/core.hpp"

#include <algorithm>
#include <cassert>

namespace bookfold {

std::string PageId::display_name() const {
  switch (value) {
    case 1: return "Red";
    case 2: return "Blue";
    case 3: return "Green";
    case 4: return "Yellow";
    default: return "Page" + std::to_string(value);
  }
}

std::size_t Instance::add_vertex(std::string name) {
  auto it = index_.find(std::string_view{name});
  if (it != index_.end()) return it->second;
  std::size_t id = names_.size();
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

void Instance::add_edge(std::string_view src, std::string_view dst, int page) {
  auto s = find_vertex(src);
  auto d = find_vertex(dst);
  if (!s || !d) {
    unresolved_.push_back({std::string(src), std::string(dst), page});
    return;
  }
  edges_.push_back({*s, *d, PageId{page}});
}

void Instance::add_edge(std::size_t src, std::size_t dst, int page) {
  assert(src < names_.size() && dst < names_.size());
  edges_.push_back({src, dst, PageId{page}});
}

std::optional<std::size_t> Instance::find_vertex(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string edge_text(const Instance& inst, const Edge& e) {
  return "(" + inst.vertex_name(e.src) + ", " + inst.vertex_name(e.dst) +
         ", page " + std::to_string(e.page.value) + ")";
}

// Kahn's algorithm over the resolved, non-loop edges. On failure extracts a
// directed cycle from the leftover vertices.
void check_acyclic(const Instance& inst, std::vector<InstanceError>& out) {
  const std::size_t n = inst.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (const Edge& e : inst.edges()) {
    if (e.src == e.dst) continue;
    ++indeg[e.dst];
    succ[e.src].push_back(e.dst);
  }
  std::vector<std::size_t> queue;
  queue.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t processed = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t v = queue[head];
    ++processed;
    for (std::size_t w : succ[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  if (processed == n) return;

  // Every leftover vertex has a leftover predecessor; walking successors
  // inside the leftover set must revisit a vertex.
  std::vector<char> leftover(n, 0), seen(n, 0);
  for (std::size_t v = 0; v < n; ++v) leftover[v] = indeg[v] > 0;
  std::size_t start = 0;
  while (!leftover[start]) ++start;
  std::vector<std::size_t> path;
  std::vector<std::size_t> pos_in_path(n, SIZE_MAX);
  std::size_t v = start;
  while (pos_in_path[v] == SIZE_MAX) {
    pos_in_path[v] = path.size();
    path.push_back(v);
    for (std::size_t w : succ[v]) {
      if (leftover[w]) {
        v = w;
        break;
      }
    }
  }
  std::vector<std::size_t> cycle(path.begin() + pos_in_path[v], path.end());
  std::string msg = "directed cycle:";
  for (std::size_t u : cycle) msg += " " + inst.vertex_name(u);
  (void)seen;
  out.push_back({InstanceErrorKind::NotADag, std::move(msg), std::move(cycle)});
}

}  // namespace

std::vector<InstanceError> check_instance(const Instance& inst) {
  std::vector<InstanceError> out;
  for (const Edge& e : inst.edges()) {
    if (e.page.value < 1 || e.page.value > inst.page_count()) {
      out.push_back({InstanceErrorKind::PageOutOfRange,
                     "page out of range: " + edge_text(inst, e) + " with k = " +
                         std::to_string(inst.page_count()),
                     {}});
    }
  }
  for (const Edge& e : inst.edges()) {
    if (e.src == e.dst) {
      out.push_back({InstanceErrorKind::SelfLoop,
                     "self loop at " + inst.vertex_name(e.src), {}});
    }
  }
  {
    // Parallel edges are rejected regardless of direction or page.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> pairs;
    pairs.reserve(inst.edges().size());
    for (std::size_t i = 0; i < inst.edges().size(); ++i) {
      const Edge& e = inst.edges()[i];
      if (e.src == e.dst) continue;
      pairs.push_back({{std::min(e.src, e.dst), std::max(e.src, e.dst)}, i});
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      if (pairs[i].first == pairs[i - 1].first) {
        const Edge& e = inst.edges()[std::max(pairs[i].second, pairs[i - 1].second)];
        out.push_back({InstanceErrorKind::ParallelEdge,
                       "parallel edge " + edge_text(inst, e), {}});
      }
    }
  }
  for (const UnresolvedEdge& e : inst.unresolved_edges()) {
    std::string missing = inst.find_vertex(e.src) ? e.dst : e.src;
    out.push_back({InstanceErrorKind::UnknownVertex,
                   "unknown vertex '" + missing + "' in edge (" + e.src + ", " +
                       e.dst + ", page " + std::to_string(e.page) + ")",
                   {}});
  }
  check_acyclic(inst, out);
  return out;
}

MatchingReport is_matching_partition(const Instance& inst) {
  // touched[v * (k+1) + p] counts page-p edges at v.
  const std::size_t n = inst.vertex_count();
  const std::size_t k = static_cast<std::size_t>(inst.page_count());
  std::vector<std::uint8_t> touched(n * (k + 1), 0);
  for (const Edge& e : inst.edges()) {
    if (e.page.value < 1 || static_cast<std::size_t>(e.page.value) > k) continue;
    const std::size_t p = static_cast<std::size_t>(e.page.value);
    for (std::size_t v : {e.src, e.dst}) {
      if (++touched[v * (k + 1) + p] > 1) {
        return {false, v, static_cast<int>(p)};
      }
    }
  }
  return {true, 0, 0};
}

Ordering Ordering::identity(std::size_t n) {
  Ordering o;
  o.order_.resize(n);
  o.rank_.resize(n);
  for (std::size_t i = 0; i < n; ++i) o.order_[i] = o.rank_[i] = i;
  return o;
}

std::optional<Ordering> Ordering::from_sequence(std::vector<std::size_t> order) {
  const std::size_t n = order.size();
  std::vector<std::size_t> rank(n, SIZE_MAX);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t v = order[r];
    if (v >= n || rank[v] != SIZE_MAX) return std::nullopt;
    rank[v] = r;
  }
  Ordering o;
  o.order_ = std::move(order);
  o.rank_ = std::move(rank);
  return o;
}

std::optional<Ordering> Ordering::from_names(const Instance& inst,
                                             std::span<const std::string> names) {
  if (names.size() != inst.vertex_count()) return std::nullopt;
  std::vector<std::size_t> order;
  order.reserve(names.size());
  for (const std::string& s : names) {
    auto v = inst.find_vertex(s);
    if (!v) return std::nullopt;
    order.push_back(*v);
  }
  return from_sequence(std::move(order));
}

bool edges_cross(const Ordering& pos, const Edge& e1, const Edge& e2) {
  if (e1.src == e2.src || e1.src == e2.dst || e1.dst == e2.src || e1.dst == e2.dst)
    return false;
  std::size_t a = pos.rank_of(e1.src), b = pos.rank_of(e1.dst);
  std::size_t c = pos.rank_of(e2.src), d = pos.rank_of(e2.dst);
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

namespace {

// Sweep of one page's arcs sorted by (left asc, right desc). Open arcs live
// on a stack; a new arc reaching past the innermost open arc is a crossing.
// Equal left endpoints share a vertex and are pushed outer-first, so they
// never trip the check.
void scan_page_crossings(const Instance& inst, const Ordering& ord,
                         std::vector<std::size_t>& arcs,
                         std::vector<Violation>& out) {
  auto left = [&](std::size_t ei) {
    const Edge& e = inst.edges()[ei];
    return std::min(ord.rank_of(e.src), ord.rank_of(e.dst));
  };
  auto right = [&](std::size_t ei) {
    const Edge& e = inst.edges()[ei];
    return std::max(ord.rank_of(e.src), ord.rank_of(e.dst));
  };
  std::sort(arcs.begin(), arcs.end(), [&](std::size_t x, std::size_t y) {
    auto lx = left(x), ly = left(y);
    if (lx != ly) return lx < ly;
    auto rx = right(x), ry = right(y);
    if (rx != ry) return rx > ry;
    return x < y;
  });
  std::vector<std::size_t> stack;
  for (std::size_t ei : arcs) {
    const std::size_t l = left(ei), r = right(ei);
    while (!stack.empty() && right(stack.back()) <= l) stack.pop_back();
    if (!stack.empty() && right(stack.back()) < r && left(stack.back()) < l) {
      out.push_back({ViolationKind::Crossing, inst.edges()[stack.back()],
                     inst.edges()[ei], {}});
      return;  // one witness per page
    }
    stack.push_back(ei);
  }
}

}  // namespace

ValidationReport validate_ordering(const Instance& inst, const Ordering& ord) {
  ValidationReport report;
  if (ord.size() != inst.vertex_count()) {
    report.violations.push_back(
        {ViolationKind::VertexSetMismatch, {}, {}, "ordering size mismatch"});
    return report;
  }
  for (const Edge& e : inst.edges()) {
    if (ord.rank_of(e.src) >= ord.rank_of(e.dst)) {
      report.violations.push_back({ViolationKind::Topological, e, {}, {}});
    }
  }
  const int k = inst.page_count();
  std::vector<std::vector<std::size_t>> by_page(static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < inst.edges().size(); ++i) {
    int p = inst.edges()[i].page.value;
    if (p >= 1 && p <= k) by_page[static_cast<std::size_t>(p)].push_back(i);
  }
  for (int p = 1; p <= k; ++p) {
    scan_page_crossings(inst, ord, by_page[static_cast<std::size_t>(p)],
                        report.violations);
  }
  return report;
}

ValidationReport validate_ordering(const Instance& inst,
                                   std::span<const std::string> names) {
  ValidationReport report;
  std::vector<char> seen(inst.vertex_count(), 0);
  std::vector<std::size_t> order;
  bool mismatch = false;
  for (const std::string& s : names) {
    auto v = inst.find_vertex(s);
    if (!v) {
      report.violations.push_back(
          {ViolationKind::VertexSetMismatch, {}, {}, "unknown vertex '" + s + "'"});
      mismatch = true;
      continue;
    }
    if (seen[*v]) {
      report.violations.push_back(
          {ViolationKind::VertexSetMismatch, {}, {}, "duplicate vertex '" + s + "'"});
      mismatch = true;
      continue;
    }
    seen[*v] = 1;
    order.push_back(*v);
  }
  for (std::size_t v = 0; v < inst.vertex_count(); ++v) {
    if (!seen[v]) {
      report.violations.push_back({ViolationKind::VertexSetMismatch,
                                   {},
                                   {},
                                   "missing vertex '" + inst.vertex_name(v) + "'"});
      mismatch = true;
    }
  }
  if (mismatch) return report;
  auto ord = Ordering::from_sequence(std::move(order));
  return validate_ordering(inst, *ord);
}

std::string describe(const Instance& inst, const Violation& v) {
  switch (v.kind) {
    case ViolationKind::Topological:
      return "edge " + edge_text(inst, v.first) + " violates topological order";
    case ViolationKind::Crossing:
      return "edges " + edge_text(inst, v.first) + " and " +
             edge_text(inst, v.second) + " cross";
    case ViolationKind::VertexSetMismatch:
      return "vertex set mismatch: " + v.vertex;
  }
  return {};
}

}  // namespace bookfold
