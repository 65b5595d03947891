#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bookfold {

// A page of the book. Pages are numbered 1..k; pages 1..4 carry the display
// names Red, Blue, Green and Yellow.
struct PageId {
  int value = 1;

  std::string display_name() const;

  friend bool operator==(const PageId&, const PageId&) = default;
};

inline constexpr PageId kRed{1};
inline constexpr PageId kBlue{2};
inline constexpr PageId kGreen{3};
inline constexpr PageId kYellow{4};

// Directed edge between resolved vertex indices.
struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  PageId page{1};
};

// Edge whose endpoints did not resolve to declared vertices. Kept so that
// check_instance can report the offending names.
struct UnresolvedEdge {
  std::string src;
  std::string dst;
  int page = 1;
};

// A DAG with every edge assigned to one of k pages. Vertices are opaque
// strings; their declaration order defines dense insertion indices used
// everywhere else. Mutating add_* calls are for the construction phase only;
// all operations take the instance by const reference and the type is safe
// for concurrent reads once built.
class Instance {
 public:
  Instance() = default;
  explicit Instance(int page_count) : page_count_(page_count) {}

  // Returns the index of the vertex. Adding an existing name is a no-op that
  // returns the original index.
  std::size_t add_vertex(std::string name);

  // Endpoints looked up by name; falls back to the unresolved list when a
  // name is unknown so check_instance can report it.
  void add_edge(std::string_view src, std::string_view dst, int page);
  void add_edge(std::size_t src, std::size_t dst, int page);

  int page_count() const { return page_count_; }
  std::size_t vertex_count() const { return names_.size(); }
  const std::string& vertex_name(std::size_t v) const { return names_[v]; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  std::optional<std::size_t> find_vertex(std::string_view name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<UnresolvedEdge>& unresolved_edges() const { return unresolved_; }

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  int page_count_ = 1;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>> index_;
  std::vector<Edge> edges_;
  std::vector<UnresolvedEdge> unresolved_;
};

enum class InstanceErrorKind {
  NotADag,
  SelfLoop,
  ParallelEdge,
  UnknownVertex,
  PageOutOfRange,
};

struct InstanceError {
  InstanceErrorKind kind;
  std::string message;
  std::vector<std::size_t> cycle;  // NotADag only: witness cycle, in order
};

// Empty result means the instance is well-formed. Errors are reported in a
// fixed order (page range, self loops, parallel edges, unknown vertices,
// cycles), each with the offending element.
std::vector<InstanceError> check_instance(const Instance& inst);

inline bool is_well_formed(const Instance& inst) { return check_instance(inst).empty(); }

struct MatchingReport {
  bool ok = true;
  std::size_t vertex = 0;  // first vertex touched twice by one page
  int page = 0;
};

// True iff every page's edge set touches each vertex at most once.
MatchingReport is_matching_partition(const Instance& inst);

// A linear order pi over vertex indices. order[r] is the vertex at rank r;
// rank_of inverts it.
class Ordering {
 public:
  Ordering() = default;

  static Ordering identity(std::size_t n);
  // Validates that `order` is a permutation of 0..n-1.
  static std::optional<Ordering> from_sequence(std::vector<std::size_t> order);
  // Resolves names against the instance; nullopt unless a permutation of its
  // vertex set.
  static std::optional<Ordering> from_names(const Instance& inst,
                                            std::span<const std::string> names);

  std::size_t size() const { return order_.size(); }
  std::size_t vertex_at(std::size_t rank) const { return order_[rank]; }
  std::size_t rank_of(std::size_t vertex) const { return rank_[vertex]; }
  const std::vector<std::size_t>& sequence() const { return order_; }

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
};

// Strict arc interleaving on the spine; edges sharing an endpoint never
// cross. Callers compare edges of the same page.
bool edges_cross(const Ordering& pos, const Edge& e1, const Edge& e2);

enum class ViolationKind { Topological, Crossing, VertexSetMismatch };

struct Violation {
  ViolationKind kind;
  Edge first{};   // Topological: the offending edge. Crossing: first edge.
  Edge second{};  // Crossing only.
  std::string vertex;  // VertexSetMismatch only.
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Valid iff every edge goes up in rank and no two same-page edges cross.
// The crossing scan is O(m log m) per call; it reports the first crossing
// found on each page, independent of edge declaration order.
ValidationReport validate_ordering(const Instance& inst, const Ordering& ord);

// Name-based variant; reports VertexSetMismatch instead of assuming a
// permutation.
ValidationReport validate_ordering(const Instance& inst,
                                   std::span<const std::string> names);

std::string describe(const Instance& inst, const Violation& v);

}  // namespace bookfold
