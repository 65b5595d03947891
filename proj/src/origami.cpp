#include "bookfold/origami.hpp"

#include <queue>

namespace bookfold {

std::optional<CreasePattern> CreasePattern::parse(std::string_view text, bool cyclic) {
  std::vector<Crease> creases;
  creases.reserve(text.size());
  for (char c : text) {
    if (c == 'M') {
      creases.push_back(Crease::Mountain);
    } else if (c == 'V') {
      creases.push_back(Crease::Valley);
    } else {
      return std::nullopt;
    }
  }
  return CreasePattern(std::move(creases), cyclic);
}

std::string CreasePattern::to_string() const {
  std::string s;
  s.reserve(creases_.size());
  for (Crease c : creases_) s.push_back(static_cast<char>(c));
  return s;
}

namespace {

inline bool face_flipped(std::size_t face) { return face % 2 == 1; }

inline bool below_of(Crease c, std::size_t left_face) {
  return (c == Crease::Mountain) != face_flipped(left_face);
}

// Doubly-linked stacking with O(1) adjacent insertion.
class LayerList {
 public:
  explicit LayerList(std::size_t n)
      : above_(n, kNone), below_(n, kNone), bottom_(kNone) {}

  void place_first(std::size_t face) { bottom_ = face; }

  void insert_adjacent(std::size_t face, std::size_t anchor, bool below) {
    if (below) {
      std::size_t under = below_[anchor];
      below_[face] = under;
      above_[face] = anchor;
      below_[anchor] = face;
      if (under != kNone) above_[under] = face;
      if (bottom_ == anchor) bottom_ = face;
    } else {
      std::size_t over = above_[anchor];
      above_[face] = over;
      below_[face] = anchor;
      above_[anchor] = face;
      if (over != kNone) below_[over] = face;
    }
  }

  std::vector<std::size_t> bottom_to_top() const {
    std::vector<std::size_t> out;
    out.reserve(above_.size());
    for (std::size_t f = bottom_; f != kNone; f = above_[f]) out.push_back(f);
    return out;
  }

 private:
  static constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> above_, below_;
  std::size_t bottom_;
};

}  // namespace

bool effective_below(const CreasePattern& pattern, std::size_t crease_index) {
  return below_of(pattern.at(crease_index), crease_index);
}

LayerOrder fold_path(const CreasePattern& pattern) {
  const std::size_t faces = pattern.crease_count() + 1;
  LayerList layers(faces);
  layers.place_first(0);
  for (std::size_t i = 0; i < pattern.crease_count(); ++i) {
    layers.insert_adjacent(i + 1, i, effective_below(pattern, i));
  }
  return {layers.bottom_to_top()};
}

FoldResult fold_cycle(const CreasePattern& pattern) {
  const std::size_t n = pattern.crease_count();
  if (!pattern.cyclic() || n < 4 || n % 2 != 0) {
    return {FoldStatus::MalformedPattern, {}};
  }

  // Circular list of sectors; sector s carries face[s] and the crease from
  // that face to the next one. A crimp at s removes s's and next(s)'s
  // creases and merges three faces; the survivor keeps face[s], whose flip
  // parity matches the absorbed far face.
  std::vector<std::size_t> face(n), next(n), prev(n), crease_idx(n);
  std::vector<Crease> crease(n);
  std::vector<char> alive(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    face[i] = i;
    crease[i] = pattern.at(i);
    crease_idx[i] = i;
    next[i] = (i + 1) % n;
    prev[i] = (i + n - 1) % n;
  }

  using Cand = std::pair<std::size_t, std::size_t>;  // (crease_idx, sector)
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
  auto push_if_crimp = [&](std::size_t s) {
    if (alive[s] && crease[s] == Crease::Mountain &&
        crease[next[s]] == Crease::Valley) {
      heap.push({crease_idx[s], s});
    }
  };
  for (std::size_t s = 0; s < n; ++s) push_if_crimp(s);

  struct CrimpStep {
    std::size_t face_a, face_b, face_c;
    Crease ab, bc;
  };
  std::vector<CrimpStep> steps;
  std::size_t len = n;
  while (len > 2) {
    std::size_t s = SIZE_MAX;
    while (!heap.empty()) {
      auto [idx, cand] = heap.top();
      heap.pop();
      if (alive[cand] && crease_idx[cand] == idx &&
          crease[cand] == Crease::Mountain &&
          crease[next[cand]] == Crease::Valley) {
        s = cand;
        break;
      }
    }
    if (s == SIZE_MAX) {
      // No adjacent (M,V) pair left: all creases equal, not flat foldable.
      return {FoldStatus::Infeasible, {}};
    }
    std::size_t q = next[s], r = next[q];
    steps.push_back({face[s], face[q], face[r], crease[s], crease[q]});
    crease[s] = crease[r];
    crease_idx[s] = crease_idx[r];
    alive[q] = alive[r] = 0;
    next[s] = next[r];
    prev[next[r]] = s;
    len -= 2;
    push_if_crimp(prev[s]);
    push_if_crimp(s);
  }

  std::size_t first = 0;
  while (!alive[first]) ++first;
  std::size_t second = next[first];
  if (crease[first] != crease[second]) {
    return {FoldStatus::Infeasible, {}};
  }

  LayerList layers(n);
  layers.place_first(face[first]);
  layers.insert_adjacent(face[second], face[first],
                         below_of(crease[first], face[first]));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    layers.insert_adjacent(it->face_b, it->face_a, below_of(it->ab, it->face_a));
    layers.insert_adjacent(it->face_c, it->face_b, below_of(it->bc, it->face_b));
  }
  return {FoldStatus::Folded, {layers.bottom_to_top()}};
}

}  // namespace bookfold
