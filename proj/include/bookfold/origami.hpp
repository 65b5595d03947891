#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bookfold {

enum class Crease : char { Mountain = 'M', Valley = 'V' };

// A 1D crease pattern over unit-length faces. Linear patterns have faces
// f_0..f_n with crease i joining faces i and i+1; cyclic patterns wrap, so
// face count equals crease count. Cyclic-ness is a flag, never encoded in
// the crease string.
class CreasePattern {
 public:
  CreasePattern() = default;
  CreasePattern(std::vector<Crease> creases, bool cyclic)
      : creases_(std::move(creases)), cyclic_(cyclic) {}

  // Accepts uppercase 'M'/'V' only.
  static std::optional<CreasePattern> parse(std::string_view text, bool cyclic);

  std::size_t crease_count() const { return creases_.size(); }
  std::size_t face_count() const {
    return cyclic_ ? creases_.size() : creases_.size() + 1;
  }
  bool cyclic() const { return cyclic_; }
  Crease at(std::size_t i) const { return creases_[i]; }
  const std::vector<Crease>& creases() const { return creases_; }
  std::string to_string() const;

 private:
  std::vector<Crease> creases_;
  bool cyclic_ = false;
};

// Bottom-to-top stacking of faces of a flat-folded state. Face indices are
// 0-based; face i maps to display name f_{i+1}.
struct LayerOrder {
  std::vector<std::size_t> bottom_to_top;
};

// True iff face i+1 must lie below face i in any folded state. Face i is
// flipped iff i is odd (face 0 lies face-up); a mountain crease sends the
// next face below exactly when the current face is unflipped.
bool effective_below(const CreasePattern& pattern, std::size_t crease_index);

// Unit-length strips fold for every assignment: place face 0, then insert
// each face immediately below or above its predecessor. O(n).
LayerOrder fold_path(const CreasePattern& pattern);

enum class FoldStatus { Folded, Infeasible, MalformedPattern };

struct FoldResult {
  FoldStatus status = FoldStatus::Infeasible;
  LayerOrder layers;  // meaningful only when status == Folded
};

// Single-vertex (cyclic) flat foldability by crimp recursion on equal
// angles: all creases equal is infeasible; otherwise crimp the lowest-index
// adjacent (M,V) pair and recurse; a 2-cycle folds iff its creases agree.
// Unwinding the crimps yields a witness layer order.
FoldResult fold_cycle(const CreasePattern& pattern);

}  // namespace bookfold
