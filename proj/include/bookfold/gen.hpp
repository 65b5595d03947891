#pragma once

#include <cstdint>

#include "bookfold/core.hpp"

namespace bookfold {

// Tiny deterministic generator (splitmix64) so that seeded output is
// byte-identical across platforms; std:: distributions are not portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, bound); bias is irrelevant at test scale.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

// Path v1-...-vn with round-robin pages and seeded edge directions. For
// k = 2 the pages alternate, so the result is matching-partitioned.
Instance gen_path(std::size_t n, int k, std::uint64_t seed);

// Cycle over n vertices, same page pattern; edge directions seeded but
// patched so the result stays acyclic.
Instance gen_cycle(std::size_t n, int k, std::uint64_t seed);

// Random DAG: each pair i < j gets an edge i -> j with probability about
// 2.4/n, page uniform in 1..k.
Instance gen_random_dag(std::size_t n, int k, std::uint64_t seed);

}  // namespace bookfold
