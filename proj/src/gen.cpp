#include "bookfold/gen.hpp"

namespace bookfold {

namespace {

std::string vertex_name(std::size_t i) { return "v" + std::to_string(i + 1); }

}  // namespace

Instance gen_path(std::size_t n, int k, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Instance inst(k);
  for (std::size_t i = 0; i < n; ++i) inst.add_vertex(vertex_name(i));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    int page = static_cast<int>(i % static_cast<std::size_t>(k)) + 1;
    if (rng.coin()) {
      inst.add_edge(i, i + 1, page);
    } else {
      inst.add_edge(i + 1, i, page);
    }
  }
  return inst;
}

Instance gen_cycle(std::size_t n, int k, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Instance inst(k);
  for (std::size_t i = 0; i < n; ++i) inst.add_vertex(vertex_name(i));
  if (n < 3) return inst;
  std::vector<bool> forward(n);
  bool all_same = true;
  for (std::size_t i = 0; i < n; ++i) {
    forward[i] = rng.coin();
    if (forward[i] != forward[0]) all_same = false;
  }
  if (all_same) forward[0] = !forward[0];  // a uniformly oriented ring cycles
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t a = i, b = (i + 1) % n;
    int page = static_cast<int>(i % static_cast<std::size_t>(k)) + 1;
    if (forward[i]) {
      inst.add_edge(a, b, page);
    } else {
      inst.add_edge(b, a, page);
    }
  }
  return inst;
}

Instance gen_random_dag(std::size_t n, int k, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Instance inst(k);
  for (std::size_t i = 0; i < n; ++i) inst.add_vertex(vertex_name(i));
  if (n < 2) return inst;
  // Probability 2.4/n as a threshold over 20 bits.
  const std::uint64_t scale = 1 << 20;
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(2.4 / static_cast<double>(n) * static_cast<double>(scale));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.below(scale) < threshold) {
        int page = static_cast<int>(rng.below(static_cast<std::uint64_t>(k))) + 1;
        inst.add_edge(i, j, page);
      }
    }
  }
  return inst;
}

}  // namespace bookfold
