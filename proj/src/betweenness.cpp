#include "bookfold/betweenness.hpp"

#include <algorithm>
#include <unordered_map>

namespace bookfold {

bool eval_betweenness(const BetweennessInstance& bw,
                      std::span<const std::string> phi) {
  std::unordered_map<std::string, std::size_t> pos;
  pos.reserve(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) pos[phi[i]] = i;
  for (const Triple& t : bw.triples) {
    auto a = pos.find(t.a), b = pos.find(t.b), c = pos.find(t.c);
    if (a == pos.end() || b == pos.end() || c == pos.end()) return false;
    bool fwd = a->second < b->second && b->second < c->second;
    bool rev = c->second < b->second && b->second < a->second;
    if (!fwd && !rev) return false;
  }
  return true;
}

std::optional<ElementOrdering> solve_betweenness_bruteforce(
    const BetweennessInstance& bw) {
  const std::size_t n = bw.elements.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    ElementOrdering phi;
    phi.reserve(n);
    for (std::size_t i : perm) phi.push_back(bw.elements[i]);
    if (eval_betweenness(bw, phi)) return phi;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace bookfold
