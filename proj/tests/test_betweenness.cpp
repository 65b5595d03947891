#include <doctest.h>

#include "bookfold/betweenness.hpp"

using namespace bookfold;

TEST_CASE("eval_betweenness") {
  BetweennessInstance bw{{"a", "b", "c"}, {{"a", "b", "c"}}};
  CHECK(eval_betweenness(bw, std::vector<std::string>{"a", "b", "c"}));
  CHECK(eval_betweenness(bw, std::vector<std::string>{"c", "b", "a"}));
  CHECK_FALSE(eval_betweenness(bw, std::vector<std::string>{"b", "a", "c"}));
}

TEST_CASE("brute force solves the worked example") {
  // L = {a,b,c,d}, C = {<a,b,c>, <b,c,d>, <d,b,a>}
  BetweennessInstance bw{{"a", "b", "c", "d"},
                         {{"a", "b", "c"}, {"b", "c", "d"}, {"d", "b", "a"}}};
  auto phi = solve_betweenness_bruteforce(bw);
  REQUIRE(phi.has_value());
  CHECK(eval_betweenness(bw, *phi));
  CHECK(*phi == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("brute force detects unsatisfiable instances") {
  BetweennessInstance bw{{"a", "b", "c"}, {{"a", "b", "c"}, {"b", "a", "c"}}};
  CHECK_FALSE(solve_betweenness_bruteforce(bw).has_value());
}

TEST_CASE("empty constraint set returns the first permutation") {
  BetweennessInstance bw{{"x", "y", "z"}, {}};
  auto phi = solve_betweenness_bruteforce(bw);
  REQUIRE(phi.has_value());
  CHECK(*phi == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("result is the lexicographically first satisfying permutation") {
  // <b,a,c> rules out any order with a outside the middle of b,c.
  BetweennessInstance bw{{"a", "b", "c"}, {{"b", "a", "c"}}};
  auto phi = solve_betweenness_bruteforce(bw);
  REQUIRE(phi.has_value());
  CHECK(*phi == std::vector<std::string>{"b", "a", "c"});
}
