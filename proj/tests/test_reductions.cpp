#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "bookfold/gen.hpp"
#include "bookfold/io.hpp"
#include "bookfold/reductions.hpp"
#include "bookfold/search.hpp"
#include "oracle.hpp"

using namespace bookfold;

namespace {

const BetweennessInstance kWorked{{"a", "b", "c", "d"},
                                {{"a", "b", "c"}, {"b", "c", "d"}, {"d", "b", "a"}}};

std::map<int, std::size_t> color_counts(const Instance& inst) {
  std::map<int, std::size_t> counts;
  for (const Edge& e : inst.edges()) ++counts[e.page.value];
  return counts;
}

Ordering ordering_from(const Instance& inst, const std::vector<std::string>& names) {
  auto ord = Ordering::from_names(inst, names);
  REQUIRE(ord.has_value());
  return *ord;
}

BetweennessInstance random_bw(std::size_t n, std::size_t m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  BetweennessInstance bw;
  for (std::size_t i = 0; i < n; ++i) bw.elements.push_back(std::string(1, char('a' + i)));
  for (std::size_t t = 0; t < m; ++t) {
    std::size_t a = rng.below(n), b = rng.below(n), c = rng.below(n);
    while (b == a) b = rng.below(n);
    while (c == a || c == b) c = rng.below(n);
    bw.triples.push_back({bw.elements[a], bw.elements[b], bw.elements[c]});
  }
  return bw;
}

// Relative order of a set of role vertices in an ordering.
std::vector<std::string> read_order(const Instance& inst, const Ordering& ord,
                                    const std::vector<std::string>& names) {
  std::vector<std::pair<std::size_t, std::string>> ranked;
  for (const auto& name : names) {
    auto v = inst.find_vertex(name);
    REQUIRE(v.has_value());
    ranked.push_back({ord.rank_of(*v), name});
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<std::string> out;
  for (auto& [r, name] : ranked) out.push_back(name);
  return out;
}

}  // namespace

TEST_CASE("ordered triple gadget counts") {
  auto lab = build_triple_gadget(1, {"a", "b", "c"});
  CHECK(lab.instance.vertex_count() == 7);
  CHECK(lab.instance.edges().size() == 9);
  auto counts = color_counts(lab.instance);
  CHECK(counts[1] == 2);
  CHECK(counts[2] == 4);
  CHECK(counts[3] == 3);
  CHECK(is_well_formed(lab.instance));
}

TEST_CASE("order preserving gadget counts") {
  BetweennessInstance bw = random_bw(4, 1, 5);
  Triple t = bw.triples[0];
  auto odd = build_order_gadget(1, bw, &t);
  CHECK(odd.instance.vertex_count() == 7 * 4 + 4);  // 32
  // n paths of 7 edges plus 3 blue edges into the triple's element copies
  CHECK(odd.instance.edges().size() == 7 * 4 + 3);
  auto counts = color_counts(odd.instance);
  CHECK(counts[1] == 4 * 4);  // four red edges per path
  CHECK(counts[3] == 3 * 4);
  CHECK(counts[2] == 3);

  auto even = build_order_gadget(2, bw, nullptr);
  CHECK(even.instance.vertex_count() == 5);
  CHECK(even.instance.edges().size() == 4);
  CHECK(color_counts(even.instance)[1] == 4);

  CHECK_THROWS(build_order_gadget(1, bw, nullptr));
  CHECK_THROWS(build_order_gadget(2, bw, &t));
}

TEST_CASE("assemble_upbe3 vertex counts and well-formedness") {
  auto worked = assemble_upbe3(kWorked);
  CHECK(worked.instance.vertex_count() == 128);  // 8mn + 12m - n
  CHECK(worked.instance.page_count() == 3);
  CHECK(is_well_formed(worked.instance));

  BetweennessInstance small{{"a", "b", "c"}, {{"a", "b", "c"}}};
  auto lab = assemble_upbe3(small);
  CHECK(lab.instance.vertex_count() == 33);
  CHECK(is_well_formed(lab.instance));
}

TEST_CASE("assemblies are deterministic") {
  auto a = emit_instance(assemble_upbe3(kWorked).instance);
  auto b = emit_instance(assemble_upbe3(kWorked).instance);
  CHECK(a == b);
  auto c = emit_instance(assemble_umpbe4(kWorked).instance);
  auto d = emit_instance(assemble_umpbe4(kWorked).instance);
  CHECK(c == d);
}

TEST_CASE("witness_upbe3 validates on the worked example") {
  std::vector<std::string> phi{"a", "b", "c", "d"};
  auto witness = witness_upbe3(kWorked, phi);
  REQUIRE(witness.ok);
  auto lab = assemble_upbe3(kWorked);
  REQUIRE(witness.order.size() == lab.instance.vertex_count());
  Ordering ord = ordering_from(lab.instance, witness.order);
  auto report = validate_ordering(lab.instance, ord);
  if (!report.valid()) {
    for (std::size_t i = 0; i < report.violations.size() && i < 8; ++i) {
      MESSAGE(describe(lab.instance, report.violations[i]));
    }
  }
  CHECK(report.valid());

  // Even-block rank layout: r_j lands at j/2*(n+1)-1; s right after the blocks.
  CHECK(ord.rank_of(*lab.instance.find_vertex("r@2")) == 4);
  CHECK(ord.rank_of(*lab.instance.find_vertex("r@4")) == 9);
  CHECK(ord.rank_of(*lab.instance.find_vertex("s")) == 10);
}

TEST_CASE("witness_upbe3 validates across small satisfiable instances") {
  // All n=3 instances with m <= 2 (triples over {a,b,c}).
  std::vector<Triple> all_triples;
  std::vector<std::string> elems{"a", "b", "c"};
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) {
        if (a != b && b != c && a != c) all_triples.push_back({a, b, c});
      }
  REQUIRE(all_triples.size() == 6);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < all_triples.size(); ++i) {
    for (std::size_t j = 0; j < all_triples.size(); ++j) {
      BetweennessInstance bw{elems, {all_triples[i], all_triples[j]}};
      auto phi = solve_betweenness_bruteforce(bw);
      if (!phi) continue;
      auto witness = witness_upbe3(bw, *phi);
      REQUIRE(witness.ok);
      auto lab = assemble_upbe3(bw);
      Ordering ord = ordering_from(lab.instance, witness.order);
      CAPTURE(i);
      CAPTURE(j);
      CHECK(validate_ordering(lab.instance, ord).valid());
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("witness precondition is guarded") {
  std::vector<std::string> bad{"b", "a", "c", "d"};  // violates <a,b,c>
  CHECK_FALSE(witness_upbe3(kWorked, bad).ok);
  CHECK_FALSE(witness_umpbe4(kWorked, bad).ok);
}

TEST_CASE("extract_phi round trip") {
  std::vector<std::string> phi{"a", "b", "c", "d"};
  auto lab = assemble_upbe3(kWorked);
  auto witness = witness_upbe3(kWorked, phi);
  REQUIRE(witness.ok);
  Ordering ord = ordering_from(lab.instance, witness.order);
  auto extracted = extract_phi(lab, ord);
  CHECK(eval_betweenness(kWorked, extracted));
  bool same = extracted == phi;
  std::vector<std::string> reversed(phi.rbegin(), phi.rend());
  bool rev = extracted == reversed;
  CHECK((same || rev));
}

TEST_CASE("isolated triple gadget forces the sink dichotomy") {
  auto lab = build_triple_gadget(1, {"a", "b", "c"});
  Instance& inst = lab.instance;
  // Three fresh red out-edges to sinks pinned after h by green edges.
  for (const std::string e : {"a", "b", "c"}) {
    inst.add_vertex("sink/" + e);
    inst.add_edge(roles::prime(1, e), "sink/" + e, 1);
    inst.add_edge(roles::gadget_h(1), "sink/" + e, 3);
  }
  REQUIRE(is_well_formed(inst));
  auto result = enumerate_valid_orderings(inst);
  REQUIRE(result.complete);
  REQUIRE_FALSE(result.orderings.empty());
  std::set<std::vector<std::string>> sink_orders;
  for (const Ordering& ord : result.orderings) {
    sink_orders.insert(read_order(inst, ord, {"sink/a", "sink/b", "sink/c"}));
  }
  std::set<std::vector<std::string>> expected{
      {"sink/a", "sink/b", "sink/c"}, {"sink/c", "sink/b", "sink/a"}};
  CHECK(sink_orders == expected);
}

TEST_CASE("three-copy chain: outer copies agree, middle copy reversed") {
  // Distilled three-copy chain: element copies 1..3, roots, and the
  // inter-copy blue/green edges; r2 precedes r1 and r3, which precede their
  // copies, reproducing the nesting bottleneck of the full gadgets.
  Instance inst(3);
  std::vector<std::string> elems{"a", "b", "c"};
  for (int j = 1; j <= 3; ++j) {
    for (const auto& e : elems) inst.add_vertex(roles::element(j, e));
    inst.add_vertex(roles::root(j));
  }
  for (const auto& e : elems) {
    inst.add_edge(roles::element(2, e), roles::root(2), 1);
    inst.add_edge(roles::element(2, e), roles::element(1, e), 2);
    inst.add_edge(roles::element(2, e), roles::element(3, e), 3);
    inst.add_edge(roles::root(1), roles::element(1, e), 1);
    inst.add_edge(roles::root(3), roles::element(3, e), 1);
  }
  inst.add_edge(roles::root(2), roles::root(1), 1);
  inst.add_edge(roles::root(2), roles::root(3), 1);
  REQUIRE(is_well_formed(inst));

  auto result = enumerate_valid_orderings(inst);
  REQUIRE(result.complete);
  REQUIRE_FALSE(result.orderings.empty());
  for (const Ordering& ord : result.orderings) {
    auto copy = [&](int j) {
      std::vector<std::string> names;
      for (const auto& e : elems) names.push_back(roles::element(j, e));
      auto ranked = read_order(inst, ord, names);
      std::vector<std::string> order;
      for (auto& name : ranked) order.push_back(name.substr(name.find('/') + 1));
      return order;
    };
    auto c1 = copy(1), c2 = copy(2), c3 = copy(3);
    CHECK(c1 == c3);
    std::vector<std::string> rev(c2.rbegin(), c2.rend());
    CHECK(c1 == rev);
  }
}

TEST_CASE("assemble_umpbe4 is matching-partitioned and well-formed") {
  for (int iter = 0; iter < 12; ++iter) {
    std::size_t n = 3 + static_cast<std::size_t>(iter % 4);
    std::size_t m = 1 + static_cast<std::size_t>(iter % 3);
    BetweennessInstance bw = random_bw(n, m, 100 + static_cast<std::uint64_t>(iter));
    auto lab = assemble_umpbe4(bw);
    CAPTURE(n);
    CAPTURE(m);
    CHECK(is_well_formed(lab.instance));
    CHECK(is_matching_partition(lab.instance).ok);
  }
}

TEST_CASE("witness_umpbe4 validates for small instances") {
  for (std::size_t n : {3, 4, 5, 6}) {
    std::vector<std::string> elems;
    for (std::size_t i = 0; i < n; ++i) elems.push_back(std::string(1, char('a' + i)));
    for (std::size_t m : {std::size_t{1}, std::size_t{2}}) {
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        BetweennessInstance bw = random_bw(n, m, 4000 + seed);
        auto phi = solve_betweenness_bruteforce(bw);
        if (!phi) continue;
        auto witness = witness_umpbe4(bw, *phi);
        REQUIRE(witness.ok);
        auto lab = assemble_umpbe4(bw);
        REQUIRE(witness.order.size() == lab.instance.vertex_count());
        Ordering ord = ordering_from(lab.instance, witness.order);
        auto report = validate_ordering(lab.instance, ord);
        if (!report.valid()) {
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(seed);
          for (std::size_t i = 0; i < report.violations.size() && i < 8; ++i) {
            MESSAGE(describe(lab.instance, report.violations[i]));
          }
        }
        CHECK(report.valid());
      }
    }
  }
}

TEST_CASE("umpbe4 single-triple instance is feasible via its witness") {
  BetweennessInstance bw{{"a", "b", "c"}, {{"a", "b", "c"}}};
  auto phi = solve_betweenness_bruteforce(bw);
  REQUIRE(phi.has_value());
  auto witness = witness_umpbe4(bw, *phi);
  REQUIRE(witness.ok);
  auto lab = assemble_umpbe4(bw);
  Ordering ord = ordering_from(lab.instance, witness.order);
  CHECK(validate_ordering(lab.instance, ord).valid());
}

TEST_CASE("extract_phi works for the 4-page reduction too") {
  std::vector<std::string> phi{"a", "b", "c", "d"};
  auto lab = assemble_umpbe4(kWorked);
  auto witness = witness_umpbe4(kWorked, phi);
  REQUIRE(witness.ok);
  Ordering ord = ordering_from(lab.instance, witness.order);
  REQUIRE(validate_ordering(lab.instance, ord).valid());
  auto extracted = extract_phi(lab, ord);
  CHECK(eval_betweenness(kWorked, extracted));
}

// The 4-page triple gadget with a permutation-capable red tail (so the
// element order is not biased by the fixture) and the chained inter-copy fan
// a middle copy receives. The fan's own nesting imposes one arm; the gadget
// must force exactly that arm and nothing else.
static Instance umpbe4_gadget_fixture(bool fan_ascending) {
  Instance inst(4);
  const int i = 1;
  for (const auto& v :
       {roles::gadget_l(i), roles::gadget_alpha(i), roles::gadget_omega(i)}) {
    inst.add_vertex(v);
  }
  for (const std::string e : {"a", "b", "c"}) inst.add_vertex(roles::prime(i, e));
  inst.add_vertex(roles::gadget_h(i));
  inst.add_vertex(roles::gadget_guard(i));
  inst.add_vertex(roles::root(i));
  for (const std::string v : {"w", "w2", "u/a", "u/b", "u/c"}) inst.add_vertex(v);
  for (const std::string e : {"a", "b", "c"}) inst.add_vertex(roles::element(i, e));
  for (const std::string v : {"fG/a", "fG/b", "fG/c", "fY/a", "fY/b", "fY/c"}) {
    inst.add_vertex(v);
  }
  inst.add_edge(roles::gadget_l(i), roles::gadget_alpha(i), 3);
  inst.add_edge(roles::gadget_l(i), roles::gadget_omega(i), 2);
  inst.add_edge(roles::gadget_alpha(i), roles::prime(i, "a"), 4);
  inst.add_edge(roles::gadget_alpha(i), roles::prime(i, "b"), 1);
  inst.add_edge(roles::gadget_omega(i), roles::prime(i, "b"), 4);
  inst.add_edge(roles::gadget_omega(i), roles::prime(i, "c"), 1);
  for (const std::string e : {"a", "b", "c"}) {
    inst.add_edge(roles::prime(i, e), roles::element(i, e), 2);
  }
  inst.add_edge(roles::prime(i, "b"), roles::gadget_h(i), 3);
  inst.add_edge(roles::prime(i, "c"), roles::gadget_guard(i), 3);
  inst.add_edge(roles::gadget_h(i), roles::root(i), 4);
  inst.add_edge(roles::gadget_guard(i), roles::root(i), 1);
  inst.add_edge(roles::root(i), "w", 3);
  inst.add_edge("w", "u/a", 4);
  inst.add_edge("w", "w2", 2);
  inst.add_edge("w2", "u/b", 4);
  inst.add_edge("w2", "u/c", 3);
  inst.add_edge("u/a", roles::element(i, "a"), 1);
  inst.add_edge("u/b", roles::element(i, "b"), 1);
  inst.add_edge("u/c", roles::element(i, "c"), 1);
  std::vector<std::string> chain;
  if (fan_ascending) {
    chain = {"fG/a", "fG/b", "fG/c", "fY/a", "fY/b", "fY/c"};
  } else {
    chain = {"fG/c", "fG/b", "fG/a", "fY/c", "fY/b", "fY/a"};
  }
  inst.add_edge(roles::gadget_h(i), chain[0], 1);
  for (int q = 0; q + 1 < 6; ++q) {
    inst.add_edge(chain[static_cast<std::size_t>(q)],
                  chain[static_cast<std::size_t>(q + 1)], q % 2 == 0 ? 2 : 1);
  }
  for (const std::string e : {"a", "b", "c"}) {
    inst.add_edge("fG/" + e, roles::element(i, e), 3);
    inst.add_edge("fY/" + e, roles::element(i, e), 4);
  }
  return inst;
}

TEST_CASE("4-page triple gadget forces the element dichotomy") {
  for (bool ascending : {true, false}) {
    Instance inst = umpbe4_gadget_fixture(ascending);
    REQUIRE(is_well_formed(inst));
    REQUIRE(is_matching_partition(inst).ok);

    SearchStats stats;
    std::set<std::vector<std::string>> element_orders;
    std::size_t found = 0;
    bool complete = for_each_valid_ordering(
        inst, SearchConfig{},
        [&](const Ordering& ord) {
          ++found;
          std::vector<std::pair<std::size_t, std::string>> ranked;
          for (const std::string e : {"a", "b", "c"}) {
            ranked.push_back(
                {ord.rank_of(*inst.find_vertex(roles::element(1, e))), e});
          }
          std::sort(ranked.begin(), ranked.end());
          element_orders.insert(
              {ranked[0].second, ranked[1].second, ranked[2].second});
          return true;
        },
        &stats);
    CAPTURE(ascending);
    CAPTURE(found);
    CHECK(complete);
    REQUIRE(found > 0);
    // A fan arriving in (a,b,c) order nests only around the reversed copy.
    std::set<std::vector<std::string>> expected;
    if (ascending) {
      expected = {{"c", "b", "a"}};
    } else {
      expected = {{"a", "b", "c"}};
    }
    CHECK(element_orders == expected);
  }
}

TEST_CASE("builders reject malformed betweenness input") {
  CHECK_THROWS(assemble_upbe3(BetweennessInstance{{"a", "b", "c"}, {}}));
  CHECK_THROWS(assemble_upbe3(BetweennessInstance{{"a", "b"}, {{"a", "b", "a"}}}));
  CHECK_THROWS(
      assemble_umpbe4(BetweennessInstance{{"a", "b", "c"}, {{"a", "a", "c"}}}));
}
