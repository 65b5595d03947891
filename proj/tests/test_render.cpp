#include <doctest.h>

#include "bookfold/io.hpp"
#include "bookfold/render.hpp"

using namespace bookfold;

namespace {

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("element count law") {
  auto parsed = parse_instance("upbe 2\nv a\nv b\ne a b 1\n");
  REQUIRE(parsed);
  auto result = render_svg(*parsed.value, std::nullopt);
  REQUIRE(result.ok);
  CHECK(count_occurrences(result.svg, "<path ") == 1);
  CHECK(count_occurrences(result.svg, "<circle ") == 2);
  CHECK(count_occurrences(result.svg, "<polygon ") == 1);  // one arrowhead per edge
  CHECK(result.svg.find("stroke=\"red\"") != std::string::npos);
}

TEST_CASE("byte identical output") {
  auto parsed =
      parse_instance("upbe 4\nv a\nv b\nv c\ne a b 1\ne b c 2\ne a c 3\n");
  REQUIRE(parsed);
  auto one = render_svg(*parsed.value, std::nullopt);
  auto two = render_svg(*parsed.value, std::nullopt);
  REQUIRE(one.ok);
  CHECK(one.svg == two.svg);
}

TEST_CASE("ordering mismatch is an error") {
  auto parsed = parse_instance("upbe 1\nv a\nv b\ne a b 1\n");
  REQUIRE(parsed);
  auto bad = Ordering::from_sequence({0});
  REQUIRE(bad.has_value());
  auto result = render_svg(*parsed.value, *bad);
  CHECK_FALSE(result.ok);
  CHECK_FALSE(result.error.empty());
}

TEST_CASE("ordering controls x positions") {
  auto parsed = parse_instance("upbe 1\nv a\nv b\n");
  REQUIRE(parsed);
  auto flipped = Ordering::from_names(*parsed.value, std::vector<std::string>{"b", "a"});
  REQUIRE(flipped.has_value());
  auto with_order = render_svg(*parsed.value, *flipped);
  auto without = render_svg(*parsed.value, std::nullopt);
  REQUIRE(with_order.ok);
  CHECK(with_order.svg != without.svg);
}

TEST_CASE("extended palette cycles past page four") {
  RenderStyle style;
  CHECK(style.page_color(5) == "purple");
  CHECK(style.page_color(11) == "purple");
}
