#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bookfold/betweenness.hpp"
#include "bookfold/core.hpp"

namespace bookfold {

// Line-based text formats. '#' starts a comment, blank lines are ignored.
//
// Instance file:       upbe <k>
//                      v <name>
//                      e <src> <dst> <page>
// Betweenness file:    betweenness
//                      elem <name> <name> ...
//                      triple <a> <b> <c>
// Ordering file:       one vertex name per line, in pi order.

template <typename T>
struct Parsed {
  std::optional<T> value;
  std::string error;  // "line N: ..." on failure
  explicit operator bool() const { return value.has_value(); }
};

Parsed<Instance> parse_instance(std::string_view text);
std::string emit_instance(const Instance& inst);

Parsed<BetweennessInstance> parse_betweenness(std::string_view text);
std::string emit_betweenness(const BetweennessInstance& bw);

Parsed<std::vector<std::string>> parse_name_list(std::string_view text);
std::string emit_name_list(const std::vector<std::string>& names);

}  // namespace bookfold
