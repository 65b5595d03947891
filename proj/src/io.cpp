#include "bookfold/io.hpp"

#include <charconv>
#include <sstream>

namespace bookfold {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<int> parse_int(const std::string& s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Applies fn(line_no, tokens) to every non-empty line; fn returns an error
// string or empty.
template <typename Fn>
std::string for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tokens = tokenize(text.substr(pos, end - pos));
    if (!tokens.empty()) {
      std::string err = fn(line_no, tokens);
      if (!err.empty()) return "line " + std::to_string(line_no) + ": " + err;
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return {};
}

}  // namespace

Parsed<Instance> parse_instance(std::string_view text) {
  Instance inst;
  bool header_seen = false;
  std::string err = for_each_line(text, [&](std::size_t, const std::vector<std::string>& tok) -> std::string {
    if (!header_seen) {
      if (tok[0] != "upbe" || tok.size() != 2) return "expected header 'upbe <k>'";
      auto k = parse_int(tok[1]);
      if (!k || *k < 1) return "page count must be a positive integer";
      inst = Instance(*k);
      header_seen = true;
      return {};
    }
    if (tok[0] == "v") {
      if (tok.size() != 2) return "expected 'v <name>'";
      if (inst.find_vertex(tok[1])) return "duplicate vertex '" + tok[1] + "'";
      inst.add_vertex(tok[1]);
      return {};
    }
    if (tok[0] == "e") {
      if (tok.size() != 4) return "expected 'e <src> <dst> <page>'";
      auto page = parse_int(tok[3]);
      if (!page) return "page must be an integer";
      inst.add_edge(tok[1], tok[2], *page);
      return {};
    }
    return "unknown directive '" + tok[0] + "'";
  });
  if (!err.empty()) return {std::nullopt, err};
  if (!header_seen) return {std::nullopt, "line 1: expected header 'upbe <k>'"};
  return {std::move(inst), {}};
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  out << "upbe " << inst.page_count() << "\n";
  for (std::size_t v = 0; v < inst.vertex_count(); ++v) {
    out << "v " << inst.vertex_name(v) << "\n";
  }
  for (const Edge& e : inst.edges()) {
    out << "e " << inst.vertex_name(e.src) << " " << inst.vertex_name(e.dst) << " "
        << e.page.value << "\n";
  }
  return out.str();
}

Parsed<BetweennessInstance> parse_betweenness(std::string_view text) {
  BetweennessInstance bw;
  bool header_seen = false;
  std::string err = for_each_line(text, [&](std::size_t, const std::vector<std::string>& tok) -> std::string {
    if (!header_seen) {
      if (tok[0] != "betweenness" || tok.size() != 1) return "expected header 'betweenness'";
      header_seen = true;
      return {};
    }
    if (tok[0] == "elem") {
      for (std::size_t i = 1; i < tok.size(); ++i) bw.elements.push_back(tok[i]);
      return {};
    }
    if (tok[0] == "triple") {
      if (tok.size() != 4) return "expected 'triple <a> <b> <c>'";
      bw.triples.push_back({tok[1], tok[2], tok[3]});
      return {};
    }
    return "unknown directive '" + tok[0] + "'";
  });
  if (!err.empty()) return {std::nullopt, err};
  if (!header_seen) return {std::nullopt, "line 1: expected header 'betweenness'"};
  return {std::move(bw), {}};
}

std::string emit_betweenness(const BetweennessInstance& bw) {
  std::ostringstream out;
  out << "betweenness\n";
  if (!bw.elements.empty()) {
    out << "elem";
    for (const auto& e : bw.elements) out << " " << e;
    out << "\n";
  }
  for (const Triple& t : bw.triples) {
    out << "triple " << t.a << " " << t.b << " " << t.c << "\n";
  }
  return out.str();
}

Parsed<std::vector<std::string>> parse_name_list(std::string_view text) {
  std::vector<std::string> names;
  std::string err = for_each_line(text, [&](std::size_t, const std::vector<std::string>& tok) -> std::string {
    if (tok.size() != 1) return "expected one name per line";
    names.push_back(tok[0]);
    return {};
  });
  if (!err.empty()) return {std::nullopt, err};
  return {std::move(names), {}};
}

std::string emit_name_list(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    out += n;
    out += "\n";
  }
  return out;
}

}  // namespace bookfold
