#include "mdl/spec_string.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <string>

namespace mdl {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    fail(ErrorCode::ParseError, "expected an integer in '" + std::string(context) + "', got '" + std::string(s) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::vector<int> call_args(std::string_view text) {
  const auto open = text.find('(');
  if (open != 1 && open != std::string_view::npos)
    fail(ErrorCode::InvalidSpec, "unknown graph family in '" + std::string(text) + "'");
  if (open == std::string_view::npos || text.back() != ')')
    fail(ErrorCode::ParseError, "expected NAME(args) in '" + std::string(text) + "'");
  std::vector<int> args;
  for (auto a : split(text.substr(open + 1, text.size() - open - 2), ',')) args.push_back(parse_int(a, text));
  return args;
}

void require_positive(const std::vector<int>& args, std::size_t count, std::string_view text) {
  if (count && args.size() != count)
    fail(ErrorCode::InvalidSpec, "'" + std::string(text) + "' takes " + std::to_string(count) + " argument(s)");
  for (int a : args)
    if (a <= 0) fail(ErrorCode::InvalidSpec, "arguments of '" + std::string(text) + "' must be positive");
}

}  // namespace

OrientedTree parse_tree_arcs(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail(ErrorCode::ParseError, "empty tree");
  std::vector<std::pair<std::string, std::string>> raw;
  std::vector<std::string> names;
  for (auto part : split(text, ',')) {
    part = trim(part);
    const auto gt = part.find('>');
    if (gt == std::string_view::npos) {
      if (part.empty()) fail(ErrorCode::ParseError, "empty tree node in '" + std::string(text) + "'");
      names.emplace_back(part);
      continue;
    }
    const std::string a(trim(part.substr(0, gt))), b(trim(part.substr(gt + 1)));
    if (a.empty() || b.empty() || b.find('>') != std::string::npos)
      fail(ErrorCode::ParseError, "bad arc '" + std::string(part) + "'");
    raw.emplace_back(a, b);
    names.push_back(a);
    names.push_back(b);
  }
  auto numeric = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::sort(names.begin(), names.end(), [&](const std::string& x, const std::string& y) {
    if (numeric(x) && numeric(y) && x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::map<std::string, int> id;
  for (const auto& s : names) id.emplace(s, static_cast<int>(id.size()));
  OrientedTree t;
  t.nodes = static_cast<int>(names.size());
  for (const auto& [a, b] : raw) t.arcs.emplace_back(id.at(a), id.at(b));
  t.validate();
  return t;
}

PlaneBipartiteGraph parse_graph_spec(std::string_view text, bool optimize_trees) {
  text = trim(text);
  if (text.empty()) fail(ErrorCode::ParseError, "empty graph spec");
  if (text.rfind("link:", 0) == 0) {
    std::vector<PlaneBipartiteGraph> parts;
    for (auto p : split(text.substr(5), '+')) {
      p = trim(p);
      if (p.rfind("link:", 0) == 0) fail(ErrorCode::ParseError, "nested link");
      parts.push_back(parse_graph_spec(p, optimize_trees));
    }
    return link_components(parts);
  }
  if (text.rfind("tree:", 0) == 0) return tree_to_outerplane(parse_tree_arcs(text.substr(5)), optimize_trees);
  const auto args = call_args(text);
  switch (text.front()) {
    case 'L':
      require_positive(args, 0, text);
      return truncated_parallelogram({args}).graph;
    case 'P':
      require_positive(args, 2, text);
      return truncated_parallelogram(TruncatedParallelogramSpec::parallelogram(args[0], args[1])).graph;
    case 'T':
      require_positive(args, 1, text);
      return truncated_parallelogram(TruncatedParallelogramSpec::prolate_triangle(args[0])).graph;
    case 'C':
      require_positive(args, 1, text);
      return even_cycle(args[0]);
    default:
      fail(ErrorCode::InvalidSpec, "unknown graph family in '" + std::string(text) + "'");
  }
}

}  // namespace mdl
