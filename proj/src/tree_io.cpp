#include "abslab/tree_io.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace abslab {

ParseError::ParseError(std::string source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)),
      line_(line) {}

namespace {

struct Line {
  int number;
  std::string_view text;
};

// Splits into newline-terminated lines. A missing final newline is reported
// against the last line.
std::vector<Line> split_lines(std::string_view text, int first_line, const std::string& source) {
  std::vector<Line> lines;
  int number = first_line;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      throw ParseError(source, number, "line is not newline-terminated");
    lines.push_back({number++, text.substr(pos, end - pos)});
    pos = end + 1;
  }
  return lines;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty() || s.front() == '+' || s.front() == '-') return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

Tree parse_record(const std::vector<Line>& lines, const std::string& source) {
  if (lines.empty()) throw ParseError(source, 1, "empty input, expected the vertex count");
  int n = 0;
  if (!parse_int(lines[0].text, n) || n < 1)
    throw ParseError(source, lines[0].number, "expected a positive vertex count, got '" +
                                                  std::string(lines[0].text) + "'");
  if (static_cast<int>(lines.size()) - 1 < n - 1) {
    int at = lines.back().number;
    throw ParseError(source, at, "graph is disconnected: expected " + std::to_string(n - 1) +
                                     " edge lines, found " + std::to_string(lines.size() - 1));
  }
  if (static_cast<int>(lines.size()) - 1 > n - 1)
    throw ParseError(source, lines[static_cast<std::size_t>(n)].number,
                     "unexpected extra line, a tree on " + std::to_string(n) + " vertices has " +
                         std::to_string(n - 1) + " edges");

  DisjointSets components(n);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto space = line.text.find(' ');
    int u = 0;
    int v = 0;
    if (space == std::string_view::npos || !parse_int(line.text.substr(0, space), u) ||
        !parse_int(line.text.substr(space + 1), v))
      throw ParseError(source, line.number, "expected 'u v', got '" + std::string(line.text) + "'");
    if (!(u < v)) throw ParseError(source, line.number, "edge endpoints must satisfy u < v");
    if (v >= n)
      throw ParseError(source, line.number, "vertex " + std::to_string(v) + " out of range 0.." +
                                                std::to_string(n - 1));
    if (!components.unite(u, v))
      throw ParseError(source, line.number,
                       "edge " + std::to_string(u) + " " + std::to_string(v) + " closes a cycle");
    edges.push_back({u, v});
  }
  return Tree(n, std::move(edges));
}

}  // namespace

Tree parse_tree(std::string_view text, const std::string& source) {
  return parse_record(split_lines(text, 1, source), source);
}

Tree read_tree_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tree(buffer.str(), path.string());
}

std::string format_tree(const Tree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (const auto& e : t.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::vector<Tree> parse_tree_stream(std::string_view text, const std::string& source) {
  std::vector<Tree> trees;
  std::vector<Line> record;
  for (const auto& line : split_lines(text, 1, source)) {
    if (line.text.empty()) {
      if (!record.empty()) trees.push_back(parse_record(record, source));
      record.clear();
    } else {
      record.push_back(line);
    }
  }
  if (!record.empty()) trees.push_back(parse_record(record, source));
  return trees;
}

std::string format_tree_stream(const std::vector<Tree>& trees) {
  std::string out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i) out += "\n";
    out += format_tree(trees[i]);
  }
  return out;
}

}  // namespace abslab
