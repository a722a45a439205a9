#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abslab/tree.hpp"

namespace abslab {

/// Error in the tree text format. `line()` is 1-based; `what()` names the
/// source and the line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, const std::string& message);
  int line() const { return line_; }
  const std::string& source() const { return source_; }

 private:
  std::string source_;
  int line_;
};

// Tree text format:
//   n
//   u v        (n-1 lines, 0 <= u < v < n, ASCII decimal)
// every line newline-terminated.

Tree parse_tree(std::string_view text, const std::string& source = "<input>");
Tree read_tree_file(const std::filesystem::path& path);
std::string format_tree(const Tree& t);

/// Records separated by blank lines, as written by `format_tree_stream`.
std::vector<Tree> parse_tree_stream(std::string_view text, const std::string& source = "<input>");
std::string format_tree_stream(const std::vector<Tree>& trees);

}  // namespace abslab
