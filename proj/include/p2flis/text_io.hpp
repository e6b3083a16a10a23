#pragma once

// Small helpers shared by the line-based file formats.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "p2flis/error.hpp"

namespace p2flis::textio {

/// Reads the next line, failing with a message naming the format if none is left.
inline std::string next_line(std::istream& is, const char* format) {
  std::string line;
  if (!std::getline(is, line)) fail(ErrorKind::Invalid, std::string(format) + ": unexpected end of input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

inline std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string w; ss >> w;) out.push_back(w);
  return out;
}

inline long long to_int(const std::string& s, const char* format) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) fail(ErrorKind::Invalid, std::string(format) + ": expected integer, got '" + s + "'");
  return v;
}

inline void expect_header(std::istream& is, const char* header) {
  if (next_line(is, header) != header) fail(ErrorKind::Invalid, std::string("missing header '") + header + "'");
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Invalid, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void dump(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Invalid, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorKind::Invalid, "write failed for '" + path + "'");
}

}  // namespace p2flis::textio
