#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmine {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Corpus files hold one input per line; backslash, newline, tab and carriage
// return are escaped so every alphabet character round-trips byte-exactly.
inline std::string escape_input(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string unescape_input(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out.push_back(s[i]);
      continue;
    }
    if (i + 1 >= s.size()) throw IoError("dangling escape in corpus line");
    switch (s[++i]) {
      case '\\': out.push_back('\\'); break;
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'r': out.push_back('\r'); break;
      default: throw IoError("unknown escape in corpus line");
    }
  }
  return out;
}

inline void write_lines(const std::string& path, const std::vector<std::string>& inputs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  for (const std::string& s : inputs) out << escape_input(s) << '\n';
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(unescape_input(line));
  }
  return out;
}

}  // namespace gmine
