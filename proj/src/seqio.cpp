#include "lp/seqio.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace lp {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view token, std::string_view what) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

SequenceLine parse_sequence_line(std::string_view line) {
  SequenceLine out;
  line = trim(line);
  if (const auto semi = line.find(';'); semi != std::string_view::npos) {
    std::string_view header = trim(line.substr(0, semi));
    if (header.starts_with("ℓ=")) {
      header.remove_prefix(std::string_view("ℓ=").size());
    } else if (header.starts_with("l=")) {
      header.remove_prefix(2);
    } else {
      throw ParseError("unrecognised header '" + std::string(header) + "'");
    }
    out.declared_length = parse_number<std::size_t>(header, "length header");
    line = trim(line.substr(semi + 1));
  }
  if (!line.empty() && line.front() == '[') line.remove_prefix(1);
  if (!line.empty() && line.back() == ']') line.remove_suffix(1);
  if (trim(line).empty()) throw ParseError("empty sequence");

  std::size_t start = 0;
  while (start <= line.size()) {
    const std::size_t comma = line.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
    out.entries.push_back(parse_number<int>(line.substr(start, end - start), "entry"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.declared_length && *out.declared_length != out.entries.size()) {
    throw ParseError("header declares length " + std::to_string(*out.declared_length) + " but line has " +
                     std::to_string(out.entries.size()) + " entries");
  }
  return out;
}

std::vector<std::vector<int>> read_sequences(std::istream& in) {
  std::vector<std::vector<int>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      out.push_back(parse_sequence_line(t).entries);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<std::vector<int>> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_sequences(in);
}

std::string format_sequence(std::span<const int> entries, bool with_header) {
  std::ostringstream os;
  if (with_header) os << "ℓ=" << entries.size() << ';';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << entries[i];
  }
  return os.str();
}

}  // namespace lp
