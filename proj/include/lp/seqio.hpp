// Plain-text sequence format shared by every command:
//
//   [ℓ=<n>;]e0,e1,...,e_{n-1}
//
// One sequence per line. The header may be spelled "ℓ=" or "l=". Blank lines
// and lines starting with '#' are skipped by the multi-line reader.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SequenceLine {
  std::optional<std::size_t> declared_length;
  std::vector<int> entries;
};

SequenceLine parse_sequence_line(std::string_view line);
std::vector<std::vector<int>> read_sequences(std::istream& in);
std::vector<std::vector<int>> read_sequence_file(const std::string& path);

std::string format_sequence(std::span<const int> entries, bool with_header = true);

}  // namespace lp
