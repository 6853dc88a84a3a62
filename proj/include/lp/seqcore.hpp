// Exact sequence algebra: periodic autocorrelation, power spectral density,
// m-compression, and Legendre pair verification.
//
// Index conventions: sequences are 0-based lists. The m-compression of a
// length-l sequence (l = d*m) is the length-d sequence whose entry j sums the
// original entries at j, j+d, ..., j+(m-1)d.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a caller-supplied object violates a documented identity.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A +-1 sequence of length >= 1.
class PmOneSequence {
 public:
  PmOneSequence() = default;
  explicit PmOneSequence(std::vector<int> entries);

  std::span<const int> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int sum() const;

  /// Global negation when the entry sum is negative.
  PmOneSequence normalized() const;
  PmOneSequence negated() const;

  auto operator<=>(const PmOneSequence&) const = default;

 private:
  std::vector<int> entries_;
};

/// The m-compression of a +-1 sequence: entries share the parity of m and
/// are bounded by m in absolute value.
class CompressedSequence {
 public:
  CompressedSequence() = default;
  CompressedSequence(std::vector<int> entries, int factor);

  std::span<const int> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int factor() const { return factor_; }
  std::size_t original_length() const { return entries_.size() * static_cast<std::size_t>(factor_); }
  int sum() const;

  auto operator<=>(const CompressedSequence&) const = default;

 private:
  std::vector<int> entries_;
  int factor_ = 1;
};

struct PafVector {
  std::vector<std::int64_t> values;
};

/// rat + coef * sqrt(5), both exact rationals.
struct PsdExact {
  Rational rat;
  Rational coef;

  double to_double() const;
  /// The even integer x with coef = x / 2.
  std::int64_t x() const;

  bool operator==(const PsdExact&) const = default;
};

struct VerificationReport {
  bool is_legendre_pair = false;
  std::optional<std::size_t> failing_shift;
  std::optional<std::int64_t> x_value;
  std::optional<std::pair<PsdExact, PsdExact>> psd_at_m;
  /// Rational parts of PSD_A(l/5), PSD_B(l/5); for 3 | l without 5 | l, the
  /// integers PSD_A(l/3), PSD_B(l/3).
  std::optional<std::pair<std::int64_t, std::int64_t>> n1_n2;
};

std::int64_t paf(std::span<const int> seq, std::size_t shift);
PafVector paf_vector(std::span<const int> seq);

/// |sum_j a_j e^{2 pi i j k / l}|^2 in double precision.
double psd(std::span<const int> seq, std::size_t k);

CompressedSequence compress(const PmOneSequence& seq, int factor);

/// Power sum of squares and the degree-2 elementary symmetric polynomial.
std::int64_t power_sum_2(std::span<const int> seq);
std::int64_t elementary_2(std::span<const int> seq);

/// Closed form of PSD_A(m) for l = 5m, evaluated from the m-compression:
/// (p2 - e2/2) + (sqrt5/2)(PAF(1) - PAF(2)).
PsdExact psd_at_m_exact(const CompressedSequence& c);

/// Exact PAF test PAF_A(s) + PAF_B(s) = -2 for s = 1..l-1. Inputs with entry
/// sum -1 are negated first; other sums, even or unequal lengths throw.
VerificationReport verify_legendre_pair(const PmOneSequence& a, const PmOneSequence& b);

}  // namespace lp
