#include "lp/seqcore.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>

namespace lp {

namespace {

int entry_sum(std::span<const int> v) { return std::accumulate(v.begin(), v.end(), 0); }

std::int64_t to_int64(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw std::domain_error("rational value is not an integer");
  }
  return static_cast<std::int64_t>(boost::multiprecision::numerator(r));
}

}  // namespace

PmOneSequence::PmOneSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("sequence must be non-empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != 1 && entries_[i] != -1) {
      throw ValidationError("entry " + std::to_string(i) + " is not +-1");
    }
  }
}

int PmOneSequence::sum() const { return entry_sum(entries_); }

PmOneSequence PmOneSequence::negated() const {
  auto out = entries_;
  for (auto& v : out) v = -v;
  return PmOneSequence(std::move(out));
}

PmOneSequence PmOneSequence::normalized() const { return sum() < 0 ? negated() : *this; }

CompressedSequence::CompressedSequence(std::vector<int> entries, int factor)
    : entries_(std::move(entries)), factor_(factor) {
  if (factor_ < 1) throw ValidationError("compression factor must be >= 1");
  if (entries_.empty()) throw ValidationError("compressed sequence must be non-empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const int v = entries_[i];
    if (std::abs(v) > factor_ || (v - factor_) % 2 != 0) {
      throw ValidationError("compressed entry " + std::to_string(i) + " = " + std::to_string(v) +
                                  " is outside the alphabet of factor " + std::to_string(factor_));
    }
  }
}

int CompressedSequence::sum() const { return entry_sum(entries_); }

double PsdExact::to_double() const {
  return static_cast<double>(rat) + static_cast<double>(coef) * std::sqrt(5.0);
}

std::int64_t PsdExact::x() const { return to_int64(coef * 2); }

std::int64_t paf(std::span<const int> seq, std::size_t shift) {
  const std::size_t n = seq.size();
  if (shift >= n) {
    throw std::out_of_range("shift " + std::to_string(shift) + " out of range for length " + std::to_string(n));
  }
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = i + shift;
    if (j >= n) j -= n;
    acc += static_cast<std::int64_t>(seq[i]) * seq[j];
  }
  return acc;
}

PafVector paf_vector(std::span<const int> seq) {
  PafVector out;
  out.values.resize(seq.size());
  for (std::size_t s = 0; s < seq.size(); ++s) out.values[s] = paf(seq, s);
  return out;
}

double psd(std::span<const int> seq, std::size_t k) {
  const std::size_t n = seq.size();
  if (k >= n) throw std::out_of_range("frequency index out of range");
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    // Reduce the phase index first so large j*k keeps full precision.
    const double phase = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
    acc += static_cast<double>(seq[j]) * std::polar(1.0, phase);
  }
  return std::norm(acc);
}

CompressedSequence compress(const PmOneSequence& seq, int factor) {
  if (factor < 1) throw std::invalid_argument("compression factor must be >= 1");
  const std::size_t n = seq.size();
  const auto m = static_cast<std::size_t>(factor);
  if (n % m != 0) {
    throw std::invalid_argument("compression factor " + std::to_string(factor) + " does not divide length " +
                                std::to_string(n));
  }
  const std::size_t d = n / m;
  std::vector<int> out(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < m; ++i) out[j] += seq[j + i * d];
  }
  return CompressedSequence(std::move(out), factor);
}

std::int64_t power_sum_2(std::span<const int> seq) {
  std::int64_t acc = 0;
  for (int v : seq) acc += static_cast<std::int64_t>(v) * v;
  return acc;
}

std::int64_t elementary_2(std::span<const int> seq) {
  // e2 = ((sum)^2 - p2) / 2
  const std::int64_t s = entry_sum(seq);
  return (s * s - power_sum_2(seq)) / 2;
}

PsdExact psd_at_m_exact(const CompressedSequence& c) {
  if (c.size() != 5) {
    throw std::invalid_argument("exact PSD-at-m needs a length-5 compression, got length " + std::to_string(c.size()));
  }
  const auto e = c.entries();
  PsdExact out;
  out.rat = Rational(power_sum_2(e)) - Rational(elementary_2(e), 2);
  out.coef = Rational(paf(e, 1) - paf(e, 2), 2);
  return out;
}

VerificationReport verify_legendre_pair(const PmOneSequence& a_in, const PmOneSequence& b_in) {
  const std::size_t n = a_in.size();
  if (b_in.size() != n) {
    throw std::invalid_argument("length mismatch: " + std::to_string(n) + " vs " + std::to_string(b_in.size()));
  }
  if (n % 2 == 0) throw std::invalid_argument("Legendre pairs need odd length, got " + std::to_string(n));
  if (std::abs(a_in.sum()) != 1 || std::abs(b_in.sum()) != 1) {
    throw std::invalid_argument("entry sums must be +-1 (got " + std::to_string(a_in.sum()) + ", " +
                                std::to_string(b_in.sum()) + ")");
  }
  const PmOneSequence a = a_in.normalized();
  const PmOneSequence b = b_in.normalized();

  VerificationReport report;
  report.is_legendre_pair = true;
  for (std::size_t s = 1; s < n; ++s) {
    if (paf(a.entries(), s) + paf(b.entries(), s) != -2) {
      report.is_legendre_pair = false;
      report.failing_shift = s;
      break;
    }
  }

  if (n % 5 == 0) {
    const int m = static_cast<int>(n / 5);
    const PsdExact pa = psd_at_m_exact(compress(a, m));
    const PsdExact pb = psd_at_m_exact(compress(b, m));
    report.x_value = pa.x();
    report.n1_n2 = std::make_pair(to_int64(pa.rat), to_int64(pb.rat));
    report.psd_at_m = std::make_pair(pa, pb);
  } else if (n % 3 == 0) {
    // Cube roots of unity: PSD(l/3) = p2 - e2 of the 3-compression, an integer.
    const int m = static_cast<int>(n / 3);
    const auto split = [m](const PmOneSequence& s) {
      const auto c = compress(s, m);
      return power_sum_2(c.entries()) - elementary_2(c.entries());
    };
    report.n1_n2 = std::make_pair(split(a), split(b));
  }
  return report;
}

}  // namespace lp
