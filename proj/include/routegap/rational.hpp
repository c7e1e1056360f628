#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace routegap {

/// Exact rational with 64-bit numerator and denominator.
///
/// Comparisons cross-multiply in 128-bit arithmetic, so values built from
/// path statistics (numerators up to ~1e13) never lose exactness the way a
/// double would on boundary cases.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1)
      : num_(numerator), den_(denominator) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Canonical "p/q" rendering, always with an explicit denominator.
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Parses the "p/q" form produced by str(); a bare integer is also accepted.
  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(text));
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rational operator*(const Rational& a, std::int64_t k) {
    // Reduce against the denominator first to keep intermediates in range.
    const std::int64_t g = std::gcd(k < 0 ? -k : k, a.den_);
    return Rational(a.num_ * (k / g), a.den_ / g);
  }
  friend Rational operator*(std::int64_t k, const Rational& a) { return a * k; }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace routegap
