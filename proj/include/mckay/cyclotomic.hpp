#pragma once

#include "mckay/exact.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mckay {

/// Precomputed data for Q(zeta_n): the cyclotomic polynomial and the reduction
/// of every power x^k (0 <= k < n) modulo it. Shared and immutable.
struct CyclotomicField {
  std::uint32_t conductor;
  std::uint32_t degree;                          // phi(n)
  std::vector<long> polynomial;                  // Phi_n, low to high, monic
  std::vector<std::vector<long>> power_rows;     // x^k mod Phi_n
  std::vector<std::complex<double>> roots;       // exp(2 pi i k / n)
};

/// Largest supported conductor. Field data takes n * phi(n) words, so this
/// keeps a single field under 64 MiB.
constexpr std::uint32_t kMaxConductor = 4096;

/// Field data for Q(zeta_n). Thread-safe; entries live for the process
/// lifetime. Throws DomainError for n = 0 or n > kMaxConductor.
const CyclotomicField& cyclotomic_field(std::uint32_t n);

/// Exact element of Q(zeta_n), stored in the power basis 1, z, ..., z^(phi(n)-1)
/// of z = exp(2 pi i / n). The conductor is whatever the producing operation
/// used; it is not minimized automatically (see minimized()).
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_(1) {}
  Cyclotomic(long value) : coeffs_{Rational(value)} {}  // NOLINT(implicit)
  Cyclotomic(const Integer& value) : coeffs_{Rational(value)} {}  // NOLINT
  Cyclotomic(Rational value) : coeffs_{std::move(value)} {}  // NOLINT

  /// E(n)^k.
  static Cyclotomic root_of_unity(std::uint32_t n, std::uint64_t k = 1);

  /// Principal square root of an integer (positive real for m > 0, i*sqrt|m|
  /// for m < 0), built from quadratic Gauss sums.
  static Cyclotomic sqrt(long m);

  /// Builds from arbitrary exponent/coefficient pairs in Q(zeta_n); the sum is
  /// reduced into the power basis.
  static Cyclotomic from_terms(std::uint32_t n,
                               std::span<const std::pair<std::uint64_t, Rational>> terms);

  std::uint32_t conductor() const { return conductor_; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value, if this element is rational.
  std::optional<Rational> to_rational() const;

  /// Same value in Q(zeta_m); m must be a multiple of the conductor.
  Cyclotomic lifted(std::uint32_t m) const;
  /// Same value expressed over the smallest possible conductor.
  Cyclotomic minimized() const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, conductor) = 1.
  Cyclotomic galois(std::uint64_t k) const;
  Cyclotomic conj() const;

  /// Floating-point embedding sum c_k exp(2 pi i k / n).
  std::complex<double> embed() const;
  /// Upper bound on |embed() - exact value|.
  double embed_error() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);
  Cyclotomic& operator/=(const Rational& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator*(const Rational& a, Cyclotomic b) { return b *= a; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& b) { return a /= b; }
  Cyclotomic operator-() const;

  /// Value equality (operands are lifted to a common conductor).
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::uint32_t n, std::vector<Rational> coeffs)
      : conductor_(n), coeffs_(std::move(coeffs)) {}

  std::uint32_t conductor_ = 1;
  std::vector<Rational> coeffs_;

  friend class CyclotomicSum;
};

Cyclotomic pow(const Cyclotomic& base, unsigned long exponent);

/// Accumulator that keeps one partial sum per conductor and lifts only when
/// the total is requested. Sums of Galois-stable families stay in their
/// bucket until the end, where they usually collapse to rationals.
class CyclotomicSum {
 public:
  void add(const Cyclotomic& term);
  Cyclotomic total() const;

 private:
  std::vector<Cyclotomic> buckets_;
};

/// Parses the cyclotomic literal grammar:
///   expr  := ['-'] term (('+'|'-') term)*
///   term  := coeff ['*' root] | root
///   root  := 'E(' uint ')' ['^' uint]
///   coeff := uint ['/' uint]
/// Throws ParseError with the byte position of the first offending character.
Cyclotomic parse_cyclotomic(std::string_view text);

/// Canonical literal: minimized conductor, exponents increasing, zero terms
/// omitted, unit coefficients and '^1' omitted.
std::string render(const Cyclotomic& value);

}  // namespace mckay
