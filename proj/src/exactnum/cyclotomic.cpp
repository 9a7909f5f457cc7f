#include "mckay/cyclotomic.hpp"

#include <cmath>
#include <numeric>

namespace mckay {
namespace {

bool rational_valued(std::span<const Rational> coeffs) {
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) return false;
  return true;
}

void add_scaled_row(std::vector<Rational>& out, const std::vector<long>& row, const Rational& c) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    if (row[i] == 1)
      out[i] += c;
    else if (row[i] == -1)
      out[i] -= c;
    else
      out[i] += c * row[i];
  }
}

// Reduces sum_k dense[k] x^k into the power basis of Q(zeta_n).
std::vector<Rational> reduce_dense(const CyclotomicField& field, const std::vector<Rational>& dense) {
  std::vector<Rational> out(field.degree);
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (sgn(dense[k]) == 0) continue;
    const std::size_t e = k % field.conductor;
    if (e < field.degree)
      out[e] += dense[k];
    else
      add_scaled_row(out, field.power_rows[e], dense[k]);
  }
  return out;
}

int legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  std::uint64_t result = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

Cyclotomic sqrt_prime(std::uint64_t p) {
  if (p == 2) return Cyclotomic::root_of_unity(8, 1) - Cyclotomic::root_of_unity(8, 3);
  // Quadratic Gauss sum: sqrt(p) if p = 1 mod 4, i*sqrt(p) if p = 3 mod 4.
  std::vector<std::pair<std::uint64_t, Rational>> terms;
  for (std::uint64_t k = 1; k < p; ++k) terms.emplace_back(k, Rational(legendre(k, p)));
  Cyclotomic gauss = Cyclotomic::from_terms(static_cast<std::uint32_t>(p), terms);
  if (p % 4 == 1) return gauss;
  return -(Cyclotomic::root_of_unity(4, 1) * gauss);
}

}  // namespace

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::uint64_t k) {
  const std::pair<std::uint64_t, Rational> term{k, Rational(1)};
  return from_terms(n, std::span(&term, 1));
}

Cyclotomic Cyclotomic::from_terms(std::uint32_t n,
                                  std::span<const std::pair<std::uint64_t, Rational>> terms) {
  const CyclotomicField& field = cyclotomic_field(n);
  std::vector<Rational> out(field.degree);
  for (const auto& [k, c] : terms) {
    if (sgn(c) == 0) continue;
    const std::size_t e = k % n;
    if (e < field.degree)
      out[e] += c;
    else
      add_scaled_row(out, field.power_rows[e], c);
  }
  return Cyclotomic(n, std::move(out));
}

Cyclotomic Cyclotomic::sqrt(long m) {
  if (m == 0) return Cyclotomic(0L);
  Cyclotomic result(1L);
  Integer square_part = 1;
  for (auto [p, e] : factorize(static_cast<std::uint64_t>(m < 0 ? -m : m))) {
    square_part *= ipow(Integer(static_cast<unsigned long>(p)), e / 2);
    if (e % 2 == 1) result = result * sqrt_prime(p);
  }
  if (m < 0) result = result * root_of_unity(4, 1);
  return result * Rational(square_part);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const { return rational_valued(coeffs_); }

std::optional<Rational> Cyclotomic::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(std::uint32_t m) const {
  if (m % conductor_ != 0) throw DomainError("lifted: target conductor must be a multiple");
  if (m == conductor_) return *this;
  if (is_rational()) {
    std::vector<Rational> out(cyclotomic_field(m).degree);
    out[0] = coeffs_[0];
    return Cyclotomic(m, std::move(out));
  }
  const std::uint64_t step = m / conductor_;
  std::vector<std::pair<std::uint64_t, Rational>> terms;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) terms.emplace_back(j * step, coeffs_[j]);
  return from_terms(m, terms);
}

Cyclotomic Cyclotomic::galois(std::uint64_t k) const {
  if (std::gcd<std::uint64_t>(k, conductor_) != 1)
    throw DomainError("galois: exponent not coprime to conductor");
  if (is_rational()) return *this;
  std::vector<std::pair<std::uint64_t, Rational>> terms;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) terms.emplace_back(j * k % conductor_, coeffs_[j]);
  return from_terms(conductor_, terms);
}

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) return *this;
  return galois(conductor_ - 1);
}

Cyclotomic Cyclotomic::minimized() const {
  if (is_rational()) return Cyclotomic(coeffs_[0]);
  const std::uint32_t n = conductor_;
  const CyclotomicField& big = cyclotomic_field(n);
  for (std::uint64_t m64 : divisors(n)) {
    const auto m = static_cast<std::uint32_t>(m64);
    if (m == n) break;
    if (m % 4 == 2 || m == 1) continue;
    bool fixed = true;
    for (std::uint64_t k = 1 + m; k < n && fixed; k += m)
      if (std::gcd<std::uint64_t>(k, n) == 1 && !(galois(k) == *this)) fixed = false;
    if (!fixed) continue;

    // Express this element in the power basis of Q(zeta_m).
    const CyclotomicField& small = cyclotomic_field(m);
    const std::uint64_t step = n / m;
    const std::size_t rows = big.degree, cols = small.degree;
    if (static_cast<std::uint64_t>(cols - 1) * step < rows) {
      std::vector<Rational> out(cols);
      for (std::size_t j = 0; j < cols; ++j) out[j] = coeffs_[j * step];
      return Cyclotomic(m, std::move(out));
    }
    // General case: solve the (rows x cols) system by elimination.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& row = big.power_rows[(j * step) % n];
      for (std::size_t i = 0; i < rows; ++i) a[i][j] = row[i];
    }
    for (std::size_t i = 0; i < rows; ++i) a[i][cols] = coeffs_[i];
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_of(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t r = pivot_row;
      while (r < rows && sgn(a[r][j]) == 0) ++r;
      if (r == rows) throw Error("minimized: singular embedding");
      std::swap(a[r], a[pivot_row]);
      const Rational inv = 1 / a[pivot_row][j];
      for (std::size_t c = j; c <= cols; ++c) a[pivot_row][c] *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == pivot_row || sgn(a[i][j]) == 0) continue;
        const Rational f = a[i][j];
        for (std::size_t c = j; c <= cols; ++c) a[i][c] -= f * a[pivot_row][c];
      }
      pivot_of[j] = pivot_row++;
    }
    std::vector<Rational> out(cols);
    for (std::size_t j = 0; j < cols; ++j) out[j] = a[pivot_of[j]][cols];
    return Cyclotomic(m, std::move(out));
  }
  return *this;
}

std::complex<double> Cyclotomic::embed() const {
  if (is_rational()) return {coeffs_[0].get_d(), 0.0};
  const CyclotomicField& field = cyclotomic_field(conductor_);
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (sgn(coeffs_[j]) != 0) sum += coeffs_[j].get_d() * field.roots[j];
  return sum;
}

double Cyclotomic::embed_error() const {
  double l1 = 0.0;
  for (const auto& c : coeffs_) l1 += std::abs(c.get_d());
  return 4e-16 * (static_cast<double>(coeffs_.size()) + 4.0) * l1;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rational_valued(rhs.coeffs_)) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  if (rational_valued(coeffs_)) {
    Rational c = coeffs_[0];
    *this = rhs;
    coeffs_[0] += c;
    return *this;
  }
  if (conductor_ != rhs.conductor_) {
    const std::uint32_t l = std::lcm(conductor_, rhs.conductor_);
    *this = lifted(l);
    Cyclotomic other = rhs.lifted(l);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_)
    if (sgn(c) != 0) c *= rhs;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& rhs) {
  if (sgn(rhs) == 0) throw DomainError("division by zero");
  for (auto& c : coeffs_)
    if (sgn(c) != 0) c /= rhs;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (rational_valued(b.coeffs_)) return a * b.coeffs_[0];
  if (rational_valued(a.coeffs_)) return b * a.coeffs_[0];
  if (a.conductor_ != b.conductor_) {
    const std::uint32_t l = std::lcm(a.conductor_, b.conductor_);
    return a.lifted(l) * b.lifted(l);
  }
  const CyclotomicField& field = cyclotomic_field(a.conductor_);
  const std::size_t d = field.degree;
  std::vector<Rational> dense(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      dense[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic(a.conductor_, reduce_dense(field, dense));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const bool ra = rational_valued(a.coeffs_), rb = rational_valued(b.coeffs_);
  if (ra || rb) return ra && rb && a.coeffs_[0] == b.coeffs_[0];
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint32_t l = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(l).coeffs_ == b.lifted(l).coeffs_;
}

Cyclotomic pow(const Cyclotomic& base, unsigned long exponent) {
  Cyclotomic result(1L);
  Cyclotomic square = base;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

void CyclotomicSum::add(const Cyclotomic& term) {
  const std::uint32_t n = term.is_rational() ? 1 : term.conductor();
  for (auto& bucket : buckets_) {
    if (bucket.conductor() == n) {
      bucket += term;
      return;
    }
  }
  buckets_.push_back(n == 1 ? Cyclotomic(term.coefficients()[0]) : term);
}

Cyclotomic CyclotomicSum::total() const {
  Cyclotomic out;
  for (const auto& bucket : buckets_) out += bucket;
  return out;
}

}  // namespace mckay
