#include "mckay/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace mckay {
namespace {

int moebius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}.
std::vector<long> cyclotomic_polynomial(std::uint32_t n) {
  std::vector<long> poly{1};
  std::vector<std::uint64_t> denominators;
  for (std::uint64_t d : divisors(n)) {
    int mu = moebius(n / d);
    if (mu == 1) {
      std::vector<long> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      denominators.push_back(d);
    }
  }
  for (std::uint64_t d : denominators) {
    // Exact division by x^d - 1, from the top coefficient down.
    std::vector<long> quotient(poly.size() - d, 0);
    std::vector<long> rem = poly;
    for (std::size_t k = rem.size(); k-- > d;) {
      long c = rem[k];
      quotient[k - d] = c;
      rem[k] -= c;
      rem[k - d] += c;
    }
    poly = std::move(quotient);
  }
  return poly;
}

std::unique_ptr<CyclotomicField> make_field(std::uint32_t n) {
  auto field = std::make_unique<CyclotomicField>();
  field->conductor = n;
  field->polynomial = cyclotomic_polynomial(n);
  const std::size_t phi = field->polynomial.size() - 1;
  field->degree = static_cast<std::uint32_t>(phi);

  field->power_rows.assign(n, std::vector<long>(phi, 0));
  std::vector<long> row(phi, 0);
  row[0] = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    field->power_rows[k] = row;
    // row <- x * row mod Phi_n
    long top = row[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) row[i] = row[i - 1];
    row[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi; ++i) row[i] -= top * field->polynomial[i];
  }

  field->roots.resize(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    field->roots[k] = {std::cos(angle), std::sin(angle)};
  }
  return field;
}

}  // namespace

const CyclotomicField& cyclotomic_field(std::uint32_t n) {
  if (n == 0) throw DomainError("cyclotomic field of conductor 0");
  if (n > kMaxConductor)
    throw DomainError("cyclotomic field of conductor " + std::to_string(n) + " exceeds " + std::to_string(kMaxConductor));
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = make_field(n);
  return *slot;
}

}  // namespace mckay
