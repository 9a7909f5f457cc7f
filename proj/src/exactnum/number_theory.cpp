#include "mckay/exact.hpp"

#include <algorithm>

namespace mckay {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  auto f = factorize(q);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer p_part(const Integer& m, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("p_part: " + std::to_string(p) + " is not prime");
  if (m == 0) throw DomainError("p_part: m must be positive");
  Integer rest = abs(m);
  Integer result = 1;
  const Integer prime(static_cast<unsigned long>(p));
  while (rest % prime == 0) {
    rest /= prime;
    result *= prime;
  }
  return result;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, unsigned long exponent) {
  return make_rational(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace mckay
