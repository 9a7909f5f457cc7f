#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A malformed literal or document. `position` is a byte offset into the
/// offending text (for documents, into the innermost string that failed).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::string location = {})
      : Error(what), position_(position), location_(std::move(location)) {}

  std::size_t position() const { return position_; }
  const std::string& location() const { return location_; }

 private:
  std::size_t position_;
  std::string location_;
};

/// An argument outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// If q = p^f for a prime p, returns (p, f); otherwise (0, 0).
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Largest power of the prime p dividing m. Throws DomainError if p is not
/// prime or m is zero.
Integer p_part(const Integer& m, std::uint64_t p);

Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, unsigned long exponent);

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

}  // namespace mckay
