#include "mckay/cyclotomic.hpp"

#include <cctype>
#include <limits>

namespace mckay {
namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  Cyclotomic parse() {
    if (text_.empty()) fail("empty literal");
    Cyclotomic value;
    bool negate = consume('-');
    add(value, negate);
    while (pos_ < text_.size()) {
      if (consume('+'))
        add(value, false);
      else if (consume('-'))
        add(value, true);
      else
        fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cyclotomic literal: " + what + " at position " + std::to_string(pos_), pos_);
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  Integer uint() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void add(Cyclotomic& value, bool negate) {
    const std::size_t at = pos_;
    Cyclotomic t = term();
    try {
      value += negate ? -t : t;
    } catch (const DomainError&) {
      pos_ = at;
      fail("terms need a common conductor above " + std::to_string(kMaxConductor));
    }
  }

  Cyclotomic term() {
    if (peek('E')) return root();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Rational c = coeff();
      if (consume('*')) return root() * c;
      return Cyclotomic(std::move(c));
    }
    fail("expected coefficient or E(");
  }

  Rational coeff() {
    Integer num = uint();
    if (!consume('/')) return Rational(num);
    const std::size_t at = pos_;
    Integer den = uint();
    if (den == 0) {
      pos_ = at;
      fail("zero denominator");
    }
    return make_rational(num, den);
  }

  Cyclotomic root() {
    expect('E');
    expect('(');
    const std::size_t at = pos_;
    Integer n = uint();
    if (n == 0 || n > kMaxConductor) {
      pos_ = at;
      fail(n == 0 ? "conductor 0" : "conductor too large");
    }
    expect(')');
    Integer k = 1;
    if (consume('^')) k = uint();
    const auto conductor = static_cast<std::uint32_t>(n.get_ui());
    const Integer reduced = k % n;
    return Cyclotomic::root_of_unity(conductor, reduced.get_ui());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string abs_rational(const Rational& r) { return to_string(Rational(abs(r))); }

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text) { return LiteralParser(text).parse(); }

std::string render(const Cyclotomic& value) {
  const Cyclotomic v = value.minimized();
  if (auto r = v.to_rational()) return to_string(*r);
  const auto coeffs = v.coefficients();
  const std::string root = "E(" + std::to_string(v.conductor()) + ")";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    if (k == 0) {
      out += abs_rational(c);
      continue;
    }
    if (abs(c) != 1) out += abs_rational(c) + "*";
    out += root;
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace mckay
