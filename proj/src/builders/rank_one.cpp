#include "mckay/builders.hpp"

#include <functional>
#include <numeric>

namespace mckay {
namespace {

// Generic character tables of SL2(q), PSL2(q), PGL2(q). The split torus is
// generated by a = diag(r, r^-1) (diag(r, 1) in PGL2) with r a generator of
// F_q^*, the nonsplit torus by an element b of order q+1 (mod scalars in
// PGL2). Character parameters i, j index the characters r^l -> E(q-1)^{il}
// and b^m -> E(q+1)^{jm} of the two tori.

enum class Kind { identity, centre, unipotent1, unipotent2, centre_unipotent1, centre_unipotent2, split, nonsplit };

struct ClassSpec {
  Kind kind;
  std::uint64_t param = 0;
  std::string name;
  Integer size;
  std::uint64_t order;
  std::optional<std::string> image;
};

struct CharSpec {
  std::string name;
  std::function<Cyclotomic(const ClassSpec&)> value;
};

struct FieldData {
  std::uint64_t q, p;
  unsigned f;
};

FieldData check_field(std::uint64_t q, const char* what) {
  auto [p, f] = prime_power(q);
  if (p == 0)
    throw DomainError(std::string(what) + ": q = " + std::to_string(q) + " is not a prime power");
  if (q < kMinLieField || q > kMaxLieField)
    throw DomainError(std::string(what) + ": q = " + std::to_string(q) + " outside [" + std::to_string(kMinLieField) +
                      ", " + std::to_string(kMaxLieField) + "]");
  return {q, p, f};
}

Cyclotomic torus_pair(std::uint64_t n, std::uint64_t k) {
  k %= n;
  return Cyclotomic::root_of_unity(static_cast<std::uint32_t>(n), k) +
         Cyclotomic::root_of_unity(static_cast<std::uint32_t>(n), (n - k) % n);
}

long parity(std::uint64_t k) { return k % 2 == 0 ? 1 : -1; }

Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

CharacterTable assemble(std::string name, const FieldData& fd, const Integer& order,
                        const std::vector<ClassSpec>& classes, const std::vector<CharSpec>& chars) {
  CharacterTable t;
  t.name = std::move(name);
  t.order = order;
  t.characteristic = fd.p;
  t.lie = LieParams{2, fd.q, LieSign::plus, 1, fd.p};
  for (const auto& c : classes) {
    ConjugacyClass cls;
    cls.name = c.name;
    cls.size = c.size;
    cls.rep_order = c.order;
    cls.is_central = c.size == 1;
    cls.image = c.image;
    t.classes.push_back(std::move(cls));
  }
  for (const auto& spec : chars) {
    Character chi;
    chi.name = spec.name;
    for (const auto& c : classes) chi.values.push_back(spec.value(c).minimized());
    t.characters.push_back(std::move(chi));
  }
  return t;
}

// q even: SL2(q) = PSL2(q) = PGL2(q).
CharacterTable build_even(std::string name, const FieldData& fd) {
  const std::uint64_t q = fd.q;
  std::vector<ClassSpec> classes;
  classes.push_back({Kind::identity, 0, "1", 1, 1, "1"});
  classes.push_back({Kind::unipotent1, 0, "u1", big(q * q - 1), 2, "u1"});
  for (std::uint64_t l = 1; l <= (q - 2) / 2; ++l) {
    const std::string n = "a^" + std::to_string(l);
    classes.push_back({Kind::split, l, n, big(q * (q + 1)), (q - 1) / std::gcd(l, q - 1), n});
  }
  for (std::uint64_t m = 1; m <= q / 2; ++m) {
    const std::string n = "b^" + std::to_string(m);
    classes.push_back({Kind::nonsplit, m, n, big(q * (q - 1)), (q + 1) / std::gcd(m, q + 1), n});
  }

  std::vector<CharSpec> chars;
  chars.push_back({"1", [](const ClassSpec&) { return Cyclotomic(1L); }});
  chars.push_back({"St", [q](const ClassSpec& c) -> Cyclotomic {
                     switch (c.kind) {
                       case Kind::identity: return Cyclotomic(big(q));
                       case Kind::split: return Cyclotomic(1L);
                       case Kind::nonsplit: return Cyclotomic(-1L);
                       default: return Cyclotomic(0L);
                     }
                   }});
  for (std::uint64_t i = 1; i <= (q - 2) / 2; ++i)
    chars.push_back({"psi(" + std::to_string(i) + ")", [q, i](const ClassSpec& c) -> Cyclotomic {
                       switch (c.kind) {
                         case Kind::identity: return Cyclotomic(big(q + 1));
                         case Kind::unipotent1: return Cyclotomic(1L);
                         case Kind::split: return torus_pair(q - 1, i * c.param);
                         default: return Cyclotomic(0L);
                       }
                     }});
  for (std::uint64_t j = 1; j <= q / 2; ++j)
    chars.push_back({"theta(" + std::to_string(j) + ")", [q, j](const ClassSpec& c) -> Cyclotomic {
                       switch (c.kind) {
                         case Kind::identity: return Cyclotomic(big(q - 1));
                         case Kind::unipotent1: return Cyclotomic(-1L);
                         case Kind::nonsplit: return -torus_pair(q + 1, j * c.param);
                         default: return Cyclotomic(0L);
                       }
                     }});
  return assemble(std::move(name), fd, big(q * (q * q - 1)), classes, chars);
}

// Character data of SL2(q), q odd, on the non-central-translate classes;
// values on z*g follow from the central sign.
struct Sl2Char {
  std::string name;
  Integer degree;
  long central_sign;
  std::function<Cyclotomic(Kind, std::uint64_t)> value;  // u1, u2, split, nonsplit
};

std::vector<Sl2Char> sl2_characters(const FieldData& fd) {
  const std::uint64_t q = fd.q;
  const long alpha0 = (q % 4 == 1) ? 1 : -1;
  const Cyclotomic root = Cyclotomic::sqrt(alpha0 * static_cast<long>(q));
  const Cyclotomic half = Cyclotomic(Rational(1, 2));

  std::vector<Sl2Char> out;
  out.push_back({"1", 1, 1, [](Kind, std::uint64_t) { return Cyclotomic(1L); }});
  out.push_back({"St", big(q), 1, [](Kind k, std::uint64_t) -> Cyclotomic {
                   if (k == Kind::split) return Cyclotomic(1L);
                   if (k == Kind::nonsplit) return Cyclotomic(-1L);
                   return Cyclotomic(0L);
                 }});
  for (std::uint64_t i = 1; i <= (q - 3) / 2; ++i)
    out.push_back({"psi(" + std::to_string(i) + ")", big(q + 1), parity(i),
                   [q, i](Kind k, std::uint64_t l) -> Cyclotomic {
                     if (k == Kind::unipotent1 || k == Kind::unipotent2) return Cyclotomic(1L);
                     if (k == Kind::split) return torus_pair(q - 1, i * l);
                     return Cyclotomic(0L);
                   }});
  for (std::uint64_t j = 1; j <= (q - 1) / 2; ++j)
    out.push_back({"theta(" + std::to_string(j) + ")", big(q - 1), parity(j),
                   [q, j](Kind k, std::uint64_t m) -> Cyclotomic {
                     if (k == Kind::unipotent1 || k == Kind::unipotent2) return Cyclotomic(-1L);
                     if (k == Kind::nonsplit) return -torus_pair(q + 1, j * m);
                     return Cyclotomic(0L);
                   }});
  for (int which = 1; which <= 2; ++which) {
    const Cyclotomic on_u1 = half * (Cyclotomic(1L) + (which == 1 ? root : -root));
    const Cyclotomic on_u2 = half * (Cyclotomic(1L) + (which == 1 ? -root : root));
    out.push_back({"xi" + std::to_string(which), big((q + 1) / 2), alpha0,
                   [on_u1, on_u2](Kind k, std::uint64_t l) -> Cyclotomic {
                     if (k == Kind::unipotent1) return on_u1;
                     if (k == Kind::unipotent2) return on_u2;
                     if (k == Kind::split) return Cyclotomic(parity(l));
                     return Cyclotomic(0L);
                   }});
  }
  for (int which = 1; which <= 2; ++which) {
    const Cyclotomic on_u1 = half * (Cyclotomic(-1L) + (which == 1 ? root : -root));
    const Cyclotomic on_u2 = half * (Cyclotomic(-1L) + (which == 1 ? -root : root));
    out.push_back({"eta" + std::to_string(which), big((q - 1) / 2), -alpha0,
                   [on_u1, on_u2](Kind k, std::uint64_t m) -> Cyclotomic {
                     if (k == Kind::unipotent1) return on_u1;
                     if (k == Kind::unipotent2) return on_u2;
                     if (k == Kind::nonsplit) return Cyclotomic(-parity(m));
                     return Cyclotomic(0L);
                   }});
  }
  return out;
}

Cyclotomic sl2_value(const Sl2Char& chi, const ClassSpec& c) {
  switch (c.kind) {
    case Kind::identity: return Cyclotomic(chi.degree);
    case Kind::centre: return Cyclotomic(Integer(chi.degree * chi.central_sign));
    case Kind::centre_unipotent1: return chi.value(Kind::unipotent1, 0) * Rational(chi.central_sign);
    case Kind::centre_unipotent2: return chi.value(Kind::unipotent2, 0) * Rational(chi.central_sign);
    default: return chi.value(c.kind, c.param);
  }
}

// Representative index of a^l modulo <z> and inversion: l mod h folded to [1, h/2].
std::uint64_t fold(std::uint64_t l, std::uint64_t h) {
  l %= h;
  return std::min(l, h - l);
}

std::vector<ClassSpec> psl2_odd_classes(const FieldData& fd) {
  const std::uint64_t q = fd.q, p = fd.p;
  const std::uint64_t hs = (q - 1) / 2, hn = (q + 1) / 2;
  std::vector<ClassSpec> classes;
  classes.push_back({Kind::identity, 0, "1", 1, 1, std::nullopt});
  classes.push_back({Kind::unipotent1, 0, "u1", big((q * q - 1) / 2), p, std::nullopt});
  classes.push_back({Kind::unipotent2, 0, "u2", big((q * q - 1) / 2), p, std::nullopt});
  for (std::uint64_t l = 1; 2 * l <= hs; ++l)
    classes.push_back({Kind::split, l, "a^" + std::to_string(l), big(2 * l == hs ? q * (q + 1) / 2 : q * (q + 1)),
                       hs / std::gcd(l, hs), std::nullopt});
  for (std::uint64_t m = 1; 2 * m <= hn; ++m)
    classes.push_back({Kind::nonsplit, m, "b^" + std::to_string(m), big(2 * m == hn ? q * (q - 1) / 2 : q * (q - 1)),
                       hn / std::gcd(m, hn), std::nullopt});
  return classes;
}

std::vector<CharSpec> as_specs(const std::vector<Sl2Char>& chars, bool centre_trivial_only) {
  std::vector<CharSpec> out;
  for (const auto& chi : chars) {
    if (centre_trivial_only && chi.central_sign != 1) continue;
    out.push_back({chi.name, [chi](const ClassSpec& c) { return sl2_value(chi, c); }});
  }
  return out;
}

}  // namespace

CharacterTable build_psl2_table(std::uint64_t q) {
  const FieldData fd = check_field(q, "build_psl2_table");
  const std::string name = "PSL2(" + std::to_string(q) + ")";
  if (q % 2 == 0) {
    CharacterTable t = build_even(name, fd);
    for (auto& c : t.classes) c.image.reset();
    return t;
  }
  const Integer order = big(q * (q * q - 1) / 2);
  return assemble(name, fd, order, psl2_odd_classes(fd), as_specs(sl2_characters(fd), true));
}

CharacterTable build_sl2_table(std::uint64_t q) {
  const FieldData fd = check_field(q, "build_sl2_table");
  const std::string name = "SL2(" + std::to_string(q) + ")";
  if (q % 2 == 0) return build_even(name, fd);

  const std::uint64_t p = fd.p;
  const std::uint64_t hs = (q - 1) / 2, hn = (q + 1) / 2;
  std::vector<ClassSpec> classes;
  const Integer unipotent_size = big((q * q - 1) / 2);
  classes.push_back({Kind::identity, 0, "1", 1, 1, "1"});
  classes.push_back({Kind::centre, 0, "z", 1, 2, "1"});
  classes.push_back({Kind::unipotent1, 0, "u1", unipotent_size, p, "u1"});
  classes.push_back({Kind::unipotent2, 0, "u2", unipotent_size, p, "u2"});
  classes.push_back({Kind::centre_unipotent1, 0, "zu1", unipotent_size, 2 * p, "u1"});
  classes.push_back({Kind::centre_unipotent2, 0, "zu2", unipotent_size, 2 * p, "u2"});
  for (std::uint64_t l = 1; l <= (q - 3) / 2; ++l)
    classes.push_back({Kind::split, l, "a^" + std::to_string(l), big(q * (q + 1)), (q - 1) / std::gcd(l, q - 1),
                       "a^" + std::to_string(fold(l, hs))});
  for (std::uint64_t m = 1; m <= (q - 1) / 2; ++m)
    classes.push_back({Kind::nonsplit, m, "b^" + std::to_string(m), big(q * (q - 1)), (q + 1) / std::gcd(m, q + 1),
                       "b^" + std::to_string(fold(m, hn))});
  return assemble(name, fd, big(q * (q * q - 1)), classes, as_specs(sl2_characters(fd), false));
}

CharacterTable build_pgl2_table(std::uint64_t q) {
  const FieldData fd = check_field(q, "build_pgl2_table");
  const std::string name = "PGL2(" + std::to_string(q) + ")";
  if (q % 2 == 0) {
    CharacterTable t = build_even(name, fd);
    for (auto& c : t.classes) c.image.reset();
    return t;
  }
  const std::uint64_t p = fd.p;
  std::vector<ClassSpec> classes;
  classes.push_back({Kind::identity, 0, "1", 1, 1, std::nullopt});
  classes.push_back({Kind::unipotent1, 0, "u", big(q * q - 1), p, std::nullopt});
  for (std::uint64_t l = 1; l <= (q - 1) / 2; ++l)
    classes.push_back({Kind::split, l, "a^" + std::to_string(l),
                       big(2 * l == q - 1 ? q * (q + 1) / 2 : q * (q + 1)), (q - 1) / std::gcd(l, q - 1),
                       std::nullopt});
  for (std::uint64_t m = 1; m <= (q + 1) / 2; ++m)
    classes.push_back({Kind::nonsplit, m, "b^" + std::to_string(m),
                       big(2 * m == q + 1 ? q * (q - 1) / 2 : q * (q - 1)), (q + 1) / std::gcd(m, q + 1),
                       std::nullopt});

  auto sign_of = [](const ClassSpec& c) -> long {
    if (c.kind == Kind::split || c.kind == Kind::nonsplit) return parity(c.param);
    return 1;
  };
  std::vector<CharSpec> chars;
  chars.push_back({"1", [](const ClassSpec&) { return Cyclotomic(1L); }});
  chars.push_back({"sgn", [sign_of](const ClassSpec& c) { return Cyclotomic(sign_of(c)); }});
  for (int twisted = 0; twisted < 2; ++twisted)
    chars.push_back({twisted ? "St.sgn" : "St", [q, twisted, sign_of](const ClassSpec& c) -> Cyclotomic {
                       const long s = twisted ? sign_of(c) : 1;
                       switch (c.kind) {
                         case Kind::identity: return Cyclotomic(big(q));
                         case Kind::split: return Cyclotomic(s);
                         case Kind::nonsplit: return Cyclotomic(-s);
                         default: return Cyclotomic(0L);
                       }
                     }});
  for (std::uint64_t i = 1; i <= (q - 3) / 2; ++i)
    chars.push_back({"psi(" + std::to_string(i) + ")", [q, i](const ClassSpec& c) -> Cyclotomic {
                       switch (c.kind) {
                         case Kind::identity: return Cyclotomic(big(q + 1));
                         case Kind::unipotent1: return Cyclotomic(1L);
                         case Kind::split: return torus_pair(q - 1, i * c.param);
                         default: return Cyclotomic(0L);
                       }
                     }});
  for (std::uint64_t j = 1; j <= (q - 1) / 2; ++j)
    chars.push_back({"theta(" + std::to_string(j) + ")", [q, j](const ClassSpec& c) -> Cyclotomic {
                       switch (c.kind) {
                         case Kind::identity: return Cyclotomic(big(q - 1));
                         case Kind::unipotent1: return Cyclotomic(-1L);
                         case Kind::nonsplit: return -torus_pair(q + 1, j * c.param);
                         default: return Cyclotomic(0L);
                       }
                     }});
  return assemble(name, fd, big(q * (q * q - 1)), classes, chars);
}

}  // namespace mckay
