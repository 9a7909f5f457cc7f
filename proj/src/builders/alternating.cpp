#include "mckay/builders.hpp"

namespace mckay {
namespace {

// A cycle type splits in A_n iff its parts are distinct and odd.
bool splits(const CycleType& ct) {
  const auto& p = ct.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] % 2 == 0) return false;
    if (i > 0 && p[i] == p[i - 1]) return false;
  }
  return true;
}

struct AltClass {
  CycleType type;
  int half = 0;  // 0 unsplit, 1 first split class, 2 second
};

}  // namespace

CharacterTable build_alt_table(unsigned n) {
  if (n < 3 || n > kMaxSymmetricDegree)
    throw DomainError("build_alt_table: n = " + std::to_string(n) + " outside [3, " +
                      std::to_string(kMaxSymmetricDegree) + "]");
  CharacterTable t;
  t.name = "A" + std::to_string(n);
  Integer factorial;
  mpz_fac_ui(factorial.get_mpz_t(), n);
  t.order = factorial / 2;

  std::vector<AltClass> layout;
  for (const auto& ct : sym_class_types(n)) {
    if (ct.sign() != 1) continue;
    const Integer sym_size = factorial / ct.centralizer_order();
    const bool split = splits(ct) && n > 1;
    for (int half = split ? 1 : 0; half <= (split ? 2 : 0); ++half) {
      ConjugacyClass cls;
      cls.name = ct.compact_label() + (half == 1 ? "a" : half == 2 ? "b" : "");
      cls.size = split ? Integer(sym_size / 2) : sym_size;
      cls.rep_order = ct.lcm();
      cls.is_central = cls.size == 1;
      t.classes.push_back(std::move(cls));
      layout.push_back({ct, half});
    }
  }

  const auto all = partitions(n);
  for (const auto& lambda : all) {
    const Partition assoc = lambda.conjugate();
    if (lambda != assoc) {
      if (lambda < assoc) continue;  // keep the member listed first
      Character chi;
      chi.name = "chi" + lambda.label();
      for (const auto& cls : layout) chi.values.emplace_back(mn_value(lambda, cls.type));
      t.characters.push_back(std::move(chi));
      continue;
    }
    const auto hooks = lambda.diagonal_hooks();
    const CycleType hook_type(hooks);
    long product = 1;
    for (unsigned h : hooks) product *= h;
    const long eps = ((n - hooks.size()) / 2) % 2 == 0 ? 1 : -1;
    const Cyclotomic root = Cyclotomic::sqrt(eps * product);
    const Cyclotomic plus = (Cyclotomic(eps) + root) / Rational(2);
    const Cyclotomic minus = (Cyclotomic(eps) - root) / Rational(2);

    for (int which = 0; which < 2; ++which) {
      Character chi;
      chi.name = "chi" + lambda.label() + (which == 0 ? "+" : "-");
      for (const auto& cls : layout) {
        if (cls.half != 0 && cls.type == hook_type) {
          const bool first = cls.half == 1;
          chi.values.push_back((first == (which == 0)) ? plus : minus);
        } else {
          chi.values.emplace_back(Cyclotomic(mn_value(lambda, cls.type)) / Rational(2));
        }
      }
      for (auto& v : chi.values) v = v.minimized();
      t.characters.push_back(std::move(chi));
    }
  }
  return t;
}

}  // namespace mckay
