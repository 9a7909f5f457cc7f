#include "mckay/builders.hpp"

#include <algorithm>

namespace mckay {

std::vector<CycleType> sym_class_types(unsigned n) {
  auto types = partitions(n);
  std::reverse(types.begin(), types.end());
  return types;
}

CharacterTable build_sym_table(unsigned n) {
  if (n < 1 || n > kMaxSymmetricDegree)
    throw DomainError("build_sym_table: n = " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxSymmetricDegree) + "]");
  CharacterTable t;
  t.name = "S" + std::to_string(n);
  mpz_fac_ui(t.order.get_mpz_t(), n);

  const auto types = sym_class_types(n);
  for (const auto& ct : types) {
    ConjugacyClass cls;
    cls.name = ct.compact_label();
    cls.size = t.order / ct.centralizer_order();
    cls.rep_order = ct.lcm();
    cls.is_central = cls.size == 1;
    t.classes.push_back(std::move(cls));
  }
  for (const auto& lambda : partitions(n)) {
    Character chi;
    chi.name = "chi" + lambda.label();
    for (const auto& ct : types) chi.values.emplace_back(mn_value(lambda, ct));
    t.characters.push_back(std::move(chi));
  }
  return t;
}

ClassFunction restrict_to_point_stabilizer(unsigned n, const ClassFunction& f) {
  if (n < 2) throw DomainError("restrict_to_point_stabilizer: n must be at least 2");
  const auto big = sym_class_types(n);
  if (f.size() != big.size()) throw DomainError("restrict_to_point_stabilizer: wrong number of values");
  ClassFunction out;
  for (const auto& ct : sym_class_types(n - 1)) {
    std::vector<unsigned> parts = ct.parts();
    parts.push_back(1);
    const Partition extended(std::move(parts));
    const auto it = std::find(big.begin(), big.end(), extended);
    out.push_back(f[static_cast<std::size_t>(it - big.begin())]);
  }
  return out;
}

}  // namespace mckay
