#include "mckay/mckay_graph.hpp"

namespace mckay {
namespace {

void check_length(const CharacterTable& t, std::span<const Cyclotomic> f, const char* what) {
  if (f.size() != t.class_count())
    throw DomainError(std::string(what) + ": class function has " + std::to_string(f.size()) + " values, table has " +
                      std::to_string(t.class_count()) + " classes");
}

Integer as_multiplicity(const Cyclotomic& value, const std::string& context) {
  const auto r = value.to_rational();
  if (!r || r->get_den() != 1 || r->get_num() < 0)
    throw CorruptTableError(context + " is " + render(value) + ", not a nonnegative integer");
  return r->get_num();
}

}  // namespace

Cyclotomic inner_product(const CharacterTable& t, std::span<const Cyclotomic> f, std::span<const Cyclotomic> g) {
  check_length(t, f, "inner_product");
  check_length(t, g, "inner_product");
  CyclotomicSum acc;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k].is_zero() || g[k].is_zero()) continue;
    acc.add(f[k] * g[k].conj() * Rational(t.classes[k].size));
  }
  return acc.total() / Rational(t.order);
}

std::vector<Integer> decompose(const CharacterTable& t, std::span<const Cyclotomic> f) {
  std::vector<Integer> out;
  out.reserve(t.character_count());
  for (const auto& chi : t.characters)
    out.push_back(as_multiplicity(inner_product(t, f, chi.values), "multiplicity of " + chi.name));
  return out;
}

Integer tensor_multiplicity(const CharacterTable& t, std::span<const Cyclotomic> alpha,
                            std::span<const Cyclotomic> chi, std::span<const Cyclotomic> psi) {
  check_length(t, alpha, "tensor_multiplicity");
  check_length(t, chi, "tensor_multiplicity");
  const ClassFunction product = pointwise_product(alpha, chi);
  return as_multiplicity(inner_product(t, product, psi), "tensor multiplicity");
}

std::vector<Constituent> decompose_product(const CharacterTable& t, std::span<const Cyclotomic> alpha,
                                           std::span<const Cyclotomic> chi) {
  check_length(t, alpha, "decompose_product");
  check_length(t, chi, "decompose_product");
  const auto mult = decompose(t, pointwise_product(alpha, chi));
  std::vector<Constituent> out;
  for (std::size_t j = 0; j < mult.size(); ++j)
    if (mult[j] != 0) out.push_back({j, mult[j]});
  return out;
}

}  // namespace mckay
