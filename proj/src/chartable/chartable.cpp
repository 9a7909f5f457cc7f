#include "mckay/chartable.hpp"

#include <numeric>

namespace mckay {

Integer Character::degree() const {
  if (values.empty()) throw Error("character '" + name + "' has no values");
  auto d = values.front().to_rational();
  if (!d || d->get_den() != 1 || sgn(*d) <= 0)
    throw Error("character '" + name + "' has non-integral degree");
  return d->get_num();
}

std::optional<std::size_t> CharacterTable::find_character(const std::string& wanted) const {
  for (std::size_t i = 0; i < characters.size(); ++i)
    if (characters[i].name == wanted) return i;
  return std::nullopt;
}

std::size_t CharacterTable::character_index(const std::string& wanted) const {
  if (auto i = find_character(wanted)) return *i;
  throw Error("table '" + name + "' has no character named '" + wanted + "'");
}

std::optional<std::size_t> CharacterTable::find_class(const std::string& wanted) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == wanted) return i;
  return std::nullopt;
}

Integer CharacterTable::centralizer_order(std::size_t cls) const { return order / classes.at(cls).size; }

bool CharacterTable::is_semisimple(std::size_t cls) const {
  if (!characteristic) throw Error("table '" + name + "' has no characteristic");
  return std::gcd(classes.at(cls).rep_order, *characteristic) == 1;
}

std::size_t trivial_character(const CharacterTable& t) {
  for (std::size_t i = 0; i < t.characters.size(); ++i) {
    bool trivial = true;
    for (const auto& v : t.characters[i].values)
      if (!(v == Cyclotomic(1L))) {
        trivial = false;
        break;
      }
    if (trivial) return i;
  }
  throw Error("table '" + t.name + "' has no trivial character");
}

Integer largest_degree(const CharacterTable& t) {
  Integer best = 0;
  for (const auto& c : t.characters) best = std::max(best, c.degree());
  return best;
}

Integer smallest_nontrivial_degree(const CharacterTable& t) {
  const std::size_t triv = trivial_character(t);
  std::optional<Integer> best;
  for (std::size_t i = 0; i < t.characters.size(); ++i) {
    if (i == triv) continue;
    Integer d = t.characters[i].degree();
    if (!best || d < *best) best = d;
  }
  if (!best) throw Error("table '" + t.name + "' has no nontrivial character");
  return *best;
}

std::vector<std::size_t> kernel_classes(const CharacterTable& t, std::span<const Cyclotomic> f) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < t.class_count(); ++k)
    if (f[k] == f[0]) out.push_back(k);
  return out;
}

bool is_faithful(const CharacterTable& t, std::span<const Cyclotomic> f) {
  return kernel_classes(t, f).size() == 1;
}

bool is_simple(const CharacterTable& t) {
  const std::size_t triv = trivial_character(t);
  for (std::size_t i = 0; i < t.characters.size(); ++i)
    if (i != triv && !is_faithful(t, t.characters[i].values)) return false;
  return true;
}

bool is_real_valued(std::span<const Cyclotomic> f) {
  for (const auto& v : f)
    if (!(v == v.conj())) return false;
  return true;
}

ClassFunction sum_of(const CharacterTable& t, std::span<const std::size_t> characters) {
  ClassFunction out(t.class_count());
  for (std::size_t i : characters)
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += t.characters.at(i).values[k];
  return out;
}

ClassFunction pointwise_product(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b) {
  ClassFunction out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] * b[k]);
  return out;
}

ClassFunction pointwise_power(std::span<const Cyclotomic> f, unsigned long exponent) {
  ClassFunction out;
  out.reserve(f.size());
  for (const auto& v : f) out.push_back(pow(v, exponent));
  return out;
}

}  // namespace mckay
