#pragma once

#include "mckay/bounds.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace mckay::detail {

inline double log_of(const Integer& n) {
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

inline std::vector<std::size_t> faithful_characters(const CharacterTable& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.character_count(); ++i)
    if (is_faithful(t, t.characters[i].values)) out.push_back(i);
  return out;
}

/// Degree n of a table named "S<n>" or "A<n>" together with the letter.
struct NamedFamily {
  char letter;
  unsigned n;
};

inline std::optional<NamedFamily> named_family(const CharacterTable& t) {
  if (t.name.size() < 2 || (t.name[0] != 'S' && t.name[0] != 'A')) return std::nullopt;
  unsigned n = 0;
  for (std::size_t i = 1; i < t.name.size(); ++i) {
    if (t.name[i] < '0' || t.name[i] > '9' || n > 1000) return std::nullopt;
    n = n * 10 + static_cast<unsigned>(t.name[i] - '0');
  }
  return NamedFamily{t.name[0], n};
}

inline Json table_input(const CharacterTable& t) { return t.name; }

}  // namespace mckay::detail
