#include "mckay/chartable.hpp"

#include <sstream>

namespace mckay {
namespace {

const char* kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::structure: return "structure";
    case ViolationKind::class_size: return "class-size";
    case ViolationKind::identity_class: return "identity-class";
    case ViolationKind::degree: return "degree";
    case ViolationKind::degree_sum: return "degree-sum";
    case ViolationKind::row_orthogonality: return "row-orthogonality";
    case ViolationKind::column_orthogonality: return "column-orthogonality";
    case ViolationKind::central_flag: return "central-flag";
  }
  return "unknown";
}

}  // namespace

std::string ValidationReport::summary() const {
  if (violations.empty()) return "valid";
  std::ostringstream out;
  out << violations.size() << " violation(s)";
  const std::size_t shown = std::min<std::size_t>(violations.size(), 5);
  for (std::size_t v = 0; v < shown; ++v)
    out << "; " << kind_name(violations[v].kind) << ": " << violations[v].message;
  if (shown < violations.size()) out << "; ...";
  return out.str();
}

ValidationReport validate_table(const CharacterTable& t) {
  ValidationReport report;
  auto flag = [&](ViolationKind kind, std::size_t i, std::size_t j, std::string msg) {
    report.violations.push_back({kind, i, j, std::move(msg)});
  };

  const std::size_t k = t.class_count();
  if (k == 0) {
    flag(ViolationKind::structure, 0, 0, "table has no classes");
    return report;
  }
  if (t.character_count() != k)
    flag(ViolationKind::structure, t.character_count(), k,
         "character count " + std::to_string(t.character_count()) + " differs from class count " +
             std::to_string(k));
  for (std::size_t i = 0; i < t.character_count(); ++i)
    if (t.characters[i].values.size() != k)
      flag(ViolationKind::structure, i, 0, "character '" + t.characters[i].name + "' has wrong length");
  if (sgn(t.order) <= 0) flag(ViolationKind::structure, 0, 0, "group order must be positive");
  if (!report.ok()) return report;

  // Classes.
  Integer total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const auto& cls = t.classes[c];
    if (sgn(cls.size) <= 0 || t.order % cls.size != 0)
      flag(ViolationKind::class_size, c, 0, "size of class '" + cls.name + "' does not divide |G|");
    if (cls.rep_order == 0) flag(ViolationKind::class_size, c, 0, "class '" + cls.name + "' has order 0");
    total += cls.size;
  }
  if (total != t.order)
    flag(ViolationKind::class_size, 0, 0, "class sizes sum to " + to_string(total) + ", not |G| = " + to_string(t.order));
  const auto& id = t.classes.front();
  if (id.size != 1 || id.rep_order != 1 || !id.is_central)
    flag(ViolationKind::identity_class, 0, 0, "first class must be the identity (size 1, order 1, central)");

  // Degrees.
  Integer degree_sum = 0;
  bool degrees_ok = true;
  for (std::size_t i = 0; i < k; ++i) {
    auto d = t.characters[i].values[0].to_rational();
    if (!d || d->get_den() != 1 || sgn(*d) <= 0) {
      flag(ViolationKind::degree, i, 0, "character '" + t.characters[i].name + "' has no positive integral degree");
      degrees_ok = false;
      continue;
    }
    degree_sum += d->get_num() * d->get_num();
  }
  if (degrees_ok && degree_sum != t.order)
    flag(ViolationKind::degree_sum, 0, 0, "sum of squared degrees is " + to_string(degree_sum) + ", not " + to_string(t.order));

  std::vector<ClassFunction> conjugates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& v : t.characters[i].values) conjugates[i].push_back(v.conj());

  // Rows: (1/|G|) sum_c |c| chi_i(c) conj(chi_j(c)) = delta_ij.
  for (std::size_t i = 0; i < k; ++i) {
    ClassFunction weighted(k);
    for (std::size_t c = 0; c < k; ++c) weighted[c] = t.characters[i].values[c] * Rational(t.classes[c].size);
    for (std::size_t j = i; j < k; ++j) {
      CyclotomicSum acc;
      for (std::size_t c = 0; c < k; ++c) acc.add(weighted[c] * conjugates[j][c]);
      const Cyclotomic expected = i == j ? Cyclotomic(t.order) : Cyclotomic(0L);
      if (!(acc.total() == expected))
        flag(ViolationKind::row_orthogonality, i, j,
             "rows '" + t.characters[i].name + "' and '" + t.characters[j].name + "' are not orthonormal");
    }
  }

  // Columns: sum_i chi_i(a) conj(chi_i(b)) = delta_ab |C_G(a)|.
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      CyclotomicSum acc;
      for (std::size_t i = 0; i < k; ++i) acc.add(t.characters[i].values[a] * conjugates[i][b]);
      const Cyclotomic expected = a == b ? Cyclotomic(Integer(t.order / t.classes[a].size)) : Cyclotomic(0L);
      if (!(acc.total() == expected))
        flag(ViolationKind::column_orthogonality, a, b,
             "columns '" + t.classes[a].name + "' and '" + t.classes[b].name + "' violate column orthogonality");
    }
  }

  // Central classes: |chi(g)| = chi(1) for every chi.
  if (degrees_ok) {
    for (std::size_t c = 0; c < k; ++c) {
      bool central = true;
      for (std::size_t i = 0; i < k && central; ++i) {
        const auto& chi = t.characters[i].values;
        central = chi[c] * conjugates[i][c] == chi[0] * chi[0];
      }
      if (central != t.classes[c].is_central)
        flag(ViolationKind::central_flag, c, 0,
             "central flag of class '" + t.classes[c].name + "' disagrees with the character values");
    }
  }
  return report;
}

}  // namespace mckay
