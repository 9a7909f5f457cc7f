#pragma once

#include "mckay/cyclotomic.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mckay {

/// Values of a class function, one per conjugacy class in table order.
using ClassFunction = std::vector<Cyclotomic>;

struct ConjugacyClass {
  std::string name;
  Integer size;
  std::uint64_t rep_order = 1;
  bool is_central = false;
  /// nu(g): codimension of the largest eigenspace of a preimage. Only ever
  /// supplied by annotation.
  std::optional<unsigned> support;
  /// Name of the image class in a quotient table G/Z (quasi-simple pairs).
  std::optional<std::string> image;
  /// Marks the class of transvections in PSU tables.
  bool transvection = false;
};

struct Character {
  std::string name;
  ClassFunction values;

  /// chi(1); throws if the identity value is not a positive integer.
  Integer degree() const;
};

enum class LieSign { plus, minus };

struct LieParams {
  unsigned n = 2;
  std::uint64_t q = 2;
  LieSign epsilon = LieSign::plus;
  unsigned rank = 1;
  std::uint64_t p = 2;
};

struct CharacterTable {
  std::string name;
  Integer order;
  std::optional<std::uint64_t> characteristic;
  std::optional<LieParams> lie;
  std::vector<ConjugacyClass> classes;
  std::vector<Character> characters;

  std::size_t class_count() const { return classes.size(); }
  std::size_t character_count() const { return characters.size(); }

  /// Index of the named character; throws Error if absent.
  std::size_t character_index(const std::string& name) const;
  std::optional<std::size_t> find_character(const std::string& name) const;
  std::optional<std::size_t> find_class(const std::string& name) const;

  /// |G| / |g^G|.
  Integer centralizer_order(std::size_t cls) const;
  /// gcd(rep_order, p) = 1; requires characteristic.
  bool is_semisimple(std::size_t cls) const;
};

/// Index of the trivial character (all values 1); throws if absent.
std::size_t trivial_character(const CharacterTable& t);

/// b(G): largest irreducible degree.
Integer largest_degree(const CharacterTable& t);
/// d(G): smallest degree of a nontrivial irreducible character.
Integer smallest_nontrivial_degree(const CharacterTable& t);

/// Classes on which f takes the value f(1).
std::vector<std::size_t> kernel_classes(const CharacterTable& t, std::span<const Cyclotomic> f);
/// Trivial kernel: only the identity class satisfies f(g) = f(1).
bool is_faithful(const CharacterTable& t, std::span<const Cyclotomic> f);
/// Every nontrivial irreducible character is faithful.
bool is_simple(const CharacterTable& t);
/// f(g) equals its complex conjugate on every class.
bool is_real_valued(std::span<const Cyclotomic> f);

/// Sum of class functions.
ClassFunction sum_of(const CharacterTable& t, std::span<const std::size_t> characters);
ClassFunction pointwise_product(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b);
ClassFunction pointwise_power(std::span<const Cyclotomic> f, unsigned long exponent);

// ---------------------------------------------------------------- validation

enum class ViolationKind {
  structure,
  class_size,
  identity_class,
  degree,
  degree_sum,
  row_orthogonality,
  column_orthogonality,
  central_flag,
};

struct Violation {
  ViolationKind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Exact check of every table invariant: class sizes, identity class,
/// degree sum of squares, row and column orthogonality, central flags.
ValidationReport validate_table(const CharacterTable& t);

/// Thrown when a table fails validation where a valid table is required.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("invalid character table: " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// ------------------------------------------------------------------ Steinberg

struct SteinbergClass {
  bool semisimple = false;
  int sign = 0;          // epsilon_g for semisimple classes, 0 otherwise
  Integer cent_p_part;   // |C_G(g)|_p
};

struct SteinbergData {
  std::size_t st_index = 0;
  std::uint64_t p = 0;
  Integer group_p_part;  // |G|_p = St(1)
  std::vector<SteinbergClass> classes;
};

/// Locates St (the character of degree |G|_p; named "St" when ambiguous),
/// extracts epsilon_g and |C_G(g)|_p, and checks St(g) = epsilon_g |C_G(g)|_p
/// on semisimple classes and St(g) = 0 elsewhere.
SteinbergData identify_steinberg(const CharacterTable& t);

/// Sets support 1 on every non-central semisimple class of a rank-one (n = 2)
/// table; for n = 2 this is exact, since such elements are non-scalar.
CharacterTable with_rank_one_support(CharacterTable t);

}  // namespace mckay
