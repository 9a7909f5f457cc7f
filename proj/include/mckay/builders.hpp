#pragma once

#include "mckay/chartable.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mckay {

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const { return n_; }
  std::size_t length() const { return parts_.size(); }

  /// Associate (transposed) partition.
  Partition conjugate() const;
  bool is_self_conjugate() const { return *this == conjugate(); }
  /// Hook lengths of the diagonal cells, largest first.
  std::vector<unsigned> diagonal_hooks() const;
  /// Multiplicity of each part size i (index i).
  std::vector<unsigned> multiplicities() const;
  /// Sign of a permutation with this cycle type.
  int sign() const;
  /// z_lambda = prod i^{m_i} m_i!; the centralizer order in S_n.
  Integer centralizer_order() const;
  /// Least common multiple of the parts.
  std::uint64_t lcm() const;

  /// "(4,1)", "(3,1,1)".
  std::string label() const;
  /// Exponent form for repeated parts: "(2^2,1)", "(1^5)".
  std::string compact_label() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

/// Cycle types are partitions of n read as cycle lengths.
using CycleType = Partition;

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions(unsigned n);

/// chi^lambda on the class of cycle type ct, by the Murnaghan-Nakayama rule.
Integer mn_value(const Partition& lambda, const CycleType& ct);

constexpr unsigned kMaxSymmetricDegree = 12;
constexpr std::uint64_t kMinLieField = 4;
constexpr std::uint64_t kMaxLieField = 49;

/// S_n, 1 <= n <= 12. Characters "chi(lambda)" in partition order (trivial
/// first); classes labelled by cycle type with the identity first.
CharacterTable build_sym_table(unsigned n);

/// A_n, 3 <= n <= 12. One character per associate pair {lambda, lambda*};
/// each self-associated lambda yields "chi(lambda)+" and "chi(lambda)-", the
/// "+" one taking (eps + sqrt(eps prod h))/2 on the first of the two split
/// classes of the diagonal-hook cycle type.
CharacterTable build_alt_table(unsigned n);

/// Rank-one Lie families over F_q, q a prime power in [4, 49]. Class names
/// record their parameters: "u1", "u2" unipotent, "a^l" split torus
/// (powers of a generator of F_q^* diagonal), "b^m" nonsplit torus, "z" the
/// centre of SL2. SL2 classes carry the name of their PSL2 image.
CharacterTable build_psl2_table(std::uint64_t q);
CharacterTable build_sl2_table(std::uint64_t q);
CharacterTable build_pgl2_table(std::uint64_t q);

/// Values of Ind_{S_mu}^{S_n}(1) on the classes of build_sym_table(n): the
/// number of ways to distribute the cycles of g into blocks of sizes mu.
Character young_perm_character(unsigned n, const std::vector<unsigned>& composition);

/// Cycle type of each class of build_sym_table(n), in class order.
std::vector<CycleType> sym_class_types(unsigned n);

/// Restriction of an S_n class function to S_{n-1} (fixing a point), in the
/// class order of build_sym_table(n - 1).
ClassFunction restrict_to_point_stabilizer(unsigned n, const ClassFunction& f);

}  // namespace mckay
