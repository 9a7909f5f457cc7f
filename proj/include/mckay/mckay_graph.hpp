#pragma once

#include "mckay/chartable.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

/// An inner product that should be a nonnegative integer was not: the table
/// (or the class function passed as a character) is inconsistent.
class CorruptTableError : public Error {
 public:
  using Error::Error;
};

/// [f, g] = (1/|G|) sum_k |g_k^G| f(g_k) conj(g(g_k)), exact.
Cyclotomic inner_product(const CharacterTable& t, std::span<const Cyclotomic> f, std::span<const Cyclotomic> g);

/// Multiplicity of every irreducible of t in the character f. Throws
/// CorruptTableError if some multiplicity is not a nonnegative integer.
std::vector<Integer> decompose(const CharacterTable& t, std::span<const Cyclotomic> f);

/// [alpha chi, psi].
Integer tensor_multiplicity(const CharacterTable& t, std::span<const Cyclotomic> alpha,
                            std::span<const Cyclotomic> chi, std::span<const Cyclotomic> psi);

struct Constituent {
  std::size_t character;
  Integer multiplicity;
};

/// Nonzero constituents of alpha * chi, in character order.
std::vector<Constituent> decompose_product(const CharacterTable& t, std::span<const Cyclotomic> alpha,
                                           std::span<const Cyclotomic> chi);

/// Directed multigraph on Irr(G): m[i][j] = [alpha chi_i, chi_j]. Holds a
/// pointer to its table, which must outlive it.
class McKayGraph {
 public:
  McKayGraph(const CharacterTable& t, ClassFunction alpha, std::optional<std::size_t> alpha_index,
             std::vector<std::vector<Integer>> adjacency)
      : table_(&t), alpha_(std::move(alpha)), alpha_index_(alpha_index), adjacency_(std::move(adjacency)) {}

  const CharacterTable& table() const { return *table_; }
  const ClassFunction& alpha() const { return alpha_; }
  /// Index of alpha in Irr(G) when it is irreducible.
  std::optional<std::size_t> alpha_index() const { return alpha_index_; }
  const std::vector<std::vector<Integer>>& adjacency() const { return adjacency_; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  bool has_edge(std::size_t from, std::size_t to) const { return adjacency_[from][to] != 0; }
  /// Targets of the edges leaving `from`, in character order.
  std::vector<std::size_t> successors(std::size_t from) const;

 private:
  const CharacterTable* table_;
  ClassFunction alpha_;
  std::optional<std::size_t> alpha_index_;
  std::vector<std::vector<Integer>> adjacency_;
};

/// M(G, alpha) for an arbitrary character alpha (irreducible or not).
McKayGraph mckay_graph(const CharacterTable& t, std::span<const Cyclotomic> alpha);
/// M(G, chi) for the irreducible character with the given index.
McKayGraph mckay_graph(const CharacterTable& t, std::size_t alpha_index);

/// BFS distances from `source`; nullopt marks unreachable vertices.
std::vector<std::optional<unsigned>> distances(const McKayGraph& g, std::size_t source);

struct Diameter {
  /// Maximum distance over ordered pairs; nullopt when some pair is unreachable.
  std::optional<unsigned> value;
  bool disconnected() const { return !value.has_value(); }
};

Diameter diameter(const McKayGraph& g);

/// For each irreducible chi, the least j >= 0 with [alpha^j, chi] != 0, by
/// repeated multiplication of the multiplicity vector of alpha^j; stops after
/// `max_power` steps or once every vertex has been reached.
std::vector<std::optional<unsigned>> first_powers(const McKayGraph& g, unsigned max_power);

/// N(alpha): least N with every irreducible in sum_{i <= N} alpha^i. Throws
/// DomainError if alpha is not faithful.
unsigned min_power_covering(const McKayGraph& g);
unsigned min_power_covering(const CharacterTable& t, std::span<const Cyclotomic> alpha);

/// Edges {i, j}, i < j, of the underlying simple undirected graph (loops and
/// multiplicities dropped).
std::vector<std::pair<std::size_t, std::size_t>> undirected_edges(const McKayGraph& g);

/// Directed DOT graph; vertices labelled "name (degree)", edges by multiplicity.
std::string to_dot(const McKayGraph& g);
/// Adjacency matrix as CSV with a header row and column of character names.
std::string to_csv(const McKayGraph& g);

}  // namespace mckay
