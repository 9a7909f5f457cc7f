#include "mckay/mckay_graph.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <deque>

namespace mckay {

std::vector<std::size_t> McKayGraph::successors(std::size_t from) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < adjacency_[from].size(); ++j)
    if (adjacency_[from][j] != 0) out.push_back(j);
  return out;
}

McKayGraph mckay_graph(const CharacterTable& t, std::span<const Cyclotomic> alpha) {
  const std::size_t k = t.class_count();
  const std::size_t r = t.character_count();
  if (alpha.size() != k) throw DomainError("mckay_graph: alpha has the wrong number of values");

  // weights[j][c] = |class c| conj(chi_j(g_c))
  std::vector<ClassFunction> weights(r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t c = 0; c < k; ++c)
      weights[j].push_back(t.characters[j].values[c].conj() * Rational(t.classes[c].size));

  std::vector<std::vector<Integer>> adjacency(r, std::vector<Integer>(r));
  detail::parallel_for(r, [&](std::size_t i) {
    const ClassFunction product = pointwise_product(alpha, t.characters[i].values);
    for (std::size_t j = 0; j < r; ++j) {
      CyclotomicSum acc;
      for (std::size_t c = 0; c < k; ++c)
        if (!product[c].is_zero() && !weights[j][c].is_zero()) acc.add(product[c] * weights[j][c]);
      const auto value = (acc.total() / Rational(t.order)).to_rational();
      if (!value || value->get_den() != 1 || value->get_num() < 0)
        throw CorruptTableError("[alpha " + t.characters[i].name + ", " + t.characters[j].name +
                                "] is not a nonnegative integer");
      adjacency[i][j] = value->get_num();
    }
  });

  std::optional<std::size_t> index;
  for (std::size_t j = 0; j < r && !index; ++j)
    if (std::equal(alpha.begin(), alpha.end(), t.characters[j].values.begin())) index = j;
  return McKayGraph(t, ClassFunction(alpha.begin(), alpha.end()), index, std::move(adjacency));
}

McKayGraph mckay_graph(const CharacterTable& t, std::size_t alpha_index) {
  if (alpha_index >= t.character_count()) throw DomainError("mckay_graph: character index out of range");
  McKayGraph g = mckay_graph(t, t.characters[alpha_index].values);
  return McKayGraph(t, g.alpha(), alpha_index, g.adjacency());
}

std::vector<std::optional<unsigned>> distances(const McKayGraph& g, std::size_t source) {
  std::vector<std::optional<unsigned>> dist(g.vertex_count());
  if (source >= dist.size()) throw DomainError("distances: source out of range");
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : g.successors(v)) {
      if (dist[w]) continue;
      dist[w] = *dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

Diameter diameter(const McKayGraph& g) {
  const std::size_t r = g.vertex_count();
  std::vector<std::optional<unsigned>> eccentricity(r);
  std::vector<char> reaches_all(r, 0);
  detail::parallel_for(r, [&](std::size_t s) {
    unsigned worst = 0;
    for (const auto& d : distances(g, s)) {
      if (!d) return;
      worst = std::max(worst, *d);
    }
    eccentricity[s] = worst;
    reaches_all[s] = 1;
  });
  Diameter out;
  unsigned best = 0;
  for (std::size_t s = 0; s < r; ++s) {
    if (!reaches_all[s]) return out;
    best = std::max(best, *eccentricity[s]);
  }
  out.value = best;
  return out;
}

std::vector<std::optional<unsigned>> first_powers(const McKayGraph& g, unsigned max_power) {
  const std::size_t r = g.vertex_count();
  const std::size_t trivial = trivial_character(g.table());
  std::vector<std::optional<unsigned>> first(r);
  // Multiplicities of alpha^j in Irr(G); alpha^0 = 1_G.
  std::vector<Integer> power(r);
  power[trivial] = 1;
  first[trivial] = 0;
  std::size_t reached = 1;
  const auto& m = g.adjacency();
  for (unsigned j = 1; j <= max_power && reached < r; ++j) {
    std::vector<Integer> next(r);
    for (std::size_t i = 0; i < r; ++i) {
      if (power[i] == 0) continue;
      for (std::size_t c = 0; c < r; ++c)
        if (m[i][c] != 0) next[c] += power[i] * m[i][c];
    }
    power = std::move(next);
    for (std::size_t c = 0; c < r; ++c)
      if (power[c] != 0 && !first[c]) {
        first[c] = j;
        ++reached;
      }
  }
  return first;
}

unsigned min_power_covering(const McKayGraph& g) {
  if (!is_faithful(g.table(), g.alpha())) throw DomainError("min_power_covering: alpha is not faithful");
  // Faithful alpha reaches every irreducible within (number of distinct values - 1) powers.
  const auto first = first_powers(g, static_cast<unsigned>(g.vertex_count()) + 1);
  unsigned n = 0;
  for (const auto& f : first) {
    if (!f) throw CorruptTableError("min_power_covering: faithful character fails to reach every irreducible");
    n = std::max(n, *f);
  }
  return n;
}

unsigned min_power_covering(const CharacterTable& t, std::span<const Cyclotomic> alpha) {
  return min_power_covering(mckay_graph(t, alpha));
}

std::vector<std::pair<std::size_t, std::size_t>> undirected_edges(const McKayGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
      if (g.has_edge(i, j) || g.has_edge(j, i)) out.emplace_back(i, j);
  return out;
}

}  // namespace mckay
