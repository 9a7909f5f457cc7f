#include "mckay/builders.hpp"
#include "mckay/exchange.hpp"
#include "mckay/mckay_graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

using namespace mckay;

namespace {

std::string read_data(const std::string& file) {
  std::ifstream in(std::string(MCKAY_TEST_DATA) + "/" + file);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

oracle::SimpleGraph underlying(const McKayGraph& g) {
  oracle::SimpleGraph s{static_cast<int>(g.vertex_count()), {}};
  for (auto [i, j] : undirected_edges(g)) s.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return s;
}

std::vector<CharacterTable> sample_tables() {
  std::vector<CharacterTable> out;
  for (unsigned n = 3; n <= 7; ++n) out.push_back(build_sym_table(n));
  for (unsigned n = 4; n <= 7; ++n) out.push_back(build_alt_table(n));
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11}) {
    out.push_back(build_psl2_table(q));
    out.push_back(build_sl2_table(q));
    out.push_back(build_pgl2_table(q));
  }
  out.push_back(import_table(read_data("q8.json")));
  return out;
}

// Random character: a nonnegative combination of one to three irreducibles.
ClassFunction random_character(const CharacterTable& t, std::mt19937_64& rng, std::vector<std::size_t>* parts) {
  std::uniform_int_distribution<std::size_t> pick(0, t.character_count() - 1);
  std::uniform_int_distribution<int> count(1, 3);
  ClassFunction f(t.class_count(), Cyclotomic(0L));
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const std::size_t c = pick(rng);
    if (parts) parts->push_back(c);
    for (std::size_t j = 0; j < t.class_count(); ++j) f[j] += t.characters[c].values[j];
  }
  return f;
}

}  // namespace

TEST_CASE("tensor multiplicity examples") {
  const auto s3 = build_sym_table(3);
  const auto& triv = s3.characters[s3.character_index("chi(3)")].values;
  const auto& std2 = s3.characters[s3.character_index("chi(2,1)")].values;
  const auto& sgn = s3.characters[s3.character_index("chi(1,1,1)")].values;
  CHECK(tensor_multiplicity(s3, std2, std2, sgn) == 1);
  for (const auto& chi : s3.characters) CHECK(tensor_multiplicity(s3, triv, chi.values, chi.values) == 1);

  const auto s5 = build_sym_table(5);
  const auto& a = s5.characters[s5.character_index("chi(4,1)")].values;
  CHECK(tensor_multiplicity(s5, a, a, s5.characters[s5.character_index("chi(3,2)")].values) == 1);
}

TEST_CASE("S5 standard square against an element-wise inner product") {
  const auto s5 = build_sym_table(5);
  const auto product = decompose_product(s5, s5.characters[1].values, s5.characters[1].values);
  std::map<std::string, long> got;
  for (const auto& c : product) got[s5.characters[c.character].name] = c.multiplicity.get_si();
  CHECK(got == std::map<std::string, long>{{"chi(5)", 1}, {"chi(4,1)", 1}, {"chi(3,2)", 1}, {"chi(3,1,1)", 1}});

  // Sum over all 120 permutations with values from the determinantal formula.
  const auto perms = oracle::all_permutations(5);
  for (const auto& chi : s5.characters) {
    std::vector<unsigned> lambda;
    for (const auto& p : partitions(5))
      if ("chi" + p.label() == chi.name) lambda = p.parts();
    long sum = 0;
    for (const auto& g : perms) {
      const long a = oracle::jacobi_trudi({4, 1}, g);
      sum += a * a * oracle::jacobi_trudi(lambda, g);
    }
    CHECK(sum % 120 == 0);
    const long expected = sum / 120;
    CHECK(got.count(chi.name) ? got[chi.name] == expected : expected == 0);
  }
}

TEST_CASE("decomposition examples and errors") {
  const auto a5 = build_alt_table(5);
  const auto& alpha = a5.characters[a5.character_index("chi(3,1,1)+")].values;
  ClassFunction conj;
  for (const auto& v : alpha) conj.push_back(v.conj());
  const auto m = decompose(a5, pointwise_product(alpha, conj));
  CHECK(m[trivial_character(a5)] == 1);

  for (const auto& chi : a5.characters) {
    const auto row = decompose_product(a5, a5.characters[0].values, chi.values);
    REQUIRE(row.size() == 1);
    CHECK(a5.characters[row[0].character].name == chi.name);
    CHECK(row[0].multiplicity == 1);
  }

  const auto s3 = build_sym_table(3);
  CHECK_THROWS_AS(decompose(s3, ClassFunction{1L, 0L, 0L}), CorruptTableError);
  CHECK_THROWS_AS(decompose(s3, ClassFunction{-1L, -1L, -1L}), CorruptTableError);
  CHECK_THROWS_AS(decompose(s3, ClassFunction{1L, 1L}), DomainError);
}

TEST_CASE("S3 graph") {
  const auto s3 = build_sym_table(3);
  const auto g = mckay_graph(s3, s3.character_index("chi(2,1)"));
  const std::size_t t = 0, s = 1, sg = 2;
  CHECK(g.successors(t) == std::vector<std::size_t>{s});
  CHECK(g.successors(s) == std::vector<std::size_t>{t, s, sg});
  CHECK(g.alpha_index() == s);
}

TEST_CASE("trivial alpha gives only loops") {
  for (const auto& t : {build_sym_table(5), build_psl2_table(7)}) {
    const auto g = mckay_graph(t, trivial_character(t));
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      for (std::size_t j = 0; j < g.vertex_count(); ++j) CHECK(g.adjacency()[i][j] == (i == j ? 1 : 0));
    CHECK(diameter(g).disconnected());
    CHECK_THROWS_AS(min_power_covering(g), DomainError);
  }
}

TEST_CASE("S5 standard graph") {
  const auto s5 = build_sym_table(5);
  const auto g = mckay_graph(s5, s5.character_index("chi(4,1)"));
  const auto d = distances(g, trivial_character(s5));
  CHECK(d[s5.character_index("chi(1,1,1,1,1)")] == 4u);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK(distances(g, v)[v] == 0u);
  CHECK(diameter(g).value == 4u);
  CHECK(min_power_covering(g) == 4);

  // Power accumulation computed independently with pointwise powers.
  const auto& alpha = g.alpha();
  for (std::size_t j = 0; j < s5.character_count(); ++j) {
    unsigned first = 0;
    while (decompose(s5, pointwise_power(alpha, first))[j] == 0) ++first;
    CHECK(d[j] == first);
  }
}

TEST_CASE("non-faithful alpha leaves vertices unreachable") {
  const auto s5 = build_sym_table(5);
  const auto g = mckay_graph(s5, s5.character_index("chi(1,1,1,1,1)"));
  const auto d = distances(g, 0);
  CHECK(std::count(d.begin(), d.end(), std::nullopt) > 0);
  CHECK(diameter(g).disconnected());
}

TEST_CASE("A5 degree-4 diameter is at most 16") {
  const auto a5 = build_alt_table(5);
  const auto g = mckay_graph(a5, a5.character_index("chi(4,1)"));
  REQUIRE(diameter(g).value.has_value());
  CHECK(*diameter(g).value <= 16);
}

TEST_CASE("PSL2(7) Steinberg covers in two steps") {
  const auto t = build_psl2_table(7);
  CHECK(min_power_covering(t, t.characters[t.character_index("St")].values) == 2);
}

TEST_CASE("Q8 reference table and its affine D4 graph") {
  const auto q8 = import_table(read_data("q8.json"));
  const auto group = oracle::make_group(oracle::q8_elements(), oracle::quat_mul);
  std::multiset<std::pair<long, long>> shape;
  for (const auto& c : q8.classes) shape.emplace(c.size.get_si(), static_cast<long>(c.rep_order));
  CHECK(oracle::class_shape(group) == shape);

  const auto g = mckay_graph(q8, q8.character_index("rho"));
  CHECK(oracle::isomorphic(underlying(g), oracle::affine_d4()));
  CHECK(diameter(g).value.has_value());
}

TEST_CASE("SL2(5) two-dimensional graph is affine E8") {
  const auto t = build_sl2_table(5);
  const auto g = mckay_graph(t, t.character_index("eta1"));
  CHECK(oracle::isomorphic(underlying(g), oracle::affine_e8()));
  CHECK_FALSE(oracle::isomorphic(underlying(g), oracle::affine_e7()));
  CHECK(diameter(g).value == 7u);
}

TEST_CASE("graph properties on random characters") {
  std::mt19937_64 rng(424242);
  const auto tables = sample_tables();
  for (int trial = 0; trial < 120; ++trial) {
    const auto& t = tables[rng() % tables.size()];
    CAPTURE(t.name);
    std::vector<std::size_t> parts;
    const ClassFunction alpha = random_character(t, rng, &parts);
    const auto g = mckay_graph(t, alpha);
    const Integer a1 = alpha[0].to_rational()->get_num();

    // degree conservation
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      Integer total = 0;
      for (std::size_t j = 0; j < g.vertex_count(); ++j) total += g.adjacency()[i][j] * t.characters[j].degree();
      CHECK(total == a1 * t.characters[i].degree());
    }

    // edge reversal duality
    ClassFunction bar;
    for (const auto& v : alpha) bar.push_back(v.conj());
    const auto gbar = mckay_graph(t, bar);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      for (std::size_t j = 0; j < g.vertex_count(); ++j) CHECK(g.adjacency()[i][j] == gbar.adjacency()[j][i]);

    if (is_real_valued(alpha))
      for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = 0; j < g.vertex_count(); ++j) CHECK(g.has_edge(i, j) == g.has_edge(j, i));

    // subgraph monotonicity for alpha inside beta = alpha + another character
    ClassFunction beta = alpha;
    const auto extra = random_character(t, rng, nullptr);
    for (std::size_t c = 0; c < beta.size(); ++c) beta[c] += extra[c];
    const auto gb = mckay_graph(t, beta);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      for (std::size_t j = 0; j < g.vertex_count(); ++j)
        if (g.has_edge(i, j)) CHECK(gb.has_edge(i, j));

    const auto d = diameter(g);
    CHECK(d.disconnected() == !is_faithful(t, alpha));
    if (!d.disconnected()) {
      const auto db = diameter(gb);
      REQUIRE(db.value.has_value());
      CHECK(*db.value <= *d.value);
      const unsigned n = min_power_covering(g);
      CHECK(*d.value <= n);
      std::vector<std::string> seen;
      for (const auto& v : alpha) seen.push_back(render(v));
      std::sort(seen.begin(), seen.end());
      const auto distinct = std::unique(seen.begin(), seen.end()) - seen.begin();
      CHECK(n <= distinct - 1);
    }

    // distances from the trivial character agree with power accumulation
    const auto from_trivial = distances(g, trivial_character(t));
    CHECK(first_powers(g, static_cast<unsigned>(t.character_count())) == from_trivial);
  }
}

TEST_CASE("graph exports") {
  const auto s3 = build_sym_table(3);
  const auto g = mckay_graph(s3, s3.character_index("chi(2,1)"));
  const std::string dot = to_dot(g);
  CHECK(dot.rfind("digraph \"M(S3)\" {", 0) == 0);
  CHECK(dot.find("v0 [label=\"chi(3) (1)\"];") != std::string::npos);
  CHECK(dot.find("v1 -> v1 [label=\"1\"];") != std::string::npos);
  CHECK(dot.find("v0 -> v2") == std::string::npos);
  const std::string csv = to_csv(g);
  CHECK(csv.rfind("from\\to,chi(3),\"chi(2,1)\",\"chi(1,1,1)\"\n", 0) == 0);
  CHECK(csv.find("\"chi(2,1)\",1,1,1\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
