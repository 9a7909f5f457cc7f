#include "mckay/bounds.hpp"
#include "mckay/builders.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace mckay;

namespace {

std::vector<CharacterTable> simple_lie_tables() {
  std::vector<CharacterTable> out;
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 17, 25}) out.push_back(build_psl2_table(q));
  return out;
}

// Sum over g != 1 semisimple of |chi(g)/chi(1)|^l |C_G(g)|_p, by floating point.
double sigma_estimate(const CharacterTable& t, std::size_t chi, unsigned l) {
  const auto st = identify_steinberg(t);
  const double d = t.characters[chi].degree().get_d();
  double sum = 0;
  for (std::size_t c = 1; c < t.class_count(); ++c) {
    if (!st.classes[c].semisimple) continue;
    const double r = std::abs(t.characters[chi].values[c].embed()) / d;
    sum += std::pow(r, l) * t.classes[c].size.get_d() * st.classes[c].cent_p_part.get_d();
  }
  return sum;
}

// [chi^l, St] straight from the definition.
Integer steinberg_multiplicity(const CharacterTable& t, std::size_t chi, unsigned l) {
  const auto& st = t.characters[t.character_index("St")].values;
  Cyclotomic sum;
  for (std::size_t c = 0; c < t.class_count(); ++c)
    sum += Rational(t.classes[c].size) * (pow(t.characters[chi].values[c], l) * st[c].conj());
  const auto r = (sum / Rational(t.order)).to_rational();
  REQUIRE(r.has_value());
  REQUIRE(r->get_den() == 1);
  return r->get_num();
}

CharacterTable relabel(const CharacterTable& base, std::mt19937_64& rng) {
  CharacterTable t = base;
  std::vector<std::size_t> perm(t.class_count());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  for (std::size_t c = 0; c < perm.size(); ++c) t.classes[c] = base.classes[perm[c]];
  for (auto& chi : t.characters) {
    ClassFunction v;
    for (std::size_t c : perm) v.push_back(chi.values[c]);
    chi.values = v;
  }
  std::shuffle(t.characters.begin(), t.characters.end(), rng);
  return t;
}

}  // namespace

TEST_CASE("default constants") {
  const auto& k = default_constants();
  CHECK(k.c_bdd == 489);
  CHECK(k.d == 163);
  CHECK(k.c_psl == 15);
  CHECK(k.c_classcount == Rational(441, 10));
  CHECK(k.gluck_cap == Rational(19, 20));
  CHECK(k.multfree_factor == Rational(5, 2));
  CHECK(k.f.log_value(2) == doctest::Approx(2.5 * std::log(2.0)));
  CHECK(k.f.log_value(4) == doctest::Approx(2.5 * std::log(24.0)));
}

TEST_CASE("Burnside-Brauer on the standard character") {
  for (unsigned n = 3; n <= 8; ++n) {
    const auto t = build_sym_table(n);
    const auto r = burnside_brauer(t, t.characters[t.character_index("chi(" + std::to_string(n - 1) + ",1)")].values);
    CHECK(r.distinct == n);
    CHECK(r.bound == n - 1);
    CHECK(r.pass);
  }
  const auto s5 = build_sym_table(5);
  const auto r = burnside_brauer(s5, s5.characters[1].values);
  CHECK(r.diameter == 4);
  const auto psl = build_psl2_table(7);
  CHECK(burnside_brauer(psl, psl.characters[psl.character_index("St")].values).pass);
  CHECK_THROWS_AS(burnside_brauer(s5, s5.characters[0].values), DomainError);
}

TEST_CASE("lower bound by integer comparison") {
  const auto s5 = build_sym_table(5);
  const auto r = lower_bound(s5, s5.characters[s5.character_index("chi(4,1)")].values);
  // 4 * 4^2 = 64 < 120 <= 4 * 4^4
  CHECK(r.ceiling == 2);
  CHECK(r.estimate == doctest::Approx(std::log(30.0) / (2 * std::log(4.0))));
  CHECK(r.diameter == 4u);
  CHECK(r.pass);

  const auto a5 = build_alt_table(5);
  CHECK(lower_bound(a5, a5.characters[a5.character_index("chi(3,1,1)+")].values).pass);
  // alpha(1)^2 >= |G|: at most one step is required
  const auto psl = build_psl2_table(7);
  const auto big = lower_bound(psl, psl.characters[psl.character_index("St")].values);
  CHECK(big.ceiling <= 1);
  CHECK(big.pass);
  CHECK_THROWS_AS(lower_bound(s5, s5.characters[s5.character_index("chi(1,1,1,1,1)")].values), DomainError);

  // Brute force the least d with 4 a^{2d} >= |G| over every faithful character of a few tables.
  for (const auto& t : {build_sym_table(6), build_alt_table(7), build_psl2_table(11)}) {
    for (const auto& chi : t.characters) {
      const Integer a = chi.degree();
      if (a == 1 || !is_faithful(t, chi.values)) continue;
      unsigned d = 0;
      while (4 * ipow(a, 2 * d) < t.order) ++d;
      const auto lb = lower_bound(t, chi.values);
      CHECK(lb.ceiling == d);
      CHECK(lb.pass);
    }
  }
}

TEST_CASE("conjecture ratio") {
  const auto a5 = build_alt_table(5);
  const std::size_t alpha = a5.character_index("chi(3,1,1)+");
  const auto r = conjecture_ratio(a5, alpha);
  const auto d = diameter(mckay_graph(a5, alpha));
  REQUIRE(d.value.has_value());
  CHECK(r.diameter == *d.value);
  CHECK(r.ratio == doctest::Approx(*d.value * std::log(3.0) / std::log(60.0)));
  CHECK(r.family == "alternating");
  CHECK(r.cross_check);

  const auto psl = build_psl2_table(13);
  const auto rp = conjecture_ratio(psl, psl.character_index("St"));
  CHECK(rp.family == "lie");
  CHECK(rp.cross_bound == 489);
  CHECK(rp.cross_check);

  const auto s8 = build_sym_table(8);
  const auto rs = conjecture_ratio(s8, s8.character_index("chi(7,1)"));
  CHECK(rs.family == "symmetric");
  CHECK(rs.cross_bound == 28);
  CHECK(rs.ratio > 0);
  CHECK_FALSE(rs.simple);

  CharacterTable anonymous = a5;
  anonymous.name = "X";
  CHECK_THROWS_AS(conjecture_ratio(anonymous, alpha), DomainError);
  CHECK_THROWS_AS(conjecture_ratio(a5, trivial_character(a5)), DomainError);
  CHECK(verify_conjecture(psl).report_only);
}

TEST_CASE("Steinberg square covers PSL2") {
  for (std::uint64_t q : {5, 7, 8, 9, 11, 13}) {
    const auto t = build_psl2_table(q);
    const auto r = verify_stsq(t);
    CHECK(r.pass());
    for (const auto& c : r.cases) CHECK(c.computed["covered_by"] == "St^2");
  }
  CHECK_THROWS_AS(verify_stsq(build_sym_table(5)), DomainError);
}

TEST_CASE("Steinberg values") {
  for (const auto& t : simple_lie_tables()) CHECK(verify_stval(t).pass());
  CHECK(verify_stval(build_sl2_table(7)).pass());
  CHECK(verify_stval(build_pgl2_table(9)).pass());
}

TEST_CASE("character ratio bound") {
  auto oracle_max = [](const CharacterTable& t) {
    double best = 0;
    for (std::size_t i = 0; i < t.character_count(); ++i) {
      if (i == trivial_character(t)) continue;
      const double d = t.characters[i].degree().get_d();
      for (std::size_t c = 1; c < t.class_count(); ++c)
        best = std::max(best, std::abs(t.characters[i].values[c].embed()) / d);
    }
    return best;
  };
  const auto p9 = build_psl2_table(9);
  const auto r9 = gluck_check(p9);
  CHECK(r9.bound == doctest::Approx(0.95));
  CHECK(r9.max_ratio == doctest::Approx(oracle_max(p9)).epsilon(1e-9));
  CHECK(r9.pass);
  const auto p13 = build_psl2_table(13);
  const auto r13 = gluck_check(p13);
  CHECK(r13.bound == doctest::Approx(3 / std::sqrt(13.0)));
  CHECK(r13.pass);
  for (const auto& t : simple_lie_tables()) {
    const auto r = gluck_check(t);
    CHECK(r.max_ratio >= oracle_max(t) - 1e-12);
    CHECK(r.max_ratio <= oracle_max(t) + 1e-9);
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(gluck_check(build_sym_table(5)), DomainError);
}

TEST_CASE("sigma criterion at l = 163") {
  for (std::uint64_t q : {5, 7, 8, 9, 11, 13}) {
    const auto t = build_psl2_table(q);
    const auto st = identify_steinberg(t);
    for (std::size_t i = 0; i < t.character_count(); ++i) {
      if (i == trivial_character(t)) continue;
      const auto r = sigma_l(t, st, i, 163);
      CHECK(r.verdict == SigmaVerdict::met);
      CHECK(r.group_p_part == q);
      CHECK(r.upper < static_cast<double>(q));
      REQUIRE(r.steinberg_multiplicity.has_value());
      CHECK(*r.steinberg_multiplicity != 0);
      CHECK(r.consistent);
    }
    CHECK(verify_sigma(t, 163).pass());
  }
}

TEST_CASE("sigma enclosures agree with a direct evaluation") {
  for (const auto& t : {build_psl2_table(7), build_psl2_table(9), build_psl2_table(16)}) {
    for (std::size_t i = 1; i < t.character_count(); ++i) {
      for (unsigned l : {1u, 2u, 3u, 4u, 7u, 10u}) {
        const auto r = sigma_l(t, i, l);
        const double expected = sigma_estimate(t, i, l);
        CHECK(r.lower <= expected * (1 + 1e-12) + 1e-12);
        CHECK(r.upper >= expected * (1 - 1e-12) - 1e-12);
        CHECK(r.upper - r.lower <= 1e-9 * std::max(1.0, expected));
        if (l % 2 == 0) {
          REQUIRE(r.exact.has_value());
          CHECK(r.exact->embed().real() == doctest::Approx(expected).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("sigma for the Steinberg character at l = 2") {
  const auto t = build_psl2_table(7);
  const auto st = identify_steinberg(t);
  const auto r = sigma_l(t, st, st.st_index, 2);
  // St^2 contains St, so a verdict of met is consistent and silent is allowed.
  CHECK(r.consistent);
  CHECK(r.verdict != SigmaVerdict::inconclusive);
  if (r.verdict == SigmaVerdict::met) CHECK(*r.steinberg_multiplicity > 0);
  CHECK(steinberg_multiplicity(t, st.st_index, 2) > 0);
}

TEST_CASE("a silent criterion claims nothing") {
  const auto t = build_psl2_table(13);
  const auto st = identify_steinberg(t);
  const auto r = sigma_l(t, st, 1, 1);
  CHECK(r.verdict == SigmaVerdict::silent);
  CHECK_FALSE(r.steinberg_multiplicity.has_value());
  CHECK(r.consistent);
}

TEST_CASE("minimal l is the first met level and its inner product is nonzero") {
  for (std::uint64_t q : {5, 7, 8, 9, 11, 13}) {
    const auto t = build_psl2_table(q);
    const auto st = identify_steinberg(t);
    for (std::size_t i = 0; i < t.character_count(); ++i) {
      if (i == trivial_character(t)) continue;
      const auto m = minimal_sigma_l(t, st, i, 163);
      REQUIRE(m.has_value());
      for (unsigned l = 1; l < m->l; ++l) CHECK(sigma_l(t, st, i, l).verdict != SigmaVerdict::met);
      CHECK(steinberg_multiplicity(t, i, m->l) == *m->steinberg_multiplicity);
      CHECK(*m->steinberg_multiplicity != 0);
    }
  }
}

TEST_CASE("sigma is non-increasing in l") {
  std::mt19937_64 rng(31337);
  const auto tables = simple_lie_tables();
  for (int trial = 0; trial < 200; ++trial) {
    const auto& t = tables[rng() % tables.size()];
    const std::size_t chi = 1 + rng() % (t.character_count() - 1);
    const unsigned l = 1 + static_cast<unsigned>(rng() % 40);
    const auto a = sigma_l(t, chi, l), b = sigma_l(t, chi, l + 1);
    CHECK(b.lower <= a.upper);
  }
}

TEST_CASE("Steinberg inner product identity") {
  for (std::uint64_t q : {5, 7, 9}) {
    const auto t = build_psl2_table(q);
    const auto st = identify_steinberg(t);
    for (std::size_t i = 0; i < t.character_count(); ++i) {
      for (unsigned l = 1; l <= 6; ++l) {
        const auto r = useag_identity(t, st, i, l);
        CHECK(r.equal);
        CHECK(r.lhs == r.rhs);
        CHECK(r.lhs == Cyclotomic(steinberg_multiplicity(t, i, l)));
        if (i == trivial_character(t)) CHECK(r.lhs.is_zero());
      }
    }
    CHECK(verify_useag(t, 6).pass());
  }
  CHECK(verify_useag(build_sl2_table(7), 4).pass());
  CHECK(verify_useag(build_pgl2_table(8), 4).pass());
}

TEST_CASE("Delta_l") {
  const std::vector<double> zero{0.0};
  const auto z = delta_l(2, 7, 10, zero);
  CHECK(z.below_one);
  CHECK(std::isinf(z.log10_value));

  // n = 2: only s = 1 >= n/2 contributes, with weight q^{4 - 0 - 1} = q^3.
  const std::vector<double> half{0.5};
  const auto h = delta_l(2, 7, 20, half);
  CHECK(h.log10_value == doctest::Approx(3 * std::log10(7.0) + 20 * std::log10(0.5)));
  CHECK(h.below_one);

  const auto t = with_rank_one_support(build_psl2_table(7));
  const auto ratios = support_ratios(t, std::nullopt);
  REQUIRE(ratios.size() == 1);
  const auto r = delta_l(2, 7, 163, ratios, &t);
  CHECK(r.below_one);
  CHECK(r.consistent);
  CHECK(r.verified.size() == t.character_count() - 1);
  CHECK(verify_delta(t, 163).pass());

  const auto cb = character_bound_ratios(2, Integer(8));
  REQUIRE(cb.size() == 1);
  CHECK(cb[0] == doctest::Approx(std::pow(2.0, 2.5) / std::sqrt(8.0)));
  const auto fb = delta_l(2, 7, 163, cb);
  CHECK(fb.log10_value == doctest::Approx(3 * std::log10(7.0) + 163 * std::log10(cb[0])));

  CHECK_THROWS_AS(delta_l(3, 7, 10, zero), DomainError);
  CHECK_THROWS_AS(support_ratios(build_psl2_table(7), std::nullopt), DomainError);
}

TEST_CASE("threshold q0 and the degree window") {
  const auto r = lie_threshold(2);
  REQUIRE(r.q0.has_value());
  CHECK(*r.q0 == ipow(Integer(49), 16) * ipow(Integer(2), 40));
  CHECK(r.log10_q0 == doctest::Approx(16 * std::log10(49 * std::pow(2.0, 2.5))));
  CHECK(lie_threshold(3).q0.has_value());  // (3!)^40 is an integer
  for (const auto& t : simple_lie_tables()) {
    const auto w = lie_threshold(2, &t);
    CHECK(w.window.pass());
    for (const auto& c : w.window.cases) CHECK(c.computed["l"].get<double>() <= 32.0);
  }
  CHECK_THROWS_AS(lie_threshold(1), DomainError);
}

TEST_CASE("centralizer p-parts and support counts") {
  const auto t = with_rank_one_support(build_psl2_table(7));
  const auto r = support_count_check(t);
  CHECK(r.pass());
  for (const auto& c : r.cases)
    if (c.bound["part"] == "large_support_centralizer") CHECK(c.computed["cent_p_part"] == 1);
  CHECK_THROWS_AS(support_count_check(build_psl2_table(7)), DomainError);
  for (const auto& s : simple_lie_tables()) CHECK(support_count_check(with_rank_one_support(s)).pass());
}

TEST_CASE("symmetric and alternating diameters") {
  const auto r = verify_alt(5);
  CHECK(r.pass());
  bool found = false;
  for (const auto& c : r.cases) {
    CHECK(c.computed["diameter"].get<unsigned>() <= 16);
    if (c.id == "S5/chi(4,1)") {
      found = true;
      CHECK(c.computed["N"] == 4);
      CHECK(c.bound["N_at_most"]["step1"] == 4);
    }
  }
  CHECK(found);
  const auto r7 = verify_alt(7);
  for (const auto& c : r7.cases)
    if (c.id == "S7/chi(5,2)") CHECK(c.bound["N_at_most"]["step2"] == 12);
  CHECK_THROWS_AS(verify_alt(4), DomainError);
  CHECK_THROWS_AS(verify_alt(9), DomainError);
}

TEST_CASE("quasi-simple covers") {
  for (std::uint64_t q : {5, 7, 9}) {
    const auto g = build_sl2_table(q), s = build_psl2_table(q);
    const auto r = verify_quasisimple(g, s);
    CHECK(r.pass());
    for (const auto& c : r.cases) CHECK(c.computed["distances_divisible"] == true);
  }
  const auto g = build_sl2_table(5), s = build_psl2_table(5);
  const auto map = inflation_map(g, s);
  for (std::size_t b = 0; b < map.size(); ++b) CHECK(g.characters[map[b]].degree() == s.characters[b].degree());
  CHECK_THROWS_AS(verify_quasisimple(build_sym_table(5), build_sym_table(5)), DomainError);
}

TEST_CASE("multiplicity-free sums") {
  const auto p11 = build_psl2_table(11);
  CHECK(smallest_nontrivial_degree(p11) == 5);
  CHECK(p11.character_count() == 8);
  const std::vector<std::size_t> single{p11.character_index("St")};
  const auto r = verify_multfree(p11, single);
  CHECK(r.pass());
  bool class_count_case = false;
  for (const auto& c : r.cases) class_count_case = class_count_case || c.id == "PSL2(11)/class-count";
  CHECK(class_count_case);

  const auto s5 = build_sym_table(5);
  const std::vector<std::size_t> pair{s5.character_index("chi(4,1)"), s5.character_index("chi(3,2)")};
  CHECK(verify_multfree(s5, pair).pass());
  const std::vector<std::size_t> dup{1, 1};
  CHECK_THROWS_AS(verify_multfree(s5, dup), DomainError);
  const std::vector<std::size_t> sign{s5.character_index("chi(1,1,1,1,1)")};
  CHECK_THROWS_AS(verify_multfree(s5, sign), DomainError);
}

TEST_CASE("verdicts are invariant under relabelling") {
  std::mt19937_64 rng(2718);
  for (const auto& base : {build_sym_table(6), build_alt_table(6), build_psl2_table(11), build_sl2_table(7)}) {
    const auto bb = verify_bb(base), lo = verify_lower(base);
    for (int trial = 0; trial < 3; ++trial) {
      const auto t = relabel(base, rng);
      const auto bb2 = verify_bb(t), lo2 = verify_lower(t);
      CHECK(bb2.pass() == bb.pass());
      CHECK(lo2.pass() == lo.pass());
      auto by_id = [](const BoundReport& r) {
        std::map<std::string, std::string> m;
        for (const auto& c : r.cases) m[c.id] = c.computed.dump();
        return m;
      };
      CHECK(by_id(bb2) == by_id(bb));
      CHECK(by_id(lo2) == by_id(lo));
    }
  }
}

TEST_CASE("report serialization") {
  const auto r = verify_stsq(build_psl2_table(7));
  const Json j = r.to_json();
  CHECK(j["suite"] == "stsq");
  CHECK(j["verdict"] == "pass");
  REQUIRE(j["cases"].is_array());
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("inputs"));
    CHECK(c.contains("computed"));
    CHECK(c.contains("bound"));
    CHECK(c.contains("pass"));
  }
  CHECK(json_integer(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(json_integer(Integer(42)) == 42);
  CHECK(json_rational(Rational(3, 4)) == "3/4");
  BoundReport bad{"x", {BoundCase{}}, false, {}};
  bad.cases[0].pass = false;
  CHECK(bad.to_json()["verdict"] == "fail");
  bad.report_only = true;
  CHECK(bad.to_json()["verdict"] == "report");
}
