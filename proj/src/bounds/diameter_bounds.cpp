#include "common.hpp"

#include <algorithm>

namespace mckay {

using detail::log_of;

std::size_t distinct_values(std::span<const Cyclotomic> f) {
  std::vector<Cyclotomic> seen;
  for (const auto& v : f)
    if (std::none_of(seen.begin(), seen.end(), [&](const Cyclotomic& s) { return s == v; })) seen.push_back(v);
  return seen.size();
}

BurnsideBrauerResult burnside_brauer(const CharacterTable& t, std::span<const Cyclotomic> alpha) {
  if (!is_faithful(t, alpha)) throw DomainError("burnside_brauer: alpha is not faithful");
  BurnsideBrauerResult r;
  r.distinct = distinct_values(alpha);
  r.bound = static_cast<unsigned>(r.distinct - 1);
  const auto d = diameter(mckay_graph(t, alpha));
  if (!d.value) throw CorruptTableError("burnside_brauer: faithful character gives a disconnected graph");
  r.diameter = *d.value;
  r.pass = r.diameter <= r.bound;
  return r;
}

LowerBoundResult lower_bound(const CharacterTable& t, std::span<const Cyclotomic> alpha) {
  if (alpha.empty()) throw DomainError("lower_bound: empty class function");
  const auto deg = alpha[0].to_rational();
  if (!deg || deg->get_den() != 1 || deg->get_num() < 1) throw DomainError("lower_bound: alpha(1) is not a degree");
  const Integer a = deg->get_num();
  if (a == 1) throw DomainError("lower_bound: alpha is linear");

  LowerBoundResult r;
  Integer lhs = 4;  // 4 a^{2d}
  while (lhs < t.order) {
    lhs *= a * a;
    ++r.ceiling;
  }
  r.estimate = 0.5 * (log_of(t.order) - std::log(4.0)) / log_of(a);
  r.diameter = diameter(mckay_graph(t, alpha)).value;
  // A disconnected graph has infinite diameter, which satisfies any lower bound.
  r.pass = !r.diameter || *r.diameter >= r.ceiling;
  return r;
}

ConjectureResult conjecture_ratio(const CharacterTable& t, std::size_t alpha, const ConstantsTable& k) {
  if (alpha >= t.character_count()) throw DomainError("conjecture_ratio: character index out of range");
  const auto& chi = t.characters[alpha];
  if (alpha == trivial_character(t)) throw DomainError("conjecture_ratio: alpha is trivial");

  ConjectureResult r;
  r.simple = is_simple(t);
  const auto named = detail::named_family(t);
  if (t.lie) {
    r.family = "lie";
    r.cross_bound = k.c_bdd * t.lie->rank * t.lie->rank;
  } else if (named) {
    r.family = named->letter == 'S' ? "symmetric" : "alternating";
    r.cross_bound = 4 * named->n - 4;
  } else {
    throw DomainError("conjecture_ratio: table '" + t.name + "' has no Lie parameters and is not S<n> or A<n>");
  }
  const auto d = diameter(mckay_graph(t, alpha));
  if (!d.value) throw DomainError("conjecture_ratio: " + chi.name + " is not faithful");
  r.diameter = *d.value;
  r.ratio = r.diameter * log_of(chi.degree()) / log_of(t.order);
  // The alternating/symmetric bound is only claimed for n >= 5.
  r.cross_check = (named && !t.lie && named->n < 5) || Integer(r.diameter) <= r.cross_bound;
  return r;
}

BoundReport verify_bb(const CharacterTable& t, std::optional<std::size_t> alpha) {
  BoundReport report{"bb", {}, false, {}};
  const auto list = alpha ? std::vector<std::size_t>{*alpha} : detail::faithful_characters(t);
  for (std::size_t i : list) {
    const auto r = burnside_brauer(t, t.characters[i].values);
    BoundCase c;
    c.id = t.name + "/" + t.characters[i].name;
    c.inputs = {{"table", t.name}, {"alpha", t.characters[i].name}};
    c.computed = {{"distinct_values", r.distinct}, {"diameter", r.diameter}};
    c.bound = {{"diameter_at_most", r.bound}};
    c.pass = r.pass;
    report.cases.push_back(std::move(c));
  }
  if (list.empty()) report.notes.push_back("no faithful irreducible characters");
  return report;
}

BoundReport verify_lower(const CharacterTable& t, std::optional<std::size_t> alpha) {
  BoundReport report{"lower", {}, false, {}};
  std::vector<std::size_t> list;
  if (alpha) {
    list.push_back(*alpha);
  } else {
    for (std::size_t i : detail::faithful_characters(t))
      if (t.characters[i].degree() > 1) list.push_back(i);
  }
  for (std::size_t i : list) {
    const auto r = lower_bound(t, t.characters[i].values);
    BoundCase c;
    c.id = t.name + "/" + t.characters[i].name;
    c.inputs = {{"table", t.name}, {"alpha", t.characters[i].name}};
    c.computed = {{"diameter", r.diameter ? Json(*r.diameter) : Json("disconnected")}};
    c.bound = {{"diameter_at_least", r.ceiling}, {"estimate", r.estimate}};
    c.pass = r.pass;
    report.cases.push_back(std::move(c));
  }
  return report;
}

BoundReport verify_conjecture(const CharacterTable& t, std::optional<std::size_t> alpha, const ConstantsTable& k) {
  BoundReport report{"conjecture", {}, true, {}};
  std::vector<std::size_t> list;
  if (alpha) {
    list.push_back(*alpha);
  } else {
    const std::size_t triv = trivial_character(t);
    for (std::size_t i : detail::faithful_characters(t))
      if (i != triv) list.push_back(i);
  }
  bool cross_ok = true;
  for (std::size_t i : list) {
    const auto r = conjecture_ratio(t, i, k);
    BoundCase c;
    c.id = t.name + "/" + t.characters[i].name;
    c.inputs = {{"table", t.name}, {"alpha", t.characters[i].name}, {"family", r.family}, {"simple", r.simple}};
    c.computed = {{"diameter", r.diameter}, {"ratio", r.ratio}};
    c.bound = {{"proven_diameter_bound", json_integer(r.cross_bound)}};
    c.pass = r.cross_check;
    cross_ok = cross_ok && r.cross_check;
    report.cases.push_back(std::move(c));
  }
  // The ratio itself has no known bound; only the proven cross-checks decide.
  report.report_only = cross_ok;
  return report;
}

BoundReport verify_multfree(const CharacterTable& t, std::span<const std::size_t> constituents) {
  if (constituents.empty()) throw DomainError("verify_multfree: no constituents");
  std::vector<std::size_t> sorted(constituents.begin(), constituents.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("verify_multfree: constituents must be distinct");
  for (std::size_t i : sorted)
    if (i >= t.character_count()) throw DomainError("verify_multfree: character index out of range");
  const ClassFunction beta = sum_of(t, sorted);
  if (!is_faithful(t, beta)) throw DomainError("verify_multfree: the sum is not faithful");

  std::size_t top = constituents[0];
  for (std::size_t i : constituents)
    if (t.characters[i].degree() > t.characters[top].degree()) top = i;

  BoundReport report{"multfree", {}, false, {}};
  std::vector<std::string> names;
  for (std::size_t i : constituents) names.push_back(t.characters[i].name);

  const auto d_beta = diameter(mckay_graph(t, beta));
  const auto d_top = diameter(mckay_graph(t, top));
  BoundCase c;
  c.id = t.name + "/monotonicity";
  c.inputs = {{"table", t.name}, {"constituents", names}, {"largest", t.characters[top].name}};
  c.computed = {{"diameter_beta", d_beta.value ? Json(*d_beta.value) : Json("disconnected")},
                {"diameter_largest", d_top.value ? Json(*d_top.value) : Json("disconnected")}};
  c.bound = {{"relation", "diameter_beta <= diameter_largest"}};
  // beta is faithful, so d_beta is finite; a disconnected M(G, alpha_k) is infinite.
  c.pass = d_beta.value && (!d_top.value || *d_beta.value <= *d_top.value);
  report.cases.push_back(std::move(c));

  if (t.lie && t.name.rfind("PSL2(", 0) == 0 && t.lie->q >= 11) {
    const Integer d = smallest_nontrivial_degree(t);
    const Integer kk = Integer(static_cast<unsigned long>(t.character_count()));
    BoundCase e;
    e.id = t.name + "/class-count";
    e.inputs = {{"table", t.name}};
    e.computed = {{"d", json_integer(d)}, {"k", json_integer(kk)}};
    e.bound = {{"relation", "d^3 > k^2"}};
    e.pass = d * d * d > kk * kk;
    report.cases.push_back(std::move(e));
  }
  return report;
}

}  // namespace mckay
