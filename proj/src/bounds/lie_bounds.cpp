#include "common.hpp"
#include "interval.hpp"

#include <algorithm>
#include <limits>

namespace mckay {

using detail::log_of;

namespace {

Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

// log10(10^a + 10^b)
double log10_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log10(1.0 + std::pow(10.0, lo - hi));
}

Integer steinberg_multiplicity(const CharacterTable& t, const SteinbergData& st, std::size_t chi, unsigned l) {
  const auto ip =
      inner_product(t, pointwise_power(t.characters[chi].values, l), t.characters[st.st_index].values).to_rational();
  if (!ip || ip->get_den() != 1) throw CorruptTableError("[chi^l, St] is not an integer");
  return ip->get_num();
}

}  // namespace

DeltaResult delta_l(unsigned n, std::uint64_t q, unsigned l, std::span<const double> ratios,
                    const CharacterTable* table, std::optional<std::size_t> chi, const ConstantsTable& k) {
  if (n < 2) throw DomainError("delta_l: n must be at least 2");
  if (ratios.size() != n - 1)
    throw DomainError("delta_l: expected " + std::to_string(n - 1) + " ratio bounds (s = 1.." + std::to_string(n - 1) +
                      "), got " + std::to_string(ratios.size()));
  const double lq = std::log10(static_cast<double>(q));
  const double lc = std::log10(k.c_classcount.get_d());
  DeltaResult r;
  r.log10_value = -std::numeric_limits<double>::infinity();
  for (unsigned s = 1; s < n; ++s) {
    const double ratio = ratios[s - 1];
    if (ratio < 0) throw DomainError("delta_l: negative ratio bound");
    if (ratio == 0) continue;
    const double exponent = 2 * s < n ? n * s + 1.5 * n - 1 : n * n - 0.5 * n * (s - 1) - 1;
    const double term = (2 * s < n ? lc : 0.0) + exponent * lq + l * std::log10(ratio);
    r.log10_value = log10_add(r.log10_value, term);
  }
  r.below_one = r.log10_value < 0;

  if (table && r.below_one) {
    if (!table->lie || table->lie->n != n || table->lie->q != q)
      throw DomainError("delta_l: table '" + table->name + "' does not match n and q");
    const SteinbergData st = identify_steinberg(*table);
    const std::size_t triv = trivial_character(*table);
    for (std::size_t i = 0; i < table->character_count(); ++i) {
      if (chi ? i != *chi : i == triv) continue;
      if (steinberg_multiplicity(*table, st, i, l) != 0)
        r.verified.push_back(i);
      else
        r.consistent = false;
    }
  }
  return r;
}

std::vector<double> support_ratios(const CharacterTable& t, std::optional<std::size_t> chi) {
  if (!t.lie) throw DomainError("support_ratios: table '" + t.name + "' has no Lie parameters");
  const unsigned n = t.lie->n;
  std::vector<double> out(n - 1, 0.0);
  const std::size_t triv = trivial_character(t);
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    const auto& cls = t.classes[c];
    if (cls.is_central || !t.is_semisimple(c)) continue;
    if (!cls.support) throw DomainError("support_ratios: class '" + cls.name + "' has no support annotation");
    const unsigned s = *cls.support;
    if (s < 1 || s >= n) continue;
    for (std::size_t i = 0; i < t.character_count(); ++i) {
      if (chi ? i != *chi : i == triv) continue;
      const auto ratio = detail::ratio_magnitude(t.characters[i].values[c], t.characters[i].degree());
      out[s - 1] = std::max(out[s - 1], ratio.hi);
    }
  }
  return out;
}

std::vector<double> character_bound_ratios(unsigned n, const Integer& degree, const ConstantsTable& k) {
  std::vector<double> out;
  const double lf = k.f.log_value(n);
  const double ld = log_of(degree);
  for (unsigned s = 1; s < n; ++s) out.push_back(std::exp(lf - ld * s / n));
  return out;
}

BoundReport verify_delta(const CharacterTable& t, unsigned l, std::optional<std::size_t> chi,
                         const ConstantsTable& k) {
  if (!t.lie) throw DomainError("verify_delta: table '" + t.name + "' has no Lie parameters");
  BoundReport report{"delta", {}, false, {}};
  const unsigned n = t.lie->n;
  const std::uint64_t q = t.lie->q;
  const std::size_t triv = trivial_character(t);
  for (std::size_t i = 0; i < t.character_count(); ++i) {
    if (chi ? i != *chi : i == triv) continue;
    const auto table_ratios = support_ratios(t, i);
    const auto r = delta_l(n, q, l, table_ratios, &t, i, k);
    const auto formula_ratios = character_bound_ratios(n, t.characters[i].degree(), k);
    const auto rf = delta_l(n, q, l, formula_ratios, nullptr, std::nullopt, k);
    BoundCase c;
    c.id = t.name + "/" + t.characters[i].name + "/l=" + std::to_string(l);
    c.inputs = {{"table", t.name}, {"chi", t.characters[i].name}, {"l", l}, {"table_ratios", table_ratios},
                {"configured_f", k.f.description}, {"f_ratios", formula_ratios}};
    c.computed = {{"log10_delta", r.log10_value},
                  {"below_one", r.below_one},
                  {"st_nonzero_verified", !r.verified.empty()},
                  {"log10_delta_f", rf.log10_value}};
    c.bound = {{"relation", "delta < 1 implies [chi^l, St] != 0"}};
    c.pass = r.consistent;
    report.cases.push_back(std::move(c));
  }
  return report;
}

ThresholdResult lie_threshold(unsigned n, const CharacterTable* table, const ConstantsTable& k) {
  if (n < 2) throw DomainError("lie_threshold: n must be at least 2");
  ThresholdResult r;
  r.log10_q0 = 16 * (std::log(49.0) + k.f.log_value(n)) / std::log(10.0);
  const Rational e16 = Rational(16) * k.f.exponent;
  if (e16.get_den() == 1 && e16 >= 0)
    r.q0 = ipow(Integer(49), 16) * ipow(k.f.base(n), e16.get_num().get_ui());

  r.window.suite = "threshold";
  r.window.notes.push_back("configured f = " + k.f.description);
  if (!table) return r;
  const auto& t = *table;
  if (!t.lie || t.lie->n != n) throw DomainError("lie_threshold: table '" + t.name + "' is not of rank n = " + std::to_string(n));
  const Integer q = big(t.lie->q);
  const Integer g5 = ipow(t.order, 5);
  const bool lower_ok = g5 > ipow(q, 3 * n * n);
  const Integer degree_floor = ipow(q, n - 1);
  const std::size_t triv = trivial_character(t);
  for (std::size_t i = 0; i < t.character_count(); ++i) {
    if (i == triv) continue;
    const Integer d = t.characters[i].degree();
    BoundCase c;
    c.id = t.name + "/" + t.characters[i].name;
    c.inputs = {{"table", t.name}, {"chi", t.characters[i].name}, {"degree", json_integer(d)}};
    const bool upper_ok = d > 1 && ipow(d, 8 * (n + 2)) >= g5;
    c.computed = {{"l", d > 1 ? 5 * log_of(t.order) / log_of(d) : std::numeric_limits<double>::infinity()},
                  {"l_upper_window", upper_ok},
                  {"l_lower_window", lower_ok},
                  {"degree_exceeds_q^(n-1)", d > degree_floor}};
    c.bound = {{"l_at_most", 8 * (n + 2)}, {"l_greater_than", 3.0 * n * n * std::log(q.get_d()) / log_of(d)}};
    c.pass = upper_ok && lower_ok;
    r.window.cases.push_back(std::move(c));
  }
  return r;
}

BoundReport support_count_check(const CharacterTable& t, const ConstantsTable& k) {
  if (!t.lie) throw DomainError("support_count_check: table '" + t.name + "' has no Lie parameters");
  const unsigned n = t.lie->n;
  const Integer q = big(t.lie->q);
  const std::uint64_t p = t.lie->p;
  BoundReport report{"support", {}, false, {}};
  std::vector<Integer> counts(n, 0);  // n_s for s = 1..n-1

  for (std::size_t c = 1; c < t.class_count(); ++c) {
    const auto& cls = t.classes[c];
    if (!t.is_semisimple(c)) continue;
    if (!cls.support) {
      if (cls.is_central) continue;
      throw DomainError("support_count_check: class '" + cls.name + "' has no support annotation");
    }
    const unsigned s = *cls.support;
    if (s < 1 || s >= n) continue;
    counts[s] += cls.size;
    const Integer cp = p_part(t.centralizer_order(c), p);
    BoundCase bc;
    bc.id = t.name + "/" + cls.name;
    bc.inputs = {{"table", t.name}, {"class", cls.name}, {"support", s}};
    bc.computed = {{"cent_p_part", json_integer(cp)}};
    // Exponents are halved in the statements; compare squares.
    if (2 * s < n) {
      const unsigned e2 = n * n + 2 * s * s - 2 * n * s;
      bc.bound = {{"part", "small_support_centralizer"}, {"cent_p_part^2_less_than", json_integer(ipow(q, e2))}};
      bc.pass = cp * cp < ipow(q, e2);
    } else {
      const unsigned e2 = n * n - n * s;
      bc.bound = {{"part", "large_support_centralizer"}, {"cent_p_part^2_less_than", json_integer(ipow(q, e2))}};
      bc.pass = cp * cp < ipow(q, e2);
    }
    report.cases.push_back(std::move(bc));
  }

  Integer large = 0;
  for (unsigned s = 1; s < n; ++s)
    if (2 * s >= n) large += counts[s];
  const Integer cap = ipow(q, n * n - 1);
  BoundCase total;
  total.id = t.name + "/large-support-total";
  total.inputs = {{"table", t.name}};
  total.computed = {{"sum_large_support", json_integer(large)}, {"order", json_integer(t.order)}};
  total.bound = {{"part", "large_support_total"}, {"less_than", json_integer(cap)}};
  total.pass = large < t.order && t.order < cap;
  report.cases.push_back(std::move(total));

  for (unsigned s = 1; 2 * s < n; ++s) {
    const Integer rhs = ipow(q, s * (2 * n - s) + n - 1);
    BoundCase count;
    count.id = t.name + "/small-support-count/s=" + std::to_string(s);
    count.inputs = {{"table", t.name}, {"s", s}};
    count.computed = {{"n_s", json_integer(counts[s])}};
    count.bound = {{"part", "small_support_count"}, {"c", json_rational(k.c_classcount)}, {"q_power", json_integer(rhs)}};
    count.pass = Rational(counts[s]) < k.c_classcount * Rational(rhs);
    report.cases.push_back(std::move(count));
  }
  if (2 >= n) report.notes.push_back("no support s < n/2 exists when n = 2, so the small-support count is empty");
  return report;
}

}  // namespace mckay
