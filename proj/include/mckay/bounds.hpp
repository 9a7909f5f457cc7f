#pragma once

#include "mckay/chartable.hpp"
#include "mckay/mckay_graph.hpp"

#include <json.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mckay {

using Json = nlohmann::ordered_json;

/// f(n) = base(n)^exponent; the default is (n!)^{5/2}.
struct RatioFunction {
  std::function<Integer(unsigned)> base;
  Rational exponent;
  std::string description;

  double log_value(unsigned n) const;
};

RatioFunction default_ratio_function();

struct ConstantsTable {
  Integer c_bdd = 489;                  // diam <= C r^2 for bounded rank
  Integer d = 163;                      // [chi^l, St] != 0 for l >= D r^2
  Integer c_psl = 15;                   // PSL/PSU constant
  Rational c_classcount{441, 10};       // n_s(G) < c q^{s(2n-s)+n-1}
  Rational gluck_cap{19, 20};           // |chi(g)|/chi(1) <= min(3/sqrt q, 19/20)
  Rational multfree_factor{5, 2};       // multiplicity-free extension factor
  RatioFunction f = default_ratio_function();
};

const ConstantsTable& default_constants();

struct BoundCase {
  std::string id;
  Json inputs = Json::object();
  Json computed = Json::object();
  Json bound = Json::object();
  bool pass = true;
};

struct BoundReport {
  std::string suite;
  std::vector<BoundCase> cases;
  /// Suites that only report numbers (no claim to check) always pass.
  bool report_only = false;
  std::vector<std::string> notes;

  bool pass() const;
  /// {suite, cases: [{id, inputs, computed, bound, pass}], verdict, notes?}.
  Json to_json() const;
};

/// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json json_integer(const Integer& n);
/// Exact rationals as "a/b" strings (integers via json_integer).
Json json_rational(const Rational& r);

// ------------------------------------------------------------ diameter bounds

/// Number of distinct values of f, by exact equality.
std::size_t distinct_values(std::span<const Cyclotomic> f);

struct BurnsideBrauerResult {
  std::size_t distinct = 0;
  unsigned bound = 0;  // distinct - 1
  unsigned diameter = 0;
  bool pass = false;
};

/// diam M(G, alpha) <= N - 1 with N the number of distinct values of alpha.
/// Throws DomainError if alpha is not faithful.
BurnsideBrauerResult burnside_brauer(const CharacterTable& t, std::span<const Cyclotomic> alpha);

struct LowerBoundResult {
  /// Least d >= 0 with 4 alpha(1)^{2d} >= |G|, i.e. the ceiling of
  /// log(|G|/4) / (2 log alpha(1)).
  unsigned ceiling = 0;
  double estimate = 0;  // the real lower bound, for display only
  std::optional<unsigned> diameter;  // nullopt when disconnected
  bool pass = false;
};

/// diam M(G, alpha) >= log(|G|/4) / (2 log alpha(1)). Throws DomainError when
/// alpha(1) = 1.
LowerBoundResult lower_bound(const CharacterTable& t, std::span<const Cyclotomic> alpha);

struct ConjectureResult {
  unsigned diameter = 0;
  double ratio = 0;  // diam * log alpha(1) / log |G|
  std::string family;  // "lie", "symmetric", "alternating"
  bool simple = false;
  Integer cross_bound;  // 489 r^2 (Lie) or 4n - 4 (S_n, A_n)
  bool cross_check = false;
};

/// Reports the ratio of the conjectured inequality and cross-checks the
/// diameter against the proven bound for the table's family. Throws
/// DomainError if the family cannot be identified or alpha is not a
/// faithful nontrivial irreducible.
ConjectureResult conjecture_ratio(const CharacterTable& t, std::size_t alpha,
                                  const ConstantsTable& k = default_constants());

// --------------------------------------------------------------- Steinberg

/// For each irreducible, whether it is a constituent of St^2 and of St^3.
/// Transvection-annotated odd-dimensional unitary tables also get a check
/// that the character missed by St^2 is nonzero on transvections.
BoundReport verify_stsq(const CharacterTable& t);

/// St(g) = eps_g |C_G(g)|_p on semisimple classes and 0 elsewhere.
BoundReport verify_stval(const CharacterTable& t);

struct GluckResult {
  double max_ratio = 0;  // certified upper bound on max |chi(g)|/chi(1)
  std::string worst_character;
  std::string worst_class;
  double bound = 0;  // min(3/sqrt q, 19/20)
  bool pass = false;
};

/// Throws DomainError unless the table has Lie parameters and is simple.
GluckResult gluck_check(const CharacterTable& t, const ConstantsTable& k = default_constants());

enum class SigmaVerdict {
  met,           // Sigma_l < |G|_p, so [chi^l, St] != 0
  silent,        // Sigma_l >= |G|_p; the criterion says nothing
  inconclusive,  // the enclosure straddles |G|_p
};

std::string to_string(SigmaVerdict v);

struct SigmaResult {
  unsigned l = 0;
  /// Certified enclosure of Sigma_l.
  double lower = 0, upper = 0;
  /// Exact value for even l (a real cyclotomic number).
  std::optional<Cyclotomic> exact;
  Integer group_p_part;
  SigmaVerdict verdict = SigmaVerdict::inconclusive;
  /// [chi^l, St], computed exactly when the criterion is met.
  std::optional<Integer> steinberg_multiplicity;
  /// False only if the criterion was met but [chi^l, St] = 0.
  bool consistent = true;
};

/// Sigma_l = sum over 1 != g semisimple of |chi(g)/chi(1)|^l |C_G(g)|_p.
SigmaResult sigma_l(const CharacterTable& t, std::size_t chi, unsigned l);
SigmaResult sigma_l(const CharacterTable& t, const SteinbergData& st, std::size_t chi, unsigned l);

/// Least l in [1, max_l] where the criterion is met; nullopt if none.
std::optional<SigmaResult> minimal_sigma_l(const CharacterTable& t, const SteinbergData& st, std::size_t chi,
                                           unsigned max_l);

struct UseagResult {
  Cyclotomic lhs;  // [chi^l, St] by direct inner product
  Cyclotomic rhs;  // chi(1)^l/|G| (|G|_p + sum eps_g (chi(g)/chi(1))^l |C_G(g)|_p)
  bool equal = false;
};

UseagResult useag_identity(const CharacterTable& t, const SteinbergData& st, std::size_t chi, unsigned l);

// ------------------------------------------------------------- Lie-type rank n

struct DeltaResult {
  double log10_value = 0;  // log10 of Delta_l (-inf when every ratio is 0)
  bool below_one = false;
  /// Characters (by index) for which [chi^l, St] != 0 was verified exactly.
  std::vector<std::size_t> verified;
  bool consistent = true;
};

/// Delta_l for PSL_n(q) from per-support ratio bounds r_s (index s - 1,
/// 1 <= s < n). When `table` is given (same n and q) and Delta_l < 1, checks
/// [chi^l, St] != 0 exactly for `chi` (or every nontrivial character).
DeltaResult delta_l(unsigned n, std::uint64_t q, unsigned l, std::span<const double> ratios,
                    const CharacterTable* table = nullptr, std::optional<std::size_t> chi = std::nullopt,
                    const ConstantsTable& k = default_constants());

/// max |chi(g)/chi(1)| over semisimple classes of support s, for s = 1..n-1;
/// over every nontrivial character when chi is nullopt. Requires support
/// annotations.
std::vector<double> support_ratios(const CharacterTable& t, std::optional<std::size_t> chi);

/// r_s = f(n) chi(1)^{-s/n}.
std::vector<double> character_bound_ratios(unsigned n, const Integer& degree,
                                           const ConstantsTable& k = default_constants());

struct ThresholdResult {
  /// q0 = (49 f(n))^16 when it is an integer.
  std::optional<Integer> q0;
  double log10_q0 = 0;
  /// Per nontrivial character: the window 8(n+2) >= l > 3n^2 / log_q chi(1)
  /// for l = 5 log|G| / log chi(1).
  BoundReport window;
};

ThresholdResult lie_threshold(unsigned n, const CharacterTable* table = nullptr,
                              const ConstantsTable& k = default_constants());

/// Checks on centralizer p-parts and support counts; requires
/// Lie parameters and support annotations on every non-central semisimple class.
BoundReport support_count_check(const CharacterTable& t, const ConstantsTable& k = default_constants());

// --------------------------------------------------------- S_n, A_n, others

/// 4n - 4 bound and the N(alpha) sub-bounds for every faithful irreducible of
/// S_n and A_n, 5 <= n <= 8.
BoundReport verify_alt(unsigned n);

/// Quasi-simple G against S = G/Z: diam M(G, chi) <= |Z| diam M(S, beta) + |Z| - 1
/// for every faithful chi and every nontrivial constituent beta of chi^|Z|,
/// and |Z| divides every distance from 1_G to a character trivial on Z.
BoundReport verify_quasisimple(const CharacterTable& g, const CharacterTable& s);

/// Index in Irr(G) of each character of S inflated along the class images
/// of g; throws if some character of S has no match.
std::vector<std::size_t> inflation_map(const CharacterTable& g, const CharacterTable& s);

/// Subgraph monotonicity for beta = sum of distinct constituents.
BoundReport verify_multfree(const CharacterTable& t, std::span<const std::size_t> constituents);

/// Burnside-Brauer and the lower bound for every faithful irreducible (or one).
BoundReport verify_bb(const CharacterTable& t, std::optional<std::size_t> alpha = std::nullopt);
BoundReport verify_lower(const CharacterTable& t, std::optional<std::size_t> alpha = std::nullopt);
BoundReport verify_gluck(const CharacterTable& t, const ConstantsTable& k = default_constants());
BoundReport verify_useag(const CharacterTable& t, unsigned max_l, std::optional<std::size_t> chi = std::nullopt);
BoundReport verify_sigma(const CharacterTable& t, unsigned l, std::optional<std::size_t> chi = std::nullopt);
BoundReport verify_conjecture(const CharacterTable& t, std::optional<std::size_t> alpha = std::nullopt,
                              const ConstantsTable& k = default_constants());
BoundReport verify_delta(const CharacterTable& t, unsigned l, std::optional<std::size_t> chi = std::nullopt,
                         const ConstantsTable& k = default_constants());

}  // namespace mckay
