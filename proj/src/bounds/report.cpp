#include "mckay/bounds.hpp"

#include <cmath>

namespace mckay {

double RatioFunction::log_value(unsigned n) const {
  const Integer b = base(n);
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, b.get_mpz_t());
  return exponent.get_d() * (std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0));
}

RatioFunction default_ratio_function() {
  return {[](unsigned n) {
            Integer f;
            mpz_fac_ui(f.get_mpz_t(), n);
            return f;
          },
          Rational(5, 2), "(n!)^(5/2)"};
}

const ConstantsTable& default_constants() {
  static const ConstantsTable k;
  return k;
}

bool BoundReport::pass() const {
  if (report_only) return true;
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

Json BoundReport::to_json() const {
  Json out;
  out["suite"] = suite;
  Json list = Json::array();
  for (const auto& c : cases) {
    Json entry;
    entry["id"] = c.id;
    entry["inputs"] = c.inputs;
    entry["computed"] = c.computed;
    entry["bound"] = c.bound;
    entry["pass"] = c.pass;
    list.push_back(std::move(entry));
  }
  out["cases"] = std::move(list);
  out["verdict"] = report_only ? "report" : (pass() ? "pass" : "fail");
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

Json json_integer(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return to_string(n);
}

Json json_rational(const Rational& r) {
  if (r.get_den() == 1) return json_integer(r.get_num());
  return to_string(r);
}

std::string to_string(SigmaVerdict v) {
  switch (v) {
    case SigmaVerdict::met: return "met";
    case SigmaVerdict::silent: return "silent";
    case SigmaVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace mckay
