#include "common.hpp"

#include "mckay/builders.hpp"

namespace mckay {
namespace {

// "chi(3,2,1)+" -> (3,2,1)
Partition partition_from_name(const std::string& name) {
  const auto open = name.find('('), close = name.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw Error("verify_alt: cannot read a partition from character name '" + name + "'");
  std::vector<unsigned> parts;
  unsigned value = 0;
  for (std::size_t i = open + 1; i <= close; ++i) {
    if (name[i] == ',' || name[i] == ')') {
      parts.push_back(value);
      value = 0;
    } else {
      value = value * 10 + static_cast<unsigned>(name[i] - '0');
    }
  }
  return Partition(std::move(parts));
}

bool is_square_shape(const Partition& lambda) {
  return lambda.parts().front() == lambda.length() && lambda.parts().back() == lambda.length();
}

struct SubBound {
  const char* step;
  unsigned value;
};

BoundCase make_case(const CharacterTable& t, std::size_t i, const Diameter& d, unsigned covering, unsigned n,
                    const std::vector<SubBound>& subs) {
  BoundCase c;
  c.id = t.name + "/" + t.characters[i].name;
  c.inputs = {{"table", t.name}, {"alpha", t.characters[i].name}, {"degree", json_integer(t.characters[i].degree())}};
  c.computed = {{"diameter", d.value ? Json(*d.value) : Json("disconnected")}, {"N", covering}};
  c.bound = {{"diameter_at_most", 4 * n - 4}, {"N_at_most", Json::object()}};
  c.pass = d.value && *d.value <= 4 * n - 4 && *d.value <= covering;
  for (const auto& s : subs) {
    c.bound["N_at_most"][s.step] = s.value;
    c.pass = c.pass && covering <= s.value;
  }
  return c;
}

}  // namespace

BoundReport verify_alt(unsigned n) {
  if (n < 5 || n > 8) throw DomainError("verify_alt: n = " + std::to_string(n) + " outside [5, 8]");
  BoundReport report{"alt", {}, false, {}};

  const CharacterTable sym = build_sym_table(n);
  const CharacterTable sym_h = build_sym_table(n - 1);
  const std::string standard = "chi(" + std::to_string(n - 1) + ",1)";
  for (std::size_t i : detail::faithful_characters(sym)) {
    const McKayGraph g = mckay_graph(sym, i);
    const Diameter d = diameter(g);
    const unsigned covering = min_power_covering(g);
    std::vector<SubBound> subs{{"step3", 4 * n - 4}};
    if (sym.characters[i].name == standard) subs.push_back({"step1", n - 1});
    const ClassFunction res = restrict_to_point_stabilizer(n, sym.characters[i].values);
    if (inner_product(sym_h, res, res) != Cyclotomic(1L)) subs.push_back({"step2", 2 * n - 2});
    report.cases.push_back(make_case(sym, i, d, covering, n, subs));
  }

  const CharacterTable alt = build_alt_table(n);
  for (std::size_t i : detail::faithful_characters(alt)) {
    const McKayGraph g = mckay_graph(alt, i);
    const Diameter d = diameter(g);
    const unsigned covering = min_power_covering(g);
    const Partition lambda = partition_from_name(alt.characters[i].name);
    std::vector<SubBound> subs{{"bound", 4 * n - 4}};
    if (lambda.is_self_conjugate()) {
      if (n <= 6) subs.push_back({"few_values", 4});
      if (!is_real_valued(alt.characters[i].values) && !is_square_shape(lambda)) subs.push_back({"step6", 2 * n - 2});
    }
    report.cases.push_back(make_case(alt, i, d, covering, n, subs));
  }
  return report;
}

}  // namespace mckay
