#include "common.hpp"

#include <algorithm>
#include <map>

namespace mckay {

std::vector<std::size_t> inflation_map(const CharacterTable& g, const CharacterTable& s) {
  std::vector<std::size_t> image(g.class_count());
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const auto& cls = g.classes[c];
    if (!cls.image) throw DomainError("inflation_map: class '" + cls.name + "' of " + g.name + " has no image annotation");
    const auto idx = s.find_class(*cls.image);
    if (!idx) throw DomainError("inflation_map: image '" + *cls.image + "' is not a class of " + s.name);
    image[c] = *idx;
  }
  std::vector<std::size_t> out;
  for (const auto& beta : s.characters) {
    std::optional<std::size_t> match;
    for (std::size_t i = 0; i < g.character_count() && !match; ++i) {
      bool same = true;
      for (std::size_t c = 0; c < g.class_count() && same; ++c) same = g.characters[i].values[c] == beta.values[image[c]];
      if (same) match = i;
    }
    if (!match) throw DomainError("inflation_map: " + beta.name + " of " + s.name + " has no inflation in " + g.name);
    out.push_back(*match);
  }
  return out;
}

BoundReport verify_quasisimple(const CharacterTable& g, const CharacterTable& s) {
  std::vector<std::size_t> centre;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    if (g.classes[c].is_central) centre.push_back(c);
  const std::size_t e = centre.size();
  const bool cyclic = std::any_of(centre.begin(), centre.end(), [&](std::size_t c) { return g.classes[c].rep_order == e; });
  if (!cyclic) throw DomainError("verify_quasisimple: centre of " + g.name + " is not cyclic");
  if (g.order != s.order * e) throw DomainError("verify_quasisimple: |G| != |Z| |S|");

  const auto inflated = inflation_map(g, s);
  std::map<std::size_t, std::size_t> to_s;  // Irr(G) index -> Irr(S) index
  for (std::size_t b = 0; b < inflated.size(); ++b) to_s[inflated[b]] = b;
  const std::size_t trivial_s = trivial_character(s);

  std::map<std::size_t, std::optional<unsigned>> diam_s;
  auto diameter_s = [&](std::size_t b) {
    if (!diam_s.count(b)) diam_s[b] = diameter(mckay_graph(s, b)).value;
    return diam_s[b];
  };

  BoundReport report{"qs", {}, false, {}};
  const auto faithful = detail::faithful_characters(g);
  if (faithful.empty()) throw DomainError("verify_quasisimple: " + g.name + " has no faithful irreducible character");
  for (std::size_t i : faithful) {
    const McKayGraph graph = mckay_graph(g, i);
    const auto d = diameter(graph);
    const auto mult = decompose(g, pointwise_power(g.characters[i].values, e));

    BoundCase c;
    c.id = g.name + "/" + g.characters[i].name;
    c.inputs = {{"G", g.name}, {"S", s.name}, {"chi", g.characters[i].name}, {"centre_order", e}};
    c.computed = {{"diameter", d.value ? Json(*d.value) : Json("disconnected")}, {"betas", Json::array()}};
    c.pass = d.value.has_value();
    bool found = false;
    for (std::size_t j = 0; j < mult.size(); ++j) {
      if (mult[j] == 0) continue;
      const auto it = to_s.find(j);
      if (it == to_s.end()) {
        c.pass = false;  // constituents of chi^e must be trivial on Z
        c.computed["nontrivial_on_centre"] = g.characters[j].name;
        continue;
      }
      if (it->second == trivial_s) continue;
      found = true;
      const auto ds = diameter_s(it->second);
      const bool ok = ds && d.value && *d.value <= e * *ds + e - 1;
      c.computed["betas"].push_back({{"beta", s.characters[it->second].name},
                                     {"diameter_S", ds ? Json(*ds) : Json("disconnected")},
                                     {"bound", ds ? Json(e * *ds + e - 1) : Json(nullptr)},
                                     {"pass", ok}});
      c.pass = c.pass && ok;
    }
    c.pass = c.pass && found;
    c.bound = {{"relation", "diam_G <= |Z| diam_S(beta) + |Z| - 1 for every nontrivial beta in chi^|Z|"}};

    // Paths from 1_G to characters trivial on Z have length divisible by |Z|.
    const auto dist = distances(graph, trivial_character(g));
    Json lengths = Json::object();
    bool divisible = true;
    for (std::size_t b = 0; b < inflated.size(); ++b) {
      const auto& dd = dist[inflated[b]];
      lengths[s.characters[b].name] = dd ? Json(*dd) : Json(nullptr);
      divisible = divisible && dd && *dd % e == 0;
    }
    c.computed["distances_to_centre_trivial"] = lengths;
    c.computed["distances_divisible"] = divisible;
    c.pass = c.pass && divisible;
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace mckay
