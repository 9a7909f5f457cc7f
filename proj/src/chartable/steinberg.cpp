#include "mckay/chartable.hpp"

namespace mckay {

SteinbergData identify_steinberg(const CharacterTable& t) {
  if (!t.characteristic) throw DomainError("identify_steinberg: table '" + t.name + "' has no characteristic");
  const std::uint64_t p = *t.characteristic;

  SteinbergData data;
  data.p = p;
  data.group_p_part = p_part(t.order, p);

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < t.character_count(); ++i)
    if (t.characters[i].degree() == data.group_p_part) candidates.push_back(i);
  if (candidates.empty())
    throw Error("identify_steinberg: no character of degree |G|_p = " + to_string(data.group_p_part));
  if (candidates.size() == 1) {
    data.st_index = candidates.front();
  } else {
    auto named = t.find_character("St");
    if (!named || t.characters[*named].degree() != data.group_p_part)
      throw Error("identify_steinberg: several characters of degree |G|_p and none named St");
    data.st_index = *named;
  }

  const auto& st = t.characters[data.st_index].values;
  std::string bad;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    SteinbergClass cls;
    cls.semisimple = t.is_semisimple(c);
    cls.cent_p_part = p_part(t.centralizer_order(c), p);
    if (cls.semisimple) {
      if (st[c] == Cyclotomic(cls.cent_p_part))
        cls.sign = 1;
      else if (st[c] == Cyclotomic(Integer(-cls.cent_p_part)))
        cls.sign = -1;
    } else if (st[c].is_zero()) {
      cls.sign = 0;
    }
    const bool violates = cls.semisimple ? cls.sign == 0 : !st[c].is_zero();
    if (violates) bad += (bad.empty() ? "" : ", ") + t.classes[c].name;
    data.classes.push_back(std::move(cls));
  }
  if (!bad.empty())
    throw Error("identify_steinberg: St(g) = eps_g |C_G(g)|_p pattern violated on classes " + bad);
  return data;
}

CharacterTable with_rank_one_support(CharacterTable t) {
  if (!t.lie || t.lie->n != 2) throw DomainError("with_rank_one_support: table is not of rank one (n = 2)");
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    auto& cls = t.classes[c];
    if (cls.is_central)
      cls.support = 0;
    else if (t.is_semisimple(c))
      cls.support = 1;
  }
  return t;
}

}  // namespace mckay
