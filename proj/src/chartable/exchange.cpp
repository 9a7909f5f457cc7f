#include "mckay/exchange.hpp"

#include <json.hpp>

#include <set>

namespace mckay {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& location, const std::string& what) {
  throw ParseError("table document: " + location + ": " + what, 0, location);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string get_string(const Json& v, const std::string& where) {
  if (!v.is_string()) schema_error(where, "expected a string");
  return v.get<std::string>();
}

Integer get_integer(const Json& v, const std::string& where) {
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  schema_error(where, "expected an integer");
}

std::uint64_t get_u64(const Json& v, const std::string& where) {
  Integer n = get_integer(v, where);
  if (sgn(n) < 0 || !n.fits_ulong_p()) schema_error(where, "expected a nonnegative machine integer");
  return n.get_ui();
}

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

bool derive_central(const CharacterTable& t, std::size_t c) {
  for (const auto& chi : t.characters) {
    if (chi.values.size() <= c) return false;
    if (!(chi.values[c] * chi.values[c].conj() == chi.values[0] * chi.values[0])) return false;
  }
  return true;
}

}  // namespace

CharacterTable import_table(std::string_view text, bool validate) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("table document: ") + e.what(), e.byte, "document");
  }

  CharacterTable t;
  t.name = get_string(field(doc, "name", "document"), "name");
  t.order = get_integer(field(doc, "order", "document"), "order");
  if (auto it = doc.find("characteristic"); it != doc.end() && !it->is_null()) {
    const std::uint64_t p = get_u64(*it, "characteristic");
    if (!is_prime(p)) schema_error("characteristic", "not a prime");
    t.characteristic = p;
  }
  if (auto it = doc.find("lie"); it != doc.end() && !it->is_null()) {
    LieParams lie;
    lie.n = static_cast<unsigned>(get_u64(field(*it, "n", "lie"), "lie.n"));
    lie.q = get_u64(field(*it, "q", "lie"), "lie.q");
    const std::string eps = get_string(field(*it, "epsilon", "lie"), "lie.epsilon");
    if (eps != "+" && eps != "-") schema_error("lie.epsilon", "expected '+' or '-'");
    lie.epsilon = eps == "+" ? LieSign::plus : LieSign::minus;
    lie.rank = static_cast<unsigned>(get_u64(field(*it, "rank", "lie"), "lie.rank"));
    auto [p, f] = prime_power(lie.q);
    if (p == 0) schema_error("lie.q", "not a prime power");
    if (t.characteristic && *t.characteristic != p) schema_error("lie.q", "q is not a power of the characteristic");
    if (lie.n == 0 || lie.rank == 0) schema_error("lie", "n and rank must be positive");
    lie.p = p;
    t.lie = lie;
  }

  const Json& classes = field(doc, "classes", "document");
  if (!classes.is_array()) schema_error("classes", "expected an array");
  std::set<std::string> class_names;
  std::vector<bool> has_central;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::string where = "classes[" + std::to_string(c) + "]";
    const Json& obj = classes[c];
    ConjugacyClass cls;
    cls.name = get_string(field(obj, "name", where), where + ".name");
    if (!class_names.insert(cls.name).second) schema_error(where + ".name", "duplicate class name '" + cls.name + "'");
    cls.size = get_integer(field(obj, "size", where), where + ".size");
    cls.rep_order = get_u64(field(obj, "order", where), where + ".order");
    bool central_given = false;
    if (auto it = obj.find("central"); it != obj.end()) {
      if (!it->is_boolean()) schema_error(where + ".central", "expected a boolean");
      cls.is_central = it->get<bool>();
      central_given = true;
    }
    if (auto it = obj.find("support"); it != obj.end())
      cls.support = static_cast<unsigned>(get_u64(*it, where + ".support"));
    if (auto it = obj.find("image"); it != obj.end()) cls.image = get_string(*it, where + ".image");
    if (auto it = obj.find("transvection"); it != obj.end()) {
      if (!it->is_boolean()) schema_error(where + ".transvection", "expected a boolean");
      cls.transvection = it->get<bool>();
    }
    has_central.push_back(central_given);
    t.classes.push_back(std::move(cls));
  }

  const Json& chars = field(doc, "characters", "document");
  if (!chars.is_array()) schema_error("characters", "expected an array");
  std::set<std::string> char_names;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const std::string where = "characters[" + std::to_string(i) + "]";
    Character chi;
    chi.name = get_string(field(chars[i], "name", where), where + ".name");
    if (!char_names.insert(chi.name).second) schema_error(where + ".name", "duplicate character name '" + chi.name + "'");
    const Json& values = field(chars[i], "values", where);
    if (!values.is_array()) schema_error(where + ".values", "expected an array");
    if (values.size() != t.classes.size())
      schema_error(where + ".values", "expected " + std::to_string(t.classes.size()) + " values");
    for (std::size_t c = 0; c < values.size(); ++c) {
      const std::string at = where + ".values[" + std::to_string(c) + "]";
      const std::string literal = get_string(values[c], at);
      try {
        chi.values.push_back(parse_cyclotomic(literal).minimized());
      } catch (const ParseError& e) {
        throw ParseError("table document: " + at + ": " + e.what(), e.position(), at);
      }
    }
    t.characters.push_back(std::move(chi));
  }

  for (std::size_t c = 0; c < t.classes.size(); ++c)
    if (!has_central[c]) t.classes[c].is_central = derive_central(t, c);

  if (validate) {
    ValidationReport report = validate_table(t);
    if (!report.ok()) throw ValidationError(std::move(report));
  }
  return t;
}

std::string export_table(const CharacterTable& t) {
  Json doc;
  doc["name"] = t.name;
  doc["order"] = integer_json(t.order);
  if (t.characteristic) doc["characteristic"] = *t.characteristic;
  if (t.lie) {
    Json lie;
    lie["n"] = t.lie->n;
    lie["q"] = t.lie->q;
    lie["epsilon"] = t.lie->epsilon == LieSign::plus ? "+" : "-";
    lie["rank"] = t.lie->rank;
    doc["lie"] = std::move(lie);
  }
  Json classes = Json::array();
  for (const auto& cls : t.classes) {
    Json obj;
    obj["name"] = cls.name;
    obj["size"] = integer_json(cls.size);
    obj["order"] = cls.rep_order;
    obj["central"] = cls.is_central;
    if (cls.support) obj["support"] = *cls.support;
    if (cls.image) obj["image"] = *cls.image;
    if (cls.transvection) obj["transvection"] = true;
    classes.push_back(std::move(obj));
  }
  doc["classes"] = std::move(classes);
  Json chars = Json::array();
  for (const auto& chi : t.characters) {
    Json obj;
    obj["name"] = chi.name;
    Json values = Json::array();
    for (const auto& v : chi.values) values.push_back(render(v));
    obj["values"] = std::move(values);
    chars.push_back(std::move(obj));
  }
  doc["characters"] = std::move(chars);
  return doc.dump(2) + "\n";
}

}  // namespace mckay
