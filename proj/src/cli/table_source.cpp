#include "mckay/builders.hpp"
#include "mckay/cache.hpp"
#include "mckay/exchange.hpp"

#include <fstream>
#include <sstream>

namespace mckay {

std::optional<TableKey> parse_table_key(std::string_view text) {
  const auto sep = text.rfind('_');
  if (sep == std::string_view::npos || sep == 0 || sep + 1 == text.size()) return std::nullopt;
  TableKey key;
  key.family = std::string(text.substr(0, sep));
  if (key.family != "sym" && key.family != "alt" && key.family != "psl2" && key.family != "sl2" && key.family != "pgl2")
    return std::nullopt;
  for (char c : text.substr(sep + 1)) {
    if (c < '0' || c > '9' || key.param > 1'000'000) return std::nullopt;
    key.param = key.param * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return key;
}

CharacterTable build_family(const std::string& family, std::uint64_t param) {
  auto small = [&](const char* what) {
    if (param > 1000) throw DomainError(std::string(what) + ": parameter " + std::to_string(param) + " out of range");
    return static_cast<unsigned>(param);
  };
  if (family == "sym") return build_sym_table(small("sym"));
  if (family == "alt") return build_alt_table(small("alt"));
  if (family == "psl2") return build_psl2_table(param);
  if (family == "sl2") return build_sl2_table(param);
  if (family == "pgl2") return build_pgl2_table(param);
  throw DomainError("unknown family '" + family + "' (expected sym, alt, psl2, sl2 or pgl2)");
}

CharacterTable load_table(const std::string& spec, TableCache& cache, TableCache::Source* source) {
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return import_table(ss.str());
  }
  if (auto key = parse_table_key(spec)) return cache.load(*key, source);
  throw DomainError("'" + spec + "' is neither a table file nor a key such as sym_5 or psl2_7");
}

}  // namespace mckay
