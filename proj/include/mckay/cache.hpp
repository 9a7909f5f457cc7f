#pragma once

#include "mckay/chartable.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace mckay {

/// Builder family and parameter, written "sym_5", "psl2_7" and so on.
struct TableKey {
  std::string family;  // sym | alt | psl2 | sl2 | pgl2
  std::uint64_t param = 0;

  std::string str() const { return family + "_" + std::to_string(param); }
};

std::optional<TableKey> parse_table_key(std::string_view text);

/// Runs the builder for a family; throws DomainError for an unknown family
/// or a parameter outside the builder's range.
CharacterTable build_family(const std::string& family, std::uint64_t param);

/// Lower-case hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

struct CacheEntry {
  std::string key;
  std::filesystem::path path;    // exchange document
  std::string digest;            // SHA-256 recorded when the document was written
};

/// Directory of built tables: <key>.json plus <key>.sha256. A document whose
/// digest no longer matches is treated as tampered and rebuilt. Writers take
/// an exclusive lock file for the duration of a store.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// $MCKAY_CACHE, or "./.mckay-cache".
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const { return dir_; }

  std::optional<CacheEntry> entry(const TableKey& key) const;
  /// Digest of the stored document equals the recorded digest.
  bool intact(const CacheEntry& e) const;

  enum class Source { cache, built, rebuilt };

  /// The table for `key`, revalidated on load; built (and stored) when absent
  /// or tampered. `source` reports which happened.
  CharacterTable load(const TableKey& key, Source* source = nullptr);

  CacheEntry store(const TableKey& key, const CharacterTable& t);

 private:
  std::filesystem::path dir_;
};

/// A table named either by a file path (an exchange document) or by a cache
/// key such as "psl2_7". `source` is set only for cache keys.
CharacterTable load_table(const std::string& spec, TableCache& cache, TableCache::Source* source = nullptr);

}  // namespace mckay
