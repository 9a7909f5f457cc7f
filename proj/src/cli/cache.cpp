#include "mckay/cache.hpp"

#include "mckay/exchange.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fcntl.h>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace mckay {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

// Exclusive lock file held for the lifetime of the object.
class LockFile {
 public:
  explicit LockFile(std::filesystem::path path) : path_(std::move(path)) {
    using namespace std::chrono_literals;
    for (int attempt = 0; attempt < 200; ++attempt) {
      const int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
      if (fd >= 0) {
        ::close(fd);
        return;
      }
      std::this_thread::sleep_for(50ms);
    }
    throw Error("cache is locked by another writer: " + path_.string());
  }
  ~LockFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  LockFile(const LockFile&) = delete;
  LockFile& operator=(const LockFile&) = delete;

 private:
  std::filesystem::path path_;
};

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::filesystem::path TableCache::default_directory() {
  if (const char* env = std::getenv("MCKAY_CACHE"); env && *env) return env;
  return ".mckay-cache";
}

std::optional<CacheEntry> TableCache::entry(const TableKey& key) const {
  const auto doc = dir_ / (key.str() + ".json");
  const auto sum = dir_ / (key.str() + ".sha256");
  if (!std::filesystem::exists(doc) || !std::filesystem::exists(sum)) return std::nullopt;
  std::string digest = read_file(sum);
  while (!digest.empty() && (digest.back() == '\n' || digest.back() == ' ')) digest.pop_back();
  return CacheEntry{key.str(), doc, digest};
}

bool TableCache::intact(const CacheEntry& e) const { return sha256_hex(read_file(e.path)) == e.digest; }

CacheEntry TableCache::store(const TableKey& key, const CharacterTable& t) {
  std::filesystem::create_directories(dir_);
  LockFile lock(dir_ / ".lock");
  const std::string doc = export_table(t);
  const std::string digest = sha256_hex(doc);
  const auto path = dir_ / (key.str() + ".json");
  write_file(path, doc);
  write_file(dir_ / (key.str() + ".sha256"), digest + "\n");
  return CacheEntry{key.str(), path, digest};
}

CharacterTable TableCache::load(const TableKey& key, Source* source) {
  Source how = Source::built;
  if (auto e = entry(key)) {
    if (intact(*e)) {
      try {
        CharacterTable t = import_table(read_file(e->path));
        if (source) *source = Source::cache;
        return t;
      } catch (const Error&) {
        // fall through to a rebuild
      }
    }
    how = Source::rebuilt;
  }
  CharacterTable t = build_family(key.family, key.param);
  store(key, t);
  if (source) *source = how;
  return t;
}

}  // namespace mckay
