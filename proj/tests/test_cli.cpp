#include "mckay/cache.hpp"
#include "mckay/exchange.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace mckay;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

// One scratch directory per test process, holding the cache and captured output.
const fs::path& scratch() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / ("mckay-cli-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args, const fs::path& cache = scratch() / "cache") {
  const fs::path out = scratch() / "stdout", err = scratch() / "stderr";
  const std::string cmd = "cd '" + scratch().string() + "' && MCKAY_CACHE='" + cache.string() + "' '" MCKAY_BINARY "' " +
                          args + " >'" + out.string() + "' 2>'" + err.string() + "'";
  const int raw = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(raw));
  return {WEXITSTATUS(raw), slurp(out), slurp(err)};
}

std::string without_timestamp(const std::string& report) {
  return std::regex_replace(report, std::regex("\"timestamp\": \"[^\"]*\""), "\"timestamp\": \"\"");
}

}  // namespace

TEST_CASE("build writes exchange documents") {
  const auto r = run("build sym 5");
  CHECK(r.status == 0);
  CHECK(r.err == "S5: order 120, 7 classes, degrees 1^2 4^2 5^2 6\n");
  CHECK(import_table(r.out).class_count() == 7);

  const fs::path file = scratch() / "psl2_7.json";
  const auto p = run("build psl2 7 -o '" + file.string() + "'");
  CHECK(p.status == 0);
  CHECK(p.out.find("order 168, 6 classes") != std::string::npos);
  const auto t = import_table(slurp(file));
  CHECK(t.order == 168);
  CHECK(t.class_count() == 6);

  CHECK(run("build psl2 6").status == 2);
  CHECK(run("build sym 13").status == 2);
  CHECK(run("build foo 3").status == 2);
  CHECK(run("build sym").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("graph prints diameters and exports") {
  const auto r = run("graph sym_5 'chi(4,1)'");
  CHECK(r.status == 0);
  CHECK(r.out == "diameter 4\n");
  CHECK(run("graph sym_5 'chi(5)'").out == "disconnected\n");

  const auto dot = run("graph psl2_7 St --dot -");
  CHECK(dot.status == 0);
  CHECK(dot.err == "diameter 2\n");
  CHECK(dot.out.rfind("digraph \"M(PSL2(7))\"", 0) == 0);
  CHECK(dot.out.find("v5 [label=") != std::string::npos);
  CHECK(dot.out.find("v6 [label=") == std::string::npos);

  const fs::path csv = scratch() / "s3.csv";
  CHECK(run("graph sym_3 'chi(2,1)' --csv '" + csv.string() + "'").status == 0);
  CHECK(slurp(csv).rfind("from\\to,", 0) == 0);

  const auto missing = run("graph sym_5 nosuch");
  CHECK(missing.status == 2);
  CHECK(missing.err.find("no character 'nosuch'") != std::string::npos);
  CHECK(run("graph nosuch_file.json x").status == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify alt --n 5").status == 0);
  CHECK(run("verify stsq --table psl2_7").status == 0);
  CHECK(run("verify qs --g sl2_5 --s psl2_5").status == 0);
  CHECK(run("verify support --table psl2_7").status == 2);
  CHECK(run("verify support --table psl2_7 --support").status == 0);
  CHECK(run("verify sigma --table psl2_9").status == 0);
  CHECK(run("verify useag --table psl2_5 --l 4").status == 0);
  CHECK(run("verify gluck --table psl2_13").status == 0);
  CHECK(run("verify bb --table sym_5 --alpha 'chi(4,1)'").status == 0);
  CHECK(run("verify lower --table alt_6").status == 0);
  CHECK(run("verify conjecture --table psl2_8").status == 0);
  CHECK(run("verify delta --table psl2_11 --support").status == 0);
  CHECK(run("verify threshold --n 2 --table psl2_7").status == 0);
  CHECK(run("verify multfree --table sym_5 --constituents 'chi(4,1)' 'chi(3,2)'").status == 0);
  CHECK(run("verify stval --table sl2_9").status == 0);
  CHECK(run("verify alt --n 4").status == 2);
  CHECK(run("verify alt").status == 2);
  CHECK(run("verify nosuch --table sym_5").status == 2);
  CHECK(run("verify stsq").status == 2);
  CHECK(run("verify gluck --table sym_5").status == 2);

  // A table with no character of degree |G|_2 cannot carry a Steinberg character.
  std::string q8 = slurp(std::string(MCKAY_TEST_DATA) + "/q8.json");
  q8.insert(q8.find("\"order\""), "\"characteristic\": 2, ");
  spit(scratch() / "q8p2.json", q8);
  CHECK(run("verify stsq --table q8p2.json").status == 1);
}

TEST_CASE("reports are JSON with a verdict") {
  const auto r = run("verify alt --n 5");
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["suite"] == "alt");
  CHECK(doc["verdict"] == "pass");
  CHECK(doc["cases"].size() > 0);
  CHECK(std::regex_match(doc["timestamp"].get<std::string>(), std::regex(R"(\d{4}-\d\d-\d\dT\d\d:\d\d:\d\dZ)")));

  const fs::path out = scratch() / "report.json";
  CHECK(run("verify conjecture --table alt_5 --out '" + out.string() + "'").status == 0);
  CHECK(nlohmann::json::parse(slurp(out))["verdict"] == "report");
}

TEST_CASE("identical inputs give identical reports") {
  for (const std::string args : {"verify stsq --table psl2_9", "verify alt --n 6", "verify sigma --table psl2_8 --l 40",
                                 "verify qs --g sl2_7 --s psl2_7"}) {
    const auto a = run(args), b = run(args);
    CHECK(a.status == b.status);
    CHECK(without_timestamp(a.out) == without_timestamp(b.out));
  }
  CHECK(run("build alt 7").out == run("build alt 7").out);
}

TEST_CASE("the cache detects tampering and rebuilds") {
  const fs::path cache = scratch() / "tamper";
  fs::remove_all(cache);
  CHECK(run("verify stsq --table psl2_11", cache).status == 0);
  const fs::path doc = cache / "psl2_11.json", digest = cache / "psl2_11.sha256";
  REQUIRE(fs::exists(doc));
  REQUIRE(fs::exists(digest));
  const std::string original = slurp(doc);
  CHECK(slurp(digest) == sha256_hex(original) + "\n");

  // A second run reads the cache without rewriting it.
  const auto mtime = fs::last_write_time(doc);
  CHECK(run("verify stsq --table psl2_11", cache).err.empty());
  CHECK(fs::last_write_time(doc) == mtime);

  // Flip one character value; the digest no longer matches.
  std::string bad = original;
  const auto pos = bad.find("\"-1\"");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 4, "\"-2\"");
  spit(doc, bad);
  const auto r = run("verify stsq --table psl2_11", cache);
  CHECK(r.status == 0);
  CHECK(r.err.find("rebuilt") != std::string::npos);
  CHECK(slurp(doc) == original);

  // A forged digest over a corrupt document still fails validation and is rebuilt.
  spit(doc, bad);
  spit(digest, sha256_hex(bad) + "\n");
  const auto forged = run("verify stsq --table psl2_11", cache);
  CHECK(forged.status == 0);
  CHECK(forged.err.find("rebuilt") != std::string::npos);
  CHECK(slurp(doc) == original);

  CHECK_FALSE(fs::exists(cache / ".lock"));
}

TEST_CASE("table keys and digests") {
  CHECK(parse_table_key("psl2_7")->family == "psl2");
  CHECK(parse_table_key("sym_12")->param == 12);
  CHECK_FALSE(parse_table_key("psl2").has_value());
  CHECK_FALSE(parse_table_key("foo_3").has_value());
  CHECK_FALSE(parse_table_key("sym_x").has_value());
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK_THROWS_AS(build_family("sym", 0), DomainError);
}

TEST_CASE("the default cache directory follows the environment") {
  ::setenv("MCKAY_CACHE", "/tmp/somewhere", 1);
  CHECK(TableCache::default_directory() == fs::path("/tmp/somewhere"));
  ::unsetenv("MCKAY_CACHE");
  CHECK(TableCache::default_directory() == fs::path(".mckay-cache"));
}
