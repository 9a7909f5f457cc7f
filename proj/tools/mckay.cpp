// mckay: build character tables, draw McKay graphs, run bound verifiers.
//
// Exit status: 0 pass (or a report-only suite), 1 verification failure,
// 2 usage, parse or domain error.

#include "mckay/bounds.hpp"
#include "mckay/cache.hpp"
#include "mckay/exchange.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace mckay;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string degree_multiset(const CharacterTable& t) {
  std::map<Integer, unsigned> counts;
  for (const auto& chi : t.characters) ++counts[chi.degree()];
  std::string out;
  for (const auto& [d, m] : counts) out += (out.empty() ? "" : " ") + to_string(d) + (m > 1 ? "^" + std::to_string(m) : "");
  return out;
}

std::size_t character_by_name(const CharacterTable& t, const std::string& name) {
  if (auto i = t.find_character(name)) return *i;
  std::string known;
  for (const auto& chi : t.characters) known += (known.empty() ? "" : ", ") + chi.name;
  throw UsageError("no character '" + name + "' in " + t.name + " (characters: " + known + ")");
}

CharacterTable open_table(const std::string& spec, TableCache& cache) {
  TableCache::Source source = TableCache::Source::cache;
  CharacterTable t = load_table(spec, cache, &source);
  if (source == TableCache::Source::rebuilt)
    std::cerr << "note: cached " << spec << " failed its digest check and was rebuilt\n";
  return t;
}

struct VerifyOptions {
  std::string suite;
  std::string table, alpha, chi, g, s, out = "-";
  std::vector<std::string> constituents;
  unsigned l = 0;
  unsigned n = 0;
  bool support = false;
};

CharacterTable need_table(const VerifyOptions& o, TableCache& cache, const std::string& spec, const char* flag) {
  if (spec.empty()) throw UsageError("suite '" + o.suite + "' needs " + flag);
  CharacterTable t = open_table(spec, cache);
  if (o.support) t = with_rank_one_support(std::move(t));
  return t;
}

std::optional<std::size_t> optional_character(const CharacterTable& t, const std::string& name) {
  if (name.empty()) return std::nullopt;
  return character_by_name(t, name);
}

BoundReport run_suite(const VerifyOptions& o, TableCache& cache) {
  const std::string& s = o.suite;
  if (s == "alt") {
    if (o.n == 0) throw UsageError("suite 'alt' needs --n");
    return verify_alt(o.n);
  }
  if (s == "qs") {
    const CharacterTable g = need_table(o, cache, o.g, "--g");
    const CharacterTable q = need_table(o, cache, o.s, "--s");
    return verify_quasisimple(g, q);
  }
  if (s == "threshold") {
    std::optional<CharacterTable> t;
    if (!o.table.empty()) t = need_table(o, cache, o.table, "--table");
    unsigned n = o.n;
    if (n == 0) {
      if (!t || !t->lie) throw UsageError("suite 'threshold' needs --n or a Lie-type --table");
      n = t->lie->n;
    }
    auto r = lie_threshold(n, t ? &*t : nullptr);
    BoundReport report = std::move(r.window);
    BoundCase c;
    c.id = "q0/n=" + std::to_string(n);
    c.inputs = {{"n", n}};
    c.computed = {{"q0", r.q0 ? json_integer(*r.q0) : Json(nullptr)}, {"log10_q0", r.log10_q0}};
    c.bound = {{"relation", "q0 = (49 f(n))^16"}};
    report.cases.insert(report.cases.begin(), std::move(c));
    return report;
  }

  const CharacterTable t = need_table(o, cache, o.table, "--table");
  if (s == "bb") return verify_bb(t, optional_character(t, o.alpha));
  if (s == "lower") return verify_lower(t, optional_character(t, o.alpha));
  if (s == "conjecture") return verify_conjecture(t, optional_character(t, o.alpha));
  if (s == "stsq") return verify_stsq(t);
  if (s == "stval") return verify_stval(t);
  if (s == "gluck") return verify_gluck(t);
  if (s == "useag") return verify_useag(t, o.l ? o.l : 6, optional_character(t, o.chi));
  if (s == "sigma") return verify_sigma(t, o.l ? o.l : 163, optional_character(t, o.chi));
  if (s == "delta") return verify_delta(t, o.l ? o.l : 163, optional_character(t, o.chi));
  if (s == "support") return support_count_check(t);
  if (s == "multfree") {
    if (o.constituents.empty()) throw UsageError("suite 'multfree' needs --constituents");
    std::vector<std::size_t> idx;
    for (const auto& name : o.constituents) idx.push_back(character_by_name(t, name));
    return verify_multfree(t, idx);
  }
  throw UsageError("unknown suite '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"McKay graphs of finite groups: character tables, diameters and bound verifiers"};
  app.require_subcommand(1);

  std::string family, out;
  std::uint64_t param = 0;
  auto* build = app.add_subcommand("build", "Build a character table and write its exchange document");
  build->add_option("family", family, "sym | alt | psl2 | sl2 | pgl2")->required();
  build->add_option("param", param, "n for sym/alt, q for the Lie families")->required();
  build->add_option("-o,--out", out, "Output path (default: standard output)");

  std::string graph_table, graph_alpha, dot_path, csv_path;
  auto* graph = app.add_subcommand("graph", "Build M(G, alpha) and print its diameter");
  graph->add_option("table", graph_table, "Table file or key such as psl2_7")->required();
  graph->add_option("alpha", graph_alpha, "Character name")->required();
  graph->add_option("--dot", dot_path, "Write DOT ('-' for standard output)");
  graph->add_option("--csv", csv_path, "Write CSV adjacency ('-' for standard output)");

  VerifyOptions v;
  auto* verify = app.add_subcommand("verify", "Run a verifier suite and emit a JSON report");
  verify->add_option("suite", v.suite,
                     "bb | lower | stsq | stval | useag | sigma | gluck | alt | qs | multfree | support | conjecture | "
                     "delta | threshold")
      ->required();
  verify->add_option("--table", v.table, "Table file or key");
  verify->add_option("--alpha", v.alpha, "Connecting character");
  verify->add_option("--chi", v.chi, "Character for sigma/useag/delta (default: every nontrivial one)");
  verify->add_option("--l", v.l, "Power l (sigma, delta: default 163; useag: maximum, default 6)");
  verify->add_option("--n", v.n, "Degree n (alt) or rank parameter n (threshold)");
  verify->add_option("--g", v.g, "Quasi-simple group table (qs)");
  verify->add_option("--s", v.s, "Simple quotient table (qs)");
  verify->add_option("--constituents", v.constituents, "Distinct irreducible constituents (multfree); repeat or list");
  verify->add_flag("--support", v.support, "Annotate rank-one supports (n = 2 tables)");
  verify->add_option("--out", v.out, "Report path ('-' for standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  TableCache cache(TableCache::default_directory());
  try {
    if (*build) {
      const CharacterTable t = build_family(family, param);
      const std::string doc = export_table(t);
      std::ostream& summary = out.empty() ? std::cerr : std::cout;
      if (out.empty())
        std::cout << doc;
      else
        write_output(out, doc);
      summary << t.name << ": order " << to_string(t.order) << ", " << t.class_count() << " classes, degrees "
              << degree_multiset(t) << "\n";
      return kPass;
    }
    if (*graph) {
      const CharacterTable t = open_table(graph_table, cache);
      const McKayGraph g = mckay_graph(t, character_by_name(t, graph_alpha));
      if (!dot_path.empty()) write_output(dot_path, to_dot(g));
      if (!csv_path.empty()) write_output(csv_path, to_csv(g));
      const auto d = diameter(g);
      std::ostream& info = (dot_path == "-" || csv_path == "-") ? std::cerr : std::cout;
      if (d.value)
        info << "diameter " << *d.value << "\n";
      else
        info << "disconnected\n";
      return kPass;
    }
    const BoundReport report = run_suite(v, cache);
    Json doc = report.to_json();
    doc["timestamp"] = timestamp();
    write_output(v.out, doc.dump(2) + "\n");
    return report.pass() ? kPass : kFail;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << " at byte " << e.position()
              << (e.location().empty() ? "" : " in " + e.location()) << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
