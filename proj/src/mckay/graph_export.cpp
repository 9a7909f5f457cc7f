#include "mckay/mckay_graph.hpp"

#include <sstream>

namespace mckay {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const McKayGraph& g) {
  const auto& t = g.table();
  std::ostringstream out;
  out << "digraph " << quoted("M(" + t.name + ")") << " {\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    out << "  v" << i << " [label=" << quoted(t.characters[i].name + " (" + to_string(t.characters[i].degree()) + ")")
        << "];\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = 0; j < g.vertex_count(); ++j)
      if (g.has_edge(i, j)) out << "  v" << i << " -> v" << j << " [label=\"" << to_string(g.adjacency()[i][j]) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_csv(const McKayGraph& g) {
  const auto& t = g.table();
  std::ostringstream out;
  out << "from\\to";
  for (const auto& chi : t.characters) out << ',' << csv_field(chi.name);
  out << '\n';
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    out << csv_field(t.characters[i].name);
    for (std::size_t j = 0; j < g.vertex_count(); ++j) out << ',' << to_string(g.adjacency()[i][j]);
    out << '\n';
  }
  return out.str();
}

}  // namespace mckay
