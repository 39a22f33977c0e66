#include "critgraph/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "critgraph/errors.hpp"

namespace critgraph::dimacs {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw FormatError("line " + std::to_string(line_no) + ": expected unsigned integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse(std::string_view text) {
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == 'c') continue;
    auto tok = split_ws(line);
    if (tok[0] == "p") {
      if (have_header) throw FormatError("line " + std::to_string(line_no) + ": duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw FormatError("line " + std::to_string(line_no) + ": malformed header, expected 'p edge <n> <m>'");
      n = to_uint(tok[2], line_no);
      m = to_uint(tok[3], line_no);
      have_header = true;
      edges.reserve(m);
    } else if (tok[0] == "e") {
      if (!have_header) throw FormatError("line " + std::to_string(line_no) + ": edge before problem line");
      if (tok.size() != 3) throw FormatError("line " + std::to_string(line_no) + ": malformed edge line");
      const auto a = to_uint(tok[1], line_no), b = to_uint(tok[2], line_no);
      if (a < 1 || a > n || b < 1 || b > n)
        throw FormatError("line " + std::to_string(line_no) + ": endpoint out of range 1.." + std::to_string(n));
      if (a == b) throw FormatError("line " + std::to_string(line_no) + ": self-loop");
      edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    } else {
      throw FormatError("line " + std::to_string(line_no) + ": unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw FormatError("missing 'p edge' problem line");
  if (edges.size() != m)
    throw FormatError("edge count mismatch: header declares " + std::to_string(m) + ", found " + std::to_string(edges.size()));
  Graph g(static_cast<std::size_t>(n), edges);
  if (g.num_edges() != m) throw FormatError("duplicate edges in input");
  return g;
}

Graph read(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Graph read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return read(in);
}

void write(std::ostream& out, const Graph& g, std::string_view comment) {
  std::size_t pos = 0;
  while (pos < comment.size()) {
    std::size_t end = comment.find('\n', pos);
    if (end == std::string_view::npos) end = comment.size();
    out << "c " << comment.substr(pos, end - pos) << '\n';
    pos = end + 1;
  }
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string write(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  write(out, g, comment);
  return out.str();
}

void write_file(const std::filesystem::path& path, const Graph& g, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  write(out, g, comment);
}

}  // namespace critgraph::dimacs
