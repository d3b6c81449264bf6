#include "vertex_file.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <vector>

#include "clforms/attenuated.hpp"
#include "clforms/error.hpp"

namespace clforms::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& source, std::size_t line, const std::string& what) {
  fail(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

VertexSet read_vertex_set(std::istream& in, const std::string& source) {
  static const std::regex header(R"(^\s*clforms-vertexset\s+v1\s+q=(\d+)\s+n=(\d+)\s+l=(\d+)\s*$)");
  std::string line;
  std::size_t lineno = 0;
  std::optional<SpaceParams> sp;
  while (!sp && std::getline(in, line)) {
    ++lineno;
    const std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::smatch m;
    if (!std::regex_match(body, m, header))
      parse_fail(source, lineno, "expected header 'clforms-vertexset v1 q=<q> n=<n> l=<l>'");
    try {
      sp = SpaceParams::make(std::stoul(m[1]), std::stoul(m[2]), std::stoul(m[3]));
    } catch (const Error& e) {
      parse_fail(source, lineno, e.what());
    }
  }
  if (!sp) parse_fail(source, lineno + 1, "missing header");

  const std::size_t entries = std::size_t{sp->n} * sp->l;
  VertexSet out(*sp);
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream fields(body);
    std::vector<Elem> digits;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty() || tok[0] == '-')
        parse_fail(source, lineno, "'" + tok + "' is not a field element");
      if (v >= sp->q) parse_fail(source, lineno, "entry " + tok + " is not in [0," + std::to_string(sp->q) + ")");
      digits.push_back(static_cast<Elem>(v));
    }
    if (digits.size() != entries)
      parse_fail(source, lineno,
                 "expected " + std::to_string(entries) + " entries, found " + std::to_string(digits.size()));
    const std::uint64_t key = vertex_key(*sp, make_vertex(*sp, digits));
    if (out.contains(key)) parse_fail(source, lineno, "duplicate vertex");
    out.insert(key);
  }
  return out;
}

VertexSet read_vertex_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return read_vertex_set(in, path);
}

void write_vertex_set(std::ostream& out, const VertexSet& s, const std::string& comment) {
  const auto& sp = s.params();
  out << "clforms-vertexset v1 q=" << sp.q << " n=" << sp.n << " l=" << sp.l << "\n";
  if (!comment.empty()) out << "# " << comment << "\n";
  const std::size_t entries = std::size_t{sp.n} * sp.l;
  for (auto v : s.indices()) {
    const auto d = digits_of_index(sp.q, v, entries);
    for (std::size_t i = 0; i < d.size(); ++i) out << (i ? " " : "") << unsigned{d[i]};
    out << "\n";
  }
}

void write_vertex_set_file(const std::string& path, const VertexSet& s, const std::string& comment) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  write_vertex_set(out, s, comment);
}

}  // namespace clforms::cli
