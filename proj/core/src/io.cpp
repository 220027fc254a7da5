#include "subsetconv/io.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "subsetconv/error.hpp"

namespace subsetconv::io {

namespace {

// Yields non-comment lines split into whitespace-separated tokens.
class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (tokens.empty() || tokens[0].starts_with('#') || tokens[0] == "c") continue;
      return true;
    }
    return false;
  }

  int line() const noexcept { return line_no_; }

private:
  std::istream& in_;
  int line_no_ = 0;
};

int parse_count(const std::string& text, int line, const char* what) {
  int v = -1;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 0) {
    throw ParseError(std::string("malformed ") + what + " '" + text + "'", line);
  }
  return v;
}

void validate_value(ValueKind kind, const std::string& text, int line) {
  try {
    switch (kind) {
      case ValueKind::Int:
        (void)parse_int64(text);
        return;
      case ValueKind::Big:
        (void)parse_bigint(text);
        return;
      case ValueKind::Rat:
        (void)parse_rational(text);
        return;
      case ValueKind::Opt:
        (void)ExtendedWeight::parse(text);
        return;
    }
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

std::string_view kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::Int:
      return "int";
    case ValueKind::Big:
      return "big";
    case ValueKind::Rat:
      return "rat";
    case ValueKind::Opt:
      return "opt";
  }
  return "?";
}

SetFunctionFile read_set_function_file(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError("empty input, expected 'sf <n> [int|big|rat|opt]'");
  if (tok[0] != "sf" || tok.size() < 2 || tok.size() > 3) {
    throw ParseError("expected header 'sf <n> [int|big|rat|opt]'", reader.line());
  }
  SetFunctionFile file;
  file.n = parse_count(tok[1], reader.line(), "ground set size");
  if (file.n > kMaxGroundSize) {
    throw GuardError("ground set size " + std::to_string(file.n) + " exceeds " + std::to_string(kMaxGroundSize));
  }
  if (tok.size() == 3) {
    if (tok[2] == "int") file.kind = ValueKind::Int;
    else if (tok[2] == "big") file.kind = ValueKind::Big;
    else if (tok[2] == "rat") file.kind = ValueKind::Rat;
    else if (tok[2] == "opt") file.kind = ValueKind::Opt;
    else throw ParseError("unknown value kind '" + tok[2] + "'", reader.line());
  }
  const std::size_t expected = std::size_t{1} << file.n;
  file.values.reserve(expected);
  while (reader.next(tok)) {
    if (tok.size() != 2) throw ParseError("expected '<mask> <value>'", reader.line());
    std::uint64_t mask = 0;
    auto [ptr, ec] = std::from_chars(tok[0].data(), tok[0].data() + tok[0].size(), mask);
    if (ec != std::errc() || ptr != tok[0].data() + tok[0].size()) {
      throw ParseError("malformed mask '" + tok[0] + "'", reader.line());
    }
    if (mask >= expected) throw ParseError("mask " + tok[0] + " out of range for n=" + std::to_string(file.n), reader.line());
    if (mask < file.values.size()) throw ParseError("duplicate or descending mask " + tok[0], reader.line());
    if (mask > file.values.size()) {
      throw ParseError("missing mask " + std::to_string(file.values.size()), reader.line());
    }
    validate_value(file.kind, tok[1], reader.line());
    file.values.push_back(tok[1]);
  }
  if (file.values.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " value lines for n=" + std::to_string(file.n) + ", got " +
                     std::to_string(file.values.size()));
  }
  return file;
}

SetFunctionFile read_set_function_file(const std::string& path) {
  auto in = open(path);
  return read_set_function_file(in);
}

SetFunction<CheckedInt> as_checked(const SetFunctionFile& file) {
  if (file.kind == ValueKind::Rat || file.kind == ValueKind::Opt) {
    throw ParseError(std::string("cannot read '") + std::string(kind_name(file.kind)) + "' values into an integer ring");
  }
  std::vector<CheckedInt> v;
  v.reserve(file.values.size());
  for (const auto& s : file.values) v.push_back(to_checked(parse_bigint(s)));
  return SetFunction<CheckedInt>(file.ground(), std::move(v));
}

SetFunction<BigInt> as_bigint(const SetFunctionFile& file) {
  if (file.kind == ValueKind::Rat || file.kind == ValueKind::Opt) {
    throw ParseError(std::string("cannot read '") + std::string(kind_name(file.kind)) + "' values into an integer ring");
  }
  std::vector<BigInt> v;
  v.reserve(file.values.size());
  for (const auto& s : file.values) v.push_back(parse_bigint(s));
  return SetFunction<BigInt>(file.ground(), std::move(v));
}

SetFunction<Rational> as_rational(const SetFunctionFile& file) {
  if (file.kind == ValueKind::Opt) throw ParseError("cannot read 'opt' values into the rational ring");
  std::vector<Rational> v;
  v.reserve(file.values.size());
  for (const auto& s : file.values) v.push_back(parse_rational(s));
  return SetFunction<Rational>(file.ground(), std::move(v));
}

ExtendedWeightFunction as_weights(const SetFunctionFile& file) {
  if (file.kind != ValueKind::Int && file.kind != ValueKind::Opt) {
    throw ParseError(std::string("cannot read '") + std::string(kind_name(file.kind)) + "' values as weights");
  }
  std::vector<ExtendedWeight> v;
  v.reserve(file.values.size());
  for (const auto& s : file.values) v.push_back(ExtendedWeight::parse(s));
  return ExtendedWeightFunction(file.ground(), std::move(v));
}

void write_body(std::ostream& out, const ExtendedWeightFunction& f) {
  for (std::size_t s = 0; s < f.size(); ++s) out << s << ' ' << f[static_cast<Mask>(s)].to_string() << '\n';
}

void write_set_function_file(std::ostream& out, const ExtendedWeightFunction& f) {
  out << "sf " << f.n() << " opt\n";
  write_body(out, f);
}

namespace {

struct Header {
  int n = 0;
  int m = 0;
};

Header read_header(LineReader& reader, const char* tag) {
  std::vector<std::string> tok;
  const std::string expect = std::string("p ") + tag + " <n> <m>";
  if (!reader.next(tok)) throw ParseError("empty input, expected '" + expect + "'");
  if (tok.size() != 4 || tok[0] != "p" || tok[1] != tag) throw ParseError("expected header '" + expect + "'", reader.line());
  return {parse_count(tok[2], reader.line(), "vertex count"), parse_count(tok[3], reader.line(), "edge count")};
}

int parse_vertex(const std::string& text, int n, int line) {
  const int v = parse_count(text, line, "vertex");
  if (v < 1 || v > n) throw ParseError("vertex " + text + " outside 1.." + std::to_string(n), line);
  return v;
}

std::int64_t parse_weight(const std::string& text, int line) {
  std::int64_t w = 0;
  try {
    w = parse_int64(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
  if (w < 1) throw ParseError("weight must be a positive integer, got " + text, line);
  return w;
}

}  // namespace

steiner::WeightedGraph read_graph_file(std::istream& in) {
  LineReader reader(in);
  const Header h = read_header(reader, "gr");
  std::vector<steiner::Edge> edges;
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    if (tok.size() != 4 || tok[0] != "e") throw ParseError("expected 'e <u> <v> <w>'", reader.line());
    const int u = parse_vertex(tok[1], h.n, reader.line());
    const int v = parse_vertex(tok[2], h.n, reader.line());
    if (u == v) throw ParseError("self-loop at vertex " + tok[1], reader.line());
    edges.push_back({u, v, parse_weight(tok[3], reader.line())});
  }
  if (static_cast<int>(edges.size()) != h.m) {
    throw ParseError("expected " + std::to_string(h.m) + " edge lines, got " + std::to_string(edges.size()));
  }
  return steiner::WeightedGraph(h.n, edges);
}

steiner::WeightedGraph read_graph_file(const std::string& path) {
  auto in = open(path);
  return read_graph_file(in);
}

void write_graph_file(std::ostream& out, const steiner::WeightedGraph& g) {
  out << "p gr " << g.vertex_count() << ' ' << g.edges().size() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

hyper::Hypergraph read_hypergraph_file(std::istream& in) {
  LineReader reader(in);
  const Header h = read_header(reader, "hg");
  if (h.n > kMaxGroundSize) throw GuardError("hypergraph has more than " + std::to_string(kMaxGroundSize) + " vertices");
  std::vector<hyper::Hyperedge> edges;
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    if (tok.size() < 3 || tok[0] != "h") throw ParseError("expected 'h <w> <v1> ... <vj>'", reader.line());
    const std::int64_t w = parse_weight(tok[1], reader.line());
    Mask m = 0;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      const int v = parse_vertex(tok[i], h.n, reader.line());
      const Mask bit = Mask{1} << (v - 1);
      if (m & bit) throw ParseError("vertex " + tok[i] + " repeated in hyperedge", reader.line());
      m |= bit;
    }
    edges.push_back({m, w});
  }
  if (static_cast<int>(edges.size()) != h.m) {
    throw ParseError("expected " + std::to_string(h.m) + " hyperedge lines, got " + std::to_string(edges.size()));
  }
  return hyper::Hypergraph(h.n, std::move(edges));
}

hyper::Hypergraph read_hypergraph_file(const std::string& path) {
  auto in = open(path);
  return read_hypergraph_file(in);
}

void write_hypergraph_file(std::ostream& out, const hyper::Hypergraph& h) {
  out << "p hg " << h.vertex_count() << ' ' << h.edges().size() << '\n';
  for (const auto& e : h.edges()) {
    out << "h " << e.w;
    for (Mask rest = e.vertices; rest != 0; rest &= rest - 1) out << ' ' << std::countr_zero(rest) + 1;
    out << '\n';
  }
}

std::vector<int> parse_vertex_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidArgument("malformed vertex list '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace subsetconv::io
