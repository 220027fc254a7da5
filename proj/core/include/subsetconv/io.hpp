#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "subsetconv/combi.hpp"
#include "subsetconv/hyper.hpp"
#include "subsetconv/optimize.hpp"
#include "subsetconv/ring.hpp"
#include "subsetconv/set_function.hpp"
#include "subsetconv/steiner.hpp"

// Text formats. Blank lines and lines starting with '#' or 'c ' are ignored.
//
//   set function   sf <n> [int|big|rat|opt]      then 2^n lines "<mask> <value>", masks 0..2^n-1 ascending
//   graph          p gr <n> <m>                  then m lines "e <u> <v> <w>", 1-based, w > 0
//   hypergraph     p hg <n> <m>                  then m lines "h <w> <v1> ... <vj>"
namespace subsetconv::io {

enum class ValueKind { Int, Big, Rat, Opt };

std::string_view kind_name(ValueKind kind);

// Values are validated against the kind but kept as text until converted.
struct SetFunctionFile {
  int n = 0;
  ValueKind kind = ValueKind::Int;
  std::vector<std::string> values;

  GroundSet ground() const { return GroundSet(n); }
};

SetFunctionFile read_set_function_file(std::istream& in);
SetFunctionFile read_set_function_file(const std::string& path);

// Conversions throw ParseError when the file's kind cannot be represented
// (e.g. rationals into an integer ring) and GuardError when an integer does
// not fit in 64 bits.
SetFunction<CheckedInt> as_checked(const SetFunctionFile& file);
SetFunction<BigInt> as_bigint(const SetFunctionFile& file);
SetFunction<Rational> as_rational(const SetFunctionFile& file);
ExtendedWeightFunction as_weights(const SetFunctionFile& file);

template <Ring T>
void write_body(std::ostream& out, const SetFunction<T>& f) {
  for (std::size_t s = 0; s < f.size(); ++s) out << s << ' ' << to_string(f[static_cast<Mask>(s)]) << '\n';
}

void write_body(std::ostream& out, const ExtendedWeightFunction& f);

template <Ring T>
void write_set_function_file(std::ostream& out, const SetFunction<T>& f, ValueKind kind) {
  out << "sf " << f.n() << ' ' << kind_name(kind) << '\n';
  write_body(out, f);
}

void write_set_function_file(std::ostream& out, const ExtendedWeightFunction& f);

steiner::WeightedGraph read_graph_file(std::istream& in);
steiner::WeightedGraph read_graph_file(const std::string& path);
void write_graph_file(std::ostream& out, const steiner::WeightedGraph& g);

hyper::Hypergraph read_hypergraph_file(std::istream& in);
hyper::Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph_file(std::ostream& out, const hyper::Hypergraph& h);

// Comma-separated 1-based vertex list, e.g. "1,3,4".
std::vector<int> parse_vertex_list(std::string_view text);

}  // namespace subsetconv::io
