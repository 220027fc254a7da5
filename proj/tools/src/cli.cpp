#include "cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <bit>
#include <ostream>
#include <sstream>

#include "selftest.hpp"
#include "subsetconv/subsetconv.hpp"

namespace subsetconv::cli {

namespace {

// Thrown for problems with the instance itself rather than the library.
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RingChoice { I64, Big };

const std::map<std::string, RingChoice> kRingNames{{"i64", RingChoice::I64}, {"big", RingChoice::Big}};

template <Ring T>
void zeta_and_print(SetFunction<T> f, bool invert, std::ostream& out) {
  io::write_body(out, invert ? mobius_inversion(f) : zeta_transform(f));
}

void cmd_zeta(const std::string& path, bool invert, RingChoice ring, std::ostream& out) {
  const auto file = io::read_set_function_file(path);
  if (file.kind == io::ValueKind::Rat) {
    zeta_and_print(io::as_rational(file), invert, out);
  } else if (ring == RingChoice::Big || file.kind == io::ValueKind::Big) {
    zeta_and_print(io::as_bigint(file), invert, out);
  } else {
    zeta_and_print(io::as_checked(file), invert, out);
  }
}

void require_same_n(const io::SetFunctionFile& a, const io::SetFunctionFile& b) {
  if (a.n != b.n) {
    throw ParseError("operands have different ground sets (n=" + std::to_string(a.n) + " and n=" + std::to_string(b.n) + ")");
  }
}

void cmd_conv(const std::string& a_path, const std::string& b_path, const std::string& mode_text, RingChoice ring,
              std::ostream& out) {
  const ProductMode mode = ProductMode::parse(mode_text);
  const auto a = io::read_set_function_file(a_path);
  const auto b = io::read_set_function_file(b_path);
  require_same_n(a, b);
  if (a.kind == io::ValueKind::Rat || b.kind == io::ValueKind::Rat) {
    io::write_body(out, product(io::as_rational(a), io::as_rational(b), mode));
  } else if (ring == RingChoice::Big) {
    io::write_body(out, product(io::as_bigint(a), io::as_bigint(b), mode));
  } else {
    try {
      io::write_body(out, product(io::as_checked(a), io::as_checked(b), mode));
    } catch (const OverflowError& e) {
      throw OverflowError(std::string(e.what()) + "; rerun with --ring big");
    }
  }
}

void cmd_optconv(const std::string& a_path, const std::string& b_path, const std::string& opt, const std::string& mode_text,
                 std::ostream& out) {
  const ProductMode mode = ProductMode::parse(mode_text);
  const auto a = io::read_set_function_file(a_path);
  const auto b = io::read_set_function_file(b_path);
  require_same_n(a, b);
  const OptMode om = opt == "max" ? OptMode::MaxSum : OptMode::MinSum;
  io::write_body(out, opt_product(io::as_weights(a), io::as_weights(b), om, mode));
}

std::vector<int> parse_list(const std::string& text) {
  return io::parse_vertex_list(text);
}

void cmd_steiner(const std::string& graph_path, const std::string& terminals, const std::string& algo,
                 std::ostream& out) {
  steiner::SteinerInstance inst(io::read_graph_file(graph_path), parse_list(terminals));
  steiner::SteinerResult res;
  if (algo == "classic") res = steiner::dreyfus_wagner_classic(inst);
  else if (algo == "fast") res = steiner::dreyfus_wagner_fast(inst);
  else res = steiner::steiner_brute(inst);
  if (!res.feasible()) throw Infeasible("terminals are not connected in the graph");
  out << "weight " << *res.weight << '\n';
  for (const auto& e : res.tree_edges) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

void cmd_color(const std::string& graph_path, int k, const std::string& report, std::ostream& out) {
  const auto g = combi::SimpleGraph::from_weighted(io::read_graph_file(graph_path));
  if (report == "chromatic") {
    out << "chromatic " << combi::chromatic_number(g) << '\n';
    return;
  }
  if (k < 0) throw InvalidArgument("-k is required for --report " + report);
  if (report == "count") {
    out << "count " << to_string(combi::count_proper_colorings(g, k)) << '\n';
  } else {
    io::write_body(out, combi::colorable_subgraphs(g, k).counts);
  }
}

void cmd_cliquepack(const std::string& graph_path, int k, int ell, std::ostream& out) {
  const auto g = combi::SimpleGraph::from_weighted(io::read_graph_file(graph_path));
  const auto r = combi::clique_packing(g, k, ell);
  out << "count " << to_string(r.count) << '\n';
  out << "exists " << (r.exists ? "yes" : "no") << '\n';
}

void cmd_branch(const std::string& path, const std::string& alpha, std::ostream& out) {
  const auto file = io::read_set_function_file(path);
  Rational a;
  try {
    a = parse_rational(alpha);
  } catch (const ParseError& e) {
    throw InvalidArgument(std::string("--alpha: ") + e.what());
  }
  io::write_body(out, combi::branching_expectation(combi::BranchingSpec(io::as_rational(file), a)));
}

void cmd_pathway(const std::string& graph_path, const std::string& leaves, int k, const std::string& delta,
                 std::uint64_t seed, std::ostream& out) {
  Rational d;
  try {
    d = parse_rational(delta);
  } catch (const ParseError& e) {
    throw InvalidArgument(std::string("--delta: ") + e.what());
  }
  auto graph = io::read_graph_file(graph_path);
  std::vector<int> leaf_list;
  if (leaves == "all") {
    for (int v = 1; v <= graph.vertex_count(); ++v) leaf_list.push_back(v);
  } else {
    leaf_list = parse_list(leaves);
  }
  combi::PathwayInstance inst(std::move(graph), leaf_list, k, d, seed);
  const auto best = combi::pathway_search(inst);
  for (std::size_t v = 0; v < best.size(); ++v) out << v + 1 << ' ' << best[v].to_string() << '\n';
}

void cmd_hyper(const std::string& path, const std::string& mode, std::ostream& out) {
  const auto h = io::read_hypergraph_file(path);
  const auto res = mode == "msth" ? hyper::msth(h) : hyper::mcsh(h);
  if (!res.feasible()) {
    throw Infeasible(mode == "msth" ? "hypergraph has no spanning hypertree" : "hypergraph is not connectable");
  }
  out << "weight " << *res.weight << '\n';
  for (int i : res.chosen) {
    const auto& e = h.edges()[static_cast<std::size_t>(i)];
    out << "h " << e.w;
    for (Mask rest = e.vertices; rest != 0; rest &= rest - 1) out << ' ' << std::countr_zero(rest) + 1;
    out << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact subset-lattice products and solvers", "subsetconv"};
  app.require_subcommand(1);

  std::string in_path, a_path, b_path, graph_path, mode_text = "subset", opt = "min", terminals, algo = "fast";
  std::string report = "count", alpha, leaves = "all", delta = "1/20", hmode = "mcsh";
  bool invert = false;
  RingChoice ring = RingChoice::I64;
  int k = -1, ell = 1, max_n = 8;
  std::uint64_t seed = 1;
  std::uint64_t selftest_seed = 20260501;

  auto* zeta = app.add_subcommand("zeta", "zeta transform (or Mobius inversion with --invert)");
  zeta->add_option("-i,--input", in_path, "set function file")->required();
  zeta->add_flag("--invert", invert, "apply Mobius inversion instead");
  zeta->add_option("--ring", ring, "integer ring")->transform(CLI::CheckedTransformer(kRingNames, CLI::ignore_case));

  auto* conv = app.add_subcommand("conv", "ring product of two set functions");
  conv->add_option("--mode", mode_text, "subset|cover|pack|icover|exact:<l>|xor")->capture_default_str();
  conv->add_option("-a", a_path, "left operand")->required();
  conv->add_option("-b", b_path, "right operand")->required();
  conv->add_option("--ring", ring, "integer ring: i64 (checked) or big")
      ->transform(CLI::CheckedTransformer(kRingNames, CLI::ignore_case));

  auto* optconv = app.add_subcommand("optconv", "min-sum or max-sum product");
  optconv->add_option("--opt", opt, "min|max")->check(CLI::IsMember({"min", "max"}))->capture_default_str();
  optconv->add_option("--product", mode_text, "subset|cover|icover|exact:<l>")->capture_default_str();
  optconv->add_option("-a", a_path, "left operand")->required();
  optconv->add_option("-b", b_path, "right operand")->required();

  auto* st = app.add_subcommand("steiner", "minimum Steiner tree");
  st->add_option("-g", graph_path, "graph file")->required();
  st->add_option("-t", terminals, "terminals, e.g. 1,4,7")->required();
  st->add_option("--algo", algo, "classic|fast|brute")->check(CLI::IsMember({"classic", "fast", "brute"}))->capture_default_str();

  auto* color = app.add_subcommand("color", "graph colouring counts");
  color->add_option("-g", graph_path, "graph file")->required();
  color->add_option("-k", k, "number of colours")->check(CLI::NonNegativeNumber);
  color->add_option("--report", report, "count|subgraphs|chromatic")
      ->check(CLI::IsMember({"count", "subgraphs", "chromatic"}))
      ->capture_default_str();

  auto* cp = app.add_subcommand("cliquepack", "k disjoint cliques of size >= l");
  cp->add_option("-g", graph_path, "graph file")->required();
  cp->add_option("-k", k, "number of cliques")->required()->check(CLI::NonNegativeNumber);
  cp->add_option("-l", ell, "minimum clique size")->required()->check(CLI::NonNegativeNumber);

  auto* branch = app.add_subcommand("branch", "expected leaf product of the random split process");
  branch->add_option("-i,--input", in_path, "leaf value file")->required();
  branch->add_option("--alpha", alpha, "split probability p/q")->required();

  auto* pathway = app.add_subcommand("pathway", "colour-coded k-vertex tree search");
  pathway->add_option("-g", graph_path, "graph file")->required();
  pathway->add_option("--leaves", leaves, "allowed leaves, e.g. 1,2,5 (default all)");
  pathway->add_option("-k", k, "tree size")->required();
  pathway->add_option("--delta", delta, "failure probability p/q")->capture_default_str();
  pathway->add_option("--seed", seed, "RNG seed")->capture_default_str();

  auto* hyp = app.add_subcommand("hyper", "spanning subhypergraph optimisation");
  hyp->add_option("-g", graph_path, "hypergraph file")->required();
  hyp->add_option("--mode", hmode, "mcsh|msth")->check(CLI::IsMember({"mcsh", "msth"}))->capture_default_str();

  auto* self = app.add_subcommand("selftest", "compare fast products against the direct oracle");
  self->add_option("--max-n", max_n, "largest ground set")->capture_default_str()->check(CLI::NonNegativeNumber);
  self->add_option("--seed", selftest_seed, "RNG seed")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream buf;
  try {
    (void)configured_threads();
    if (*zeta) cmd_zeta(in_path, invert, ring, buf);
    else if (*conv) cmd_conv(a_path, b_path, mode_text, ring, buf);
    else if (*optconv) cmd_optconv(a_path, b_path, opt, mode_text, buf);
    else if (*st) cmd_steiner(graph_path, terminals, algo, buf);
    else if (*color) cmd_color(graph_path, k, report, buf);
    else if (*cp) cmd_cliquepack(graph_path, k, ell, buf);
    else if (*branch) cmd_branch(in_path, alpha, buf);
    else if (*pathway) cmd_pathway(graph_path, leaves, k, delta, seed, buf);
    else if (*hyp) cmd_hyper(graph_path, hmode, buf);
    else if (*self) {
      const bool ok = run_selftest(max_n, selftest_seed, buf);
      out << buf.str();
      if (!ok) {
        err << "selftest: oracle mismatch\n";
        return kGuard;
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kFormat;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return kGuard;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kGuard;
  } catch (const InexactDivision& e) {
    err << "internal: " << e.what() << '\n';
    return kGuard;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << "guard: out of memory\n";
    return kGuard;
  }
  out << buf.str();
  return kOk;
}

}  // namespace subsetconv::cli
