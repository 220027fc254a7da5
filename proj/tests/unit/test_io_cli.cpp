#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

#ifdef SUBSETCONV_TEST_CLI
#include "cli.hpp"
#endif

using namespace subsetconv;
using namespace testsupport;

namespace {

namespace fs = std::filesystem;

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("subsetconv-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

#ifdef SUBSETCONV_TEST_CLI
struct Result {
  int code;
  std::string out, err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = subsetconv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
#endif

io::SetFunctionFile parse(const std::string& text) {
  std::istringstream in(text);
  return io::read_set_function_file(in);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("set function files") {
  const auto f = parse("# comment\nsf 2\n0 1\n1 2\n\n2 3\n3 4\n");
  CHECK(f.n == 2);
  CHECK(values_of(io::as_checked(f)) == std::vector<std::int64_t>{1, 2, 3, 4});

  const auto opt = parse("sf 1 opt\n0 inf\n1 -3\n");
  CHECK(strings_of(io::as_weights(opt)) == std::vector<std::string>{"inf", "-3"});
  const auto rat = parse("sf 1 rat\n0 1/2\n1 -4/6\n");
  CHECK(to_string(io::as_rational(rat)[1]) == "-2/3");
  const auto big = parse("sf 0 big\n0 123456789012345678901234567890\n");
  CHECK(to_string(io::as_bigint(big)[0]) == "123456789012345678901234567890");
  CHECK_THROWS_AS(io::as_checked(big), GuardError);
}

TEST_CASE("set function format errors") {
  auto message = [](const std::string& text) {
    try {
      (void)parse(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("sf 2\n0 1\n1 2\n2 3\n").find("expected 4 value lines") != std::string::npos);
  CHECK(message("sf 2\n0 1\n1 2\n1 3\n3 4\n").find("duplicate") != std::string::npos);
  CHECK(message("sf 2\n0 1\n2 2\n1 3\n3 4\n").find("missing mask 1") != std::string::npos);
  CHECK(message("sf 1\n0 1\n2 2\n").find("out of range") != std::string::npos);
  CHECK(message("sf 1\n0 1\n1 x\n").find("line 3") != std::string::npos);
  CHECK(message("sf 1\n0 inf\n1 2\n").find("malformed") != std::string::npos);
  CHECK(message("sf 1 nope\n").find("unknown value kind") != std::string::npos);
  CHECK(message("").find("empty") != std::string::npos);
  CHECK(message("gr 1\n").find("header") != std::string::npos);
  CHECK_THROWS_AS(io::as_checked(parse("sf 0 rat\n0 1/2\n")), ParseError);
}

TEST_CASE("set function round trip") {
  std::mt19937_64 rng(91);
  for (int n = 0; n <= 6; ++n) {
    const auto f = random_ints(n, -50, 50, rng);
    std::ostringstream out;
    io::write_set_function_file(out, f, io::ValueKind::Int);
    CHECK(io::as_checked(parse(out.str())) == f);

    const auto q = random_rationals(n, rng);
    std::ostringstream qout;
    io::write_set_function_file(qout, q, io::ValueKind::Rat);
    CHECK(io::as_rational(parse(qout.str())) == q);

    const auto w = random_weights(n, 8, 0.3, OptMode::MinSum, rng);
    std::ostringstream wout;
    io::write_set_function_file(wout, w);
    CHECK(io::as_weights(parse(wout.str())) == w);
  }
}

TEST_CASE("graph files") {
  std::istringstream ok("c a path\np gr 3 2\ne 1 2 1\ne 2 3 2\n");
  const auto g = io::read_graph_file(ok);
  CHECK(g.vertex_count() == 3);
  CHECK(g.weight(2, 3) == 2);
  std::ostringstream out;
  io::write_graph_file(out, g);
  std::istringstream back(out.str());
  CHECK(io::read_graph_file(back).edges() == g.edges());

  for (const char* bad : {"p gr 3 1\ne 1 1 1\n", "p gr 3 1\ne 1 4 1\n", "p gr 3 1\ne 1 2 0\n", "p gr 3 2\ne 1 2 1\n",
                          "p gr 3 1\ne 1 2\n", "p hg 3 1\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(io::read_graph_file(in), ParseError);
  }
}

TEST_CASE("hypergraph files") {
  std::istringstream ok("p hg 3 2\nh 1 1 2\nh 3 1 2 3\n");
  const auto h = io::read_hypergraph_file(ok);
  CHECK(h.edges().size() == 2);
  CHECK(h.edges()[1].vertices == 0b111);
  std::ostringstream out;
  io::write_hypergraph_file(out, h);
  std::istringstream back(out.str());
  CHECK(io::read_hypergraph_file(back).edges() == h.edges());
  for (const char* bad : {"p hg 3 1\nh 1\n", "p hg 3 1\nh 1 1 1\n", "p hg 3 1\nh 1 4\n", "p hg 3 2\nh 1 1\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(io::read_hypergraph_file(in), ParseError);
  }
}

TEST_CASE("vertex lists") {
  CHECK(io::parse_vertex_list("1,3,4") == std::vector<int>{1, 3, 4});
  CHECK_THROWS_AS(io::parse_vertex_list("1,,2"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_vertex_list("a"), InvalidArgument);
}

}

#ifdef SUBSETCONV_TEST_CLI
TEST_SUITE("cli") {

TEST_CASE("conv example") {
  Scratch s;
  const auto f = s.write("f.sf", "sf 2\n0 1\n1 2\n2 3\n3 4\n");
  const auto r = run_cli({"conv", "--mode", "subset", "-a", f, "-b", f});
  CHECK(r.code == 0);
  CHECK(r.out == "0 1\n1 4\n2 6\n3 20\n");
  CHECK(run_cli({"conv", "--mode", "cover", "-a", f, "-b", f}).out == "0 1\n1 8\n2 15\n3 76\n");
  CHECK(run_cli({"conv", "--mode", "exact:1", "-a", f, "-b", f, "--ring", "big"}).out == "0 0\n1 4\n2 9\n3 40\n");
  CHECK(run_cli({"conv", "--mode", "xor", "-a", f, "-b", f}).out == "0 30\n1 28\n2 22\n3 20\n");
}

TEST_CASE("steiner example and algorithm agreement") {
  Scratch s;
  const auto g = s.write("path.gr", "p gr 3 2\ne 1 2 1\ne 2 3 1\n");
  const auto fast = run_cli({"steiner", "-g", g, "-t", "1,3", "--algo", "fast"});
  CHECK(fast.code == 0);
  CHECK(fast.out == "weight 2\ne 1 2 1\ne 2 3 1\n");
  CHECK(run_cli({"steiner", "-g", g, "-t", "1,3", "--algo", "classic"}).out == fast.out);
  CHECK(run_cli({"steiner", "-g", g, "-t", "1,3", "--algo", "brute"}).out == fast.out);

  const auto split = s.write("split.gr", "p gr 4 2\ne 1 2 1\ne 3 4 1\n");
  const auto r = run_cli({"steiner", "-g", split, "-t", "1,4"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
}

TEST_CASE("format errors exit 2 and name the line count") {
  Scratch s;
  const auto bad = s.write("bad.sf", "sf 2\n0 1\n1 2\n2 3\n");
  const auto r = run_cli({"zeta", "-i", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("expected 4 value lines") != std::string::npos);
  CHECK(r.err.find("got 3") != std::string::npos);
  CHECK(run_cli({"zeta", "-i", (s.dir / "missing.sf").string()}).code == 2);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"conv", "-a", "x"}).code == 1);
  CHECK(run_cli({"steiner", "-g", "x", "-t", "1", "--algo", "quantum"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("i64 overflow exits 4 with a hint, big succeeds") {
  Scratch s;
  const auto f = s.write("huge.sf", "sf 1\n0 4000000000000\n1 4000000000000\n");
  const auto r = run_cli({"conv", "-a", f, "-b", f});
  CHECK(r.code == 4);
  CHECK(r.err.find("--ring big") != std::string::npos);
  const auto b = run_cli({"conv", "-a", f, "-b", f, "--ring", "big"});
  CHECK(b.code == 0);
  CHECK(b.out == "0 16000000000000000000000000\n1 32000000000000000000000000\n");
}

TEST_CASE("zeta and inversion round trip through text") {
  Scratch s;
  const auto f = s.write("f.sf", "sf 2\n0 1\n1 2\n2 3\n3 4\n");
  const auto z = run_cli({"zeta", "-i", f});
  CHECK(z.out == "0 1\n1 3\n2 4\n3 10\n");
  const auto zf = s.write("z.sf", "sf 2\n" + z.out);
  CHECK(run_cli({"zeta", "-i", zf, "--invert"}).out == "0 1\n1 2\n2 3\n3 4\n");
  const auto q = s.write("q.sf", "sf 1 rat\n0 1/2\n1 1/3\n");
  CHECK(run_cli({"zeta", "-i", q}).out == "0 1/2\n1 5/6\n");
}

TEST_CASE("optconv") {
  Scratch s;
  const auto a = s.write("a.sf", "sf 2 opt\n0 inf\n1 1\n2 2\n3 inf\n");
  CHECK(run_cli({"optconv", "--opt", "min", "--product", "subset", "-a", a, "-b", a}).out == "0 inf\n1 inf\n2 inf\n3 3\n");
  const auto b = s.write("b.sf", "sf 2\n0 0\n1 3\n2 3\n3 1\n");
  CHECK(run_cli({"optconv", "--opt", "max", "-a", b, "-b", b}).out == "0 0\n1 3\n2 3\n3 6\n");
  CHECK(run_cli({"optconv", "--product", "xor", "-a", b, "-b", b}).code == 1);
}

TEST_CASE("graph commands") {
  Scratch s;
  const auto tri = s.write("tri.gr", "p gr 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
  CHECK(run_cli({"color", "-g", tri, "-k", "3"}).out == "count 6\n");
  CHECK(run_cli({"color", "-g", tri, "--report", "chromatic"}).out == "chromatic 3\n");
  CHECK(run_cli({"color", "-g", tri, "-k", "2", "--report", "subgraphs"}).out ==
        "0 1\n1 2\n2 2\n3 2\n4 2\n5 2\n6 2\n7 0\n");
  CHECK(run_cli({"color", "-g", tri}).code == 1);
  CHECK(run_cli({"cliquepack", "-g", tri, "-k", "1", "-l", "3"}).out == "count 1\nexists yes\n");
  CHECK(run_cli({"cliquepack", "-g", tri, "-k", "2", "-l", "2"}).out == "count 0\nexists no\n");

  const auto edge = s.write("edge.gr", "p gr 2 1\ne 1 2 4\n");
  CHECK(run_cli({"pathway", "-g", edge, "-k", "1", "--leaves", "1"}).out == "1 0\n2 inf\n");
  const auto p1 = run_cli({"pathway", "-g", tri, "-k", "3", "--seed", "42"});
  CHECK(p1.code == 0);
  CHECK(p1.out == run_cli({"pathway", "-g", tri, "-k", "3", "--seed", "42"}).out);
  CHECK(run_cli({"pathway", "-g", tri, "-k", "3", "--delta", "2"}).code == 1);
}

TEST_CASE("branch and hyper commands") {
  Scratch s;
  const auto f = s.write("f.sf", "sf 2\n0 0\n1 2\n2 3\n3 5\n");
  CHECK(run_cli({"branch", "-i", f, "--alpha", "1/2"}).out == "0 0\n1 2\n2 3\n3 11/2\n");
  CHECK(run_cli({"branch", "-i", f, "--alpha", "x"}).code == 1);

  const auto h = s.write("h.hg", "p hg 3 3\nh 1 1 2\nh 1 2 3\nh 3 1 2 3\n");
  CHECK(run_cli({"hyper", "-g", h}).out == "weight 2\nh 1 1 2\nh 1 2 3\n");
  CHECK(run_cli({"hyper", "-g", h, "--mode", "msth"}).out == "weight 2\nh 1 1 2\nh 1 2 3\n");
  const auto loose = s.write("loose.hg", "p hg 2 2\nh 1 1\nh 1 2\n");
  CHECK(run_cli({"hyper", "-g", loose}).code == 3);
}

TEST_CASE("selftest") {
  const auto r = run_cli({"selftest", "--max-n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("selftest passed") != std::string::npos);
  CHECK(run_cli({"selftest", "--max-n", "15"}).code == 4);
}

TEST_CASE("byte-identical output") {
  Scratch s;
  const auto f = s.write("f.sf", "sf 3\n0 1\n1 -2\n2 3\n3 4\n4 0\n5 7\n6 -1\n7 2\n");
  for (const char* mode : {"subset", "cover", "pack", "icover", "exact:1", "xor"}) {
    CHECK(run_cli({"conv", "--mode", mode, "-a", f, "-b", f}).out == run_cli({"conv", "--mode", mode, "-a", f, "-b", f}).out);
  }
}

}
#endif
