#include <doctest.h>

#include "support.hpp"

using namespace subsetconv;
using namespace subsetconv::hyper;
using namespace testsupport;

namespace {

using Lists = std::vector<std::pair<std::vector<int>, std::int64_t>>;

void agree(const Hypergraph& h) {
  const auto brute_c = hyper_brute(h, false), brute_t = hyper_brute(h, true);
  for (Nesting nest : {Nesting::Left, Nesting::Right}) {
    const auto c = mcsh(h, nest), t = msth(h, nest);
    CHECK(c.weight == brute_c.weight);
    CHECK(t.weight == brute_t.weight);
    if (c.feasible()) CHECK(is_connected_spanning(h, c.chosen));
    if (t.feasible()) CHECK(is_tree(h, t.chosen));
  }
}

}  // namespace

TEST_SUITE("hyper") {

TEST_CASE("validation") {
  CHECK_THROWS_AS(Hypergraph::from_lists(3, Lists{{{1, 1}, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Hypergraph::from_lists(3, Lists{{{4}, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Hypergraph::from_lists(3, Lists{{{}, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Hypergraph::from_lists(3, Lists{{{1}, 0}}), InvalidArgument);
}

TEST_CASE("connected spanning examples") {
  const auto a = Hypergraph::from_lists(3, Lists{{{1, 2}, 1}, {{2, 3}, 1}, {{1, 2, 3}, 3}});
  const auto ra = mcsh(a);
  CHECK(ra.weight == 2);
  CHECK(ra.chosen == std::vector<int>{0, 1});
  CHECK(hyper_brute(a, false).weight == 2);

  const auto b = Hypergraph::from_lists(3, Lists{{{1, 2}, 1}, {{1, 2, 3}, 1}});
  const auto rb = mcsh(b);
  CHECK(rb.weight == 1);
  CHECK(rb.chosen == std::vector<int>{1});
  CHECK(hyper_brute(b, false).weight == 1);

  const auto c = Hypergraph::from_lists(1, Lists{{{1}, 2}});
  CHECK(mcsh(c).weight == 2);
  CHECK(hyper_brute(c, false).weight == 2);
}

TEST_CASE("spanning tree examples") {
  const auto tri = Hypergraph::from_lists(3, Lists{{{1, 2}, 1}, {{2, 3}, 1}, {{1, 3}, 1}});
  const auto r = msth(tri);
  CHECK(r.weight == 2);
  CHECK(r.chosen.size() == 2);
  CHECK(hyper_brute(tri, true).weight == 2);

  const auto one = Hypergraph::from_lists(3, Lists{{{1, 2, 3}, 4}});
  CHECK(msth(one).weight == 4);

  const auto loose = Hypergraph::from_lists(2, Lists{{{1}, 1}, {{2}, 1}});
  CHECK_FALSE(msth(loose).feasible());
  CHECK_FALSE(mcsh(loose).feasible());
}

TEST_CASE("tree check") {
  const auto h = Hypergraph::from_lists(3, Lists{{{1, 2}, 1}, {{2, 3}, 1}, {{1, 3}, 1}, {{1, 2, 3}, 1}});
  CHECK(is_tree(h, std::vector<int>{0, 1}));
  CHECK_FALSE(is_tree(h, std::vector<int>{0, 1, 2}));
  CHECK(is_tree(h, std::vector<int>{3}));
  CHECK_FALSE(is_tree(h, std::vector<int>{0}));
}

TEST_CASE("degenerate hypergraphs") {
  CHECK_FALSE(mcsh(Hypergraph(3, {})).feasible());
  CHECK_FALSE(hyper_brute(Hypergraph(2, {}), false).feasible());
  const auto lone = hyper_brute(Hypergraph(1, {}), false);
  CHECK(lone.weight == 0);
  CHECK(lone.chosen.empty());
  CHECK(mcsh(Hypergraph(1, {})).weight == 0);
  CHECK(msth(Hypergraph(0, {})).weight == 0);
}

TEST_CASE("examples agree with exhaustive search") {
  agree(Hypergraph::from_lists(3, Lists{{{1, 2}, 1}, {{2, 3}, 1}, {{1, 2, 3}, 3}}));
  agree(Hypergraph::from_lists(3, Lists{{{1, 2}, 1}, {{1, 2, 3}, 1}}));
  agree(Hypergraph::from_lists(1, Lists{{{1}, 2}}));
}

TEST_CASE("random agreement") {
  std::mt19937_64 rng(81);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 9);
    const auto h = random_hypergraph(n, m, 5, rng);
    agree(h);
    const auto c = mcsh(h), s = msth(h);
    if (s.feasible()) CHECK(*s.weight >= *c.weight);
  }
}

TEST_CASE("solver guard") {
  CHECK_THROWS_AS(mcsh(Hypergraph(kSolverMaxVertices + 1, {})), GuardError);
}

}
