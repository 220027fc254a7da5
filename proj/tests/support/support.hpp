#pragma once

// Helpers shared by the unit and acceptance suites: literal builders, seeded
// generators and brute-force references that do not touch the library kernels.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "subsetconv/subsetconv.hpp"

namespace testsupport {

using namespace subsetconv;

SetFunction<CheckedInt> ints(int n, const std::vector<std::int64_t>& v);
std::vector<std::int64_t> values_of(const SetFunction<CheckedInt>& f);
std::vector<std::string> strings_of(const ExtendedWeightFunction& f);

// inf is spelled with INT64_MAX / INT64_MIN in literals.
ExtendedWeightFunction weights(int n, const std::vector<std::int64_t>& v);

// Plain int64 evaluation over all 4^n ordered pairs (U, V); independent of
// both the fast kernels and the library's oracle module.
std::vector<std::int64_t> naive_product(const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& g, int n,
                                        ProductMode mode);
// Same, min or max of f(U) + g(V); INT64_MAX / INT64_MIN encode the infinities.
std::vector<std::int64_t> naive_opt(const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& g, int n,
                                    ProductMode mode, bool maximise);
std::vector<std::int64_t> naive_zeta(const std::vector<std::int64_t>& f, int n);
// sum over T of (-1)^{|S & T|} f(T)
std::vector<std::int64_t> naive_walsh(const std::vector<std::int64_t>& f, int n);

SetFunction<CheckedInt> random_ints(int n, int lo, int hi, std::mt19937_64& rng);
SetFunction<Rational> random_rationals(int n, std::mt19937_64& rng);
// Finite entries in [-bound, bound]; each entry becomes the mode's infinity with probability inf_rate.
ExtendedWeightFunction random_weights(int n, std::int64_t bound, double inf_rate, OptMode mode, std::mt19937_64& rng);

// m distinct edges (capped at n(n-1)/2), weights uniform in 1..max_w.
steiner::WeightedGraph random_graph(int n, int m, std::int64_t max_w, std::mt19937_64& rng);
// Random spanning tree plus extra edges up to m.
steiner::WeightedGraph random_connected_graph(int n, int m, std::int64_t max_w, std::mt19937_64& rng);
hyper::Hypergraph random_hypergraph(int n, int m, std::int64_t max_w, std::mt19937_64& rng);

// Proper colourings with colours 0..k-1 by enumerating all k^n assignments.
std::uint64_t brute_colorings(const combi::SimpleGraph& g, int k);

// Minimum weight over all k-vertex trees of the graph that contain v, where
// every degree-1 vertex other than v lies in `allowed` (and v itself when k = 1).
// Enumerates every (k-1)-edge subset.
std::vector<ExtendedWeight> brute_pathway(const steiner::WeightedGraph& g, const std::vector<bool>& allowed, int k);

// Kruskal's minimum spanning forest weight; the Steiner weight when K = V.
std::int64_t mst_weight(const steiner::WeightedGraph& g);

// Edges exist, no cycle, connects every terminal, weights sum to the claim.
bool independent_tree_check(const steiner::SteinerInstance& inst, const steiner::SteinerResult& r);

}  // namespace testsupport
