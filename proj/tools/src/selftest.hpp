#pragma once

#include <cstdint>
#include <iosfwd>

namespace subsetconv::cli {

// Fast products against the direct oracle on seeded random inputs, n = 0..max_n.
// One line per (product, n); returns false on the first mismatch.
bool run_selftest(int max_n, std::uint64_t seed, std::ostream& out);

}  // namespace subsetconv::cli
