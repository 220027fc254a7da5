#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <new>
#include <optional>
#include <vector>

#include <sys/mman.h>

#include "subsetconv/parallel.hpp"
#include "subsetconv/products.hpp"

namespace subsetconv::detail {

namespace {

constexpr int kLowBits = 12;   // contiguous tile of 4096 words
constexpr int kGroupBits = 6;  // high bits handled together on 64 x 64 tiles
constexpr std::size_t kChunk = 64;

// In-place zeta (Sign = +1) or Möbius (Sign = -1) over 2^n words, cache-blocked:
// the low bits run inside contiguous tiles, the high bits in groups on
// gathered tiles, so each word leaves cache about twice.
template <typename Word, int Sign>
void transform_word(Word* v, int n) {
  const std::size_t size = std::size_t{1} << n;
  auto step_pass = [](Word* __restrict lo, Word* __restrict hi, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      if constexpr (Sign > 0) hi[i] += lo[i];
      else hi[i] -= lo[i];
    }
  };
  const int low = std::min(n, kLowBits);
  const std::size_t tile = std::size_t{1} << low;
  // bits 0..2 at once on runs of 8; the generic pass is all overhead there
  const int fused = low >= 3 ? 3 : 0;
  for (std::size_t t0 = 0; t0 < size; t0 += tile) {
    Word* w = v + t0;
    if (fused != 0) {
      for (std::size_t i = 0; i < tile; i += 8) {
        Word* e = w + i;
        Word x0 = e[0], x1 = e[1], x2 = e[2], x3 = e[3], x4 = e[4], x5 = e[5], x6 = e[6], x7 = e[7];
        if constexpr (Sign > 0) {
          x1 += x0; x3 += x2; x5 += x4; x7 += x6;
          x2 += x0; x3 += x1; x6 += x4; x7 += x5;
          x4 += x0; x5 += x1; x6 += x2; x7 += x3;
        } else {
          x1 -= x0; x3 -= x2; x5 -= x4; x7 -= x6;
          x2 -= x0; x3 -= x1; x6 -= x4; x7 -= x5;
          x4 -= x0; x5 -= x1; x6 -= x2; x7 -= x3;
        }
        e[0] = x0; e[1] = x1; e[2] = x2; e[3] = x3; e[4] = x4; e[5] = x5; e[6] = x6; e[7] = x7;
      }
    }
    for (int bit = fused; bit < low; ++bit) {
      const std::size_t step = std::size_t{1} << bit;
      for (std::size_t base = 0; base < tile; base += 2 * step) step_pass(w + base, w + base + step, step);
    }
  }
  for (int h = low; h < n; h += kGroupBits) {
    const int g = std::min(kGroupBits, n - h);
    const std::size_t stride = std::size_t{1} << h;
    const std::size_t span = stride << g;
    const std::size_t chunk = std::min(kChunk, stride);
    for (std::size_t outer = 0; outer < size; outer += span) {
      for (std::size_t c = 0; c < stride; c += chunk) {
        Word* w = v + outer + c;
        for (int t = 0; t < g; ++t) {
          const std::size_t bit = std::size_t{1} << t;
          for (std::size_t mid = 0; mid < (std::size_t{1} << g); ++mid) {
            if (mid & bit) continue;
            step_pass(w + mid * stride, w + (mid | bit) * stride, chunk);
          }
        }
      }
    }
  }
}

// Uninitialised array; large ones are 2 MiB aligned and offered to
// transparent huge pages, which cuts first-touch faults on tables of tens of MB.
template <typename Word>
class WordBuffer {
 public:
  explicit WordBuffer(std::size_t count) {
    std::size_t bytes = count * sizeof(Word);
    constexpr std::size_t kHuge = std::size_t{1} << 21;
    if (bytes >= kHuge) {
      bytes = (bytes + kHuge - 1) & ~(kHuge - 1);
      data_ = static_cast<Word*>(std::aligned_alloc(kHuge, bytes));
#ifdef MADV_HUGEPAGE
      if (data_ != nullptr) ::madvise(data_, bytes, MADV_HUGEPAGE);
#endif
    } else {
      data_ = static_cast<Word*>(std::malloc(std::max<std::size_t>(bytes, sizeof(Word))));
    }
    if (data_ == nullptr) throw std::bad_alloc();
  }
  WordBuffer(const WordBuffer&) = delete;
  WordBuffer& operator=(const WordBuffer&) = delete;
  ~WordBuffer() { std::free(data_); }
  Word* data() { return data_; }

 private:
  Word* data_ = nullptr;
};

// Slice-major table: slice k occupies [k << n, (k + 1) << n). Each slice is
// filled right before its transform so it is still cached.
template <typename Word>
void ranked_zeta_word(const SetFunction<CheckedInt>& f, const std::vector<std::uint8_t>& rank, Word* t, int n) {
  const std::size_t size = std::size_t{1} << n;
  parallel_for(static_cast<std::size_t>(n) + 1, [&](std::size_t k) {
    Word* s = t + (k << n);
    if (k == 0) {  // every mask contains the empty set
      std::fill_n(s, size, static_cast<Word>(f[0].value()));
      return;
    }
    for (std::size_t x = 0; x < size; ++x) {
      s[x] = rank[x] == k ? static_cast<Word>(f[static_cast<Mask>(x)].value()) : 0;
    }
    if (k < static_cast<std::size_t>(n)) transform_word<Word, 1>(s, n);  // slice n lives on the full set alone
  });
}

// Exact whenever every output lies in the signed range of Word.
template <typename Word>
SetFunction<CheckedInt> convolve_words(const SetFunction<CheckedInt>& f, const SetFunction<CheckedInt>& g) {
  using Signed = std::make_signed_t<Word>;
  const int n = f.n();
  const std::size_t size = std::size_t{1} << n;
  const std::size_t rows = static_cast<std::size_t>(n) + 1;
  // popcount without a hardware instruction is a library call; a table is cheaper
  std::vector<std::uint8_t> rank(size, 0);
  for (std::size_t x = 1; x < size; ++x) rank[x] = static_cast<std::uint8_t>(rank[x >> 1] + (x & 1));

  WordBuffer<Word> a(size * rows);
  std::optional<WordBuffer<Word>> b(std::in_place, size * rows);
  ranked_zeta_word(f, rank, a.data(), n);
  ranked_zeta_word(g, rank, b->data(), n);

  // Pointwise rank convolution into a, on blocks of masks gathered from every
  // slice. Slice k is read back only at masks of popcount <= k and vanishes
  // above 2|X|, so only k in [|X|, min(n, 2|X|)] is formed; other entries are
  // left zero. Inside an aligned block |x0 + i| = |x0| + |i|, so one fixed
  // permutation puts equal ranks next to each other and the loops run over
  // contiguous runs.
  constexpr int kBlockBits = 10;
  const int bb = std::min(n, kBlockBits);
  const std::size_t block = std::size_t{1} << bb;
  const std::size_t blocks = size / block;
  std::vector<std::uint32_t> order(block);
  std::vector<std::size_t> run(static_cast<std::size_t>(bb) + 2, 0);
  for (std::size_t i = 0; i < block; ++i) ++run[rank[i] + 1];
  for (int q = 0; q <= bb; ++q) run[q + 1] += run[q];
  {
    std::vector<std::size_t> next(run.begin(), run.end() - 1);
    for (std::size_t i = 0; i < block; ++i) order[next[rank[i]]++] = static_cast<std::uint32_t>(i);
  }
  const std::size_t workers = std::min<std::size_t>(configured_threads(), blocks);
  Word* pa = a.data();
  const Word* pb = b->data();
  parallel_for(workers, [&](std::size_t w) {
    std::vector<Word> la(rows * block), lb(rows * block), lc(rows * block);
    for (std::size_t bi = blocks * w / workers; bi < blocks * (w + 1) / workers; ++bi) {
      const std::size_t x0 = bi * block;
      for (std::size_t k = 0; k < rows; ++k) {
        const Word* sa = pa + (k << n) + x0;
        const Word* sb = pb + (k << n) + x0;
        Word* da = la.data() + k * block;
        Word* db = lb.data() + k * block;
        for (std::size_t i = 0; i < block; ++i) {
          da[i] = sa[order[i]];
          db[i] = sb[order[i]];
        }
      }
      std::fill(lc.begin(), lc.end(), Word{0});
      for (int q = 0; q <= bb; ++q) {
        const int p = rank[x0] + q;
        const std::size_t lo = run[q], len = run[q + 1] - run[q];
        for (int k = p; k <= std::min(n, 2 * p); ++k) {
          Word* __restrict c = lc.data() + k * block + lo;
          for (int j = k - p; j <= p; ++j) {
            const Word* __restrict x = la.data() + j * block + lo;
            const Word* __restrict y = lb.data() + (k - j) * block + lo;
            for (std::size_t i = 0; i < len; ++i) c[i] += x[i] * y[i];
          }
        }
      }
      for (std::size_t k = 0; k < rows; ++k) {
        Word* d = pa + (k << n) + x0;
        const Word* sc = lc.data() + k * block;
        for (std::size_t i = 0; i < block; ++i) d[order[i]] = sc[i];
      }
    }
  });
  b.reset();

  // Slice k is read only at masks of popcount k: slice 0 at the empty set,
  // where Möbius is the identity, and slice n at the full set alone.
  parallel_for(rows, [&](std::size_t k) {
    Word* s = pa + (k << n);
    if (k == 0) return;
    if (k < rows - 1) {
      transform_word<Word, -1>(s, n);
      return;
    }
    Word acc = 0;
    for (std::size_t x = 0; x < size; ++x) {
      if ((static_cast<std::size_t>(n) - rank[x]) & 1) acc -= s[x];
      else acc += s[x];
    }
    s[size - 1] = acc;
  });

  SetFunction<CheckedInt> out(f.ground());
  for (std::size_t x = 0; x < size; ++x) {
    out[static_cast<Mask>(x)] = static_cast<std::int64_t>(static_cast<Signed>(pa[(std::size_t{rank[x]} << n) + x]));
  }
  return out;
}

std::uint64_t max_abs(const SetFunction<CheckedInt>& h) {
  std::uint64_t m = 0;
  for (const auto& x : h.values()) {
    const std::int64_t v = x.value();
    const auto u = static_cast<std::uint64_t>(v);
    m = std::max(m, v < 0 ? std::uint64_t{0} - u : u);
  }
  return m;
}

}  // namespace

std::optional<SetFunction<CheckedInt>> subset_convolve_word(const SetFunction<CheckedInt>& f,
                                                            const SetFunction<CheckedInt>& g) {
  const int n = f.n();
  if (n >= 63) return std::nullopt;
  // |(f*g)(S)| <= max|f| max|g| 2^|S|, and every intermediate is only needed
  // modulo the word size, so the bound picks the narrowest exact word.
  std::uint64_t prod = 0;
  if (__builtin_mul_overflow(max_abs(f), max_abs(g), &prod)) return std::nullopt;
  if (n < 31 && prod < (std::uint64_t{1} << (31 - n))) return convolve_words<std::uint32_t>(f, g);
  if (prod < (std::uint64_t{1} << (63 - n))) return convolve_words<std::uint64_t>(f, g);
  return std::nullopt;
}

}  // namespace subsetconv::detail
