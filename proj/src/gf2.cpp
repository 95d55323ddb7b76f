#include "khof/gf2.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace khof::gf2 {

namespace {

using XorFn = void (*)(std::uint64_t*, const std::uint64_t*, std::size_t);

Kernel best_kernel() {
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) return Kernel::Avx2;
#endif
#if defined(__aarch64__)
  return Kernel::Neon;
#endif
  return Kernel::Scalar;
}

XorFn kernel_fn(Kernel k) {
  switch (k) {
#if defined(__x86_64__) || defined(__i386__)
    case Kernel::Avx2: return xor_row_avx2;
#endif
#if defined(__aarch64__)
    case Kernel::Neon: return xor_row_neon;
#endif
    default: return xor_row_scalar;
  }
}

std::atomic<Kernel> g_kernel{best_kernel()};
std::atomic<XorFn> g_xor{kernel_fn(best_kernel())};

}  // namespace

const char* kernel_name(Kernel k) {
  switch (k) {
    case Kernel::Scalar: return "scalar";
    case Kernel::Avx2: return "avx2";
    case Kernel::Neon: return "neon";
  }
  return "?";
}

bool kernel_available(Kernel k) {
  switch (k) {
    case Kernel::Scalar: return true;
    case Kernel::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Kernel::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Kernel active_kernel() { return g_kernel.load(); }

void set_kernel(Kernel k) {
  if (!kernel_available(k)) throw std::invalid_argument(std::string("kernel not available: ") + kernel_name(k));
  g_kernel = k;
  g_xor = kernel_fn(k);
}

void xor_row(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  g_xor.load(std::memory_order_relaxed)(dst, src, words);
}

void xor_row_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::size_t dense_rank(BitMatrix& m) {
  const std::size_t rows = m.rows(), words = m.words_per_row();
  const XorFn fx = g_xor.load();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t piv = rank;
    while (piv < rows && !(m.row(piv)[w] & bit)) ++piv;
    if (piv == rows) continue;
    if (piv != rank) std::swap_ranges(m.row(piv), m.row(piv) + words, m.row(rank));
    const std::uint64_t* p = m.row(rank);
    for (std::size_t r = rank + 1; r < rows; ++r)
      if (m.row(r)[w] & bit) fx(m.row(r) + w, p + w, words - w);
    ++rank;
  }
  return rank;
}

std::size_t sparse_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t cols) {
  const std::size_t n = rows.size();
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < r.size();) {
      std::size_t j = i;
      while (j < r.size() && r[j] == r[i]) ++j;
      if ((j - i) % 2) out.push_back(r[i]);
      i = j;
    }
    r.swap(out);
  }

  std::vector<std::uint32_t> col_count(cols, 0);
  std::vector<std::vector<std::uint32_t>> col_rows(cols);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : rows[i]) {
      ++col_count[j];
      col_rows[j].push_back(static_cast<std::uint32_t>(i));
    }
  std::vector<bool> alive(n, true);
  std::vector<std::uint32_t> col_queue, row_queue;
  for (std::uint32_t j = 0; j < cols; ++j)
    if (col_count[j] == 1) col_queue.push_back(j);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].empty()) alive[i] = false;
    else if (rows[i].size() == 1) row_queue.push_back(static_cast<std::uint32_t>(i));
  }

  std::size_t rank = 0;
  auto kill_row = [&](std::uint32_t i) {
    alive[i] = false;
    for (auto j : rows[i])
      if (--col_count[j] == 1) col_queue.push_back(j);
    rows[i].clear();
  };
  while (!col_queue.empty() || !row_queue.empty()) {
    if (!col_queue.empty()) {
      // A column met by a single row: that row is independent of the rest.
      std::uint32_t j = col_queue.back();
      col_queue.pop_back();
      if (col_count[j] != 1) continue;
      for (auto i : col_rows[j]) {
        if (!alive[i]) continue;
        ++rank;
        kill_row(i);
        break;
      }
      continue;
    }
    // A row with one entry clears its column from every other row.
    std::uint32_t i = row_queue.back();
    row_queue.pop_back();
    if (!alive[i] || rows[i].size() != 1) continue;
    const std::uint32_t j = rows[i][0];
    ++rank;
    alive[i] = false;
    rows[i].clear();
    col_count[j] = 0;
    for (auto r : col_rows[j]) {
      if (!alive[r]) continue;
      auto& row = rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), j);
      if (it == row.end() || *it != j) continue;
      row.erase(it);
      if (row.empty()) alive[r] = false;
      else if (row.size() == 1) row_queue.push_back(r);
    }
  }

  std::vector<std::uint32_t> remap(cols, UINT32_MAX);
  std::uint32_t ncore = 0;
  std::vector<std::uint32_t> live;
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    live.push_back(static_cast<std::uint32_t>(i));
    for (auto j : rows[i])
      if (remap[j] == UINT32_MAX) remap[j] = ncore++;
  }
  if (live.empty()) return rank;
  BitMatrix m(live.size(), ncore);
  for (std::size_t r = 0; r < live.size(); ++r)
    for (auto j : rows[live[r]]) m.set(r, remap[j]);
  return rank + dense_rank(m);
}

}  // namespace khof::gf2
