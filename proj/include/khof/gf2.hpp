#pragma once

// Rank over GF(2). Dense matrices are stored with 64 columns per word so a
// row operation is a word-wise XOR; that XOR has a scalar reference kernel
// and SIMD variants picked at runtime.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace khof::gf2 {

enum class Kernel { Scalar, Avx2, Neon };

const char* kernel_name(Kernel k);
bool kernel_available(Kernel k);
/// Kernel used by xor_row; the best available one unless overridden.
Kernel active_kernel();
/// Overrides the dispatch (tests and benchmarks). Throws if unavailable.
void set_kernel(Kernel k);

/// dst[i] ^= src[i] for i < words.
void xor_row(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void xor_row_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
#if defined(__x86_64__) || defined(__i386__)
void xor_row_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
#endif
#if defined(__aarch64__)
void xor_row_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
#endif

class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t i, std::size_t j) const { return (row(i)[j / 64] >> (j % 64)) & 1U; }
  void set(std::size_t i, std::size_t j) { row(i)[j / 64] |= std::uint64_t{1} << (j % 64); }
  void flip(std::size_t i, std::size_t j) { row(i)[j / 64] ^= std::uint64_t{1} << (j % 64); }

  std::uint64_t* row(std::size_t i) { return data_.data() + i * words_; }
  const std::uint64_t* row(std::size_t i) const { return data_.data() + i * words_; }

 private:
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> data_;
};

/// Gaussian elimination; destroys the matrix.
std::size_t dense_rank(BitMatrix& m);

/// Rank of a sparse matrix given as rows of column indices. Repeated
/// indices cancel in pairs. Singleton rows and columns are eliminated first;
/// the remaining core goes through dense_rank.
std::size_t sparse_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t cols);

}  // namespace khof::gf2
