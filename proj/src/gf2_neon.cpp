#include <arm_neon.h>

#include "khof/gf2.hpp"

namespace khof::gf2 {

void xor_row_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] ^= src[i];
}

}  // namespace khof::gf2
