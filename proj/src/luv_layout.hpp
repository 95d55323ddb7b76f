#pragma once

#include <vector>

#include "khof/diagram.hpp"

namespace khof::detail {

// Free choices in the Morse layout of L(u,v). Letters are Morse crossing
// letters (+1: the lower-left to upper-right strand is over).
struct LuvLayout {
  int bottom = 1;       // K_u / K_1 clasp
  int twist = 1;        // twist crossing letter for v > 0 (negated for v < 0)
  int chain = 1;        // clasps K_j / K_{j+1}
  int top = 1;          // K_{u-1} / K_u clasp
  std::vector<bool> left_up;  // per component K_1..K_u; missing entries read as true
};

OrientedPDDiagram build_luv(int u, int v, const LuvLayout& layout);

/// The layout reproducing the known Jones polynomials of L(3,0) and L(3,-1).
const LuvLayout& calibrated_luv_layout();

}  // namespace khof::detail
