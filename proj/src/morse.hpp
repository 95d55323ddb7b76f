#pragma once

// Builds diagrams from a Morse presentation: strands run upward through a
// row of positions and are created by cups, joined by caps and crossed by
// braid-like generators. Planarity holds by construction; orientations are
// fixed per component by the direction of its first cup.

#include <vector>

#include "khof/diagram.hpp"

namespace khof::detail {

class MorseBuilder {
 public:
  /// New strand pair at positions pos, pos+1. When `left_up` is set the
  /// component flows right-to-left through the cup, i.e. up the left end.
  void cup(int pos, int label, bool left_up = true);
  void cap(int pos);
  /// Crossing between positions pos and pos+1. For letter > 0 the strand
  /// running from lower-left to upper-right is the over strand.
  void cross(int pos, int letter);

  int width() const { return static_cast<int>(open_.size()); }

  /// Components are ordered by cup label (ties by creation order).
  GaussCode finish() const;

 private:
  struct Cup {
    int left;
    int right;
    int label;
    bool left_up;
  };

  int new_token();
  void link(int a, int b);

  int next_token_ = 0;
  int crossings_ = 0;
  std::vector<int> open_;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> bltr_over_;
  std::vector<Cup> cups_;
  std::vector<int> slot_token_;  // 4 per crossing: BL, BR, TR, TL
};

}  // namespace khof::detail
