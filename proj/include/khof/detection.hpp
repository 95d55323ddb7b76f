#pragma once

// Decision procedure on computed data: Z/2 Khovanov rank plus linking
// numbers. A ForestOfUnknots verdict means the data is consistent with L_G
// for the reported forest G; CycleWitness and NonUnitLinking are data that
// a genuine minimal-rank link cannot produce.

#include <string>
#include <vector>

#include "khof/diagram.hpp"
#include "khof/khovanov.hpp"

namespace khof {

struct Classification {
  enum class Kind { ForestOfUnknots, NotMinimalRank, CycleWitness, NonUnitLinking };

  Kind kind = Kind::ForestOfUnknots;
  ForestGraph forest;       // ForestOfUnknots: edge sign = linking number
  long long rank = 0;       // Z/2 rank of Kh
  long long bound = 0;      // 2^n
  std::vector<int> cycle;   // CycleWitness: shortest cycle, least vertex sequence
  int i = 0, j = 0, value = 0;  // NonUnitLinking
};

const char* to_string(Classification::Kind k);

Classification classify(const OrientedPDDiagram& d, const KhOptions& opt = {});

/// Keeps the listed components (in increasing index order) and deletes the
/// strands of all others.
OrientedPDDiagram sublink(const OrientedPDDiagram& d, const std::vector<int>& comps);

}  // namespace khof
