#pragma once

// Khovanov homology from the cube of resolutions.
//
// Gradings: h = r - n_-, q = (#v+ - #v-) + r + n_+ - 2 n_-, where r counts
// 1-smoothings and the 0-smoothing is the Kauffman A-smoothing. With these
// conventions the left-handed trefoil has Z/2 torsion at (-2,-7).

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "khof/diagram.hpp"
#include "khof/polynomial.hpp"

namespace khof {

enum class Coeff { F2, Z };

const char* to_string(Coeff c);

struct BigradedRanks {
  using Grade = std::pair<int, int>;  // (h, q)

  Coeff coeff = Coeff::F2;
  std::map<Grade, long long> free;
  /// Torsion summands Z/n at each bidegree (empty over a field).
  std::map<Grade, std::vector<BigInt>> torsion;

  long long total_rank() const;
  /// Sum of rank * t^h q^q as a polynomial in x = t, y = q.
  BiLaurent poincare() const;

  friend bool operator==(const BigradedRanks&, const BigradedRanks&) = default;
};

/// Internal grade l = h - q mapped to rank.
using InternalGradingRanks = std::map<int, long long>;

InternalGradingRanks internal_ranks(const BigradedRanks& b);

struct KhOptions {
  int crossing_budget = 16;
  int threads = 1;
};

BigradedRanks kh(const OrientedPDDiagram& d, Coeff coeff, const KhOptions& opt = {});

/// Reduced homology: the subcomplex in which the circle through the marked
/// arc carries v-, shifted so the unknot sits at (0,0).
BigradedRanks khr(const OrientedPDDiagram& d, const Basepoint& p, Coeff coeff,
                  const KhOptions& opt = {});

/// Product over trees of t^{k-1} q^{3(k-1)} (q + q^-1) (t q^2 + t^-1 q^-2)^{k-1},
/// in x = t, y = q.
BiLaurent forest_poincare(const ForestGraph& g);

/// Rank of the tensor product of two Z/2 homologies, by internal grade.
InternalGradingRanks tensor_internal_ranks(const BigradedRanks& a, const BigradedRanks& b);

/// rank^l Kh(L) >= rank^{l + 2 lk}(Kh(K1) (x) Kh(K2)) at every internal grade l,
/// everything over Z/2.
bool batson_seed_check(const OrientedPDDiagram& link, const OrientedPDDiagram& k1,
                       const OrientedPDDiagram& k2, const KhOptions& opt = {});

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Smith normal form diagonal: min(rows, cols) entries, nonzero ones first
/// in divisibility order, all nonnegative.
std::vector<BigInt> snf(const IntMatrix& m);

/// Composes consecutive integer differentials of the cube complex (reduced
/// at `marked_arc` when it is >= 0) and checks that every product vanishes.
bool differential_squares_to_zero(const OrientedPDDiagram& d, int marked_arc = -1);

/// Total number of generators of the (unreduced) chain complex.
std::uint64_t chain_complex_size(const OrientedPDDiagram& d);

}  // namespace khof
