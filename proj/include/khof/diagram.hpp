#pragma once

// Oriented planar diagrams and the diagram algebra used to build the link
// families (braid closures, connected sums, forests of unknots, L(u,v)).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "khof/error.hpp"

namespace khof {

/// One crossing with explicit oriented arcs. `sign` is +1 when the under
/// strand direction is the over strand direction rotated 90 degrees
/// counterclockwise. Together with the in/out roles the sign fixes the
/// cyclic order of the four arc ends around the crossing:
///   positive: (ui, oo, uo, oi), negative: (ui, oi, uo, oo).
struct Crossing {
  int oi = 0;
  int oo = 0;
  int ui = 0;
  int uo = 0;
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Basepoint {
  int component = 0;
  int arc = 0;
};

/// A link diagram. Components are ordered cycles of arc ids; a component
/// without crossings ("free loop") is a cycle holding a single arc that no
/// crossing mentions. Arc ids are positive.
class OrientedPDDiagram {
 public:
  OrientedPDDiagram() = default;
  OrientedPDDiagram(std::vector<Crossing> crossings, std::vector<std::vector<int>> components,
                    std::map<int, int> basepoints = {});

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<std::vector<int>>& components() const { return components_; }
  const std::map<int, int>& basepoints() const { return basepoints_; }

  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t component_count() const { return components_.size(); }
  std::size_t free_loop_count() const;
  int writhe() const;
  int positive_count() const;
  int negative_count() const;
  /// Component index of every arc, keyed by arc id.
  std::map<int, int> arc_components() const;

  OrientedPDDiagram with_basepoints(std::map<int, int> bp) const;

  friend bool operator==(const OrientedPDDiagram&, const OrientedPDDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> components_;
  std::map<int, int> basepoints_;
};

struct Violation {
  ErrorKind kind;
  int where;  // arc id or crossing index, depending on kind
  std::string message;
};

/// Checks every diagram invariant; returns the first violation found.
/// Signs are checked through planarity: the rotation system they induce
/// must have exactly crossings + 2 faces on each connected piece.
std::optional<Violation> validate(const OrientedPDDiagram& d);
/// Throws khof::Error on the first violation.
void ensure_valid(const OrientedPDDiagram& d);

/// Symmetric, zero diagonal.
class LinkingMatrix {
 public:
  explicit LinkingMatrix(std::size_t n = 0) : n_(n), v_(n * n, 0) {}
  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
  int& at(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  LinkingMatrix negated() const;
  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<int> v_;
};

LinkingMatrix linking_matrix(const OrientedPDDiagram& d);

// ---------------------------------------------------------------------------
// Signed Gauss codes. Each component lists the crossings it passes in order
// of travel; crossing signs are stored separately. This is the working form
// for surgery on diagrams (splicing, deleting strands, Reidemeister moves).

struct Visit {
  int crossing = 0;
  bool over = false;
  friend bool operator==(const Visit&, const Visit&) = default;
};

struct GaussCode {
  std::vector<int> signs;
  std::vector<std::vector<Visit>> components;  // empty list = free loop
};

GaussCode to_gauss(const OrientedPDDiagram& d);
/// Arcs are numbered 1, 2, ... component by component; the arc leaving the
/// j-th visit of a component is the j-th arc of that component.
OrientedPDDiagram from_gauss(const GaussCode& g);

// ---------------------------------------------------------------------------

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +i is sigma_i, -i its inverse, 1 <= i < strands

  void check() const;
  BraidWord inverse() const;
};

struct ForestEdge {
  int a = 0;
  int b = 0;
  int sign = 1;
};

/// Simple graph on vertices 0..vertex_count-1 with optional clasp signs.
struct ForestGraph {
  int vertex_count = 0;
  std::vector<ForestEdge> edges;

  void check_simple() const;
  bool is_forest() const;
  /// Vertices of some cycle, if the graph has one.
  std::optional<std::vector<int>> cycle_witness() const;
  /// Connected components as sorted vertex lists, ordered by least vertex.
  std::vector<std::vector<int>> trees() const;
};

OrientedPDDiagram unknot();
OrientedPDDiagram unlink(int n);
/// Two-crossing Hopf link; linking number equals `sign`.
OrientedPDDiagram hopf_link(int sign = 1);
/// Closure of sigma_1^{+-3}: right-handed for +1, left-handed for -1.
OrientedPDDiagram trefoil(int handedness);

OrientedPDDiagram from_braid_closure(const BraidWord& b);
OrientedPDDiagram disjoint_union(const OrientedPDDiagram& d1, const OrientedPDDiagram& d2);
/// Joins component c1 of d1 with component c2 of d2. Components of the
/// result: those of d1 (c1 replaced by the sum), then those of d2 except c2.
OrientedPDDiagram connected_sum(const OrientedPDDiagram& d1, int c1, const OrientedPDDiagram& d2,
                                int c2);
OrientedPDDiagram mirror(const OrientedPDDiagram& d);
OrientedPDDiagram reverse_component(const OrientedPDDiagram& d, int c);
/// New component i is old component order[i].
OrientedPDDiagram permute_components(const OrientedPDDiagram& d, const std::vector<int>& order);
/// Applies an injective map to the arc ids.
OrientedPDDiagram relabel_arcs(const OrientedPDDiagram& d, const std::map<int, int>& arc_map);

/// Trees are built by depth-first traversal from their least vertex as
/// iterated connected sums of Hopf clasps; component i is vertex i.
OrientedPDDiagram forest_link(const ForestGraph& g);

/// The u-component cycle of unknots with a |v|-crossing twist region.
OrientedPDDiagram luv_diagram(int u, int v);

/// Crossing change at crossing k (the L+ / L- partner in a skein triple).
OrientedPDDiagram switch_crossing(const OrientedPDDiagram& d, int k);
/// Orientation-respecting smoothing at crossing k (the L0 member).
OrientedPDDiagram smooth_crossing(const OrientedPDDiagram& d, int k);

/// Greedy Reidemeister I and II reductions.
OrientedPDDiagram simplify(const OrientedPDDiagram& d);

bool is_alternating(const OrientedPDDiagram& d);

}  // namespace khof
