#include "khof/khovanov.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <functional>
#include <numeric>
#include <thread>

#include "khof/gf2.hpp"

namespace khof {

const char* to_string(Coeff c) { return c == Coeff::F2 ? "F2" : "Z"; }

long long BigradedRanks::total_rank() const {
  long long n = 0;
  for (const auto& [g, r] : free) n += r;
  return n;
}

BiLaurent BigradedRanks::poincare() const {
  BiLaurent p;
  for (const auto& [g, r] : free) p.add_term(g.first, g.second, BigInt(static_cast<long>(r)));
  return p;
}

InternalGradingRanks internal_ranks(const BigradedRanks& b) {
  InternalGradingRanks out;
  for (const auto& [g, r] : b.free) out[g.first - g.second] += r;
  return out;
}

namespace {

using Grade = BigradedRanks::Grade;

std::uint64_t binom(int n, int k) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int i = 0; i <= 64; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  if (k < 0 || n < 0 || k > n) return 0;
  return table[n][k];
}

// Position of a fixed-popcount mask in colex order (Gosper's enumeration order).
std::uint32_t colex_rank(std::uint32_t mask) {
  std::uint32_t r = 0;
  int t = 0;
  while (mask) {
    int p = std::countr_zero(mask);
    r += static_cast<std::uint32_t>(binom(p, ++t));
    mask &= mask - 1;
  }
  return r;
}

std::uint32_t next_same_popcount(std::uint32_t v) {
  std::uint32_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

inline std::uint32_t insert_bit(std::uint32_t mask, int b) {
  std::uint32_t low = mask & ((1U << b) - 1);
  return low | (1U << b) | ((mask >> b) << (b + 1));
}

inline std::uint32_t remove_bit(std::uint32_t full, int b) {
  std::uint32_t low = full & ((1U << b) - 1);
  return low | ((full >> (b + 1)) << b);
}

int find_root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

// The cube of resolutions: circles of every state, and how generators are
// laid out in (h,q) blocks.
class Cube {
 public:
  Cube(const OrientedPDDiagram& d, int marked_arc, int budget) {
    ensure_valid(d);
    c_ = static_cast<int>(d.crossing_count());
    if (c_ > budget)
      throw Error(ErrorKind::CrossingBudgetExceeded,
                  std::to_string(c_) + " crossings exceed the budget of " + std::to_string(budget));
    if (c_ > 24) throw Error(ErrorKind::CrossingBudgetExceeded, "cube limited to 24 crossings");
    std::map<int, int> index;
    for (const auto& comp : d.components())
      for (int a : comp) index.emplace(a, static_cast<int>(index.size()));
    narcs_ = static_cast<int>(index.size());
    n_plus_ = d.positive_count();
    n_minus_ = d.negative_count();
    for (const auto& x : d.crossings()) {
      if (x.sign > 0)
        ends_.push_back({index[x.ui], index[x.oo], index[x.uo], index[x.oi]});
      else
        ends_.push_back({index[x.ui], index[x.oi], index[x.uo], index[x.oo]});
    }
    reduced_ = marked_arc >= 0;
    if (reduced_) base_ = index.at(marked_arc);

    const std::uint32_t states = 1U << c_;
    circ_.resize(static_cast<std::size_t>(states) * narcs_);
    ncirc_.resize(states);
    std::vector<int> parent(narcs_), label(narcs_);
    for (std::uint32_t r = 0; r < states; ++r) {
      std::iota(parent.begin(), parent.end(), 0);
      for (int k = 0; k < c_; ++k) {
        const auto& e = ends_[k];
        auto join = [&](int a, int b) {
          a = find_root(parent, a);
          b = find_root(parent, b);
          if (a != b) parent[a] = b;
        };
        if ((r >> k) & 1) {
          join(e[0], e[3]);
          join(e[1], e[2]);
        } else {
          join(e[0], e[1]);
          join(e[2], e[3]);
        }
      }
      std::fill(label.begin(), label.end(), -1);
      int m = 0;
      std::uint8_t* row = &circ_[static_cast<std::size_t>(r) * narcs_];
      for (int a = 0; a < narcs_; ++a) {
        int root = find_root(parent, a);
        if (label[root] < 0) label[root] = m++;
        row[a] = static_cast<std::uint8_t>(label[root]);
      }
      if (m > 31) throw Error(ErrorKind::CrossingBudgetExceeded, "too many circles in a resolution");
      ncirc_[r] = static_cast<std::uint8_t>(m);
    }

    // Block layout. stride_ bounds the free-circle count + 1.
    stride_ = 0;
    for (std::uint32_t r = 0; r < states; ++r) stride_ = std::max(stride_, ncirc_[r] + 1);
    offset_.assign(static_cast<std::size_t>(states) * stride_, 0);
    for (std::uint32_t r = 0; r < states; ++r) {
      const int f = free_circles(r);
      for (int j = 0; j <= f; ++j) {
        auto& size = block_size_[grade(r, j)];
        offset_[static_cast<std::size_t>(r) * stride_ + j] = static_cast<std::uint32_t>(size);
        size += binom(f, j);
      }
    }
  }

  int crossings() const { return c_; }
  int n_minus() const { return n_minus_; }
  bool reduced() const { return reduced_; }
  const std::map<Grade, std::uint64_t>& blocks() const { return block_size_; }

  int circle(std::uint32_t r, int a) const { return circ_[static_cast<std::size_t>(r) * narcs_ + a]; }
  int circles(std::uint32_t r) const { return ncirc_[r]; }
  int free_circles(std::uint32_t r) const { return ncirc_[r] - (reduced_ ? 1 : 0); }
  int base_circle(std::uint32_t r) const { return reduced_ ? circle(r, base_) : -1; }

  // j = number of v- labels among the free circles.
  Grade grade(std::uint32_t r, int j) const {
    const int w = std::popcount(r);
    const int red = reduced_ ? 1 : 0;
    const int minus = j + red;
    return {w - n_minus_, circles(r) - 2 * minus + w + n_plus_ - 2 * n_minus_ + red};
  }

  std::uint32_t index_of(std::uint32_t r, std::uint32_t free_mask) const {
    const int j = std::popcount(free_mask);
    return offset_[static_cast<std::size_t>(r) * stride_ + j] + colex_rank(free_mask);
  }

  struct Edge {
    std::uint32_t target;
    int k;
    int sign;
    bool merge;
    int a, b;    // circles of the source touched by the crossing (a == b on a split)
    int c1, c2;  // circles of the target (c1 == c2 on a merge)
    std::array<std::int8_t, 32> map;  // other source circles -> target circles
  };

  Edge edge(std::uint32_t r, int k) const {
    Edge e{};
    e.target = r | (1U << k);
    e.k = k;
    e.sign = (std::popcount(r & ((1U << k) - 1)) % 2) ? -1 : 1;
    const auto& ends = ends_[k];
    e.a = circle(r, ends[0]);
    e.b = circle(r, ends[2]);
    e.merge = e.a != e.b;
    e.c1 = circle(e.target, ends[0]);
    e.c2 = circle(e.target, ends[1]);
    for (int a = 0; a < narcs_; ++a) e.map[circle(r, a)] = static_cast<std::int8_t>(circle(e.target, a));
    return e;
  }

  // Images of a full labeling (bit i set = circle i carries v-).
  template <class F>
  static void apply(const Edge& e, std::uint32_t full, int m, F&& emit) {
    std::uint32_t t = 0;
    for (int i = 0; i < m; ++i)
      if (i != e.a && i != e.b && ((full >> i) & 1)) t |= 1U << e.map[i];
    const bool xa = (full >> e.a) & 1;
    if (e.merge) {
      const bool xb = (full >> e.b) & 1;
      if (xa && xb) return;
      emit(xa || xb ? t | (1U << e.c1) : t);
    } else if (xa) {
      emit(t | (1U << e.c1) | (1U << e.c2));
    } else {
      emit(t | (1U << e.c1));
      emit(t | (1U << e.c2));
    }
  }

 private:
  int c_ = 0, narcs_ = 0, n_plus_ = 0, n_minus_ = 0;
  bool reduced_ = false;
  int base_ = -1;
  int stride_ = 1;
  std::vector<std::array<int, 4>> ends_;
  std::vector<std::uint8_t> circ_;
  std::vector<std::uint8_t> ncirc_;
  std::vector<std::uint32_t> offset_;
  std::map<Grade, std::uint64_t> block_size_;
};

struct ZEntry {
  std::uint32_t col;
  BigInt val;
};
using ZRow = std::vector<ZEntry>;

// Rows (one per source generator) of every differential leaving homological
// degree h, keyed by q.
template <class Row, class Push>
std::map<int, std::vector<Row>> build_rows(const Cube& cube, int h, Push push) {
  std::map<int, std::vector<Row>> out;
  for (const auto& [g, size] : cube.blocks())
    if (g.first == h) out[g.second].resize(size);
  const std::uint32_t states = 1U << cube.crossings();
  const int w = h + cube.n_minus();
  std::vector<Cube::Edge> edges;
  for (std::uint32_t r = 0; r < states; ++r) {
    if (std::popcount(r) != w) continue;
    edges.clear();
    for (int k = 0; k < cube.crossings(); ++k)
      if (!((r >> k) & 1)) edges.push_back(cube.edge(r, k));
    if (edges.empty()) continue;
    const int m = cube.circles(r), f = cube.free_circles(r), b = cube.base_circle(r);
    for (int j = 0; j <= f; ++j) {
      auto& rows = out[cube.grade(r, j).second];
      std::uint32_t src = cube.index_of(r, j == 0 ? 0 : (1U << j) - 1);
      const std::uint64_t count = binom(f, j);
      std::uint32_t mask = j == 0 ? 0 : (1U << j) - 1;
      for (std::uint64_t n = 0; n < count; ++n, ++src) {
        const std::uint32_t full = b >= 0 ? insert_bit(mask, b) : mask;
        Row& row = rows[src];
        for (const auto& e : edges) {
          const int tb = cube.base_circle(e.target);
          Cube::apply(e, full, m, [&](std::uint32_t t) {
            const std::uint32_t tf = tb >= 0 ? remove_bit(t, tb) : t;
            push(row, cube.index_of(e.target, tf), e.sign);
          });
        }
        if (j > 0 && n + 1 < count) mask = next_same_popcount(mask);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer elimination.

void snf_dense(IntMatrix& a, std::vector<BigInt>& diag) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block as pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        for (std::size_t i = t; i < std::min(rows, cols); ++i) diag.push_back(0);
        return;
      }
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt qt = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= qt * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt qt = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= qt * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row holding a non-multiple into the pivot row.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
}

struct ZReduction {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

// Unit pivots are eliminated sparsely; whatever is left goes to dense SNF.
ZReduction reduce_z(std::vector<ZRow> rows, std::uint32_t cols) {
  ZReduction out;
  const std::size_t n = rows.size();
  std::vector<std::vector<std::uint32_t>> col_rows(cols);
  std::vector<std::uint32_t> col_count(cols, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(rows[i].begin(), rows[i].end(), [](const ZEntry& x, const ZEntry& y) { return x.col < y.col; });
    for (const auto& e : rows[i]) {
      col_rows[e.col].push_back(static_cast<std::uint32_t>(i));
      ++col_count[e.col];
    }
  }
  std::vector<bool> alive(n, true);
  auto value_in = [&](std::uint32_t r, std::uint32_t col) -> const BigInt* {
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const ZEntry& e, std::uint32_t c) { return e.col < c; });
    return (it != row.end() && it->col == col) ? &it->val : nullptr;
  };

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  bool progress = true;
  while (progress) {
    progress = false;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t x, std::uint32_t y) { return rows[x].size() < rows[y].size(); });
    for (std::uint32_t i : order) {
      if (!alive[i] || rows[i].empty()) {
        alive[i] = false;
        continue;
      }
      const ZEntry* piv = nullptr;
      for (const auto& e : rows[i])
        if (abs(e.val) == 1 && (!piv || col_count[e.col] < col_count[piv->col])) piv = &e;
      if (!piv) continue;
      const std::uint32_t pc = piv->col;
      const BigInt pv = piv->val;
      const ZRow prow = rows[i];
      alive[i] = false;
      for (const auto& e : prow) --col_count[e.col];
      rows[i].clear();
      for (std::uint32_t r : col_rows[pc]) {
        if (!alive[r]) continue;
        const BigInt* v = value_in(r, pc);
        if (!v) continue;
        const BigInt factor = *v * pv;  // pv is its own inverse
        ZRow merged;
        merged.reserve(rows[r].size() + prow.size());
        auto a = rows[r].begin(), ae = rows[r].end();
        auto b = prow.begin(), be = prow.end();
        while (a != ae || b != be) {
          if (b == be || (a != ae && a->col < b->col)) {
            merged.push_back(*a++);
          } else if (a == ae || b->col < a->col) {
            BigInt val = -factor * b->val;
            ++col_count[b->col];
            col_rows[b->col].push_back(r);
            merged.push_back({b->col, std::move(val)});
            ++b;
          } else {
            BigInt val = a->val - factor * b->val;
            if (val != 0) merged.push_back({a->col, std::move(val)});
            else --col_count[a->col];
            ++a;
            ++b;
          }
        }
        rows[r].swap(merged);
      }
      ++out.rank;
      progress = true;
    }
  }

  std::vector<std::uint32_t> remap(cols, UINT32_MAX);
  std::uint32_t ncore = 0;
  std::vector<std::uint32_t> live;
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i] || rows[i].empty()) continue;
    live.push_back(static_cast<std::uint32_t>(i));
    for (const auto& e : rows[i])
      if (remap[e.col] == UINT32_MAX) remap[e.col] = ncore++;
  }
  if (live.empty()) return out;
  IntMatrix dense(live.size(), std::vector<BigInt>(ncore, 0));
  for (std::size_t k = 0; k < live.size(); ++k)
    for (const auto& e : rows[live[k]]) dense[k][remap[e.col]] = e.val;
  std::vector<BigInt> diag;
  snf_dense(dense, diag);
  for (const auto& dv : diag) {
    if (dv == 0) continue;
    ++out.rank;
    if (dv != 1) out.torsion.push_back(dv);
  }
  return out;
}

void run_parallel(std::size_t n, int threads, const std::function<void(std::size_t)>& job) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(threads, static_cast<int>(n)); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) job(i);
    });
  for (auto& th : pool) th.join();
}

BigradedRanks homology(const Cube& cube, Coeff coeff, int threads) {
  // rank of d leaving each block, and torsion of its cokernel.
  std::map<Grade, std::size_t> rank_out;
  std::map<Grade, std::vector<BigInt>> torsion_into;
  int hmin = 0, hmax = 0;
  for (const auto& [g, s] : cube.blocks()) {
    hmin = std::min(hmin, g.first);
    hmax = std::max(hmax, g.first);
  }
  for (int h = hmin; h < hmax; ++h) {
    std::vector<int> qs;
    if (coeff == Coeff::F2) {
      auto rows = build_rows<std::vector<std::uint32_t>>(
          cube, h, [](std::vector<std::uint32_t>& row, std::uint32_t col, int) { row.push_back(col); });
      for (const auto& [q, r] : rows) qs.push_back(q);
      std::vector<std::size_t> ranks(qs.size(), 0);
      run_parallel(qs.size(), threads, [&](std::size_t i) {
        auto it = cube.blocks().find({h + 1, qs[i]});
        if (it == cube.blocks().end()) return;
        ranks[i] = gf2::sparse_rank(std::move(rows[qs[i]]), static_cast<std::uint32_t>(it->second));
      });
      for (std::size_t i = 0; i < qs.size(); ++i) rank_out[{h, qs[i]}] = ranks[i];
    } else {
      auto rows = build_rows<ZRow>(cube, h, [](ZRow& row, std::uint32_t col, int sign) {
        row.push_back({col, BigInt(sign)});
      });
      for (const auto& [q, r] : rows) qs.push_back(q);
      std::vector<ZReduction> red(qs.size());
      run_parallel(qs.size(), threads, [&](std::size_t i) {
        auto it = cube.blocks().find({h + 1, qs[i]});
        if (it == cube.blocks().end()) return;
        red[i] = reduce_z(std::move(rows[qs[i]]), static_cast<std::uint32_t>(it->second));
      });
      for (std::size_t i = 0; i < qs.size(); ++i) {
        rank_out[{h, qs[i]}] = red[i].rank;
        if (!red[i].torsion.empty()) torsion_into[{h + 1, qs[i]}] = red[i].torsion;
      }
    }
  }

  BigradedRanks out;
  out.coeff = coeff;
  for (const auto& [g, size] : cube.blocks()) {
    long long r = static_cast<long long>(size);
    if (auto it = rank_out.find(g); it != rank_out.end()) r -= static_cast<long long>(it->second);
    if (auto it = rank_out.find({g.first - 1, g.second}); it != rank_out.end())
      r -= static_cast<long long>(it->second);
    if (r > 0) out.free[g] = r;
  }
  for (auto& [g, t] : torsion_into) {
    std::sort(t.begin(), t.end());
    out.torsion[g] = t;
  }
  return out;
}

}  // namespace

BigradedRanks kh(const OrientedPDDiagram& d, Coeff coeff, const KhOptions& opt) {
  Cube cube(d, -1, opt.crossing_budget);
  return homology(cube, coeff, opt.threads);
}

BigradedRanks khr(const OrientedPDDiagram& d, const Basepoint& p, Coeff coeff, const KhOptions& opt) {
  if (p.component < 0 || p.component >= static_cast<int>(d.component_count()))
    throw Error(ErrorKind::BadBasepoint, "basepoint component " + std::to_string(p.component) + " out of range");
  const auto& comp = d.components()[p.component];
  if (std::find(comp.begin(), comp.end(), p.arc) == comp.end())
    throw Error(ErrorKind::BadBasepoint,
                "arc " + std::to_string(p.arc) + " is not on component " + std::to_string(p.component));
  Cube cube(d, p.arc, opt.crossing_budget);
  return homology(cube, coeff, opt.threads);
}

BiLaurent forest_poincare(const ForestGraph& g) {
  g.check_simple();
  if (auto cyc = g.cycle_witness()) throw Error(ErrorKind::NotAForest, "graph has a cycle");
  // x = t, y = q
  const BiLaurent unknot = BiLaurent::monomial(1, 0, 1) + BiLaurent::monomial(1, 0, -1);
  const BiLaurent clasp = BiLaurent::monomial(1, 1, 2) + BiLaurent::monomial(1, -1, -2);
  BiLaurent p = BiLaurent::constant(1);
  for (const auto& tree : g.trees()) {
    const int k = static_cast<int>(tree.size());
    p *= BiLaurent::monomial(1, k - 1, 3 * (k - 1)) * unknot * clasp.pow(static_cast<unsigned>(k - 1));
  }
  return p;
}

InternalGradingRanks tensor_internal_ranks(const BigradedRanks& a, const BigradedRanks& b) {
  InternalGradingRanks out;
  for (const auto& [la, ra] : internal_ranks(a))
    for (const auto& [lb, rb] : internal_ranks(b)) out[la + lb] += ra * rb;
  return out;
}

bool batson_seed_check(const OrientedPDDiagram& link, const OrientedPDDiagram& k1,
                       const OrientedPDDiagram& k2, const KhOptions& opt) {
  if (link.component_count() != 2 || k1.component_count() != 1 || k2.component_count() != 1)
    throw Error(ErrorKind::ComponentCountMismatch, "expected a 2-component link and two knots");
  const int lk = linking_matrix(link)(0, 1);
  const auto lhs = internal_ranks(kh(link, Coeff::F2, opt));
  const auto rhs = tensor_internal_ranks(kh(k1, Coeff::F2, opt), kh(k2, Coeff::F2, opt));
  for (const auto& [l, r] : rhs) {
    auto it = lhs.find(l - 2 * lk);
    if ((it == lhs.end() ? 0 : it->second) < r) return false;
  }
  return true;
}

std::vector<BigInt> snf(const IntMatrix& m) {
  IntMatrix a = m;
  std::vector<BigInt> diag;
  snf_dense(a, diag);
  return diag;
}

bool differential_squares_to_zero(const OrientedPDDiagram& d, int marked_arc) {
  Cube cube(d, marked_arc, 24);
  int hmin = 0, hmax = 0;
  for (const auto& [g, s] : cube.blocks()) {
    hmin = std::min(hmin, g.first);
    hmax = std::max(hmax, g.first);
  }
  auto push = [](ZRow& row, std::uint32_t col, int sign) { row.push_back({col, BigInt(sign)}); };
  for (int h = hmin; h + 1 < hmax; ++h) {
    auto first = build_rows<ZRow>(cube, h, push);
    auto second = build_rows<ZRow>(cube, h + 1, push);
    for (const auto& [q, rows] : first) {
      const auto& next = second[q];
      for (const auto& row : rows) {
        std::map<std::uint32_t, BigInt> acc;
        for (const auto& e : row)
          for (const auto& f : next.at(e.col)) acc[f.col] += e.val * f.val;
        for (const auto& [col, v] : acc)
          if (v != 0) return false;
      }
    }
  }
  return true;
}

std::uint64_t chain_complex_size(const OrientedPDDiagram& d) {
  Cube cube(d, -1, 24);
  std::uint64_t n = 0;
  for (const auto& [g, s] : cube.blocks()) n += s;
  return n;
}

}  // namespace khof
