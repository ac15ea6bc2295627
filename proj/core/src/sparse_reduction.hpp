#pragma once

// Sparse unit-pivot reduction of a window C_{i+1} -A-> C_i -B-> C_{i-1}.
//
// Each elimination changes basis in C_i without changing homology. A pivot
// in B removes one element of C_i (never a cycle direction) together with a
// row of C_{i-1}; a pivot in A removes one boundary direction of C_i together
// with a column of C_{i+1}. The recorded steps let us carry cycle
// coordinates forward and representatives back.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "braidhom/chain.hpp"
#include "braidhom/integer.hpp"

namespace braidhom::detail {

struct Overflow {};

struct CheckedInt64Ring {
  using T = std::int64_t;
  static T from(std::int64_t x) { return x; }
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T neg(T a) {
    if (a == INT64_MIN) throw Overflow{};
    return -a;
  }
  static bool is_unit(T a) { return a == 1 || a == -1; }
  static T unit_inverse(T a) { return a; }
  static Integer to_integer(T a) { return Integer(a); }
};

struct BigIntRing {
  using T = Integer;
  static T from(std::int64_t x) { return Integer(x); }
  static T add(const T& a, const T& b) { return a + b; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T neg(const T& a) { return -a; }
  static bool is_unit(const T& a) { return a == 1 || a == -1; }
  static T unit_inverse(const T& a) { return a; }
  static Integer to_integer(const T& a) { return a; }
};

struct ModPRing {
  using T = std::int64_t;
  std::int64_t p;
  T from(std::int64_t x) const { return ((x % p) + p) % p; }
  T add(T a, T b) const { return (a + b) % p; }
  T mul(T a, T b) const { return static_cast<T>((static_cast<__int128>(a) * b) % p); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  bool is_unit(T a) const { return a != 0; }
  T unit_inverse(T a) const {
    T r = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Integer to_integer(T a) const { return Integer(a); }
};

/// One recorded elimination. For a B-pivot `snapshot` holds the pivot row of
/// B (other columns); for an A-pivot it holds the pivot column of A (other rows).
struct ReductionStep {
  bool in_b = false;
  int a = 0;                 ///< eliminated element of C_i
  Integer pivot_inverse;     ///< inverse of the unit pivot
  std::vector<std::pair<int, Integer>> snapshot;
};

struct Reduction {
  int n = 0;                              ///< dim C_i
  std::vector<ReductionStep> steps;
  std::vector<int> survivors;             ///< surviving C_i elements, increasing
  /// Remaining B (columns indexed like survivors) and A (nonzero columns only),
  /// rows given by C_{i-1} ids and C_i ids respectively.
  std::vector<std::vector<std::pair<int, Integer>>> b_columns;
  std::vector<std::vector<std::pair<int, Integer>>> a_columns;
};

template <class Ring>
class WindowReducer {
 public:
  using T = typename Ring::T;
  using Column = std::vector<std::pair<int, T>>;

  WindowReducer(const Ring& ring, const SparseMatrix& a, const SparseMatrix& b) : R(ring) {
    ni_ = b.cols;
    bcol_.resize(b.cols);
    brows_.resize(b.rows);
    for (int c = 0; c < b.cols; ++c)
      for (auto [r, x] : b.columns[c]) {
        T v = R.from(x);
        if (v == T(0)) continue;
        bcol_[c].emplace_back(r, v);
        brows_[r].push_back(c);
      }
    acol_.resize(a.cols);
    arows_.resize(a.rows);
    for (int c = 0; c < a.cols; ++c)
      for (auto [r, x] : a.columns[c]) {
        T v = R.from(x);
        if (v == T(0)) continue;
        acol_[c].emplace_back(r, v);
        arows_[r].push_back(c);
      }
    alive_i_.assign(ni_, 1);
    alive_a_.assign(a.cols, 1);
  }

  Reduction run() {
    reduce(bcol_, brows_, alive_i_, /*in_b=*/true);
    reduce(acol_, arows_, alive_a_, /*in_b=*/false);
    Reduction out;
    out.n = ni_;
    out.steps = std::move(steps_);
    for (int c = 0; c < ni_; ++c) {
      if (!alive_i_[c]) continue;
      out.survivors.push_back(c);
      out.b_columns.push_back(convert(bcol_[c]));
    }
    for (std::size_t c = 0; c < acol_.size(); ++c)
      if (alive_a_[c] && !acol_[c].empty()) out.a_columns.push_back(convert(acol_[c]));
    return out;
  }

 private:
  std::vector<std::pair<int, Integer>> convert(const Column& col) const {
    std::vector<std::pair<int, Integer>> out;
    out.reserve(col.size());
    for (const auto& [r, x] : col) out.emplace_back(r, R.to_integer(x));
    return out;
  }

  static const T* find(const Column& col, int row) {
    auto it = std::lower_bound(col.begin(), col.end(), row, [](const auto& e, int r) { return e.first < r; });
    return (it != col.end() && it->first == row) ? &it->second : nullptr;
  }

  // dst -= f * src; new rows of dst are registered in `rows`.
  void axpy(Column& dst, const Column& src, const T& f, int dst_id, std::vector<std::vector<int>>& rows) {
    Column out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    const T nf = R.neg(f);
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
        out.push_back(dst[i++]);
      } else if (i == dst.size() || src[j].first < dst[i].first) {
        T v = R.mul(nf, src[j].second);
        if (v != T(0)) {
          out.emplace_back(src[j].first, v);
          rows[src[j].first].push_back(dst_id);
        }
        ++j;
      } else {
        T v = R.add(dst[i].second, R.mul(nf, src[j].second));
        if (v != T(0)) out.emplace_back(dst[i].first, v);
        ++i;
        ++j;
      }
    }
    dst = std::move(out);
  }

  // Unit pivots in `cols` (columns alive per `alive`) until none remain.
  void reduce(std::vector<Column>& cols, std::vector<std::vector<int>>& rows, std::vector<char>& alive,
              bool in_b) {
    std::vector<char> row_alive(rows.size(), 1);
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<int> order;
      for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        if (alive[c] && !cols[c].empty()) order.push_back(c);
      std::stable_sort(order.begin(), order.end(),
                       [&](int x, int y) { return cols[x].size() < cols[y].size(); });
      for (int c : order) {
        if (!alive[c] || cols[c].empty()) continue;
        int best = -1;
        std::size_t best_cost = SIZE_MAX;
        for (const auto& [r, x] : cols[c]) {
          if (!R.is_unit(x) || !row_alive[r]) continue;
          if (rows[r].size() < best_cost) {
            best_cost = rows[r].size();
            best = r;
          }
        }
        if (best < 0) continue;
        pivot(cols, rows, alive, row_alive, best, c, in_b);
        progress = true;
      }
    }
  }

  void pivot(std::vector<Column>& cols, std::vector<std::vector<int>>& rows, std::vector<char>& alive,
             std::vector<char>& row_alive, int r, int c, bool in_b) {
    const T lam_inv = R.unit_inverse(*find(cols[c], r));
    auto& touching = rows[r];
    std::sort(touching.begin(), touching.end());
    touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
    std::vector<std::pair<int, T>> row;
    for (int d : touching) {
      if (d == c || !alive[d]) continue;
      if (const T* x = find(cols[d], r)) row.emplace_back(d, *x);
    }
    for (const auto& [d, x] : row) axpy(cols[d], cols[c], R.mul(x, lam_inv), d, rows);

    ReductionStep step;
    step.in_b = in_b;
    step.pivot_inverse = R.to_integer(lam_inv);
    if (in_b) {
      // Pivot B[r, c]: element c of C_i and row r of C_{i-1} go away.
      step.a = c;
      for (const auto& [d, x] : row) step.snapshot.emplace_back(d, R.to_integer(x));
      alive_i_[c] = 0;
      row_alive[r] = 0;
      // Row c of A disappears.
      for (int d : arows_[c]) {
        auto& col = acol_[d];
        auto it = std::lower_bound(col.begin(), col.end(), c, [](const auto& e, int x) { return e.first < x; });
        if (it != col.end() && it->first == c) col.erase(it);
      }
      arows_[c].clear();
      bcol_[c].clear();
    } else {
      // Pivot A[r, c]: boundary direction A(c) replaces element r of C_i.
      step.a = r;
      for (const auto& [row_id, x] : cols[c])
        if (row_id != r) step.snapshot.emplace_back(row_id, R.to_integer(x));
      alive[c] = 0;
      row_alive[r] = 0;
      alive_i_[r] = 0;
      cols[c].clear();
    }
    rows[r].clear();
    steps_.push_back(std::move(step));
  }

  Ring R;
  int ni_ = 0;
  std::vector<Column> bcol_, acol_;
  std::vector<std::vector<int>> brows_, arows_;
  std::vector<char> alive_i_, alive_a_;
  std::vector<ReductionStep> steps_;
};

}  // namespace braidhom::detail
