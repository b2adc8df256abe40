#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "recursion.hpp"
#include "words.hpp"

namespace glasspath {

inline long long floordiv2(long long x) {
  return x >= 0 ? x / 2 : -((-x + 1) / 2);
}

// Standard binomial except when the second argument is exactly -1:
// C(-1,-1) = 1 and C(a,-1) = 0 otherwise. Only the three-plate closed
// form relies on this; everything else uses the plain zero conventions.
inline BigCount closed_binomial(long long a, long long b) {
  if (b == -1) return a == -1 ? 1 : 0;
  return binomial(a, b);
}

// N(x,y,z) for three plates in closed form.
// k and l are forced even/odd so that k+z-y is always even; that parity
// is asserted rather than assumed.
inline BigCount closed_N3(long long x, long long y, long long z) {
  long long T = x + y + z;
  long long k = x - 1 + (T % 2 != 0 ? 2 : 1);
  long long l = k + z - y + (T % 2 == 0 ? 2 : 1);
  if ((k + z - y) % 2 != 0) throw std::logic_error("k+z-y parity invariant violated");
  return closed_binomial(k, (k + z - y) / 2) *
         closed_binomial(floordiv2(l - 2) + floordiv2(y + z - k), floordiv2(l - 2));
}

enum class Backend { oracle, dp, recursion, closed };

// M_n: entries[i][j] = N(n,i,j), square of side extent, indices from 0.
struct CountMatrix {
  int n = 0;
  int extent = 0;
  std::vector<std::vector<BigCount>> entries;
};

inline CountMatrix build_matrix(int n, int extent, Backend backend = Backend::dp) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (extent < 1) throw std::invalid_argument("extent must be at least 1");
  CountMatrix m;
  m.n = n;
  m.extent = extent;
  m.entries.assign(static_cast<std::size_t>(extent),
                   std::vector<BigCount>(static_cast<std::size_t>(extent)));
  NRecEngine engine; // shared across entries when the recursion backend is chosen
  for (int i = 0; i < extent; ++i)
    for (int j = 0; j < extent; ++j) {
      BigCount v;
      switch (backend) {
        case Backend::oracle:
          v = oracle_N(ReflectionVector({n, i, j}));
          break;
        case Backend::dp:
          v = dp_N(ReflectionVector({n, i, j}));
          break;
        case Backend::recursion:
          v = engine.eval_vec({n, i, j});
          break;
        case Backend::closed:
          v = closed_N3(n, i, j);
          break;
      }
      m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(v);
    }
  return m;
}

// Tick recursion: m^n_{i,j} = m^{n-1}_{i-1,j} + sum_{k>=0} m^{n-1}_{i-k,j-1-k},
// out-of-range indices reading as 0.
inline bool tick_check(int n, int extent) {
  if (n < 1) throw std::invalid_argument("tick_check needs n >= 1");
  CountMatrix cur = build_matrix(n, extent);
  CountMatrix prev = build_matrix(n - 1, extent);
  auto at = [&](const CountMatrix& m, int i, int j) -> BigCount {
    if (i < 0 || j < 0 || i >= m.extent || j >= m.extent) return 0;
    return m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < extent; ++i)
    for (int j = 0; j < extent; ++j) {
      BigCount expect = at(prev, i - 1, j);
      for (int k = 0; i - k >= 0 && j - 1 - k >= 0; ++k) expect += at(prev, i - k, j - 1 - k);
      if (at(cur, i, j) != expect) return false;
    }
  return true;
}

// S^n_i: i-th nonzero diagonal from the bottom. start is the position of
// the first nonzero term; terms run from there to the matrix edge and may
// contain zeros after the first one.
struct DiagonalSequence {
  int n = 0;
  int index = 0;
  int start_row = 0;
  int start_col = 0;
  std::vector<BigCount> terms;
};

namespace detail {

inline bool diagonal_scan(const CountMatrix& m, int i, DiagonalSequence& out) {
  int found = 0;
  for (int d = m.extent - 1; d >= -(m.extent - 1); --d) {
    int r = d >= 0 ? d : 0;
    int c = r - d;
    int first = -1;
    for (int rr = r, cc = c; rr < m.extent && cc < m.extent; ++rr, ++cc) {
      if (m.entries[static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)] != 0) {
        first = rr;
        break;
      }
    }
    if (first < 0) continue;
    if (++found < i) continue;
    out.n = m.n;
    out.index = i;
    out.start_row = first;
    out.start_col = first - d;
    out.terms.clear();
    for (int rr = first, cc = first - d; rr < m.extent && cc < m.extent; ++rr, ++cc)
      out.terms.push_back(m.entries[static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)]);
    return true;
  }
  return false;
}

} // namespace detail

// Bottom-up ordering is a scan over offsets row-col from most positive to
// most negative, keeping only offsets that carry a nonzero entry.
inline DiagonalSequence diagonal(const CountMatrix& m, int i) {
  if (i < 1 || i > 2 * m.n + 3)
    throw std::out_of_range("diagonal index outside 1..2n+3");
  DiagonalSequence s;
  if (!detail::diagonal_scan(m, i, s))
    throw std::out_of_range("diagonal not observable within this extent");
  return s;
}

// Leading terms: C(n+1,(i-1)/2) for odd i, C(n,i/2-1) for even i.
inline BigCount lt_closed(int n, int i) {
  if (i < 1 || i > 2 * n + 3) throw std::out_of_range("diagonal index outside 1..2n+3");
  if (i % 2 == 1) return binomial(n + 1, (i - 1) / 2);
  return binomial(n, i / 2 - 1);
}

// Arithmetic order of S^n_i: S_1 is special, then pairs
// (S_{2k+2}, S_{2k+3}) share order k.
inline int diagonal_order(int i) { return i <= 1 ? 0 : (i - 2) / 2; }

struct DifferenceTriangle {
  std::vector<std::vector<BigCount>> rows; // rows[k] = k-th difference
};

inline DifferenceTriangle difference_triangle(const std::vector<BigCount>& seq, int max_order) {
  if (static_cast<long long>(seq.size()) <= max_order)
    throw std::invalid_argument("sequence too short for requested order");
  DifferenceTriangle t;
  t.rows.push_back(seq);
  for (int k = 1; k <= max_order; ++k) {
    const auto& p = t.rows.back();
    std::vector<BigCount> r;
    r.reserve(p.size() - 1);
    for (std::size_t q = 0; q + 1 < p.size(); ++q) r.push_back(p[q + 1] - p[q]);
    t.rows.push_back(std::move(r));
  }
  return t;
}

// For each k <= n checks that the observable prefixes of S^n_{2k+2} and
// S^n_{2k+3} have vanishing order-(k+1) differences, and that the nonzero
// entries of M_n occupy exactly the 2n+3 expected diagonals.
inline bool arithmetic_order_check(int n, int extent) {
  CountMatrix m = build_matrix(n, extent);

  std::vector<int> nonzero_offsets;
  for (int d = extent - 1; d >= -(extent - 1); --d) {
    bool any = false;
    int r = d >= 0 ? d : 0;
    for (int rr = r, cc = r - d; rr < extent && cc < extent; ++rr, ++cc)
      if (m.entries[static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)] != 0) {
        any = true;
        break;
      }
    if (any) nonzero_offsets.push_back(d);
  }
  if (extent >= n + 2) {
    // every diagonal start is in view, so the count must be exact and the
    // offsets must be the contiguous band |row-col| <= n+1
    if (static_cast<int>(nonzero_offsets.size()) != 2 * n + 3) return false;
    if (nonzero_offsets.front() != n + 1 || nonzero_offsets.back() != -(n + 1)) return false;
  } else {
    if (static_cast<int>(nonzero_offsets.size()) > 2 * n + 3) return false;
  }

  for (int k = 0; k <= n; ++k) {
    for (int i : {2 * k + 2, 2 * k + 3}) {
      DiagonalSequence s;
      if (!detail::diagonal_scan(m, i, s)) continue; // not observable at this extent
      if (static_cast<long long>(s.terms.size()) < k + 2) continue;
      DifferenceTriangle t = difference_triangle(s.terms, k + 1);
      for (const BigCount& x : t.rows.back())
        if (x != 0) return false;
    }
  }
  return true;
}

namespace detail {

// First entry of the j-th difference row of S^n_i, read off a built matrix.
// Absent diagonals (index outside 1..2n+3) and j < 0 read as 0; nullopt
// means the prefix is too short to observe the value.
inline std::optional<BigCount> lt_d(const CountMatrix& m, int i, int j) {
  if (j < 0) return BigCount(0);
  if (i < 1 || i > 2 * m.n + 3) return BigCount(0);
  DiagonalSequence s;
  if (!diagonal_scan(m, i, s)) return std::nullopt;
  if (static_cast<long long>(s.terms.size()) < j + 1) return std::nullopt;
  DifferenceTriangle t = difference_triangle(s.terms, j);
  return t.rows.back().front();
}

} // namespace detail

// Leading-term structure: LT(d(S^n_i,j)) = LT(S^n_i) * C(q,j) with
// q = diagonal_order(i), checked on observable rows; plus a spot check of
// the leading-term recursion LT(d(S^n_i,j)) =
//   LT(d(S^{n-1}_i,j)) + LT(d(S^{n-1}_{i-2},j)) + LT(d(S^{n-1}_{i-2},j-1)).
inline bool lt_ratio_check(int n, int extent) {
  CountMatrix m = build_matrix(n, extent);
  for (int i = 2; i <= 2 * n + 3; ++i) {
    DiagonalSequence s;
    if (!detail::diagonal_scan(m, i, s)) continue;
    int q = diagonal_order(i);
    BigCount lt = s.terms.front();
    int max_j = static_cast<int>(s.terms.size()) - 1;
    if (max_j > q) max_j = q;
    DifferenceTriangle t = difference_triangle(s.terms, max_j);
    for (int j = 0; j <= max_j; ++j)
      if (t.rows[static_cast<std::size_t>(j)].front() != lt * binomial(q, j)) return false;
  }
  if (n >= 1) {
    CountMatrix prev = build_matrix(n - 1, extent);
    for (int i = 2; i <= 2 * n + 3; ++i)
      for (int j = 0; j <= 3; ++j) {
        auto cur = detail::lt_d(m, i, j);
        auto p1 = detail::lt_d(prev, i, j);
        auto p2 = detail::lt_d(prev, i - 2, j);
        auto p3 = detail::lt_d(prev, i - 2, j - 1);
        if (!cur || !p1 || !p2 || !p3) continue;
        if (*cur != *p1 + *p2 + *p3) return false;
      }
  }
  return true;
}

struct Feasibility {
  bool feasible = false;
  std::optional<Word> witness;
};

inline bool triangle_ok(long long a1, long long a2, long long a3) {
  return a1 + a2 >= a3 && a2 + a3 >= a1 && a3 + a1 >= a2;
}

namespace detail {

// x copies of 21, y of 32, z of 31, in that order; every junction steps
// up and every pair steps down, so the result is always admissible.
inline Word even_witness(long long a1, long long a2, long long a3) {
  long long x = (a1 + a2 - a3) / 2;
  long long y = (-a1 + a2 + a3) / 2;
  long long z = (a1 - a2 + a3) / 2;
  Word w;
  w.reserve(static_cast<std::size_t>(a1 + a2 + a3));
  for (long long q = 0; q < x; ++q) {
    w.push_back(2);
    w.push_back(1);
  }
  for (long long q = 0; q < y; ++q) {
    w.push_back(3);
    w.push_back(2);
  }
  for (long long q = 0; q < z; ++q) {
    w.push_back(3);
    w.push_back(1);
  }
  return w;
}

} // namespace detail

// Even totals: feasible iff the triangle condition holds, witnessed by the
// canonical block word. Odd totals: strip one reflection from the highest
// plate whose remainder stays even-feasible, then try to reattach that
// letter at the back or the front of the even witness; the candidate is
// accepted only after full validation.
inline Feasibility exists3(long long a1, long long a2, long long a3) {
  if (a1 < 0 || a2 < 0 || a3 < 0) throw std::invalid_argument("entries must be nonnegative");
  long long total = a1 + a2 + a3;
  if (total % 2 == 0) {
    if (!triangle_ok(a1, a2, a3)) return {false, std::nullopt};
    return {true, detail::even_witness(a1, a2, a3)};
  }
  long long a[3] = {a1, a2, a3};
  std::vector<int> want = {static_cast<int>(a1), static_cast<int>(a2), static_cast<int>(a3)};
  for (int j = 3; j >= 1; --j) {
    if (a[j - 1] == 0) continue;
    long long b[3] = {a1, a2, a3};
    --b[j - 1];
    if (!triangle_ok(b[0], b[1], b[2])) continue;
    Word u = detail::even_witness(b[0], b[1], b[2]);
    for (bool back : {true, false}) {
      Word w = u;
      if (back)
        w.push_back(j);
      else
        w.insert(w.begin(), j);
      if (!is_admissible(w, Semantics::path)) continue;
      if (vector_of(w, 3).counts() != want) continue;
      return {true, std::move(w)};
    }
  }
  return {false, std::nullopt};
}

// Number of distinct realizable vectors with total m over three plates.
inline BigCount b3_closed(long long m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  if (m == 0) return 1;
  if (m % 2 == 0) return binomial(m / 2 + 2, 2);
  return binomial((m - 1) / 2 + 2, 2) + 1;
}

} // namespace glasspath
