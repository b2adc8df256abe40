#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "words.hpp"

namespace glasspath {

// C(a,b) with the standard zero conventions: 0 whenever b < 0, a < 0 or
// b > a. The one special convention for a second argument of -1 lives in
// the three-plate closed form, not here.
inline BigCount binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigCount r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i; // exact: product of i consecutive integers is divisible by i!
  }
  return r;
}

// a_0 = 1, a_l = sum_{i=1..l} (-1)^{i+1} C(n+i-1, 2i) a_{l-i}.
// Integer-valued by construction; extended lazily.
class AuxSequence {
 public:
  explicit AuxSequence(int n) : n_(n) { vals_.push_back(1); }

  const BigCount& at(std::size_t l) {
    while (vals_.size() <= l) {
      long long next = static_cast<long long>(vals_.size());
      BigCount s = 0;
      for (long long i = 1; i <= next; ++i) {
        BigCount term = binomial(n_ + i - 1, 2 * i) * vals_[static_cast<std::size_t>(next - i)];
        if (i % 2 == 1)
          s += term;
        else
          s -= term;
      }
      vals_.push_back(std::move(s));
    }
    return vals_[l];
  }

 private:
  int n_;
  std::vector<BigCount> vals_;
};

// Number of length-m words ending at plate j (word semantics), evaluated
// by the alternating closed form with L = floor((m-1)/2):
//   sum_{l=0..L} (-1)^{l+L} a_l C(n-j+L-l, m-1-2l)
inline BigCount a_last_closed(int n, long long m, int j) {
  if (n < 2) throw std::out_of_range("n must be at least 2");
  if (m < 1) throw std::out_of_range("m must be at least 1");
  if (j < 1 || j > n) throw std::out_of_range("j outside 1..n");
  long long L = (m - 1) / 2;
  AuxSequence aux(n);
  BigCount s = 0;
  for (long long l = 0; l <= L; ++l) {
    BigCount term = aux.at(static_cast<std::size_t>(l)) * binomial(n - j + L - l, m - 1 - 2 * l);
    if ((l + L) % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

inline BigCount a_closed(int n, long long m) {
  BigCount s = 0;
  for (int j = 1; j <= n; ++j) s += a_last_closed(n, m, j);
  return s;
}

// The two interleaved step recursions tying length m to length m-1:
// even m:  a_{m,j} = sum_{j' > j} a_{m-1,j'}
// odd m:   a_{m,j} = sum_{j' < j} a_{m-1,j'}
inline bool step_recursion_check(int n, long long m_max) {
  for (long long m = 2; m <= m_max; ++m) {
    for (int j = 1; j <= n; ++j) {
      BigCount expect = 0;
      if (m % 2 == 0) {
        for (int jp = j + 1; jp <= n; ++jp) expect += a_last_closed(n, m - 1, jp);
      } else {
        for (int jp = 1; jp < j; ++jp) expect += a_last_closed(n, m - 1, jp);
      }
      if (a_last_closed(n, m, j) != expect) return false;
    }
  }
  return true;
}

// Vector recursion for N(v). One engine instance owns one memo table;
// results never depend on the table's prior content.
class NRecEngine {
 public:
  BigCount eval(const ReflectionVector& v) { return eval_vec(v.counts()); }

  BigCount eval_vec(std::vector<int> v) {
    long long total = 0;
    for (int c : v) total += c;
    if (total == 0) return 1;
    if (total == 1) {
      std::size_t idx = 0;
      while (v[idx] == 0) ++idx;
      return idx >= 1 ? 1 : 0; // the single word "1" is not a path
    }
    // Zero coordinates are dropped only now: for totals >= 2 the down-up
    // property is preserved under the order isomorphism of the remaining
    // alphabet, while the word "1" above would not survive relabeling.
    std::vector<int> w;
    w.reserve(v.size());
    for (int c : v)
      if (c != 0) w.push_back(c);
    const int n = static_cast<int>(w.size());
    if (n == 1) return 0;
    if (n == 2) return (w[1] == w[0] || w[1] == w[0] + 1) ? 1 : 0;

    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;

    BigCount r;
    if (total % 2 != 0) {
      r = shifted(w, {{0, -1}, {1, -1}}) + shifted(w, {{n - 1, -1}});
      std::vector<int> box(w.begin() + 1, w.end() - 1);
      for_each_in_box(box, [&](const std::vector<int>& u, long long usum) {
        BigCount cu = eval_vec(u);
        if (cu == 0) return;
        std::vector<int> t = w;
        for (int q = 0; q < n - 2; ++q) t[static_cast<std::size_t>(q + 1)] -= u[static_cast<std::size_t>(q)];
        if (usum % 2 != 0)
          t[0] -= 1;
        else
          t[static_cast<std::size_t>(n - 1)] -= 1;
        r += cu * eval_nonneg(t);
      });
    } else {
      r = shifted(w, {{n - 1, -1}, {n - 2, -1}}) + shifted(w, {{0, -1}});
      // reversed embedding: u_q comes off coordinate n-2-q, so the box is
      // the reversed interior of w
      std::vector<int> box(w.rbegin() + 1, w.rend() - 1);
      for_each_in_box(box, [&](const std::vector<int>& u, long long usum) {
        BigCount cu = eval_vec(u);
        if (cu == 0) return;
        std::vector<int> t = w;
        for (int q = 0; q < n - 2; ++q) t[static_cast<std::size_t>(n - 2 - q)] -= u[static_cast<std::size_t>(q)];
        if (usum % 2 != 0)
          t[static_cast<std::size_t>(n - 1)] -= 1;
        else
          t[0] -= 1;
        r += cu * eval_nonneg(t);
      });
    }
    memo_.emplace(std::move(w), r);
    return r;
  }

 private:
  // all nonzero u with 0 <= u_q <= box_q
  template <typename F>
  void for_each_in_box(const std::vector<int>& box, F&& f) {
    const int k = static_cast<int>(box.size());
    std::vector<int> u(static_cast<std::size_t>(k), 0);
    long long usum = 0;
    while (true) {
      int q = 0;
      while (q < k && u[static_cast<std::size_t>(q)] == box[static_cast<std::size_t>(q)]) {
        usum -= u[static_cast<std::size_t>(q)];
        u[static_cast<std::size_t>(q)] = 0;
        ++q;
      }
      if (q == k) break;
      ++u[static_cast<std::size_t>(q)];
      ++usum;
      f(u, usum);
    }
  }

  BigCount shifted(const std::vector<int>& w, std::initializer_list<std::pair<int, int>> deltas) {
    std::vector<int> t = w;
    for (auto& [i, d] : deltas) t[static_cast<std::size_t>(i)] += d;
    return eval_nonneg(t);
  }

  BigCount eval_nonneg(const std::vector<int>& t) {
    for (int c : t)
      if (c < 0) return 0;
    return eval_vec(t);
  }

  std::map<std::vector<int>, BigCount> memo_;
};

inline BigCount N_rec(const ReflectionVector& v) {
  NRecEngine engine;
  return engine.eval(v);
}

// N is invariant under vector reversal for even totals (flip the stack).
inline bool reversal_symmetry_check(int n, long long total_max) {
  NRecEngine engine;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, long long left) -> bool {
    if (pos == n) {
      long long total = total_max - left;
      if (total % 2 != 0) return true;
      std::vector<int> r(v.rbegin(), v.rend());
      return engine.eval_vec(v) == engine.eval_vec(r);
    }
    for (int c = 0; c <= left; ++c) {
      v[static_cast<std::size_t>(pos)] = c;
      if (!self(self, pos + 1, left - c)) return false;
    }
    v[static_cast<std::size_t>(pos)] = 0;
    return true;
  };
  return rec(rec, 0, total_max);
}

} // namespace glasspath
