#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace glasspath {

// A word is the sequence of plate indices (1-based) at which a path
// reflects, in order. Valid words go down-up: w1 > w2 < w3 > w4 < ...
using Word = std::vector<int>;

// Word semantics admits every down-up word; path semantics additionally
// rejects the single word "1" (a path entering at plate 1 cannot reflect
// there first and leave). The two agree for every other word.
enum class Semantics { word, path };

inline bool is_alternating(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (i % 2 == 1) {
      if (w[i] >= w[i - 1]) return false;
    } else {
      if (w[i] <= w[i - 1]) return false;
    }
  }
  return true;
}

inline bool is_admissible(const Word& w, Semantics sem = Semantics::path) {
  if (!is_alternating(w)) return false;
  if (sem == Semantics::path && w.size() == 1 && w[0] == 1) return false;
  return true;
}

// Per-plate reflection multiplicities of a word. Entry i (0-based) counts
// occurrences of letter i+1.
class ReflectionVector {
 public:
  explicit ReflectionVector(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_)
      if (c < 0) throw std::invalid_argument("reflection counts must be nonnegative");
  }

  const std::vector<int>& counts() const { return counts_; }
  int plates() const { return static_cast<int>(counts_.size()); }
  int operator[](std::size_t i) const { return counts_[i]; }

  long long total() const {
    long long t = 0;
    for (int c : counts_) t += c;
    return t;
  }

  ReflectionVector reversed() const {
    std::vector<int> r(counts_.rbegin(), counts_.rend());
    return ReflectionVector(std::move(r));
  }

  bool operator==(const ReflectionVector&) const = default;

 private:
  std::vector<int> counts_;
};

inline ReflectionVector vector_of(const Word& w, int n) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int letter : w) {
    if (letter < 1 || letter > n) throw std::out_of_range("letter outside 1..n");
    ++c[static_cast<std::size_t>(letter - 1)];
  }
  return ReflectionVector(std::move(c));
}

namespace detail {

// Depth-first walk over all admissible words of length m over 1..n, letters
// chosen in ascending order at each position (hence lexicographic order of
// the finished words). visit(word) is called once per complete word.
template <typename Visit>
void walk_words(int n, long long m, Semantics sem, Word& w, Visit&& visit) {
  if (static_cast<long long>(w.size()) == m) {
    visit(const_cast<const Word&>(w));
    return;
  }
  std::size_t k = w.size();
  int lo, hi;
  if (k == 0) {
    lo = (m == 1 && sem == Semantics::path) ? 2 : 1;
    hi = n;
  } else if (k % 2 == 1) {
    lo = 1;
    hi = w.back() - 1;
  } else {
    lo = w.back() + 1;
    hi = n;
  }
  for (int x = lo; x <= hi; ++x) {
    w.push_back(x);
    walk_words(n, m, sem, w, visit);
    w.pop_back();
  }
}

} // namespace detail

template <typename Visit>
void for_each_word(int n, long long m, Semantics sem, Visit&& visit) {
  if (n < 0 || m < 0) throw std::invalid_argument("n, m must be nonnegative");
  Word w;
  w.reserve(static_cast<std::size_t>(m));
  detail::walk_words(n, m, sem, w, visit);
}

inline std::vector<Word> enumerate_words(int n, long long m, Semantics sem = Semantics::path) {
  std::vector<Word> out;
  for_each_word(n, m, sem, [&](const Word& w) { out.push_back(w); });
  return out;
}

// Visits every admissible word realizing exactly the multiset v, in
// lexicographic order.
template <typename Visit>
void for_each_word_with_vector(const ReflectionVector& v, Semantics sem, Visit&& visit) {
  const std::vector<int>& cnt = v.counts();
  const int n = v.plates();
  const long long m = v.total();
  Word w;
  if (m == 0) {
    visit(const_cast<const Word&>(w));
    return;
  }
  w.reserve(static_cast<std::size_t>(m));
  std::vector<int> left = cnt;
  auto go = [&](auto&& self) -> void {
    long long placed = static_cast<long long>(w.size());
    if (placed == m) {
      visit(const_cast<const Word&>(w));
      return;
    }
    int lo, hi;
    if (placed == 0) {
      lo = (m == 1 && sem == Semantics::path) ? 2 : 1;
      hi = n;
    } else if (placed % 2 == 1) {
      lo = 1;
      hi = w.back() - 1;
    } else {
      lo = w.back() + 1;
      hi = n;
    }
    for (int x = lo; x <= hi; ++x) {
      if (left[x - 1] == 0) continue;
      --left[x - 1];
      w.push_back(x);
      self(self);
      w.pop_back();
      ++left[x - 1];
    }
  };
  go(go);
}

// Brute-force count of admissible words realizing exactly the multiset v.
// Exponential; meant as ground truth for small totals.
inline BigCount oracle_N(const ReflectionVector& v, Semantics sem = Semantics::path) {
  BigCount total = 0;
  for_each_word_with_vector(v, sem, [&](const Word&) { ++total; });
  return total;
}

// Same count as oracle_N, memoized on (remaining multiset, last letter).
// The up/down phase of the next position is implied by how much of the
// multiset is already used, so it is not part of the key.
inline BigCount dp_N(const ReflectionVector& v, Semantics sem = Semantics::path) {
  const std::vector<int>& cnt = v.counts();
  const int n = v.plates();
  const long long m = v.total();
  if (m == 0) return 1;
  std::vector<long long> stride(static_cast<std::size_t>(n));
  long long states = 1;
  for (int i = 0; i < n; ++i) {
    stride[static_cast<std::size_t>(i)] = states;
    states *= cnt[static_cast<std::size_t>(i)] + 1;
  }
  std::vector<BigCount> memo(static_cast<std::size_t>(states * n));
  std::vector<char> seen(static_cast<std::size_t>(states * n), 0);
  std::vector<int> left = cnt;
  auto go = [&](auto&& self, long long ridx, int prev, long long placed) -> BigCount {
    if (placed == m) return BigCount(1);
    std::size_t key = static_cast<std::size_t>(ridx * n + (prev - 1));
    if (seen[key]) return memo[key];
    BigCount total = 0;
    int lo, hi;
    if (placed % 2 == 1) {
      lo = 1;
      hi = prev - 1;
    } else {
      lo = prev + 1;
      hi = n;
    }
    for (int x = lo; x <= hi; ++x) {
      if (left[x - 1] == 0) continue;
      --left[x - 1];
      total += self(self, ridx - stride[x - 1], x, placed + 1);
      ++left[x - 1];
    }
    seen[key] = 1;
    memo[key] = total;
    return total;
  };
  long long full = 0;
  for (int i = 0; i < n; ++i) full += cnt[i] * stride[i];
  BigCount result = 0;
  for (int x = 1; x <= n; ++x) {
    if (cnt[x - 1] == 0) continue;
    if (m == 1 && sem == Semantics::path && x == 1) continue;
    --left[x - 1];
    result += go(go, full - stride[x - 1], x, 1);
    ++left[x - 1];
  }
  return result;
}

// Number of admissible words of length m over n plates.
inline BigCount oracle_a(int n, long long m, Semantics sem = Semantics::path) {
  BigCount total = 0;
  for_each_word(n, m, sem, [&](const Word&) { ++total; });
  return total;
}

// Number of length-m words whose last letter is j, under word semantics
// (the single word "1" counts here; path semantics would drop it).
inline BigCount oracle_a_last(int n, long long m, int j) {
  if (m < 1) throw std::out_of_range("m must be at least 1");
  if (j < 1 || j > n) throw std::out_of_range("j outside 1..n");
  BigCount total = 0;
  for_each_word(n, m, Semantics::word, [&](const Word& w) {
    if (w.back() == j) ++total;
  });
  return total;
}

// Number of distinct reflection vectors realized by length-m paths.
inline BigCount oracle_b(int n, long long m) {
  std::set<std::vector<int>> seen;
  for_each_word(n, m, Semantics::path, [&](const Word& w) {
    seen.insert(vector_of(w, n).counts());
  });
  return BigCount(seen.size());
}

// Letters are printed as concatenated digits while they all fit in one
// digit, comma-separated otherwise.
inline std::string format_word(const Word& w) {
  bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x <= 9; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i > 0) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

} // namespace glasspath
