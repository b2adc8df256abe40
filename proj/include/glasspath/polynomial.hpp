#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace glasspath {

struct Monomial {
  std::vector<int> e; // exponent of t_{i+1} at index i

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool operator==(const Monomial&) const = default;
};

// Graded order; within a degree the lexicographically larger exponent
// vector comes first, so t1*t2 < t1*t3 < t2*t3 and t2 < t3. This is the
// canonical print order.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return b.e < a.e;
  }
};

// Sparse multivariate polynomial over BigCount in a fixed number of
// variables t1..t_nvars. No zero coefficients are stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigCount, TermOrder>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("nvars must be nonnegative");
  }

  static MultiPoly constant(int nvars, BigCount c) {
    MultiPoly p(nvars);
    p.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(nvars), 0)}, std::move(c));
    return p;
  }

  static MultiPoly one(int nvars) { return constant(nvars, 1); }

  // t_k, k in 1..nvars
  static MultiPoly variable(int nvars, int k) {
    if (k < 1 || k > nvars) throw std::out_of_range("variable index outside 1..nvars");
    MultiPoly p(nvars);
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(k - 1)] = 1;
    p.add_term(Monomial{std::move(e)}, 1);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    // map is graded, so the last term has maximal total degree
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
  }

  void add_term(Monomial m, BigCount c) {
    if (static_cast<int>(m.e.size()) != nvars_)
      throw std::invalid_argument("monomial arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigCount coeff(const std::vector<int>& e) const {
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("exponent arity mismatch");
    auto it = terms_.find(Monomial{e});
    return it == terms_.end() ? BigCount(0) : it->second;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly r(nvars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m = ma;
        for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  // t_i -> t_{nvars+1-i}; models flipping the plate stack upside down
  MultiPoly primed() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial rm = m;
      std::reverse(rm.e.begin(), rm.e.end());
      r.terms_.emplace(std::move(rm), c);
    }
    return r;
  }

  // identity embedding into a wider ring: new variables get exponent 0
  MultiPoly extended(int new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("cannot shrink arity");
    MultiPoly r(new_nvars);
    for (const auto& [m, c] : terms_) {
      Monomial em = m;
      em.e.resize(static_cast<std::size_t>(new_nvars), 0);
      r.terms_.emplace(std::move(em), c);
    }
    return r;
  }

  // keeps only terms with total degree <= bound
  MultiPoly truncated(int bound) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() > bound) break; // graded order
      r.terms_.emplace(m, c);
    }
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      BigCount mag = c;
      if (c < 0) {
        s += '-';
        mag = -c;
      } else if (!first) {
        s += '+';
      }
      first = false;
      bool constant = m.degree() == 0;
      bool printed_c = false;
      if (constant || mag != 1) {
        s += mag.str();
        printed_c = true;
      }
      for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (printed_c) s += '*';
        printed_c = true;
        s += 't';
        s += std::to_string(i + 1);
        if (m.e[i] > 1) {
          s += '^';
          s += std::to_string(m.e[i]);
        }
      }
    }
    return s;
  }

 private:
  void check_arity(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  }

  int nvars_;
  TermMap terms_;
};

} // namespace glasspath
