#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace glasspath {

// Rational generating function kept as a numerator/denominator pair.
// The struct itself never reduces; equality questions are settled by
// cross-multiplication or by comparing series prefixes.
struct RationalGF {
  MultiPoly nu;
  MultiPoly de;

  std::string str() const { return "(" + nu.str() + ")/(" + de.str() + ")"; }
};

namespace detail {

inline MultiPoly even_degree_part(const MultiPoly& p) {
  MultiPoly r(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (m.degree() % 2 == 0) r.add_term(m, c);
  return r;
}

// Exact quotient p/g by graded long division, for g with constant term 1.
// Throws if g does not divide p.
inline MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& g) {
  MultiPoly q(p.nvars());
  MultiPoly r = p;
  const int cap = p.degree();
  while (!r.terms().empty()) {
    const auto& [m, c] = *r.terms().begin();
    if (m.degree() > cap) throw std::logic_error("exact_quotient: not divisible");
    MultiPoly term(p.nvars());
    term.add_term(m, c);
    q = q + term;
    r = r - term * g;
  }
  return q;
}

} // namespace detail

// D^n_1: generating function of paths entering at the top plate, with
// coeff of t1^v1...tn^vn equal to N(v).
//
// The defining functional equation involves the primed unknown; applying
// prime once more and eliminating gives the explicit step used here:
//   nu_k = nu_{k-1} * prime(de_{k-1}) + t_k * prime(nu_{k-1})
//   de_k = de_{k-1} * prime(de_{k-1}) - t1 * t_k
// with the k-1 pieces embedded into k variables before priming.
//
// From k = 4 on, the eliminated pair carries a common even-degree factor.
// The canonical pair (de all even, nu = 1 plus odd terms) is restored by
// dividing out the even part of the eliminated numerator: when nu factors
// as g * (1 + odd) with g even, the even part of nu is exactly g.
inline RationalGF build_D1(int n) {
  if (n < 2) throw std::invalid_argument("build_D1 needs n >= 2");
  MultiPoly nu = MultiPoly::one(2) + MultiPoly::variable(2, 2);
  MultiPoly de = MultiPoly::one(2) - MultiPoly::variable(2, 1) * MultiPoly::variable(2, 2);
  for (int k = 3; k <= n; ++k) {
    nu = nu.extended(k);
    de = de.extended(k);
    MultiPoly nup = nu.primed();
    MultiPoly dep = de.primed();
    MultiPoly t1 = MultiPoly::variable(k, 1);
    MultiPoly tk = MultiPoly::variable(k, k);
    nu = nu * dep + tk * nup;
    de = de * dep - t1 * tk;
    MultiPoly g = detail::even_degree_part(nu);
    if (!(g == MultiPoly::one(k))) {
      MultiPoly nu_c = detail::exact_quotient(nu, g);
      MultiPoly de_c = detail::exact_quotient(de, g);
      if (!(nu_c * g == nu) || !(de_c * g == de))
        throw std::logic_error("build_D1: canonical reduction failed");
      nu = std::move(nu_c);
      de = std::move(de_c);
    }
  }
  return RationalGF{std::move(nu), std::move(de)};
}

// D^n_i: paths entering at plate i. All D^n_a share de(D^n_1), so only
// numerators are accumulated:
//   N_c = N_1 - de * (t_2+..+t_c) - sum_{1<=a<b<=c} t_b * t_a * N_a
inline RationalGF build_Di(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("i outside 1..n");
  RationalGF d1 = build_D1(n);
  if (i == 1) return d1;
  const MultiPoly& de = d1.de;
  MultiPoly inner = MultiPoly::variable(n, 1) * d1.nu; // sum of t_a * N_a, a < next c
  MultiPoly sum_t(n);
  MultiPoly dsum(n);
  MultiPoly nc = d1.nu;
  for (int c = 2; c <= i; ++c) {
    MultiPoly tc = MultiPoly::variable(n, c);
    sum_t = sum_t + tc;
    dsum = dsum + tc * inner;
    nc = d1.nu - de * sum_t - dsum;
    if (c < i) inner = inner + tc * nc;
  }
  return RationalGF{std::move(nc), de};
}

// Power-series prefix of a rational GF up to a total-degree bound.
// Only nonzero coefficients are stored, in graded term order.
class TruncatedSeries {
 public:
  TruncatedSeries(int nvars, int bound) : nvars_(nvars), bound_(bound) {}

  int nvars() const { return nvars_; }
  int bound() const { return bound_; }
  const MultiPoly::TermMap& terms() const { return terms_; }

  BigCount coeff(const std::vector<int>& e) const {
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("exponent arity mismatch");
    Monomial m{e};
    if (m.degree() > bound_) throw std::out_of_range("coefficient beyond truncation bound");
    auto it = terms_.find(m);
    return it == terms_.end() ? BigCount(0) : it->second;
  }

  void set(Monomial m, BigCount c) {
    if (c != 0) terms_.emplace(std::move(m), std::move(c));
  }

 private:
  int nvars_;
  int bound_;
  MultiPoly::TermMap terms_;
};

// Degree-by-degree division nu/de with de(0)=1:
//   S_d = nu_d - sum_{e=1..d} de_e * S_{d-e}   (subscripts: total-degree slices)
inline TruncatedSeries series(const RationalGF& gf, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  const int nv = gf.nu.nvars();
  std::vector<int> zero(static_cast<std::size_t>(nv), 0);
  if (gf.de.coeff(zero) != 1)
    throw std::invalid_argument("denominator constant term must be 1");

  // de terms of degree 1..bound, bucketed by degree (the rest cannot
  // influence coefficients within the bound)
  std::vector<std::vector<std::pair<const Monomial*, const BigCount*>>> de_by_deg(
      static_cast<std::size_t>(bound) + 1);
  for (const auto& [m, c] : gf.de.terms()) {
    int d = m.degree();
    if (d >= 1 && d <= bound) de_by_deg[static_cast<std::size_t>(d)].push_back({&m, &c});
  }
  std::vector<std::vector<std::pair<const Monomial*, const BigCount*>>> nu_by_deg(
      static_cast<std::size_t>(bound) + 1);
  for (const auto& [m, c] : gf.nu.terms()) {
    int d = m.degree();
    if (d <= bound) nu_by_deg[static_cast<std::size_t>(d)].push_back({&m, &c});
  }

  TruncatedSeries out(nv, bound);
  std::vector<std::vector<std::pair<Monomial, BigCount>>> slices(
      static_cast<std::size_t>(bound) + 1);
  for (int d = 0; d <= bound; ++d) {
    std::map<Monomial, BigCount, TermOrder> acc;
    for (auto& [m, c] : nu_by_deg[static_cast<std::size_t>(d)]) acc[*m] = *c;
    for (int e = 1; e <= d; ++e) {
      for (auto& [tm, tc] : de_by_deg[static_cast<std::size_t>(e)]) {
        for (auto& [sm, sc] : slices[static_cast<std::size_t>(d - e)]) {
          Monomial prod = *tm;
          for (std::size_t q = 0; q < prod.e.size(); ++q) prod.e[q] += sm.e[q];
          acc[std::move(prod)] -= *tc * sc;
        }
      }
    }
    auto& slice = slices[static_cast<std::size_t>(d)];
    for (auto& [m, c] : acc) {
      if (c == 0) continue;
      slice.push_back({m, c});
      out.set(m, c);
    }
  }
  return out;
}

// The even-total-degree part of D^n_1 is exactly 1/de, so multiplying it
// back by de must give 1 through the bound.
inline bool even_part_identity_check(int n, int bound) {
  RationalGF gf = build_D1(n);
  TruncatedSeries s = series(gf, bound);
  MultiPoly even(gf.nu.nvars());
  for (const auto& [m, c] : s.terms())
    if (m.degree() % 2 == 0) even.add_term(m, c);
  MultiPoly prod = (even * gf.de).truncated(bound);
  return prod == MultiPoly::one(gf.nu.nvars());
}

// de(D^n_1) has only even-degree terms; nu(D^n_1) is 1 plus odd-degree terms.
inline bool parity_structure_check(int n) {
  RationalGF gf = build_D1(n);
  for (const auto& [m, c] : gf.de.terms())
    if (m.degree() % 2 != 0) return false;
  for (const auto& [m, c] : gf.nu.terms()) {
    if (m.degree() == 0) {
      if (c != 1) return false;
    } else if (m.degree() % 2 == 0) {
      return false;
    }
  }
  return true;
}

} // namespace glasspath
