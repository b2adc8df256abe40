// Acceptance gate: one line per criterion, nonzero exit when any fails.
// All comparisons are exact integer/string equality; there are no
// tolerances anywhere.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "glasspath/genfun.hpp"
#include "glasspath/glass3.hpp"
#include "glasspath/recursion.hpp"
#include "glasspath/words.hpp"

using namespace glasspath;

namespace {

bool g_ok = true;

void expect(bool cond, const std::string& what) {
  if (!cond) {
    std::cerr << "    failed: " << what << "\n";
    g_ok = false;
  }
}

// all vectors over n plates with the given total
template <typename F>
void for_each_vector_with_total(int n, int total, F&& f) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      v[static_cast<std::size_t>(pos)] = left;
      f(v);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      v[static_cast<std::size_t>(pos)] = c;
      self(self, pos + 1, left - c);
    }
  };
  if (n == 0) {
    if (total == 0) f(v);
    return;
  }
  rec(rec, 0, total);
}

// --- criterion 1: frozen regression values -------------------------------

bool criterion1() {
  g_ok = true;
  expect(dp_N(ReflectionVector({2, 1, 1})) == 2, "N(2,1,1) == 2");
  expect(oracle_a(3, 4, Semantics::path) == 8, "a(3,4) == 8");
  expect(oracle_b(3, 4) == 6, "b(3,4) == 6");
  expect(dp_N(ReflectionVector({7, 5, 7})) == 840, "N(7,5,7) == 840 (dp)");
  expect(closed_N3(7, 5, 7) == 840, "N(7,5,7) == 840 (closed)");

  RationalGF d3 = build_D1(3);
  expect(d3.nu.str() == "1+t2+t3-t2^2*t3", "three-plate numerator");
  expect(d3.de.str() == "1-t1*t2-t1*t3-t2*t3+t1*t2^2*t3", "three-plate denominator");

  TruncatedSeries s = series(build_D1(2), 5);
  const std::vector<std::vector<int>> support = {{0, 0}, {0, 1}, {1, 1},
                                                 {1, 2}, {2, 2}, {2, 3}};
  expect(s.terms().size() == support.size(), "two-plate series support size");
  for (const auto& e : support)
    expect(s.coeff(e) == 1, "two-plate series coefficient 1 at listed exponent");

  for (long long k = 1; 2 * k <= 16; ++k)
    expect(oracle_b(3, 2 * k) == binomial(k + 2, 2), "b(3,2k) == C(k+2,2)");
  for (long long k = 1; 2 * k + 1 <= 16; ++k)
    expect(oracle_b(3, 2 * k + 1) == binomial(k + 2, 2) + 1, "b(3,2k+1) == C(k+2,2)+1");
  return g_ok;
}

// --- criterion 2: backend equivalence ------------------------------------

bool criterion2() {
  g_ok = true;

  for (int x = 0; x <= 12 && g_ok; ++x)
    for (int y = 0; y <= 12 && g_ok; ++y)
      for (int z = 0; z <= 12 && g_ok; ++z) {
        ReflectionVector v({x, y, z});
        expect(closed_N3(x, y, z) == dp_N(v),
               "closed == dp at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                   std::to_string(z) + ")");
      }

  for (int n : {4, 5}) {
    NRecEngine engine;
    for (int total = 0; total <= 10 && g_ok; ++total)
      for_each_vector_with_total(n, total, [&](const std::vector<int>& v) {
        expect(engine.eval_vec(v) == dp_N(ReflectionVector(v)), "recursion == dp");
      });
  }

  for (int n : {2, 3, 4}) {
    TruncatedSeries s = series(build_D1(n), 10);
    for (int total = 0; total <= 10 && g_ok; ++total)
      for_each_vector_with_total(n, total, [&](const std::vector<int>& v) {
        ReflectionVector rv(v);
        BigCount want = dp_N(rv);
        expect(s.coeff(v) == want, "series == dp");
        if (total <= 8) expect(oracle_N(rv) == want, "oracle == dp");
      });
  }
  return g_ok;
}

// --- criterion 3: last-letter closed form --------------------------------

bool criterion3() {
  g_ok = true;
  for (int n = 2; n <= 6 && g_ok; ++n)
    for (long long m = 1; m <= 12 && g_ok; ++m)
      for (int j = 1; j <= n; ++j)
        expect(a_last_closed(n, m, j) == oracle_a_last(n, m, j),
               "a_last closed == oracle at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                   " j=" + std::to_string(j));

  for (int n = 2; n <= 6; ++n)
    expect(step_recursion_check(n, 10), "step recursion at n=" + std::to_string(n));

  auto path_a3 = [](long long m) {
    BigCount v = a_closed(3, m);
    if (m == 1) v -= 1;
    return v;
  };
  for (long long m = 3; m <= 12; ++m)
    expect(path_a3(m) == path_a3(m - 1) + path_a3(m - 2),
           "Fibonacci step at m=" + std::to_string(m));
  return g_ok;
}

// --- criterion 4: three-plate matrix structure ----------------------------

bool criterion4() {
  g_ok = true;
  const int extent = 14;
  for (int n = 1; n <= 8; ++n)
    expect(tick_check(n, extent), "tick recursion at n=" + std::to_string(n));

  for (int n = 0; n <= 8; ++n) {
    CountMatrix m = build_matrix(n, extent);
    for (int i = 1; i <= 2 * n + 3; ++i) {
      DiagonalSequence s;
      try {
        s = diagonal(m, i);
      } catch (const std::out_of_range&) {
        expect(false, "diagonal " + std::to_string(i) + " observable at n=" + std::to_string(n));
        continue;
      }
      expect(s.terms.front() == lt_closed(n, i),
             "leading term of diagonal " + std::to_string(i) + " at n=" + std::to_string(n));
    }
    expect(arithmetic_order_check(n, extent), "arithmetic order at n=" + std::to_string(n));
    expect(lt_ratio_check(n, extent), "leading-term ratios at n=" + std::to_string(n));
  }

  CountMatrix m4 = build_matrix(4, extent);
  DifferenceTriangle t9 = difference_triangle(diagonal(m4, 9).terms, 3);
  const BigCount r9[] = {5, 15, 15, 5};
  for (int j = 0; j <= 3; ++j)
    expect(t9.rows[static_cast<std::size_t>(j)].front() == r9[j], "S(4,9) ratio row 1:3:3:1");

  CountMatrix m5 = build_matrix(5, extent);
  DifferenceTriangle t11 = difference_triangle(diagonal(m5, 11).terms, 4);
  const BigCount r11[] = {6, 24, 36, 24, 6};
  for (int j = 0; j <= 4; ++j)
    expect(t11.rows[static_cast<std::size_t>(j)].front() == r11[j], "S(5,11) ratio row 1:4:6:4:1");
  return g_ok;
}

// --- criterion 5: feasibility matches count positivity --------------------

bool criterion5() {
  g_ok = true;
  for (int a1 = 0; a1 <= 10; ++a1)
    for (int a2 = 0; a2 <= 10; ++a2)
      for (int a3 = 0; a3 <= 10; ++a3) {
        ReflectionVector v({a1, a2, a3});
        Feasibility f = exists3(a1, a2, a3);
        std::string at = " at (" + std::to_string(a1) + "," + std::to_string(a2) + "," +
                         std::to_string(a3) + ")";
        expect(f.feasible == (dp_N(v) > 0), "feasible == (N > 0)" + at);
        if (f.feasible) {
          if (!f.witness) {
            expect(false, "witness present" + at);
            continue;
          }
          expect(is_admissible(*f.witness, Semantics::path), "witness admissible" + at);
          expect(vector_of(*f.witness, 3) == v, "witness vector" + at);
        }
      }
  return g_ok;
}

// --- criterion 6: generating-function identities --------------------------

MultiPoly random_poly(std::mt19937& g, int nv) {
  MultiPoly p(nv);
  int terms = 1 + static_cast<int>(g() % 5);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(nv));
    for (auto& x : e) x = static_cast<int>(g() % 4);
    int c = static_cast<int>(g() % 11) - 5;
    if (c == 0) c = 1;
    p.add_term(Monomial{std::move(e)}, c);
  }
  return p;
}

bool criterion6() {
  g_ok = true;
  for (int n = 2; n <= 5; ++n) {
    expect(even_part_identity_check(n, 10), "even part inverts de at n=" + std::to_string(n));
    expect(parity_structure_check(n), "parity structure at n=" + std::to_string(n));
  }

  std::mt19937 g(12345);
  for (int trial = 0; trial < 100; ++trial) {
    int nv = 2 + static_cast<int>(g() % 3);
    MultiPoly p = random_poly(g, nv);
    MultiPoly q = random_poly(g, nv);
    expect(p.primed().primed() == p, "prime is an involution");
    expect((p + q).primed() == p.primed() + q.primed(), "prime respects addition");
    expect((p * q).primed() == p.primed() * q.primed(), "prime respects multiplication");
  }
  return g_ok;
}

// --- criterion 7: CLI determinism -----------------------------------------

std::optional<std::string> run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return std::nullopt;
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int status = pclose(p);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return std::nullopt;
  return out;
}

bool criterion7(const char* cli) {
  g_ok = true;
  if (!cli) {
    expect(false, "path to the command-line binary was not supplied");
    return g_ok;
  }
  for (const std::string& args : {"matrix 7 14 --diagonals", "gf 3 6", "words 3 6"}) {
    auto a = run_cli(cli, args);
    auto b = run_cli(cli, args);
    expect(a.has_value() && b.has_value(), "'" + args + "' runs cleanly");
    if (a && b) {
      expect(!a->empty(), "'" + args + "' produces output");
      expect(*a == *b, "'" + args + "' is byte-identical across runs");
    }
  }
  return g_ok;
}

} // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  struct Criterion {
    const char* label;
    bool passed;
  };
  std::vector<Criterion> results;
  results.push_back({"1 frozen regression values", criterion1()});
  results.push_back({"2 backend equivalence grids", criterion2()});
  results.push_back({"3 last-letter closed form and step recursions", criterion3()});
  results.push_back({"4 matrix diagonal structure", criterion4()});
  results.push_back({"5 feasibility with validated witnesses", criterion5()});
  results.push_back({"6 series and prime identities", criterion6()});
  results.push_back({"7 command-line determinism", criterion7(cli)});

  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.label << "\n";
    if (!r.passed) ++failures;
  }
  return failures;
}
