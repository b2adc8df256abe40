// Command-line front end: exact path counts, statistics tables, the
// three-plate matrix calculus, generating functions, feasibility queries
// and word listings with optional SVG rendering.
//
// Exit codes: 0 success (or feasible), 1 infeasible / backend mismatch,
// 2 usage error, 3 backend cannot serve the request, 4 output guard hit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "glasspath/genfun.hpp"
#include "glasspath/glass3.hpp"
#include "glasspath/recursion.hpp"
#include "glasspath/svg.hpp"
#include "glasspath/words.hpp"

namespace gp = glasspath;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kUsage = 2;
constexpr int kIncompatible = 3;
constexpr int kGuard = 4;
constexpr std::size_t kWordsGuard = 1000000;

std::optional<std::vector<int>> parse_vector(const std::string& s) {
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.empty()) return std::nullopt;
    for (char c : part)
      if (c < '0' || c > '9') return std::nullopt;
    try {
      v.push_back(std::stoi(part));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (v.empty()) return std::nullopt;
  return v;
}

gp::Semantics to_semantics(const std::string& s) {
  return s == "word" ? gp::Semantics::word : gp::Semantics::path;
}

struct CountCmd {
  std::string vec;
  std::string backend = "dp";
  std::string semantics = "path";
  bool all_backends = false;
};

int run_count(const CountCmd& c) {
  auto parsed = parse_vector(c.vec);
  if (!parsed) {
    std::cerr << "error: cannot parse vector '" << c.vec << "'\n";
    return kUsage;
  }
  gp::ReflectionVector v(*parsed);
  const int n = v.plates();
  const long long total = v.total();
  gp::Semantics sem = to_semantics(c.semantics);
  bool path = sem == gp::Semantics::path;

  auto run_backend = [&](const std::string& name) -> gp::BigCount {
    if (name == "oracle") return gp::oracle_N(v, sem);
    if (name == "dp") return gp::dp_N(v, sem);
    if (name == "recursion") return gp::N_rec(v);
    if (name == "closed3") return gp::closed_N3((*parsed)[0], (*parsed)[1], (*parsed)[2]);
    return gp::series(gp::build_D1(n), static_cast<int>(total)).coeff(*parsed);
  };

  if (c.all_backends) {
    std::vector<std::string> names = {"oracle", "dp"};
    if (path) {
      names.push_back("recursion");
      if (n == 3) names.push_back("closed3");
      if (n >= 2 && n <= 6) names.push_back("gf");
    }
    std::vector<gp::BigCount> vals;
    for (const auto& name : names) {
      vals.push_back(run_backend(name));
      std::cout << name << " " << vals.back().str() << "\n";
    }
    bool match = true;
    for (const auto& x : vals)
      if (x != vals.front()) match = false;
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    return match ? kOk : kInfeasible;
  }

  if (c.backend == "recursion" && !path) {
    std::cerr << "error: recursion backend counts paths only\n";
    return kIncompatible;
  }
  if (c.backend == "closed3" && (n != 3 || !path)) {
    std::cerr << "error: closed3 backend serves 3-plate path vectors only\n";
    return kIncompatible;
  }
  if (c.backend == "gf" && (n < 2 || n > 6 || !path)) {
    std::cerr << "error: gf backend serves path vectors with 2..6 plates\n";
    return kIncompatible;
  }
  std::cout << run_backend(c.backend).str() << "\n";
  return kOk;
}

struct TableCmd {
  long long n = 0;
  long long m_max = 0;
  std::string stat;
  std::string semantics = "path";
  std::string format = "table";
};

void print_aligned(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c].size() > width[c]) width[c] = r[c].size();
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0) line += "  ";
      line += std::string(width[c] - r[c].size(), ' ');
      line += r[c];
    }
    std::cout << line << "\n";
  }
}

int run_table(const TableCmd& t) {
  if (t.n < 1 || t.m_max < 1) {
    std::cerr << "error: need n >= 1 and m_max >= 1\n";
    return kUsage;
  }
  const int n = static_cast<int>(t.n);
  gp::Semantics sem = to_semantics(t.semantics);

  auto stat_a = [&](long long m) -> gp::BigCount {
    if (n >= 2) {
      gp::BigCount v = gp::a_closed(n, m);
      if (sem == gp::Semantics::path && m == 1) v -= 1; // drop the lone word "1"
      return v;
    }
    return gp::oracle_a(n, m, sem);
  };
  auto stat_b = [&](long long m) -> gp::BigCount {
    return n == 3 ? gp::b3_closed(m) : gp::oracle_b(n, m);
  };
  auto stat_a_last = [&](long long m, int j) -> gp::BigCount {
    return n >= 2 ? gp::a_last_closed(n, m, j) : gp::oracle_a_last(n, m, j);
  };

  if (t.stat == "a_last") {
    if (t.format == "jsonl") {
      for (long long m = 1; m <= t.m_max; ++m)
        for (int j = 1; j <= n; ++j) {
          ordered_json rec;
          rec["m"] = m;
          rec["j"] = j;
          rec["value"] = stat_a_last(m, j).str();
          std::cout << rec.dump() << "\n";
        }
      return kOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (long long m = 1; m <= t.m_max; ++m) {
      std::vector<std::string> row = {std::to_string(m)};
      for (int j = 1; j <= n; ++j) row.push_back(stat_a_last(m, j).str());
      rows.push_back(std::move(row));
    }
    if (t.format == "tsv") {
      for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c)
          std::cout << (c ? "\t" : "") << r[c];
        std::cout << "\n";
      }
    } else {
      print_aligned(rows);
    }
    return kOk;
  }

  auto value = [&](long long m) { return t.stat == "a" ? stat_a(m) : stat_b(m); };
  if (t.format == "jsonl") {
    for (long long m = 1; m <= t.m_max; ++m) {
      ordered_json rec;
      rec["m"] = m;
      rec["value"] = value(m).str();
      std::cout << rec.dump() << "\n";
    }
    return kOk;
  }
  std::vector<std::vector<std::string>> rows;
  for (long long m = 1; m <= t.m_max; ++m)
    rows.push_back({std::to_string(m), value(m).str()});
  if (t.format == "tsv") {
    for (const auto& r : rows) std::cout << r[0] << "\t" << r[1] << "\n";
  } else {
    print_aligned(rows);
  }
  return kOk;
}

struct MatrixCmd {
  long long n = 0;
  long long extent = 0;
  std::string backend = "dp";
  bool diagonals = false;
};

int run_matrix(const MatrixCmd& mc) {
  if (mc.n < 0 || mc.extent < 1) {
    std::cerr << "error: need n >= 0 and extent >= 1\n";
    return kUsage;
  }
  gp::Backend backend;
  if (mc.backend == "oracle")
    backend = gp::Backend::oracle;
  else if (mc.backend == "dp")
    backend = gp::Backend::dp;
  else if (mc.backend == "recursion")
    backend = gp::Backend::recursion;
  else if (mc.backend == "closed3")
    backend = gp::Backend::closed;
  else {
    std::cerr << "error: backend '" << mc.backend << "' cannot build matrices\n";
    return kIncompatible;
  }
  const int n = static_cast<int>(mc.n);
  const int extent = static_cast<int>(mc.extent);
  gp::CountMatrix m = gp::build_matrix(n, extent, backend);
  for (int i = 0; i < extent; ++i) {
    for (int j = 0; j < extent; ++j)
      std::cout << (j ? "\t" : "") << m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].str();
    std::cout << "\n";
  }
  if (mc.diagonals) {
    for (int i = 1; i <= 2 * n + 3; ++i) {
      gp::DiagonalSequence s;
      try {
        s = gp::diagonal(m, i);
      } catch (const std::out_of_range&) {
        continue; // start lies outside this extent
      }
      std::cout << "\nS" << i << "\tstart\t" << s.start_row << "\t" << s.start_col << "\n";
      int max_order = gp::diagonal_order(i);
      if (max_order > static_cast<int>(s.terms.size()) - 1)
        max_order = static_cast<int>(s.terms.size()) - 1;
      gp::DifferenceTriangle tri = gp::difference_triangle(s.terms, max_order);
      for (int k = 0; k <= max_order; ++k) {
        std::cout << "d" << k;
        for (const auto& x : tri.rows[static_cast<std::size_t>(k)]) std::cout << "\t" << x.str();
        std::cout << "\n";
      }
    }
  }
  return kOk;
}

struct GfCmd {
  long long n = 0;
  long long bound = 0;
};

int run_gf(const GfCmd& g) {
  if (g.n < 2 || g.n > 6) {
    std::cerr << "error: n must be within 2..6 (polynomials double in size per plate)\n";
    return kUsage;
  }
  if (g.bound < 0) {
    std::cerr << "error: bound must be nonnegative\n";
    return kUsage;
  }
  gp::RationalGF gf = gp::build_D1(static_cast<int>(g.n));
  std::cout << gf.str() << "\n";
  gp::TruncatedSeries s = gp::series(gf, static_cast<int>(g.bound));
  for (const auto& [mono, c] : s.terms()) {
    ordered_json rec;
    rec["v"] = mono.e;
    rec["coeff"] = c.str();
    std::cout << rec.dump() << "\n";
  }
  return kOk;
}

struct ExistsCmd {
  long long a1 = 0, a2 = 0, a3 = 0;
};

int run_exists(const ExistsCmd& e) {
  gp::Feasibility f = gp::exists3(e.a1, e.a2, e.a3);
  if (f.feasible) {
    std::cout << "FEASIBLE";
    if (!f.witness->empty()) std::cout << " " << gp::format_word(*f.witness);
    std::cout << "\n";
    return kOk;
  }
  long long total = e.a1 + e.a2 + e.a3;
  std::cout << "INFEASIBLE " << (total % 2 == 0 ? "triangle" : "odd-total reduction") << "\n";
  return kInfeasible;
}

struct WordsCmd {
  std::vector<long long> nm;
  std::string vec;
  std::string semantics = "path";
  std::string svg_file;
  long long index = 0;
};

struct GuardExceeded {};

int run_words(const WordsCmd& wc) {
  gp::Semantics sem = to_semantics(wc.semantics);
  int n = 0;
  std::optional<std::vector<int>> vec;
  if (!wc.vec.empty()) {
    if (!wc.nm.empty()) {
      std::cerr << "error: give either n m or --vector, not both\n";
      return kUsage;
    }
    vec = parse_vector(wc.vec);
    if (!vec) {
      std::cerr << "error: cannot parse vector '" << wc.vec << "'\n";
      return kUsage;
    }
    n = static_cast<int>(vec->size());
  } else {
    if (wc.nm.size() != 2 || wc.nm[0] < 0 || wc.nm[1] < 0) {
      std::cerr << "error: need n m (or --vector)\n";
      return kUsage;
    }
    n = static_cast<int>(wc.nm[0]);
  }

  auto enumerate = [&](auto&& visit) {
    if (vec)
      gp::for_each_word_with_vector(gp::ReflectionVector(*vec), sem, visit);
    else
      gp::for_each_word(n, wc.nm[1], sem, visit);
  };

  // First pass only counts, so nothing is printed when the guard trips.
  std::size_t count = 0;
  try {
    enumerate([&](const gp::Word&) {
      if (++count > kWordsGuard) throw GuardExceeded{};
    });
  } catch (const GuardExceeded&) {
    std::cerr << "error: more than " << kWordsGuard << " words; narrow the query\n";
    return kGuard;
  }

  gp::Word selected;
  bool want_svg = !wc.svg_file.empty();
  if (want_svg && (wc.index < 0 || wc.index >= static_cast<long long>(count))) {
    std::cerr << "error: no word at index " << wc.index << "\n";
    return kUsage;
  }
  std::size_t at = 0;
  enumerate([&](const gp::Word& w) {
    std::cout << gp::format_word(w) << "\n";
    if (want_svg && static_cast<long long>(at) == wc.index) selected = w;
    ++at;
  });
  if (want_svg) {
    std::ofstream out(wc.svg_file, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open '" << wc.svg_file << "'\n";
      return kUsage;
    }
    out << gp::render_svg(selected, n);
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting of reflection paths in stacked glass plates"};
  app.require_subcommand(1);

  CountCmd count_cmd;
  auto* count = app.add_subcommand("count", "count paths realizing a reflection vector");
  count->add_option("vector", count_cmd.vec, "comma-separated reflection counts, e.g. 2,1,1")
      ->required();
  count->add_option("--backend", count_cmd.backend, "oracle|dp|recursion|gf|closed3")
      ->check(CLI::IsMember({"oracle", "dp", "recursion", "gf", "closed3"}));
  count->add_option("--semantics", count_cmd.semantics, "word|path")
      ->check(CLI::IsMember({"word", "path"}));
  count->add_flag("--all-backends", count_cmd.all_backends,
                  "run every applicable backend and compare");

  TableCmd table_cmd;
  auto* table = app.add_subcommand("table", "statistics table over m = 1..m_max");
  table->add_option("n", table_cmd.n, "plate count")->required();
  table->add_option("m_max", table_cmd.m_max, "last row")->required();
  table->add_option("stat", table_cmd.stat, "a|b|a_last")
      ->required()
      ->check(CLI::IsMember({"a", "b", "a_last"}));
  table->add_option("--semantics", table_cmd.semantics, "word|path (stat a only)")
      ->check(CLI::IsMember({"word", "path"}));
  table->add_option("--format", table_cmd.format, "table|tsv|jsonl")
      ->check(CLI::IsMember({"table", "tsv", "jsonl"}));

  MatrixCmd matrix_cmd;
  auto* matrix = app.add_subcommand("matrix", "three-plate count matrix M_n as TSV");
  matrix->add_option("n", matrix_cmd.n, "first coordinate of (n,i,j)")->required();
  matrix->add_option("extent", matrix_cmd.extent, "rows and columns")->required();
  matrix->add_option("--backend", matrix_cmd.backend, "oracle|dp|recursion|closed3")
      ->check(CLI::IsMember({"oracle", "dp", "recursion", "gf", "closed3"}));
  matrix->add_flag("--diagonals", matrix_cmd.diagonals,
                   "append each nonzero diagonal with its difference rows");

  GfCmd gf_cmd;
  auto* gf = app.add_subcommand("gf", "generating function and series coefficients");
  gf->add_option("n", gf_cmd.n, "plate count, 2..6")->required();
  gf->add_option("bound", gf_cmd.bound, "total-degree truncation")->required();

  ExistsCmd exists_cmd;
  auto* exists = app.add_subcommand("exists", "three-plate feasibility with witness");
  exists->add_option("a1", exists_cmd.a1)->required()->check(CLI::NonNegativeNumber);
  exists->add_option("a2", exists_cmd.a2)->required()->check(CLI::NonNegativeNumber);
  exists->add_option("a3", exists_cmd.a3)->required()->check(CLI::NonNegativeNumber);

  WordsCmd words_cmd;
  auto* words = app.add_subcommand("words", "list admissible words");
  words->add_option("nm", words_cmd.nm, "n m: all words of length m over n plates")
      ->expected(0, 2);
  words->add_option("--vector", words_cmd.vec, "list words realizing this vector");
  words->add_option("--semantics", words_cmd.semantics, "word|path")
      ->check(CLI::IsMember({"word", "path"}));
  words->add_option("--svg", words_cmd.svg_file, "render one listed word to this file");
  words->add_option("--index", words_cmd.index, "which word --svg renders (0-based)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (count->parsed()) return run_count(count_cmd);
    if (table->parsed()) return run_table(table_cmd);
    if (matrix->parsed()) return run_matrix(matrix_cmd);
    if (gf->parsed()) return run_gf(gf_cmd);
    if (exists->parsed()) return run_exists(exists_cmd);
    if (words->parsed()) return run_words(words_cmd);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
