#pragma once

#include <stdexcept>
#include <string>

#include "words.hpp"

namespace glasspath {

// Schematic rendering on a 40px grid: plate p is the dashed line y = 40p,
// the path enters at (0,0), reflection k sits at (40k, 40*w_k) and the
// exit stub ends one step past the last reflection, one plate up. Output
// is built from integers only, so identical input gives identical bytes.
inline std::string render_svg(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("need at least one plate");
  if (!is_admissible(w, Semantics::path)) throw std::invalid_argument("word is not a path");
  vector_of(w, n); // letter range check
  const long long m = static_cast<long long>(w.size());
  const long long width = 40 * (m + 2);
  const long long height = 40 * (n + 1);
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
       "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
       " " + std::to_string(height) + "\">\n";
  for (int p = 1; p <= n; ++p) {
    std::string y = std::to_string(40 * p);
    s += "  <line x1=\"0\" y1=\"" + y + "\" x2=\"" + std::to_string(width) + "\" y2=\"" + y +
         "\" stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  }
  if (m > 0) {
    s += "  <polyline points=\"0,0";
    for (long long k = 1; k <= m; ++k)
      s += " " + std::to_string(40 * k) + "," + std::to_string(40 * w[static_cast<std::size_t>(k - 1)]);
    s += " " + std::to_string(40 * (m + 1)) + "," + std::to_string(40 * w.back() - 40);
    s += "\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

} // namespace glasspath
