#include <catch2/catch_amalgamated.hpp>

#include "glasspath/svg.hpp"

using namespace glasspath;

TEST_CASE("layout of a two-letter path") {
  std::string s = render_svg({2, 1}, 2);
  CHECK(s.find("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"160\" height=\"120\"") !=
        std::string::npos);
  CHECK(s.find("points=\"0,0 40,80 80,40 120,0\"") != std::string::npos);
  // one dashed plate line per plate
  CHECK(s.find("y1=\"40\"") != std::string::npos);
  CHECK(s.find("y1=\"80\"") != std::string::npos);
  CHECK(s.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("empty word draws plates only") {
  std::string s = render_svg({}, 3);
  CHECK(s.find("polyline") == std::string::npos);
  CHECK(s.find("y1=\"120\"") != std::string::npos);
}

TEST_CASE("interior vertices follow the word") {
  std::string s = render_svg({2, 1, 3, 1}, 3);
  CHECK(s.find("points=\"0,0 40,80 80,40 120,120 160,40 200,0\"") != std::string::npos);
}

TEST_CASE("inadmissible input is rejected") {
  CHECK_THROWS_AS(render_svg({1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(render_svg({1, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(render_svg({2, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(render_svg({4, 1}, 3), std::out_of_range);
}

TEST_CASE("identical input gives identical bytes") {
  CHECK(render_svg({3, 1, 2}, 3) == render_svg({3, 1, 2}, 3));
}
