#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bracelet/io.hpp"

using namespace bracelet;

#ifndef GOLDEN_DIR
#error "GOLDEN_DIR must point at tests/golden"
#endif

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("double formatting round-trips") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const double x = d(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    REQUIRE(io::parse_double(io::format_double(x), 1) == x);
  }
  CHECK(io::format_fixed(-0.0001, 2) == "0.00");
  CHECK(io::format_fixed(2.5, 3) == "2.500");
  CHECK_THROWS_AS(io::parse_double("1,5", 4), io::FormatError);
  CHECK(io::parse_double("+2", 1) == 2.0);
}

TEST_CASE("triangle CSV and JSON round-trip") {
  const auto tri = config::NecklaceTriangle::build(40);
  std::stringstream csv;
  io::write_triangle_csv(csv, tri);
  const auto back = io::read_triangle_csv(csv);
  CHECK(back.tmax == tri.tmax);
  CHECK(back.rows == tri.rows);
  std::stringstream js;
  io::write_triangle_json(js, tri);
  const auto back2 = io::read_triangle_json(js);
  CHECK(back2.rows == tri.rows);
  std::istringstream first("1,1\n1,1,1\n");
  CHECK(io::read_triangle_csv(first).rows[2] == std::vector<BigInt>{1, 1, 1});
}

TEST_CASE("malformed triangle input") {
  std::istringstream short_row("1,1\n1,1\n");
  try {
    (void)io::read_triangle_csv(short_row);
    FAIL("expected FormatError");
  } catch (const io::FormatError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream junk("1,x\n");
  CHECK_THROWS_AS(io::read_triangle_csv(junk), io::FormatError);
  std::istringstream bad_json("{\"tmax\": 2, \"rows\": [[\"1\"]]}");
  CHECK_THROWS_AS(io::read_triangle_json(bad_json), io::FormatError);
  std::istringstream not_json("[1,");
  CHECK_THROWS_AS(io::read_triangle_json(not_json), io::FormatError);
}

TEST_CASE("point dump round-trip") {
  std::vector<io::PointRow> rows{
      {"necklace", 2, -0.5, -0.8660254037844386, 2.0, -1.7320508075688772, -4.4408920985006262e-16},
      {"necklace", 1, -1.0, 0.0, std::nullopt, std::nullopt, std::nullopt},
      {"rowsum", 5, -0.1, 1e-300, std::nullopt, std::nullopt, std::nullopt},
  };
  std::stringstream ss;
  io::write_points_csv(ss, rows);
  const auto back = io::read_points_csv(ss);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].family == rows[i].family);
    CHECK(back[i].t == rows[i].t);
    CHECK(back[i].root_re == rows[i].root_re);
    CHECK(back[i].root_im == rows[i].root_im);
    CHECK(back[i].u == rows[i].u);
    CHECK(back[i].residual == rows[i].residual);
  }
}

TEST_CASE("malformed point dumps report line numbers") {
  std::istringstream no_header("necklace,2,0,0,,,\n");
  CHECK_THROWS_AS(io::read_points_csv(no_header), io::FormatError);
  std::istringstream bad("family,t,root_re,root_im,u,v,residual\nnecklace,2,0,0,,,\nnecklace,2,abc,0,,,\n");
  try {
    (void)io::read_points_csv(bad);
    FAIL("expected FormatError");
  } catch (const io::FormatError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream half("family,t,root_re,root_im,u,v,residual\nnecklace,2,0,0,1,,\n");
  CHECK_THROWS_AS(io::read_points_csv(half), io::FormatError);
  std::istringstream fields("family,t,root_re,root_im,u,v,residual\nnecklace,2,0\n");
  CHECK_THROWS_AS(io::read_points_csv(fields), io::FormatError);
}

TEST_CASE("window parsing") {
  const auto w = io::parse_window("-10,2,-2,2");
  CHECK(w.xmin == -10.0);
  CHECK(w.ymax == 2.0);
  CHECK_THROWS_AS(io::parse_window("1,0,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_window("0,1,0"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_window("a,1,0,1"), std::invalid_argument);
}

TEST_CASE("scatter SVG") {
  const io::Window unit{0.0, 1.0, 0.0, 1.0};
  const auto res = io::render_scatter({{0.5, 0.5}, {0.0, 1.0}, {2.0, 0.5}}, unit, {"demo", "Re", "Im"});
  CHECK(res.markers == 2);
  CHECK(count(res.svg, "<circle") == 2);
  // linear map onto the 700 x 500 plot area at offset (70, 40)
  CHECK(res.svg.find("<circle cx=\"420.00\" cy=\"290.00\" r=\"2\"/>") != std::string::npos);
  CHECK(res.svg.find("<circle cx=\"70.00\" cy=\"40.00\" r=\"2\"/>") != std::string::npos);
  CHECK(res.svg == slurp(std::filesystem::path(GOLDEN_DIR) / "scatter_small.svg"));
  // empty window content: frame and axes only
  const auto empty = io::render_scatter({}, {-1.0, 1.0, -1.0, 1.0});
  CHECK(empty.markers == 0);
  CHECK(count(empty.svg, "<circle") == 0);
  CHECK(count(empty.svg, "<line") == 2);
  // input order does not matter
  const auto again = io::render_scatter({{2.0, 0.5}, {0.0, 1.0}, {0.5, 0.5}}, unit, {"demo", "Re", "Im"});
  CHECK(again.svg == res.svg);
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "bracelet_io_test";
  std::filesystem::create_directories(dir);
  io::write_file(dir / "a.txt", "hello\n");
  CHECK(io::read_file(dir / "a.txt") == "hello\n");
  CHECK_THROWS_AS(io::read_file(dir / "missing.txt"), io::IoError);
  CHECK_THROWS_AS(io::write_file(dir / "no" / "such" / "dir.txt", "x"), io::IoError);
  std::filesystem::remove_all(dir);
}
