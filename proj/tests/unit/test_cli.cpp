#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "bracelet/curve.hpp"
#include "bracelet/io.hpp"
#include "cli.hpp"

using namespace bracelet;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("triangle") {
  const auto r = run({"triangle", "--tmax", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,1\n");
  const auto r10 = run({"triangle", "--tmax", "10"});
  std::istringstream is(r10.out);
  const auto tri = io::read_triangle_csv(is);
  CHECK(tri.rows == config::NecklaceTriangle::build(10).rows);
  const auto js = run({"triangle", "--tmax", "50", "--format", "json"});
  std::istringstream jis(js.out);
  const auto t50 = io::read_triangle_json(jis);
  CHECK(t50.rows[50][25] == config::necklace_binomial(50, 25));
  CHECK(run({"triangle", "--tmax", "5001"}).code == cli::kUsage);
  CHECK(run({"triangle", "--tmax", "3", "--format", "svg"}).code == cli::kUsage);
}

TEST_CASE("counts") {
  const auto r = run({"counts", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("macmahon 6\nallowed 4\nforbidden 2\nW 3\n") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const auto one = run({"counts", "--n", "1"});
  CHECK(one.out.find("macmahon 2\nallowed 2\nforbidden 0\nW 1\n") != std::string::npos);
  const auto ten = run({"counts", "--n", "10", "--format", "csv"});
  CHECK(ten.out.rfind("n,k,W_k\n", 0) == 0);
  CHECK(lines(ten.out) == 7);
  CHECK(run({"counts", "--n", "0"}).code == cli::kUsage);
}

TEST_CASE("poly and molien") {
  const auto p = run({"poly", "--family", "necklace", "--t", "4"});
  CHECK(p.out == "k,coefficient\n0,1\n1,2\n2,4\n3,2\n4,1\n");
  const auto f = run({"poly", "--family", "rowsum", "--n", "5", "--format", "json"});
  CHECK(f.out.find("[\"1\",\"1\",\"1\"]") != std::string::npos);
  const auto m = run({"molien", "--m", "1", "--terms", "5"});
  CHECK(m.out == "n,coefficient\n0,1\n1,1\n2,2\n3,2\n4,3\n");
  CHECK(run({"molien", "--terms", "5"}).code == cli::kUsage);
  CHECK(run({"poly", "--family", "bogus"}).code == cli::kUsage);
}

TEST_CASE("roots") {
  const auto r2 = run({"roots", "--family", "necklace", "--t", "2"});
  CHECK(r2.code == 0);
  std::istringstream is(r2.out);
  const auto rows = io::read_points_csv(is);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.root_re == doctest::Approx(-0.5));
    CHECK(std::abs(row.root_im) == doctest::Approx(std::sqrt(3.0) / 2));
  }
  const auto f = run({"roots", "--family", "rowsum", "--n", "200"});
  CHECK(f.code == 0);
  CHECK(lines(f.out) == 101);
  const auto sweep = run({"roots", "--family", "rowsum", "--tmin", "3", "--t", "20"});
  std::istringstream ss(sweep.out);
  std::size_t want = 0;
  for (int n = 3; n <= 20; ++n) want += static_cast<std::size_t>(n / 2);
  CHECK(io::read_points_csv(ss).size() == want);
  CHECK(run({"roots", "--family", "rowsum", "--n", "1"}).code == cli::kUsage);
  CHECK(run({"roots", "--t", "2001"}).code == cli::kUsage);
}

TEST_CASE("roots residual column re-checks") {
  const auto r = run({"roots", "--t", "30"});
  std::istringstream is(r.out);
  for (const auto& row : io::read_points_csv(is)) {
    REQUIRE(row.u.has_value());
    const double again = curve::residual(curve::CurvePoint::affine(*row.u, *row.v));
    CHECK(again == *row.residual);
  }
}

TEST_CASE("curve reports") {
  CHECK(run({"curve", "--report", "points", "--t", "4"}).out.find("t,u,v,residual,normalized_residual\n") == 0);
  CHECK(lines(run({"curve", "--report", "points", "--t", "4"}).out) == 5);
  CHECK(run({"curve", "--report", "table"}).out.find("P7 N_4") != std::string::npos);
  CHECK(run({"curve", "--report", "octic"}).code == 0);
  CHECK(run({"curve", "--report", "divisibility", "--tmax", "40"}).out.find("none") != std::string::npos);
}

TEST_CASE("plot and I/O errors") {
  const auto dir = std::filesystem::temp_directory_path() / "bracelet_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "n20.csv").string();
  const auto svg = (dir / "n20.svg").string();
  CHECK(run({"roots", "--t", "20", "--out", csv}).code == 0);
  const auto p = run({"plot", "--in", csv, "--out", "-", "--window", "-1.1,0.1,-7,7"});
  CHECK(p.code == 0);
  std::size_t circles = 0;
  for (auto pos = p.out.find("<circle"); pos != std::string::npos; pos = p.out.find("<circle", pos + 1)) ++circles;
  CHECK(circles == 20);
  CHECK(run({"plot", "--in", csv, "--out", svg}).code == 0);
  CHECK(std::filesystem::exists(svg));
  const auto empty = run({"plot", "--in", csv, "--window", "5,6,5,6"});
  CHECK(empty.out.find("<circle") == std::string::npos);
  CHECK(run({"plot", "--in", (dir / "missing.csv").string()}).code == cli::kIo);
  io::write_file(dir / "bad.csv", "family,t,root_re,root_im,u,v,residual\nnecklace,1,zz,0,,,\n");
  const auto bad = run({"plot", "--in", (dir / "bad.csv").string()});
  CHECK(bad.code == cli::kIo);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"triangle", "--tmax", "3", "--out", (dir / "x" / "y.csv").string()}).code == cli::kIo);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify exit status follows FAIL lines") {
  const auto r = run({"verify", "--suite", "oracles", "--n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kUsage);
  CHECK(run({"verify", "--n", "29"}).code == cli::kUsage);
}

TEST_CASE("usage") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"--jobs", "2", "triangle", "--tmax", "2"}).code == 0);
}
