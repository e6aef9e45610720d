#pragma once

// Text formats: triangle CSV/JSON, root/point dumps, count tables, SVG scatter.
// Everything is locale independent; floating values use std::to_chars.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bracelet/configurations.hpp"
#include "bracelet/curve.hpp"
#include "bracelet/necklaces.hpp"

namespace bracelet::io {

/// Parse failure; `line` is 1-based (0 when not tied to a line).
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip form is not used: always 17 significant digits.
std::string format_double(double x);
/// Fixed-point with `decimals` digits.
std::string format_fixed(double x, int decimals);
double parse_double(std::string_view s, std::size_t line);

// Triangle: CSV has rows t = 1..tmax, one per line, values joined by commas.
// JSON is {"tmax": N, "rows": [[...], ...]} with rows[t][k] decimal strings, t = 0..tmax.
void write_triangle_csv(std::ostream& os, const config::NecklaceTriangle& tri);
void write_triangle_json(std::ostream& os, const config::NecklaceTriangle& tri);
/// Rows 1..n from CSV; row 0 is filled in as [1].
config::NecklaceTriangle read_triangle_csv(std::istream& is);
config::NecklaceTriangle read_triangle_json(std::istream& is);

/// One line of a root dump: family,t,root_re,root_im,u,v,residual.
struct PointRow {
  std::string family;
  std::int64_t t = 0;
  double root_re = 0.0;
  double root_im = 0.0;
  std::optional<double> u;
  std::optional<double> v;
  std::optional<double> residual;
};

inline constexpr std::string_view kPointHeader = "family,t,root_re,root_im,u,v,residual";

void write_points_csv(std::ostream& os, const std::vector<PointRow>& rows);
std::vector<PointRow> read_points_csv(std::istream& is);

std::vector<PointRow> necklace_rows(const std::vector<curve::PointRecord>& records);
std::vector<PointRow> rowsum_rows(std::int64_t n, const std::vector<poly::ComplexPoint>& roots);

void write_count_rows_csv(std::ostream& os, const std::vector<necklaces::CountRow>& rows);
void write_susy_csv(std::ostream& os, const necklaces::SusyClassification& c);

struct Window {
  double xmin = -1.0;
  double xmax = 1.0;
  double ymin = -1.0;
  double ymax = 1.0;

  [[nodiscard]] bool contains(double x, double y) const { return x >= xmin && x <= xmax && y >= ymin && y <= ymax; }
};

/// "xmin,xmax,ymin,ymax"; throws std::invalid_argument on bad syntax or empty ranges.
Window parse_window(std::string_view s);

struct ScatterOptions {
  std::string title;
  std::string xlabel = "Re";
  std::string ylabel = "Im";
};

struct ScatterResult {
  std::string svg;
  std::size_t markers = 0;
};

/// 800x600 scatter of the points inside `w`, markers sorted by (x, y).
ScatterResult render_scatter(std::vector<std::pair<double, double>> points, const Window& w,
                             const ScatterOptions& opt = {});

/// Writes `content` to `path` (or stdout for "-"); throws IoError with the path.
void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace bracelet::io
