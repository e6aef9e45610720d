#include "bracelet/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace bracelet::io {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return {buf, res.ptr};
}

std::string format_fixed(double x, int decimals) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, decimals);
  std::string s(buf, res.ptr);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto res = std::from_chars(first, s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty()) {
    throw FormatError("not a number: '" + std::string(s) + "'", line);
  }
  return v;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

BigInt parse_bigint(std::string_view s, std::size_t line) {
  const std::string str(s);
  if (str.empty() || str.find_first_not_of("-0123456789") != std::string::npos) {
    throw FormatError("not an integer: '" + str + "'", line);
  }
  BigInt v;
  if (v.set_str(str, 10) != 0) throw FormatError("not an integer: '" + str + "'", line);
  return v;
}

std::int64_t parse_int(std::string_view s, std::size_t line) {
  std::int64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty()) {
    throw FormatError("not an integer: '" + std::string(s) + "'", line);
  }
  return v;
}

std::optional<double> parse_optional(std::string_view s, std::size_t line) {
  if (s.empty()) return std::nullopt;
  return parse_double(s, line);
}

std::string optional_text(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

void write_triangle_csv(std::ostream& os, const config::NecklaceTriangle& tri) {
  for (int t = 1; t <= tri.tmax; ++t) {
    const auto& row = tri.rows[static_cast<std::size_t>(t)];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ',';
      os << row[k].get_str();
    }
    os << '\n';
  }
}

void write_triangle_json(std::ostream& os, const config::NecklaceTriangle& tri) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : tri.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(std::move(r));
  }
  nlohmann::json doc;
  doc["tmax"] = tri.tmax;
  doc["rows"] = std::move(rows);
  os << doc.dump() << '\n';
}

config::NecklaceTriangle read_triangle_csv(std::istream& is) {
  config::NecklaceTriangle tri;
  tri.rows.push_back({BigInt(1)});
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto text = strip_cr(line);
    if (text.empty()) continue;
    std::vector<BigInt> row;
    for (auto cell : split(text, ',')) row.push_back(parse_bigint(cell, lineno));
    if (row.size() != tri.rows.size() + 1) {
      throw FormatError("row " + std::to_string(tri.rows.size()) + " should have " +
                            std::to_string(tri.rows.size() + 1) + " entries, found " + std::to_string(row.size()),
                        lineno);
    }
    tri.rows.push_back(std::move(row));
  }
  tri.tmax = static_cast<int>(tri.rows.size()) - 1;
  return tri;
}

config::NecklaceTriangle read_triangle_json(std::istream& is) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("tmax") || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw FormatError("expected an object with 'tmax' and 'rows'", 0);
  }
  config::NecklaceTriangle tri;
  tri.tmax = doc["tmax"].get<int>();
  for (const auto& r : doc["rows"]) {
    if (!r.is_array()) throw FormatError("row " + std::to_string(tri.rows.size()) + " is not an array", 0);
    std::vector<BigInt> row;
    for (const auto& v : r) {
      if (!v.is_string()) throw FormatError("row " + std::to_string(tri.rows.size()) + ": values must be strings", 0);
      row.push_back(parse_bigint(v.get<std::string>(), 0));
    }
    tri.rows.push_back(std::move(row));
  }
  if (static_cast<int>(tri.rows.size()) != tri.tmax + 1) throw FormatError("row count does not match tmax", 0);
  return tri;
}

void write_points_csv(std::ostream& os, const std::vector<PointRow>& rows) {
  os << kPointHeader << '\n';
  for (const auto& r : rows) {
    os << r.family << ',' << r.t << ',' << format_double(r.root_re) << ',' << format_double(r.root_im) << ','
       << optional_text(r.u) << ',' << optional_text(r.v) << ',' << optional_text(r.residual) << '\n';
  }
}

std::vector<PointRow> read_points_csv(std::istream& is) {
  std::vector<PointRow> rows;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++lineno;
    const auto text = strip_cr(line);
    if (text.empty()) continue;
    if (!header) {
      if (text != kPointHeader) throw FormatError("expected header '" + std::string(kPointHeader) + "'", lineno);
      header = true;
      continue;
    }
    const auto cells = split(text, ',');
    if (cells.size() != 7) {
      throw FormatError("expected 7 fields, found " + std::to_string(cells.size()), lineno);
    }
    PointRow r;
    r.family = std::string(cells[0]);
    if (r.family.empty()) throw FormatError("empty family", lineno);
    r.t = parse_int(cells[1], lineno);
    r.root_re = parse_double(cells[2], lineno);
    r.root_im = parse_double(cells[3], lineno);
    r.u = parse_optional(cells[4], lineno);
    r.v = parse_optional(cells[5], lineno);
    r.residual = parse_optional(cells[6], lineno);
    if (r.u.has_value() != r.v.has_value()) throw FormatError("u and v must be both present or both blank", lineno);
    rows.push_back(std::move(r));
  }
  if (!header) throw FormatError("missing header", 0);
  return rows;
}

std::vector<PointRow> necklace_rows(const std::vector<curve::PointRecord>& records) {
  std::vector<PointRow> rows;
  rows.reserve(records.size());
  for (const auto& rec : records) {
    PointRow r{"necklace", rec.t, rec.root.re, rec.root.im, {}, {}, {}};
    if (rec.point) {
      r.u = rec.point->u;
      r.v = rec.point->v;
      r.residual = rec.residual;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<PointRow> rowsum_rows(std::int64_t n, const std::vector<poly::ComplexPoint>& roots) {
  std::vector<PointRow> rows;
  rows.reserve(roots.size());
  for (const auto& z : roots) rows.push_back({"rowsum", n, z.re, z.im, {}, {}, {}});
  return rows;
}

void write_count_rows_csv(std::ostream& os, const std::vector<necklaces::CountRow>& rows) {
  os << "n,k,W_k\n";
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.values.size(); ++k) os << row.n << ',' << k << ',' << row.values[k].get_str() << '\n';
  }
}

void write_susy_csv(std::ostream& os, const necklaces::SusyClassification& c) {
  std::vector<const necklaces::NecklaceClass*> all;
  for (const auto& x : c.allowed) all.push_back(&x);
  for (const auto& x : c.forbidden) all.push_back(&x);
  std::sort(all.begin(), all.end(), [](auto* a, auto* b) { return a->representative < b->representative; });
  os << "representative,period,sign,verdict\n";
  for (const auto* x : all) {
    os << x->representative << ',' << x->period << ',' << (x->sign < 0 ? "-1" : "+1") << ','
       << (x->is_forbidden() ? "forbidden" : "allowed") << '\n';
  }
}

Window parse_window(std::string_view s) {
  const auto cells = split(s, ',');
  if (cells.size() != 4) throw std::invalid_argument("window must be xmin,xmax,ymin,ymax");
  Window w;
  try {
    w.xmin = parse_double(cells[0], 0);
    w.xmax = parse_double(cells[1], 0);
    w.ymin = parse_double(cells[2], 0);
    w.ymax = parse_double(cells[3], 0);
  } catch (const FormatError& e) {
    throw std::invalid_argument(std::string("window: ") + e.what());
  }
  if (!(w.xmin < w.xmax) || !(w.ymin < w.ymax)) throw std::invalid_argument("window: need xmin < xmax and ymin < ymax");
  return w;
}

namespace {

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

ScatterResult render_scatter(std::vector<std::pair<double, double>> points, const Window& w,
                             const ScatterOptions& opt) {
  constexpr double kWidth = 800.0, kHeight = 600.0;
  constexpr double kLeft = 70.0, kRight = 30.0, kTop = 40.0, kBottom = 60.0;
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - w.xmin) / (w.xmax - w.xmin) * pw; };
  auto sy = [&](double y) { return kTop + (w.ymax - y) / (w.ymax - w.ymin) * ph; };
  auto f = [](double x) { return format_fixed(x, 2); };

  std::erase_if(points, [&](const auto& p) { return !w.contains(p.first, p.second); });
  std::sort(points.begin(), points.end());

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" style=\"fill:#ffffff\"/>\n";
  os << "<rect x=\"" << f(kLeft) << "\" y=\"" << f(kTop) << "\" width=\"" << f(pw) << "\" height=\"" << f(ph)
     << "\" style=\"fill:none;stroke:#000000;stroke-width:1\"/>\n";
  if (w.xmin <= 0.0 && 0.0 <= w.xmax) {
    os << "<line x1=\"" << f(sx(0.0)) << "\" y1=\"" << f(kTop) << "\" x2=\"" << f(sx(0.0)) << "\" y2=\""
       << f(kTop + ph) << "\" style=\"stroke:#999999;stroke-width:0.5\"/>\n";
  }
  if (w.ymin <= 0.0 && 0.0 <= w.ymax) {
    os << "<line x1=\"" << f(kLeft) << "\" y1=\"" << f(sy(0.0)) << "\" x2=\"" << f(kLeft + pw) << "\" y2=\""
       << f(sy(0.0)) << "\" style=\"stroke:#999999;stroke-width:0.5\"/>\n";
  }
  const char* text_style = "style=\"font-family:monospace;font-size:12px;fill:#000000\"";
  for (int i = 0; i <= 4; ++i) {
    const double x = w.xmin + (w.xmax - w.xmin) * i / 4.0;
    const double y = w.ymin + (w.ymax - w.ymin) * i / 4.0;
    os << "<text x=\"" << f(sx(x)) << "\" y=\"" << f(kTop + ph + 18.0) << "\" text-anchor=\"middle\" " << text_style
       << ">" << format_fixed(x, 3) << "</text>\n";
    os << "<text x=\"" << f(kLeft - 6.0) << "\" y=\"" << f(sy(y) + 4.0) << "\" text-anchor=\"end\" " << text_style
       << ">" << format_fixed(y, 3) << "</text>\n";
  }
  os << "<text x=\"" << f(kLeft + pw / 2.0) << "\" y=\"" << f(kHeight - 15.0) << "\" text-anchor=\"middle\" "
     << text_style << ">" << escape_xml(opt.xlabel) << "</text>\n";
  os << "<text x=\"18\" y=\"" << f(kTop + ph / 2.0) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << f(kTop + ph / 2.0) << ")\" " << text_style << ">" << escape_xml(opt.ylabel) << "</text>\n";
  if (!opt.title.empty()) {
    os << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" " << text_style << ">" << escape_xml(opt.title)
       << "</text>\n";
  }
  os << "<g style=\"fill:#1f4e9c;stroke:none\">\n";
  for (const auto& [x, y] : points) os << "<circle cx=\"" << f(sx(x)) << "\" cy=\"" << f(sy(y)) << "\" r=\"2\"/>\n";
  os << "</g>\n</svg>\n";
  return {os.str(), points.size()};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for '" + path.string() + "'");
  return s;
}

}  // namespace bracelet::io
