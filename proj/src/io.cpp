#include "ipd/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "ipd/error.hpp"

namespace ipd {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

template <typename T>
T field(const json &j, const char *name) {
  if (!j.is_object() || !j.contains(name))
    throw Error(ErrorCode::MalformedInput, std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception &e) {
    throw Error(ErrorCode::MalformedInput, std::string("field '") + name + "': " + e.what());
  }
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

} // namespace

std::string poset_to_json(const IntervalPoset &P) {
  nlohmann::ordered_json out;
  out["n"] = P.n();
  out["intervals"] = nlohmann::ordered_json::array();
  for (const auto &iv : P.intervals())
    out["intervals"].push_back({iv.lo, iv.hi});
  return out.dump() + "\n";
}

IntervalPoset poset_from_json(std::string_view text) {
  const auto j = parse(text);
  const int n = field<int>(j, "n");
  std::vector<Interval> ivs;
  for (const auto &pair : field<std::vector<std::vector<int>>>(j, "intervals")) {
    if (pair.size() != 2)
      throw Error(ErrorCode::MalformedInput, "interval must be [lo, hi]");
    ivs.push_back({pair[0], pair[1]});
  }
  return IntervalPoset(n, std::move(ivs));
}

std::string dissection_to_json(const Dissection &D) {
  nlohmann::ordered_json out;
  out["m"] = D.m();
  out["diagonals"] = nlohmann::ordered_json::array();
  for (const auto &d : D.diagonals())
    out["diagonals"].push_back({d.i, d.j});
  return out.dump() + "\n";
}

Dissection dissection_from_json(std::string_view text) {
  const auto j = parse(text);
  const int m = field<int>(j, "m");
  std::vector<Diagonal> ds;
  for (const auto &pair : field<std::vector<std::vector<int>>>(j, "diagonals")) {
    if (pair.size() != 2)
      throw Error(ErrorCode::MalformedInput, "diagonal must be [i, j]");
    ds.push_back({pair[0], pair[1]});
  }
  return Dissection(m, std::move(ds));
}

std::string render_svg(const Dissection &D) {
  constexpr double size = 512.0;
  constexpr double centre = size / 2;
  constexpr double radius = 200.0;
  constexpr double label_radius = 228.0;
  const int m = D.m();

  auto point = [&](int k, double r) {
    const double deg = 90.0 - 360.0 * (k - 1) / m;
    const double rad = deg * std::numbers::pi / 180.0;
    return std::make_pair(centre + r * std::cos(rad), centre - r * std::sin(rad));
  };
  auto line = [&](std::ostringstream &os, int a, int b, const char *cls) {
    const auto [x1, y1] = point(a, radius);
    const auto [x2, y2] = point(b, radius);
    os << "  <line class=\"" << cls << "\" x1=\"" << fixed(x1) << "\" y1=\"" << fixed(y1)
       << "\" x2=\"" << fixed(x2) << "\" y2=\"" << fixed(y2) << "\"/>\n";
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
        "viewBox=\"0 0 512 512\">\n";
  os << "  <style>.outer{stroke:#000;stroke-width:2}"
        ".diagonal{stroke:#c0392b;stroke-width:2;stroke-dasharray:6 3}"
        ".vertex{fill:#000}.label{font:14px sans-serif;text-anchor:middle;"
        "dominant-baseline:middle}</style>\n";
  for (int k = 1; k < m; ++k)
    line(os, k, k + 1, "outer");
  if (m >= 3)
    line(os, 1, m, "outer");
  for (const auto &d : D.diagonals())
    line(os, d.i, d.j, "diagonal");
  for (int k = 1; k <= m; ++k) {
    const auto [x, y] = point(k, radius);
    const auto [lx, ly] = point(k, label_radius);
    os << "  <circle class=\"vertex\" cx=\"" << fixed(x) << "\" cy=\"" << fixed(y)
       << "\" r=\"4\"/>\n";
    os << "  <text class=\"label\" x=\"" << fixed(lx) << "\" y=\"" << fixed(ly) << "\">" << k
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::MalformedInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(contents.data(), static_cast<std::streamsize>(contents.size())))
    throw std::runtime_error("cannot write " + path);
}

} // namespace ipd
