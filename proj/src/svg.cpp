#include "toricdef/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

namespace toricdef {

namespace {

constexpr double kUnit = 60.0;

std::string num(double x) {
  if (std::abs(x) < 5e-4) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

struct Box {
  double x0, x1, y0, y1;
  bool contains(double x, double y) const {
    const double eps = 1e-9;
    return x >= x0 - eps && x <= x1 + eps && y >= y0 - eps && y <= y1 + eps;
  }
};

// Segment of {a x + b y = c} inside the box, if any.
std::optional<std::pair<std::array<double, 2>, std::array<double, 2>>> clip_line(double a, double b, double c,
                                                                                const Box& box) {
  std::vector<std::array<double, 2>> hits;
  auto add = [&](double x, double y) {
    if (!box.contains(x, y)) return;
    for (const auto& h : hits)
      if (std::abs(h[0] - x) < 1e-9 && std::abs(h[1] - y) < 1e-9) return;
    hits.push_back({x, y});
  };
  if (b != 0) {
    add(box.x0, (c - a * box.x0) / b);
    add(box.x1, (c - a * box.x1) / b);
  }
  if (a != 0) {
    add((c - b * box.y0) / a, box.y0);
    add((c - b * box.y1) / a, box.y1);
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  return std::make_pair(hits.front(), hits.back());
}

std::string header(double x, double y, double w, double h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
         num(x) + " " + num(y) + " " + num(w) + " " + num(h) + "\">\n";
}

}  // namespace

std::string fan_svg(const Fan& fan, const std::optional<Weight>& degree) {
  if (fan.dim() != 2) throw Error(ErrorCode::NotDim2, "only surface fans can be drawn");
  const SurfaceFan surface = order_surface(fan);
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const auto& v : fan.rays()) {
    x0 = std::min(x0, v(0).convert_to<double>());
    x1 = std::max(x1, v(0).convert_to<double>());
    y0 = std::min(y0, v(1).convert_to<double>());
    y1 = std::max(y1, v(1).convert_to<double>());
  }
  const double mx = 0.1 * (x1 - x0), my = 0.1 * (y1 - y0);
  const Box box{x0 - mx, x1 + mx, y0 - my, y1 + my};

  std::ostringstream out;
  // lattice units scaled by kUnit, y axis pointing up
  out << header(box.x0 * kUnit, -box.y1 * kUnit, (box.x1 - box.x0) * kUnit, (box.y1 - box.y0) * kUnit);
  out << "<defs><marker id=\"tip\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/></marker></defs>\n";
  out << "<g id=\"lattice\" fill=\"#bbbbbb\">\n";
  for (long x = static_cast<long>(std::ceil(box.x0)); x <= static_cast<long>(std::floor(box.x1)); ++x)
    for (long y = static_cast<long>(std::ceil(box.y0)); y <= static_cast<long>(std::floor(box.y1)); ++y)
      out << "<circle cx=\"" << num(x * kUnit) << "\" cy=\"" << num(-y * kUnit) << "\" r=\"2\"/>\n";
  out << "</g>\n";

  if (degree) {
    if (degree->size() != 2) throw Error(ErrorCode::InvalidArgument, "degree must have length 2");
    const double a = (*degree)(0).convert_to<double>(), b = (*degree)(1).convert_to<double>();
    if (auto seg = clip_line(a, b, -1.0, box)) {
      out << "<line id=\"degree\" x1=\"" << num(seg->first[0] * kUnit) << "\" y1=\"" << num(-seg->first[1] * kUnit)
          << "\" x2=\"" << num(seg->second[0] * kUnit) << "\" y2=\"" << num(-seg->second[1] * kUnit)
          << "\" stroke=\"gray\" stroke-width=\"2\" stroke-dasharray=\"8,6\"/>\n";
    }
  }

  out << "<g id=\"rays\" stroke=\"black\" stroke-width=\"2\">\n";
  for (std::size_t k = 0; k < surface.size(); ++k) {
    const LatticeVector& v = surface.ray(static_cast<long>(k));
    const double x = v(0).convert_to<double>(), y = v(1).convert_to<double>();
    out << "<line x1=\"0.00\" y1=\"0.00\" x2=\"" << num(x * kUnit) << "\" y2=\"" << num(-y * kUnit)
        << "\" marker-end=\"url(#tip)\"/>\n";
  }
  out << "</g>\n<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t k = 0; k < surface.size(); ++k) {
    const LatticeVector& v = surface.ray(static_cast<long>(k));
    const double x = v(0).convert_to<double>(), y = v(1).convert_to<double>();
    out << "<text x=\"" << num(x * kUnit + 4) << "\" y=\"" << num(-y * kUnit - 4) << "\">" << surface.source_index(k) + 1
        << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string slice_svg(const Slice& slice, const std::optional<Decomposition>& d) {
  struct Row {
    std::string label;
    std::vector<Interval> pieces;
  };
  std::vector<Row> rows{{"slice", slice.segments}};
  if (d) {
    rows.push_back({"at 0", d->tilde0});
    rows.push_back({"at t", d->tildet});
  }
  std::set<Rational> marks;
  for (const auto& row : rows)
    for (const auto& p : row.pieces) {
      if (p.lo) marks.insert(*p.lo);
      if (p.hi) marks.insert(*p.hi);
    }
  const double lo = to_double(*marks.begin()) - 1.0, hi = to_double(*marks.rbegin()) + 1.0;
  const double left = 70, width = 520, row_height = 60;
  auto px = [&](double x) { return left + (x - lo) / (hi - lo) * width; };
  const double total_height = row_height * static_cast<double>(rows.size()) + 20;

  std::ostringstream out;
  out << header(0, 0, left + width + 20, total_height);
  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  const char* colors[] = {"#1f77b4", "#d62728"};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double y = row_height * static_cast<double>(r) + 35;
    out << "<text x=\"5\" y=\"" << num(y + 4) << "\">" << rows[r].label << "</text>\n";
    out << "<line x1=\"" << num(left) << "\" y1=\"" << num(y) << "\" x2=\"" << num(left + width) << "\" y2=\"" << num(y)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (std::size_t i = 0; i < rows[r].pieces.size(); ++i) {
      const Interval& p = rows[r].pieces[i];
      const double a = p.lo ? px(to_double(*p.lo)) : left;
      const double b = p.hi ? px(to_double(*p.hi)) : left + width;
      const char* color = colors[i % 2];
      if (p.is_point()) {
        out << "<circle cx=\"" << num(a) << "\" cy=\"" << num(y) << "\" r=\"4\" fill=\"" << color << "\"/>\n";
      } else {
        const double offset = (i % 2 ? 3.0 : -3.0);
        out << "<line x1=\"" << num(a) << "\" y1=\"" << num(y + offset) << "\" x2=\"" << num(b) << "\" y2=\""
            << num(y + offset) << "\" stroke=\"" << color << "\" stroke-width=\"3\"/>\n";
      }
    }
    std::set<Rational> row_marks;
    for (const auto& p : rows[r].pieces) {
      if (p.lo) row_marks.insert(*p.lo);
      if (p.hi) row_marks.insert(*p.hi);
    }
    for (const auto& m : row_marks) {
      const double x = px(to_double(m));
      out << "<line x1=\"" << num(x) << "\" y1=\"" << num(y - 8) << "\" x2=\"" << num(x) << "\" y2=\"" << num(y + 8)
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
      out << "<text x=\"" << num(x) << "\" y=\"" << num(y + 22) << "\" text-anchor=\"middle\">" << to_string(m)
          << "</text>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace toricdef
