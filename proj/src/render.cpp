#include "relay/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace relay {

namespace {

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#b07aa1", "#76b7b2",
                                "#edc948", "#9c755f", "#ff9da7", "#bab0ac", "#e15759"};

const char* relay_fill(Color c) {
  switch (c) {
    case Color::red: return "#d62728";
    case Color::green: return "#2ca02c";
    case Color::yellow: return "#e6b800";
    case Color::plain: return "#555555";
  }
  return "#555555";
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain; collinear points dropped.
std::vector<Point> hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

std::string render_svg(const Instance& inst, const RelaySet* relays, const RenderOptions& opts) {
  double x0 = inst.sensors.empty() ? 0.0 : inst.sensors[0].x;
  double y0 = inst.sensors.empty() ? 0.0 : inst.sensors[0].y;
  double x1 = x0;
  double y1 = y0;
  auto grow = [&](Point p) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  };
  for (const Point& p : inst.sensors) grow(p);
  if (relays) {
    for (const ColoredPoint& cp : relays->points) grow(cp.p);
    for (const Chain& c : relays->chains) {
      grow(c.a);
      grow(c.b);
    }
  }
  const double pad = 1.5;
  x0 -= pad;
  y0 -= pad;
  x1 += pad;
  y1 += pad;
  const double s = opts.scale;
  auto sx = [&](double x) { return num((x - x0) * s); };
  auto sy = [&](double y) { return num((y1 - y) * s); };

  const Decomposition dec = build_decomposition(inst);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num((x1 - x0) * s) << ' '
     << num((y1 - y0) * s) << "\" width=\"" << num((x1 - x0) * s) << "\" height=\""
     << num((y1 - y0) * s) << "\">\n";
  os << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (opts.disks) {
    os << "<g class=\"disks\" fill-opacity=\"0.15\" stroke-opacity=\"0.4\">\n";
    for (std::size_t i = 0; i < inst.sensors.size(); ++i) {
      const char* col = kPalette[dec.blob_of[i] % std::size(kPalette)];
      os << "<circle class=\"disk\" cx=\"" << sx(inst.sensors[i].x) << "\" cy=\""
         << sy(inst.sensors[i].y) << "\" r=\"" << num(s) << "\" fill=\"" << col
         << "\" stroke=\"" << col << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (opts.hulls) {
    auto polygon = [&](const std::vector<int>& ids, const char* cls, const char* col,
                       const char* dash) {
      std::vector<Point> pts;
      for (int i : ids) pts.push_back(inst.sensors[i]);
      const std::vector<Point> h = hull(pts);
      if (h.size() < 2) return;
      os << "<polygon class=\"" << cls << "\" points=\"";
      for (std::size_t k = 0; k < h.size(); ++k) {
        os << (k ? " " : "") << sx(h[k].x) << ',' << sy(h[k].y);
      }
      os << "\" fill=\"none\" stroke=\"" << col << "\" stroke-width=\"2\"" << dash << "/>\n";
    };
    os << "<g class=\"hulls\">\n";
    for (int c = 0; c < dec.cloud_count(); ++c) {
      polygon(dec.sensors_in_cloud[c], "cloud-hull", "#888888", " stroke-dasharray=\"6 4\"");
    }
    for (int b = 0; b < dec.blob_count(); ++b) {
      polygon(dec.sensors_in_blob[b], "blob-hull", kPalette[b % std::size(kPalette)], "");
    }
    os << "</g>\n";
  }

  if (relays) {
    os << "<g class=\"chains\" stroke-width=\"2\">\n";
    for (const Chain& c : relays->chains) {
      os << "<line class=\"chain\" x1=\"" << sx(c.a.x) << "\" y1=\"" << sy(c.a.y) << "\" x2=\""
         << sx(c.b.x) << "\" y2=\"" << sy(c.b.y) << "\" stroke=\"" << relay_fill(c.color)
         << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<g class=\"sensors\">\n";
  for (const Point& p : inst.sensors) {
    os << "<circle class=\"sensor\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
       << "\" r=\"3\" fill=\"black\"/>\n";
  }
  os << "</g>\n";

  if (relays) {
    os << "<g class=\"relays\">\n";
    for (const ColoredPoint& cp : relays->points) {
      os << "<circle class=\"relay relay-" << color_name(cp.color) << "\" cx=\"" << sx(cp.p.x)
         << "\" cy=\"" << sy(cp.p.y) << "\" r=\"5\" fill=\"" << relay_fill(cp.color)
         << "\" stroke=\"black\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace relay
