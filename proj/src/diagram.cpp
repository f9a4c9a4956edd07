#include "contact_census/diagram.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "contact_census/error.hpp"
#include "contact_census/serialize.hpp"

namespace contact_census {

namespace {

constexpr int kCanvas = 400;
constexpr int kCenter = 200;
constexpr int kRadius = 180;

const char* const kSvgOpen =
    "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\"";

// Prints hundredths as a fixed two-decimal number.
std::string hundredths(long long h) {
  std::string sign = h < 0 ? "-" : "";
  long long a = h < 0 ? -h : h;
  std::string frac = std::to_string(a % 100);
  if (frac.size() < 2) frac = "0" + frac;
  return sign + std::to_string(a / 100) + "." + frac;
}

std::string fixed(double v) { return hundredths(std::llround(v * 100.0)); }

// round(num / den) for den > 0, halves away from zero.
long long round_div(__int128 num, __int128 den) {
  __int128 q = (2 * (num < 0 ? -num : num) + den) / (2 * den);
  return static_cast<long long>(num < 0 ? -q : q);
}

struct Vec {
  std::int64_t q;
  std::int64_t p;
};

// Exact position of a slope on the unit circle: the doubled angle of (q, p).
struct Placement {
  __int128 x;  // over d
  __int128 y;
  __int128 d;
};

Placement place(Vec v) {
  __int128 q = v.q, p = v.p;
  return {q * q - p * p, 2 * p * q, q * q + p * p};
}

std::string px(const Placement& pl, std::int64_t scale_hundredths) {
  long long hx = round_div(static_cast<__int128>(kCenter) * 100 * pl.d + scale_hundredths * pl.x, pl.d);
  long long hy = round_div(static_cast<__int128>(kCenter) * 100 * pl.d - scale_hundredths * pl.y, pl.d);
  return hundredths(hx) + " " + hundredths(hy);
}

std::vector<Vec> farey_vectors(int depth) {
  if (depth < 0 || depth > 10) fail(ErrorCode::InvalidArgument, "farey depth must be in [0, 10]");
  std::vector<Vec> ring{{1, 0}, {0, 1}, {-1, 0}};
  for (int level = 0; level < depth; ++level) {
    std::vector<Vec> next;
    for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
      next.push_back(ring[i]);
      next.push_back({ring[i].q + ring[i + 1].q, ring[i].p + ring[i + 1].p});
    }
    next.push_back(ring.back());
    ring = std::move(next);
  }
  ring.pop_back();  // (-1, 0) is slope 0 again
  return ring;
}

Slope slope_of(Vec v) { return Slope(v.p, v.q); }

struct FareyEdge {
  Vec a;
  Vec b;
};

std::vector<FareyEdge> farey_edge_vectors(int depth) {
  std::vector<Vec> ring = farey_vectors(depth);
  std::vector<FareyEdge> edges;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    for (std::size_t j = i + 1; j < ring.size(); ++j) {
      __int128 dt = static_cast<__int128>(ring[i].q) * ring[j].p - static_cast<__int128>(ring[i].p) * ring[j].q;
      if (dt == 1 || dt == -1) edges.push_back({ring[i], ring[j]});
    }
  }
  return edges;
}

std::string svg_header(const std::string& title) {
  return std::string(kSvgOpen) + ">\n<title>" + title + "</title>\n" +
         "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
}

struct Point {
  double x;
  double y;
};

Point polar(double r, double theta) {
  return {kCenter + r * std::cos(theta), kCenter - r * std::sin(theta)};
}

std::string pt(Point p) { return fixed(p.x) + " " + fixed(p.y); }

// Catmull-Rom through the samples, written as cubic Bezier segments.
std::string spline(const std::vector<Point>& s) {
  std::string d = "M " + pt(s.front());
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    Point p0 = s[i == 0 ? 0 : i - 1], p1 = s[i], p2 = s[i + 1], p3 = s[i + 2 < s.size() ? i + 2 : i + 1];
    Point c1{p1.x + (p2.x - p0.x) / 6.0, p1.y + (p2.y - p0.y) / 6.0};
    Point c2{p2.x - (p3.x - p1.x) / 6.0, p2.y - (p3.y - p1.y) / 6.0};
    d += " C " + pt(c1) + " " + pt(c2) + " " + pt(p2);
  }
  return d;
}

}  // namespace

std::vector<Slope> farey_vertices(int depth) {
  std::vector<Slope> out;
  for (Vec v : farey_vectors(depth)) out.push_back(slope_of(v));
  return out;
}

std::vector<std::pair<Slope, Slope>> farey_edges(int depth) {
  std::vector<std::pair<Slope, Slope>> out;
  for (const FareyEdge& e : farey_edge_vectors(depth)) out.emplace_back(slope_of(e.a), slope_of(e.b));
  return out;
}

std::string empty_svg() { return std::string(kSvgOpen) + "/>\n"; }

std::string farey_svg(int depth) {
  std::vector<Vec> ring = farey_vectors(depth);
  std::ostringstream os;
  os << svg_header("Farey tessellation, depth " + std::to_string(depth));
  os << "<circle cx=\"200\" cy=\"200\" r=\"180\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "<g fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.8\">\n";
  for (const FareyEdge& e : farey_edge_vectors(depth)) {
    Placement u = place(e.a), v = place(e.b);
    __int128 cross = u.x * v.y - u.y * v.x;
    __int128 denom = u.d * v.d + u.x * v.x + u.y * v.y;
    os << "<path d=\"M " << px(u, kRadius * 100);
    if (denom == 0) {
      os << " L " << px(v, kRadius * 100);
    } else {
      std::string r = hundredths(round_div(static_cast<__int128>(kRadius) * 100 * (cross < 0 ? -cross : cross), denom));
      os << " A " << r << " " << r << " 0 0 " << (cross > 0 ? 1 : 0) << " " << px(v, kRadius * 100);
    }
    os << "\"/>\n";
  }
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"8\" text-anchor=\"middle\">\n";
  for (Vec v : ring) {
    Placement pl = place(v);
    auto split = [](const std::string& xy) {
      auto sp = xy.find(' ');
      return std::pair{xy.substr(0, sp), xy.substr(sp + 1)};
    };
    auto [dx, dy] = split(px(pl, kRadius * 100));
    auto [lx, ly] = split(px(pl, kRadius * 108));
    os << "<circle cx=\"" << dx << "\" cy=\"" << dy << "\" r=\"1.5\"/>\n";
    os << "<text x=\"" << lx << "\" y=\"" << ly << "\" dy=\"3\">" << slope_of(v).str() << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string farey_dot(int depth) {
  std::ostringstream os;
  os << "graph farey {\n  node [shape=plaintext];\n";
  for (const Slope& s : farey_vertices(depth)) os << "  \"" << s.str() << "\";\n";
  for (const auto& [a, b] : farey_edges(depth)) os << "  \"" << a.str() << "\" -- \"" << b.str() << "\";\n";
  os << "}\n";
  return os.str();
}

std::string disk_svg(const DiskConfig& c) {
  const int n = 2 * c.t;
  auto angle = [&](int i) { return std::numbers::pi / 2 - 2 * std::numbers::pi * i / n; };
  std::ostringstream os;
  os << svg_header("Disk chord diagram, t = " + std::to_string(c.t));
  os << "<circle cx=\"200\" cy=\"200\" r=\"180\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "<g fill=\"none\" stroke=\"#b22222\" stroke-width=\"2\">\n";
  for (auto [i, j] : c.arcs) {
    double sep = std::fabs(angle(i) - angle(j));
    if (sep > std::numbers::pi) sep = 2 * std::numbers::pi - sep;
    double k = kRadius * (1.0 - sep / std::numbers::pi);
    os << "<path d=\"M " << pt(polar(kRadius, angle(i))) << " C " << pt(polar(k, angle(i))) << " "
       << pt(polar(k, angle(j))) << " " << pt(polar(kRadius, angle(j))) << "\"/>\n";
  }
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (int i = 0; i < n; ++i) {
    Point m = polar(kRadius, angle(i)), l = polar(kRadius + 12, angle(i));
    os << "<circle cx=\"" << fixed(m.x) << "\" cy=\"" << fixed(m.y) << "\" r=\"3\"/>\n";
    os << "<text x=\"" << fixed(l.x) << "\" y=\"" << fixed(l.y) << "\" dy=\"3\">" << i << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string disk_dot(const DiskConfig& c) {
  std::ostringstream os;
  os << "graph disk {\n  layout=circo;\n";
  for (int i = 0; i < 2 * c.t; ++i) os << "  p" << i << ";\n";
  for (auto [i, j] : c.arcs) os << "  p" << i << " -- p" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string annulus_svg(const AnnulusConfig& c) {
  const double r_in = 70, r_out = 170;
  auto theta = [&](Endpoint e) {
    return 2 * std::numbers::pi * (e.index + 0.5) / c.markings(e.side);
  };
  auto radius = [&](Side s) { return s == Side::Inner ? r_in : r_out; };
  std::ostringstream os;
  os << svg_header("Annulus configuration, " + std::to_string(c.inner_markings()) + " inner and " +
                   std::to_string(c.outer_markings()) + " outer markings");
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  os << "<circle cx=\"200\" cy=\"200\" r=\"70\"/>\n<circle cx=\"200\" cy=\"200\" r=\"170\"/>\n</g>\n";
  os << "<g fill=\"none\" stroke=\"#b22222\" stroke-width=\"2\">\n";
  constexpr int kSamples = 24;
  for (const Arc& a : c.arcs()) {
    double t0 = theta(a.a), t1 = theta(a.b) + 2 * std::numbers::pi * static_cast<double>(a.winding);
    std::vector<Point> samples;
    for (int s = 0; s <= kSamples; ++s) {
      double u = static_cast<double>(s) / kSamples;
      double r;
      if (a.crossing()) {
        r = r_in + (r_out - r_in) * u;
      } else {
        double depth = std::min(0.45, std::fabs(t1 - t0) / (2 * std::numbers::pi)) * (r_out - r_in);
        double dir = a.a.side == Side::Inner ? 1.0 : -1.0;
        r = radius(a.a.side) + dir * depth * std::sin(std::numbers::pi * u);
      }
      samples.push_back(polar(r, t0 + (t1 - t0) * u));
    }
    os << "<path d=\"" << spline(samples) << "\"/>\n";
  }
  os << "</g>\n<g>\n";
  for (Side s : {Side::Inner, Side::Outer}) {
    for (int i = 0; i < c.markings(s); ++i) {
      Point m = polar(radius(s), theta({s, i}));
      os << "<circle cx=\"" << fixed(m.x) << "\" cy=\"" << fixed(m.y) << "\" r=\"3\"/>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string annulus_dot(const AnnulusConfig& c) {
  std::ostringstream os;
  auto name = [](Endpoint e) { return (e.side == Side::Inner ? "i" : "o") + std::to_string(e.index); };
  os << "graph annulus {\n";
  for (Side s : {Side::Inner, Side::Outer}) {
    for (int i = 0; i < c.markings(s); ++i) os << "  " << name({s, i}) << ";\n";
  }
  for (const Arc& a : c.arcs())
    os << "  " << name(a.a) << " -- " << name(a.b) << " [label=\"" << a.winding << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string emit_diagram(const std::string& kind, const std::string& payload, DiagramFormat format) {
  if (kind != "farey" && kind != "chord") fail(ErrorCode::InvalidArgument, "unsupported diagram kind '" + kind + "'");
  bool blank = payload.find_first_not_of(" \t\r\n") == std::string::npos;
  Json j = blank ? Json(nullptr) : parse_json(payload);
  if (j.is_null() || (j.is_object() && j.empty()))
    return format == DiagramFormat::Svg ? empty_svg() : std::string("graph empty {\n}\n");
  if (!j.is_object()) fail(ErrorCode::Parse, "diagram payload must be a JSON object");
  if (kind == "farey") {
    auto it = j.find("depth");
    if (it == j.end() || !it->is_number_integer()) fail(ErrorCode::Parse, "farey payload needs an integer depth");
    int depth = it->get<int>();
    return format == DiagramFormat::Svg ? farey_svg(depth) : farey_dot(depth);
  }
  if (j.contains("t")) {
    DiskConfig c = disk_from_json(j);
    return format == DiagramFormat::Svg ? disk_svg(c) : disk_dot(c);
  }
  if (j.contains("inner")) {
    AnnulusConfig c = annulus_from_json(j);
    return format == DiagramFormat::Svg ? annulus_svg(c) : annulus_dot(c);
  }
  fail(ErrorCode::InvalidArgument, "chord payload must be a disk {\"t\", \"arcs\"} or annulus {\"inner\", \"outer\", \"arcs\"}");
}

}  // namespace contact_census
