#include "kstab/svg_render.hpp"

#include <algorithm>
#include <sstream>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

// Exact fixed-point rendering: round(1000 x) via integer arithmetic, printed
// as a decimal with three fractional digits.
std::string fixed3(const Rat& x) {
  Int scaled_num = x.get_num() * 2000 + x.get_den();
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), Int(x.get_den() * 2).get_mpz_t());
  bool negative = q < 0;
  if (negative) q = -q;
  Int whole = q / 1000, frac = q % 1000;
  std::string fs = frac.get_str();
  while (fs.size() < 3) fs = "0" + fs;
  return (negative ? "-" : "") + whole.get_str() + "." + fs;
}

constexpr int kWidth = 640, kHeight = 480, kMargin = 60;

struct Mapper {
  Rat min_x, max_x, min_y, max_y;

  Rat span_x() const { return max_x > min_x ? max_x - min_x : Rat(1); }
  Rat span_y() const { return max_y > min_y ? max_y - min_y : Rat(1); }
  Rat px(const Rat& x) const {
    return Rat(kMargin) + (x - min_x) / span_x() * (kWidth - 2 * kMargin);
  }
  // SVG y grows downward.
  Rat py(const Rat& y) const {
    return Rat(kHeight - kMargin) - (y - min_y) / span_y() * (kHeight - 2 * kMargin);
  }
};

std::string header() {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
    << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
    << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  return o.str();
}

// Counterclockwise boundary order around the centroid, decided exactly:
// half-plane index first (above/below the centroid), then cross products.
std::vector<QVec> boundary_order(const std::vector<QVec>& vertices) {
  QVec c(2, Rat(0));
  for (const auto& v : vertices) {
    c[0] += v[0];
    c[1] += v[1];
  }
  c[0] /= static_cast<long>(vertices.size());
  c[1] /= static_cast<long>(vertices.size());
  auto half = [&](const QVec& v) {
    Rat dx = v[0] - c[0], dy = v[1] - c[1];
    if (dy > 0 || (dy == 0 && dx > 0)) return 0;
    return 1;
  };
  std::vector<QVec> out = vertices;
  std::sort(out.begin(), out.end(), [&](const QVec& a, const QVec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rat cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    if (cross != 0) return cross > 0;
    return lex_less(a, b);
  });
  return out;
}

}  // namespace

std::string svg_polytope(const QPolytope& p) {
  std::ostringstream o;
  o << header();
  if (p.empty()) {
    o << "<text x=\"60\" y=\"60\" font-family=\"monospace\" font-size=\"16\">empty "
         "polytope</text>\n</svg>\n";
    return o.str();
  }
  if (!p.rays.empty()) throw InputError("SVG rendering supports bounded polytopes only");
  std::size_t ambient = p.vertices[0].size();

  if (ambient == 1) {
    Mapper m;
    m.min_x = m.max_x = p.vertices.front()[0];
    for (const auto& v : p.vertices) {
      m.min_x = std::min(m.min_x, v[0]);
      m.max_x = std::max(m.max_x, v[0]);
    }
    m.min_y = 0;
    m.max_y = 1;
    std::string y = fixed3(Rat(kHeight) / 2);
    o << "<line x1=\"" << kMargin << "\" y1=\"" << y << "\" x2=\"" << kWidth - kMargin
      << "\" y2=\"" << y << "\" stroke=\"#1f4e79\" stroke-width=\"4\"/>\n";
    for (const auto& v : p.vertices) {
      std::string x = fixed3(m.px(v[0]));
      o << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"6\" fill=\"#1f4e79\"/>\n";
      o << "<text x=\"" << x << "\" y=\"" << fixed3(Rat(kHeight) / 2 - 16)
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">"
        << rat_str(v[0]) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
  }

  if (ambient != 2) throw InputError("SVG rendering supports ambient dimension 1 or 2");
  Mapper m;
  m.min_x = m.max_x = p.vertices.front()[0];
  m.min_y = m.max_y = p.vertices.front()[1];
  for (const auto& v : p.vertices) {
    m.min_x = std::min(m.min_x, v[0]);
    m.max_x = std::max(m.max_x, v[0]);
    m.min_y = std::min(m.min_y, v[1]);
    m.max_y = std::max(m.max_y, v[1]);
  }
  auto ordered = boundary_order(p.vertices);
  o << "<polygon points=\"";
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (i) o << " ";
    o << fixed3(m.px(ordered[i][0])) << "," << fixed3(m.py(ordered[i][1]));
  }
  o << "\" fill=\"#dbeafe\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  for (const auto& v : ordered) {
    std::string x = fixed3(m.px(v[0])), y = fixed3(m.py(v[1]));
    o << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"#1f4e79\"/>\n";
    o << "<text x=\"" << x << "\" y=\"" << fixed3(m.py(v[1]) - 10)
      << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">("
      << rat_str(v[0]) << ", " << rat_str(v[1]) << ")</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string svg_chambers(const VGITChambers& c) {
  if (c.degrees.size() != 2) throw InputError("chamber SVG rendering supports k = 2 only");
  std::ostringstream o;
  o << header();
  // The simplex {gamma >= 0, gamma_1 + gamma_2 = 1} drawn along gamma_1.
  Mapper m;
  m.min_x = 0;
  m.max_x = 1;
  m.min_y = 0;
  m.max_y = 1;
  std::string y = fixed3(Rat(kHeight) / 2);
  o << "<line x1=\"" << kMargin << "\" y1=\"" << y << "\" x2=\"" << kWidth - kMargin
    << "\" y2=\"" << y << "\" stroke=\"#444444\" stroke-width=\"3\"/>\n";
  for (int endpoint = 0; endpoint <= 1; ++endpoint) {
    std::string x = fixed3(m.px(Rat(endpoint)));
    o << "<line x1=\"" << x << "\" y1=\"" << fixed3(Rat(kHeight) / 2 - 10) << "\" x2=\"" << x
      << "\" y2=\"" << fixed3(Rat(kHeight) / 2 + 10) << "\" stroke=\"#444444\" "
      << "stroke-width=\"2\"/>\n";
    o << "<text x=\"" << x << "\" y=\"" << fixed3(Rat(kHeight) / 2 + 32)
      << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">gamma1="
      << endpoint << "</text>\n";
  }
  for (const auto& w : c.walls) {
    // a g1 + b g2 = 0 with g2 = 1 - g1  =>  g1 = b / (b - a).
    const Rat& a = w.hyperplane.normal[0];
    const Rat& b = w.hyperplane.normal[1];
    Rat g1 = b / (b - a);
    std::string x = fixed3(m.px(g1));
    o << "<line x1=\"" << x << "\" y1=\"" << fixed3(Rat(kHeight) / 2 - 24) << "\" x2=\"" << x
      << "\" y2=\"" << fixed3(Rat(kHeight) / 2 + 24) << "\" stroke=\"#b91c1c\" "
      << "stroke-width=\"3\"/>\n";
    o << "<text x=\"" << x << "\" y=\"" << fixed3(Rat(kHeight) / 2 - 34)
      << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">wall gamma1="
      << rat_str(g1) << "</text>\n";
  }
  int chamber_index = 0;
  for (const auto& cell : c.arrangement.cells) {
    if (!cell.is_chamber) continue;
    ++chamber_index;
    std::string x = fixed3(m.px(cell.representative[0]));
    o << "<text x=\"" << x << "\" y=\"" << fixed3(Rat(kHeight) / 2 + 60)
      << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">C"
      << chamber_index << ": (" << rat_str(cell.representative[0]) << ", "
      << rat_str(cell.representative[1]) << ")</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace kstab
