#include "colorembed/colorspace.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <limits>

#include "colorembed/error.hpp"

namespace colorembed {

namespace {

// sRGB primaries to XYZ (D65).
constexpr double kRgbToXyz[3][3] = {
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
};

using Mat3 = std::array<Vec3, 3>;

Vec3 mul(const Mat3& m, const Vec3& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

Mat3 forward_matrix() {
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = kRgbToXyz[r][c];
  return m;
}

Mat3 inverse(const Mat3& m) {
  // rows of the inverse are the cross products of columns, transposed
  const Vec3 c0{m[0][0], m[1][0], m[2][0]};
  const Vec3 c1{m[0][1], m[1][1], m[2][1]};
  const Vec3 c2{m[0][2], m[1][2], m[2][2]};
  const double det = dot(c0, cross(c1, c2));
  Mat3 inv{cross(c1, c2), cross(c2, c0), cross(c0, c1)};
  for (auto& row : inv) row = (1.0 / det) * row;
  return inv;
}

const Mat3& rgb_to_xyz() {
  static const Mat3 m = forward_matrix();
  return m;
}

const Mat3& xyz_to_rgb() {
  static const Mat3 m = inverse(rgb_to_xyz());
  return m;
}

// Reference white is the image of linear (1,1,1), so white maps to a = b = 0 exactly.
const Vec3& white_point() {
  static const Vec3 w = mul(rgb_to_xyz(), {1.0, 1.0, 1.0});
  return w;
}

constexpr double kDelta = 6.0 / 29.0;

double decode_channel(double c) {
  c /= 255.0;
  return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

double encode_channel(double v) {
  const double c = v <= 0.0031308 ? 12.92 * v : 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
  return 255.0 * c;
}

double lab_f(double t) {
  return t > kDelta * kDelta * kDelta ? std::cbrt(t) : t / (3.0 * kDelta * kDelta) + 4.0 / 29.0;
}

double lab_f_inv(double f) { return f > kDelta ? f * f * f : 3.0 * kDelta * kDelta * (f - 4.0 / 29.0); }

void require_space(const ColorPoint& p, Space s, const char* what) {
  if (p.space != s) throw UsageError(std::string(what) + ": expected a " + std::string(to_string(s)) + " point");
}

}  // namespace

std::string_view to_string(Space s) { return s == Space::SRGB ? "srgb" : "lab"; }

Space parse_space(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "srgb") return Space::SRGB;
  if (lower == "lab") return Space::LAB;
  throw InputError("unknown color space '" + std::string(name) + "' (expected srgb or lab)");
}

ColorPoint::ColorPoint(Space s, Vec3 c) : space(s), coords(c) {
  for (double v : coords)
    if (!std::isfinite(v)) throw InputError("color coordinates must be finite");
}

double distance(const ColorPoint& p, const ColorPoint& q) {
  if (p.space != q.space) throw UsageError("distance: points are in different color spaces");
  return norm(p.coords - q.coords);
}

ColorPoint srgb_to_lab(const ColorPoint& c) {
  require_space(c, Space::SRGB, "srgb_to_lab");
  for (double v : c.coords)
    if (v < 0.0 || v > 255.0) throw InputError("srgb_to_lab: channel outside [0,255]");
  const Vec3 linear{decode_channel(c.coords[0]), decode_channel(c.coords[1]), decode_channel(c.coords[2])};
  const Vec3 xyz = mul(rgb_to_xyz(), linear);
  const Vec3& w = white_point();
  const double fx = lab_f(xyz[0] / w[0]);
  const double fy = lab_f(xyz[1] / w[1]);
  const double fz = lab_f(xyz[2] / w[2]);
  return ColorPoint(Space::LAB, {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)});
}

ColorPoint lab_to_srgb(const ColorPoint& c) {
  require_space(c, Space::LAB, "lab_to_srgb");
  constexpr double kTol = 1e-6;
  const double fy = (c.coords[0] + 16.0) / 116.0;
  const double fx = fy + c.coords[1] / 500.0;
  const double fz = fy - c.coords[2] / 200.0;
  const Vec3& w = white_point();
  const Vec3 xyz{w[0] * lab_f_inv(fx), w[1] * lab_f_inv(fy), w[2] * lab_f_inv(fz)};
  const Vec3 linear = mul(xyz_to_rgb(), xyz);

  const bool displayable = std::all_of(linear.begin(), linear.end(), [](double v) { return v >= -kTol && v <= 1.0 + kTol; });
  if (!displayable) {
    static const Gamut lab = make_lab_gamut();
    const bool in_hull = std::all_of(lab.halfspaces().begin(), lab.halfspaces().end(),
                                     [&](const Halfspace& h) { return dot(h.normal, c.coords) <= h.offset + kTol; });
    if (!in_hull) throw InputError("lab_to_srgb: color lies outside the Lab gamut");
  }
  Vec3 out;
  for (int k = 0; k < 3; ++k) out[k] = std::clamp(encode_channel(std::clamp(linear[k], 0.0, 1.0)), 0.0, 255.0);
  return ColorPoint(Space::SRGB, out);
}

std::string to_hex(const ColorPoint& srgb) {
  require_space(srgb, Space::SRGB, "to_hex");
  char buf[8];
  int ch[3];
  for (int k = 0; k < 3; ++k) ch[k] = static_cast<int>(std::clamp(std::floor(srgb.coords[k] + 0.5), 0.0, 255.0));
  std::snprintf(buf, sizeof buf, "#%02X%02X%02X", ch[0], ch[1], ch[2]);
  return buf;
}

void Gamut::check_space(const ColorPoint& p) const {
  if (p.space != space_) throw UsageError("gamut and point are in different color spaces");
}

bool Gamut::contains(const ColorPoint& p) const {
  check_space(p);
  return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                     [&](const Halfspace& h) { return dot(h.normal, p.coords) <= h.offset + kContainsTolerance; });
}

ColorPoint Gamut::project(const ColorPoint& p) const {
  if (contains(p)) return p;
  const Vec3 dir = p.coords - center_.coords;
  double t = 1.0;
  for (const auto& h : halfspaces_) {
    const double along = dot(h.normal, dir);
    if (along <= 0.0) continue;
    t = std::min(t, (h.offset - dot(h.normal, center_.coords)) / along);
  }
  // rounding can leave the result an ulp outside; step t back until it is not
  auto outside = [&](const Vec3& x) {
    return std::any_of(halfspaces_.begin(), halfspaces_.end(), [&](const Halfspace& h) { return dot(h.normal, x) > h.offset; });
  };
  Vec3 x = center_.coords + t * dir;
  for (int guard = 0; guard < 64 && outside(x); ++guard) {
    t = std::nextafter(t, 0.0);
    x = center_.coords + t * dir;
  }
  return ColorPoint(space_, x);
}

Gamut Gamut::from_points(Space space, std::vector<ColorPoint> extreme_points, ColorPoint center) {
  constexpr double kPlaneTol = 1e-9;
  Gamut g;
  g.space_ = space;
  g.center_ = center;
  const auto& pts = extreme_points;
  const std::size_t m = pts.size();
  for (const auto& p : pts)
    if (p.space != space) throw UsageError("gamut extreme points must share the gamut's space");

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        Vec3 n = cross(pts[j].coords - pts[i].coords, pts[k].coords - pts[i].coords);
        const double len = norm(n);
        if (len < 1e-12) continue;
        n = (1.0 / len) * n;
        double off = dot(n, pts[i].coords);
        int above = 0, below = 0;
        for (const auto& q : pts) {
          const double s = dot(n, q.coords) - off;
          if (s > kPlaneTol) ++above;
          if (s < -kPlaneTol) ++below;
        }
        if (above > 0 && below > 0) continue;
        if (above > 0) {
          n = -1.0 * n;
          off = -off;
        }
        const bool seen = std::any_of(g.halfspaces_.begin(), g.halfspaces_.end(), [&](const Halfspace& h) {
          return dot(h.normal, n) > 1.0 - 1e-12 && std::abs(h.offset - off) < kPlaneTol;
        });
        if (!seen) g.halfspaces_.push_back({n, off});
      }

  if (g.halfspaces_.size() < 4) throw InternalError("degenerate gamut: extreme points are not full-dimensional");
  for (const auto& h : g.halfspaces_)
    if (dot(h.normal, center.coords) >= h.offset) throw InternalError("gamut center is not strictly interior");

  g.box_min_ = g.box_max_ = pts.front().coords;
  for (std::size_t i = 0; i < m; ++i) {
    for (int a = 0; a < 3; ++a) {
      g.box_min_[a] = std::min(g.box_min_[a], pts[i].coords[a]);
      g.box_max_[a] = std::max(g.box_max_[a], pts[i].coords[a]);
    }
    for (std::size_t j = i + 1; j < m; ++j) g.diameter_ = std::max(g.diameter_, distance(pts[i], pts[j]));
  }
  g.extreme_points_ = std::move(extreme_points);
  return g;
}

namespace {

std::vector<ColorPoint> cube_corners() {
  std::vector<ColorPoint> corners;
  for (int r : {0, 255})
    for (int gr : {0, 255})
      for (int b : {0, 255}) corners.emplace_back(Space::SRGB, Vec3{double(r), double(gr), double(b)});
  return corners;
}

}  // namespace

Gamut make_srgb_gamut() {
  Gamut g;
  g.space_ = Space::SRGB;
  g.extreme_points_ = cube_corners();
  for (int a = 0; a < 3; ++a) {
    Vec3 e{0.0, 0.0, 0.0};
    e[a] = 1.0;
    g.halfspaces_.push_back({-1.0 * e, 0.0});
    g.halfspaces_.push_back({e, 255.0});
  }
  g.center_ = ColorPoint(Space::SRGB, {127.5, 127.5, 127.5});
  g.diameter_ = 255.0 * std::sqrt(3.0);
  g.box_min_ = {0.0, 0.0, 0.0};
  g.box_max_ = {255.0, 255.0, 255.0};
  return g;
}

Gamut make_lab_gamut() {
  std::vector<ColorPoint> corners;
  for (const auto& c : cube_corners()) corners.push_back(srgb_to_lab(c));
  return Gamut::from_points(Space::LAB, std::move(corners), ColorPoint(Space::LAB, {50.0, 0.0, 0.0}));
}

Gamut make_gamut(Space space) { return space == Space::SRGB ? make_srgb_gamut() : make_lab_gamut(); }

}  // namespace colorembed
