#pragma once

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace colorembed {

enum class Space { SRGB, LAB };

std::string_view to_string(Space s);
/// Parses "srgb" or "lab" (case-insensitive); throws InputError otherwise.
Space parse_space(std::string_view name);

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// A point in one of the supported 3-D color spaces. sRGB channels are in
/// [0,255]; Lab is in native units (L in [0,100], a and b signed).
struct ColorPoint {
  Space space = Space::SRGB;
  Vec3 coords{0.0, 0.0, 0.0};

  ColorPoint() = default;
  /// Throws InputError on non-finite coordinates.
  ColorPoint(Space s, Vec3 c);

  friend bool operator==(const ColorPoint&, const ColorPoint&) = default;
};

/// Euclidean distance; throws UsageError when the spaces differ.
double distance(const ColorPoint& p, const ColorPoint& q);

/// sRGB (IEC 61966-2-1 transfer curve) -> linear RGB -> XYZ -> CIE Lab, D65.
/// Throws InputError if a channel is outside [0,255].
ColorPoint srgb_to_lab(const ColorPoint& c);

/// Inverse of srgb_to_lab. Channels of the result are clamped to [0,255].
/// Accepted inputs are points of the Lab gamut hull and Lab images of
/// displayable sRGB colors (both within 1e-6); anything else throws
/// InputError, since it means an upstream projection was skipped.
ColorPoint lab_to_srgb(const ColorPoint& c);

/// `#RRGGBB`, channels rounded half-up and clamped to [0,255].
std::string to_hex(const ColorPoint& srgb);

/// Inside means `normal . x <= offset`. Normals are unit length.
struct Halfspace {
  Vec3 normal;
  double offset;
};

/// Convex polytope of displayable colors with an interior rescaling center.
class Gamut {
 public:
  static constexpr double kContainsTolerance = 1e-9;

  Space space() const { return space_; }
  const std::vector<ColorPoint>& extreme_points() const { return extreme_points_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const ColorPoint& center() const { return center_; }
  double diameter() const { return diameter_; }
  /// Axis-aligned bounding box of the extreme points.
  const Vec3& box_min() const { return box_min_; }
  const Vec3& box_max() const { return box_max_; }

  bool contains(const ColorPoint& p) const;

  /// Points inside are returned unchanged. Points outside are pulled toward
  /// the center along the ray through them until they sit on the boundary.
  ColorPoint project(const ColorPoint& p) const;

  /// Builds a gamut from its extreme points by enumerating hull facets.
  /// Throws InternalError for a degenerate (flat) point set.
  static Gamut from_points(Space space, std::vector<ColorPoint> extreme_points, ColorPoint center);

 private:
  Gamut() = default;
  void check_space(const ColorPoint& p) const;

  Space space_ = Space::SRGB;
  std::vector<ColorPoint> extreme_points_;
  std::vector<Halfspace> halfspaces_;
  ColorPoint center_;
  double diameter_ = 0.0;
  Vec3 box_min_{}, box_max_{};

  friend Gamut make_srgb_gamut();
};

/// The cube [0,255]^3 centered at (127.5,127.5,127.5).
Gamut make_srgb_gamut();
/// Convex hull in Lab of the eight sRGB cube corners, centered at gray (50,0,0).
Gamut make_lab_gamut();
Gamut make_gamut(Space space);

inline bool contains(const Gamut& g, const ColorPoint& p) { return g.contains(p); }
inline ColorPoint project_to_gamut(const Gamut& g, const ColorPoint& p) { return g.project(p); }

}  // namespace colorembed
