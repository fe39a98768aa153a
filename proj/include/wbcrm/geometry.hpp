#pragma once

#include <cmath>
#include <vector>

namespace wbcrm {

// 2D vector over a generic scalar so the same expressions run on plain
// doubles and on autodiff tape variables.
template <class T>
struct Vec2T {
  T x{};
  T y{};
};

template <class T> Vec2T<T> operator+(const Vec2T<T>& a, const Vec2T<T>& b) { return {a.x + b.x, a.y + b.y}; }
template <class T> Vec2T<T> operator-(const Vec2T<T>& a, const Vec2T<T>& b) { return {a.x - b.x, a.y - b.y}; }
template <class T> Vec2T<T> operator*(const T& s, const Vec2T<T>& v) { return {s * v.x, s * v.y}; }
template <class T> Vec2T<T> operator*(double s, const Vec2T<T>& v) { return {s * v.x, s * v.y}; }
template <class T> Vec2T<T> operator*(const Vec2T<T>& v, double s) { return {v.x * s, v.y * s}; }
template <class T> T dot(const Vec2T<T>& a, const Vec2T<T>& b) { return a.x * b.x + a.y * b.y; }
template <class T> T cross(const Vec2T<T>& a, const Vec2T<T>& b) { return a.x * b.y - a.y * b.x; }

using Vec2 = Vec2T<double>;

inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }
inline double norm_sq(const Vec2& v) { return v.x * v.x + v.y * v.y; }
inline Vec2 normalized(const Vec2& v) {
  const double n = norm(v);
  return {v.x / n, v.y / n};
}
// Rotation by -90 degrees; maps a CCW tangent onto the outward normal.
inline Vec2 rot_m90(const Vec2& v) { return {v.y, -v.x}; }
inline Vec2 rotate(const Vec2& v, double th) {
  const double c = std::cos(th), s = std::sin(th);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Planar rigid transform (rotation th followed by translation t).
struct Pose2 {
  Vec2 t{0.0, 0.0};
  double th = 0.0;

  Vec2 apply(const Vec2& p) const { return rotate(p, th) + t; }
  Vec2 apply_vector(const Vec2& v) const { return rotate(v, th); }
  Pose2 compose(const Pose2& other) const { return {apply(other.t), th + other.th}; }
  Pose2 inverse() const {
    const Vec2 ti = rotate({-t.x, -t.y}, -th);
    return {ti, -th};
  }
};

// Wraps an angle to (-pi, pi].
double wrap_angle(double a);
// Wraps a curve parameter to [0, 1).
double wrap_param(double phi);
// Signed wrapped difference a - b in (-0.5, 0.5].
double wrap_param_diff(double a, double b);

double polygon_signed_area(const std::vector<Vec2>& v);
bool polygon_is_ccw(const std::vector<Vec2>& v);
bool polygon_is_simple(const std::vector<Vec2>& v);
// Non-strict convexity (collinear runs allowed), assuming CCW orientation.
bool polygon_is_convex(const std::vector<Vec2>& v, double tol = 1e-12);
Vec2 polygon_vertex_mean(const std::vector<Vec2>& v);
double polygon_perimeter(const std::vector<Vec2>& v);
bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p);
bool segments_intersect(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1);
// Overlap test for two simple polygons (vertex containment or edge crossing).
bool polygons_intersect(const std::vector<Vec2>& a, const std::vector<Vec2>& b);
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

// Arc-length uniform resampling of a closed polygon boundary. Output spacing
// is the perimeter divided by round(perimeter / target_spacing); orientation
// is preserved.
std::vector<Vec2> resample_closed_polygon(const std::vector<Vec2>& v, double target_spacing);

}  // namespace wbcrm
