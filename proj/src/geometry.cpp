#include "wbcrm/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace wbcrm {

double wrap_angle(double a) {
  double w = std::fmod(a + M_PI, 2.0 * M_PI);
  if (w <= 0.0) w += 2.0 * M_PI;
  return w - M_PI;
}

double wrap_param(double phi) {
  double w = std::fmod(phi, 1.0);
  if (w < 0.0) w += 1.0;
  return w == 1.0 ? 0.0 : w;
}

double wrap_param_diff(double a, double b) {
  double d = std::fmod(a - b, 1.0);
  if (d > 0.5) d -= 1.0;
  if (d <= -0.5) d += 1.0;
  return d;
}

double polygon_signed_area(const std::vector<Vec2>& v) {
  double s = 0.0;
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % n];
    s += cross(p, q);
  }
  return 0.5 * s;
}

bool polygon_is_ccw(const std::vector<Vec2>& v) { return polygon_signed_area(v) > 0.0; }

namespace {

int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double d = cross(b - a, c - a);
  if (d > 1e-14) return 1;
  if (d < -1e-14) return -1;
  return 0;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x, b.x) - 1e-14 <= p.x && p.x <= std::max(a.x, b.x) + 1e-14 &&
         std::min(a.y, b.y) - 1e-14 <= p.y && p.y <= std::max(a.y, b.y) + 1e-14;
}

}  // namespace

bool segments_intersect(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1) {
  const int o1 = orientation(a0, a1, b0);
  const int o2 = orientation(a0, a1, b1);
  const int o3 = orientation(b0, b1, a0);
  const int o4 = orientation(b0, b1, a1);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a0, a1, b0)) return true;
  if (o2 == 0 && on_segment(a0, a1, b1)) return true;
  if (o3 == 0 && on_segment(b0, b1, a0)) return true;
  if (o4 == 0 && on_segment(b0, b1, a1)) return true;
  return false;
}

bool polygon_is_simple(const std::vector<Vec2>& v) {
  const size_t n = v.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      // skip edges sharing a vertex
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return false;
    }
  }
  return true;
}

bool polygon_is_convex(const std::vector<Vec2>& v, double tol) {
  const size_t n = v.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    const Vec2& c = v[(i + 2) % n];
    if (cross(b - a, c - b) < -tol) return false;
  }
  return true;
}

Vec2 polygon_vertex_mean(const std::vector<Vec2>& v) {
  Vec2 s{0.0, 0.0};
  for (const Vec2& p : v) s = s + p;
  return {s.x / double(v.size()), s.y / double(v.size())};
}

double polygon_perimeter(const std::vector<Vec2>& v) {
  double s = 0.0;
  for (size_t i = 0; i < v.size(); ++i) s += norm(v[(i + 1) % v.size()] - v[i]);
  return s;
}

bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
  // even-odd ray casting
  bool inside = false;
  const size_t n = poly.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside;
}

bool polygons_intersect(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  for (const Vec2& p : a)
    if (point_in_polygon(b, p)) return true;
  for (const Vec2& p : b)
    if (point_in_polygon(a, p)) return true;
  const size_t na = a.size(), nb = b.size();
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j)
      if (segments_intersect(a[i], a[(i + 1) % na], b[j], b[(j + 1) % nb])) return true;
  return false;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& p, const Vec2& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& p, const Vec2& q) { return p.x == q.x && p.y == q.y; }),
            pts.end());
  const size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec2> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 1e-14) --k;
    hull[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 1e-14) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Vec2> resample_closed_polygon(const std::vector<Vec2>& v, double target_spacing) {
  if (v.size() < 3) throw std::invalid_argument("resample: polygon needs at least 3 vertices");
  const double per = polygon_perimeter(v);
  if (target_spacing <= 0.0 || target_spacing > per / 3.0)
    throw std::invalid_argument("resample: spacing must be in (0, perimeter/3]");
  const int m = std::max<int>(3, int(std::lround(per / target_spacing)));
  const double step = per / double(m);

  std::vector<Vec2> out;
  out.reserve(m);
  size_t edge = 0;
  double edge_len = norm(v[1 % v.size()] - v[0]);
  double along = 0.0;  // distance already consumed on the current edge
  for (int i = 0; i < m; ++i) {
    double want = (i == 0) ? 0.0 : step;
    while (want > 0.0) {
      const double remain = edge_len - along;
      if (want < remain || edge == v.size() - 1) {
        along += want;
        want = 0.0;
      } else {
        want -= remain;
        edge++;
        along = 0.0;
        edge_len = norm(v[(edge + 1) % v.size()] - v[edge]);
      }
    }
    const Vec2 a = v[edge];
    const Vec2 b = v[(edge + 1) % v.size()];
    const double t = edge_len > 0.0 ? along / edge_len : 0.0;
    out.push_back(a + t * (b - a));
  }
  return out;
}

}  // namespace wbcrm
