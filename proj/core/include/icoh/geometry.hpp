#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icoh {

/// Exact rational; always canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Parses "p/q" or "p". Throws InputError on anything else (including floats).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

std::string to_string(const Point2& p);

/// p -> M p + t with M = [[a, b], [c, d]].
class AffineMap {
 public:
  AffineMap();  // identity
  AffineMap(Rational a, Rational b, Rational c, Rational d, Point2 t);

  static AffineMap identity() { return {}; }
  static AffineMap scaling(const Rational& s);
  static AffineMap translation(Point2 t);
  /// p -> s (p - center) + center.
  static AffineMap homothety(const Point2& center, const Rational& s);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  const Point2& t() const { return t_; }

  Point2 operator()(const Point2& p) const;
  Rational determinant() const { return a_ * d_ - b_ * c_; }
  bool invertible() const { return determinant() != 0; }
  /// Throws UnsupportedError when singular.
  AffineMap inverse() const;

  friend bool operator==(const AffineMap& x, const AffineMap& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_ &&
           x.t_ == y.t_;
  }

 private:
  Rational a_, b_, c_, d_;
  Point2 t_;
};

/// result(p) = outer(inner(p)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// Unique solution of a(p) = p. Throws UnsupportedError when I - M is singular.
Point2 fixed_point(const AffineMap& a);

/// Operator 2-norm of the linear part is < 1, decided exactly: both
/// eigenvalues of S = M^T M are < 1 iff tr(S) < 2 and det(I - S) > 0.
bool is_contraction(const AffineMap& a);

/// Compact convex polygon; may degenerate to a segment (2 vertices) or a
/// point (1 vertex). Vertices are counterclockwise with no repeats and no
/// collinear interior vertices.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  /// Convex hull of the given points. Throws InputError when empty.
  static ConvexPolygon hull(std::vector<Point2> points);

  const std::vector<Point2>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  bool is_point() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }

  bool contains(const Point2& p) const;

  /// Axis-aligned bounds (xmin, ymin, xmax, ymax).
  struct Box {
    Rational xmin, ymin, xmax, ymax;
  };
  Box bounds() const;

  /// Squared diameter (maximum squared vertex distance).
  Rational diameter_squared() const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&);

 private:
  std::vector<Point2> vertices_;
};

/// Closed halfplane { p : nx * p.x + ny * p.y + off >= 0 }.
struct HalfPlane {
  Rational nx, ny, off;
  Rational eval(const Point2& p) const { return nx * p.x + ny * p.y + off; }
};

/// Halfplane description whose intersection is exactly the polygon.
std::vector<HalfPlane> halfplanes(const ConvexPolygon& p);

/// Exact intersection; std::nullopt when empty.
std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q);

ConvexPolygon map_polygon(const AffineMap& a, const ConvexPolygon& p);

/// Whether all polygons share a common point. Throws InputError on empty list.
bool common_point_exists(const std::vector<ConvexPolygon>& ps);

/// Whether the (closed) polygons are at positive distance.
bool min_distance_positive(const ConvexPolygon& p, const ConvexPolygon& q);

/// p is contained in q (checked on vertices; q is convex).
bool polygon_contains(const ConvexPolygon& q, const ConvexPolygon& p);

/// h_j(K) is inside K and h_j is a contraction, for every map.
bool check_envelope(const std::vector<AffineMap>& maps, const ConvexPolygon& k);

}  // namespace icoh
