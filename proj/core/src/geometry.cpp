#include "icoh/geometry.hpp"

#include <algorithm>

#include "icoh/errors.hpp"

namespace icoh {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("not an exact rational: '" + s + "'");
  }
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Point2& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

AffineMap::AffineMap() : a_(1), b_(0), c_(0), d_(1), t_{0, 0} {}

AffineMap::AffineMap(Rational a, Rational b, Rational c, Rational d, Point2 t)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)),
      t_(std::move(t)) {}

AffineMap AffineMap::scaling(const Rational& s) { return {s, 0, 0, s, {0, 0}}; }

AffineMap AffineMap::translation(Point2 t) { return {1, 0, 0, 1, std::move(t)}; }

AffineMap AffineMap::homothety(const Point2& center, const Rational& s) {
  Rational one_minus = 1 - s;
  return {s, 0, 0, s, {one_minus * center.x, one_minus * center.y}};
}

Point2 AffineMap::operator()(const Point2& p) const {
  return {a_ * p.x + b_ * p.y + t_.x, c_ * p.x + d_ * p.y + t_.y};
}

AffineMap AffineMap::inverse() const {
  const Rational det = determinant();
  if (det == 0) throw UnsupportedError("affine map is not invertible");
  Rational ia = d_ / det, ib = -b_ / det, ic = -c_ / det, id = a_ / det;
  Point2 it{-(ia * t_.x + ib * t_.y), -(ic * t_.x + id * t_.y)};
  return {ia, ib, ic, id, it};
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  return {outer.a() * inner.a() + outer.b() * inner.c(),
          outer.a() * inner.b() + outer.b() * inner.d(),
          outer.c() * inner.a() + outer.d() * inner.c(),
          outer.c() * inner.b() + outer.d() * inner.d(),
          outer(inner.t())};
}

Point2 fixed_point(const AffineMap& a) {
  // (I - M) p = t
  Rational m11 = 1 - a.a(), m12 = -a.b(), m21 = -a.c(), m22 = 1 - a.d();
  Rational det = m11 * m22 - m12 * m21;
  if (det == 0) throw UnsupportedError("map has no unique fixed point");
  return {(m22 * a.t().x - m12 * a.t().y) / det, (m11 * a.t().y - m21 * a.t().x) / det};
}

bool is_contraction(const AffineMap& a) {
  Rational s11 = a.a() * a.a() + a.c() * a.c();
  Rational s22 = a.b() * a.b() + a.d() * a.d();
  Rational s12 = a.a() * a.b() + a.c() * a.d();
  Rational trace = s11 + s22;
  Rational det_i_minus_s = (1 - s11) * (1 - s22) - s12 * s12;
  return trace < 2 && det_i_minus_s > 0;
}

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

ConvexPolygon ConvexPolygon::hull(std::vector<Point2> pts) {
  if (pts.empty()) throw InputError("convex hull of no points");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  ConvexPolygon out;
  if (pts.size() <= 2) {
    out.vertices_ = std::move(pts);
    return out;
  }
  // Andrew's monotone chain, dropping collinear points.
  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  out.vertices_ = std::move(h);
  return out;
}

std::vector<HalfPlane> halfplanes(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  std::vector<HalfPlane> out;
  if (v.size() == 1) {
    const auto& p = v[0];
    out.push_back({1, 0, -p.x});
    out.push_back({-1, 0, p.x});
    out.push_back({0, 1, -p.y});
    out.push_back({0, -1, p.y});
  } else if (v.size() == 2) {
    const auto& a = v[0];
    const auto& b = v[1];
    Rational dx = b.x - a.x, dy = b.y - a.y;
    // Line through a, b as two opposite halfplanes, plus end caps.
    HalfPlane left{-dy, dx, dy * a.x - dx * a.y};
    out.push_back(left);
    out.push_back({-left.nx, -left.ny, -left.off});
    out.push_back({dx, dy, -(dx * a.x + dy * a.y)});
    out.push_back({-dx, -dy, dx * b.x + dy * b.y});
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& a = v[i];
      const auto& b = v[(i + 1) % v.size()];
      Rational dx = b.x - a.x, dy = b.y - a.y;
      out.push_back({-dy, dx, dy * a.x - dx * a.y});
    }
  }
  return out;
}

bool ConvexPolygon::contains(const Point2& p) const {
  if (vertices_.empty()) return false;
  for (const auto& h : halfplanes(*this)) {
    if (h.eval(p) < 0) return false;
  }
  return true;
}

ConvexPolygon::Box ConvexPolygon::bounds() const {
  Box b{vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
  for (const auto& p : vertices_) {
    if (p.x < b.xmin) b.xmin = p.x;
    if (p.x > b.xmax) b.xmax = p.x;
    if (p.y < b.ymin) b.ymin = p.y;
    if (p.y > b.ymax) b.ymax = p.y;
  }
  return b;
}

Rational ConvexPolygon::diameter_squared() const {
  Rational best = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      Rational dx = vertices_[i].x - vertices_[j].x;
      Rational dy = vertices_[i].y - vertices_[j].y;
      Rational d = dx * dx + dy * dy;
      if (d > best) best = d;
    }
  }
  return best;
}

bool operator==(const ConvexPolygon& p, const ConvexPolygon& q) {
  // Canonical start: hull() emits vertices starting from the lexicographically
  // smallest point, and map_polygon re-hulls, so plain comparison suffices.
  return p.vertices_ == q.vertices_;
}

namespace {

std::optional<ConvexPolygon> clip(const ConvexPolygon& poly, const HalfPlane& h) {
  const auto& v = poly.vertices();
  std::vector<Point2> kept;
  std::vector<Rational> val(v.size());
  bool all_inside = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    val[i] = h.eval(v[i]);
    if (val[i] >= 0) {
      kept.push_back(v[i]);
    } else {
      all_inside = false;
    }
  }
  if (all_inside) return poly;
  const std::size_t n = v.size();
  const std::size_t edges = n == 1 ? 0 : (n == 2 ? 1 : n);
  for (std::size_t i = 0; i < edges; ++i) {
    const std::size_t j = (i + 1) % n;
    if ((val[i] < 0 && val[j] > 0) || (val[i] > 0 && val[j] < 0)) {
      Rational t = val[i] / (val[i] - val[j]);
      kept.push_back({v[i].x + t * (v[j].x - v[i].x), v[i].y + t * (v[j].y - v[i].y)});
    }
  }
  if (kept.empty()) return std::nullopt;
  return ConvexPolygon::hull(std::move(kept));
}

}  // namespace

std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.empty() || q.empty()) return std::nullopt;
  std::optional<ConvexPolygon> cur = p;
  for (const auto& h : halfplanes(q)) {
    cur = clip(*cur, h);
    if (!cur) return std::nullopt;
  }
  return cur;
}

ConvexPolygon map_polygon(const AffineMap& a, const ConvexPolygon& p) {
  std::vector<Point2> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(a(v));
  return ConvexPolygon::hull(std::move(pts));
}

bool common_point_exists(const std::vector<ConvexPolygon>& ps) {
  if (ps.empty()) throw InputError("common_point_exists on an empty list");
  std::optional<ConvexPolygon> cur = ps[0];
  for (std::size_t i = 1; i < ps.size() && cur; ++i) cur = intersect(*cur, ps[i]);
  return cur.has_value();
}

bool min_distance_positive(const ConvexPolygon& p, const ConvexPolygon& q) {
  // Compact convex sets are at positive distance iff they are disjoint.
  return !intersect(p, q).has_value();
}

bool polygon_contains(const ConvexPolygon& q, const ConvexPolygon& p) {
  for (const auto& v : p.vertices()) {
    if (!q.contains(v)) return false;
  }
  return true;
}

bool check_envelope(const std::vector<AffineMap>& maps, const ConvexPolygon& k) {
  if (k.empty()) return false;
  for (const auto& h : maps) {
    if (!is_contraction(h)) return false;
    if (!polygon_contains(k, map_polygon(h, k))) return false;
  }
  return true;
}

}  // namespace icoh
