#include <doctest.h>

#include "icoh/errors.hpp"
#include "icoh/geometry.hpp"

using namespace icoh;

namespace {

Rational q(const char* s) { return parse_rational(s); }
Point2 P(const char* x, const char* y) { return {q(x), q(y)}; }

const ConvexPolygon kTri = ConvexPolygon::hull({P("0", "0"), P("1", "0"), P("0", "1")});

AffineMap gasket(int i) {
  const Point2 p[3] = {P("0", "0"), P("1", "0"), P("0", "1")};
  return AffineMap::homothety(p[i - 1], q("1/2"));
}

ConvexPolygon square(const char* x0, const char* y0) {
  const Rational x = q(x0), y = q(y0);
  return ConvexPolygon::hull({{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}});
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(q("2/4") == q("1/2"));
  CHECK(to_string(q("-6/4")) == "-3/2");
  CHECK(to_string(q("3")) == "3");
  CHECK_THROWS_AS(parse_rational("0.5"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("compose") {
  const AffineMap b = gasket(2);
  CHECK(compose(AffineMap::identity(), b) == b);
  CHECK(compose(AffineMap::scaling(q("1/2")), AffineMap::scaling(q("1/2"))) ==
        AffineMap::scaling(q("1/4")));
  CHECK(compose(gasket(1), gasket(2))(P("0", "0")) == P("1/4", "0"));
}

TEST_CASE("fixed_point") {
  CHECK(fixed_point(gasket(1)) == P("0", "0"));
  CHECK(fixed_point(gasket(2)) == P("1", "0"));
  CHECK(fixed_point(compose(gasket(1), gasket(2))) == P("1/3", "0"));
  CHECK_THROWS_AS(fixed_point(AffineMap::identity()), UnsupportedError);
}

TEST_CASE("is_contraction") {
  CHECK(is_contraction(AffineMap::scaling(q("1/2"))));
  CHECK_FALSE(is_contraction(AffineMap::identity()));
  CHECK(is_contraction(AffineMap(q("1/3"), 0, 0, q("1/3"), P("0", "0"))));
  // shear with a norm above 1 although both eigenvalues are 1/2
  CHECK_FALSE(is_contraction(AffineMap(q("1/2"), q("2"), 0, q("1/2"), P("0", "0"))));
}

TEST_CASE("map_polygon") {
  CHECK(map_polygon(AffineMap::identity(), kTri) == kTri);
  CHECK(map_polygon(gasket(1), kTri) ==
        ConvexPolygon::hull({P("0", "0"), P("1/2", "0"), P("0", "1/2")}));
  const auto seg = ConvexPolygon::hull({P("0", "0"), P("1", "0")});
  const auto img = map_polygon(gasket(3), seg);
  CHECK(img.is_segment());
  CHECK(img == ConvexPolygon::hull({P("0", "1/2"), P("1/2", "1/2")}));
  // a singular map flattens a triangle to a segment
  CHECK(map_polygon(AffineMap(1, 0, 0, 0, P("0", "0")), kTri).is_segment());
}

TEST_CASE("hull") {
  const auto h = ConvexPolygon::hull({P("0", "0"), P("1", "0"), P("1/2", "0"), P("0", "1"),
                                      P("1/4", "1/4"), P("0", "0")});
  CHECK(h.vertices().size() == 3);
  CHECK(h == kTri);
  CHECK(ConvexPolygon::hull({P("1", "1"), P("1", "1")}).is_point());
  CHECK_THROWS_AS(ConvexPolygon::hull({}), InputError);
  CHECK(kTri.contains(P("1/2", "1/2")));
  CHECK_FALSE(kTri.contains(P("1/2", "2/3")));
}

TEST_CASE("common_point_exists") {
  CHECK(common_point_exists({kTri, kTri}));
  const auto c1 = map_polygon(gasket(1), kTri), c2 = map_polygon(gasket(2), kTri),
             c3 = map_polygon(gasket(3), kTri);
  CHECK(common_point_exists({c1, c2}));
  const auto meet = intersect(c1, c2);
  REQUIRE(meet);
  CHECK(meet->is_point());
  CHECK(meet->vertices()[0] == P("1/2", "0"));
  CHECK_FALSE(common_point_exists({c1, c2, c3}));
  CHECK_THROWS_AS(common_point_exists({}), InputError);
}

TEST_CASE("min_distance_positive") {
  CHECK_FALSE(min_distance_positive(square("0", "0"), square("1/2", "1/2")));
  const auto t1 = ConvexPolygon::hull({P("0", "0"), P("1", "0"), P("0", "1")});
  const auto t2 = ConvexPolygon::hull({P("1", "0"), P("2", "0"), P("2", "1")});
  CHECK_FALSE(min_distance_positive(t1, t2));
  CHECK(min_distance_positive(square("0", "0"), square("3", "0")));
}

TEST_CASE("check_envelope") {
  const std::vector<AffineMap> g{gasket(1), gasket(2), gasket(3)};
  CHECK(check_envelope(g, kTri));
  CHECK(check_envelope(g, square("0", "0")));
  CHECK_FALSE(check_envelope({AffineMap::translation(P("1", "0"))}, kTri));
  // contraction whose image leaves K
  CHECK_FALSE(check_envelope({AffineMap::homothety(P("2", "2"), q("1/2"))}, kTri));
}

TEST_CASE("inverse") {
  const AffineMap a(q("1/2"), q("1/3"), q("0"), q("1/4"), P("1", "2"));
  CHECK(compose(a, a.inverse()) == AffineMap::identity());
  CHECK_THROWS_AS(AffineMap(1, 1, 1, 1, P("0", "0")).inverse(), UnsupportedError);
}
