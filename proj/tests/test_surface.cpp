#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatspin/surface.hpp"

using namespace flatspin;

namespace {

Cyclo pt(long re, long im) {
    return Cyclo(Rational(re), 4) + Cyclo::root_of_unity(4, 1) * Cyclo(Rational(im), 4);
}

// unit square torus over Q(i)
TranslationSurface square_torus() {
    Polygon sq{{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}};
    std::vector<Gluing> gl{
        {{0, 0}, {0, 2}}, // bottom ~ top
        {{0, 1}, {0, 3}}, // right ~ left
    };
    return make_surface({sq}, gl, 4);
}

} // namespace

TEST_CASE("square torus is a valid surface") {
    TranslationSurface s = square_torus();
    CHECK(s.polygons().size() == 1);
    CHECK(s.partner({0, 0}) == EdgeRef{0, 2});
    CHECK(s.partner({0, 3}) == EdgeRef{0, 1});
}

TEST_CASE("validation failures") {
    Polygon sq{{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}};

    SUBCASE("non-parallel gluing") {
        std::vector<Gluing> gl{{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}};
        CHECK_THROWS_WITH_AS(make_surface({sq}, gl, 4).polygons().size(),
                             doctest::Contains("not exact negatives"), Error);
        try {
            make_surface({sq}, gl, 4);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::EdgeVectorMismatch);
        }
    }

    SUBCASE("disconnected") {
        Polygon far{{pt(10, 0), pt(11, 0), pt(11, 1), pt(10, 1)}};
        std::vector<Gluing> gl{{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}},
                               {{1, 0}, {1, 2}}, {{1, 1}, {1, 3}}};
        try {
            make_surface({sq, far}, gl, 4);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::Disconnected);
        }
    }

    SUBCASE("unglued edge") {
        std::vector<Gluing> gl{{{0, 0}, {0, 2}}};
        try {
            make_surface({sq}, gl, 4);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::UnmatchedEdge);
        }
    }

    SUBCASE("doubly glued edge") {
        std::vector<Gluing> gl{{{0, 0}, {0, 2}}, {{0, 2}, {0, 0}}, {{0, 1}, {0, 3}}};
        try {
            make_surface({sq}, gl, 4);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::UnmatchedEdge);
        }
    }

    SUBCASE("non-convex polygon") {
        Polygon bad{{pt(0, 0), pt(2, 0), pt(1, 1), pt(2, 2), pt(0, 2)}};
        try {
            make_surface({bad}, {}, 4);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NonConvexPolygon);
        }
    }

    SUBCASE("clockwise polygon") {
        Polygon cw{{pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)}};
        try {
            make_surface({cw}, {}, 4);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NonConvexPolygon);
        }
    }
}

TEST_CASE("torus cone point") {
    TranslationSurface s = square_torus();
    auto pts = cone_points(s);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].angle_multiple == 1);
    CHECK(pts[0].corners.size() == 4);

    StratumSignature sig = stratum(s);
    CHECK(sig.genus == 1);
    CHECK(sig.orders.empty());
    CHECK(sig.to_string() == "H()");

    StratumSignature with_zeros = stratum(s, true);
    CHECK(with_zeros.orders == std::vector<unsigned>{0});
}

TEST_CASE("cone points partition the corners") {
    TranslationSurface s = square_torus();
    auto pts = cone_points(s);
    size_t total = 0;
    for (const auto& p : pts) total += p.corners.size();
    size_t expected = 0;
    for (const auto& poly : s.polygons()) expected += poly.size();
    CHECK(total == expected);
}

TEST_CASE("angle count is reference-independent") {
    auto check_surface = [](const TranslationSurface& s) {
        std::vector<std::vector<Cyclo>> polys;
        for (const auto& poly : s.polygons()) polys.push_back(poly.vertices);
        auto pts = cone_points(s);
        for (unsigned skip = 0; skip < 8; ++skip) {
            Cyclo ref = generic_direction(polys, s.field_order(), skip);
            for (const auto& p : pts)
                CHECK(cycle_angle_multiple(polys, p.corners, ref) == p.angle_multiple);
        }
    };
    check_surface(square_torus());

    Polygon rhombus{{pt(0, 0), pt(2, 1), pt(3, 3), pt(1, 2)}};
    TranslationSurface skew =
        make_surface({rhombus}, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}}, 4);
    check_surface(skew);
}

TEST_CASE("area of the square torus") {
    TranslationSurface s = square_torus();
    CHECK(area(s) == Cyclo(Rational(1)));
}

TEST_CASE("area scaling law") {
    TranslationSurface s = square_torus();
    Cyclo c = Cyclo(Rational(2)) * Cyclo::root_of_unity(8, 1);
    TranslationSurface t = transform(s, c);
    CHECK(area(t) == Cyclo(Rational(4)) * area(s));
}

TEST_CASE("transform identity and inverse") {
    TranslationSurface s = square_torus();
    TranslationSurface same = transform(s, Cyclo(Rational(1)));
    CHECK(same.polygons()[0].vertices == s.polygons()[0].vertices);

    Cyclo c = Cyclo::root_of_unity(12, 5);
    TranslationSurface round = transform(transform(s, c), Cyclo(Rational(1)) / c);
    for (size_t v = 0; v < 4; ++v)
        CHECK(round.polygons()[0].vertices[v] == s.polygons()[0].vertices[v]);

    CHECK_THROWS_AS(transform(s, Cyclo::zero(4)), Error);
}

TEST_CASE("area is invariant under relabeling") {
    Polygon sq{{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}};
    Polygon rot{{pt(1, 0), pt(1, 1), pt(0, 1), pt(0, 0)}}; // cyclic reindex
    std::vector<Gluing> gl1{{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}};
    std::vector<Gluing> gl2{{{0, 3}, {0, 1}}, {{0, 0}, {0, 2}}};
    CHECK(area(make_surface({sq}, gl1, 4)) == area(make_surface({rot}, gl2, 4)));
}

TEST_CASE("pentagram-like winding is rejected") {
    // all consecutive triples turn left but the boundary winds twice
    std::vector<Cyclo> vs;
    for (int j = 0; j < 5; ++j) vs.push_back(Cyclo::root_of_unity(5, 2 * j));
    try {
        make_surface({Polygon{vs}}, {}, 5);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonConvexPolygon);
    }
}
