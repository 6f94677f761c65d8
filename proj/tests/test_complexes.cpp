#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "flatspin/complexes.hpp"
#include "flatspin/constructors.hpp"
#include "flatspin/verify.hpp"
#include "support/builders.hpp"

using namespace flatspin;

TEST_CASE("diagonal triangulation of spingons") {
    DiagonalTriangulation t = diagonal_triangulation(spingon(7, 1));
    CHECK(t.surface.polygons().size() == 28);
    size_t w_count = 0;
    for (const auto& label : t.cells.complex.vertex_labels)
        if (label == "W") ++w_count;
    CHECK(w_count == 7);
    CHECK(t.cells.complex.euler_characteristic() == 2 - 2 * 3);

    DiagonalTriangulation t6 = diagonal_triangulation(spingon(6, 1));
    CHECK(t6.surface.polygons().size() == 24);

    DiagonalTriangulation h = diagonal_triangulation(half_spingon(6, 2));
    CHECK(h.surface.polygons().size() == 24);
    CHECK(h.cells.complex.euler_characteristic() == -4);
}

TEST_CASE("diagonal triangulation rejects non-rhombus surfaces") {
    CHECK_THROWS_AS(diagonal_triangulation(regular_ngon(12)), Error);
    try {
        diagonal_triangulation(testsupport::square_torus());
        // a square is a rhombus, so this must succeed
    } catch (const Error&) {
        CHECK(false);
    }
    try {
        diagonal_triangulation(double_ngon(7));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotRhombusSurface);
    }
}

TEST_CASE("model sphere combinatorics") {
    CellComplex m7 = model_sphere(7);
    CHECK(m7.num_vertices() == 9);
    CHECK(m7.num_edges() == 21);
    CHECK(m7.num_faces() == 14);
    CHECK(m7.euler_characteristic() == 2);

    CellComplex m3 = model_sphere(3);
    CHECK(m3.euler_characteristic() == 2);

    // O and A see every ray; each W sits between its two ray segments
    CellComplex m5 = model_sphere(5);
    CHECK(m5.vertex_degree(0) == 10);
    CHECK(m5.vertex_degree(1) == 10);
    for (int v = 2; v < 7; ++v) CHECK(m5.vertex_degree(v) == 2);
}

TEST_CASE("diagonal triangulation is invariant under the fan symmetries") {
    TranslationSurface s = spingon(7, 1);
    DiagonalTriangulation t = diagonal_triangulation(s);
    CHECK(invariant_under_derivative(t.surface, Cyclo::root_of_unity(7, 1)));
    CHECK(invariant_under_derivative(t.surface, Cyclo(Rational(-1))));

    auto sym = find_symmetry(s, Cyclo::root_of_unity(7, 1));
    REQUIRE(sym.has_value());
    CHECK(invariant_under(t, *sym));
}

TEST_CASE("a lopsided triangulation is not rotation invariant") {
    // cut rhombus 0 by the O-B diagonal and the others by A-C: same surface,
    // but no symmetry of derivative zeta_7 maps faces to faces
    TranslationSurface s = spingon(7, 1);
    std::vector<Polygon> tris;
    std::vector<Gluing> gluings;
    for (uint32_t p = 0; p < 7; ++p) {
        const auto& v = s.polygons()[p].vertices;
        if (p == 0) {
            tris.push_back(Polygon{{v[0], v[1], v[2]}}); // O A B
            tris.push_back(Polygon{{v[0], v[2], v[3]}}); // O B C
            gluings.push_back({{2 * p, 2}, {2 * p + 1, 0}});
        } else {
            tris.push_back(Polygon{{v[1], v[2], v[3]}}); // A B C
            tris.push_back(Polygon{{v[3], v[0], v[1]}}); // C O A
            gluings.push_back({{2 * p, 2}, {2 * p + 1, 2}}); // C->A ~ A->C
        }
    }
    // original sides: rhombus p edge j lives on one of the two triangles
    auto slot = [&](uint32_t p, uint32_t j) -> EdgeRef {
        if (p == 0) {
            // O->A, A->B on triangle 0; B->C, C->O on triangle 1
            return j < 2 ? EdgeRef{0, j} : EdgeRef{1, j - 1};
        }
        // triangle 2p = (A,B,C), triangle 2p+1 = (C,O,A)
        switch (j) {
            case 0: return {2 * p + 1, 1}; // O->A
            case 1: return {2 * p, 0};     // A->B
            case 2: return {2 * p, 1};     // B->C
            default: return {2 * p + 1, 0}; // C->O
        }
    };
    for (const Gluing& g : s.gluings())
        gluings.push_back({slot(g.first.poly, g.first.edge), slot(g.second.poly, g.second.edge)});
    TranslationSurface mixed = make_surface(std::move(tris), std::move(gluings), 7);
    CHECK(stratum(mixed, true).genus == 3);

    CHECK_FALSE(invariant_under_derivative(mixed, Cyclo::root_of_unity(7, 1)));
    // the underlying surface still has the symmetry
    CHECK(find_symmetry(mixed, Cyclo::root_of_unity(7, 1)).has_value());
}

TEST_CASE("quotient by the involution is the model sphere") {
    for (auto spec : {FamilySpec{Family::Polar, 3, 1}, FamilySpec{Family::Polar, 3, 2},
                      FamilySpec{Family::Apolar, 2, 1}, FamilySpec{Family::Dipolar, 3, 2}}) {
        TranslationSurface s = build_family(spec);
        DiagonalTriangulation t = diagonal_triangulation(s);
        DiagonalSymmetries syms = diagonal_symmetries(t, family_eigenvalue(spec));
        ComplexMap eta = complex_map_of(t.cells, t.surface, syms.involution);
        CellComplex q = quotient_complex(t.cells.complex, {eta});
        CHECK(q.euler_characteristic() == 2);
        CHECK(complex_isomorphic(q, model_sphere(family_n(spec))).has_value());
    }
}

TEST_CASE("quotient by involution and rotation leaves two triangles") {
    FamilySpec spec{Family::Polar, 3, 1};
    DiagonalTriangulation t = diagonal_triangulation(build_family(spec));
    DiagonalSymmetries syms = diagonal_symmetries(t, family_eigenvalue(spec));
    CellComplex q = quotient_complex(
        t.cells.complex, {complex_map_of(t.cells, t.surface, syms.involution),
                          complex_map_of(t.cells, t.surface, syms.rotation)});
    CHECK(q.num_faces() == 2);
    CHECK(q.euler_characteristic() == 2);
}

TEST_CASE("quotient by the identity is itself") {
    DiagonalTriangulation t = diagonal_triangulation(testsupport::square_torus());
    ComplexMap id;
    id.vertex_map.resize(t.cells.complex.num_vertices());
    id.edge_map.resize(t.cells.complex.num_edges());
    id.face_map.resize(t.cells.complex.num_faces());
    for (size_t i = 0; i < id.vertex_map.size(); ++i) id.vertex_map[i] = static_cast<int>(i);
    for (size_t i = 0; i < id.edge_map.size(); ++i) id.edge_map[i] = static_cast<int>(i);
    for (size_t i = 0; i < id.face_map.size(); ++i) id.face_map[i] = static_cast<int>(i);
    CellComplex q = quotient_complex(t.cells.complex, {id});
    CHECK(q.num_vertices() == t.cells.complex.num_vertices());
    CHECK(q.num_edges() == t.cells.complex.num_edges());
    CHECK(q.num_faces() == t.cells.complex.num_faces());
}

TEST_CASE("quotient rejects non-automorphisms") {
    DiagonalTriangulation t = diagonal_triangulation(spingon(6, 1));
    ComplexMap bogus;
    bogus.vertex_map.assign(t.cells.complex.num_vertices(), 0);
    bogus.edge_map.assign(t.cells.complex.num_edges(), 0);
    bogus.face_map.assign(t.cells.complex.num_faces(), 0);
    try {
        quotient_complex(t.cells.complex, {bogus});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotAutomorphism);
    }
}

TEST_CASE("the triangulation does not depend on the eigenform") {
    CellComplex t1 = diagonal_triangulation(spingon(7, 1)).cells.complex;
    CellComplex t2 = diagonal_triangulation(spingon(7, 2)).cells.complex;
    CellComplex t3 = diagonal_triangulation(spingon(7, 3)).cells.complex;
    CHECK(complex_isomorphic(t1, t2).has_value());
    CHECK(complex_isomorphic(t1, t3).has_value());

    CellComplex h1 = diagonal_triangulation(half_spingon(6, 1)).cells.complex;
    CellComplex h2 = diagonal_triangulation(half_spingon(6, 2)).cells.complex;
    CHECK(complex_isomorphic(h1, h2).has_value());

    CHECK_FALSE(complex_isomorphic(t1, h1).has_value());
    CHECK_FALSE(complex_isomorphic(model_sphere(6), model_sphere(7)).has_value());
}

TEST_CASE("W vertices map onto the non-pole branch points") {
    FamilySpec spec{Family::Polar, 2, 1};
    TranslationSurface s = build_family(spec);
    DiagonalTriangulation t = diagonal_triangulation(s);
    DiagonalSymmetries syms = diagonal_symmetries(t, family_eigenvalue(spec));
    ComplexMap eta = complex_map_of(t.cells, t.surface, syms.involution);
    CellComplex q = quotient_complex(t.cells.complex, {eta});
    auto iso = complex_isomorphic(q, model_sphere(5));
    REQUIRE(iso.has_value());
    size_t w = std::count(q.vertex_labels.begin(), q.vertex_labels.end(), "W");
    CHECK(w == 5);
}
