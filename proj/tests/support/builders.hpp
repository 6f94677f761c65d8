#pragma once

// Shared test helpers: ad-hoc surfaces and randomized relabelings.

#include <random>

#include "flatspin/surface.hpp"

namespace testsupport {

using namespace flatspin;

inline Cyclo gauss_pt(long re_num, long re_den, long im_num, long im_den) {
    return Cyclo(make_rational(re_num, re_den), 4) +
           Cyclo::root_of_unity(4, 1) * Cyclo(make_rational(im_num, im_den), 4);
}

inline Cyclo gauss_pt(long re, long im) { return gauss_pt(re, 1, im, 1); }

inline TranslationSurface square_torus() {
    Polygon sq{{gauss_pt(0, 0), gauss_pt(1, 0), gauss_pt(1, 1), gauss_pt(0, 1)}};
    return make_surface({sq}, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}}, 4);
}

// L-shaped surface from three unit squares (columns of the L at x in [0,2),
// the tall column at x in [0,1)); genus 2 with a single 6pi cone point.
// The square at [1,2)x[0,1) is subdivided into a fan of 4 triangles around
// the given interior point, which becomes a marked point.
inline TranslationSurface l_surface_marked(const Cyclo& interior) {
    Polygon a{{gauss_pt(0, 0), gauss_pt(1, 0), gauss_pt(1, 1), gauss_pt(0, 1)}};
    Polygon c{{gauss_pt(0, 1), gauss_pt(1, 1), gauss_pt(1, 2), gauss_pt(0, 2)}};
    Cyclo corners[4] = {gauss_pt(1, 0), gauss_pt(2, 0), gauss_pt(2, 1), gauss_pt(1, 1)};
    std::vector<Polygon> polys{a, c};
    std::vector<Gluing> gluings{
        {{0, 2}, {1, 0}}, // A top ~ C bottom
        {{1, 2}, {0, 0}}, // C top ~ A bottom (column wraps)
        {{1, 1}, {1, 3}}, // C row wraps alone
    };
    for (uint32_t i = 0; i < 4; ++i) {
        polys.push_back(Polygon{{interior, corners[i], corners[(i + 1) % 4]}});
        gluings.push_back({{2 + i, 2}, {2 + (i + 1) % 4, 0}}); // fan diagonals
    }
    gluings.push_back({{0, 1}, {2 + 3, 1}}); // A right ~ B left
    gluings.push_back({{2 + 1, 1}, {0, 3}}); // B right ~ A left (row wraps)
    gluings.push_back({{2 + 2, 1}, {2 + 0, 1}}); // B top ~ B bottom
    return make_surface(std::move(polys), std::move(gluings), 4);
}

// Random relabeling: permutes polygons, rotates vertex starts, shuffles the
// gluing list and swaps pair order. The same surface, presented differently.
inline TranslationSurface relabel(const TranslationSurface& s, std::mt19937& rng) {
    size_t np = s.polygons().size();
    std::vector<uint32_t> perm(np);
    for (size_t i = 0; i < np; ++i) perm[i] = static_cast<uint32_t>(i);
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<uint32_t> shift(np);
    std::vector<Polygon> polys(np);
    for (size_t p = 0; p < np; ++p) {
        const auto& vs = s.polygons()[p].vertices;
        uint32_t n = static_cast<uint32_t>(vs.size());
        shift[p] = std::uniform_int_distribution<uint32_t>(0, n - 1)(rng);
        Polygon rotated;
        for (uint32_t v = 0; v < n; ++v) rotated.vertices.push_back(vs[(v + shift[p]) % n]);
        polys[perm[p]] = std::move(rotated);
    }
    auto remap = [&](EdgeRef e) {
        uint32_t n = static_cast<uint32_t>(s.polygons()[e.poly].size());
        return EdgeRef{perm[e.poly], (e.edge + n - shift[e.poly]) % n};
    };
    std::vector<Gluing> gluings;
    for (const Gluing& g : s.gluings()) {
        Gluing h{remap(g.first), remap(g.second)};
        if (std::uniform_int_distribution<int>(0, 1)(rng)) std::swap(h.first, h.second);
        gluings.push_back(h);
    }
    std::shuffle(gluings.begin(), gluings.end(), rng);
    return make_surface(std::move(polys), std::move(gluings), s.field_order());
}

} // namespace testsupport
