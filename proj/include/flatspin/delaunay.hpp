#pragma once

#include <array>
#include <string>
#include <vector>

#include "flatspin/surface.hpp"

namespace flatspin {

/// Translation surface all of whose polygons are triangles, in a flat layout
/// suited to edge flips. Each triangle has its own chart (counterclockwise
/// coordinates, well-defined up to translation).
struct TriangulatedSurface {
    unsigned field_order = 1;
    std::vector<std::array<Cyclo, 3>> tris;
    std::vector<std::array<EdgeRef, 3>> partner;
    // original polygon of each triangle (UINT32_MAX once flips mix charts)
    std::vector<uint32_t> source_poly;

    size_t size() const { return tris.size(); }
    Cyclo edge_vector(EdgeRef e) const { return tris[e.poly][(e.edge + 1) % 3] - tris[e.poly][e.edge]; }
    TranslationSurface to_surface() const;
};

// Fan triangulation of every polygon from its vertex 0.
TriangulatedSurface triangulate(const TranslationSurface& s);

// Drop marked points (cone angle exactly 2*pi) by ear-clipping their stars,
// as long as the surface keeps at least one genuine cone point. No-op on
// flat tori, whose marked points are their only vertices.
void remove_marked_vertices(TriangulatedSurface& t);

// Flip until every interior edge satisfies the (non-strict) Delaunay
// condition against the developed opposite vertex.
void make_delaunay(TriangulatedSurface& t);

/// Maximal-cell Delaunay decomposition with a canonical labeling: cocircular
/// triangle fans are merged, and `canonical` is the lexicographically
/// smallest serialization over all starting flags (so two decompositions are
/// translation-isomorphic iff their canonical strings agree).
struct CanonicalDecomposition {
    unsigned field_order = 1;
    std::vector<std::vector<Cyclo>> cells; // developed CCW vertex positions
    std::vector<std::vector<EdgeRef>> partner;
    std::string canonical;
    EdgeRef canonical_seed{0, 0};

    Cyclo edge_vector(EdgeRef e) const {
        const auto& c = cells[e.poly];
        return c[(e.edge + 1) % c.size()] - c[e.edge];
    }
    size_t edge_sides() const {
        size_t n = 0;
        for (const auto& c : cells) n += c.size();
        return n;
    }
};

// Full pipeline: fan triangulation, marked-point removal, flips, cocircular
// merge, canonical labeling. Removing the marked points makes this the
// decomposition of the underlying unmarked differential, the right substrate
// for deciding the cut-and-reglue equivalences.
CanonicalDecomposition delaunay(const TranslationSurface& s);
CanonicalDecomposition delaunay(TriangulatedSurface t, bool keep_marked = false);

// Same pipeline but marked points stay; symmetries found on this
// decomposition are symmetries of the marked surface.
CanonicalDecomposition delaunay_marked(const TranslationSurface& s);

// The decomposition viewed as a translation surface (cells as polygons).
TranslationSurface to_surface(const CanonicalDecomposition& d);

// Multiply every cell by c (Delaunay decompositions are similarity
// equivariant, so this is the decomposition of the scaled surface). The
// canonical labeling is recomputed only on request; matching searches build
// their own serializations.
CanonicalDecomposition scale(const CanonicalDecomposition& d, const Cyclo& c,
                             bool canonicalize = false);

// cached edge-vector tokens at a given lift order, [cell][edge]
using TokenTable = std::vector<std::vector<std::string>>;
TokenTable edge_token_table(const CanonicalDecomposition& d, unsigned lift_order);

// Serialization of the labeled complex explored from one starting flag, with
// coordinates lifted to the given field order.
std::string serialize_from(const CanonicalDecomposition& d, EdgeRef seed, unsigned lift_order);
std::string serialize_from(const CanonicalDecomposition& d, EdgeRef seed, const TokenTable& tokens);

std::pair<std::string, EdgeRef> canonical_form(const CanonicalDecomposition& d, unsigned lift_order);

unsigned decomposition_genus(const CanonicalDecomposition& d);

std::vector<ConePoint> decomposition_vertices(const CanonicalDecomposition& d);

} // namespace flatspin
