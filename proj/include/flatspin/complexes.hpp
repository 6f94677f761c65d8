#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatspin/equivalence.hpp"
#include "flatspin/surface.hpp"

namespace flatspin {

/// Combinatorial cell complex of a closed surface (or an orbit quotient):
/// faces are cyclic lists of directed edge uses.
struct CellComplex {
    std::vector<std::string> vertex_labels; // one entry per vertex; "" = unlabeled
    std::vector<std::pair<int, int>> edges; // endpoint vertices (u, v)
    std::vector<std::vector<std::pair<int, bool>>> faces; // (edge, traversed forward?)

    int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_faces() const { return static_cast<int>(faces.size()); }
    long euler_characteristic() const {
        return num_vertices() - num_edges() + num_faces();
    }
    int tail(int edge, bool fwd) const { return fwd ? edges[edge].first : edges[edge].second; }
    int head(int edge, bool fwd) const { return fwd ? edges[edge].second : edges[edge].first; }
    size_t vertex_degree(int v) const;
    void validate() const; // face walks must close up through edge endpoints
    bool labeled() const;
};

/// Cell bijections (automorphism) or orbit projections (quotient) of a complex.
struct ComplexMap {
    std::vector<int> vertex_map, edge_map, face_map;
};

// Polygon-level self-map of a surface: polygon p goes to poly_map[p] with its
// edges rotated by rot[p], coordinates multiplied by the derivative (up to a
// per-polygon translation). Gluing-compatible by construction.
struct PresentationSymmetry {
    std::vector<uint32_t> poly_map;
    std::vector<uint32_t> rot;
};

std::vector<PresentationSymmetry> presentation_symmetries(const TranslationSurface& s,
                                                          const Cyclo& derivative);

/// The surface's glued complex together with its corner classes.
struct SurfaceComplex {
    CellComplex complex;
    std::vector<ConePoint> vertex_classes; // index = complex vertex
    std::vector<std::vector<int>> class_of_corner; // [poly][vertex] -> complex vertex
};

SurfaceComplex complex_of_surface(const TranslationSurface& s,
                                  const std::vector<std::string>& class_labels = {});

ComplexMap complex_map_of(const SurfaceComplex& sc, const TranslationSurface& s,
                          const PresentationSymmetry& sym);

/// Diagonal triangulation of a rhombus-fan surface: each rhombus is cut by
/// both diagonals into four triangles around a new center vertex.
struct DiagonalTriangulation {
    TranslationSurface surface; // the refined flat surface
    SurfaceComplex cells;       // its complex, vertices labeled O / A / W
};

// NotRhombusSurface unless every polygon is a rhombus.
DiagonalTriangulation diagonal_triangulation(const TranslationSurface& s);

// True iff some isometry with sigma's derivative maps the triangulation's
// faces to faces (checked at the polygon presentation level).
bool invariant_under(const DiagonalTriangulation& t, const AffineSymmetry& sigma);
bool invariant_under_derivative(const TranslationSurface& refined, const Cyclo& derivative);

// Orbit complex under the group generated by the given automorphisms;
// NotAutomorphism if a generator does not preserve the incidence structure.
CellComplex quotient_complex(const CellComplex& x, const std::vector<ComplexMap>& generators);

// Triangulated sphere with vertices O, A and W_0..W_{N-1}: the radial rays
// through the 2N-th roots of unity cut it into 2N triangles.
CellComplex model_sphere(unsigned n);

// Label-respecting cell-complex isomorphism (labels compared when both sides
// carry them); tries both orientations.
std::optional<ComplexMap> complex_isomorphic(const CellComplex& x, const CellComplex& y);

} // namespace flatspin
