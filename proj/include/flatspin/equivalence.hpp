#pragma once

#include <memory>
#include <optional>

#include "flatspin/delaunay.hpp"

namespace flatspin {

enum class EquivMode { Translation, Rotation, Similarity };

/// Cell bijection between two canonical decompositions: cell i of the source
/// maps to cell_map[i] of the target, edge e to (e + edge_offset[i]) mod n.
struct CellMatching {
    std::vector<int> cell_map;
    std::vector<int> edge_offset;
};

// All label-structure-preserving matchings from A onto B (exact cell shapes
// up to translation). Deterministically ordered by B's starting flag.
std::vector<CellMatching> all_matchings(const CanonicalDecomposition& a,
                                        const CanonicalDecomposition& b);

std::optional<CellMatching> translation_equivalent(const TranslationSurface& a,
                                                   const TranslationSurface& b);

// Factor c with transform(B, c) translation-equivalent to A. Candidates are
// ratios of A's canonical seed edge vector to B's Delaunay edge vectors; in
// rotation mode only exact-unit factors are tried, in translation mode only 1.
std::optional<Cyclo> equivalent_up_to(const TranslationSurface& a, const TranslationSurface& b,
                                      EquivMode mode);

/// Self-map of a surface with unit-modulus derivative, recorded as a matching
/// of its canonical Delaunay cells onto themselves.
struct AffineSymmetry {
    Cyclo derivative;
    CellMatching matching;
    std::shared_ptr<const CanonicalDecomposition> base;
};

std::optional<AffineSymmetry> find_symmetry(const TranslationSurface& s, const Cyclo& derivative);
std::vector<AffineSymmetry> find_symmetries(std::shared_ptr<const CanonicalDecomposition> base,
                                            const Cyclo& derivative);

AffineSymmetry compose(const AffineSymmetry& outer, const AffineSymmetry& inner);
bool is_identity(const AffineSymmetry& s);

struct FixedPointReport {
    enum class Kind { Vertex, EdgeMidpoint, CellInterior };
    struct Location {
        Kind kind;
        size_t index; // vertex class / edge / cell index in the decomposition
    };
    std::vector<Location> locations;
    size_t count() const { return locations.size(); }
};

// Fixed points of an involution with derivative -1: fixed vertex classes,
// edges mapped to themselves reversed (midpoints), and centrally symmetric
// cells mapped to themselves (centers). NotInvolution unless sigma^2 = id
// and the derivative is -1.
FixedPointReport fixed_points(const AffineSymmetry& sigma);

// An involution with derivative -1 and exactly 2g+2 fixed points, if any.
std::optional<std::pair<AffineSymmetry, FixedPointReport>> is_hyperelliptic_flat(
    const TranslationSurface& s);

} // namespace flatspin
