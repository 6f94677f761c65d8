#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatspin/cyclotomic.hpp"

namespace flatspin {

/// Strictly convex, positively oriented polygon given by its vertices.
struct Polygon {
    std::vector<Cyclo> vertices;

    size_t size() const { return vertices.size(); }
    // edge e runs from vertex e to vertex e+1 (cyclically)
    Cyclo edge_vector(size_t e) const {
        return vertices[(e + 1) % vertices.size()] - vertices[e];
    }
};

struct EdgeRef {
    uint32_t poly = 0;
    uint32_t edge = 0;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Identifies first with second reversed; the edge vectors are exact negatives.
struct Gluing {
    EdgeRef first, second;
};

// Closed translation surface: polygons with every edge glued to a parallel
// opposite edge by translation. Validated on construction, immutable after.
class TranslationSurface {
public:
    static TranslationSurface make(std::vector<Polygon> polygons, std::vector<Gluing> gluings,
                                   unsigned field_order);

    const std::vector<Polygon>& polygons() const { return polygons_; }
    const std::vector<Gluing>& gluings() const { return gluings_; }
    unsigned field_order() const { return field_order_; }

    EdgeRef partner(EdgeRef e) const { return partner_[e.poly][e.edge]; }
    // index of the gluing containing edge e, and whether e is its first side
    std::pair<size_t, bool> gluing_of(EdgeRef e) const { return gluing_index_[e.poly][e.edge]; }

private:
    TranslationSurface() = default;
    std::vector<Polygon> polygons_;
    std::vector<Gluing> gluings_;
    unsigned field_order_ = 1;
    std::vector<std::vector<EdgeRef>> partner_;
    std::vector<std::vector<std::pair<size_t, bool>>> gluing_index_;
};

using Corner = std::pair<uint32_t, uint32_t>; // (polygon, vertex)

/// One singular (or marked) point: the cycle of polygon corners meeting there
/// and the total cone angle 2*pi*angle_multiple.
struct ConePoint {
    std::vector<Corner> corners;
    unsigned angle_multiple = 0; // m >= 1; zero order is m-1
};

struct StratumSignature {
    std::vector<unsigned> orders; // sorted descending
    unsigned genus = 0;

    friend bool operator==(const StratumSignature&, const StratumSignature&) = default;
    std::string to_string() const; // e.g. "H(2,2)"
};

TranslationSurface make_surface(std::vector<Polygon> polygons, std::vector<Gluing> gluings,
                                unsigned field_order);

std::vector<ConePoint> cone_points(const TranslationSurface& s);

// Zero orders {m-1}; order-0 entries dropped unless include_zero_orders.
// Genus is cross-checked against the Euler characteristic of the glued complex.
StratumSignature stratum(const TranslationSurface& s, bool include_zero_orders = false);

unsigned surface_genus(const TranslationSurface& s);

// Total area, exact and real; lives in Q(zeta_lcm(field,4)).
Cyclo area(const TranslationSurface& s);

TranslationSurface transform(const TranslationSurface& s, const Cyclo& c);

TranslationSurface lift_surface(const TranslationSurface& s, unsigned new_order);

// Cone-angle machinery shared with the triangulated-surface layer: given
// polygons (as vertex lists) and an edge-partner function, group corners into
// cycles and count the full turns of each cycle.
std::vector<ConePoint> corner_cycles(const std::vector<std::vector<Cyclo>>& polys,
                                     const std::vector<std::vector<EdgeRef>>& partner,
                                     unsigned field_order);

// angle of one corner cycle as a multiple of 2*pi, counted against a
// reference direction; exposed for the reference-independence property test
unsigned cycle_angle_multiple(const std::vector<std::vector<Cyclo>>& polys,
                              const std::vector<Corner>& cycle, const Cyclo& reference);

// A direction not parallel to any edge of the given polygons (tries powers
// of zeta_{4M}).
Cyclo generic_direction(const std::vector<std::vector<Cyclo>>& polys, unsigned field_order,
                        unsigned skip = 0);

} // namespace flatspin
