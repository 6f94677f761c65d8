#include "flatspin/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace flatspin {

namespace {

void validate_polygon(const Polygon& poly, size_t index) {
    size_t n = poly.size();
    if (n < 3)
        fail(Errc::NonConvexPolygon, "polygon " + std::to_string(index) + " has fewer than 3 vertices");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (poly.vertices[i] == poly.vertices[j])
                fail(Errc::NonConvexPolygon,
                     "polygon " + std::to_string(index) + " repeats a vertex");
    for (size_t i = 0; i < n; ++i) {
        if (orientation(poly.vertices[i], poly.vertices[(i + 1) % n], poly.vertices[(i + 2) % n]) != 1)
            fail(Errc::NonConvexPolygon,
                 "polygon " + std::to_string(index) + " is not strictly convex and positively oriented");
    }
}

// The edge directions of a strictly convex positively oriented polygon turn
// through exactly one full revolution. Counting crossings of a generic
// reference direction rejects multiply-wound vertex lists (all of whose
// consecutive triples still turn left).
void validate_winding(const Polygon& poly, size_t index, const Cyclo& reference) {
    size_t n = poly.size();
    unsigned crossings = 0;
    for (size_t i = 0; i < n; ++i) {
        Cyclo u = poly.edge_vector(i);
        Cyclo w = poly.edge_vector((i + 1) % n);
        int cu = cross_sign(u, reference);
        if (cu == 0 && dot_sign(u, reference) > 0) {
            ++crossings;
            continue;
        }
        if (cu > 0 && cross_sign(reference, w) > 0) ++crossings;
    }
    if (crossings != 1)
        fail(Errc::NonConvexPolygon, "polygon " + std::to_string(index) + " winds more than once");
}

} // namespace

TranslationSurface TranslationSurface::make(std::vector<Polygon> polygons,
                                            std::vector<Gluing> gluings, unsigned field_order) {
    TranslationSurface s;
    if (polygons.empty()) fail(Errc::Disconnected, "surface with no polygons");
    for (auto& poly : polygons)
        for (auto& v : poly.vertices)
            if (field_order % v.order() == 0)
                v = v.lifted(field_order);
            else
                fail(Errc::Internal, "vertex coordinate order does not divide the surface field order");

    for (size_t p = 0; p < polygons.size(); ++p) validate_polygon(polygons[p], p);

    {
        std::vector<std::vector<Cyclo>> polys;
        for (const auto& poly : polygons) polys.push_back(poly.vertices);
        Cyclo ref = generic_direction(polys, field_order);
        for (size_t p = 0; p < polygons.size(); ++p) validate_winding(polygons[p], p, ref);
    }

    s.partner_.resize(polygons.size());
    s.gluing_index_.resize(polygons.size());
    for (size_t p = 0; p < polygons.size(); ++p) {
        s.partner_[p].resize(polygons[p].size());
        s.gluing_index_[p].assign(polygons[p].size(), {SIZE_MAX, false});
    }

    auto in_range = [&](EdgeRef e) {
        return e.poly < polygons.size() && e.edge < polygons[e.poly].size();
    };
    std::vector<std::vector<bool>> used(polygons.size());
    for (size_t p = 0; p < polygons.size(); ++p) used[p].assign(polygons[p].size(), false);

    for (size_t g = 0; g < gluings.size(); ++g) {
        const Gluing& gl = gluings[g];
        if (!in_range(gl.first) || !in_range(gl.second))
            fail(Errc::UnmatchedEdge, "gluing " + std::to_string(g) + " references a missing edge");
        if (gl.first == gl.second)
            fail(Errc::UnmatchedEdge, "gluing " + std::to_string(g) + " pairs an edge with itself");
        for (EdgeRef e : {gl.first, gl.second}) {
            if (used[e.poly][e.edge])
                fail(Errc::UnmatchedEdge, "edge (" + std::to_string(e.poly) + "," +
                                              std::to_string(e.edge) + ") appears in two gluings");
            used[e.poly][e.edge] = true;
        }
        Cyclo v1 = polygons[gl.first.poly].edge_vector(gl.first.edge);
        Cyclo v2 = polygons[gl.second.poly].edge_vector(gl.second.edge);
        if (!(v1 + v2).is_zero())
            fail(Errc::EdgeVectorMismatch,
                 "gluing " + std::to_string(g) + " pairs edges that are not exact negatives");
        s.partner_[gl.first.poly][gl.first.edge] = gl.second;
        s.partner_[gl.second.poly][gl.second.edge] = gl.first;
        s.gluing_index_[gl.first.poly][gl.first.edge] = {g, true};
        s.gluing_index_[gl.second.poly][gl.second.edge] = {g, false};
    }
    for (size_t p = 0; p < polygons.size(); ++p)
        for (size_t e = 0; e < polygons[p].size(); ++e)
            if (!used[p][e])
                fail(Errc::UnmatchedEdge,
                     "edge (" + std::to_string(p) + "," + std::to_string(e) + ") is unglued");

    // connectivity over the gluing graph
    std::vector<bool> seen(polygons.size(), false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        size_t p = stack.back();
        stack.pop_back();
        for (size_t e = 0; e < polygons[p].size(); ++e) {
            size_t q = s.partner_[p][e].poly;
            if (!seen[q]) {
                seen[q] = true;
                stack.push_back(q);
            }
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        fail(Errc::Disconnected, "gluing graph does not connect all polygons");

    s.polygons_ = std::move(polygons);
    s.gluings_ = std::move(gluings);
    s.field_order_ = field_order;
    return s;
}

TranslationSurface make_surface(std::vector<Polygon> polygons, std::vector<Gluing> gluings,
                                unsigned field_order) {
    return TranslationSurface::make(std::move(polygons), std::move(gluings), field_order);
}

// ---------------------------------------------------------------------------
// cone points

Cyclo generic_direction(const std::vector<std::vector<Cyclo>>& polys, unsigned field_order,
                        unsigned skip) {
    std::vector<Cyclo> edges;
    for (const auto& poly : polys)
        for (size_t e = 0; e < poly.size(); ++e)
            edges.push_back(poly[(e + 1) % poly.size()] - poly[e]);
    // each edge direction is parallel to at most 2 of the big-th roots of
    // unity, so a large enough root order always leaves candidates over
    unsigned big = 4 * field_order;
    while (big <= 2 * edges.size() + 2 + 2 * skip) big *= 2;
    unsigned found = 0;
    for (unsigned j = 1; j < big; ++j) {
        Cyclo d = Cyclo::root_of_unity(big, j);
        bool ok = true;
        for (const auto& e : edges)
            if (cross_sign(d, e) == 0) {
                ok = false;
                break;
            }
        if (ok) {
            if (found == skip) return d;
            ++found;
        }
    }
    fail(Errc::Internal, "no generic direction found");
}

unsigned cycle_angle_multiple(const std::vector<std::vector<Cyclo>>& polys,
                              const std::vector<Corner>& cycle, const Cyclo& reference) {
    unsigned m = 0;
    for (const Corner& c : cycle) {
        const auto& poly = polys[c.first];
        size_t n = poly.size();
        Cyclo u = poly[(c.second + 1) % n] - poly[c.second];          // outgoing
        Cyclo w = poly[(c.second + n - 1) % n] - poly[c.second];      // reversed incoming
        int cu = cross_sign(u, reference);
        if (cu == 0 && dot_sign(u, reference) > 0) {
            ++m;
            continue;
        }
        if (cu > 0 && cross_sign(reference, w) > 0) ++m;
    }
    if (m == 0) fail(Errc::Internal, "corner cycle with zero total angle");
    return m;
}

std::vector<ConePoint> corner_cycles(const std::vector<std::vector<Cyclo>>& polys,
                                     const std::vector<std::vector<EdgeRef>>& partner,
                                     unsigned field_order) {
    std::vector<std::vector<bool>> visited(polys.size());
    for (size_t p = 0; p < polys.size(); ++p) visited[p].assign(polys[p].size(), false);

    Cyclo reference = generic_direction(polys, field_order);
    std::vector<ConePoint> out;
    for (size_t p = 0; p < polys.size(); ++p) {
        for (size_t v = 0; v < polys[p].size(); ++v) {
            if (visited[p][v]) continue;
            ConePoint pt;
            Corner cur{static_cast<uint32_t>(p), static_cast<uint32_t>(v)};
            do {
                visited[cur.first][cur.second] = true;
                pt.corners.push_back(cur);
                size_t n = polys[cur.first].size();
                EdgeRef incoming{cur.first, static_cast<uint32_t>((cur.second + n - 1) % n)};
                EdgeRef next = partner[incoming.poly][incoming.edge];
                cur = {next.poly, next.edge};
            } while (!(cur.first == p && cur.second == v));
            pt.angle_multiple = cycle_angle_multiple(polys, pt.corners, reference);
            out.push_back(std::move(pt));
        }
    }
    return out;
}

std::vector<ConePoint> cone_points(const TranslationSurface& s) {
    std::vector<std::vector<Cyclo>> polys;
    for (const auto& poly : s.polygons()) polys.push_back(poly.vertices);
    std::vector<std::vector<EdgeRef>> partner(polys.size());
    for (size_t p = 0; p < polys.size(); ++p) {
        partner[p].resize(polys[p].size());
        for (size_t e = 0; e < polys[p].size(); ++e)
            partner[p][e] = s.partner({static_cast<uint32_t>(p), static_cast<uint32_t>(e)});
    }
    return corner_cycles(polys, partner, s.field_order());
}

StratumSignature stratum(const TranslationSurface& s, bool include_zero_orders) {
    auto pts = cone_points(s);
    long total = 0;
    std::vector<unsigned> orders;
    for (const auto& pt : pts) {
        total += pt.angle_multiple - 1;
        if (pt.angle_multiple > 1 || include_zero_orders) orders.push_back(pt.angle_multiple - 1);
    }
    if (total % 2 != 0) fail(Errc::Internal, "odd total zero order");
    unsigned genus = static_cast<unsigned>(total / 2 + 1);

    // independent genus via the Euler characteristic of the glued complex
    size_t corners = 0;
    for (const auto& poly : s.polygons()) corners += poly.size();
    long euler = static_cast<long>(pts.size()) - static_cast<long>(s.gluings().size()) +
                 static_cast<long>(s.polygons().size());
    if (corners != 2 * s.gluings().size() || euler != 2 - 2 * static_cast<long>(genus))
        fail(Errc::Internal, "Gauss-Bonnet and Euler characteristic disagree");

    std::sort(orders.begin(), orders.end(), std::greater<>());
    return {std::move(orders), genus};
}

unsigned surface_genus(const TranslationSurface& s) { return stratum(s).genus; }

std::string StratumSignature::to_string() const {
    std::ostringstream os;
    os << "H(";
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) os << ",";
        os << orders[i];
    }
    os << ")";
    return os.str();
}

Cyclo area(const TranslationSurface& s) {
    // 2*Area = sum Im(conj(z_i) * z_{i+1}); divide by 2i in Q(zeta_lcm(M,4))
    Cyclo acc = Cyclo::zero(s.field_order());
    for (const auto& poly : s.polygons()) {
        size_t n = poly.size();
        for (size_t i = 0; i < n; ++i)
            acc = acc + poly.vertices[i].conj() * poly.vertices[(i + 1) % n];
    }
    Cyclo diff = acc - acc.conj(); // 4i * Area
    unsigned m = lcm_order(s.field_order(), 4);
    Cyclo denom = Cyclo(Rational(4)) * Cyclo::root_of_unity(4, 1);
    Cyclo result = diff.lifted(m) / denom;
    if (result.sign_imag() != 0 || result.sign_real() != 1)
        fail(Errc::Internal, "area must be real and positive");
    return result;
}

TranslationSurface transform(const TranslationSurface& s, const Cyclo& c) {
    if (c.is_zero()) fail(Errc::DivisionByZero, "transform by zero collapses the surface");
    unsigned m = lcm_order(s.field_order(), c.order());
    std::vector<Polygon> polys = s.polygons();
    for (auto& poly : polys)
        for (auto& v : poly.vertices) v = v.lifted(m) * c;
    return TranslationSurface::make(std::move(polys), s.gluings(), m);
}

TranslationSurface lift_surface(const TranslationSurface& s, unsigned new_order) {
    if (new_order == s.field_order()) return s;
    return TranslationSurface::make(s.polygons(), s.gluings(), new_order);
}

} // namespace flatspin
