#include "flatspin/equivalence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flatspin {

namespace {

// parallel BFS discovery from a seed flag; returns (cell order, entries)
void bfs_order(const CanonicalDecomposition& d, EdgeRef seed, std::vector<int>& discovered,
               std::vector<uint32_t>& entry, std::vector<uint32_t>& order_list) {
    discovered.assign(d.cells.size(), -1);
    entry.assign(d.cells.size(), 0);
    order_list.clear();
    discovered[seed.poly] = 0;
    entry[seed.poly] = seed.edge;
    order_list.push_back(seed.poly);
    for (size_t head = 0; head < order_list.size(); ++head) {
        uint32_t cell = order_list[head];
        uint32_t n = static_cast<uint32_t>(d.cells[cell].size());
        for (uint32_t j = 0; j < n; ++j) {
            EdgeRef p = d.partner[cell][(entry[cell] + j) % n];
            if (discovered[p.poly] == -1) {
                discovered[p.poly] = static_cast<int>(order_list.size());
                entry[p.poly] = p.edge;
                order_list.push_back(p.poly);
            }
        }
    }
}

CellMatching matching_from_seeds(const CanonicalDecomposition& a, EdgeRef seed_a,
                                 const CanonicalDecomposition& b, EdgeRef seed_b) {
    std::vector<int> da, db;
    std::vector<uint32_t> ea, eb, la, lb;
    bfs_order(a, seed_a, da, ea, la);
    bfs_order(b, seed_b, db, eb, lb);
    if (la.size() != lb.size()) fail(Errc::Internal, "matching with mismatched cell counts");
    CellMatching m;
    m.cell_map.assign(a.cells.size(), -1);
    m.edge_offset.assign(a.cells.size(), 0);
    for (size_t i = 0; i < la.size(); ++i) {
        uint32_t ca = la[i], cb = lb[i];
        uint32_t n = static_cast<uint32_t>(a.cells[ca].size());
        if (b.cells[cb].size() != n) fail(Errc::Internal, "matching with mismatched cell sizes");
        m.cell_map[ca] = static_cast<int>(cb);
        m.edge_offset[ca] = (eb[cb] + n - ea[ca]) % n;
    }
    return m;
}

} // namespace

std::vector<CellMatching> all_matchings(const CanonicalDecomposition& a,
                                        const CanonicalDecomposition& b) {
    std::vector<CellMatching> out;
    if (a.cells.size() != b.cells.size() || a.edge_sides() != b.edge_sides()) return out;
    unsigned lift = lcm_order(a.field_order, b.field_order);
    auto [target, seed_a] = canonical_form(a, lift);
    TokenTable tokens = edge_token_table(b, lift);
    for (uint32_t i = 0; i < b.cells.size(); ++i)
        for (uint32_t e = 0; e < b.cells[i].size(); ++e)
            if (serialize_from(b, {i, e}, tokens) == target)
                out.push_back(matching_from_seeds(a, seed_a, b, {i, e}));
    return out;
}

std::optional<CellMatching> translation_equivalent(const TranslationSurface& a,
                                                   const TranslationSurface& b) {
    auto ms = all_matchings(delaunay(a), delaunay(b));
    if (ms.empty()) return std::nullopt;
    return ms.front();
}

namespace {

// exact area of a decomposition, in Q(zeta_lcm(field, 4))
Cyclo decomposition_area(const CanonicalDecomposition& d) {
    Cyclo acc = Cyclo::zero(d.field_order);
    for (const auto& cell : d.cells) {
        size_t n = cell.size();
        for (size_t i = 0; i < n; ++i) acc = acc + cell[i].conj() * cell[(i + 1) % n];
    }
    Cyclo diff = acc - acc.conj();
    return diff.lifted(lcm_order(d.field_order, 4)) /
           (Cyclo(Rational(4)) * Cyclo::root_of_unity(4, 1));
}

} // namespace

std::optional<Cyclo> equivalent_up_to(const TranslationSurface& a, const TranslationSurface& b,
                                      EquivMode mode) {
    CanonicalDecomposition da = delaunay(a), db = delaunay(b);
    if (da.cells.size() != db.cells.size() || da.edge_sides() != db.edge_sides())
        return std::nullopt;
    if (mode == EquivMode::Translation) {
        if (all_matchings(da, db).empty()) return std::nullopt;
        return Cyclo::one(lcm_order(da.field_order, db.field_order));
    }
    unsigned lift = lcm_order(da.field_order, db.field_order);
    auto [target, seed_a] = canonical_form(da, lift);
    Cyclo u = da.edge_vector(seed_a).lifted(lift);
    Cyclo area_a = decomposition_area(da);
    Cyclo area_b = decomposition_area(db);

    std::set<std::string> seen;
    for (uint32_t i = 0; i < db.cells.size(); ++i) {
        for (uint32_t e = 0; e < db.cells[i].size(); ++e) {
            Cyclo v = db.edge_vector({i, e}).lifted(lift);
            Cyclo c = u / v;
            if (!seen.insert(c.token()).second) continue;
            if (mode == EquivMode::Rotation && !(c * c.conj()).is_one()) continue;
            // scaling by c multiplies area by |c|^2; mismatches are cheap to reject
            if (!(c * c.conj() * area_b == area_a)) continue;
            CanonicalDecomposition scaled = scale(db, c);
            TokenTable tokens = edge_token_table(scaled, lift);
            for (uint32_t si = 0; si < scaled.cells.size(); ++si)
                for (uint32_t se = 0; se < scaled.cells[si].size(); ++se)
                    if (serialize_from(scaled, {si, se}, tokens) == target) return c;
        }
    }
    return std::nullopt;
}

std::vector<AffineSymmetry> find_symmetries(std::shared_ptr<const CanonicalDecomposition> base,
                                            const Cyclo& derivative) {
    if (!(derivative * derivative.conj()).is_one())
        fail(Errc::Internal, "symmetry derivative must have unit modulus exactly");
    std::vector<AffineSymmetry> out;
    CanonicalDecomposition image = scale(*base, derivative);
    for (CellMatching& m : all_matchings(image, *base))
        out.push_back({derivative, std::move(m), base});
    return out;
}

std::optional<AffineSymmetry> find_symmetry(const TranslationSurface& s, const Cyclo& derivative) {
    auto base = std::make_shared<CanonicalDecomposition>(delaunay_marked(s));
    auto syms = find_symmetries(base, derivative);
    if (syms.empty()) return std::nullopt;
    return syms.front();
}

AffineSymmetry compose(const AffineSymmetry& outer, const AffineSymmetry& inner) {
    if (outer.base->canonical != inner.base->canonical)
        fail(Errc::Internal, "composing symmetries of different surfaces");
    const auto& d = *inner.base;
    AffineSymmetry out;
    out.derivative = outer.derivative * inner.derivative;
    out.base = inner.base;
    size_t m = d.cells.size();
    out.matching.cell_map.resize(m);
    out.matching.edge_offset.resize(m);
    for (size_t i = 0; i < m; ++i) {
        int j = inner.matching.cell_map[i];
        out.matching.cell_map[i] = outer.matching.cell_map[j];
        out.matching.edge_offset[i] =
            static_cast<int>((inner.matching.edge_offset[i] + outer.matching.edge_offset[j]) %
                             d.cells[i].size());
    }
    return out;
}

bool is_identity(const AffineSymmetry& s) {
    if (!s.derivative.is_one()) return false;
    for (size_t i = 0; i < s.matching.cell_map.size(); ++i)
        if (s.matching.cell_map[i] != static_cast<int>(i) || s.matching.edge_offset[i] != 0)
            return false;
    return true;
}

FixedPointReport fixed_points(const AffineSymmetry& sigma) {
    if (!(sigma.derivative == Cyclo(Rational(-1))))
        fail(Errc::NotInvolution, "fixed-point counting expects derivative -1");
    if (!is_identity(compose(sigma, sigma)))
        fail(Errc::NotInvolution, "symmetry does not square to the identity");
    const CanonicalDecomposition& d = *sigma.base;

    auto image = [&](uint32_t cell, uint32_t e) -> EdgeRef {
        uint32_t n = static_cast<uint32_t>(d.cells[cell].size());
        return {static_cast<uint32_t>(sigma.matching.cell_map[cell]),
                static_cast<uint32_t>((e + sigma.matching.edge_offset[cell]) % n)};
    };

    FixedPointReport report;

    // vertex classes: corners are in bijection with edges (corner v starts edge v)
    auto classes = decomposition_vertices(d);
    std::map<Corner, size_t> class_of;
    for (size_t ci = 0; ci < classes.size(); ++ci)
        for (const Corner& c : classes[ci].corners) class_of[c] = ci;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        const Corner& rep = classes[ci].corners.front();
        EdgeRef img = image(rep.first, rep.second);
        if (class_of.at({img.poly, img.edge}) == ci)
            report.locations.push_back({FixedPointReport::Kind::Vertex, ci});
    }
    // edges mapped to themselves reversed
    size_t edge_index = 0;
    for (uint32_t i = 0; i < d.cells.size(); ++i)
        for (uint32_t e = 0; e < d.cells[i].size(); ++e) {
            EdgeRef self{i, e};
            if (d.partner[i][e] < self) continue;
            if (image(i, e) == d.partner[i][e])
                report.locations.push_back({FixedPointReport::Kind::EdgeMidpoint, edge_index});
            ++edge_index;
        }
    // cells mapped to themselves (unique interior fixed point of the central symmetry)
    for (size_t i = 0; i < d.cells.size(); ++i)
        if (sigma.matching.cell_map[i] == static_cast<int>(i))
            report.locations.push_back({FixedPointReport::Kind::CellInterior, i});
    return report;
}

std::optional<std::pair<AffineSymmetry, FixedPointReport>> is_hyperelliptic_flat(
    const TranslationSurface& s) {
    auto base = std::make_shared<CanonicalDecomposition>(delaunay_marked(s));
    unsigned genus = decomposition_genus(*base);
    if (genus < 2) return std::nullopt;
    for (AffineSymmetry& sigma : find_symmetries(base, Cyclo(Rational(-1)))) {
        if (!is_identity(compose(sigma, sigma))) continue;
        FixedPointReport report = fixed_points(sigma);
        if (report.count() == 2 * static_cast<size_t>(genus) + 2)
            return std::make_pair(std::move(sigma), std::move(report));
    }
    return std::nullopt;
}

} // namespace flatspin
