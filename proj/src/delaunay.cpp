#include "flatspin/delaunay.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace flatspin {

namespace {

constexpr uint32_t kNoSource = UINT32_MAX;

// translation carrying the partner triangle across edge e into e's chart
Cyclo develop_translation(const TriangulatedSurface& t, EdgeRef e) {
    EdgeRef p = t.partner[e.poly][e.edge];
    return t.tris[e.poly][e.edge] - t.tris[p.poly][(p.edge + 1) % 3];
}

// opposite vertex of the partner triangle, developed into e's chart
Cyclo developed_opposite(const TriangulatedSurface& t, EdgeRef e) {
    EdgeRef p = t.partner[e.poly][e.edge];
    return t.tris[p.poly][(p.edge + 2) % 3] + develop_translation(t, e);
}

int delaunay_state(const TriangulatedSurface& t, EdgeRef e) {
    const auto& tri = t.tris[e.poly];
    Cyclo s = developed_opposite(t, e);
    return incircle(tri[e.edge], tri[(e.edge + 1) % 3], tri[(e.edge + 2) % 3], s);
}

} // namespace

TranslationSurface TriangulatedSurface::to_surface() const {
    std::vector<Polygon> polys;
    for (const auto& tri : tris) polys.push_back(Polygon{{tri[0], tri[1], tri[2]}});
    std::vector<Gluing> gluings;
    for (uint32_t i = 0; i < tris.size(); ++i)
        for (uint32_t e = 0; e < 3; ++e) {
            EdgeRef self{i, e};
            if (partner[i][e] < self) continue;
            gluings.push_back({self, partner[i][e]});
        }
    return make_surface(std::move(polys), std::move(gluings), field_order);
}

TriangulatedSurface triangulate(const TranslationSurface& s) {
    TriangulatedSurface t;
    t.field_order = s.field_order();

    // original edge -> (triangle, edge) after fanning
    std::vector<std::vector<EdgeRef>> slot(s.polygons().size());
    for (uint32_t p = 0; p < s.polygons().size(); ++p) {
        const Polygon& poly = s.polygons()[p];
        uint32_t n = static_cast<uint32_t>(poly.size());
        slot[p].resize(n);
        uint32_t base = static_cast<uint32_t>(t.tris.size());
        for (uint32_t i = 1; i + 1 < n; ++i) {
            t.tris.push_back({poly.vertices[0], poly.vertices[i], poly.vertices[i + 1]});
            t.partner.push_back({EdgeRef{}, EdgeRef{}, EdgeRef{}});
            t.source_poly.push_back(p);
        }
        for (uint32_t i = 1; i + 1 < n; ++i) {
            uint32_t ti = base + i - 1;
            slot[p][i] = {ti, 1}; // edge v_i -> v_{i+1}
            if (i > 1) {
                // interior fan edges: v0 -> v_i of triangle i matches
                // v_i -> v0 of triangle i-1
                t.partner[ti][0] = {ti - 1, 2};
                t.partner[ti - 1][2] = {ti, 0};
            }
        }
        slot[p][0] = {base, 0};
        slot[p][n - 1] = {base + n - 3, 2};
    }
    for (const Gluing& g : s.gluings()) {
        EdgeRef a = slot[g.first.poly][g.first.edge];
        EdgeRef b = slot[g.second.poly][g.second.edge];
        t.partner[a.poly][a.edge] = b;
        t.partner[b.poly][b.edge] = a;
    }
    return t;
}

// ---------------------------------------------------------------------------
// marked-point removal

namespace {

std::vector<ConePoint> tri_corner_cycles(const TriangulatedSurface& t) {
    std::vector<std::vector<Cyclo>> polys;
    for (const auto& tri : t.tris) polys.push_back({tri[0], tri[1], tri[2]});
    std::vector<std::vector<EdgeRef>> partner(t.tris.size());
    for (size_t i = 0; i < t.tris.size(); ++i)
        partner[i] = {t.partner[i][0], t.partner[i][1], t.partner[i][2]};
    return corner_cycles(polys, partner, t.field_order);
}

// Flips and the 3-to-1 move, both shared with the Delaunay pass.

// core flip, no validity check: replaces edge e of t1 and its partner in t2
// by the cross diagonal of the developed quad; pushes the four outer slots
// into `touched` when given
void flip_edge(TriangulatedSurface& t, EdgeRef e, std::deque<EdgeRef>* touched) {
    uint32_t t1 = e.poly, e1 = e.edge;
    EdgeRef pe = t.partner[t1][e1];
    uint32_t t2 = pe.poly, f = pe.edge;
    if (t1 == t2) fail(Errc::Internal, "triangle glued to itself");

    Cyclo P = t.tris[t1][e1];
    Cyclo Q = t.tris[t1][(e1 + 1) % 3];
    Cyclo R = t.tris[t1][(e1 + 2) % 3];
    Cyclo S = developed_opposite(t, e);

    // outer slots of the quad and their partners (may reference each other)
    EdgeRef oQR{t1, (e1 + 1) % 3}, oRP{t1, (e1 + 2) % 3};
    EdgeRef oPS{t2, (f + 1) % 3}, oSQ{t2, (f + 2) % 3};
    std::array<EdgeRef, 4> outer{oQR, oRP, oPS, oSQ};
    std::array<EdgeRef, 4> outer_new{EdgeRef{t2, 1}, EdgeRef{t1, 2}, EdgeRef{t1, 0},
                                     EdgeRef{t2, 0}};
    std::array<EdgeRef, 4> outer_partner{};
    for (int i = 0; i < 4; ++i) outer_partner[i] = t.partner[outer[i].poly][outer[i].edge];

    // replacement triangles: t1 = (P,S,R), t2 = (S,Q,R), new shared edge S-R
    t.tris[t1] = {P, S, R};
    t.tris[t2] = {S, Q, R};
    t.source_poly[t1] = t.source_poly[t2] = kNoSource;
    t.partner[t1][1] = {t2, 2};
    t.partner[t2][2] = {t1, 1};
    for (int i = 0; i < 4; ++i) {
        EdgeRef target = outer_partner[i];
        // compare against the old slot ids only; new slots may reuse them
        for (int j = 0; j < 4; ++j)
            if (target == outer[j]) {
                target = outer_new[j];
                break;
            }
        t.partner[outer_new[i].poly][outer_new[i].edge] = target;
        t.partner[target.poly][target.edge] = outer_new[i];
    }
    if (touched)
        for (int i = 0; i < 4; ++i) touched->push_back(outer_new[i]);
}

// the developed quad must be strictly convex for the cross diagonal to exist
bool flip_is_valid(const TriangulatedSurface& t, EdgeRef e) {
    uint32_t t1 = e.poly, e1 = e.edge;
    Cyclo P = t.tris[t1][e1];
    Cyclo Q = t.tris[t1][(e1 + 1) % 3];
    Cyclo R = t.tris[t1][(e1 + 2) % 3];
    Cyclo S = developed_opposite(t, e);
    return orientation(P, S, Q) == 1 && orientation(S, Q, R) == 1 && orientation(Q, R, P) == 1 &&
           orientation(R, P, S) == 1;
}

// Removing a cone-angle-2*pi vertex. When each star triangle appears only
// once the star embeds in the surface: develop it, ear-clip the boundary
// polygon and re-glue (handles any degree, including straight crossings).
// When a triangle carries two corners of the class the star is immersed and
// surgery would duplicate area, so flip incident edges until the star
// embeds.

// ear-clip surgery; requires pairwise distinct star triangles
void star_surgery(TriangulatedSurface& t, const std::vector<Corner>& cycle) {
    size_t star = cycle.size();
    std::vector<Cyclo> dev(star, Cyclo::zero(t.field_order));
    for (size_t j = 0; j + 1 < star; ++j) {
        EdgeRef in{cycle[j].first, (cycle[j].second + 2) % 3};
        dev[j + 1] = dev[j] + develop_translation(t, in);
    }
    std::vector<Cyclo> q;
    std::vector<EdgeRef> boundary_slot;
    std::map<EdgeRef, size_t> boundary_index;
    for (size_t j = 0; j < star; ++j) {
        uint32_t tri = cycle[j].first, c = cycle[j].second;
        q.push_back(dev[j] + t.tris[tri][(c + 1) % 3]);
        boundary_slot.push_back({tri, (c + 1) % 3});
        boundary_index[boundary_slot.back()] = j;
    }

    // ring state; each ring edge carries a tag:
    //   tag < star  : original boundary edge `tag`
    //   tag >= star : pending inner edge, slot (new triangle tag-star, edge 2)
    std::vector<size_t> ring_vertex(star), ring_tag(star);
    std::iota(ring_vertex.begin(), ring_vertex.end(), 0);
    std::iota(ring_tag.begin(), ring_tag.end(), 0);

    struct NewTri {
        std::array<Cyclo, 3> v;
        std::array<size_t, 3> tag;
    };
    std::vector<NewTri> new_tris;
    size_t next_pending = star;

    while (ring_vertex.size() > 3) {
        size_t n = ring_vertex.size();
        bool clipped = false;
        for (size_t i = 0; i < n && !clipped; ++i) {
            size_t ip = (i + n - 1) % n, in2 = (i + 1) % n;
            const Cyclo &a = q[ring_vertex[ip]], &b = q[ring_vertex[i]], &c = q[ring_vertex[in2]];
            if (orientation(a, b, c) != 1) continue;
            bool blocked = false;
            for (size_t j = 0; j < n && !blocked; ++j) {
                if (j == i || j == ip || j == in2) continue;
                const Cyclo& x = q[ring_vertex[j]];
                if (orientation(a, b, x) >= 0 && orientation(b, c, x) >= 0 &&
                    orientation(c, a, x) >= 0)
                    blocked = true;
            }
            if (blocked) continue;
            new_tris.push_back(NewTri{{a, b, c}, {ring_tag[ip], ring_tag[i], next_pending}});
            ring_tag[ip] = next_pending++;
            ring_vertex.erase(ring_vertex.begin() + i);
            ring_tag.erase(ring_tag.begin() + i);
            clipped = true;
        }
        if (!clipped) fail(Errc::Internal, "no ear found while removing a marked vertex");
    }
    {
        const Cyclo &a = q[ring_vertex[0]], &b = q[ring_vertex[1]], &c = q[ring_vertex[2]];
        if (orientation(a, b, c) != 1) fail(Errc::Internal, "degenerate final ear");
        new_tris.push_back(NewTri{{a, b, c}, {ring_tag[0], ring_tag[1], ring_tag[2]}});
    }

    // assemble: surviving triangles keep their charts and (remapped) partners
    std::vector<bool> removed(t.size(), false);
    for (const Corner& c : cycle) removed[c.first] = true;
    std::vector<uint32_t> remap(t.size(), kNoSource);
    TriangulatedSurface out;
    out.field_order = t.field_order;
    for (uint32_t i = 0; i < t.size(); ++i) {
        if (removed[i]) continue;
        remap[i] = static_cast<uint32_t>(out.tris.size());
        out.tris.push_back(t.tris[i]);
        out.partner.push_back(t.partner[i]);
        out.source_poly.push_back(t.source_poly[i]);
    }
    uint32_t base = static_cast<uint32_t>(out.tris.size());
    for (uint32_t i = 0; i < base; ++i)
        for (uint32_t e = 0; e < 3; ++e) {
            EdgeRef& p = out.partner[i][e];
            if (remap[p.poly] != kNoSource) p.poly = remap[p.poly];
            // stale refs into the star get overwritten by the boundary pass
        }
    std::vector<EdgeRef> tag_slot(star + new_tris.size());
    for (uint32_t k = 0; k < new_tris.size(); ++k) {
        out.tris.push_back(new_tris[k].v);
        out.partner.push_back({EdgeRef{}, EdgeRef{}, EdgeRef{}});
        out.source_poly.push_back(kNoSource);
        for (uint32_t e = 0; e < 3; ++e) tag_slot[new_tris[k].tag[e]] = {base + k, e};
    }
    for (uint32_t k = 0; k < new_tris.size(); ++k)
        for (uint32_t e = 0; e < 3; ++e) {
            size_t tag = new_tris[k].tag[e];
            if (tag < star) continue;
            EdgeRef producer{base + static_cast<uint32_t>(tag - star), 2};
            EdgeRef consumer = tag_slot[tag];
            if (consumer == producer)
                fail(Errc::Internal, "unconsumed inner edge while removing a vertex");
            out.partner[producer.poly][producer.edge] = consumer;
            out.partner[consumer.poly][consumer.edge] = producer;
        }
    for (size_t j = 0; j < star; ++j) {
        EdgeRef mine = tag_slot[j];
        EdgeRef old_partner = t.partner[boundary_slot[j].poly][boundary_slot[j].edge];
        auto it = boundary_index.find(old_partner);
        EdgeRef target = (it != boundary_index.end())
                             ? tag_slot[it->second]
                             : EdgeRef{remap[old_partner.poly], old_partner.edge};
        if (target.poly == kNoSource)
            fail(Errc::Internal, "star boundary glued to a consumed edge");
        out.partner[mine.poly][mine.edge] = target;
        out.partner[target.poly][target.edge] = mine;
    }
    t = std::move(out);
}

// corner cycle of the vertex holding `start`, walked combinatorially
std::vector<Corner> walk_cycle(const TriangulatedSurface& t, Corner start) {
    std::vector<Corner> cycle;
    Corner cur = start;
    do {
        cycle.push_back(cur);
        EdgeRef incoming{cur.first, (cur.second + 2) % 3};
        EdgeRef next = t.partner[incoming.poly][incoming.edge];
        cur = {next.poly, next.edge};
    } while (!(cur == start));
    return cycle;
}

// one step: surgery when the star embeds (each triangle once), otherwise one
// flip chosen to un-immerse it; the cycle is re-walked from the flipped
// edge's tail, which stays at the vertex
bool shrink_or_remove(TriangulatedSurface& t, std::vector<Corner>& cycle, size_t attempt) {
    if (cycle.size() < 3) fail(Errc::Internal, "marked vertex with fewer than 3 corners");
    std::set<uint32_t> tris_seen;
    bool distinct = true;
    for (const Corner& c : cycle) distinct = tris_seen.insert(c.first).second && distinct;
    if (distinct) {
        star_surgery(t, cycle);
        return true;
    }
    std::set<Corner> in_class(cycle.begin(), cycle.end());
    // prefer flips whose replacement diagonal avoids the vertex class;
    // rotate the scan start so repeated fallbacks cannot ping-pong
    for (int pass = 0; pass < 2; ++pass) {
        for (size_t step = 0; step < cycle.size(); ++step) {
            const Corner& c = cycle[(step + attempt) % cycle.size()];
            EdgeRef e{c.first, c.second};
            if (!flip_is_valid(t, e)) continue;
            if (pass == 0) {
                EdgeRef pe = t.partner[e.poly][e.edge];
                Corner r{e.poly, (e.edge + 2) % 3};
                Corner s{pe.poly, (pe.edge + 2) % 3};
                if (in_class.count(r) || in_class.count(s)) continue;
            }
            flip_edge(t, e, nullptr);
            cycle = walk_cycle(t, {e.poly, 0});
            return false;
        }
    }
    fail(Errc::Internal, "no flippable edge at an immersed marked-vertex star");
}

} // namespace

void remove_marked_vertices(TriangulatedSurface& t) {
    for (;;) {
        auto classes = tri_corner_cycles(t);
        bool has_cone = std::any_of(classes.begin(), classes.end(),
                                    [](const ConePoint& p) { return p.angle_multiple >= 2; });
        if (!has_cone) return;
        // smallest marked star first; small stars are the likeliest to embed
        const ConePoint* chosen = nullptr;
        for (const auto& cls : classes)
            if (cls.angle_multiple == 1 && (!chosen || cls.corners.size() < chosen->corners.size()))
                chosen = &cls;
        if (!chosen) return;
        std::vector<Corner> cycle = chosen->corners;
        size_t budget = 200 + 60 * cycle.size();
        for (size_t attempt = 0; !shrink_or_remove(t, cycle, attempt); ++attempt)
            if (attempt > budget) fail(Errc::Internal, "marked-point removal stalled");
    }
}

// ---------------------------------------------------------------------------
// flips

void make_delaunay(TriangulatedSurface& t) {
    std::deque<EdgeRef> queue;
    for (uint32_t i = 0; i < t.size(); ++i)
        for (uint32_t e = 0; e < 3; ++e) queue.push_back({i, e});
    size_t flips = 0;
    while (!queue.empty()) {
        EdgeRef e = queue.front();
        queue.pop_front();
        if (delaunay_state(t, e) != 1) continue;
        if (++flips > 500000) fail(Errc::Internal, "flip loop exceeded its budget");
        flip_edge(t, e, &queue);
    }
}

// ---------------------------------------------------------------------------
// cocircular merge and canonical labeling

namespace {

struct MergeState {
    std::vector<int> component;       // triangle -> cell index
    std::vector<Cyclo> dev;           // triangle -> translation into the cell chart
    std::vector<std::vector<uint32_t>> members;
};

MergeState merge_components(const TriangulatedSurface& t, const std::vector<std::array<bool, 3>>& degenerate) {
    MergeState st;
    st.component.assign(t.size(), -1);
    st.dev.assign(t.size(), Cyclo::zero(t.field_order));
    for (uint32_t root = 0; root < t.size(); ++root) {
        if (st.component[root] != -1) continue;
        int cell = static_cast<int>(st.members.size());
        st.members.push_back({});
        std::deque<uint32_t> queue{root};
        st.component[root] = cell;
        st.dev[root] = Cyclo::zero(t.field_order);
        while (!queue.empty()) {
            uint32_t i = queue.front();
            queue.pop_front();
            st.members[cell].push_back(i);
            for (uint32_t e = 0; e < 3; ++e) {
                if (!degenerate[i][e]) continue;
                EdgeRef p = t.partner[i][e];
                Cyclo trans = st.dev[i] + develop_translation(t, {i, e});
                if (st.component[p.poly] == -1) {
                    st.component[p.poly] = cell;
                    st.dev[p.poly] = trans;
                    queue.push_back(p.poly);
                } else if (st.component[p.poly] != cell || !(st.dev[p.poly] == trans)) {
                    fail(Errc::Internal, "cocircular cell wraps inconsistently");
                }
            }
        }
    }
    return st;
}

} // namespace

CanonicalDecomposition delaunay(TriangulatedSurface t, bool keep_marked) {
    if (!keep_marked) remove_marked_vertices(t);
    make_delaunay(t);

    std::vector<std::array<bool, 3>> degenerate(t.size());
    for (uint32_t i = 0; i < t.size(); ++i)
        for (uint32_t e = 0; e < 3; ++e) degenerate[i][e] = (delaunay_state(t, {i, e}) == 0);

    MergeState st = merge_components(t, degenerate);

    CanonicalDecomposition d;
    d.field_order = t.field_order;
    d.cells.resize(st.members.size());
    d.partner.resize(st.members.size());
    // boundary walk per cell; remember where each boundary slot landed
    std::map<EdgeRef, EdgeRef> slot_of; // triangle slot -> (cell, cell edge)
    std::vector<std::vector<EdgeRef>> cell_slots(st.members.size());
    for (size_t cell = 0; cell < st.members.size(); ++cell) {
        EdgeRef start{};
        bool found = false;
        size_t boundary_count = 0;
        for (uint32_t i : st.members[cell])
            for (uint32_t e = 0; e < 3; ++e)
                if (!degenerate[i][e]) {
                    ++boundary_count;
                    if (!found || EdgeRef{i, e} < start) start = {i, e}, found = true;
                }
        if (!found) fail(Errc::Internal, "cell without boundary");
        EdgeRef cur = start;
        do {
            d.cells[cell].push_back(st.dev[cur.poly] + t.tris[cur.poly][cur.edge]);
            cell_slots[cell].push_back(cur);
            slot_of[cur] = {static_cast<uint32_t>(cell),
                            static_cast<uint32_t>(d.cells[cell].size() - 1)};
            // advance around the cell: step past the head corner, crossing
            // degenerate edges inside the cell
            EdgeRef corner{cur.poly, (cur.edge + 1) % 3};
            while (degenerate[corner.poly][corner.edge]) {
                EdgeRef p = t.partner[corner.poly][corner.edge];
                corner = {p.poly, (p.edge + 1) % 3};
            }
            cur = corner;
        } while (!(cur == start));
        if (d.cells[cell].size() != boundary_count)
            fail(Errc::Internal, "cell boundary is not a single loop");
    }
    for (size_t cell = 0; cell < st.members.size(); ++cell) {
        d.partner[cell].resize(cell_slots[cell].size());
        for (size_t e = 0; e < cell_slots[cell].size(); ++e) {
            EdgeRef tri_slot = cell_slots[cell][e];
            EdgeRef p = t.partner[tri_slot.poly][tri_slot.edge];
            d.partner[cell][e] = slot_of.at(p);
        }
    }
    auto [canon, seed] = canonical_form(d, d.field_order);
    d.canonical = canon;
    d.canonical_seed = seed;
    return d;
}

CanonicalDecomposition delaunay(const TranslationSurface& s) { return delaunay(triangulate(s)); }

CanonicalDecomposition delaunay_marked(const TranslationSurface& s) {
    return delaunay(triangulate(s), true);
}

TranslationSurface to_surface(const CanonicalDecomposition& d) {
    std::vector<Polygon> polys;
    for (const auto& c : d.cells) polys.push_back(Polygon{c});
    std::vector<Gluing> gluings;
    for (uint32_t i = 0; i < d.cells.size(); ++i)
        for (uint32_t e = 0; e < d.cells[i].size(); ++e) {
            EdgeRef self{i, e};
            if (d.partner[i][e] < self) continue;
            gluings.push_back({self, d.partner[i][e]});
        }
    return make_surface(std::move(polys), std::move(gluings), d.field_order);
}

CanonicalDecomposition scale(const CanonicalDecomposition& d, const Cyclo& c, bool canonicalize) {
    if (c.is_zero()) fail(Errc::DivisionByZero, "scale by zero");
    CanonicalDecomposition out;
    out.field_order = lcm_order(d.field_order, c.order());
    out.partner = d.partner;
    out.cells.resize(d.cells.size());
    for (size_t i = 0; i < d.cells.size(); ++i)
        for (const Cyclo& v : d.cells[i]) out.cells[i].push_back(v.lifted(out.field_order) * c);
    if (canonicalize) {
        auto [canon, seed] = canonical_form(out, out.field_order);
        out.canonical = canon;
        out.canonical_seed = seed;
    }
    return out;
}

TokenTable edge_token_table(const CanonicalDecomposition& d, unsigned lift_order) {
    TokenTable tokens(d.cells.size());
    for (uint32_t i = 0; i < d.cells.size(); ++i)
        for (uint32_t e = 0; e < d.cells[i].size(); ++e)
            tokens[i].push_back(d.edge_vector({i, e}).lifted(lift_order).token());
    return tokens;
}

std::string serialize_from(const CanonicalDecomposition& d, EdgeRef seed, unsigned lift_order) {
    return serialize_from(d, seed, edge_token_table(d, lift_order));
}

std::string serialize_from(const CanonicalDecomposition& d, EdgeRef seed, const TokenTable& tokens) {
    size_t m = d.cells.size();
    std::vector<int> discovered(m, -1); // cell -> discovery index
    std::vector<uint32_t> entry(m, 0);
    std::vector<uint32_t> order_list;
    discovered[seed.poly] = 0;
    entry[seed.poly] = seed.edge;
    order_list.push_back(seed.poly);

    std::string shapes, glue;
    for (size_t head = 0; head < order_list.size(); ++head) {
        uint32_t cell = order_list[head];
        uint32_t n = static_cast<uint32_t>(d.cells[cell].size());
        shapes += "C" + std::to_string(n) + "[";
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t e = (entry[cell] + j) % n;
            shapes += tokens[cell][e];
            shapes += "|";
        }
        shapes += "]";
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t e = (entry[cell] + j) % n;
            EdgeRef p = d.partner[cell][e];
            if (discovered[p.poly] == -1) {
                discovered[p.poly] = static_cast<int>(order_list.size());
                entry[p.poly] = p.edge;
                order_list.push_back(p.poly);
            }
            uint32_t pn = static_cast<uint32_t>(d.cells[p.poly].size());
            uint32_t rel = (p.edge + pn - entry[p.poly]) % pn;
            glue += std::to_string(discovered[p.poly]) + "." + std::to_string(rel) + ",";
        }
        glue += ";";
    }
    if (order_list.size() != m) fail(Errc::Internal, "decomposition is disconnected");
    return shapes + "#" + glue;
}

std::pair<std::string, EdgeRef> canonical_form(const CanonicalDecomposition& d, unsigned lift_order) {
    TokenTable tokens = edge_token_table(d, lift_order);
    std::string best;
    EdgeRef best_seed{0, 0};
    bool first = true;
    for (uint32_t i = 0; i < d.cells.size(); ++i)
        for (uint32_t e = 0; e < d.cells[i].size(); ++e) {
            std::string s = serialize_from(d, {i, e}, tokens);
            if (first || s < best) {
                best = std::move(s);
                best_seed = {i, e};
                first = false;
            }
        }
    return {best, best_seed};
}

std::vector<ConePoint> decomposition_vertices(const CanonicalDecomposition& d) {
    return corner_cycles(d.cells, d.partner, d.field_order);
}

unsigned decomposition_genus(const CanonicalDecomposition& d) {
    // vertex count needs only the corner cycles, not the angles
    std::vector<std::vector<bool>> visited(d.cells.size());
    for (size_t i = 0; i < d.cells.size(); ++i) visited[i].assign(d.cells[i].size(), false);
    long v = 0;
    for (uint32_t i = 0; i < d.cells.size(); ++i)
        for (uint32_t c = 0; c < d.cells[i].size(); ++c) {
            if (visited[i][c]) continue;
            ++v;
            uint32_t pi = i, pc = c;
            do {
                visited[pi][pc] = true;
                uint32_t n = static_cast<uint32_t>(d.cells[pi].size());
                EdgeRef p = d.partner[pi][(pc + n - 1) % n];
                pi = p.poly;
                pc = p.edge;
            } while (!(pi == i && pc == c));
        }
    long e = static_cast<long>(d.edge_sides()) / 2;
    long f = static_cast<long>(d.cells.size());
    long chi = v - e + f;
    if ((2 - chi) % 2 != 0) fail(Errc::Internal, "odd Euler characteristic");
    return static_cast<unsigned>((2 - chi) / 2);
}

} // namespace flatspin
