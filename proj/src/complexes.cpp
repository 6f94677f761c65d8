#include "flatspin/complexes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace flatspin {

size_t CellComplex::vertex_degree(int v) const {
    size_t d = 0;
    for (const auto& e : edges) {
        if (e.first == v) ++d;
        if (e.second == v) ++d;
    }
    return d;
}

bool CellComplex::labeled() const {
    return std::any_of(vertex_labels.begin(), vertex_labels.end(),
                       [](const std::string& l) { return !l.empty(); });
}

void CellComplex::validate() const {
    for (const auto& e : edges)
        if (e.first < 0 || e.first >= num_vertices() || e.second < 0 || e.second >= num_vertices())
            fail(Errc::Internal, "edge endpoint out of range");
    for (const auto& face : faces) {
        if (face.empty()) fail(Errc::Internal, "empty face boundary");
        for (size_t j = 0; j < face.size(); ++j) {
            auto [e, fwd] = face[j];
            auto [e2, fwd2] = face[(j + 1) % face.size()];
            if (e < 0 || e >= num_edges() || e2 < 0 || e2 >= num_edges())
                fail(Errc::Internal, "face references a missing edge");
            if (head(e, fwd) != tail(e2, fwd2))
                fail(Errc::Internal, "face boundary does not close up");
        }
    }
}

// ---------------------------------------------------------------------------
// presentation symmetries

std::vector<PresentationSymmetry> presentation_symmetries(const TranslationSurface& s,
                                                          const Cyclo& derivative) {
    unsigned lift = lcm_order(s.field_order(), derivative.order());
    Cyclo c = derivative.lifted(lift);
    size_t np = s.polygons().size();

    auto edge_vec = [&](uint32_t p, uint32_t e) {
        return s.polygons()[p].edge_vector(e).lifted(lift);
    };
    auto shape_matches = [&](uint32_t p, uint32_t q, uint32_t r) {
        // c * (edges of p) rotated by r equals edges of q
        uint32_t n = static_cast<uint32_t>(s.polygons()[p].size());
        if (s.polygons()[q].size() != n) return false;
        for (uint32_t e = 0; e < n; ++e)
            if (!(edge_vec(p, e) * c == edge_vec(q, (e + r) % n))) return false;
        return true;
    };

    std::vector<PresentationSymmetry> out;
    uint32_t n0 = static_cast<uint32_t>(s.polygons()[0].size());
    for (uint32_t q0 = 0; q0 < np; ++q0) {
        if (s.polygons()[q0].size() != n0) continue;
        for (uint32_t r0 = 0; r0 < n0; ++r0) {
            if (!shape_matches(0, q0, r0)) continue;
            // flood-fill the polygon assignment through the gluings
            std::vector<int> pm(np, -1);
            std::vector<uint32_t> rot(np, 0);
            pm[0] = static_cast<int>(q0);
            rot[0] = r0;
            std::deque<uint32_t> queue{0};
            bool ok = true;
            std::vector<bool> image_used(np, false);
            image_used[q0] = true;
            while (ok && !queue.empty()) {
                uint32_t p = queue.front();
                queue.pop_front();
                uint32_t n = static_cast<uint32_t>(s.polygons()[p].size());
                uint32_t q = static_cast<uint32_t>(pm[p]);
                for (uint32_t e = 0; e < n && ok; ++e) {
                    EdgeRef src = s.partner({p, e});
                    EdgeRef dst = s.partner({q, (e + rot[p]) % n});
                    uint32_t nq = static_cast<uint32_t>(s.polygons()[src.poly].size());
                    uint32_t want_rot = (dst.edge + nq - src.edge) % nq;
                    if (pm[src.poly] == -1) {
                        if (s.polygons()[dst.poly].size() != nq ||
                            !shape_matches(src.poly, dst.poly, want_rot) || image_used[dst.poly]) {
                            ok = false;
                            break;
                        }
                        pm[src.poly] = static_cast<int>(dst.poly);
                        rot[src.poly] = want_rot;
                        image_used[dst.poly] = true;
                        queue.push_back(src.poly);
                    } else if (pm[src.poly] != static_cast<int>(dst.poly) ||
                               rot[src.poly] != want_rot) {
                        ok = false;
                    }
                }
            }
            if (!ok) continue;
            PresentationSymmetry sym;
            sym.poly_map.assign(pm.begin(), pm.end());
            sym.rot = rot;
            out.push_back(std::move(sym));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// surface complexes

SurfaceComplex complex_of_surface(const TranslationSurface& s,
                                  const std::vector<std::string>& class_labels) {
    SurfaceComplex sc;
    sc.vertex_classes = cone_points(s);
    sc.class_of_corner.resize(s.polygons().size());
    for (size_t p = 0; p < s.polygons().size(); ++p)
        sc.class_of_corner[p].assign(s.polygons()[p].size(), -1);
    for (size_t ci = 0; ci < sc.vertex_classes.size(); ++ci)
        for (const Corner& c : sc.vertex_classes[ci].corners)
            sc.class_of_corner[c.first][c.second] = static_cast<int>(ci);

    CellComplex& x = sc.complex;
    x.vertex_labels.assign(sc.vertex_classes.size(), "");
    if (!class_labels.empty()) {
        if (class_labels.size() != sc.vertex_classes.size())
            fail(Errc::Internal, "label list does not match vertex classes");
        x.vertex_labels = class_labels;
    }
    for (const Gluing& g : s.gluings()) {
        uint32_t p = g.first.poly, e = g.first.edge;
        uint32_t n = static_cast<uint32_t>(s.polygons()[p].size());
        x.edges.push_back({sc.class_of_corner[p][e], sc.class_of_corner[p][(e + 1) % n]});
    }
    for (uint32_t p = 0; p < s.polygons().size(); ++p) {
        std::vector<std::pair<int, bool>> boundary;
        for (uint32_t e = 0; e < s.polygons()[p].size(); ++e) {
            auto [gi, is_first] = s.gluing_of({p, e});
            boundary.push_back({static_cast<int>(gi), is_first});
        }
        x.faces.push_back(std::move(boundary));
    }
    x.validate();
    return sc;
}

ComplexMap complex_map_of(const SurfaceComplex& sc, const TranslationSurface& s,
                          const PresentationSymmetry& sym) {
    ComplexMap m;
    m.vertex_map.assign(sc.vertex_classes.size(), -1);
    m.edge_map.assign(s.gluings().size(), -1);
    m.face_map.assign(sym.poly_map.begin(), sym.poly_map.end());
    for (uint32_t p = 0; p < s.polygons().size(); ++p) {
        uint32_t n = static_cast<uint32_t>(s.polygons()[p].size());
        for (uint32_t v = 0; v < n; ++v) {
            int src = sc.class_of_corner[p][v];
            int dst = sc.class_of_corner[sym.poly_map[p]][(v + sym.rot[p]) % n];
            if (m.vertex_map[src] != -1 && m.vertex_map[src] != dst)
                fail(Errc::Internal, "presentation symmetry maps a vertex class inconsistently");
            m.vertex_map[src] = dst;
        }
        for (uint32_t e = 0; e < n; ++e) {
            auto [gi, first] = s.gluing_of({p, e});
            auto [gj, firstj] = s.gluing_of({sym.poly_map[p], (e + sym.rot[p]) % n});
            if (m.edge_map[gi] != -1 && m.edge_map[gi] != static_cast<int>(gj))
                fail(Errc::Internal, "presentation symmetry maps an edge inconsistently");
            m.edge_map[gi] = static_cast<int>(gj);
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// diagonal triangulation

DiagonalTriangulation diagonal_triangulation(const TranslationSurface& s) {
    const auto& polys = s.polygons();
    for (size_t p = 0; p < polys.size(); ++p) {
        if (polys[p].size() != 4)
            fail(Errc::NotRhombusSurface, "polygon " + std::to_string(p) + " is not a quadrilateral");
        const auto& v = polys[p].vertices;
        if (!(v[0] + v[2] == v[1] + v[3]))
            fail(Errc::NotRhombusSurface, "polygon " + std::to_string(p) + " is not a parallelogram");
        Cyclo side0 = polys[p].edge_vector(0), side1 = polys[p].edge_vector(1);
        if (!(side0 * side0.conj() == side1 * side1.conj()))
            fail(Errc::NotRhombusSurface, "polygon " + std::to_string(p) + " has unequal sides");
    }
    Cyclo half(make_rational(1, 2), s.field_order());
    std::vector<Polygon> tris;
    std::vector<Gluing> gluings;
    for (uint32_t p = 0; p < polys.size(); ++p) {
        const auto& v = polys[p].vertices;
        Cyclo w = (v[0] + v[2]) * half;
        for (uint32_t j = 0; j < 4; ++j) {
            tris.push_back(Polygon{{v[j], v[(j + 1) % 4], w}});
            gluings.push_back({{4 * p + j, 1}, {4 * p + (j + 1) % 4, 2}});
        }
    }
    for (const Gluing& g : s.gluings())
        gluings.push_back(
            {{4 * g.first.poly + g.first.edge, 0}, {4 * g.second.poly + g.second.edge, 0}});
    TranslationSurface refined = make_surface(std::move(tris), std::move(gluings), s.field_order());

    // corner (t, c) of triangle t = 4p+j: c=0 -> original corner j, c=1 ->
    // corner j+1, c=2 -> center of rhombus p
    auto tmp = complex_of_surface(refined);
    std::vector<std::string> labels(tmp.vertex_classes.size());
    for (size_t ci = 0; ci < tmp.vertex_classes.size(); ++ci) {
        const Corner& c = tmp.vertex_classes[ci].corners.front();
        if (c.second == 2) {
            labels[ci] = "W";
        } else {
            uint32_t orig = (c.first % 4 + c.second) % 4;
            labels[ci] = (orig % 2 == 0) ? "O" : "A";
        }
    }
    SurfaceComplex labeled = complex_of_surface(refined, labels);
    return {std::move(refined), std::move(labeled)};
}

bool invariant_under_derivative(const TranslationSurface& refined, const Cyclo& derivative) {
    return !presentation_symmetries(refined, derivative).empty();
}

bool invariant_under(const DiagonalTriangulation& t, const AffineSymmetry& sigma) {
    return invariant_under_derivative(t.surface, sigma.derivative);
}

// ---------------------------------------------------------------------------
// quotients

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void check_automorphism(const CellComplex& x, const ComplexMap& g) {
    if (g.vertex_map.size() != static_cast<size_t>(x.num_vertices()) ||
        g.edge_map.size() != static_cast<size_t>(x.num_edges()) ||
        g.face_map.size() != static_cast<size_t>(x.num_faces()))
        fail(Errc::NotAutomorphism, "map size does not match the complex");
    auto in_range = [](const std::vector<int>& v, int n) {
        return std::all_of(v.begin(), v.end(), [n](int x) { return x >= 0 && x < n; });
    };
    if (!in_range(g.vertex_map, x.num_vertices()) || !in_range(g.edge_map, x.num_edges()) ||
        !in_range(g.face_map, x.num_faces()))
        fail(Errc::NotAutomorphism, "map image out of range");
    for (int e = 0; e < x.num_edges(); ++e) {
        std::pair<int, int> img{g.vertex_map[x.edges[e].first], g.vertex_map[x.edges[e].second]};
        std::pair<int, int> want = x.edges[g.edge_map[e]];
        if (img != want && std::pair{img.second, img.first} != want)
            fail(Errc::NotAutomorphism, "edge endpoints not preserved");
    }
    for (int f = 0; f < x.num_faces(); ++f) {
        const auto& src = x.faces[f];
        const auto& dst = x.faces[g.face_map[f]];
        if (src.size() != dst.size()) fail(Errc::NotAutomorphism, "face sizes differ");
        // the mapped boundary must be a rotation of the image boundary
        std::vector<int> mapped;
        for (auto [e, fwd] : src) mapped.push_back(g.edge_map[e]);
        bool found = false;
        for (size_t r = 0; r < dst.size() && !found; ++r) {
            bool all = true;
            for (size_t j = 0; j < dst.size() && all; ++j)
                if (dst[(j + r) % dst.size()].first != mapped[j]) all = false;
            found = all;
        }
        if (!found) fail(Errc::NotAutomorphism, "face boundary not preserved");
    }
}

} // namespace

CellComplex quotient_complex(const CellComplex& x, const std::vector<ComplexMap>& generators) {
    x.validate();
    for (const auto& g : generators) check_automorphism(x, g);
    UnionFind vu(x.num_vertices()), eu(x.num_edges()), fu(x.num_faces());
    for (const auto& g : generators) {
        for (int v = 0; v < x.num_vertices(); ++v) vu.unite(v, g.vertex_map[v]);
        for (int e = 0; e < x.num_edges(); ++e) eu.unite(e, g.edge_map[e]);
        for (int f = 0; f < x.num_faces(); ++f) fu.unite(f, g.face_map[f]);
    }
    auto compress = [](UnionFind& u, int n, std::vector<int>& idx) {
        int count = 0;
        idx.assign(n, -1);
        for (int i = 0; i < n; ++i)
            if (u.find(i) == i) idx[i] = count++;
        for (int i = 0; i < n; ++i) idx[i] = idx[u.find(i)];
        return count;
    };
    std::vector<int> vi, ei, fi;
    int nv = compress(vu, x.num_vertices(), vi);
    int ne = compress(eu, x.num_edges(), ei);
    int nf = compress(fu, x.num_faces(), fi);

    CellComplex q;
    q.vertex_labels.assign(nv, "");
    for (int v = 0; v < x.num_vertices(); ++v)
        if (vu.find(v) == v) q.vertex_labels[vi[v]] = x.vertex_labels[v];
    q.edges.assign(ne, {0, 0});
    for (int e = 0; e < x.num_edges(); ++e)
        if (eu.find(e) == e) q.edges[ei[e]] = {vi[x.edges[e].first], vi[x.edges[e].second]};
    for (int f = 0; f < x.num_faces(); ++f) {
        if (fu.find(f) != f) continue;
        std::vector<std::pair<int, bool>> boundary;
        for (auto [e, fwd] : x.faces[f]) boundary.push_back({ei[e], fwd});
        q.faces.push_back(std::move(boundary));
    }
    (void)nf;
    return q;
}

CellComplex model_sphere(unsigned n) {
    if (n < 3) fail(Errc::Internal, "model sphere needs N >= 3");
    CellComplex x;
    x.vertex_labels.assign(n + 2, "W");
    x.vertex_labels[0] = "O";
    x.vertex_labels[1] = "A";
    auto w = [&](unsigned i) { return static_cast<int>(2 + (i % n)); };
    // edges: r_i = O-W_i, s_i = W_i-A, d_i = O-A along the odd ray after W_i
    for (unsigned i = 0; i < n; ++i) x.edges.push_back({0, w(i)});
    for (unsigned i = 0; i < n; ++i) x.edges.push_back({w(i), 1});
    for (unsigned i = 0; i < n; ++i) x.edges.push_back({0, 1});
    auto r = [&](unsigned i) { return static_cast<int>(i % n); };
    auto sE = [&](unsigned i) { return static_cast<int>(n + i % n); };
    auto dE = [&](unsigned i) { return static_cast<int>(2 * n + i % n); };
    for (unsigned i = 0; i < n; ++i) {
        x.faces.push_back({{r(i), true}, {sE(i), true}, {dE(i), false}});
        x.faces.push_back({{dE(i), true}, {sE(i + 1), false}, {r(i + 1), false}});
    }
    x.validate();
    return x;
}

// ---------------------------------------------------------------------------
// complex isomorphism

namespace {

struct Flags {
    // edge -> its (exactly two) uses as (face, position)
    std::vector<std::array<std::pair<int, int>, 2>> uses;
    bool ok = true;
};

Flags build_flags(const CellComplex& x) {
    Flags fl;
    std::vector<int> count(x.num_edges(), 0);
    fl.uses.assign(x.num_edges(), {std::pair{-1, -1}, std::pair{-1, -1}});
    for (int f = 0; f < x.num_faces(); ++f)
        for (size_t j = 0; j < x.faces[f].size(); ++j) {
            int e = x.faces[f][j].first;
            if (count[e] >= 2) {
                fl.ok = false;
                return fl;
            }
            fl.uses[e][count[e]++] = {f, static_cast<int>(j)};
        }
    for (int e = 0; e < x.num_edges(); ++e)
        if (count[e] != 2) {
            fl.ok = false;
            return fl;
        }
    return fl;
}

CellComplex mirrored(const CellComplex& x) {
    CellComplex y = x;
    for (auto& face : y.faces) {
        std::reverse(face.begin(), face.end());
        for (auto& use : face) use.second = !use.second;
    }
    return y;
}

std::optional<ComplexMap> oriented_iso(const CellComplex& x, const CellComplex& y) {
    if (x.num_vertices() != y.num_vertices() || x.num_edges() != y.num_edges() ||
        x.num_faces() != y.num_faces())
        return std::nullopt;
    Flags fx = build_flags(x), fy = build_flags(y);
    if (!fx.ok || !fy.ok) return std::nullopt;
    bool use_labels = x.labeled() && y.labeled();

    auto other_use = [](const Flags& fl, int e, std::pair<int, int> use) {
        return fl.uses[e][0] == use ? fl.uses[e][1] : fl.uses[e][0];
    };

    for (int f0 = 0; f0 < y.num_faces(); ++f0) {
        if (y.faces[f0].size() != x.faces[0].size()) continue;
        for (size_t p0 = 0; p0 < y.faces[f0].size(); ++p0) {
            ComplexMap m;
            m.vertex_map.assign(x.num_vertices(), -1);
            m.edge_map.assign(x.num_edges(), -1);
            m.face_map.assign(x.num_faces(), -1);
            std::vector<int> face_offset(x.num_faces(), -1);
            std::vector<bool> face_image_used(y.num_faces(), false);
            bool ok = true;

            auto assign_face = [&](int fa, int fb, int offset, auto&& queue) {
                if (m.face_map[fa] != -1)
                    return m.face_map[fa] == fb && face_offset[fa] == offset;
                if (face_image_used[fb] || x.faces[fa].size() != y.faces[fb].size()) return false;
                m.face_map[fa] = fb;
                face_offset[fa] = offset;
                face_image_used[fb] = true;
                queue.push_back(fa);
                return true;
            };

            std::deque<int> queue;
            if (!assign_face(0, f0, static_cast<int>(p0), queue)) continue;
            while (ok && !queue.empty()) {
                int fa = queue.front();
                queue.pop_front();
                int fb = m.face_map[fa];
                int off = face_offset[fa];
                int sz = static_cast<int>(x.faces[fa].size());
                for (int j = 0; j < sz && ok; ++j) {
                    auto [ea, fwda] = x.faces[fa][j];
                    auto [eb, fwdb] = y.faces[fb][(j + off) % sz];
                    if (m.edge_map[ea] == -1)
                        m.edge_map[ea] = eb;
                    else if (m.edge_map[ea] != eb) {
                        ok = false;
                        break;
                    }
                    int va = x.tail(ea, fwda), vb = y.tail(eb, fwdb);
                    if (m.vertex_map[va] == -1) {
                        if (use_labels && x.vertex_labels[va] != y.vertex_labels[vb]) {
                            ok = false;
                            break;
                        }
                        m.vertex_map[va] = vb;
                    } else if (m.vertex_map[va] != vb) {
                        ok = false;
                        break;
                    }
                    auto ua = other_use(fx, ea, {fa, j});
                    auto ub = other_use(fy, eb, {fb, (j + off) % sz});
                    int szg = static_cast<int>(y.faces[ub.first].size());
                    int want = ((ub.second - ua.second) % szg + szg) % szg;
                    if (!assign_face(ua.first, ub.first, want, queue)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            if (std::any_of(m.face_map.begin(), m.face_map.end(), [](int v) { return v == -1; }))
                continue; // disconnected; only full matches count
            // edge images must be injective
            std::vector<bool> edge_used(y.num_edges(), false);
            bool inj = true;
            for (int e : m.edge_map) {
                if (e == -1 || edge_used[e]) {
                    inj = false;
                    break;
                }
                edge_used[e] = true;
            }
            if (!inj) continue;
            std::vector<bool> vertex_used(y.num_vertices(), false);
            for (int v : m.vertex_map) {
                if (v == -1 || vertex_used[v]) {
                    inj = false;
                    break;
                }
                vertex_used[v] = true;
            }
            if (!inj) continue;
            return m;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<ComplexMap> complex_isomorphic(const CellComplex& x, const CellComplex& y) {
    x.validate();
    y.validate();
    if (auto m = oriented_iso(x, y)) return m;
    return oriented_iso(x, mirrored(y));
}

} // namespace flatspin
