#include "flatspin/constructors.hpp"

#include <map>

namespace flatspin {

const char* family_name(Family f) {
    switch (f) {
        case Family::Apolar: return "apolar";
        case Family::Polar: return "polar";
        case Family::Dipolar: return "dipolar";
    }
    return "?";
}

TranslationSurface spingon(unsigned n, unsigned k) {
    if (n < 2) fail(Errc::InvalidK, "spingon needs N > 1");
    if (!(k >= 1 && 2 * k < n + 1))
        fail(Errc::InvalidK, "spingon requires 1 <= k < (N+1)/2, got k=" + std::to_string(k) +
                                 " N=" + std::to_string(n));
    std::vector<Polygon> polys;
    std::vector<Gluing> gluings;
    auto z = [&](long e) { return Cyclo::root_of_unity(n, e); };
    for (unsigned i = 0; i < n; ++i) {
        Cyclo a = z(static_cast<long>(i) * k);
        Cyclo c = z(static_cast<long>(i + 1) * k);
        polys.push_back(Polygon{{Cyclo::zero(n), a, a + c, c}});
        unsigned next = (i + 1) % n;
        gluings.push_back({{i, 3}, {next, 0}}); // O C_i ~ O A_{i+1}
        gluings.push_back({{i, 1}, {next, 2}}); // A_i B_i ~ C_{i+1} B_{i+1}
    }
    return make_surface(std::move(polys), std::move(gluings), n);
}

TranslationSurface half_spingon(unsigned n, unsigned k) {
    if (n < 2) fail(Errc::InvalidK, "half-spingon needs N > 1");
    if (!(k >= 1 && 2 * k <= n))
        fail(Errc::InvalidK, "half-spingon requires 1 <= k <= N/2, got k=" + std::to_string(k) +
                                 " N=" + std::to_string(n));
    unsigned m = 2 * n;
    long step = 2 * static_cast<long>(k) - 1;
    std::vector<Polygon> polys;
    std::vector<Gluing> gluings;
    auto z = [&](long e) { return Cyclo::root_of_unity(m, e); };
    for (unsigned i = 0; i < n; ++i) {
        Cyclo a = z(static_cast<long>(i) * step);
        Cyclo c = z(static_cast<long>(i + 1) * step);
        polys.push_back(Polygon{{Cyclo::zero(m), a, a + c, c}});
        if (i + 1 < n) {
            gluings.push_back({{i, 3}, {i + 1, 0}}); // O C_i ~ O A_{i+1}
            gluings.push_back({{i, 1}, {i + 1, 2}}); // A_i B_i ~ C_{i+1} B_{i+1}
        }
    }
    // the half turn makes O A_0 and O C_{N-1} opposite, closing the fan
    gluings.push_back({{0, 0}, {n - 1, 1}}); // O A_0 ~ B_{N-1} A_{N-1}
    gluings.push_back({{0, 2}, {n - 1, 3}}); // C_0 B_0 ~ C_{N-1} O
    return make_surface(std::move(polys), std::move(gluings), m);
}

TranslationSurface regular_ngon(unsigned n) {
    if (n < 4 || n % 2 != 0) fail(Errc::OddN, "regular n-gon needs even n >= 4");
    std::vector<Cyclo> vs;
    for (unsigned j = 0; j < n; ++j) vs.push_back(Cyclo::root_of_unity(n, j));
    std::vector<Gluing> gluings;
    for (unsigned j = 0; j < n / 2; ++j) gluings.push_back({{0, j}, {0, j + n / 2}});
    return make_surface({Polygon{std::move(vs)}}, std::move(gluings), n);
}

TranslationSurface double_ngon(unsigned n) {
    if (n < 3) fail(Errc::EvenN, "double n-gon needs n >= 3");
    std::vector<Cyclo> vs, ws;
    for (unsigned j = 0; j < n; ++j) {
        Cyclo v = Cyclo::root_of_unity(n, j);
        vs.push_back(v);
        ws.push_back(-v);
    }
    std::vector<Gluing> gluings;
    for (unsigned j = 0; j < n; ++j) gluings.push_back({{0, j}, {1, j}});
    return make_surface({Polygon{std::move(vs)}, Polygon{std::move(ws)}}, std::move(gluings), n);
}

// ---------------------------------------------------------------------------
// billiard unfolding

namespace {

// linear part: z -> zeta_2M^t * z, or zeta_2M^t * conj(z) when refl
struct LinPart {
    unsigned t;
    bool refl;

    friend bool operator==(const LinPart&, const LinPart&) = default;
    friend auto operator<=>(const LinPart&, const LinPart&) = default;
};

LinPart compose(const LinPart& g1, const LinPart& g2, unsigned two_m) {
    // (g1 o g2)(z) = g1(g2(z))
    unsigned t = g1.refl ? (g1.t + two_m - g2.t) % two_m : (g1.t + g2.t) % two_m;
    return {t, g1.refl != g2.refl};
}

Cyclo apply(const LinPart& g, const Cyclo& z, unsigned two_m) {
    Cyclo rot = Cyclo::root_of_unity(two_m, g.t);
    return g.refl ? rot * z.conj() : rot * z;
}

} // namespace

TranslationSurface unfold_right_triangle(unsigned a, unsigned b, unsigned m) {
    if (a == 0 || b == 0 || 2 * (a + b) != m)
        fail(Errc::AngleSumMismatch,
             "triangle angles must satisfy 2(a+b) = M, got a=" + std::to_string(a) +
                 " b=" + std::to_string(b) + " M=" + std::to_string(m));
    unsigned two_m = 2 * m;

    // vertices 0, 1, apex on the circle with diameter [0,1] (right angle at
    // the apex), angle pi*a/M at the origin
    Cyclo v0 = Cyclo::zero(two_m);
    Cyclo v1 = Cyclo::one(two_m);
    Cyclo apex = (v1 + Cyclo::root_of_unity(m, a).lifted(two_m)) * Cyclo(make_rational(1, 2), two_m);
    const Cyclo tri[3] = {v0, v1, apex};

    // reflections across the three sides (linear parts): the side from
    // vertex s to vertex s+1 has direction angle 0, pi/2 + pi a/M, pi + pi a/M
    const LinPart side_refl[3] = {
        {0, true},
        {(m + 2 * a) % two_m, true},
        {2 * a % two_m, true},
    };

    std::map<LinPart, uint32_t> index;
    std::vector<LinPart> group;
    auto intern = [&](const LinPart& g) {
        auto it = index.find(g);
        if (it != index.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(group.size());
        index.emplace(g, id);
        group.push_back(g);
        return id;
    };
    intern({0, false});
    for (size_t head = 0; head < group.size(); ++head) {
        LinPart g = group[head];
        for (const LinPart& r : side_refl) intern(compose(g, r, two_m));
    }

    // copy g is the triangle g(T); orientation-reversing copies list their
    // vertices backwards so every polygon stays counterclockwise
    auto side_to_edge = [](const LinPart& g, unsigned side) {
        return g.refl ? 2 - side : side;
    };
    std::vector<Polygon> polys;
    for (const LinPart& g : group) {
        Cyclo p0 = apply(g, tri[0], two_m), p1 = apply(g, tri[1], two_m),
              p2 = apply(g, tri[2], two_m);
        if (g.refl)
            polys.push_back(Polygon{{p0, p2, p1}});
        else
            polys.push_back(Polygon{{p0, p1, p2}});
    }
    std::vector<Gluing> gluings;
    for (uint32_t gi = 0; gi < group.size(); ++gi) {
        for (unsigned side = 0; side < 3; ++side) {
            uint32_t hi = index.at(compose(group[gi], side_refl[side], two_m));
            if (hi < gi || (hi == gi))
                continue; // each pair once; hi == gi cannot happen (reflections are not the identity)
            gluings.push_back({{gi, side_to_edge(group[gi], side)},
                               {hi, side_to_edge(group[hi], side)}});
        }
    }
    return make_surface(std::move(polys), std::move(gluings), two_m);
}

unsigned family_n(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Apolar: return 2 * spec.genus + 2;
        case Family::Polar: return 2 * spec.genus + 1;
        case Family::Dipolar: return 2 * spec.genus;
    }
    fail(Errc::Internal, "bad family");
}

TranslationSurface build_family(const FamilySpec& spec) {
    if (spec.genus < 2) fail(Errc::InvalidK, "family surfaces need genus >= 2");
    if (spec.k < 1 || spec.k > spec.genus)
        fail(Errc::InvalidK, "family parameter requires 1 <= k <= g");
    switch (spec.family) {
        case Family::Apolar: return spingon(2 * spec.genus + 2, spec.k);
        case Family::Polar: return spingon(2 * spec.genus + 1, spec.k);
        case Family::Dipolar: return half_spingon(2 * spec.genus, spec.k);
    }
    fail(Errc::Internal, "bad family");
}

TriangleAngles family_triangle(const FamilySpec& spec) {
    unsigned g = spec.genus, k = spec.k;
    switch (spec.family) {
        case Family::Apolar: return {k, g - k + 1, 2 * g + 2};
        case Family::Polar: return {2 * k, 2 * g - 2 * k + 1, 2 * (2 * g + 1)};
        case Family::Dipolar: return {2 * k - 1, 2 * g - 2 * k + 1, 4 * g};
    }
    fail(Errc::Internal, "bad family");
}

} // namespace flatspin
