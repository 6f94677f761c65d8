#include "flatspin/verify.hpp"

#include <algorithm>
#include <sstream>

namespace flatspin {

bool VerificationReport::overall() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::case_id() const {
    std::ostringstream os;
    os << family_name(spec.family) << " g=" << spec.genus << " k=" << spec.k;
    return os.str();
}

Cyclo family_eigenvalue(const FamilySpec& spec) {
    unsigned g = spec.genus, k = spec.k;
    switch (spec.family) {
        case Family::Apolar: return Cyclo::root_of_unity(2 * g + 2, k);
        case Family::Polar: return Cyclo::root_of_unity(2 * g + 1, k);
        case Family::Dipolar: return Cyclo::root_of_unity(4 * g, 2 * k - 1);
    }
    fail(Errc::Internal, "bad family");
}

unsigned family_symmetry_order(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Apolar: return 2 * spec.genus + 2;
        case Family::Polar: return 2 * spec.genus + 1;
        case Family::Dipolar: return 4 * spec.genus;
    }
    fail(Errc::Internal, "bad family");
}

DiagonalSymmetries diagonal_symmetries(const DiagonalTriangulation& t, const Cyclo& eigenvalue) {
    size_t groups = t.surface.polygons().size() / 4;
    auto group_shift = [&](const PresentationSymmetry& sym, size_t shift) {
        for (size_t i = 0; i < sym.poly_map.size(); ++i)
            if (sym.poly_map[i] / 4 != (i / 4 + shift) % groups) return false;
        return true;
    };
    DiagonalSymmetries out;
    bool have_inv = false, have_rot = false;
    for (const auto& sym : presentation_symmetries(t.surface, Cyclo(Rational(-1))))
        if (group_shift(sym, 0)) {
            out.involution = sym;
            have_inv = true;
            break;
        }
    for (const auto& sym : presentation_symmetries(t.surface, eigenvalue))
        if (group_shift(sym, 1)) {
            out.rotation = sym;
            have_rot = true;
            break;
        }
    if (!have_inv || !have_rot)
        fail(Errc::Internal, "diagonal triangulation lost its rhombus symmetries");
    return out;
}

namespace {

std::string cyclo_witness(const Cyclo& c) {
    ComplexInterval box = c.embed(40);
    std::ostringstream os;
    os << c.to_string() << " ~ (" << box.re_mid() << (box.im_mid() < 0 ? "" : "+")
       << box.im_mid() << "i)";
    return os.str();
}

} // namespace

VerificationReport verify_case(const FamilySpec& spec) {
    VerificationReport report{spec, {}};
    unsigned g = spec.genus, k = spec.k;
    unsigned n = family_n(spec);
    TranslationSurface s = build_family(spec);
    auto add = [&](std::string name, bool pass, std::string witness = "") {
        report.checks.push_back({std::move(name), pass, std::move(witness)});
    };

    // stratum, including marked points, against the eigenform table
    {
        std::vector<unsigned> want;
        switch (spec.family) {
            case Family::Apolar: want = {k - 1, k - 1, g - k, g - k}; break;
            case Family::Polar: want = {k - 1, k - 1, 2 * g - 2 * k}; break;
            case Family::Dipolar: want = {2 * k - 2, 2 * g - 2 * k}; break;
        }
        std::sort(want.begin(), want.end(), std::greater<>());
        StratumSignature sig = stratum(s, true);
        add("stratum", sig.genus == g && sig.orders == want, sig.to_string());
    }

    // rotational symmetry whose derivative is the eigenvalue, of the right order
    Cyclo eigen = family_eigenvalue(spec);
    auto base = std::make_shared<CanonicalDecomposition>(delaunay_marked(s));
    {
        auto syms = find_symmetries(base, eigen);
        bool found = !syms.empty();
        bool order_ok = false;
        if (found) {
            unsigned order = family_symmetry_order(spec);
            AffineSymmetry acc = syms.front();
            for (unsigned i = 1; i < order; ++i) acc = compose(syms.front(), acc);
            order_ok = is_identity(acc);
        }
        add("eigenvalue-symmetry", found, cyclo_witness(eigen));
        add("symmetry-order", order_ok, std::to_string(family_symmetry_order(spec)));
    }

    // hyperelliptic involution with 2g+2 fixed points
    {
        auto hyper = is_hyperelliptic_flat(s);
        add("hyperelliptic",
            hyper.has_value() && hyper->second.count() == 2 * static_cast<size_t>(g) + 2,
            hyper ? std::to_string(hyper->second.count()) + " fixed points" : "absent");
    }

    // rotation partner S^k ~ S^{g-k+1} (apolar), H^k ~ H^{g-k+1} (dipolar)
    if (spec.family != Family::Polar) {
        unsigned partner_k = g - k + 1;
        TranslationSurface partner = build_family({spec.family, g, partner_k});
        auto c = equivalent_up_to(s, partner, EquivMode::Rotation);
        bool unit = c && (*c * c->conj()).is_one();
        add("rotation-partner", unit, c ? cyclo_witness(*c) : "inequivalent");
    }

    // regular / double n-gon similarities
    if (spec.family == Family::Apolar && (k == 1 || k == g)) {
        auto c = equivalent_up_to(s, double_ngon(2 * g + 2), EquivMode::Similarity);
        add("double-ngon", c.has_value(), c ? cyclo_witness(*c) : "inequivalent");
    }
    if (spec.family == Family::Polar && k == 1) {
        auto c = equivalent_up_to(s, double_ngon(2 * g + 1), EquivMode::Similarity);
        add("double-ngon", c.has_value(), c ? cyclo_witness(*c) : "inequivalent");
    }
    if (spec.family == Family::Polar && k == g) {
        auto c = equivalent_up_to(s, regular_ngon(4 * g + 2), EquivMode::Similarity);
        add("regular-ngon", c.has_value(), c ? cyclo_witness(*c) : "inequivalent");
    }
    if (spec.family == Family::Dipolar && (k == 1 || k == g)) {
        auto c = equivalent_up_to(s, regular_ngon(4 * g), EquivMode::Similarity);
        add("regular-ngon", c.has_value(), c ? cyclo_witness(*c) : "inequivalent");
    }

    // diagonal triangulation: symmetry invariance, quotient sphere, k-independence
    {
        DiagonalTriangulation tri = diagonal_triangulation(s);
        bool inv_eta = invariant_under_derivative(tri.surface, Cyclo(Rational(-1)));
        bool inv_rot = invariant_under_derivative(tri.surface, eigen);
        add("triangulation-invariant", inv_eta && inv_rot);

        DiagonalSymmetries syms = diagonal_symmetries(tri, eigen);
        ComplexMap eta = complex_map_of(tri.cells, tri.surface, syms.involution);
        CellComplex sphere = quotient_complex(tri.cells.complex, {eta});
        bool sphere_ok =
            sphere.euler_characteristic() == 2 && complex_isomorphic(sphere, model_sphere(n));
        add("quotient-sphere", sphere_ok,
            "V=" + std::to_string(sphere.num_vertices()) + " E=" +
                std::to_string(sphere.num_edges()) + " F=" + std::to_string(sphere.num_faces()));

        ComplexMap rot = complex_map_of(tri.cells, tri.surface, syms.rotation);
        CellComplex wedge = quotient_complex(tri.cells.complex, {eta, rot});
        add("billiard-quotient", wedge.num_faces() == 2 && wedge.euler_characteristic() == 2,
            "F=" + std::to_string(wedge.num_faces()));

        if (k > 1) {
            DiagonalTriangulation tri1 = diagonal_triangulation(build_family({spec.family, g, 1}));
            add("triangulation-k-independent",
                complex_isomorphic(tri.cells.complex, tri1.cells.complex).has_value());
        }
    }

    // billiard unfolding
    {
        TriangleAngles t = family_triangle(spec);
        TranslationSurface unfolded = unfold_right_triangle(t.a, t.b, t.m);
        auto c = equivalent_up_to(s, unfolded, EquivMode::Similarity);
        add("unfolding", c.has_value(),
            "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.m) +
                (c ? ") factor " + cyclo_witness(*c) : ") inequivalent"));
    }

    return report;
}

std::vector<VerificationReport> verify_range(const std::vector<Family>& families, unsigned g_min,
                                             unsigned g_max) {
    std::vector<VerificationReport> out;
    for (Family f : families)
        for (unsigned g = g_min; g <= g_max; ++g)
            for (unsigned k = 1; k <= g; ++k) out.push_back(verify_case({f, g, k}));
    return out;
}

} // namespace flatspin
