#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "flatspin/constructors.hpp"
#include "flatspin/json_io.hpp"
#include "flatspin/svg.hpp"
#include "flatspin/verify.hpp"

using namespace flatspin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1; // verification failed / surfaces inequivalent
constexpr int kExitUsage = 2;
constexpr int kExitInvalidSurface = 3;

long default_precision() {
    if (const char* env = std::getenv("FLATSPIN_PRECISION")) {
        long bits = std::atol(env);
        if (bits >= 16) return bits;
    }
    return 53;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::ValidationError("--out", "cannot open '" + path + "' for writing");
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        std::exit(kExitUsage);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TranslationSurface load_surface(const std::string& path) {
    std::string text = read_file(path);
    try {
        return surface_from_json(text);
    } catch (const Error& e) {
        std::cerr << "invalid surface: " << e.what() << "\n";
        std::exit(kExitInvalidSurface);
    } catch (const std::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        std::exit(kExitUsage);
    }
}

Family parse_family(const std::string& name) {
    if (name == "apolar") return Family::Apolar;
    if (name == "polar") return Family::Polar;
    if (name == "dipolar") return Family::Dipolar;
    throw CLI::ValidationError("--family", "must be apolar, polar or dipolar");
}

std::string approx(const Cyclo& c, long bits) {
    ComplexInterval box = c.embed(bits);
    std::ostringstream os;
    os.precision(15);
    os << box.re_mid();
    double im = box.im_mid();
    if (im != 0 && !c.is_real()) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    return os.str();
}

int cmd_analyze(const std::string& path) {
    TranslationSurface s = load_surface(path);
    StratumSignature sig = stratum(s);
    std::cout << "stratum: " << sig.to_string() << "\n";
    std::cout << "genus: " << sig.genus << "\n";
    std::cout << "area: " << area(s).to_string() << " ~ " << approx(area(s), 53) << "\n";
    std::cout << "cone points:\n";
    std::map<unsigned, unsigned> by_angle;
    for (const auto& p : cone_points(s)) by_angle[p.angle_multiple]++;
    for (auto [m, count] : by_angle)
        std::cout << "  angle 2pi*" << m << "  (order " << m - 1 << ", x" << count << ")\n";
    return kExitOk;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path, const std::string& mode_name,
              long bits, const std::string& witness_path) {
    TranslationSurface a = load_surface(a_path);
    TranslationSurface b = load_surface(b_path);
    EquivMode mode = EquivMode::Similarity;
    if (mode_name == "translation") mode = EquivMode::Translation;
    else if (mode_name == "rotation") mode = EquivMode::Rotation;
    else if (mode_name != "similarity")
        throw CLI::ValidationError("--mode", "must be translation, rotation or similarity");
    auto c = equivalent_up_to(a, b, mode);
    if (!c) {
        std::cout << "inequivalent\n";
        return kExitNegative;
    }
    std::cout << "factor: " << c->to_string() << "\n";
    std::cout << "factor ~ " << approx(*c, bits) << "\n";
    if (!witness_path.empty()) {
        auto matching = translation_equivalent(transform(b, *c), a);
        if (!matching) fail(Errc::Internal, "factor found but the matching vanished");
        write_output(matching_to_json(*c, *matching), witness_path);
    }
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& family_names, const std::string& range) {
    unsigned g_min = 0, g_max = 0;
    {
        auto dots = range.find("..");
        try {
            if (dots == std::string::npos) {
                g_min = g_max = std::stoul(range);
            } else {
                g_min = std::stoul(range.substr(0, dots));
                g_max = std::stoul(range.substr(dots + 2));
            }
        } catch (...) {
            throw CLI::ValidationError("--genus-range", "expected a..b");
        }
        if (g_min < 2 || g_max < g_min || g_max > 12)
            throw CLI::ValidationError("--genus-range", "supported range is 2..12");
    }
    std::vector<Family> families;
    if (family_names.empty()) {
        families = {Family::Apolar, Family::Polar, Family::Dipolar};
    } else {
        for (const auto& n : family_names) families.push_back(parse_family(n));
    }
    bool all_ok = true;
    for (const VerificationReport& report : verify_range(families, g_min, g_max)) {
        for (const CheckResult& check : report.checks) {
            std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << report.case_id() << " "
                      << check.name;
            if (!check.witness.empty()) std::cout << ": " << check.witness;
            std::cout << "\n";
            all_ok = all_ok && check.pass;
        }
    }
    std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    return all_ok ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flatspin: exact translation-surface toolkit"};
    app.require_subcommand(1);

    // ---- build
    auto* build = app.add_subcommand("build", "construct a surface and emit canonical JSON");
    std::string family_name_opt, out_path;
    unsigned genus = 0, kval = 0;
    std::vector<unsigned> spin, half, unfold;
    unsigned regular_n = 0, double_n = 0;
    build->add_option("--family", family_name_opt, "apolar|polar|dipolar");
    build->add_option("--genus", genus);
    build->add_option("--k", kval);
    build->add_option("--spingon", spin, "N K")->expected(2);
    build->add_option("--half-spingon", half, "N K")->expected(2);
    build->add_option("--regular", regular_n, "even N");
    build->add_option("--double", double_n, "odd N");
    build->add_option("--unfold", unfold, "A B M")->expected(3);
    build->add_option("--out", out_path, "output path (default stdout)");

    // ---- analyze
    auto* analyze = app.add_subcommand("analyze", "stratum, genus, area and cone points");
    std::string analyze_path;
    analyze->add_option("surface", analyze_path)->required();

    // ---- equiv
    auto* equiv = app.add_subcommand("equiv", "decide equivalence of two surfaces");
    std::string equiv_a, equiv_b, equiv_mode = "similarity", equiv_witness;
    equiv->add_option("a", equiv_a)->required();
    equiv->add_option("b", equiv_b)->required();
    equiv->add_option("--mode", equiv_mode, "translation|rotation|similarity");
    equiv->add_option("--witness", equiv_witness, "write the matching witness JSON here");

    // ---- verify
    auto* verify = app.add_subcommand("verify", "run the eigenform verification suite");
    std::vector<std::string> verify_families;
    std::string verify_range_opt = "2..3";
    verify->add_option("--family", verify_families, "apolar|polar|dipolar (repeatable)");
    verify->add_option("--genus-range", verify_range_opt, "a..b");

    // ---- svg
    auto* svg = app.add_subcommand("svg", "render a surface as SVG");
    std::string svg_path, svg_out;
    long svg_bits = default_precision();
    bool svg_labels = false;
    svg->add_option("surface", svg_path)->required();
    svg->add_option("--precision", svg_bits, "embedding bits");
    svg->add_flag("--labels", svg_labels, "label vertices");
    svg->add_option("--out", svg_out);

    // ---- triangulate
    auto* triangulate_cmd = app.add_subcommand(
        "triangulate", "diagonal triangulation of a rhombus surface (complex JSON)");
    std::string tri_path, tri_out, tri_surface_out;
    triangulate_cmd->add_option("surface", tri_path)->required();
    triangulate_cmd->add_option("--out", tri_out);
    triangulate_cmd->add_option("--refined-out", tri_surface_out,
                                "also write the refined surface JSON");

    // ---- quotient
    auto* quotient_cmd =
        app.add_subcommand("quotient", "quotient of the diagonal triangulation (complex JSON)");
    std::string quo_path, quo_by = "eta", quo_out;
    int quo_model = -1;
    quotient_cmd->add_option("surface", quo_path)->required();
    quotient_cmd->add_option("--by", quo_by, "eta | eta,rot");
    quotient_cmd->add_option("--compare-model", quo_model, "compare against the model sphere with N vertices on the equator");
    quotient_cmd->add_option("--out", quo_out);

    // ---- symmetry
    auto* symmetry_cmd = app.add_subcommand("symmetry", "search for affine self-symmetries");
    std::string sym_path;
    std::vector<long> sym_derivative; // M j
    bool sym_all = false;
    symmetry_cmd->add_option("surface", sym_path)->required();
    symmetry_cmd->add_option("--derivative", sym_derivative, "M J: try derivative zeta_M^J")
        ->expected(2);
    symmetry_cmd->add_flag("--all", sym_all, "enumerate derivatives among 2M-th roots of unity");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            int selectors = (!family_name_opt.empty() ? 1 : 0) + (!spin.empty() ? 1 : 0) +
                            (!half.empty() ? 1 : 0) + (regular_n ? 1 : 0) + (double_n ? 1 : 0) +
                            (!unfold.empty() ? 1 : 0);
            if (selectors != 1) {
                std::cerr << "build: choose exactly one of --family/--spingon/--half-spingon/"
                             "--regular/--double/--unfold\n";
                return kExitUsage;
            }
            TranslationSurface s = [&] {
                if (!family_name_opt.empty())
                    return build_family({parse_family(family_name_opt), genus, kval});
                if (!spin.empty()) return spingon(spin[0], spin[1]);
                if (!half.empty()) return half_spingon(half[0], half[1]);
                if (regular_n) return regular_ngon(regular_n);
                if (double_n) return double_ngon(double_n);
                return unfold_right_triangle(unfold[0], unfold[1], unfold[2]);
            }();
            write_output(surface_to_json(s), out_path);
            return kExitOk;
        }
        if (*analyze) return cmd_analyze(analyze_path);
        if (*equiv) return cmd_equiv(equiv_a, equiv_b, equiv_mode, default_precision(), equiv_witness);
        if (*verify) return cmd_verify(verify_families, verify_range_opt);
        if (*svg) {
            TranslationSurface s = load_surface(svg_path);
            write_output(surface_to_svg(s, {svg_bits, svg_labels}), svg_out);
            return kExitOk;
        }
        if (*triangulate_cmd) {
            TranslationSurface s = load_surface(tri_path);
            DiagonalTriangulation t = diagonal_triangulation(s);
            write_output(complex_to_json(t.cells.complex), tri_out);
            if (!tri_surface_out.empty()) write_output(surface_to_json(t.surface), tri_surface_out);
            return kExitOk;
        }
        if (*quotient_cmd) {
            TranslationSurface s = load_surface(quo_path);
            DiagonalTriangulation t = diagonal_triangulation(s);
            StratumSignature sig = stratum(s);
            // the fan rotation needs the eigenvalue; recover it by trying the
            // family derivatives for this rhombus count
            std::vector<ComplexMap> gens;
            auto syms_eta = presentation_symmetries(t.surface, Cyclo(Rational(-1)));
            bool found_eta = false;
            for (const auto& sym : syms_eta) {
                bool same_group = true;
                for (size_t i = 0; i < sym.poly_map.size(); ++i)
                    if (sym.poly_map[i] / 4 != i / 4) same_group = false;
                if (same_group) {
                    gens.push_back(complex_map_of(t.cells, t.surface, sym));
                    found_eta = true;
                    break;
                }
            }
            if (!found_eta) {
                std::cerr << "no hyperelliptic involution preserves the rhombi\n";
                return kExitNegative;
            }
            if (quo_by == "eta,rot" || quo_by == "eta+rot") {
                unsigned groups = static_cast<unsigned>(t.surface.polygons().size()) / 4;
                bool found_rot = false;
                for (unsigned j = 1; j < 2 * s.field_order() && !found_rot; ++j) {
                    for (const auto& sym : presentation_symmetries(
                             t.surface, Cyclo::root_of_unity(2 * s.field_order(), j))) {
                        bool shift = true;
                        for (size_t i = 0; i < sym.poly_map.size(); ++i)
                            if (sym.poly_map[i] / 4 != (i / 4 + 1) % groups) shift = false;
                        if (shift) {
                            gens.push_back(complex_map_of(t.cells, t.surface, sym));
                            found_rot = true;
                            break;
                        }
                    }
                }
                if (!found_rot) {
                    std::cerr << "no fan rotation found\n";
                    return kExitNegative;
                }
            } else if (quo_by != "eta") {
                throw CLI::ValidationError("--by", "must be eta or eta,rot");
            }
            CellComplex q = quotient_complex(t.cells.complex, gens);
            write_output(complex_to_json(q), quo_out);
            if (quo_model >= 3) {
                bool iso = complex_isomorphic(q, model_sphere(quo_model)).has_value();
                std::cout << (iso ? "isomorphic to model sphere\n" : "NOT the model sphere\n");
                if (!iso) return kExitNegative;
            }
            (void)sig;
            return kExitOk;
        }
        if (*symmetry_cmd) {
            TranslationSurface s = load_surface(sym_path);
            auto base = std::make_shared<CanonicalDecomposition>(delaunay(s));
            bool any = false;
            auto report = [&](const Cyclo& d) {
                auto syms = find_symmetries(base, d);
                if (!syms.empty()) {
                    std::cout << "symmetry with derivative " << d.to_string() << " ("
                              << syms.size() << " matching" << (syms.size() > 1 ? "s" : "")
                              << ")\n";
                    any = true;
                }
            };
            if (!sym_derivative.empty())
                report(Cyclo::root_of_unity(static_cast<unsigned>(sym_derivative[0]),
                                            sym_derivative[1]));
            if (sym_all || sym_derivative.empty()) {
                unsigned m = 2 * s.field_order();
                for (unsigned j = 0; j < m; ++j) report(Cyclo::root_of_unity(m, j));
            }
            return any ? kExitOk : kExitNegative;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::InvalidK:
            case Errc::OddN:
            case Errc::EvenN:
            case Errc::AngleSumMismatch:
            case Errc::NonConvexPolygon:
                return kExitUsage;
            default:
                return kExitInvalidSurface;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
