#include "flatspin/svg.hpp"

#include <algorithm>
#include <sstream>

namespace flatspin {

namespace {

// decimal string with a fixed number of places, rounded half-up; exact and
// deterministic (floats never enter)
std::string fixed_decimal(const Rational& v, unsigned digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rational scaled = v * Rational(scale) + make_rational(1, 2);
    mpz_class whole;
    mpz_fdiv_q(whole.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    bool neg = whole < 0;
    mpz_class mag = abs(whole);
    std::string ds = mag.get_str();
    if (ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    return (neg ? "-" : "") + ds;
}

std::string gluing_color(size_t index, size_t total) {
    // spread hues around the wheel; spacing by a fixed odd stride keeps
    // consecutive gluings distinguishable
    unsigned hue = static_cast<unsigned>((index * 47) % 360);
    (void)total;
    return "hsl(" + std::to_string(hue) + ",70%,40%)";
}

} // namespace

std::string surface_to_svg(const TranslationSurface& s, const SvgOptions& opts) {
    long bits = std::max<long>(opts.precision_bits, 16);
    // midpoints of certified enclosures; at 16+ bits the figure is pixel-exact
    std::vector<std::vector<std::pair<Rational, Rational>>> pts(s.polygons().size());
    Rational minx, maxx, miny, maxy;
    bool first = true;
    for (size_t p = 0; p < s.polygons().size(); ++p) {
        for (const Cyclo& v : s.polygons()[p].vertices) {
            ComplexInterval box = v.embed(bits);
            Rational x = (box.re.lo + box.re.hi) / 2;
            Rational y = -(box.im.lo + box.im.hi) / 2; // SVG y grows downward
            pts[p].push_back({x, y});
            if (first || x < minx) minx = x;
            if (first || x > maxx) maxx = x;
            if (first || y < miny) miny = y;
            if (first || y > maxy) maxy = y;
            first = false;
        }
    }
    Rational w = maxx - minx, h = maxy - miny;
    Rational pad = (w > h ? w : h) / 12 + make_rational(1, 100);
    Rational stroke = (w > h ? w : h) / 150 + make_rational(1, 200);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fixed_decimal(minx - pad, 6)
        << " " << fixed_decimal(miny - pad, 6) << " " << fixed_decimal(w + pad * 2, 6) << " "
        << fixed_decimal(h + pad * 2, 6) << "\">\n";
    for (size_t p = 0; p < pts.size(); ++p) {
        svg << "<path d=\"";
        for (size_t v = 0; v < pts[p].size(); ++v)
            svg << (v == 0 ? "M" : "L") << fixed_decimal(pts[p][v].first, 6) << " "
                << fixed_decimal(pts[p][v].second, 6);
        svg << "Z\" fill=\"#f2f2f2\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
    }
    for (size_t g = 0; g < s.gluings().size(); ++g) {
        const Gluing& gl = s.gluings()[g];
        for (EdgeRef e : {gl.first, gl.second}) {
            size_t n = pts[e.poly].size();
            const auto& a = pts[e.poly][e.edge];
            const auto& b = pts[e.poly][(e.edge + 1) % n];
            svg << "<line x1=\"" << fixed_decimal(a.first, 6) << "\" y1=\""
                << fixed_decimal(a.second, 6) << "\" x2=\"" << fixed_decimal(b.first, 6)
                << "\" y2=\"" << fixed_decimal(b.second, 6) << "\" stroke=\""
                << gluing_color(g, s.gluings().size()) << "\" stroke-width=\""
                << fixed_decimal(stroke, 6) << "\"/>\n";
        }
    }
    if (opts.labels) {
        Rational font = stroke * 6;
        for (size_t p = 0; p < pts.size(); ++p)
            for (size_t v = 0; v < pts[p].size(); ++v)
                svg << "<text x=\"" << fixed_decimal(pts[p][v].first, 6) << "\" y=\""
                    << fixed_decimal(pts[p][v].second, 6) << "\" font-size=\""
                    << fixed_decimal(font, 6) << "\">" << p << "." << v << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace flatspin
