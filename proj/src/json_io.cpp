#include "flatspin/json_io.hpp"

#include <json.hpp>

namespace flatspin {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json cyclo_to_json(const Cyclo& c) {
    ordered_json j;
    j["order"] = c.order();
    ordered_json coeffs = ordered_json::array();
    for (const Rational& r : c.coeffs()) coeffs.push_back(rational_str(r));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Cyclo cyclo_from_json(const ordered_json& j) {
    unsigned order = j.at("order").get<unsigned>();
    if (order == 0) fail(Errc::Internal, "cyclotomic order must be positive");
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(parse_rational(s.get<std::string>()));
    if (coeffs.size() != euler_phi(order))
        fail(Errc::Internal, "coefficient count does not equal phi(order)");
    return Cyclo(order, std::move(coeffs));
}

} // namespace

std::string surface_to_json(const TranslationSurface& s) {
    ordered_json j;
    j["field_order"] = s.field_order();
    ordered_json polys = ordered_json::array();
    for (const Polygon& p : s.polygons()) {
        ordered_json poly = ordered_json::array();
        for (const Cyclo& v : p.vertices) poly.push_back(cyclo_to_json(v));
        polys.push_back(std::move(poly));
    }
    j["polygons"] = std::move(polys);
    ordered_json gluings = ordered_json::array();
    for (const Gluing& g : s.gluings())
        gluings.push_back(ordered_json::array(
            {ordered_json::array({g.first.poly, g.first.edge}),
             ordered_json::array({g.second.poly, g.second.edge})}));
    j["gluings"] = std::move(gluings);
    return j.dump();
}

TranslationSurface surface_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    unsigned field_order = j.at("field_order").get<unsigned>();
    std::vector<Polygon> polys;
    for (const auto& poly : j.at("polygons")) {
        Polygon p;
        for (const auto& v : poly) p.vertices.push_back(cyclo_from_json(v));
        polys.push_back(std::move(p));
    }
    std::vector<Gluing> gluings;
    for (const auto& g : j.at("gluings")) {
        if (g.size() != 2 || g[0].size() != 2 || g[1].size() != 2)
            fail(Errc::UnmatchedEdge, "gluing entries must be [[p,e],[q,f]]");
        gluings.push_back({{g[0][0].get<uint32_t>(), g[0][1].get<uint32_t>()},
                           {g[1][0].get<uint32_t>(), g[1][1].get<uint32_t>()}});
    }
    return make_surface(std::move(polys), std::move(gluings), field_order);
}

std::string matching_to_json(const Cyclo& factor, const CellMatching& matching) {
    ordered_json j;
    j["factor"] = cyclo_to_json(factor);
    j["cell_map"] = matching.cell_map;
    j["edge_offset"] = matching.edge_offset;
    return j.dump();
}

std::string complex_to_json(const CellComplex& x) {
    ordered_json j;
    j["vertices"] = x.vertex_labels;
    ordered_json edges = ordered_json::array();
    for (const auto& e : x.edges) edges.push_back(ordered_json::array({e.first, e.second}));
    j["edges"] = std::move(edges);
    ordered_json faces = ordered_json::array();
    for (const auto& f : x.faces) {
        ordered_json face = ordered_json::array();
        for (const auto& [e, fwd] : f) face.push_back(ordered_json::array({e, fwd ? 1 : 0}));
        faces.push_back(std::move(face));
    }
    j["faces"] = std::move(faces);
    return j.dump();
}

} // namespace flatspin
