#include "mz/json_io.hpp"

namespace mz {

Json polynomial_to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(format_rational(c));
    return arr;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial: expected a JSON array of rational strings");
    std::vector<Rational> coeffs;
    for (const auto& e : j) coeffs.push_back(parse_rational(e.get<std::string>()));
    return Polynomial{std::move(coeffs)};
}

Json difference_to_json(const DifferenceOp& d) {
    Json terms = Json::array();
    for (const auto& t : d.terms)
        terms.push_back({{"coeff", format_rational(t.coeff)}, {"node", format_rational(t.node)}});
    return Json{{"terms", std::move(terms)}};
}

DifferenceOp difference_from_json(const Json& j) {
    if (!j.contains("terms")) throw ParseError("difference: missing \"terms\"");
    DifferenceOp d;
    for (const auto& t : j.at("terms"))
        d.terms.push_back({parse_rational(t.at("coeff").get<std::string>()),
                           parse_rational(t.at("node").get<std::string>())});
    return d;
}

Json geometric_to_json(const GeometricDifference& g) {
    Json pos = Json::object(), neg = Json::object();
    for (const auto& [k, c] : g.pos) pos[std::to_string(k)] = format_rational(c);
    for (const auto& [k, c] : g.neg) neg[std::to_string(k)] = format_rational(c);
    Json out{{"q", format_rational(g.q)},
             {"pos", std::move(pos)},
             {"neg", std::move(neg)},
             {"zero", format_rational(g.zero_coeff)}};
    if (g.shift != 0) out["shift"] = g.shift;
    return out;
}

GeometricDifference geometric_from_json(const Json& j) {
    GeometricDifference g;
    g.q = parse_rational(j.at("q").get<std::string>());
    const Json pos = j.value("pos", Json::object());
    const Json neg = j.value("neg", Json::object());
    for (const auto& [k, c] : pos.items())
        g.pos[std::stoi(k)] = parse_rational(c.get<std::string>());
    for (const auto& [k, c] : neg.items())
        g.neg[std::stoi(k)] = parse_rational(c.get<std::string>());
    if (j.contains("zero")) g.zero_coeff = parse_rational(j.at("zero").get<std::string>());
    g.shift = j.value("shift", 0);
    return g;
}

namespace {

Json root_to_json(const ComplexRoot& r) {
    Json out{{"re", r.value.real()},
             {"im", r.value.imag()},
             {"radius", r.radius},
             {"exact", nullptr},
             {"mult", r.multiplicity}};
    if (r.exact) out["exact"] = format_rational(*r.exact);
    return out;
}

} // namespace

Json rootset_to_json(const RootSet& rs) {
    Json arr = Json::array();
    for (const auto& r : rs.roots) arr.push_back(root_to_json(r));
    return arr;
}

Json verdict_to_json(const Verdict& v) {
    Json evidence = Json::array();
    for (const auto& e : v.evidence) {
        Json entry = root_to_json(e.root);
        entry["membership"] = to_string(e.membership);
        entry["source"] = to_string(e.source);
        evidence.push_back(std::move(entry));
    }
    Json out{{"status", to_string(v.status)},
             {"n", v.n},
             {"annulus",
              {{"inner", v.annulus.inner},
               {"outer", v.annulus.outer},
               {"inner_open", v.annulus.inner_open},
               {"outer_open", v.annulus.outer_open}}},
             {"evidence", std::move(evidence)}};
    if (v.detected_order) out["detected_order"] = *v.detected_order;
    if (v.shift != 0) out["shift"] = v.shift;
    if (!v.note.empty()) out["note"] = v.note;
    return out;
}

Json grid_to_json(const GridFunction& f) {
    Json samples = Json::object();
    for (int k = f.k_min; k <= f.k_max; ++k)
        samples[std::to_string(k)] = {f.at(k).real(), f.at(k).imag()};
    Json out{{"q", format_rational(f.q)},
             {"zero", {f.zero.real(), f.zero.imag()}},
             {"samples", std::move(samples)}};
    if (f.two_sided()) {
        Json negs = Json::object();
        for (int k = f.k_min; k <= f.k_max; ++k)
            negs[std::to_string(k)] = {f.at_neg(k).real(), f.at_neg(k).imag()};
        out["neg_samples"] = std::move(negs);
    }
    return out;
}

Json decay_to_json(const DecayReport& r) {
    Json ratios = Json::array();
    for (const auto& [k, v] : r.ratios) ratios.push_back({k, v});
    return Json{{"m", r.m},
                {"ratios", std::move(ratios)},
                {"fitted_slope", r.fitted_slope},
                {"verdict_o", r.verdict_o},
                {"infimum", r.infimum}};
}

Json alternating_to_json(const AlternatingSystem& s) {
    Json c = Json::array(), x = Json::array(), exact = Json::array();
    for (const auto& v : s.c) c.push_back(format_rational(v));
    for (double v : s.x) x.push_back(v);
    for (const auto& e : s.x_exact) exact.push_back(e ? Json(format_rational(*e)) : Json(nullptr));
    return Json{{"c", std::move(c)}, {"s", s.s}, {"x", std::move(x)}, {"x_exact", std::move(exact)}};
}

Json node_family_to_json(const NodeFamilyReport& r) {
    Json forced = Json::array();
    for (const auto& f : r.forced)
        forced.push_back({{"value", format_rational(f.value)},
                          {"side", f.side == SymbolSide::Plus ? "PLUS" : "MINUS"},
                          {"verified", f.verified}});
    auto roots = [](const std::vector<ComplexRoot>& rs) {
        Json arr = Json::array();
        for (const auto& root : rs) arr.push_back(root_to_json(root));
        return arr;
    };
    Json remaining = Json::object();
    remaining["plus"] = roots(r.remaining.plus_remaining);
    remaining["minus"] = roots(r.remaining.minus_remaining);
    remaining["all_real"] = r.remaining.all_real;
    remaining["all_distinct"] = r.remaining.all_distinct;
    remaining["all_inside"] = r.remaining.all_inside;
    Json out = Json::object();
    out["verdict"] = verdict_to_json(r.verdict);
    out["n"] = r.n;
    out["l"] = r.l;
    out["t"] = r.t;
    out["has_zero_node"] = r.has_zero_node;
    out["counting_ok"] = r.counting_ok;
    out["forced_roots"] = std::move(forced);
    out["remaining"] = std::move(remaining);
    return out;
}

} // namespace mz
