#include "schubcone/io.hpp"

#include "schubcone/errors.hpp"

namespace schubcone {

json root_json(const RootSystem& rs, const Root& r) {
    json j;
    j["coords"] = r.coords;
    if (rs.is_classical()) j["eps"] = rs.epsilon_string(r);
    return j;
}

json roots_json(const RootSystem& rs, const std::vector<Root>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(root_json(rs, r));
    return a;
}

json elt_json(const WeylGroup& G, const WeylElt& w) { return G.format(w); }

json certificate_json(const RootSystem& rs, const DecompositionCertificate& c) {
    json j;
    j["kind"] = to_string(c.kind);
    j["target"] = root_json(rs, c.target);
    json terms = json::array();
    for (const auto& t : c.terms) terms.push_back({{"coefficient", to_string(t.coefficient)}, {"generator", root_json(rs, t.generator)}});
    j["terms"] = terms;
    if (c.outside_convention) j["note"] = "outside simply laced convention";
    return j;
}

json farkas_json(const FarkasCertificate& f) {
    json a = json::array();
    for (const auto& q : f.functional) a.push_back(to_string(q));
    return {{"functional", a}};
}

json inversion_table_json(const WeylGroup& G, const InversionTable& T) {
    const auto& rs = G.roots();
    json rows = json::array();
    for (int i = 0; i < T.size(); ++i) {
        json row;
        row["position"] = i + 1;
        row["letter"] = T.word[i];
        row["gamma"] = root_json(rs, T.gammas[i]);
        row["x_i"] = elt_json(G, T.coxeters[i]);
        row["z_i"] = elt_json(G, T.demazures[i]);
        rows.push_back(row);
    }
    return {{"type", G.name()}, {"word", format_word(T.word)}, {"x", elt_json(G, T.x)}, {"rows", rows}};
}

json weight_report_json(const WeylGroup& G, const WeightReport& R) {
    const auto& rs = G.roots();
    json j;
    j["type"] = G.name();
    j["x"] = elt_json(G, R.x);
    j["w"] = elt_json(G, R.w);
    j["levi"] = R.levi;
    j["word"] = format_word(R.word);
    j["phi_cur"] = roots_json(rs, R.phi_cur);
    j["phi_cur_kl"] = roots_json(rs, R.phi_cur_kl);
    j["phi_tan"] = R.phi_tan ? roots_json(rs, *R.phi_tan) : json(nullptr);
    j["provenance"] = R.provenance;
    j["phi_oth"] = R.phi_oth ? roots_json(rs, *R.phi_oth) : json(nullptr);
    j["dim_x"] = R.dim_x;
    j["dim_y"] = R.dim_y;
    json flags;
    flags["rationally_smooth"] = R.rationally_smooth;
    flags["smooth"] = R.smooth ? json(*R.smooth) : json(nullptr);
    flags["fully_commutative_x"] = R.fully_commutative_x;
    flags["cominuscule_x"] = R.cominuscule_x;
    flags["cominuscule_p"] = R.cominuscule_p;
    flags["coplanar_inversion"] = R.coplanar_inversion;
    j["flags"] = flags;
    j["reduced_subexpressions"] = to_string(R.reduced_subexpressions);
    j["subexpression_criterion"] = R.subexpression_criterion.empty() ? json(nullptr) : json(R.subexpression_criterion);
    return j;
}

json character_json(const RootSystem& rs, const std::map<Root, BigInt>& ch) {
    json a = json::array();
    for (const auto& [z, c] : ch) a.push_back({{"zeta", root_json(rs, z)}, {"coefficient", to_string(c)}});
    return a;
}

Root root_from_json(const RootSystem& rs, const json& j) {
    if (j.is_object() && j.contains("coords")) return Root(j.at("coords").get<std::vector<int>>());
    if (j.is_array()) return Root(j.get<std::vector<int>>());
    if (j.is_string()) return rs.parse_root(j.get<std::string>());
    throw Error("cannot read a root from " + j.dump());
}

WeylElt elt_from_json(const WeylGroup& G, const json& j) {
    if (!j.is_string()) throw Error("elements are serialized as word strings; got " + j.dump());
    return G.from_word(parse_word(j.get<std::string>()));
}

}  // namespace schubcone
