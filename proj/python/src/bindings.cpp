#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schubcone/decomp.hpp"
#include "schubcone/errors.hpp"
#include "schubcone/hecke.hpp"
#include "schubcone/io.hpp"
#include "schubcone/schubert.hpp"
#include "schubcone/verify.hpp"

namespace py = pybind11;
using namespace schubcone;

// Results cross the boundary as JSON text; the Python side decodes them.
namespace {

WeylGroup group(const std::string& type) { return WeylGroup(RootSystemSpec::parse(type)); }

WeylElt elt(const WeylGroup& G, const std::string& s) {
    return s == "w0" ? G.longest_element() : G.from_word(parse_word(s));
}

std::string positive_roots(const std::string& type) {
    RootSystem rs(RootSystemSpec::parse(type));
    return roots_json(rs, rs.positive_roots()).dump();
}

std::string inversion_table_(const std::string& type, const std::vector<int>& word) {
    auto G = group(type);
    return inversion_table_json(G, inversion_table(G, word)).dump();
}

std::string indecomposables_(const std::string& type, const std::vector<int>& word, const std::string& kind,
                             const std::string& weight) {
    auto G = group(type);
    auto S = weighted_set(G, inversion_table(G, word));
    auto I = indecomposables(G, S, parse_decomp_kind(kind), parse_weight_kind(weight));
    return roots_json(G.roots(), I.elements).dump();
}

std::string cone_member(const std::string& type, const std::vector<std::string>& gens, const std::string& target,
                        const std::string& ring) {
    RootSystem rs(RootSystemSpec::parse(type));
    std::vector<Root> g;
    for (const auto& s : gens) g.push_back(rs.parse_root(s));
    Root t = rs.parse_root(target);
    json j;
    if (ring == "Q") {
        auto r = cone_member_rational(t, g);
        j["member"] = r.member;
        if (r.decomposition) j["certificate"] = certificate_json(rs, *r.decomposition);
        if (r.farkas) j["farkas"] = farkas_json(*r.farkas);
    } else if (ring == "Z") {
        auto c = cone_member_integral(t, g);
        j["member"] = c.has_value();
        if (c) j["certificate"] = certificate_json(rs, *c);
    } else {
        throw Error("ring must be Q or Z");
    }
    return j.dump();
}

std::string weight_report_(const std::string& type, const std::string& x, const std::string& w,
                           const std::vector<int>& levi) {
    auto G = group(type);
    return weight_report_json(G, weight_report(G, elt(G, x), elt(G, w), levi)).dump();
}

std::string character(const std::string& type, const std::vector<int>& word, const std::string& w, int bound) {
    auto G = group(type);
    return character_json(G.roots(), kl_character_truncated(G, inversion_table(G, word), elt(G, w), bound)).dump();
}

std::string run_suite_(const std::string& name, const std::string& type, std::uint64_t seed, int samples, int jobs) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.jobs = jobs;
    SuiteReport r;
    {
        py::gil_scoped_release nogil;
        r = run_suite(name, RootSystemSpec::parse(type), cfg);
    }
    return report_json(r).dump();
}

}  // namespace

PYBIND11_MODULE(_schubcone, m) {
    m.doc() = "root systems, Demazure products and Schubert weight cones";

    py::register_exception<Error>(m, "SchubconeError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    m.def("group_order", [](const std::string& t) { return to_string(group(t).order()); });
    m.def("reduced_word", [](const std::string& t, const std::string& x) {
        auto G = group(t);
        return G.lexmin_reduced_word(elt(G, x));
    });
    m.def("demazure_product", [](const std::string& t, const std::vector<int>& q) {
        auto G = group(t);
        return G.lexmin_reduced_word(demazure_product(G, q));
    });
    m.def("bruhat_leq", [](const std::string& t, const std::string& u, const std::string& w) {
        auto G = group(t);
        return G.bruhat_leq(elt(G, u), elt(G, w));
    });
    m.def("positive_roots", &positive_roots);
    m.def("inversion_table", &inversion_table_);
    m.def("indecomposables", &indecomposables_, py::arg("type"), py::arg("word"), py::arg("kind"),
          py::arg("weight") = "demazure");
    m.def("cone_member", &cone_member, py::arg("type"), py::arg("gens"), py::arg("target"), py::arg("ring") = "Q");
    m.def("weight_report", &weight_report_, py::arg("type"), py::arg("x"), py::arg("w"),
          py::arg("levi") = std::vector<int>{});
    m.def("character", &character);
    m.def("suite_names", &suite_names);
    m.def("run_suite", &run_suite_, py::arg("name"), py::arg("type"), py::arg("seed") = 20240601,
          py::arg("samples") = 10, py::arg("jobs") = 1);
}
