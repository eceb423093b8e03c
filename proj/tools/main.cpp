#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "schubcone/decomp.hpp"
#include "schubcone/errors.hpp"
#include "schubcone/hecke.hpp"
#include "schubcone/io.hpp"
#include "schubcone/schubert.hpp"
#include "schubcone/signed_perm.hpp"
#include "schubcone/verify.hpp"

using namespace schubcone;

namespace {

enum Exit { ok = 0, negative = 1, usage = 2 };

struct Options {
    std::string type = "A2";
    std::string format = "table";
    std::string word, x, w, w_from_u, levi, kind = "rational", weight = "demazure", gens, target, ring = "Q";
    std::string suite, out;
    int jobs = 1, bound = 2, samples = 10, word_length = 6;
    std::uint64_t seed = 20240601;
    std::optional<std::uint64_t> max_order;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
    return o + "\"";
}

void emit(const Table& t, const std::string& format, json meta) {
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : t.rows) {
            json o;
            for (std::size_t c = 0; c < t.columns.size(); ++c) o[t.columns[c]] = r[c];
            rows.push_back(o);
        }
        meta["rows"] = rows;
        std::cout << meta.dump(2) << "\n";
    } else if (format == "csv") {
        for (std::size_t c = 0; c < t.columns.size(); ++c) std::cout << (c ? "," : "") << csv_cell(t.columns[c]);
        std::cout << "\n";
        for (const auto& r : t.rows) {
            for (std::size_t c = 0; c < r.size(); ++c) std::cout << (c ? "," : "") << csv_cell(r[c]);
            std::cout << "\n";
        }
    } else {
        std::vector<std::size_t> width(t.columns.size());
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            width[c] = t.columns[c].size();
            for (const auto& r : t.rows) width[c] = std::max(width[c], r[c].size());
        }
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t c = 0; c < r.size(); ++c) {
                std::cout << r[c];
                if (c + 1 < r.size()) std::cout << std::string(width[c] - r[c].size() + 2, ' ');
            }
            std::cout << "\n";
        };
        line(t.columns);
        for (const auto& r : t.rows) line(r);
    }
}

json meta(const std::string& command, const WeylGroup& G) {
    json m;
    m["schema_version"] = 1;
    m["command"] = command;
    m["type"] = G.name();
    return m;
}

std::string root_cell(const RootSystem& rs, const Root& r) {
    return rs.is_classical() ? rs.epsilon_string(r) : rs.format(r);
}

Levi parse_levi(const WeylGroup& G, const std::string& s) {
    Levi J = parse_word(s);
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    for (int j : J)
        if (j < 1 || j > G.rank()) throw Error("levi index " + std::to_string(j) + " out of range 1.." + std::to_string(G.rank()));
    return J;
}

WeylElt parse_elt(const WeylGroup& G, const std::string& s) {
    if (s == "w0") return G.longest_element();
    return G.from_word(parse_word(s));
}

// separated by ';' or by whitespace outside brackets
std::vector<Root> parse_roots(const RootSystem& rs, const std::string& s) {
    std::vector<Root> out;
    std::string item;
    int depth = 0;
    auto flush = [&] {
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(rs.parse_root(item));
        item.clear();
    };
    for (char c : s) {
        depth += c == '[';
        depth -= c == ']';
        if (c == ';' || (depth == 0 && std::isspace(static_cast<unsigned char>(c)))) flush();
        else item += c;
    }
    flush();
    return out;
}

Word word_or_x(const WeylGroup& G, const Options& o) {
    if (!o.word.empty()) return parse_word(o.word);
    if (!o.x.empty()) return G.lexmin_reduced_word(parse_elt(G, o.x));
    throw Error("give --word or --x");
}

// --------------------------------------------------------------- commands

int cmd_roots(const Options& o) {
    WeylGroup G(RootSystemSpec::parse(o.type));
    const auto& rs = G.roots();
    Table t{{"index", "coords", "height"}, {}};
    if (rs.is_classical()) t.columns.push_back("eps");
    for (int i = 0; i < rs.num_positive(); ++i) {
        const auto& r = rs.root(i);
        std::vector<std::string> row{std::to_string(i), rs.format(r), std::to_string(height(r))};
        if (rs.is_classical()) row.push_back(rs.epsilon_string(r));
        t.rows.push_back(row);
    }
    emit(t, o.format, meta("roots", G));
    return ok;
}

int cmd_weyl(const Options& o) {
    WeylGroup G(RootSystemSpec::parse(o.type));
    const auto& rs = G.roots();
    WeylElt x = o.word.empty() && o.x.empty() ? G.longest_element() : G.from_word(word_or_x(G, o));
    Table t{{"field", "value"}, {}};
    auto add = [&](const std::string& k, const std::string& v) { t.rows.push_back({k, v}); };
    add("word", G.format(x));
    add("length", std::to_string(G.length(x)));
    add("order", to_string(G.order()));
    add("right_descents", format_word(G.right_descents(x)));
    add("left_descents", format_word(G.left_descents(x)));
    add("reduced_words", to_string(G.count_reduced_words(x)));
    add("fully_commutative", G.is_fully_commutative(x) ? "true" : "false");
    add("cominuscule", is_cominuscule_elt(G, x) ? "true" : "false");
    if (rs.is_classical()) add("signed_permutation", format_signed_permutation(to_signed_permutation(G, x)));
    std::string imgs;
    for (const auto& r : G.simple_images(x)) imgs += (imgs.empty() ? "" : " ") + root_cell(rs, r);
    add("simple_images", imgs);
    emit(t, o.format, meta("weyl", G));
    return ok;
}

int cmd_invset(const Options& o) {
    WeylGroup G(RootSystemSpec::parse(o.type));
    const auto& rs = G.roots();
    auto T = inversion_table(G, word_or_x(G, o));
    if (o.format == "json") {
        json j = meta("invset", G);
        j.update(inversion_table_json(G, T));
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    Table t{{"i", "letter", "gamma", "x_i", "z_i"}, {}};
    for (int i = 0; i < T.size(); ++i)
        t.rows.push_back({std::to_string(i + 1), std::to_string(T.word[i]), root_cell(rs, T.gammas[i]),
                          G.format(T.coxeters[i]), G.format(T.demazures[i])});
    emit(t, o.format, meta("invset", G));
    return ok;
}

int cmd_indec(const Options& o) {
    WeylGroup G(RootSystemSpec::parse(o.type));
    const auto& rs = G.roots();
    auto T = inversion_table(G, word_or_x(G, o));
    auto S = weighted_set(G, T);
    DecompKind kind = parse_decomp_kind(o.kind);
    WeightKind wk = parse_weight_kind(o.weight);
    Table t{{"i", "gamma", "indecomposable", "certificate"}, {}};
    for (int i = 0; i < S.size(); ++i) {
        auto d = is_decomposable(G, S.elements[i], S, kind, wk);
        std::string cert;
        if (d.certificate)
            for (const auto& term : d.certificate->terms)
                cert += (cert.empty() ? "" : " + ") + to_string(term.coefficient) + "(" + root_cell(rs, term.generator) + ")";
        t.rows.push_back({std::to_string(i + 1), root_cell(rs, S.elements[i]), d.decomposable ? "false" : "true", cert});
    }
    json m = meta("indec", G);
    m["kind"] = to_string(kind);
    m["weight"] = to_string(wk);
    emit(t, o.format, m);
    return ok;
}

int cmd_cone(const Options& o) {
    WeylGroup G(RootSystemSpec::parse(o.type));
    const auto& rs = G.roots();
    auto gens = parse_roots(rs, o.gens);
    if (o.target.empty()) throw Error("--target is required");
    Root target = rs.parse_root(o.target);
    json j = meta("cone", G);
    j["ring"] = o.ring;
    j["target"] = root_json(rs, target);
    j["gens"] = roots_json(rs, gens);
    bool member = false;
    if (o.ring == "Q") {
        auto r = cone_member_rational(target, gens);
        member = r.member;
        j["member"] = member;
        if (r.decomposition) j["certificate"] = certificate_json(rs, *r.decomposition);
        if (r.farkas) j["farkas"] = farkas_json(*r.farkas);
    } else if (o.ring == "Z") {
        auto c = cone_member_integral(target, gens);
        member = c.has_value();
        j["member"] = member;
        if (c) j["certificate"] = certificate_json(rs, *c);
    } else {
        throw Error("--ring must be Q or Z");
    }
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        Table t{{"coefficient", "generator"}, {}};
        if (j.contains("certificate"))
            for (const auto& term : j["certificate"]["terms"])
                t.rows.push_back({term["coefficient"].get<std::string>(), term["generator"].value("eps", term["generator"]["coords"].dump())});
        if (o.format == "table") std::cout << "member: " << (member ? "yes" : "no") << "\n";
        if (member) emit(t, o.format, j);
        else if (j.contains("farkas") && o.format == "table")
            std::cout << "farkas functional: " << j["farkas"]["functional"].dump() << "\n";
    }
    return member ? ok : negative;
}

struct PairInput {
    WeylElt x, w;
    Levi J;
};

PairInput pair_input(const WeylGroup& G, const Options& o) {
    PairInput p;
    p.J = parse_levi(G, o.levi);
    p.x = o.x.empty() ? G.longest_element() : parse_elt(G, o.x);
    if (!o.w_from_u.empty()) {
        if (!o.w.empty()) throw Error("--w and --w-from-u are exclusive");
        p.w = G.multiply(G.from_word(parse_word(o.w_from_u)), G.longest_element());
    } else {
        p.w = parse_elt(G, o.w);
    }
    return p;
}

int emit_report(const std::string& cmd, const Options& o, const WeylGroup& G, const WeightReport& R) {
    const auto& rs = G.roots();
    if (o.format == "json") {
        json j = meta(cmd, G);
        j.update(weight_report_json(G, R));
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    auto list = [&](const std::vector<Root>& v) {
        std::string s;
        for (const auto& r : v) s += (s.empty() ? "" : " ") + root_cell(rs, r);
        return s;
    };
    Table t{{"field", "value"}, {}};
    auto add = [&](const std::string& k, const std::string& v) { t.rows.push_back({k, v}); };
    add("x", G.format(R.x));
    add("w", G.format(R.w));
    add("levi", format_word(R.levi));
    add("phi_cur", list(R.phi_cur));
    add("phi_cur_kl", list(R.phi_cur_kl));
    add("phi_tan", R.phi_tan ? list(*R.phi_tan) : "unknown");
    add("provenance", R.provenance);
    if (R.phi_oth) add("phi_oth", list(*R.phi_oth));
    add("dim_x", std::to_string(R.dim_x));
    add("dim_y", std::to_string(R.dim_y));
    add("rationally_smooth", R.rationally_smooth ? "true" : "false");
    add("smooth", R.smooth ? (*R.smooth ? "true" : "false") : "unknown");
    add("reduced_subexpressions", to_string(R.reduced_subexpressions));
    add("subexpression_criterion", R.subexpression_criterion);
    add("fully_commutative_x", R.fully_commutative_x ? "true" : "false");
    add("cominuscule_x", R.cominuscule_x ? "true" : "false");
    add("cominuscule_p", R.cominuscule_p ? "true" : "false");
    emit(t, o.format, meta(cmd, G));
    return ok;
}

int cmd_report(const std::string& cmd, const Options& o) {
    WeylGroup G(RootSystemSpec::parse(o.type));
    auto p = pair_input(G, o);
    std::optional<Word> word;
    if (!o.word.empty()) word = parse_word(o.word);
    auto R = weight_report(G, p.x, p.w, p.J, word);
    int rc = emit_report(cmd, o, G, R);
    if (cmd == "smooth") return R.smooth && *R.smooth ? ok : negative;
    return rc;
}

int cmd_character(const Options& o) {
    WeylGroup G(RootSystemSpec::parse(o.type));
    const auto& rs = G.roots();
    auto T = inversion_table(G, word_or_x(G, o));
    WeylElt w = parse_elt(G, o.w);
    auto ch = kl_character_truncated(G, T, w, o.bound);
    Table t{{"zeta", "coefficient"}, {}};
    for (const auto& [z, c] : ch) t.rows.push_back({rs.format(z), to_string(c)});
    json m = meta("character", G);
    m["word"] = format_word(T.word);
    m["w"] = G.format(w);
    m["bound"] = o.bound;
    emit(t, o.format, m);
    return ok;
}

int cmd_verify(const Options& o) {
    SuiteConfig cfg;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.jobs = o.jobs;
    cfg.word_length = o.word_length;
    cfg.height_bound = o.bound;
    cfg.max_order = o.max_order;
    auto rep = run_suite(o.suite, RootSystemSpec::parse(o.type), cfg);
    json j = report_json(rep);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw Error("cannot write " + o.out);
        f << j.dump(2) << "\n";
    }
    if (o.format == "json" && o.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.suite << " " << rep.type << ": " << (rep.pass() ? "PASS" : "FAIL") << " checked=" << rep.checked
                  << " violations=" << rep.violations.size() << " elapsed_ms=" << static_cast<long>(rep.elapsed_ms) << "\n";
        for (std::size_t i = 0; i < rep.violations.size() && i < 20; ++i)
            std::cout << "  " << rep.violations[i].instance << ": " << rep.violations[i].what << "\n";
    }
    return rep.pass() ? ok : negative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"schubcone: root systems, Demazure products and Schubert weight cones"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--type", o.type, "root system type, e.g. A3, B2, D4")->required();
        sub->add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--max-order", o.max_order, "group order guard");
    };
    auto pair_opts = [&](CLI::App* sub) {
        sub->add_option("--x", o.x, "word for x, or w0 (default w0)");
        sub->add_option("--w", o.w, "word for w");
        sub->add_option("--w-from-u", o.w_from_u, "word for u; sets w = u w0");
        sub->add_option("--levi", o.levi, "simple indices of the Levi, e.g. 1,2");
        sub->add_option("--word", o.word, "reduced word for x used in the report");
    };

    auto* roots = app.add_subcommand("roots", "list positive roots");
    common(roots);
    auto* weyl = app.add_subcommand("weyl", "describe a Weyl group element");
    common(weyl);
    weyl->add_option("--word", o.word, "word");
    weyl->add_option("--x", o.x, "word or w0");
    auto* invset = app.add_subcommand("invset", "inversion table of a reduced word");
    common(invset);
    invset->add_option("--word", o.word, "reduced word");
    invset->add_option("--x", o.x, "element (lexmin word is used)");
    auto* indec = app.add_subcommand("indec", "indecomposable elements of I(x^-1)");
    common(indec);
    indec->add_option("--word", o.word, "reduced word");
    indec->add_option("--x", o.x, "element (lexmin word is used)");
    indec->add_option("--kind", o.kind, "rational, integral, iso, bi, increasing-rational, increasing-integral");
    indec->add_option("--weight", o.weight, "demazure, coxeter or none");
    auto* cone = app.add_subcommand("cone", "cone membership with certificate");
    common(cone);
    cone->add_option("--gens", o.gens, "generators separated by ';' or spaces")->required();
    cone->add_option("--target", o.target, "target vector")->required();
    cone->add_option("--ring", o.ring, "Q or Z")->check(CLI::IsMember({"Q", "Z"}));
    auto* curves = app.add_subcommand("curves", "curve weights and dimensions");
    common(curves);
    pair_opts(curves);
    auto* tangent = app.add_subcommand("tangent", "tangent weights where computable");
    common(tangent);
    pair_opts(tangent);
    auto* smooth = app.add_subcommand("smooth", "smoothness at x (exit 1 unless smooth)");
    common(smooth);
    pair_opts(smooth);
    auto* character = app.add_subcommand("character", "truncated signed character");
    common(character);
    character->add_option("--word", o.word, "reduced word for x");
    character->add_option("--x", o.x, "element (lexmin word is used)");
    character->add_option("--w", o.w, "word for w");
    character->add_option("--bound", o.bound, "height bound");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify);
    verify->add_option("--suite", o.suite, "suite name")->required();
    verify->add_option("--jobs", o.jobs, "worker threads");
    verify->add_option("--seed", o.seed, "seed for sampled reduced words");
    verify->add_option("--samples", o.samples, "random reduced words per element");
    verify->add_option("--word-length", o.word_length, "demazure suite word length cap");
    verify->add_option("--bound", o.bound, "character suite height bound");
    verify->add_option("--out", o.out, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*roots) return cmd_roots(o);
        if (*weyl) return cmd_weyl(o);
        if (*invset) return cmd_invset(o);
        if (*indec) return cmd_indec(o);
        if (*cone) return cmd_cone(o);
        if (*curves) return cmd_report("curves", o);
        if (*tangent) return cmd_report("tangent", o);
        if (*smooth) return cmd_report("smooth", o);
        if (*character) return cmd_character(o);
        if (*verify) return cmd_verify(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return usage;
}
