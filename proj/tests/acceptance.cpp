// One line per acceptance criterion. Exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "schubcone/decomp.hpp"
#include "schubcone/hecke.hpp"
#include "schubcone/schubert.hpp"
#include "schubcone/verify.hpp"

using namespace schubcone;

namespace {

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

// runs a suite on each type and folds the reports
Outcome suites(const std::string& suite, std::initializer_list<const char*> types, SuiteConfig cfg = {},
               const std::function<std::string(const SuiteReport&)>& extra = nullptr) {
    Outcome o;
    cfg.jobs = jobs();
    for (const char* t : types) {
        auto r = run_suite(suite, RootSystemSpec::parse(t), cfg);
        std::string why;
        if (!r.pass()) why = std::to_string(r.violations.size()) + " violations, first: " + r.violations[0].instance + ": " + r.violations[0].what;
        if (why.empty() && extra) why = extra(r);
        o.detail += (o.detail.empty() ? "" : ", ") + std::string(t) + "=" + std::to_string(r.checked);
        if (!why.empty()) {
            o.pass = false;
            o.detail += " [" + why + "]";
        }
    }
    return o;
}

std::string need_counter(const SuiteReport& r, const std::string& key) {
    auto it = r.counters.find(key);
    return it != r.counters.end() && it->second > 0 ? "" : "counter " + key + " is zero";
}

// plain nested loops over coefficient vectors, each coefficient bounded by the target height
BigInt naive_count(const Root& target, const std::vector<Root>& gens) {
    const int h = height(target);
    std::vector<int> c(gens.size(), 0);
    BigInt n = 0;
    for (;;) {
        Root sum{std::vector<int>(target.size(), 0)};
        for (std::size_t k = 0; k < gens.size(); ++k)
            for (int m = 0; m < c[k]; ++m) sum = sum + gens[k];
        if (sum == target) n += 1;
        std::size_t k = 0;
        while (k < c.size() && ++c[k] > h) c[k++] = 0;
        if (k == c.size()) break;
    }
    return n;
}

Outcome integral_oracle() {
    WeylGroup G(RootSystemSpec{'B', 3});
    const auto& pos = G.roots().positive_roots();
    std::vector<Root> targets;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b)
            for (int c = 0; a + b + c <= 3; ++c)
                if (a + b + c > 0) targets.push_back(Root{a, b, c});
    const int N = static_cast<int>(pos.size());
    std::uint64_t checked = 0, bad = 0;
    for (int mask = 1; mask < (1 << N); ++mask) {
        if (__builtin_popcount(mask) > 6) continue;
        std::vector<Root> gens;
        for (int k = 0; k < N; ++k)
            if (mask >> k & 1) gens.push_back(pos[k]);
        for (const auto& t : targets) {
            BigInt n = naive_count(t, gens);
            auto cert = cone_member_integral(t, gens);
            if (cert.has_value() != (n > 0) || count_integral_representations(t, gens) != n) ++bad;
            if (cert && !verify_certificate(*cert)) ++bad;
            ++checked;
        }
    }
    return {bad == 0, std::to_string(checked) + " (set, target) pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome character_fixture() {
    WeylGroup G(RootSystemSpec{'A', 2});
    auto ch = kl_character_truncated(G, inversion_table(G, {1, 2, 1}), G.simple(1), 0);
    auto it = ch.find(Root{0, 0});
    bool ok = it != ch.end() && it->second == 1;
    return {ok, std::string("zeta=0 coefficient ") + (it == ch.end() ? "missing" : to_string(it->second))};
}

Outcome both(Outcome a, const Outcome& b) {
    a.pass = a.pass && b.pass;
    a.detail += "; " + b.detail;
    return a;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "fixed examples", [] {
             return suites("paper-examples", {"A2", "B2", "C2", "D4", "D5"}, {}, [](const SuiteReport& r) {
                 return r.type == "B2" && r.checked < 6 ? std::string("fewer than 6 B2 fixtures") : std::string();
             });
         }},
        {2, "reduced words and iso pairs", [] { return suites("reduced-iso", {"A3", "B3", "C3", "D4", "G2"}); }},
        {3, "cone equality", [] {
             return both(suites("cones", {"A2"}, {}, [](const SuiteReport& r) {
                             return r.checked == 19 ? std::string() : "A2 pairs " + std::to_string(r.checked) + " != 19";
                         }),
                         suites("cones", {"A3", "B3", "D4"}));
         }},
        {4, "tangent weights in the curve cone", [] {
             auto o = suites("main", {"A3", "D4"}, {}, [](const SuiteReport& r) {
                 return r.type == "D4" ? need_counter(r, "provenance:lakshmibai-D-w0") : std::string();
             });
             return both(o, suites("main", {"B2", "C2"}, {}, [](const SuiteReport& r) { return need_counter(r, "provenance:bc2-rank2"); }));
         }},
        {5, "classical indecomposability", [] { return suites("classical-indec", {"A3", "B3", "C3", "D4"}); }},
        {6, "oracle equivalence", [] {
             SuiteConfig cfg;
             cfg.word_length = 6;
             auto o = both(suites("reduced-iso", {"A2", "B2", "G2"}), suites("demazure", {"A2", "B2", "G2"}, cfg));
             o = both(o, integral_oracle());
             auto st = certificate_stats();
             Outcome c{st.checked > 0 && st.failed == 0,
                       std::to_string(st.checked) + " certificates re-verified, " + std::to_string(st.failed) + " failed"};
             return both(o, c);
         }},
        {7, "smoothness", [] {
             return suites("smooth", {"A3", "D4", "A4"}, {}, [](const SuiteReport& r) {
                 std::string m = need_counter(r, "gated_pairs");
                 if (m.empty() && r.type[0] == 'A') m = need_counter(r, "parabolic_pairs");
                 return m;
             });
         }},
        {8, "implication diagram", [] { return suites("allin", {"A3", "D4", "A4"}); }},
        {9, "truncated character", [] { return both(character_fixture(), suites("character", {"A2", "B2"})); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d (%s) %.2fs: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, s, o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
