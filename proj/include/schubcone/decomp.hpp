#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schubcone/rootset.hpp"

namespace schubcone {

enum class DecompKind { rational, integral, iso, bi, increasing_rational, increasing_integral };
const char* to_string(DecompKind k);
DecompKind parse_decomp_kind(const std::string& s);
bool is_increasing(DecompKind k);

struct Term {
    Rational coefficient;
    Root generator;
};

struct DecompositionCertificate {
    Root target;
    std::vector<Term> terms;
    DecompKind kind = DecompKind::rational;
    bool outside_convention = false;  // Z-statement evaluated in a non simply laced type
};

struct FarkasCertificate {
    RationalVector functional;  // >= 0 on generators, < 0 on the target
};

struct RationalMembership {
    bool member = false;
    std::optional<DecompositionCertificate> decomposition;
    std::optional<FarkasCertificate> farkas;
};

// exact phase-1 simplex; both outcomes re-verified before returning
RationalMembership cone_member_rational(const Root& target, const std::vector<Root>& gens);

// DFS with height bounds. Generators must be nonzero with nonnegative
// coordinates and the target must have nonnegative coordinates.
std::optional<DecompositionCertificate> cone_member_integral(const Root& target, const std::vector<Root>& gens);

// number of ways to write target as a nonnegative integer combination of gens
BigInt count_integral_representations(const Root& target, const std::vector<Root>& gens);

bool verify_certificate(const DecompositionCertificate& c);
bool verify_farkas(const FarkasCertificate& f, const Root& target, const std::vector<Root>& gens);

// counters over every certificate check made by this process
struct CertificateStats {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
};
CertificateStats certificate_stats();

struct Decomposability {
    bool decomposable = false;
    std::optional<DecompositionCertificate> certificate;
};

// alpha must be an element of S. The weight selects the map used by the
// increasing kinds (ignored otherwise).
Decomposability is_decomposable(const WeylGroup& G, const Root& alpha, const WeightedRootSet& S, DecompKind kind,
                                WeightKind weight = WeightKind::demazure);

WeightedRootSet indecomposables(const WeylGroup& G, const WeightedRootSet& S, DecompKind kind,
                                WeightKind weight = WeightKind::demazure);

// alpha as a positive combination of S^{up A} with dominating weights.
// integral=true needs a simply laced type unless force is set.
DecompositionCertificate increasing_decomposition(const WeylGroup& G, const Root& alpha, const WeightedRootSet& S,
                                                  WeightKind weight, bool integral, bool force = false);

// gamma_i iso-indecomposable in I(x^{-1}) iff the word with letter i deleted is
// reduced. i is 1-based. Also runs the pair scan and checks that both agree.
bool iso_indec_via_word(const WeylGroup& G, const InversionTable& T, int i);

struct IsoPair {
    int j = -1, k = -1;  // indices into the generator list, j < k
    Rational c;          // c alpha = gens[j] + gens[k]
};
// all iso-decompositions of alpha by pairs from gens (alpha itself skipped)
std::vector<IsoPair> iso_pairs(const RootSystem& rs, const Root& alpha, const std::vector<Root>& gens);

}  // namespace schubcone
