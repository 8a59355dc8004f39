#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitkit/param_curve.hpp"
#include "splitkit/rnc.hpp"

namespace splitkit {

// The explicitly constructed complete-intersection families with published
// splitting types.
enum class FamilyTag {
    cor_quadric,   // one quadric through the full rational normal curve
    ci_22,         // two quadrics, n >= 5
    ci_222,        // three quadrics, n >= 6
    quadrics_2k1,  // k quadrics in P^{2k+1}, kernel O(4)^k
    quadrics_2k,   // k quadrics in P^{2k}, kernel O(2)^{k-1}
    quadrics_k2,   // k quadrics in P^{k+2}, line-bundle kernel
    quartic_4n1,   // quintic curve in a quartic threefold, via its presentation
};

struct FamilyId {
    FamilyTag tag;
    int n = 0;
    int k = 0;
    int e = 0;
};

std::string family_tag_name(FamilyTag t);
std::optional<FamilyTag> parse_family_tag(const std::string& s);

// The quadric combos of the family (everything except quartic_4n1).
std::vector<HypersurfaceCombo> build_family(const PrimeField& f, const FamilyId& id);
RncModel family_model(const FamilyId& id);

// The quintic-in-a-quartic data: curve, ideal presentation, and the two
// published hypersurface rows (one for characteristic 2, one otherwise).
ParamCurve<PrimeField> quartic_curve(const PrimeField& f);
Presentation quartic_presentation(const PrimeField& f);
HypersurfaceOnGens quartic_hypersurface(const PrimeField& f);

struct FamilyVerification {
    SplittingType computed;
    SplittingType expected;
    bool match;
};

FamilyVerification verify_family(const PrimeField& f, const FamilyId& id, std::uint64_t seed =
                                     kDefaultSeed);

// balanced multiset of rank n-k-1 and degree e(n-d+1)-2
SplittingType expected_balanced(int n, const std::vector<int>& degrees, int e);

// ceil((n-k+1)/(n-d+1)); the least degree a very free curve can have
long long very_free_min_degree(int n, const std::vector<int>& degrees);

bool fano_check(int n, const std::vector<int>& degrees);

// the degree-bound comparison used in the induction over hypersurfaces of
// degree d_next >= 3 stacked on j quadrics
bool induction_inequality(int n, int j, int d_next);

struct ScanReport {
    int k = 0;
    int n = 0;
    std::uint32_t characteristic = 0;
    int trials = 0;
    int balanced = 0;
    std::vector<std::pair<std::vector<int>, int>> splittings;  // type -> count
    int smooth_failures = 0;
    std::uint64_t seed = 0;
};

// Random complete intersections of k quadrics through the degree-n rational
// normal curve: samples scalar coefficients, discards the samples where the
// intersection is singular along the curve, tallies kernel splittings.
ScanReport conjecture_scan(int k, int n, std::uint32_t characteristic, int trials,
                           std::uint64_t seed, unsigned jobs = 1);

}  // namespace splitkit
