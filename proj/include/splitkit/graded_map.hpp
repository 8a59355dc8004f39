#pragma once

#include <cstdint>
#include <vector>

#include "splitkit/biform.hpp"
#include "splitkit/bundle.hpp"
#include "splitkit/dense_matrix.hpp"
#include "splitkit/fp.hpp"
#include "splitkit/rng.hpp"

namespace splitkit {

using FpForm = BiForm<PrimeField>;

// Homomorphism of sums of line bundles on the projective line. Source and
// target degrees are kept in basis order (not sorted); entry (j, i) is a form
// of degree target[j] - source[i], the zero form when that is negative.
class GradedMap {
  public:
    GradedMap(PrimeField field, std::vector<int> source_degrees, std::vector<int> target_degrees,
              std::vector<std::vector<FpForm>> entries);

    // zero map
    GradedMap(PrimeField field, std::vector<int> source_degrees, std::vector<int> target_degrees);

    const PrimeField& field() const { return field_; }
    const std::vector<int>& source_degrees() const { return src_; }
    const std::vector<int>& target_degrees() const { return tgt_; }
    BundleSum source() const { return BundleSum(src_); }
    BundleSum target() const { return BundleSum(tgt_); }
    const FpForm& entry(std::size_t j, std::size_t i) const { return e_[j][i]; }
    void set_entry(std::size_t j, std::size_t i, FpForm f);

    GradedMap dual() const;
    GradedMap twist(int t) const;
    // same source required; concatenates targets/rows
    GradedMap stack(const GradedMap& other) const;

    // section-level matrix of the map twisted by t; rows = target monomials,
    // cols = source monomials
    DenseMatrix<PrimeField> section_matrix(int t) const;

  private:
    PrimeField field_;
    std::vector<int> src_, tgt_;
    std::vector<std::vector<FpForm>> e_;
};

// Rank at the generic point of the line, computed exactly by fraction-free
// elimination over F_p[t]. Correct in every characteristic (evaluation at
// random rational points can miss the generic rank over tiny fields).
std::size_t generic_rank(const GradedMap& m);

// The probe the docs describe: rank of the evaluation at `points` random
// points of the line, maximized. Lower-bounds generic_rank.
std::size_t sampled_generic_rank(const GradedMap& m, Rng& rng, int points = 3);

// Splitting type of the kernel bundle, reconstructed from section counts
// across twists; every measured count is re-checked against the result.
SplittingType kernel_splitting(const GradedMap& m);

struct KernelGenerator {
    int degree;                // the O(degree) summand this generator spans
    std::vector<FpForm> comp;  // component i has degree source[i] - degree
};

// Explicit minimal generators of the kernel module (a free module; one
// generator per kernel summand).
std::vector<KernelGenerator> kernel_generators(const GradedMap& m);

// All maximal minors (size = #rows); requires rows <= cols.
std::vector<FpForm> maximal_minors(const GradedMap& m);

// True iff the map has full rank at every point of the line: the maximal
// minors have no common zero (their gcd is a nonzero constant).
bool surjective_everywhere(const GradedMap& m);

// Homomorphism to O(d) with uniformly random entries of degree d - a_i.
GradedMap random_hom(const PrimeField& field, const BundleSum& source, int d, Rng& rng);

// Fraction of trials whose kernel splitting is balanced.
double balanced_kernel_rate(const PrimeField& field, const BundleSum& source, int d, int trials,
                            Rng& rng);

}  // namespace splitkit
