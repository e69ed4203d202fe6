#pragma once

#include "plgroup/plmap.hpp"

#include <vector>

namespace plgroup {

// Reduced tree pair stored as the two leaf partitions (standard dyadic
// intervals partitioning [0,1], in left-to-right order).
struct TreePair {
    std::vector<Interval> domain_leaves;
    std::vector<Interval> range_leaves;
};

// Word over the two F generators, as compacted runs. Letters 'A' and 'B'.
struct FRun {
    char letter;
    long exp;
};
using FWord = std::vector<FRun>;

// Word over the three H generators, gen in {1,2,3} naming nu_1, nu_2, nu_3.
struct NuRun {
    int gen;
    long exp;
};
using NuWord = std::vector<NuRun>;

struct AlternatingFactorization {
    NuWord word;       // alternating nu_2 / nu_3 runs
    long sum_nu2 = 0;  // exponent sums (abelianized image)
    long sum_nu3 = 0;
};

// The fixed elements used throughout: F generators, the one-hump c_0 and its
// mirror, nu_1 = c_0 c_1, the conjugator phi : [0,1] -> [1/16,15/16], and the
// generators nu_2 = phi A phi^-1, nu_3 = phi B phi^-1 of F_[1/16,15/16].
struct FStandardSet {
    PLMap A;
    PLMap B;
    PLMap c0;
    PLMap c1;
    PLMap nu1;
    PLMap nu2;
    PLMap nu3;
    PLMap phi;
};

const FStandardSet& standard_elements();

bool is_in_F(const PLMap& f);
bool is_in_F_prime(const PLMap& f);
bool is_in_H(const PLMap& f);

// Both standard relator commutators for a candidate generator pair, with words
// read left to right: [ab^-1, a^-1 b a] and [ab^-1, a^-2 b a^2].
bool f_relators_hold(const PLMap& a, const PLMap& b);

TreePair tree_pair_from_pl(const PLMap& f);
PLMap pl_from_tree_pair(const TreePair& tp);

// Word in A, B that re-evaluates to f exactly. Throws if f is not in F.
FWord f_factorize(const PLMap& f);

PLMap f_word_eval(const FWord& w);
PLMap nu_word_eval(const NuWord& w);

FWord f_word_inverse(const FWord& w);
NuWord nu_word_inverse(const NuWord& w);

// The fixed transporter family: f maps I onto J, linearly on I, supported in a
// collar strictly inside (0,1). Choices satisfy transporter(J,I) = invert(transporter(I,J)).
PLMap interval_transporter(const Interval& I, const Interval& J);

// f in F' mapping I1 -> J1 and I2 -> J2, linear on I1 and I2.
// Requires sup(I1) < inf(I2) and sup(J1) < inf(J2), all standard dyadic in (0,1).
PLMap interval_pair_transporter(const Interval& I1, const Interval& I2,
                                const Interval& J1, const Interval& J2);

// Nonidentity element of F' with one support component whose closure lies in
// the interior of I.
PLMap bump(const Interval& I);

// Symmetric (iota-invariant) nonidentity element of F' supported inside the
// given symmetric open region, passed as disjoint sorted open intervals.
PLMap symmetric_bump(const std::vector<Interval>& region);

// Smallest m >= 0 with support closure of nu_1^-m f nu_1^m inside [1/16,15/16].
long conjugation_depth(const PLMap& f);
// Variant requiring the closure strictly inside (1/16, 15/16).
long conjugation_depth_strict(const PLMap& f);

// Conjugate of f realizing the depth: evaluates nu_1^-m f nu_1^m (words read
// left to right).
PLMap nu1_conjugate(const PLMap& f, long m);

// Factor an F element supported in [1/16,15/16] into an alternating word in
// nu_2, nu_3. Exponent sums are zero iff the element has trivial germs at
// 1/16 and 15/16.
AlternatingFactorization alternating_factorization(const PLMap& f);

// Greedy standard-dyadic partition of a dyadic interval [u,v].
std::vector<Interval> sdi_partition(const Rat& u, const Rat& v);

// Largest standard dyadic interval with closure inside the open interval (lo, hi).
Interval sdi_inside(const Rat& lo, const Rat& hi);

}  // namespace plgroup
