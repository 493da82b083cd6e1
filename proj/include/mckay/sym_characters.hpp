#pragma once

#include <functional>
#include <vector>

#include "mckay/partition.hpp"

namespace mckay {

// Cycle type of a conjugacy class of S_n.
using CycleType = Partition;

// n! / prod(i^{m_i} m_i!) for the class of the given cycle type.
Int sn_class_size(const CycleType& type);

// chi^lambda(sigma) by the Murnaghan-Nakayama recursion on the largest cycle,
// memoized on (lambda, remaining cycles). Throws size_mismatch.
long mn_value(const Partition& lambda, const CycleType& sigma);

// A Littlewood-Richardson configuration of a skew diagram: for each skew row
// the values filling it, left to right.
struct LRWitness {
    std::vector<std::vector<int>> filling;
};

// Number of LR configurations of [gamma \ alpha] of type beta. Zero when
// alpha is not contained in gamma or the sizes do not match.
long lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma);
std::vector<LRWitness> lr_witnesses(const Partition& alpha, const Partition& beta,
                                    const Partition& gamma);

// <(chi^{mu_1} x ... x chi^{mu_k}) induced to S_n, chi^rho>, computed by the
// chain dynamic programme over intermediate partitions, multiplying LR
// coefficients. Throws size_mismatch when sum |mu_i| != |rho|.
Int iterated_restriction_multiplicity(const Partition& rho, const std::vector<Partition>& mus);

// For h_j = (p^k - j, 1^j) and j = pm + x: the unique mu = (p^{k-1} - m, 1^m)
// with nonzero diagonal restriction multiplicity, together with the value
// binomial(p-1, x).
std::pair<Partition, Int> diagonal_power_multiplicity(int k, int p, int j);

// <chi^{h_j} restricted to (S_{p^{k-1}})^p, (chi^mu)^{tensor p}> recomputed
// from the iterated LR rule for an arbitrary mu.
Int diagonal_power_multiplicity_checked(int k, int p, int j, const Partition& mu);

// Exact inner product of two class functions on S_n, both indexed in the
// order of partitions_of(n). Throws index_mismatch on length disagreement.
Rat sn_inner_product(const std::vector<Int>& f, const std::vector<Int>& g, int n);

// Full character table of S_n: rows and columns indexed by partitions_of(n).
std::vector<std::vector<long>> sn_character_table(int n);

} // namespace mckay
