#pragma once

#include <string>
#include <vector>

#include "mckay/wreath.hpp"

namespace mckay {

// One block of a canonical label for Irr_{3'}(N_{S_n}(P)), aligned with a
// 3-adic digit a*3^exp of n: a hook of 3^exp when a = 1; for a = 2 either a
// C-block (hook of 3^exp plus a partition of 2) or a D-block (unordered pair
// of distinct hooks of 3^exp, stored sorted).
struct SymBlock {
    enum class Kind { hook, C, D };
    Kind kind = Kind::hook;
    int exp = 0;
    Partition h1;
    Partition h2; // D only: the larger hook of the sorted pair
    Partition mu; // C only: (2) or (1,1)

    bool operator==(const SymBlock&) const = default;
    auto operator<=>(const SymBlock&) const = default;
    std::string str() const;
};

struct SymNormalizerLabel {
    std::vector<SymBlock> blocks; // decreasing exponents, aligned with three_adic(n)
    int n() const;
    bool operator==(const SymNormalizerLabel&) const = default;
    auto operator<=>(const SymNormalizerLabel&) const = default;
    std::string str() const;
};

// lambda |-> (mu_1, ..., mu_t), one 3'-partition of a_k*3^{n_k} per 3-adic
// digit of n: the hook shape of the unique removable (a_k*3^{n_k})-hook, or
// the hook-generated partition of the pair left by the two removable
// 3^{n_k}-hooks. Throws not_three_prime.
std::vector<Partition> star_sequence(const Partition& lambda);

// Inverse of star_sequence for the digits of n, including the 3-core-tower
// surgery in the two-hook case.
Partition star_sequence_inverse(const std::vector<Partition>& mus, int n);

// The canonical McKay bijection for S_n at p = 3, at label level, and its
// inverse.
SymNormalizerLabel phi(const Partition& lambda);
Partition phi_inverse(const SymNormalizerLabel& label);

// Exhaustive, duplicate-free enumerations of the two sides.
std::vector<Partition> enumerate_3prime_sn(int n);
std::vector<SymNormalizerLabel> enumerate_normalizer_labels(int n);

} // namespace mckay
