#pragma once

#include <gmpxx.h>

namespace mckay {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(int n);
Int binomial(int n, int k);

// Multiplicity of the prime p in n! (Legendre).
long long prime_valuation_factorial(int n, int p);

// true iff p does not divide n! / (k_1! k_2! ... k_r!), i.e. adding the k_i
// in base p produces no carry.
bool multinomial_coprime(int n, const std::vector<int>& ks, int p);

bool is_prime(long long n);

} // namespace mckay
