#pragma once

#include <string>
#include <vector>

#include "mckay/ints.hpp"

namespace mckay {

// Element of Z[zeta_n] stored on the monomial basis zeta^0..zeta^{n-1}
// (redundant: zeta^n = 1). Ring operations stay on this basis; equality and
// zero tests reduce modulo the n-th cyclotomic polynomial.
struct Cyclotomic {
    long order = 1;
    std::vector<long> c;

    Cyclotomic() : c(1, 0) {}
    explicit Cyclotomic(long n) : order(n), c(static_cast<size_t>(n), 0) {}
    static Cyclotomic integer(long n, long value);
    static Cyclotomic root_power(long n, long k, long coeff = 1);

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic scaled(long s) const;

    // zeta -> zeta^u; u must be coprime to order.
    Cyclotomic galois(long u) const;
    Cyclotomic conj() const { return galois(order - 1); }

    // Canonical coordinates: remainder modulo Phi_order, degree < phi(order).
    std::vector<Int> normalized() const;
    bool is_zero() const;
    bool equals(const Cyclotomic& o) const;
    bool is_integer(Int* value = nullptr) const;
    std::string str() const;
};

// Coefficients of the n-th cyclotomic polynomial, constant term first; cached.
const std::vector<long>& cyclotomic_polynomial(long n);

} // namespace mckay
