#include "mckay/ints.hpp"

#include <vector>

namespace mckay {

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

long long prime_valuation_factorial(int n, int p) {
    long long v = 0;
    for (long long q = p; q <= n; q *= p) v += n / q;
    return v;
}

bool multinomial_coprime(int n, const std::vector<int>& ks, int p) {
    long long v = prime_valuation_factorial(n, p);
    for (int k : ks) v -= prime_valuation_factorial(k, p);
    return v == 0;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace mckay
