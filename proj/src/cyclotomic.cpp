#include "mckay/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mckay {

Cyclotomic Cyclotomic::integer(long n, long value) {
    Cyclotomic x(n);
    x.c[0] = value;
    return x;
}

Cyclotomic Cyclotomic::root_power(long n, long k, long coeff) {
    Cyclotomic x(n);
    x.c[static_cast<size_t>(((k % n) + n) % n)] += coeff;
    return x;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (order != o.order) throw std::invalid_argument("mixed cyclotomic orders");
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order != o.order) throw std::invalid_argument("mixed cyclotomic orders");
    Cyclotomic r(order);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j] == 0) continue;
            r.c[(i + j) % static_cast<size_t>(order)] += c[i] * o.c[j];
        }
    }
    return r;
}

Cyclotomic Cyclotomic::scaled(long s) const {
    Cyclotomic r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

Cyclotomic Cyclotomic::galois(long u) const {
    u = ((u % order) + order) % order;
    if (std::gcd(u, order) != 1) throw std::invalid_argument("galois exponent not a unit");
    Cyclotomic r(order);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) r.c[static_cast<size_t>((static_cast<long>(i) * u) % order)] += c[i];
    return r;
}

const std::vector<long>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<long>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d; fill divisors bottom-up.
    for (long m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m)) continue;
        std::vector<long> num(static_cast<size_t>(m) + 1, 0);
        num[0] = -1;
        num[static_cast<size_t>(m)] = 1;
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            const std::vector<long>& phi_d = cache.at(d);
            std::vector<long> quot(num.size() - phi_d.size() + 1, 0);
            std::vector<long> rem = num;
            for (size_t i = quot.size(); i-- > 0;) {
                long lead = rem[i + phi_d.size() - 1];
                quot[i] = lead;
                if (lead == 0) continue;
                for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= lead * phi_d[j];
            }
            for (long x : rem)
                if (x != 0) throw std::logic_error("cyclotomic division not exact");
            num = std::move(quot);
        }
        cache.emplace(m, std::move(num));
    }
    return cache.at(n);
}

std::vector<Int> Cyclotomic::normalized() const {
    const auto& phi = cyclotomic_polynomial(order);
    std::vector<Int> rem(c.begin(), c.end());
    const size_t deg = phi.size() - 1;
    for (size_t i = rem.size(); i-- > deg;) {
        if (rem[i] == 0) continue;
        Int lead = rem[i];
        for (size_t j = 0; j < phi.size(); ++j) rem[i - deg + j] -= lead * phi[j];
    }
    rem.resize(deg);
    return rem;
}

bool Cyclotomic::is_zero() const {
    for (const Int& x : normalized())
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::equals(const Cyclotomic& o) const {
    if (order != o.order) return false;
    return normalized() == o.normalized();
}

bool Cyclotomic::is_integer(Int* value) const {
    auto n = normalized();
    for (size_t i = 1; i < n.size(); ++i)
        if (n[i] != 0) return false;
    if (value) *value = n.empty() ? Int(0) : n[0];
    return true;
}

std::string Cyclotomic::str() const {
    auto n = normalized();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        os << n[i];
        if (i > 0) os << "z" << i;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace mckay
