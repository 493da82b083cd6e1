#include "mckay/wreath.hpp"

#include <algorithm>
#include <map>

#include "mckay/errors.hpp"

namespace mckay {

int WreathClass::top_size() const {
    int m = 0;
    for (const auto& p : parts) m += p.cycle * p.mult;
    return m;
}

namespace {

int pow_int(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void gen_classes(int r, int m, size_t at, const std::vector<std::pair<int, Partition>>& universe,
                 std::vector<WreathClassPart>& stack, std::vector<WreathClass>& out) {
    if (m == 0) {
        out.push_back(WreathClass{stack});
        return;
    }
    if (at == universe.size()) return;
    auto [cycle, cls] = universe[at];
    gen_classes(r, m, at + 1, universe, stack, out);
    for (int mult = 1; mult * cycle <= m; ++mult) {
        stack.push_back({cycle, cls, mult});
        gen_classes(r, m - mult * cycle, at + 1, universe, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<WreathClass> wreath_classes(int r, int m) {
    std::vector<std::pair<int, Partition>> universe;
    for (int c = 1; c <= m; ++c)
        for (const auto& cls : partitions_of(r)) universe.push_back({c, cls});
    std::vector<WreathClass> out;
    std::vector<WreathClassPart> stack;
    gen_classes(r, m, 0, universe, stack, out);
    return out;
}

Int wreath_order(int r, int m) {
    Int o = 1;
    for (int i = 0; i < m; ++i) o *= factorial(r);
    return o * factorial(m);
}

Int wreath_class_size(int r, int m, const WreathClass& cls) {
    // centralizer order: prod over entries (cycle * |C_{S_r}(base)|)^mult * mult!
    Int centralizer = 1;
    for (const auto& p : cls.parts) {
        Int c_base = factorial(r) / sn_class_size(p.base_cls);
        for (int i = 0; i < p.mult; ++i) centralizer *= c_base * p.cycle;
        centralizer *= factorial(p.mult);
    }
    return wreath_order(r, m) / centralizer;
}

Partition underlying_cycle_type(int r, const WreathClass& cls) {
    (void)r;
    std::vector<int> parts;
    for (const auto& p : cls.parts)
        for (int i = 0; i < p.mult; ++i)
            for (int d : p.base_cls.parts()) parts.push_back(p.cycle * d);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition top_cycle_type(const WreathClass& cls) {
    std::vector<int> parts;
    for (const auto& p : cls.parts)
        for (int i = 0; i < p.mult; ++i) parts.push_back(p.cycle);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

WreathLabel WreathLabel::diagonal(Partition lambda, Partition mu) {
    WreathLabel l;
    l.kind = Kind::diagonal;
    l.base = std::move(lambda);
    l.top = std::move(mu);
    return l;
}

WreathLabel WreathLabel::induced_pair(Partition h1, Partition h2) {
    if (h1 == h2) throw equal_hooks();
    if (h2 < h1) std::swap(h1, h2);
    WreathLabel l;
    l.kind = Kind::induced_pair;
    l.pair_first = std::move(h1);
    l.pair_second = std::move(h2);
    return l;
}

std::string WreathLabel::str() const {
    if (kind == Kind::diagonal) return "chi(" + base.str() + "," + top.str() + ")";
    return "ind{" + pair_first.str() + "," + pair_second.str() + "}";
}

long canonical_extension_value(const Partition& lambda, int m, const WreathClass& cls) {
    if (cls.top_size() != m) throw size_mismatch("class does not live in S_r wr S_m");
    long value = 1;
    for (const auto& p : cls.parts)
        for (int i = 0; i < p.mult; ++i) value *= mn_value(lambda, p.base_cls);
    return value;
}

long wreath_char_value(int r, int m, const WreathLabel& label, const WreathClass& cls) {
    if (label.kind == WreathLabel::Kind::diagonal) {
        if (label.base.size() != r || label.top.size() != m)
            throw size_mismatch("label does not live in S_r wr S_m");
        return canonical_extension_value(label.base, m, cls) *
               mn_value(label.top, top_cycle_type(cls));
    }
    // induced from the base group of S_r wr S_2: supported on top-trivial classes
    if (m != 2) throw unsupported_parameters("induced-pair labels live in S_r wr S_2");
    if (label.pair_first.size() != r || label.pair_second.size() != r)
        throw size_mismatch("label does not live in S_r wr S_2");
    if (top_cycle_type(cls) != Partition({1, 1})) return 0;
    std::vector<Partition> base;
    for (const auto& p : cls.parts)
        for (int i = 0; i < p.mult; ++i) base.push_back(p.base_cls);
    long a1 = mn_value(label.pair_first, base[0]);
    long a2 = mn_value(label.pair_second, base[1]);
    long b1 = mn_value(label.pair_first, base[1]);
    long b2 = mn_value(label.pair_second, base[0]);
    return a1 * a2 + b1 * b2;
}

Int wreath_label_degree(int r, int m, const WreathLabel& label) {
    (void)r;
    if (label.kind == WreathLabel::Kind::diagonal) {
        Int d = char_degree(label.top);
        Int base = char_degree(label.base);
        for (int i = 0; i < m; ++i) d *= base;
        return d;
    }
    return 2 * char_degree(label.pair_first) * char_degree(label.pair_second);
}

Int restriction_mult(const Partition& rho, int r, int m, const WreathLabel& label) {
    if (rho.size() != r * m) throw size_mismatch("|rho| != r*m");
    Int sum = 0;
    for (const WreathClass& cls : wreath_classes(r, m)) {
        long v = wreath_char_value(r, m, label, cls);
        if (v == 0) continue;
        sum += wreath_class_size(r, m, cls) * mn_value(rho, underlying_cycle_type(r, cls)) * v;
    }
    Int order = wreath_order(r, m);
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), order.get_mpz_t());
    if (rem != 0) throw std::logic_error("inner product is not an integer");
    return q;
}

std::vector<Int> wreath_all_degrees(int r, int m) {
    const auto& chars = partitions_of(r);
    std::vector<Int> degs;
    std::vector<Partition> assignment(chars.size());
    std::function<void(size_t, int)> rec = [&](size_t at, int left) {
        if (at == chars.size()) {
            if (left != 0) return;
            Int d = factorial(m);
            for (size_t i = 0; i < chars.size(); ++i) {
                const Partition& mu = assignment[i];
                if (mu.empty()) continue;
                Int base = char_degree(chars[i]);
                for (int e = 0; e < mu.size(); ++e) d *= base;
                d *= char_degree(mu);
                d /= factorial(mu.size());
            }
            degs.push_back(d);
            return;
        }
        for (int k = 0; k <= left; ++k)
            for (const auto& mu : partitions_of(k)) {
                assignment[at] = mu;
                rec(at + 1, left - k);
            }
    };
    rec(0, m);
    return degs;
}

namespace {

int pow3k_of(const Partition& h, int p) {
    if (!h.is_hook() || h.empty()) throw not_a_hook();
    int n = h.size(), k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    if (n != 1 || k < 1) throw not_a_hook("size must be p^k with k >= 1");
    return k;
}

} // namespace

WreathLabel star_map(const Partition& h, int p) {
    if (p == 3) {
        int k = pow3k_of(h, 3);
        int j = h.hook_leg();
        int m = j / 3, x = j % 3;
        Partition mu = Partition::hook(pow_int(3, k - 1), m);
        Partition top;
        switch (x) {
            case 0: top = (m % 2 == 0) ? Partition::row(3) : Partition::column(3); break;
            case 1: top = Partition({2, 1}); break;
            default: top = (m % 2 == 1) ? Partition::row(3) : Partition::column(3); break;
        }
        return WreathLabel::diagonal(std::move(mu), std::move(top));
    }
    return star_map_resolved_by_restriction(h, p);
}

WreathLabel star_map_resolved_by_restriction(const Partition& h, int p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    int k = pow3k_of(h, p);
    int j = h.hook_leg();
    int m = j / p, x = j % p;
    int r = pow_int(p, k - 1);
    Partition mu = Partition::hook(r, m);
    Partition nu1 = Partition::hook(p, x);
    Partition nu2 = Partition::hook(p, p - 1 - x);
    WreathLabel cand1 = WreathLabel::diagonal(mu, nu1);
    Int m1 = restriction_mult(h, r, p, cand1);
    if (nu1 == nu2) {
        if (m1 != 1) throw std::logic_error("expected multiplicity one");
        return cand1;
    }
    WreathLabel cand2 = WreathLabel::diagonal(mu, nu2);
    Int m2 = restriction_mult(h, r, p, cand2);
    if (m1 == 1 && m2 == 0) return cand1;
    if (m1 == 0 && m2 == 1) return cand2;
    throw std::logic_error("restriction did not single out a candidate");
}

WreathLabel psi_map(const Partition& lambda) {
    int k = 0;
    while (2 * pow_int(3, k) < lambda.size()) ++k;
    if (lambda.empty() || 2 * pow_int(3, k) != lambda.size())
        throw std::invalid_argument("size must be 2*3^k");
    // 3'-degree partitions of 2*3^k are exactly the hooks (all base-3 digits
    // of 2*3^k - 1 are maximal, so no binomial carries occur) together with
    // the hook-generated partitions
    int n3 = pow_int(3, k);
    if (lambda.is_hook()) {
        int ell = lambda.hook_leg();
        bool omega_col = ell >= n3;
        Partition h = Partition::hook(n3, omega_col ? ell - n3 : ell);
        int eps = (h == h.conjugate() ? 1 : 0) + (omega_col ? 1 : 0);
        return WreathLabel::diagonal(h, eps % 2 == 0 ? Partition::row(2) : Partition::column(2));
    }
    auto pair = generating_pair(lambda);
    if (!pair) throw not_three_prime();
    return WreathLabel::induced_pair(pair->first, pair->second);
}

Partition psi_inverse(const WreathLabel& label, int k) {
    int n3 = pow_int(3, k);
    if (label.kind == WreathLabel::Kind::induced_pair)
        return hook_generated(label.pair_first, label.pair_second);
    const Partition& h = label.base;
    if (!h.is_hook() || h.size() != n3) throw malformed_label();
    bool self = (h == h.conjugate());
    bool omega_col;
    if (label.top == Partition::row(2)) omega_col = self;
    else if (label.top == Partition::column(2)) omega_col = !self;
    else throw malformed_label();
    int x = h.hook_leg();
    return omega_col ? Partition::hook(2 * n3, x + n3) : Partition::hook(2 * n3, x);
}

WreathLabel hook_constituent_23k(const Partition& h) {
    if (!h.is_hook() || h.empty()) throw not_a_hook();
    int k = 0;
    while (2 * pow_int(3, k) < h.size()) ++k;
    if (2 * pow_int(3, k) != h.size()) throw not_a_hook("size must be 2*3^k");
    int ell = h.hook_leg();
    int m = ell / 2, x = ell % 2;
    Partition lambda = Partition::hook(pow_int(3, k), m);
    Partition mu = ((m + x) % 2 == 0) ? Partition::row(2) : Partition::column(2);
    return WreathLabel::diagonal(std::move(lambda), std::move(mu));
}

} // namespace mckay
