#include "mckay/glgu.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "mckay/errors.hpp"
#include "mckay/mckay_sym.hpp"

namespace mckay {

namespace {

int pow3(int k) {
    int r = 1;
    while (k-- > 0) r *= 3;
    return r;
}

long pow_mod_free(int q, int d) {
    long r = 1;
    for (int i = 0; i < d; ++i) r *= q;
    return r;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

int g1_order(char epsilon, int q) { return epsilon == '+' ? q - 1 : q + 1; }

// image of rep under the orbit-closing map, modulo q^2 - 1
long d2_partner(char epsilon, int q, long rep) {
    long M = static_cast<long>(q) * q - 1;
    long t = mod(rep * q, M);
    return epsilon == '+' ? t : mod(-t, M);
}

int smallest_prime_factor(int q) {
    for (int p = 2; p * p <= q; ++p)
        if (q % p == 0) return p;
    return q;
}

} // namespace

long SemisimpleOrbit::modulus() const {
    if (epsilon == '+') return pow_mod_free(q, d) - 1;
    return d == 1 ? q + 1 : static_cast<long>(q) * q - 1;
}

std::string SemisimpleOrbit::str() const {
    return "s" + std::to_string(rep) + "d" + std::to_string(d);
}

SemisimpleOrbit make_orbit(char epsilon, int q, int d, long rep) {
    if (epsilon != '+' && epsilon != '-') throw std::invalid_argument("epsilon must be + or -");
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    SemisimpleOrbit s;
    s.epsilon = epsilon;
    s.q = q;
    s.d = d;
    if (epsilon == '-' && d != 1 && d != 2)
        throw unsupported_parameters("only degrees 1 and 2 are modeled for the unitary side");
    if (d < 1) throw std::invalid_argument("degree must be positive");
    long M = (epsilon == '+') ? pow_mod_free(q, d) - 1 : (d == 1 ? q + 1 : static_cast<long>(q) * q - 1);
    rep = mod(rep, M);
    if (epsilon == '+') {
        long best = rep, cur = rep;
        for (int i = 1; i < d; ++i) {
            cur = mod(cur * q, M);
            if (cur == rep) throw std::invalid_argument("orbit smaller than the stated degree");
            best = std::min(best, cur);
        }
        if (mod(cur * q, M) != rep && d > 1)
            throw std::invalid_argument("orbit larger than the stated degree");
        s.rep = best;
    } else if (d == 1) {
        s.rep = rep;
    } else {
        long partner = d2_partner('-', q, rep);
        if (partner == rep) throw std::invalid_argument("rep has degree 1, not 2");
        s.rep = std::min(rep, partner);
    }
    return s;
}

int GLGULabel::n() const {
    int total = 0;
    for (const auto& p : pairs) total += p.lambda.size() * p.s.d;
    return total;
}

void GLGULabel::canonicalize() {
    std::sort(pairs.begin(), pairs.end(),
              [](const GLGUPair& a, const GLGUPair& b) { return a.s < b.s; });
    for (size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].s == pairs[i - 1].s) throw malformed_label("orbits must be pairwise distinct");
    for (const auto& p : pairs)
        if (p.lambda.empty()) throw malformed_label("pair partitions must be nonempty");
}

bool GLGULabel::operator<(const GLGULabel& o) const {
    auto key = [](const GLGULabel& l) {
        std::vector<std::tuple<int, long, std::vector<int>>> k;
        for (const auto& p : l.pairs) k.push_back({p.s.d, p.s.rep, p.lambda.parts()});
        return k;
    };
    return key(*this) < key(o);
}

std::string GLGULabel::str() const {
    std::string s = "{";
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) s += ",";
        s += "(" + pairs[i].s.str() + "," + pairs[i].lambda.str() + ")";
    }
    return s + "}";
}

int order_mod3(char epsilon, int q) {
    if (q % 3 == 0) throw defining_characteristic();
    int v = q % 3;
    if (epsilon == '-') v = 3 - v;
    return v == 1 ? 1 : 2;
}

bool is_3prime_label(const GLGULabel& label) {
    const int e = order_mod3(label.epsilon, label.q);
    const int n = label.n();
    const int c = n % e;
    std::vector<int> mjs;
    int csum = 0;
    for (const auto& p : label.pairs) {
        if (p.lambda.empty()) return false;
        if (e % p.s.d != 0) return false; // (ii)
        int nj = p.lambda.size() * p.s.d;
        int cj = nj % e;
        csum += cj;
        mjs.push_back(nj / e);
        int eprime = e / p.s.d;
        if (eprime == 1) {
            if (!is_pprime_degree(p.lambda, 3)) return false;
        } else {
            auto [core, quot] = p_core_and_quotient(p.lambda, 2);
            if (core.size() != cj) return false;
            if (!is_pprime_degree(quot[0], 3) || !is_pprime_degree(quot[1], 3)) return false;
            if (!multinomial_coprime(nj / e, {quot[0].size(), quot[1].size()}, 3)) return false;
        }
    }
    if (csum != c) return false;
    return multinomial_coprime(n / e, mjs, 3); // (i)
}

std::vector<GLGULabel> enumerate_3prime_labels(char epsilon, int q, int n) {
    const int e = order_mod3(epsilon, q);
    std::vector<SemisimpleOrbit> universe;
    for (int r = 0; r < g1_order(epsilon, q); ++r) universe.push_back(make_orbit(epsilon, q, 1, r));
    if (e == 2) {
        long M = static_cast<long>(q) * q - 1;
        for (long g = 0; g < M; ++g) {
            long partner = d2_partner(epsilon, q, g);
            if (g < partner) universe.push_back(make_orbit(epsilon, q, 2, g));
        }
    }
    std::vector<GLGULabel> out;
    GLGULabel cur;
    cur.epsilon = epsilon;
    cur.q = q;
    std::function<void(size_t, int)> rec = [&](size_t at, int rem) {
        if (rem == 0) {
            GLGULabel cand = cur;
            cand.canonicalize();
            if (is_3prime_label(cand)) out.push_back(std::move(cand));
            return;
        }
        if (at == universe.size()) return;
        rec(at + 1, rem);
        const auto& orbit = universe[at];
        for (int k = 1; k * orbit.d <= rem; ++k)
            for (const auto& lam : partitions_of(k)) {
                cur.pairs.push_back({orbit, lam});
                rec(at + 1, rem - k * orbit.d);
                cur.pairs.pop_back();
            }
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::string KChar::str() const {
    switch (kind) {
        case Kind::linear: return "g" + std::to_string(g);
        case Kind::omega1: return "g" + std::to_string(g) + (nu == 0 ? ":[2]" : ":[1,1]");
        default: return "o" + std::to_string(g);
    }
}

int HLabel::m() const {
    int total = 0;
    for (const auto& en : entries) total += en.lambda.size();
    return total;
}

std::string HLabel::str() const {
    std::string s = "H{";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += "(" + entries[i].sigma.str() + "," + entries[i].lambda.str() + ")";
    }
    return s + "}";
}

namespace {

void sort_hlabel(HLabel& h) {
    std::sort(h.entries.begin(), h.entries.end(),
              [](const HLabel::Entry& a, const HLabel::Entry& b) { return a.sigma < b.sigma; });
    for (size_t i = 1; i < h.entries.size(); ++i)
        if (h.entries[i].sigma == h.entries[i - 1].sigma)
            throw malformed_label("K-labels must be pairwise distinct");
}

} // namespace

HLabel global_star(const GLGULabel& label) {
    if (!is_3prime_label(label)) throw not_three_prime();
    const int e = order_mod3(label.epsilon, label.q);
    HLabel h;
    h.epsilon = label.epsilon;
    h.q = label.q;
    h.e = e;
    if (e == 1) {
        for (const auto& p : label.pairs)
            h.entries.push_back({KChar{KChar::Kind::linear, p.s.rep, 0}, p.lambda});
        sort_hlabel(h);
        return h;
    }
    if (label.n() % 2 != 0) throw odd_n();
    for (const auto& p : label.pairs) {
        if (p.s.d == 2) {
            h.entries.push_back({KChar{KChar::Kind::omega2, p.s.rep, 0}, p.lambda});
            continue;
        }
        auto [core, quot] = p_core_and_quotient(p.lambda, 2);
        if (!core.empty()) throw std::logic_error("3'-pair of even size has nonempty 2-core");
        if (!quot[0].empty())
            h.entries.push_back({KChar{KChar::Kind::omega1, p.s.rep, 0}, quot[0]});
        if (!quot[1].empty())
            h.entries.push_back({KChar{KChar::Kind::omega1, p.s.rep, 1}, quot[1]});
    }
    sort_hlabel(h);
    return h;
}

GLGULabel global_star_inverse(const HLabel& h) {
    GLGULabel label;
    label.epsilon = h.epsilon;
    label.q = h.q;
    if (h.e == 1) {
        for (const auto& en : h.entries) {
            if (en.sigma.kind != KChar::Kind::linear) throw malformed_label();
            label.pairs.push_back({make_orbit(h.epsilon, h.q, 1, en.sigma.g), en.lambda});
        }
        label.canonicalize();
        return label;
    }
    std::map<long, std::pair<Partition, Partition>> omega1;
    for (const auto& en : h.entries) {
        switch (en.sigma.kind) {
            case KChar::Kind::omega2:
                label.pairs.push_back({make_orbit(h.epsilon, h.q, 2, en.sigma.g), en.lambda});
                break;
            case KChar::Kind::omega1:
                if (en.sigma.nu == 0) omega1[en.sigma.g].first = en.lambda;
                else omega1[en.sigma.g].second = en.lambda;
                break;
            default: throw malformed_label();
        }
    }
    for (const auto& [g, parts] : omega1) {
        Partition zeta = combine_core_quotient(Partition{}, {parts.first, parts.second}, 2);
        label.pairs.push_back({make_orbit(h.epsilon, h.q, 1, g), zeta});
    }
    label.canonicalize();
    return label;
}

std::pair<GLGUPair, GLGULabel> odd_reduction(const GLGULabel& label) {
    if (!is_3prime_label(label)) throw not_three_prime();
    if (order_mod3(label.epsilon, label.q) != 2)
        throw unsupported_parameters("odd reduction applies when 3 divides q + epsilon");
    if (label.n() % 2 == 0) throw even_n();
    GLGULabel even;
    even.epsilon = label.epsilon;
    even.q = label.q;
    GLGUPair linear;
    bool found = false;
    for (const auto& p : label.pairs) {
        int nj = p.lambda.size() * p.s.d;
        if (nj % 2 == 1) {
            if (found) throw std::logic_error("two odd pairs in a 3'-label");
            found = true;
            linear = GLGUPair{p.s, Partition::row(1)};
            auto [core, quot] = p_core_and_quotient(p.lambda, 2);
            if (core != Partition::row(1)) throw std::logic_error("odd pair core is not (1)");
            Partition nu = combine_core_quotient(Partition{}, quot, 2);
            if (!nu.empty()) even.pairs.push_back({p.s, nu});
        } else {
            even.pairs.push_back(p);
        }
    }
    if (!found) throw std::logic_error("no odd pair in a label of odd size");
    even.canonicalize();
    return {linear, even};
}

GLGULabel odd_reduction_inverse(const GLGUPair& linear, const GLGULabel& even) {
    GLGULabel out;
    out.epsilon = even.epsilon;
    out.q = even.q;
    bool merged = false;
    for (const auto& p : even.pairs) {
        if (p.s == linear.s) {
            auto [core, quot] = p_core_and_quotient(p.lambda, 2);
            if (!core.empty()) throw malformed_label("merge partner must have empty 2-core");
            out.pairs.push_back({p.s, combine_core_quotient(Partition::row(1), quot, 2)});
            merged = true;
        } else {
            out.pairs.push_back(p);
        }
    }
    if (!merged) out.pairs.push_back({linear.s, Partition::row(1)});
    out.canonicalize();
    return out;
}

std::string LocalBlock::str() const {
    switch (kind) {
        case Kind::a1: return "a(" + tau1.str() + "," + p1.str() + ")@" + std::to_string(exp);
        case Kind::d1:
            return "d1({" + tau1.str() + "," + tau2.str() + "},(" + p1.str() + "," + p2.str() +
                   "))@" + std::to_string(exp);
        default: return "d2(" + tau1.str() + "," + p1.str() + ")@" + std::to_string(exp);
    }
}

std::string LocalLabel::str() const {
    std::string s = "N[";
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ";";
        s += blocks[i].str();
    }
    return s + "]";
}

std::string NormalizerImage::str() const {
    std::string s = linear ? ("lin" + std::to_string(*linear) + "*") : "";
    return s + local.str();
}

LocalLabel local_theta(const HLabel& h) {
    const int m = h.m();
    for (size_t i = 1; i < h.entries.size(); ++i)
        if (!(h.entries[i - 1].sigma < h.entries[i].sigma)) throw malformed_label();
    for (const auto& en : h.entries)
        if (en.lambda.empty() || !is_pprime_degree(en.lambda, 3))
            throw malformed_label("entry partitions must be nonempty 3'-partitions");

    // digit witness: with every row bounded by a_j <= 2 the only candidate is
    // the base-3 digit matrix of the k_i, so check it satisfies the column sums
    auto digit = [](int value, int exp) {
        for (int i = 0; i < exp; ++i) value /= 3;
        return value % 3;
    };
    int max_exp = 0;
    while (pow3(max_exp) <= std::max(m, 1)) ++max_exp;
    for (int j = 0; j < max_exp; ++j) {
        int sum = 0;
        for (const auto& en : h.entries) sum += digit(en.lambda.size(), j);
        if (sum != digit(m, j)) throw unsatisfiable_digits();
    }

    // split each lambda_i into its 3-adic pieces
    std::vector<std::vector<Partition>> pieces;
    std::vector<ThreeAdicExpansion> kdigits;
    for (const auto& en : h.entries) {
        pieces.push_back(star_sequence(en.lambda));
        kdigits.push_back(three_adic(en.lambda.size()));
    }

    LocalLabel out;
    out.epsilon = h.epsilon;
    out.q = h.q;
    out.e = h.e;
    const ThreeAdicExpansion mdigits = three_adic(m);
    for (auto [a, exp] : mdigits.digits) {
        struct Contribution {
            KChar sigma;
            int b;
            Partition piece;
        };
        std::vector<Contribution> contrib;
        for (size_t i = 0; i < h.entries.size(); ++i) {
            for (size_t t = 0; t < kdigits[i].digits.size(); ++t)
                if (kdigits[i].digits[t].exp == exp)
                    contrib.push_back({h.entries[i].sigma, kdigits[i].digits[t].a, pieces[i][t]});
        }
        LocalBlock b;
        b.exp = exp;
        if (contrib.size() == 1 && contrib[0].b == a) {
            b.kind = (a == 1) ? LocalBlock::Kind::a1 : LocalBlock::Kind::d2;
            b.tau1 = contrib[0].sigma;
            b.p1 = contrib[0].piece;
        } else if (contrib.size() == 2 && a == 2 && contrib[0].b == 1 && contrib[1].b == 1) {
            // tau1 > tau2 in the fixed total order, hooks aligned
            int first = (contrib[1].sigma < contrib[0].sigma) ? 0 : 1;
            b.kind = LocalBlock::Kind::d1;
            b.tau1 = contrib[first].sigma;
            b.p1 = contrib[first].piece;
            b.tau2 = contrib[1 - first].sigma;
            b.p2 = contrib[1 - first].piece;
        } else {
            throw std::logic_error("digit contributions do not match the witness");
        }
        out.blocks.push_back(std::move(b));
    }
    return out;
}

HLabel local_theta_inverse(const LocalLabel& label) {
    // gather, per K-label, the 3-adic pieces in decreasing exponent order
    std::map<std::tuple<int, long, int>, std::pair<KChar, std::vector<Partition>>> bins;
    auto add = [&](const KChar& tau, const Partition& piece) {
        auto& bin = bins[tau.key()];
        bin.first = tau;
        bin.second.push_back(piece);
    };
    int last_exp = 1 << 20;
    for (const auto& b : label.blocks) {
        if (b.exp >= last_exp) throw malformed_label("blocks must have decreasing exponents");
        last_exp = b.exp;
        switch (b.kind) {
            case LocalBlock::Kind::a1:
                if (b.p1.size() != pow3(b.exp) || !b.p1.is_hook()) throw malformed_label();
                add(b.tau1, b.p1);
                break;
            case LocalBlock::Kind::d2:
                if (b.p1.size() != 2 * pow3(b.exp) || !is_pprime_degree(b.p1, 3))
                    throw malformed_label();
                add(b.tau1, b.p1);
                break;
            case LocalBlock::Kind::d1:
                if (!(b.tau2 < b.tau1)) throw malformed_label("d1 pair must be ordered");
                if (b.p1.size() != pow3(b.exp) || b.p2.size() != pow3(b.exp)) throw malformed_label();
                if (!b.p1.is_hook() || !b.p2.is_hook()) throw malformed_label();
                add(b.tau1, b.p1);
                add(b.tau2, b.p2);
                break;
        }
    }
    HLabel h;
    h.epsilon = label.epsilon;
    h.q = label.q;
    h.e = label.e;
    for (auto& [key, bin] : bins) {
        (void)key;
        int k = 0;
        for (const auto& piece : bin.second) k += piece.size();
        h.entries.push_back({bin.first, star_sequence_inverse(bin.second, k)});
    }
    sort_hlabel(h);
    return h;
}

NormalizerImage full_bijection(const GLGULabel& label) {
    const int e = order_mod3(label.epsilon, label.q);
    NormalizerImage img;
    if (e == 2 && label.n() % 2 == 1) {
        auto [linear, even] = odd_reduction(label);
        img.linear = linear.s.rep;
        img.local = local_theta(global_star(even));
    } else {
        img.local = local_theta(global_star(label));
    }
    return img;
}

GLGULabel full_bijection_inverse(char epsilon, int q, int n, const NormalizerImage& image) {
    HLabel h = local_theta_inverse(image.local);
    h.epsilon = epsilon;
    h.q = q;
    h.e = order_mod3(epsilon, q);
    GLGULabel even = global_star_inverse(h);
    if (image.linear) {
        if (h.e != 2 || n % 2 == 0) throw malformed_label("linear part only in the odd unitary case");
        return odd_reduction_inverse(
            GLGUPair{make_orbit(epsilon, q, 1, *image.linear), Partition::row(1)}, even);
    }
    if (even.n() != n) throw malformed_label("size mismatch");
    return even;
}

Int count_normalizer_labels(char epsilon, int q, int n) {
    const int e = order_mod3(epsilon, q);
    const long g1 = g1_order(epsilon, q);
    Int total = 1;
    int m = n;
    if (e == 2) {
        if (n % 2 == 1) total *= g1;
        m = n / 2;
    }
    Int T = (e == 1) ? Int(g1) : Int(2 * g1) + (Int(static_cast<long>(q) * q - 1) - g1) / 2;
    const ThreeAdicExpansion mdigits = three_adic(m);
    for (auto [a, exp] : mdigits.digits) {
        long unit = pow3(exp);
        if (a == 1) {
            total *= T * unit;
        } else {
            Int d1 = T * (T - 1) / 2 * unit * unit;
            Int d2 = T * (2 * unit + unit * (unit - 1) / 2);
            total *= d1 + d2;
        }
    }
    return total;
}

namespace {

long checked_unit(long u, long modulus) {
    u = mod(u, modulus);
    if (std::gcd(u, modulus) != 1) throw unsupported_parameters("exponent not coprime to the orbit order");
    return u;
}

SemisimpleOrbit act_orbit(const SemisimpleOrbit& s, long u) {
    long uu = checked_unit(u, s.modulus());
    return make_orbit(s.epsilon, s.q, s.d, mod(s.rep * uu, s.modulus()));
}

KChar act_kchar(const KChar& k, long u, char epsilon, int q) {
    KChar out = k;
    if (k.kind == KChar::Kind::omega2) {
        long M = static_cast<long>(q) * q - 1;
        long uu = checked_unit(u, M);
        long g = mod(k.g * uu, M);
        out.g = std::min(g, d2_partner(epsilon, q, g));
    } else {
        long M = g1_order(epsilon, q);
        long uu = checked_unit(u, M);
        out.g = mod(k.g * uu, M);
    }
    return out;
}

} // namespace

GLGULabel galois_act(long u, const GLGULabel& label) {
    GLGULabel out;
    out.epsilon = label.epsilon;
    out.q = label.q;
    for (const auto& p : label.pairs) out.pairs.push_back({act_orbit(p.s, u), p.lambda});
    out.canonicalize();
    return out;
}

GLGULabel frobenius_act(const GLGULabel& label) { return galois_act(smallest_prime_factor(label.q), label); }

GLGULabel transpose_inverse_act(const GLGULabel& label) {
    if (label.epsilon != '+')
        throw unsupported_parameters("transpose-inverse acts on the linear side only");
    return galois_act(-1, label);
}

NormalizerImage galois_act(long u, const NormalizerImage& image, char epsilon, int q) {
    NormalizerImage out;
    out.local.epsilon = epsilon;
    out.local.q = q;
    out.local.e = image.local.e;
    if (image.linear) out.linear = mod(*image.linear * checked_unit(u, g1_order(epsilon, q)),
                                       g1_order(epsilon, q));
    for (const auto& b : image.local.blocks) {
        LocalBlock nb = b;
        nb.tau1 = act_kchar(b.tau1, u, epsilon, q);
        if (b.kind == LocalBlock::Kind::d1) {
            nb.tau2 = act_kchar(b.tau2, u, epsilon, q);
            if (nb.tau1 < nb.tau2) {
                std::swap(nb.tau1, nb.tau2);
                std::swap(nb.p1, nb.p2);
            }
        }
        out.local.blocks.push_back(std::move(nb));
    }
    return out;
}

GaloisOrbitReport fields_orbits(char epsilon, int q, int n) {
    GaloisOrbitReport rep;
    const long M = static_cast<long>(q) * q - 1;
    for (long u = 1; u < M; ++u)
        if (std::gcd(u, M) == 1) rep.units.push_back(u);

    auto labels = enumerate_3prime_labels(epsilon, q, n);
    std::map<std::string, int> label_index, image_index;
    std::vector<NormalizerImage> images;
    for (size_t i = 0; i < labels.size(); ++i) {
        label_index[labels[i].str()] = static_cast<int>(i);
        images.push_back(full_bijection(labels[i]));
        image_index[images.back().str()] = static_cast<int>(i);
    }

    const int N = static_cast<int>(labels.size());
    std::vector<std::vector<int>> label_perm, image_perm;
    for (long u : rep.units) {
        std::vector<int> lp(N), ip(N);
        for (int i = 0; i < N; ++i) {
            lp[i] = label_index.at(galois_act(u, labels[i]).str());
            ip[i] = image_index.at(galois_act(u, images[i], epsilon, q).str());
        }
        label_perm.push_back(std::move(lp));
        image_perm.push_back(std::move(ip));
    }

    auto orbits_of = [&](const std::vector<std::vector<int>>& perms) {
        std::vector<std::vector<int>> orbits;
        std::vector<bool> seen(N, false);
        for (int i = 0; i < N; ++i) {
            if (seen[i]) continue;
            std::vector<int> orb = {i};
            seen[i] = true;
            for (size_t at = 0; at < orb.size(); ++at)
                for (const auto& p : perms)
                    if (!seen[p[orb[at]]]) {
                        seen[p[orb[at]]] = true;
                        orb.push_back(p[orb[at]]);
                    }
            std::sort(orb.begin(), orb.end());
            orbits.push_back(std::move(orb));
        }
        std::sort(orbits.begin(), orbits.end());
        return orbits;
    };
    auto stabs_of = [&](const std::vector<std::vector<int>>& perms) {
        std::vector<std::vector<long>> stabs(N);
        for (int i = 0; i < N; ++i)
            for (size_t uidx = 0; uidx < rep.units.size(); ++uidx)
                if (perms[uidx][i] == i) stabs[i].push_back(rep.units[uidx]);
        return stabs;
    };

    rep.label_orbits = orbits_of(label_perm);
    rep.image_orbits = orbits_of(image_perm);
    rep.label_stabilizers = stabs_of(label_perm);
    rep.image_stabilizers = stabs_of(image_perm);
    rep.orbits_match = (rep.label_orbits == rep.image_orbits);
    rep.stabilizers_match = (rep.label_stabilizers == rep.image_stabilizers);
    return rep;
}

} // namespace mckay
