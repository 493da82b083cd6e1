#include "mckay/group_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "mckay/errors.hpp"

namespace mckay {

Perm perm_identity(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<size_t>(b[i])];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[static_cast<size_t>(a[i])] = static_cast<int>(i);
    return c;
}

Partition perm_type(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    std::vector<int> parts;
    for (size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(a[j])) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

int perm_order(const Perm& a) {
    long o = 1;
    const Partition type = perm_type(a);
    for (int part : type.parts()) o = std::lcm(o, static_cast<long>(part));
    return static_cast<int>(o);
}

long default_oracle_cap() {
    if (const char* env = std::getenv("MCKAY_ORACLE_CAP")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 20000;
}

PermGroup PermGroup::closure(int degree, std::vector<Perm> gens, long cap) {
    PermGroup g;
    g.degree_ = degree;
    std::set<Perm> seen;
    std::vector<Perm> queue = {perm_identity(degree)};
    seen.insert(queue[0]);
    for (size_t at = 0; at < queue.size(); ++at) {
        for (const Perm& gen : gens) {
            Perm next = perm_mul(gen, queue[at]);
            if (seen.insert(next).second) {
                if (static_cast<long>(seen.size()) > cap) throw cap_exceeded();
                queue.push_back(std::move(next));
            }
        }
    }
    g.elements_.assign(seen.begin(), seen.end());
    for (size_t i = 0; i < g.elements_.size(); ++i)
        g.index_[g.elements_[i]] = static_cast<int>(i);
    g.gens_ = std::move(gens);
    return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elems, long cap) {
    std::set<Perm> seen(elems.begin(), elems.end());
    if (static_cast<long>(seen.size()) > cap) throw cap_exceeded();
    PermGroup g;
    g.degree_ = degree;
    g.elements_.assign(seen.begin(), seen.end());
    for (size_t i = 0; i < g.elements_.size(); ++i)
        g.index_[g.elements_[i]] = static_cast<int>(i);
    // derive a small generating set: add elements while they enlarge the closure
    std::set<Perm> have = {perm_identity(degree)};
    for (const Perm& cand : g.elements_) {
        if (have.count(cand)) continue;
        g.gens_.push_back(cand);
        std::vector<Perm> queue(have.begin(), have.end());
        have.insert(cand);
        queue.push_back(cand);
        for (size_t at = 0; at < queue.size(); ++at)
            for (const Perm& gen : g.gens_) {
                Perm next = perm_mul(gen, queue[at]);
                if (have.insert(next).second) queue.push_back(std::move(next));
            }
        if (have.size() == g.elements_.size()) break;
    }
    if (have.size() != g.elements_.size())
        throw std::invalid_argument("element set is not closed under multiplication");
    return g;
}

int PermGroup::index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return -1;
    return it->second;
}

int PermGroup::mul(int a, int b) const {
    return index_.at(perm_mul(elements_[static_cast<size_t>(a)], elements_[static_cast<size_t>(b)]));
}

int PermGroup::inv(int a) const { return index_.at(perm_inverse(elements_[static_cast<size_t>(a)])); }

Classes conjugacy_classes(const PermGroup& g) {
    const long n = g.order();
    Classes cl;
    cl.of.assign(static_cast<size_t>(n), -1);
    std::vector<std::pair<Perm, Perm>> conjugators; // (t, t^{-1}) for generators
    for (const Perm& t : g.generators()) conjugators.push_back({t, perm_inverse(t)});
    for (int i = 0; i < n; ++i) {
        if (cl.of[static_cast<size_t>(i)] >= 0) continue;
        const int id = cl.count++;
        cl.reps.push_back(i);
        cl.of[static_cast<size_t>(i)] = id;
        std::vector<int> queue = {i};
        long size = 1;
        for (size_t at = 0; at < queue.size(); ++at) {
            const Perm& x = g.element(queue[at]);
            for (const auto& [t, tinv] : conjugators) {
                int y = g.index_of(perm_mul(perm_mul(t, x), tinv));
                if (cl.of[static_cast<size_t>(y)] < 0) {
                    cl.of[static_cast<size_t>(y)] = id;
                    queue.push_back(y);
                    ++size;
                }
            }
        }
        cl.sizes.push_back(size);
    }
    return cl;
}

std::pair<PermGroup, PermGroup> sylow3_and_normalizer(const PermGroup& g, long cap) {
    long order = g.order();
    long three_part = 1;
    while (order % 3 == 0) {
        three_part *= 3;
        order /= 3;
    }

    // grow P from a minimal 3-element by repeatedly adjoining 3-elements of
    // its normalizer; a proper 3-subgroup always has one outside itself
    std::vector<Perm> pgens = {perm_identity(g.degree())};
    PermGroup p = PermGroup::closure(g.degree(), pgens, cap);
    auto normalizes = [&](const Perm& x, const PermGroup& sub) {
        Perm xinv = perm_inverse(x);
        for (const Perm& s : sub.generators())
            if (sub.index_of(perm_mul(perm_mul(x, s), xinv)) < 0) return false;
        return true;
    };
    while (p.order() < three_part) {
        int found = -1;
        for (int i = 0; i < g.order(); ++i) {
            const Perm& x = g.element(i);
            int o = perm_order(x);
            bool is3 = o > 1;
            while (o % 3 == 0) o /= 3;
            is3 = is3 && (o == 1);
            if (!is3 || p.index_of(x) >= 0) continue;
            if (normalizes(x, p)) {
                found = i;
                break;
            }
        }
        if (found < 0) throw std::logic_error("sylow growth stalled");
        pgens = p.generators();
        pgens.push_back(g.element(found));
        p = PermGroup::closure(g.degree(), pgens, cap);
    }

    std::vector<Perm> nelems;
    for (int i = 0; i < g.order(); ++i)
        if (normalizes(g.element(i), p)) nelems.push_back(g.element(i));
    PermGroup n = PermGroup::from_elements(g.degree(), std::move(nelems), cap);
    return {std::move(p), std::move(n)};
}

namespace {

using u64 = unsigned long long;

u64 mod_pow(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

u64 mod_inv(u64 a, u64 ell) { return mod_pow(a, ell - 2, ell); }

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

struct DixonContext {
    u64 ell = 0;
    u64 z = 0; // element of order E in F_ell^x
    long E = 0;
};

// Find the smallest prime l = 1 (mod E) with l > 2 sqrt(|G|), and an element
// of multiplicative order E.
DixonContext dixon_context(long E, long group_order) {
    DixonContext ctx;
    ctx.E = E;
    long bound = 1;
    while (bound * bound <= 4 * group_order) ++bound;
    for (long ell = E + 1;; ell += E) {
        if (ell <= bound || !is_prime(ell)) continue;
        ctx.ell = static_cast<u64>(ell);
        break;
    }
    // primitive root, then power down to order E
    auto factors = prime_factors(static_cast<long>(ctx.ell) - 1);
    for (u64 gen = 2;; ++gen) {
        bool primitive = true;
        for (long f : factors)
            if (mod_pow(gen, (ctx.ell - 1) / static_cast<u64>(f), ctx.ell) == 1) primitive = false;
        if (primitive) {
            ctx.z = mod_pow(gen, (ctx.ell - 1) / static_cast<u64>(E), ctx.ell);
            break;
        }
    }
    return ctx;
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Solve B x = v where the columns of B are a basis of the column space
// containing v; returns coordinates of v. B is k x s.
Vec solve_in_basis(const Mat& basis_cols, const Vec& v, u64 ell) {
    const size_t k = v.size(), s = basis_cols.size();
    Mat aug(k, Vec(s + 1, 0));
    for (size_t j = 0; j < s; ++j)
        for (size_t i = 0; i < k; ++i) aug[i][j] = basis_cols[j][i];
    for (size_t i = 0; i < k; ++i) aug[i][s] = v[i];
    size_t row = 0;
    std::vector<int> pivot_of_col(s, -1);
    for (size_t col = 0; col < s && row < k; ++col) {
        size_t sel = row;
        while (sel < k && aug[sel][col] == 0) ++sel;
        if (sel == k) continue;
        std::swap(aug[sel], aug[row]);
        u64 inv = mod_inv(aug[row][col], ell);
        for (size_t j = col; j <= s; ++j) aug[row][j] = aug[row][j] * inv % ell;
        for (size_t i = 0; i < k; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            u64 f = aug[i][col];
            for (size_t j = col; j <= s; ++j)
                aug[i][j] = (aug[i][j] + (ell - f) * aug[row][j]) % ell;
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    Vec x(s, 0);
    for (size_t col = 0; col < s; ++col)
        if (pivot_of_col[col] >= 0) x[col] = aug[static_cast<size_t>(pivot_of_col[col])][s];
    return x;
}

u64 det_mod(Mat m, u64 ell) {
    const size_t s = m.size();
    u64 det = 1;
    for (size_t col = 0; col < s; ++col) {
        size_t sel = col;
        while (sel < s && m[sel][col] == 0) ++sel;
        if (sel == s) return 0;
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = ell - det;
            if (det == ell) det = 0;
        }
        det = det * m[col][col] % ell;
        u64 inv = mod_inv(m[col][col], ell);
        for (size_t i = col + 1; i < s; ++i) {
            if (m[i][col] == 0) continue;
            u64 f = m[i][col] * inv % ell;
            for (size_t j = col; j < s; ++j) m[i][j] = (m[i][j] + (ell - f) * m[col][j]) % ell;
        }
    }
    return det % ell;
}

// Basis of ker(m) for an s x s matrix over F_ell.
std::vector<Vec> kernel_basis(Mat m, u64 ell) {
    const size_t s = m.size();
    std::vector<int> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < s && row < s; ++col) {
        size_t sel = row;
        while (sel < s && m[sel][col] == 0) ++sel;
        if (sel == s) continue;
        std::swap(m[sel], m[row]);
        u64 inv = mod_inv(m[row][col], ell);
        for (size_t j = 0; j < s; ++j) m[row][j] = m[row][j] * inv % ell;
        for (size_t i = 0; i < s; ++i) {
            if (i == row || m[i][col] == 0) continue;
            u64 f = m[i][col];
            for (size_t j = 0; j < s; ++j) m[i][j] = (m[i][j] + (ell - f) * m[row][j]) % ell;
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<bool> is_pivot(s, false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<Vec> out;
    for (size_t free_col = 0; free_col < s; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(s, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<size_t>(pivot_col[r])] = (ell - m[r][free_col]) % ell;
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

CharacterTable character_table(const PermGroup& g) {
    const long n = g.order();
    Classes cl = conjugacy_classes(g);
    const int k = cl.count;

    CharacterTable t;
    t.group_order = n;
    for (int c = 0; c < k; ++c) {
        const Perm& rep = g.element(cl.reps[static_cast<size_t>(c)]);
        t.class_sizes.push_back(cl.sizes[static_cast<size_t>(c)]);
        t.class_orders.push_back(perm_order(rep));
        t.class_types.push_back(perm_type(rep));
        t.exponent = std::lcm(t.exponent, static_cast<long>(t.class_orders.back()));
    }
    const long E = t.exponent;

    // class-sum structure constants a[i][j][t]: x in C_i, y in C_j, xy = z_t
    std::vector<std::vector<std::vector<long>>> a(
        static_cast<size_t>(k),
        std::vector<std::vector<long>>(static_cast<size_t>(k), std::vector<long>(static_cast<size_t>(k), 0)));
    for (int x = 0; x < n; ++x) {
        int i = cl.of[static_cast<size_t>(x)];
        int xinv = g.inv(x);
        for (int c = 0; c < k; ++c) {
            int y = g.mul(xinv, cl.reps[static_cast<size_t>(c)]);
            a[static_cast<size_t>(i)][static_cast<size_t>(cl.of[static_cast<size_t>(y)])]
             [static_cast<size_t>(c)] += 1;
        }
    }

    DixonContext ctx = dixon_context(E, n);
    const u64 ell = ctx.ell;

    std::vector<Mat> class_mats(static_cast<size_t>(k), Mat(static_cast<size_t>(k), Vec(static_cast<size_t>(k), 0)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int c = 0; c < k; ++c)
                class_mats[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(c)] =
                    static_cast<u64>(a[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(c)] %
                                     static_cast<long>(ell));

    // split the full space into common eigenspaces of the class matrices
    std::vector<std::vector<Vec>> spaces;
    {
        std::vector<Vec> full;
        for (int i = 0; i < k; ++i) {
            Vec e(static_cast<size_t>(k), 0);
            e[static_cast<size_t>(i)] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(std::move(full));
    }
    for (int mi = 0; mi < k; ++mi) {
        bool all_one = true;
        for (const auto& sp : spaces) all_one = all_one && sp.size() == 1;
        if (all_one) break;
        const Mat& M = class_mats[static_cast<size_t>(mi)];
        std::vector<std::vector<Vec>> next;
        for (auto& sp : spaces) {
            if (sp.size() == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            const size_t s = sp.size();
            // restriction R: M b_j = sum_i R[i][j] b_i
            Mat R(s, Vec(s, 0));
            for (size_t j = 0; j < s; ++j) {
                Vec mb(static_cast<size_t>(k), 0);
                for (size_t row = 0; row < static_cast<size_t>(k); ++row) {
                    u64 acc = 0;
                    for (size_t col = 0; col < static_cast<size_t>(k); ++col)
                        acc = (acc + M[row][col] * sp[j][col]) % ell;
                    mb[row] = acc;
                }
                Vec coords = solve_in_basis(sp, mb, ell);
                for (size_t i = 0; i < s; ++i) R[i][j] = coords[i];
            }
            // eigenvalues by scanning the roots of det(R - lambda I)
            std::vector<std::vector<Vec>> pieces;
            size_t found = 0;
            for (u64 lam = 0; lam < ell && found < s; ++lam) {
                Mat shifted = R;
                for (size_t i = 0; i < s; ++i)
                    shifted[i][i] = (shifted[i][i] + ell - lam) % ell;
                if (det_mod(shifted, ell) != 0) continue;
                auto kernel = kernel_basis(shifted, ell);
                std::vector<Vec> piece;
                for (const Vec& coords : kernel) {
                    Vec v(static_cast<size_t>(k), 0);
                    for (size_t j = 0; j < s; ++j)
                        for (size_t row = 0; row < static_cast<size_t>(k); ++row)
                            v[row] = (v[row] + coords[j] * sp[j][row]) % ell;
                    piece.push_back(std::move(v));
                }
                found += piece.size();
                pieces.push_back(std::move(piece));
            }
            if (found != s) throw std::logic_error("eigen decomposition incomplete");
            for (auto& piece : pieces) next.push_back(std::move(piece));
        }
        spaces = std::move(next);
    }
    for (const auto& sp : spaces)
        if (sp.size() != 1) throw std::logic_error("class matrices did not separate characters");

    // identity class index
    int id_class = cl.of[0];
    // recover omega vectors scaled so that omega(identity) = 1
    std::vector<Vec> omegas;
    for (const auto& sp : spaces) {
        Vec v = sp[0];
        u64 pivot = v[static_cast<size_t>(id_class)];
        if (pivot == 0) throw std::logic_error("eigenvector vanishes at the identity class");
        u64 inv = mod_inv(pivot, ell);
        for (auto& x : v) x = x * inv % ell;
        omegas.push_back(std::move(v));
    }

    // inverse classes
    std::vector<int> inv_class(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c)
        inv_class[static_cast<size_t>(c)] =
            cl.of[static_cast<size_t>(g.inv(cl.reps[static_cast<size_t>(c)]))];

    // degrees and values mod ell, then the cyclotomic lift
    struct Row {
        long degree;
        std::vector<Cyclotomic> values;
        std::string key;
    };
    std::vector<Row> rows;
    for (const Vec& w : omegas) {
        u64 s = 0;
        for (int c = 0; c < k; ++c) {
            u64 term = w[static_cast<size_t>(c)] * w[static_cast<size_t>(inv_class[static_cast<size_t>(c)])] % ell;
            term = term * mod_inv(static_cast<u64>(t.class_sizes[static_cast<size_t>(c)] % static_cast<long>(ell)), ell) % ell;
            s = (s + term) % ell;
        }
        u64 d2 = static_cast<u64>(n % static_cast<long>(ell)) * mod_inv(s, ell) % ell;
        long degree = -1;
        for (long d = 1; static_cast<long>(d) * d <= n; ++d)
            if (static_cast<u64>(d) % ell * (static_cast<u64>(d) % ell) % ell == d2) {
                degree = d;
                break;
            }
        if (degree < 0) throw std::logic_error("no integer square root for a degree");

        std::vector<u64> chi_mod(static_cast<size_t>(k));
        for (int c = 0; c < k; ++c)
            chi_mod[static_cast<size_t>(c)] =
                static_cast<u64>(degree) * w[static_cast<size_t>(c)] % ell *
                mod_inv(static_cast<u64>(t.class_sizes[static_cast<size_t>(c)] % static_cast<long>(ell)), ell) % ell;

        Row row;
        row.degree = degree;
        for (int c = 0; c < k; ++c) {
            const int o = t.class_orders[static_cast<size_t>(c)];
            // classes of the powers of the representative
            std::vector<int> power_class(static_cast<size_t>(o));
            int cur = 0; // identity
            for (int v = 0; v < o; ++v) {
                power_class[static_cast<size_t>(v)] = cl.of[static_cast<size_t>(cur)];
                cur = g.mul(cur, cl.reps[static_cast<size_t>(c)]);
            }
            u64 zo = mod_pow(ctx.z, static_cast<u64>(E / o), ell);
            u64 zo_inv = mod_inv(zo, ell);
            u64 o_inv = mod_inv(static_cast<u64>(o), ell);
            Cyclotomic value(E);
            long total = 0;
            for (int u = 0; u < o; ++u) {
                u64 acc = 0;
                u64 zpow = 1;
                u64 step = mod_pow(zo_inv, static_cast<u64>(u), ell);
                for (int v = 0; v < o; ++v) {
                    acc = (acc + chi_mod[static_cast<size_t>(power_class[static_cast<size_t>(v)])] * zpow) % ell;
                    zpow = zpow * step % ell;
                }
                u64 nu = acc * o_inv % ell;
                if (nu > static_cast<u64>(degree))
                    throw std::logic_error("eigenvalue multiplicity out of range");
                if (nu != 0) value += Cyclotomic::root_power(E, static_cast<long>(u) * (E / o), static_cast<long>(nu));
                total += static_cast<long>(nu);
            }
            if (total != degree) throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
            row.values.push_back(std::move(value));
        }
        rows.push_back(std::move(row));
    }

    Int degsum = 0;
    for (const auto& row : rows) degsum += Int(row.degree) * row.degree;
    if (degsum != Int(n)) throw std::logic_error("degrees do not satisfy sum of squares");

    for (auto& row : rows) {
        row.key = std::to_string(row.degree);
        for (const auto& v : row.values) row.key += "|" + v.str();
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.degree, a.key) < std::tie(b.degree, b.key);
    });
    for (auto& row : rows) {
        t.degrees.push_back(row.degree);
        t.rows.push_back(std::move(row.values));
    }
    return t;
}

int count_3prime(const CharacterTable& t) {
    int c = 0;
    for (long d : t.degrees)
        if (d % 3 != 0) ++c;
    return c;
}

FieldData fields_of_values(const CharacterTable& t) {
    FieldData f;
    const long E = t.exponent;
    for (long u = 1; u < E || (E == 1 && u == 1); ++u) {
        if (E == 1) {
            f.units.push_back(1);
            break;
        }
        if (std::gcd(u, E) == 1) f.units.push_back(u);
    }
    for (int r = 0; r < static_cast<int>(t.degrees.size()); ++r)
        if (t.degrees[static_cast<size_t>(r)] % 3 != 0) f.row_indices.push_back(r);

    std::map<std::string, int> key_to_pos;
    auto row_key = [&](const std::vector<Cyclotomic>& values) {
        std::string key;
        for (const auto& v : values) key += "|" + v.str();
        return key;
    };
    for (size_t pos = 0; pos < f.row_indices.size(); ++pos)
        key_to_pos[row_key(t.rows[static_cast<size_t>(f.row_indices[pos])])] = static_cast<int>(pos);

    std::vector<std::vector<int>> perms;
    for (long u : f.units) {
        std::vector<int> perm(f.row_indices.size());
        for (size_t pos = 0; pos < f.row_indices.size(); ++pos) {
            std::vector<Cyclotomic> moved;
            for (const auto& v : t.rows[static_cast<size_t>(f.row_indices[pos])])
                moved.push_back(v.galois(u));
            auto it = key_to_pos.find(row_key(moved));
            if (it == key_to_pos.end())
                throw std::logic_error("galois image of a 3'-row is not a 3'-row");
            perm[pos] = it->second;
        }
        perms.push_back(std::move(perm));
    }

    f.stabilizers.assign(f.row_indices.size(), {});
    for (size_t pos = 0; pos < f.row_indices.size(); ++pos)
        for (size_t ui = 0; ui < f.units.size(); ++ui)
            if (perms[ui][pos] == static_cast<int>(pos))
                f.stabilizers[pos].push_back(f.units[ui]);

    std::vector<bool> seen(f.row_indices.size(), false);
    for (size_t pos = 0; pos < f.row_indices.size(); ++pos) {
        if (seen[pos]) continue;
        std::vector<int> orbit = {static_cast<int>(pos)};
        seen[pos] = true;
        for (size_t at = 0; at < orbit.size(); ++at)
            for (const auto& perm : perms) {
                int next = perm[static_cast<size_t>(orbit[at])];
                if (!seen[static_cast<size_t>(next)]) {
                    seen[static_cast<size_t>(next)] = true;
                    orbit.push_back(next);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        f.orbits.push_back(std::move(orbit));
    }
    std::sort(f.orbits.begin(), f.orbits.end());
    return f;
}

std::vector<std::vector<long>> stabilizers_mod(const CharacterTable& t, long L) {
    if (L % t.exponent != 0) throw std::invalid_argument("exponent must divide L");
    FieldData f = fields_of_values(t);
    std::vector<std::vector<long>> out;
    for (const auto& stab : f.stabilizers) {
        std::set<long> small(stab.begin(), stab.end());
        std::vector<long> lifted;
        for (long u = 1; u < L || (L == 1 && u == 1); ++u) {
            if (L == 1) {
                lifted.push_back(1);
                break;
            }
            if (std::gcd(u, L) != 1) continue;
            long reduced = t.exponent == 1 ? 1 : (u % t.exponent);
            if (small.count(reduced)) lifted.push_back(u);
        }
        out.push_back(std::move(lifted));
    }
    std::sort(out.begin(), out.end());
    return out;
}

FiniteField::FiniteField(int q) : q_(q) {
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    p_ = p;
    int power = 1;
    k_ = 0;
    while (power < q) {
        power *= p;
        ++k_;
    }
    if (power != q) throw std::invalid_argument("q must be a prime power");

    // find a monic irreducible polynomial of degree k over F_p
    std::vector<int> modulus;
    if (k_ == 1) {
        modulus = {0, 1};
    } else {
        auto poly_of = [&](int code, int degree) {
            std::vector<int> f(static_cast<size_t>(degree) + 1, 0);
            for (int i = 0; i < degree; ++i) {
                f[static_cast<size_t>(i)] = code % p;
                code /= p;
            }
            f[static_cast<size_t>(degree)] = 1;
            return f;
        };
        auto divides = [&](const std::vector<int>& d, std::vector<int> f) {
            // monic trial division over F_p
            while (f.size() >= d.size()) {
                int lead = f.back();
                if (lead != 0) {
                    size_t shift = f.size() - d.size();
                    for (size_t i = 0; i < d.size(); ++i) {
                        int& x = f[shift + i];
                        x = ((x - lead * d[i]) % p + p) % p;
                    }
                }
                f.pop_back();
            }
            for (int x : f)
                if (x != 0) return false;
            return true;
        };
        int total = 1;
        for (int i = 0; i < k_; ++i) total *= p;
        for (int code = 0; code < total && modulus.empty(); ++code) {
            std::vector<int> f = poly_of(code, k_);
            bool irreducible = true;
            for (int deg = 1; irreducible && 2 * deg <= k_; ++deg) {
                int dt = 1;
                for (int i = 0; i < deg; ++i) dt *= p;
                for (int dcode = 0; dcode < dt; ++dcode)
                    if (divides(poly_of(dcode, deg), f)) {
                        irreducible = false;
                        break;
                    }
            }
            if (irreducible) modulus = f;
        }
        if (modulus.empty()) throw std::logic_error("no irreducible polynomial found");
    }

    // element <-> polynomial encoding in base p; build the tables
    auto decode = [&](int code) {
        std::vector<int> f(static_cast<size_t>(k_), 0);
        for (int i = 0; i < k_; ++i) {
            f[static_cast<size_t>(i)] = code % p;
            code /= p;
        }
        return f;
    };
    auto encode = [&](const std::vector<int>& f) {
        int code = 0;
        for (int i = k_ - 1; i >= 0; --i) code = code * p + f[static_cast<size_t>(i)];
        return code;
    };
    add_.assign(static_cast<size_t>(q) * q, 0);
    mul_.assign(static_cast<size_t>(q) * q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            auto fa = decode(a), fb = decode(b);
            std::vector<int> sum(static_cast<size_t>(k_), 0);
            for (int i = 0; i < k_; ++i)
                sum[static_cast<size_t>(i)] = (fa[static_cast<size_t>(i)] + fb[static_cast<size_t>(i)]) % p;
            add_[static_cast<size_t>(a) * q + b] = encode(sum);

            std::vector<int> prod(static_cast<size_t>(2 * k_), 0);
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j)
                    prod[static_cast<size_t>(i + j)] =
                        (prod[static_cast<size_t>(i + j)] + fa[static_cast<size_t>(i)] * fb[static_cast<size_t>(j)]) % p;
            for (int i = 2 * k_ - 1; i >= k_; --i) {
                int lead = prod[static_cast<size_t>(i)];
                if (lead == 0) continue;
                prod[static_cast<size_t>(i)] = 0;
                for (int j = 0; j < k_; ++j) {
                    int& x = prod[static_cast<size_t>(i - k_ + j)];
                    x = ((x - lead * modulus[static_cast<size_t>(j)]) % p + p) % p;
                }
            }
            prod.resize(static_cast<size_t>(k_));
            mul_[static_cast<size_t>(a) * q + b] = encode(prod);
        }
}

int FiniteField::neg(int a) const {
    for (int b = 0; b < q_; ++b)
        if (add(a, b) == 0) return b;
    throw std::logic_error("no negative");
}

int FiniteField::pow(int a, long e) const {
    int r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int FiniteField::inv(int a) const {
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw std::invalid_argument("zero has no inverse");
}

namespace {

// permutation of the nonzero vectors of F_q^n induced by an invertible matrix
Perm matrix_to_perm(const FiniteField& F, int n, const std::vector<int>& mat) {
    const int q = F.q();
    long points = 1;
    for (int i = 0; i < n; ++i) points *= q;
    Perm perm(static_cast<size_t>(points - 1));
    std::vector<int> v(static_cast<size_t>(n)), w(static_cast<size_t>(n));
    for (long code = 1; code < points; ++code) {
        long c = code;
        for (int i = 0; i < n; ++i) {
            v[static_cast<size_t>(i)] = static_cast<int>(c % q);
            c /= q;
        }
        for (int i = 0; i < n; ++i) {
            int acc = 0;
            for (int j = 0; j < n; ++j)
                acc = F.add(acc, F.mul(mat[static_cast<size_t>(i * n + j)], v[static_cast<size_t>(j)]));
            w[static_cast<size_t>(i)] = acc;
        }
        long wcode = 0;
        for (int i = n - 1; i >= 0; --i) wcode = wcode * q + w[static_cast<size_t>(i)];
        perm[static_cast<size_t>(code - 1)] = static_cast<int>(wcode - 1);
    }
    return perm;
}

bool invertible(const FiniteField& F, int n, const std::vector<int>& mat) {
    std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = mat[static_cast<size_t>(i * n + j)];
    for (int col = 0; col < n; ++col) {
        int sel = col;
        while (sel < n && m[static_cast<size_t>(sel)][static_cast<size_t>(col)] == 0) ++sel;
        if (sel == n) return false;
        std::swap(m[static_cast<size_t>(sel)], m[static_cast<size_t>(col)]);
        int inv = F.inv(m[static_cast<size_t>(col)][static_cast<size_t>(col)]);
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(col)][static_cast<size_t>(j)] = F.mul(m[static_cast<size_t>(col)][static_cast<size_t>(j)], inv);
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            int f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    F.add(m[static_cast<size_t>(i)][static_cast<size_t>(j)],
                          F.neg(F.mul(f, m[static_cast<size_t>(col)][static_cast<size_t>(j)])));
        }
    }
    return true;
}

// A* A = I for the Hermitian form with orthonormal basis: conj = x -> x^q0.
bool unitary(const FiniteField& F, int n, int q0, const std::vector<int>& mat) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int r = 0; r < n; ++r)
                acc = F.add(acc, F.mul(F.pow(mat[static_cast<size_t>(r * n + i)], q0),
                                       mat[static_cast<size_t>(r * n + j)]));
            if (acc != (i == j ? 1 : 0)) return false;
        }
    return true;
}

PermGroup matrix_group(int n, int q, bool unitary_kind, long cap) {
    const int field_q = unitary_kind ? q * q : q;
    FiniteField F(field_q);
    long total = 1;
    for (int i = 0; i < n * n; ++i) {
        total *= field_q;
        if (total > (1L << 24)) throw cap_exceeded("matrix enumeration too large");
    }
    std::vector<Perm> elems;
    std::vector<int> mat(static_cast<size_t>(n * n));
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < n * n; ++i) {
            mat[static_cast<size_t>(i)] = static_cast<int>(c % field_q);
            c /= field_q;
        }
        bool keep = unitary_kind ? unitary(F, n, q, mat) : invertible(F, n, mat);
        if (!keep) continue;
        elems.push_back(matrix_to_perm(F, n, mat));
        if (static_cast<long>(elems.size()) > cap) throw cap_exceeded();
    }
    const int degree = static_cast<int>(elems.at(0).size());
    return PermGroup::from_elements(degree, std::move(elems), cap);
}

} // namespace

PermGroup build_group(const std::string& kind, long cap) {
    auto parse_ints = [](const std::string& s) {
        std::vector<int> out;
        size_t at = 0;
        while (at < s.size()) {
            size_t next = s.find(':', at);
            if (next == std::string::npos) next = s.size();
            out.push_back(std::stoi(s.substr(at, next - at)));
            at = next + 1;
        }
        return out;
    };
    if (kind.rfind("sym:", 0) == 0) {
        int n = parse_ints(kind.substr(4)).at(0);
        if (n < 1) throw unsupported_parameters();
        std::vector<Perm> gens;
        if (n >= 2) {
            Perm t = perm_identity(n);
            std::swap(t[0], t[1]);
            gens.push_back(t);
            Perm c(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = (i + 1) % n;
            gens.push_back(c);
        }
        return PermGroup::closure(n, gens, cap);
    }
    if (kind.rfind("symnorm:", 0) == 0) {
        int n = parse_ints(kind.substr(8)).at(0);
        PermGroup g = build_group("sym:" + std::to_string(n), cap);
        return sylow3_and_normalizer(g, cap).second;
    }
    if (kind.rfind("gl:", 0) == 0) {
        auto v = parse_ints(kind.substr(3));
        if (v.size() != 2) throw unsupported_parameters();
        return matrix_group(v[0], v[1], false, cap);
    }
    if (kind.rfind("gu:", 0) == 0) {
        auto v = parse_ints(kind.substr(3));
        if (v.size() != 2) throw unsupported_parameters();
        return matrix_group(v[0], v[1], true, cap);
    }
    throw unsupported_parameters("unknown group kind: " + kind);
}

} // namespace mckay
