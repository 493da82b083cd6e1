#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "mckay/errors.hpp"
#include "mckay/wreath.hpp"

using namespace mckay;

namespace {

using Perm3 = std::array<int, 3>;
using Mat2 = std::array<std::array<long, 2>, 2>;

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Perm3 perm_mul(const Perm3& a, const Perm3& b) { // (a*b)(x) = a(b(x))
    return {a[b[0]], a[b[1]], a[b[2]]};
}

Partition perm_cycle_type(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> parts;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

// All of S_3 as permutations together with an integer model of the
// 2-dimensional irreducible representation, built by multiplying generators
// so the assignment is a homomorphism by construction.
void build_s3_rep(std::vector<Perm3>& perms, std::vector<Mat2>& mats) {
    Perm3 id{0, 1, 2}, t{1, 0, 2}, c{1, 2, 0};
    Mat2 mid{{{1, 0}, {0, 1}}};
    Mat2 mt{{{0, 1}, {1, 0}}};
    Mat2 mc{{{0, -1}, {1, -1}}};
    perms = {id};
    mats = {mid};
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < perms.size(); ++i) {
            for (int g = 0; g < 2; ++g) {
                Perm3 np = perm_mul(g == 0 ? t : c, perms[i]);
                Mat2 nm = mat_mul(g == 0 ? mt : mc, mats[i]);
                if (std::find(perms.begin(), perms.end(), np) == perms.end()) {
                    perms.push_back(np);
                    mats.push_back(nm);
                    grew = true;
                }
            }
        }
    }
}

Partition s3_class(const Perm3& p) {
    return perm_cycle_type(std::vector<int>(p.begin(), p.end()));
}

} // namespace

TEST_CASE("wreath classes partition the group") {
    for (auto [r, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {2, 2}, {1, 5}, {2, 3}}) {
        auto classes = wreath_classes(r, m);
        Int sum = 0;
        for (const auto& cls : classes) {
            CHECK(cls.top_size() == m);
            CHECK(underlying_cycle_type(r, cls).size() == r * m);
            sum += wreath_class_size(r, m, cls);
        }
        CHECK((sum == wreath_order(r, m)));
    }
}

TEST_CASE("canonical extension against the explicit tensor model") {
    std::vector<Perm3> perms;
    std::vector<Mat2> mats;
    build_s3_rep(perms, mats);
    REQUIRE(perms.size() == 6);
    // character of the model is chi^{(2,1)}
    for (size_t i = 0; i < perms.size(); ++i) {
        long trace = mats[i][0][0] + mats[i][1][1];
        CHECK(trace == mn_value(Partition({2, 1}), s3_class(perms[i])));
    }

    // every element of S_3 wr S_2, its 4x4 tensor-model trace, bucketed by class
    std::map<std::string, std::pair<long, long>> by_class; // key -> (trace, count)
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j)
            for (int s = 0; s < 2; ++s) {
                long trace = 0;
                if (s == 0) {
                    trace = (mats[i][0][0] + mats[i][1][1]) * (mats[j][0][0] + mats[j][1][1]);
                } else {
                    // swap then apply the base pair: trace of (A tensor B) S
                    Mat2 prod = mat_mul(mats[i], mats[j]);
                    trace = prod[0][0] + prod[1][1];
                }
                std::string key;
                if (s == 0) {
                    Partition c1 = s3_class(perms[i]), c2 = s3_class(perms[j]);
                    if (c2 < c1) std::swap(c1, c2);
                    key = "1:" + c1.str() + c2.str();
                } else {
                    key = "2:" + s3_class(perm_mul(perms[i], perms[j])).str();
                }
                auto it = by_class.find(key);
                if (it == by_class.end()) {
                    by_class[key] = {trace, 1};
                } else {
                    CHECK(it->second.first == trace); // trace is a class function
                    it->second.second += 1;
                }
            }

    // compare against the cycle-product formula on every wreath class
    long total = 0;
    for (const auto& cls : wreath_classes(3, 2)) {
        std::string key;
        if (top_cycle_type(cls) == Partition({1, 1})) {
            std::vector<Partition> base;
            for (const auto& p : cls.parts)
                for (int i = 0; i < p.mult; ++i) base.push_back(p.base_cls);
            std::sort(base.begin(), base.end());
            key = "1:" + base[0].str() + base[1].str();
        } else {
            key = "2:" + cls.parts[0].base_cls.str();
        }
        REQUIRE(by_class.count(key));
        CHECK(by_class[key].first == canonical_extension_value(Partition({2, 1}), 2, cls));
        CHECK((Int(by_class[key].second) == wreath_class_size(3, 2, cls)));
        total += by_class[key].second;
    }
    CHECK(total == 72);

    // identity class value is deg^m; transposition over the identity base is deg^{m-1}
    for (const auto& cls : wreath_classes(3, 2)) {
        if (underlying_cycle_type(3, cls) == Partition::column(6))
            CHECK(canonical_extension_value(Partition({2, 1}), 2, cls) == 4);
        if (top_cycle_type(cls) == Partition::row(2) && cls.parts[0].base_cls == Partition::column(3))
            CHECK(canonical_extension_value(Partition({2, 1}), 2, cls) == 2);
    }
}

TEST_CASE("determinant of the extension is trivial on transpositions (odd or stable cases)") {
    // det at an involution from trace and dimension: (-1)^{(dim - trace)/2}.
    // Cases (i)/(ii) with dim in {1, 2, 8} arising from hooks of 3^k, m <= 3.
    for (int m : {2, 3})
        for (const Partition& lam : {Partition::row(3), Partition({2, 1}), Partition::column(3)}) {
            long dim = 1;
            long d = mn_value(lam, Partition::column(3));
            for (int i = 0; i < m; ++i) dim *= d;
            // class: top transposition, all cycle products trivial
            WreathClass cls;
            cls.parts.push_back({2, Partition::column(3), 1});
            if (m == 3) cls.parts.push_back({1, Partition::column(3), 1});
            long trace = canonical_extension_value(lam, m, cls);
            long minus_ones = (dim - trace) / 2;
            if (d % 2 == 1 || m >= 3) CHECK(minus_ones % 2 == 0);
        }
}

TEST_CASE("wreath character values and degrees") {
    // chi(lambda, (m)) at the identity
    for (auto [r, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}}) {
        WreathClass id;
        id.parts.push_back({1, Partition::column(r), m});
        for (const auto& lam : partitions_of(r)) {
            WreathLabel l = WreathLabel::diagonal(lam, Partition::row(m));
            CHECK((Int(wreath_char_value(r, m, l, id)) == wreath_label_degree(r, m, l)));
        }
    }
    // induced-pair degree 2*1*2 = 4
    WreathLabel pair = WreathLabel::induced_pair(Partition::row(3), Partition({2, 1}));
    CHECK((wreath_label_degree(3, 2, pair) == 4));
    WreathClass id6;
    id6.parts.push_back({1, Partition::column(3), 2});
    CHECK(wreath_char_value(3, 2, pair, id6) == 4);

    // hook value at the fixed-point-free involution, k in {1, 2}
    for (int k : {1, 2}) {
        int n3 = k == 1 ? 3 : 9;
        Partition invol(std::vector<int>(n3, 2));
        for (int ell = 0; ell < 2 * n3; ++ell) {
            int m = ell / 2, x = ell % 2;
            long expect = ((m + x) % 2 == 0 ? 1 : -1);
            Int b = binomial(n3 - 1, m);
            CHECK((Int(mn_value(Partition::hook(2 * n3, ell), invol)) == expect * b));
        }
    }
}

TEST_CASE("restriction multiplicities against a brute-force sum at order 72") {
    std::vector<Perm3> perms;
    std::vector<Mat2> mats;
    build_s3_rep(perms, mats);

    // labels to exercise
    std::vector<WreathLabel> labels;
    for (const auto& lam : partitions_of(3))
        for (const auto& mu : partitions_of(2)) labels.push_back(WreathLabel::diagonal(lam, mu));
    labels.push_back(WreathLabel::induced_pair(Partition::row(3), Partition({2, 1})));
    labels.push_back(WreathLabel::induced_pair(Partition::row(3), Partition::column(3)));
    labels.push_back(WreathLabel::induced_pair(Partition::column(3), Partition({2, 1})));

    for (const auto& rho : partitions_of(6)) {
        for (const auto& label : labels) {
            // direct sum over the 72 elements of S_3 wr S_2 inside S_6
            Int direct = 0;
            for (size_t i = 0; i < 6; ++i)
                for (size_t j = 0; j < 6; ++j)
                    for (int s = 0; s < 2; ++s) {
                        std::vector<int> p6(6);
                        for (int x = 0; x < 3; ++x) {
                            if (s == 0) {
                                p6[x] = perms[i][x];
                                p6[3 + x] = 3 + perms[j][x];
                            } else {
                                p6[x] = 3 + perms[j][x];
                                p6[3 + x] = perms[i][x];
                            }
                        }
                        long lv;
                        if (s == 0) {
                            lv = (label.kind == WreathLabel::Kind::diagonal)
                                     ? mn_value(label.base, s3_class(perms[i])) *
                                           mn_value(label.base, s3_class(perms[j])) *
                                           mn_value(label.top, Partition({1, 1}))
                                     : mn_value(label.pair_first, s3_class(perms[i])) *
                                               mn_value(label.pair_second, s3_class(perms[j])) +
                                           mn_value(label.pair_first, s3_class(perms[j])) *
                                               mn_value(label.pair_second, s3_class(perms[i]));
                        } else {
                            lv = (label.kind == WreathLabel::Kind::diagonal)
                                     ? mn_value(label.base, s3_class(perm_mul(perms[i], perms[j]))) *
                                           mn_value(label.top, Partition::row(2))
                                     : 0;
                        }
                        direct += Int(mn_value(rho, perm_cycle_type(p6))) * lv;
                    }
            Int expect;
            mpz_tdiv_q_ui(expect.get_mpz_t(), direct.get_mpz_t(), 72);
            CHECK((restriction_mult(rho, 3, 2, label) == expect));
        }
    }

    // spot values
    CHECK((restriction_mult(Partition::row(6), 3, 2,
                            WreathLabel::diagonal(Partition::row(3), Partition::row(2))) == 1));
    // chi^{(3,3)} restricted to S_3 x S_3 is (3)x(3) + (2,1)x(2,1); the
    // induced-pair character over its generating pair does not appear
    CHECK((restriction_mult(Partition({3, 3}), 3, 2,
                            WreathLabel::induced_pair(Partition::row(3), Partition({2, 1}))) == 0));
    Int diag_sum = 0;
    for (const auto& mu : partitions_of(2))
        diag_sum += restriction_mult(Partition({3, 3}), 3, 2,
                                     WreathLabel::diagonal(Partition({2, 1}), mu));
    CHECK((diag_sum == 1));
}

TEST_CASE("all wreath degrees") {
    for (auto [r, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {2, 2}}) {
        auto degs = wreath_all_degrees(r, m);
        Int sum = 0;
        for (const auto& d : degs) sum += d * d;
        CHECK((sum == wreath_order(r, m)));
    }
    // 3'-degree characters of S_3 wr S_3 are exactly the nine chi(hook, hook)
    auto degs33 = wreath_all_degrees(3, 3);
    int threep = 0;
    for (const auto& d : degs33)
        if (d % 3 != 0) ++threep;
    CHECK(threep == 9);
}

TEST_CASE("star map") {
    CHECK(star_map(Partition({2, 1}), 3) ==
          WreathLabel::diagonal(Partition::row(1), Partition({2, 1})));
    CHECK(star_map(Partition::row(3), 3) ==
          WreathLabel::diagonal(Partition::row(1), Partition::row(3)));
    CHECK_THROWS_AS(star_map(Partition({2, 2}), 3), not_a_hook);

    // closed form agrees with the computational resolution for p = 3, k in {1,2}
    for (int k : {1, 2}) {
        int n = k == 1 ? 3 : 9;
        std::set<WreathLabel> images;
        for (int x = 0; x < n; ++x) {
            Partition h = Partition::hook(n, x);
            WreathLabel closed = star_map(h, 3);
            CHECK(closed == star_map_resolved_by_restriction(h, 3));
            images.insert(closed);
        }
        CHECK(static_cast<int>(images.size()) == n); // bijective onto Irr_{3'}
    }

    // p = 5, k = 1: every hook resolves to a unique candidate
    std::set<WreathLabel> images5;
    for (int x = 0; x < 5; ++x) images5.insert(star_map(Partition::hook(5, x), 5));
    CHECK(images5.size() == 5);
}

TEST_CASE("psi map reproduces the S_6 table verbatim") {
    using P = Partition;
    std::vector<std::pair<Partition, WreathLabel>> table = {
        {P::row(6), WreathLabel::diagonal(P::row(3), P::row(2))},
        {P({5, 1}), WreathLabel::diagonal(P({2, 1}), P::column(2))},
        {P({4, 1, 1}), WreathLabel::diagonal(P::column(3), P::row(2))},
        {P({3, 1, 1, 1}), WreathLabel::diagonal(P::row(3), P::column(2))},
        {P({2, 1, 1, 1, 1}), WreathLabel::diagonal(P({2, 1}), P::row(2))},
        {P::column(6), WreathLabel::diagonal(P::column(3), P::column(2))},
        {P({3, 3}), WreathLabel::induced_pair(P::row(3), P({2, 1}))},
        {P({3, 2, 1}), WreathLabel::induced_pair(P::row(3), P::column(3))},
        {P({2, 2, 2}), WreathLabel::induced_pair(P::column(3), P({2, 1}))},
    };
    for (const auto& [lam, label] : table) {
        CHECK(psi_map(lam) == label);
        CHECK(psi_inverse(label, 1) == lam);
    }

    CHECK_THROWS_AS(psi_map(Partition({4, 2})), not_three_prime);

    // bijectivity for k in {1, 2}
    for (int k : {1, 2}) {
        int n = 2 * (k == 1 ? 3 : 9);
        std::set<WreathLabel> images;
        int count = 0;
        for (const auto& lam : partitions_of(n)) {
            if (!is_pprime_degree(lam, 3)) continue;
            ++count;
            WreathLabel l = psi_map(lam);
            CHECK(images.insert(l).second);
            CHECK(psi_inverse(l, k) == lam);
        }
        int n3 = n / 2;
        CHECK(count == 2 * n3 + (n3 * (n3 - 1)) / 2);
        CHECK(static_cast<int>(images.size()) == count);
    }
}

TEST_CASE("hook constituents of 2*3^k") {
    CHECK(hook_constituent_23k(Partition::row(6)) ==
          WreathLabel::diagonal(Partition::row(3), Partition::row(2)));
    // leg 2 = 2*1 + 0: lambda = (2,1), m + x odd
    CHECK(hook_constituent_23k(Partition({4, 1, 1})) ==
          WreathLabel::diagonal(Partition({2, 1}), Partition::column(2)));

    // k in {1, 2}: confirmed by restriction and by the character value at the
    // fixed-point-free involution
    for (int k : {1, 2}) {
        int n3 = k == 1 ? 3 : 9;
        Partition invol(std::vector<int>(n3, 2));
        for (int ell = 0; ell < 2 * n3; ++ell) {
            Partition h = Partition::hook(2 * n3, ell);
            WreathLabel phi = hook_constituent_23k(h);
            // unique diagonal-kind constituent, multiplicity one
            for (const auto& lam : partitions_of(n3)) {
                if (!lam.is_hook()) continue;
                for (const auto& mu : partitions_of(2)) {
                    WreathLabel cand = WreathLabel::diagonal(lam, mu);
                    CHECK((restriction_mult(h, n3, 2, cand) == (cand == phi ? 1 : 0)));
                }
            }
            // MN identity pins the sign
            long lhs = mn_value(h, invol);
            long sign = ((ell / 2 + ell % 2) % 2 == 0) ? 1 : -1;
            Int rhs = binomial(n3 - 1, ell / 2) * sign;
            CHECK((Int(lhs) == rhs));
        }
    }
}
