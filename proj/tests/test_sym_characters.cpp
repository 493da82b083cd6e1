#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "mckay/errors.hpp"
#include "mckay/sym_characters.hpp"

using namespace mckay;

namespace {

int sign_of(const CycleType& sigma) {
    return (sigma.size() - sigma.length()) % 2 == 0 ? 1 : -1;
}

// Frobenius reciprocity oracle: <prod chi^{mu_i} , chi^rho restricted> as a
// sum over tuples of classes of the Young subgroup.
Rat young_restriction_inner(const Partition& rho, const std::vector<Partition>& mus) {
    std::vector<int> sizes;
    for (const auto& mu : mus) sizes.push_back(mu.size());
    Rat total = 0;
    std::vector<Partition> chosen(mus.size());
    std::function<void(size_t, Int, std::vector<int>)> rec =
        [&](size_t at, Int weight, std::vector<int> merged) {
            if (at == mus.size()) {
                std::sort(merged.begin(), merged.end(), std::greater<int>());
                Int prod = weight * mn_value(rho, Partition(merged));
                for (size_t i = 0; i < mus.size(); ++i) prod *= mn_value(mus[i], chosen[i]);
                total += Rat(prod);
                return;
            }
            for (const auto& tau : partitions_of(sizes[at])) {
                chosen[at] = tau;
                std::vector<int> next = merged;
                for (int p : tau.parts()) next.push_back(p);
                rec(at + 1, weight * sn_class_size(tau), next);
            }
        };
    rec(0, 1, {});
    Int denom = 1;
    for (int s : sizes) denom *= factorial(s);
    total /= Rat(denom);
    return total;
}

} // namespace

TEST_CASE("class sizes") {
    Int sum = 0;
    for (const auto& t : partitions_of(6)) sum += sn_class_size(t);
    CHECK((sum == factorial(6)));
    CHECK((sn_class_size(Partition({2, 1})) == 3));
    CHECK((sn_class_size(Partition({3, 2, 1})) == 120));
}

TEST_CASE("Murnaghan-Nakayama basics") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& sigma : partitions_of(n)) {
            CHECK(mn_value(Partition::row(n), sigma) == 1);
            CHECK(mn_value(Partition::column(n), sigma) == sign_of(sigma));
        }
    CHECK_THROWS_AS(mn_value(Partition::row(3), Partition::row(4)), size_mismatch);
}

TEST_CASE("MN degree column and orthogonality") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK((Int(mn_value(lam, Partition::column(n))) == char_degree(lam)));

    for (int n = 1; n <= 7; ++n) {
        auto table = sn_character_table(n);
        const auto& parts = partitions_of(n);
        // first orthogonality, rows
        for (size_t a = 0; a < parts.size(); ++a)
            for (size_t b = a; b < parts.size(); ++b) {
                Int sum = 0;
                for (size_t c = 0; c < parts.size(); ++c)
                    sum += sn_class_size(parts[c]) * table[a][c] * table[b][c];
                CHECK((sum == (a == b ? factorial(n) : Int(0))));
            }
        // column orthogonality
        for (size_t c = 0; c < parts.size(); ++c)
            for (size_t d = c; d < parts.size(); ++d) {
                Int sum = 0;
                for (size_t a = 0; a < parts.size(); ++a) sum += table[a][c] * table[a][d];
                Int expect = (c == d) ? factorial(n) / sn_class_size(parts[c]) : Int(0);
                CHECK((sum == expect));
            }
    }
}

TEST_CASE("Littlewood-Richardson rule") {
    // Pieri: row shapes give horizontal strips
    for (int a = 0; a <= 5; ++a)
        for (const auto& alpha : partitions_of(a))
            for (int m = 1; m <= 4; ++m)
                for (const auto& gamma : partitions_of(a + m)) {
                    long c = lr_coefficient(alpha, Partition::row(m), gamma);
                    bool strip = gamma.contains(alpha);
                    if (strip) // horizontal strip: at most one new cell per column
                        for (int i = 1; i <= gamma.length() && strip; ++i)
                            if (gamma.part(i + 1) > alpha.part(i)) strip = false;
                    CHECK(c == (strip ? 1 : 0));
                }

    // C_{empty, beta}^gamma = delta
    for (int n = 1; n <= 6; ++n)
        for (const auto& beta : partitions_of(n))
            for (const auto& gamma : partitions_of(n))
                CHECK(lr_coefficient(Partition{}, beta, gamma) == (beta == gamma ? 1 : 0));

    // commutativity
    for (int g = 1; g <= 10; ++g)
        for (const auto& gamma : partitions_of(g))
            for (int a = 0; a <= g; ++a)
                for (const auto& alpha : partitions_of(a))
                    for (const auto& beta : partitions_of(g - a))
                        CHECK(lr_coefficient(alpha, beta, gamma) ==
                              lr_coefficient(beta, alpha, gamma));

    // induced degree identity
    for (int a = 1; a <= 5; ++a)
        for (int b = a; a + b <= 9; ++b)
            for (const auto& alpha : partitions_of(a))
                for (const auto& beta : partitions_of(b)) {
                    Int lhs = 0;
                    for (const auto& gamma : partitions_of(a + b))
                        lhs += Int(lr_coefficient(alpha, beta, gamma)) * char_degree(gamma);
                    Int rhs = binomial(a + b, a) * char_degree(alpha) * char_degree(beta);
                    CHECK((lhs == rhs));
                }

    // witnesses are semistandard of the right content
    auto ws = lr_witnesses(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1}));
    CHECK(static_cast<long>(ws.size()) ==
          lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})));
    for (const auto& w : ws) {
        std::vector<int> content(3, 0);
        for (const auto& row : w.filling) {
            for (size_t i = 1; i < row.size(); ++i) CHECK(row[i - 1] <= row[i]);
            for (int v : row) content[static_cast<size_t>(v) - 1] += 1;
        }
        CHECK(content == std::vector<int>({2, 1, 0}));
    }
}

TEST_CASE("iterated restriction multiplicity") {
    // two factors reduce to a single LR coefficient
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (const auto& alpha : partitions_of(a))
                for (const auto& beta : partitions_of(b))
                    for (const auto& rho : partitions_of(a + b))
                        CHECK((iterated_restriction_multiplicity(rho, {alpha, beta}) ==
                               Int(lr_coefficient(alpha, beta, rho))));

    // the trivial character restricts trivially
    CHECK((iterated_restriction_multiplicity(
               Partition::row(7), {Partition::row(3), Partition::row(2), Partition::row(2)}) == 1));

    CHECK_THROWS_AS(
        iterated_restriction_multiplicity(Partition::row(5), {Partition::row(2), Partition::row(2)}),
        size_mismatch);

    // Frobenius reciprocity oracle, several Young subgroups of S_n, n <= 8
    std::vector<std::vector<Partition>> shapes = {
        {Partition({2, 1}), Partition({2, 1}), Partition::row(2)},
        {Partition::column(2), Partition({2, 1}), Partition::row(3)},
        {Partition::row(2), Partition::row(2), Partition::column(2), Partition::row(2)},
        {Partition({3, 1}), Partition({2, 2})},
    };
    for (const auto& mus : shapes) {
        int n = 0;
        for (const auto& mu : mus) n += mu.size();
        for (const auto& rho : partitions_of(n)) {
            Rat expect = young_restriction_inner(rho, mus);
            CHECK((Rat(iterated_restriction_multiplicity(rho, mus)) == expect));
        }
    }

    // invariance under permuting the factors
    std::vector<Partition> mus = {Partition({2, 1}), Partition::row(3), Partition::column(2)};
    std::vector<Partition> perm = {Partition::row(3), Partition::column(2), Partition({2, 1})};
    for (const auto& rho : partitions_of(8))
        CHECK((iterated_restriction_multiplicity(rho, mus) ==
               iterated_restriction_multiplicity(rho, perm)));
}

TEST_CASE("diagonal power multiplicities") {
    auto [lam1, val1] = diagonal_power_multiplicity(1, 3, 1);
    CHECK(lam1 == Partition::row(1));
    CHECK((val1 == 2));
    CHECK((val1 == char_degree(Partition({2, 1}))));

    auto [lam2, val2] = diagonal_power_multiplicity(2, 3, 0);
    CHECK(lam2 == Partition::row(3));
    CHECK((val2 == 1));

    // p = 5, k = 1: all ten hooks resolved by brute force
    for (int j = 0; j < 5; ++j) {
        auto [lam, val] = diagonal_power_multiplicity(1, 5, j);
        CHECK(lam == Partition::row(1));
        CHECK((val == binomial(4, j % 5)));
        CHECK((diagonal_power_multiplicity_checked(1, 5, j, lam) == val));
    }

    // p = 3, k = 2: the checked route agrees and vanishes off the diagonal
    for (int j = 0; j < 9; ++j) {
        auto [lam, val] = diagonal_power_multiplicity(2, 3, j);
        for (const auto& mu : partitions_of(3)) {
            Int got = diagonal_power_multiplicity_checked(2, 3, j, mu);
            CHECK((got == (mu == lam ? val : Int(0))));
        }
    }

    // the full statement for every p^k <= 25 also covers (5,2)
    for (int j = 0; j < 25; ++j) {
        auto [lam, val] = diagonal_power_multiplicity(2, 5, j);
        for (const auto& mu : partitions_of(5)) {
            Int got = diagonal_power_multiplicity_checked(2, 5, j, mu);
            CHECK((got == (mu == lam ? val : Int(0))));
        }
    }
}

TEST_CASE("inner products of class functions") {
    int n = 5;
    const auto& parts = partitions_of(n);
    auto table = sn_character_table(n);
    for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = 0; b < parts.size(); ++b) {
            std::vector<Int> f(table[a].begin(), table[a].end());
            std::vector<Int> g(table[b].begin(), table[b].end());
            CHECK((sn_inner_product(f, g, n) == (a == b ? Rat(1) : Rat(0))));
        }

    // <chi'.chi', chi''> at n = 3, both routes by hand
    {
        const auto& p3 = partitions_of(3);
        std::vector<Int> prod(p3.size()), f(p3.size());
        for (size_t i = 0; i < p3.size(); ++i) {
            long v = mn_value(Partition({2, 1}), p3[i]);
            prod[i] = Int(v) * v;
            f[i] = mn_value(Partition::row(3), p3[i]);
        }
        // chi^{(2,1)} tensor chi^{(2,1)} = chi^{(3)} + chi^{(2,1)} + chi^{(1^3)}
        CHECK((sn_inner_product(prod, f, 3) == Rat(1)));
    }

    CHECK_THROWS_AS(sn_inner_product({Int(1)}, {Int(1)}, 3), index_mismatch);
}
