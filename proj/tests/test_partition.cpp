#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "mckay/errors.hpp"
#include "mckay/partition.hpp"

using namespace mckay;

namespace {

using Cell = std::pair<int, int>;

// Independent rim-hook oracle: walk the rim set directly from the diagram.
std::set<Cell> rim_hook_cells(const Partition& lam, int r, int c) {
    std::set<Cell> cells;
    const Partition conj = lam.conjugate();
    for (int i = r; i <= conj.part(c); ++i)
        for (int j = c; j <= lam.part(i); ++j)
            if (j + 1 > lam.part(i + 1)) // (i+1, j+1) outside the diagram
                cells.insert({i, j});
    return cells;
}

Partition remove_cells(const Partition& lam, const std::set<Cell>& cells) {
    std::map<int, int> rows;
    for (int i = 1; i <= lam.length(); ++i) rows[i] = lam.part(i);
    for (auto [i, j] : cells) rows[i] -= 1;
    std::vector<int> parts;
    for (auto [i, len] : rows) {
        (void)i;
        if (len > 0) parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

// Count standard Young tableaux by brute-force growth.
Int count_syt(const Partition& shape) {
    if (shape.empty()) return 1;
    Int total = 0;
    for (int i = 1; i <= shape.length(); ++i) {
        if (shape.part(i) == 0 || shape.part(i) < shape.part(i - 1) || (i > 1 && shape.part(i) == shape.part(i - 1)) ) {
            // removable corner iff strictly shorter than the row above
        }
    }
    for (int i = 1; i <= shape.length(); ++i) {
        bool corner = shape.part(i) > shape.part(i + 1);
        if (!corner) continue;
        std::vector<int> parts = shape.parts();
        parts[i - 1] -= 1;
        total += count_syt(Partition(parts));
    }
    return total;
}

} // namespace

TEST_CASE("conjugate") {
    CHECK(Partition::row(5).conjugate() == Partition::column(5));
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    for (int n = 0; n <= 9; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("char_degree") {
    CHECK((char_degree(Partition::row(7)) == 1));
    CHECK((char_degree(Partition({2, 2})) == 2));
    CHECK((char_degree(Partition({2, 2})) == count_syt(Partition({2, 2}))));
    for (int n = 1; n <= 8; ++n)
        for (int x = 0; x < n; ++x)
            CHECK((char_degree(Partition::hook(n, x)) == binomial(n - 1, x)));
    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK((char_degree(lam) == count_syt(lam)));
}

TEST_CASE("removable_rim_hooks against the rim-walk oracle") {
    CHECK(removable_rim_hooks(Partition::row(5), 5).size() == 1);
    CHECK(removable_rim_hooks(Partition::row(5), 5)[0].leg == 0);
    CHECK(removable_rim_hooks(Partition{}, 3).empty());

    for (int n = 1; n <= 9; ++n)
        for (const auto& lam : partitions_of(n))
            for (int e = 1; e <= n; ++e) {
                auto hooks = removable_rim_hooks(lam, e);
                // oracle: cells whose rim hook has exactly e cells
                std::vector<RimHook> expected;
                const Partition conj = lam.conjugate();
                for (int r = 1; r <= lam.length(); ++r)
                    for (int c = 1; c <= lam.part(r); ++c) {
                        auto cells = rim_hook_cells(lam, r, c);
                        if (static_cast<int>(cells.size()) != e) continue;
                        RimHook h;
                        h.row = r;
                        h.col = c;
                        h.size = e;
                        h.leg = conj.part(c) - r;
                        expected.push_back(h);
                    }
                REQUIRE(hooks.size() == expected.size());
                for (size_t i = 0; i < hooks.size(); ++i) {
                    CHECK(hooks[i].row == expected[i].row);
                    CHECK(hooks[i].col == expected[i].col);
                    CHECK(hooks[i].leg == expected[i].leg);
                    CHECK(hooks[i].size == e);
                    CHECK(hooks[i].arm() == e - hooks[i].leg - 1);
                    Partition removed = remove_rim_hook(lam, hooks[i]);
                    CHECK(removed.size() == n - e);
                    CHECK(removed ==
                          remove_cells(lam, rim_hook_cells(lam, expected[i].row, expected[i].col)));
                }
                // anchor rows are increasing
                for (size_t i = 1; i < hooks.size(); ++i) CHECK(hooks[i - 1].row < hooks[i].row);
            }
}

TEST_CASE("add_rim_hook") {
    for (int e = 1; e <= 7; ++e)
        for (int x = 0; x < e; ++x)
            CHECK(add_rim_hook(Partition{}, e, x) == Partition::hook(e, x));

    // add then remove is the identity (hooks larger than the partition)
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (int e = n + 1; e <= n + 4; ++e)
                for (int leg = 0; leg < e; ++leg) {
                    Partition bigger = add_rim_hook(lam, e, leg);
                    CHECK(bigger.size() == n + e);
                    auto hooks = removable_rim_hooks(bigger, e);
                    bool found = false;
                    for (const auto& h : hooks)
                        if (h.leg == leg && remove_rim_hook(bigger, h) == lam) found = true;
                    CHECK(found);
                }

    // brute-force: the unique partition of 12 with a removable 9-hook of leg 4
    // whose removal gives (2,1)
    std::vector<Partition> matches;
    for (const auto& mu : partitions_of(12))
        for (const auto& h : removable_rim_hooks(mu, 9))
            if (h.leg == 4 && remove_rim_hook(mu, h) == Partition({2, 1})) matches.push_back(mu);
    REQUIRE(matches.size() == 1);
    CHECK(add_rim_hook(Partition({2, 1}), 9, 4) == matches[0]);
    CHECK(matches[0] == Partition({5, 3, 2, 1, 1}));

    CHECK_THROWS_AS(add_rim_hook(Partition{}, 3, 5), no_such_addable_hook);
}

TEST_CASE("p-core and p-quotient") {
    // a p-hook-free partition is fixed with empty quotient
    auto [c1, q1] = p_core_and_quotient(Partition({3, 1}), 3);
    CHECK(c1 == Partition({3, 1}));
    for (const auto& q : q1) CHECK(q.empty());

    auto [c2, q2] = p_core_and_quotient(Partition::row(3), 3);
    CHECK(c2 == Partition{});
    int tot = 0;
    for (const auto& q : q2) tot += q.size();
    CHECK(tot == 1);

    // frozen convention values
    auto [c3, q3] = p_core_and_quotient(Partition::row(2), 2);
    CHECK(c3 == Partition{});
    CHECK(q3 == std::vector<Partition>({Partition{}, Partition::row(1)}));
    auto [c4, q4] = p_core_and_quotient(Partition({1, 1}), 2);
    CHECK(c4 == Partition{});
    CHECK(q4 == std::vector<Partition>({Partition::row(1), Partition{}}));
    CHECK(combine_core_quotient(Partition{}, {Partition::row(1), Partition{}}, 2) ==
          Partition({1, 1}));

    auto [c5, q5] = p_core_and_quotient(Partition({4, 3, 1}), 3);
    CHECK(c5 == Partition::row(2));
    CHECK(q5 == std::vector<Partition>({Partition::row(2), Partition{}, Partition{}}));

    // the core is independent of the removal order: remove 3-hooks greedily in
    // all orders and confirm a single terminal partition
    {
        std::set<Partition> terminals;
        std::vector<Partition> stack = {Partition({4, 3, 1})};
        std::set<Partition> seen;
        while (!stack.empty()) {
            Partition lam = stack.back();
            stack.pop_back();
            if (!seen.insert(lam).second) continue;
            auto hooks = removable_rim_hooks(lam, 3);
            if (hooks.empty()) terminals.insert(lam);
            for (const auto& h : hooks) stack.push_back(remove_rim_hook(lam, h));
        }
        CHECK(terminals == std::set<Partition>({Partition::row(2)}));
    }

    CHECK_THROWS_AS(combine_core_quotient(Partition::row(3), {{}, {}, {}}, 3), invalid_core);

    // roundtrip, exhaustive over small partitions
    for (int n = 0; n <= 14; ++n)
        for (const auto& lam : partitions_of(n))
            for (int p : {2, 3, 5}) {
                auto [core, quot] = p_core_and_quotient(lam, p);
                CHECK(removable_rim_hooks(core, p).empty());
                int qtot = 0;
                for (const auto& q : quot) qtot += q.size();
                CHECK(core.size() + p * qtot == n);
                CHECK(combine_core_quotient(core, quot, p) == lam);
            }
}

TEST_CASE("core towers") {
    // a p-core gives a single-layer tower
    CoreTower t = core_tower(Partition({3, 1}), 3);
    CHECK(t.height() == 1);
    CHECK(t.layers[0][0] == Partition({3, 1}));

    // hooks of 3^k: single (1) in layer k
    for (int k = 1; k <= 3; ++k) {
        int n = 1;
        for (int i = 0; i < k; ++i) n *= 3;
        for (int x = 0; x < n; ++x) {
            CoreTower ht = core_tower(Partition::hook(n, x), 3);
            REQUIRE(ht.height() == k + 1);
            for (int j = 0; j < k; ++j) CHECK(ht.layer_weight(j) == 0);
            CHECK(ht.layer_weight(k) == 1);
            int nonempty = 0;
            for (const auto& c : ht.layers[k])
                if (!c.empty()) {
                    ++nonempty;
                    CHECK(c == Partition::column(1));
                }
            CHECK(nonempty == 1);
        }
    }

    // recompute layers of (4,3,1) via repeated core/quotient
    {
        CoreTower got = core_tower(Partition({4, 3, 1}), 3);
        auto [core, quot] = p_core_and_quotient(Partition({4, 3, 1}), 3);
        REQUIRE(got.height() == 2);
        CHECK(got.layers[0][0] == core);
        for (int r = 0; r < 3; ++r) {
            auto [c2, q2] = p_core_and_quotient(quot[r], 3);
            CHECK(got.layers[1][r] == c2);
            for (const auto& q : q2) CHECK(q.empty());
        }
    }

    // weights sum correctly and the tower reconstructs the partition
    for (int n = 0; n <= 14; ++n)
        for (const auto& lam : partitions_of(n))
            for (int p : {2, 3}) {
                CoreTower tw = core_tower(lam, p);
                int sum = 0, pj = 1;
                for (int j = 0; j < tw.height(); ++j, pj *= p) sum += tw.layer_weight(j) * pj;
                CHECK(sum == n);
                CHECK(partition_from_tower(tw) == lam);
            }

    // injectivity at p = 3 over all partitions of n <= 12
    for (int n = 0; n <= 12; ++n) {
        std::set<std::string> keys;
        for (const auto& lam : partitions_of(n)) {
            CoreTower tw = core_tower(lam, 3);
            std::string key;
            for (const auto& layer : tw.layers)
                for (const auto& c : layer) key += c.str() + "|";
            CHECK(keys.insert(key).second);
        }
    }
}

TEST_CASE("Macdonald 3'-criterion vs hook length formula") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : partitions_of(n))
            for (int p : {2, 3, 5})
                CHECK((is_pprime_degree(lam, p) == (char_degree(lam) % p != 0)));
    // hooks of p^k have p'-degree
    CHECK(is_pprime_degree(Partition::hook(9, 4), 3));
    CHECK(is_pprime_degree(Partition::row(6), 2));
}

TEST_CASE("hook_generated and generating_pair") {
    CHECK(hook_generated(Partition::row(3), Partition({2, 1})) == Partition({3, 3}));
    CHECK(hook_generated(Partition::row(3), Partition::column(3)) == Partition({3, 2, 1}));
    CHECK(hook_generated(Partition::column(3), Partition({2, 1})) == Partition({2, 2, 2}));
    CHECK(hook_generated(Partition({2, 1}), Partition::row(3)) == Partition({3, 3}));

    CHECK_THROWS_AS(hook_generated(Partition::row(3), Partition::row(3)), equal_hooks);
    CHECK_THROWS_AS(hook_generated(Partition({2, 2}), Partition::row(4)), not_hooks);

    auto gp = generating_pair(Partition({3, 3}));
    REQUIRE(gp.has_value());
    CHECK(gp->first == Partition({2, 1}));
    CHECK(gp->second == Partition::row(3));
    CHECK(!generating_pair(Partition::row(6)).has_value());

    // exhaustive roundtrip over pairs for k in {1, 2}; |HG(2*3^k)| = C(3^k, 2)
    for (int k : {1, 2}) {
        int n = k == 1 ? 3 : 9;
        std::set<Partition> images;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                Partition h1 = Partition::hook(n, x);
                Partition h2 = Partition::hook(n, y);
                Partition lam = hook_generated(h1, h2);
                CHECK(lam.size() == 2 * n);
                auto pair = generating_pair(lam);
                REQUIRE(pair.has_value());
                std::pair<Partition, Partition> want = {h1, h2};
                if (want.second < want.first) std::swap(want.first, want.second);
                CHECK(*pair == want);
                images.insert(lam);
            }
        CHECK(static_cast<long long>(images.size()) == (n * (n - 1)) / 2);
    }
}

TEST_CASE("three_adic") {
    auto e6 = three_adic(6);
    REQUIRE(e6.digits.size() == 1);
    CHECK(e6.digits[0].a == 2);
    CHECK(e6.digits[0].exp == 1);

    auto e9 = three_adic(9);
    REQUIRE(e9.digits.size() == 1);
    CHECK(e9.digits[0].a == 1);
    CHECK(e9.digits[0].exp == 2);

    auto e100 = three_adic(100);
    REQUIRE(e100.digits.size() == 3);
    CHECK(e100.digits[0].a == 1);
    CHECK(e100.digits[0].exp == 4);
    CHECK(e100.digits[1].a == 2);
    CHECK(e100.digits[1].exp == 2);
    CHECK(e100.digits[2].a == 1);
    CHECK(e100.digits[2].exp == 0);

    for (int n = 1; n <= 200; ++n) {
        int sum = 0;
        int last_exp = 1 << 20;
        const ThreeAdicExpansion expn = three_adic(n);
        for (auto [a, exp] : expn.digits) {
            CHECK((a == 1 || a == 2));
            CHECK(exp < last_exp);
            last_exp = exp;
            int p = 1;
            for (int i = 0; i < exp; ++i) p *= 3;
            sum += a * p;
        }
        CHECK(sum == n);
    }
}

TEST_CASE("partition enumeration") {
    int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) CHECK(static_cast<int>(partitions_of(n).size()) == expected[n]);
    CHECK(partitions_of(4).front() == Partition::row(4));
    CHECK(partitions_of(4).back() == Partition::column(4));

    auto bounded = partitions_of_bounded(3, Partition({2, 2, 2}));
    CHECK(std::find(bounded.begin(), bounded.end(), Partition::row(3)) == bounded.end());
    CHECK(std::find(bounded.begin(), bounded.end(), Partition({2, 1})) != bounded.end());
}
