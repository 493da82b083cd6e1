#include "mckay/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "mckay/errors.hpp"
#include "mckay/wreath.hpp"

namespace mckay {

void SuiteReport::add(std::string key, std::string expected, std::string computed) {
    bool ok = expected == computed;
    cases.push_back({std::move(key), std::move(expected), std::move(computed), ok});
}

void SuiteReport::add_check(std::string key, bool ok, std::string detail) {
    cases.push_back({std::move(key), "ok", ok ? "ok" : (detail.empty() ? "fail" : detail), ok});
}

bool SuiteReport::passed() const { return fail_count() == 0; }

int SuiteReport::fail_count() const {
    int n = 0;
    for (const auto& c : cases)
        if (!c.pass) ++n;
    return n;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

namespace {

int pow3(int k) {
    int r = 1;
    while (k-- > 0) r *= 3;
    return r;
}

int pow_int(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

SuiteReport verify_psi(int k) {
    SuiteReport rep{"psi", {}};
    const int n3 = pow3(k);
    const int n = 2 * n3;
    if (k == 1) {
        using P = Partition;
        const std::vector<std::pair<Partition, WreathLabel>> table = {
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
            rep.add("psi(" + lam.str() + ")", label.str(), psi_map(lam).str());
            rep.add("psi_inverse(" + label.str() + ")", lam.str(), psi_inverse(label, 1).str());
        }
    }
    std::set<WreathLabel> images;
    int count = 0;
    for (const auto& lam : enumerate_3prime_sn(n)) {
        ++count;
        WreathLabel l = psi_map(lam);
        bool fresh = images.insert(l).second;
        rep.add_check("roundtrip " + lam.str(), fresh && psi_inverse(l, k) == lam);
    }
    rep.add("domain size", std::to_string(2 * n3 + n3 * (n3 - 1) / 2), std::to_string(count));
    return rep;
}

SuiteReport verify_lem1(int p, int k) {
    SuiteReport rep{"lem1", {}};
    const int pk = pow_int(p, k);
    for (int j = 0; j < pk; ++j) {
        auto [lam, value] = diagonal_power_multiplicity(k, p, j);
        for (const auto& mu : partitions_of(pk / p)) {
            Int expected = (mu == lam) ? value : Int(0);
            Int got = diagonal_power_multiplicity_checked(k, p, j, mu);
            rep.add("p=" + std::to_string(p) + ",k=" + std::to_string(k) + ",j=" +
                        std::to_string(j) + ",mu=" + mu.str(),
                    expected.get_str(), got.get_str());
        }
    }
    return rep;
}

SuiteReport verify_thmB(int p, int k) {
    SuiteReport rep{"thmB", {}};
    const int pk = pow_int(p, k);
    const int r = pk / p;

    // the p'-degree characters of S_{p^{k-1}} wr S_p are exactly the labels
    // chi(mu, nu) with mu, nu hooks
    {
        auto degrees = wreath_all_degrees(r, p);
        int pprime = 0;
        for (const auto& d : degrees)
            if (d % p != 0) ++pprime;
        rep.add("p'-degree count in the wreath product", std::to_string(pk),
                std::to_string(pprime));
        bool all_prime = true;
        for (int x = 0; x < r; ++x)
            for (int y = 0; y < p; ++y) {
                WreathLabel l =
                    WreathLabel::diagonal(Partition::hook(r, x), Partition::hook(p, y));
                if (wreath_label_degree(r, p, l) % p == 0) all_prime = false;
            }
        rep.add_check("labels chi(hook,hook) have p'-degree", all_prime);
    }

    // multiplicity matrix: <chi^h restricted, chi(mu,nu)> = delta at the star
    std::set<WreathLabel> images;
    for (int leg = 0; leg < pk; ++leg) {
        Partition h = Partition::hook(pk, leg);
        WreathLabel star = star_map_resolved_by_restriction(h, p);
        images.insert(star);
        for (int x = 0; x < r; ++x)
            for (int y = 0; y < p; ++y) {
                WreathLabel cand =
                    WreathLabel::diagonal(Partition::hook(r, x), Partition::hook(p, y));
                Int expected = (cand == star) ? 1 : 0;
                Int got = restriction_mult(h, r, p, cand);
                rep.add("<" + h.str() + "|" + cand.str() + ">", expected.get_str(),
                        got.get_str());
            }
    }
    rep.add("star image count", std::to_string(pk), std::to_string(images.size()));
    return rep;
}

SuiteReport verify_c3precise(int k) {
    SuiteReport rep{"c3precise", {}};
    const int pk = pow3(k);
    for (int leg = 0; leg < pk; ++leg) {
        Partition h = Partition::hook(pk, leg);
        rep.add("star(" + h.str() + ")", star_map_resolved_by_restriction(h, 3).str(),
                star_map(h, 3).str());
    }
    return rep;
}

SuiteReport verify_hooks23k(int k) {
    SuiteReport rep{"hooks23k", {}};
    const int n3 = pow3(k);
    const Partition involution(std::vector<int>(n3, 2));
    for (int leg = 0; leg < 2 * n3; ++leg) {
        Partition h = Partition::hook(2 * n3, leg);
        WreathLabel phi = hook_constituent_23k(h);
        // unique diagonal constituent, multiplicity one
        for (int x = 0; x < n3; ++x)
            for (const Partition& mu : {Partition::row(2), Partition::column(2)}) {
                WreathLabel cand = WreathLabel::diagonal(Partition::hook(n3, x), mu);
                Int expected = (cand == phi) ? 1 : 0;
                Int got = restriction_mult(h, n3, 2, cand);
                rep.add("<" + h.str() + "|" + cand.str() + ">", expected.get_str(),
                        got.get_str());
            }
        // Murnaghan-Nakayama value at cycle type (2^{3^k})
        int m = leg / 2, x = leg % 2;
        Int expected = binomial(n3 - 1, m) * (((m + x) % 2 == 0) ? 1 : -1);
        rep.add("mn(" + h.str() + ")", expected.get_str(),
                std::to_string(mn_value(h, involution)));
    }
    return rep;
}

SuiteReport verify_sym_bijection(int nmax, int jobs) {
    SuiteReport rep{"symA", {}};
    for (int n = 1; n <= nmax; ++n) {
        auto lams = enumerate_3prime_sn(n);
        auto labels = enumerate_normalizer_labels(n);
        bool ok = lams.size() == labels.size();
        std::vector<SymNormalizerLabel> images(lams.size());
        std::vector<char> roundtrip(lams.size(), 0);
        if (ok)
            parallel_for(static_cast<int>(lams.size()), jobs, [&](int i) {
                images[static_cast<size_t>(i)] = phi(lams[static_cast<size_t>(i)]);
                roundtrip[static_cast<size_t>(i)] =
                    phi_inverse(images[static_cast<size_t>(i)]) == lams[static_cast<size_t>(i)];
            });
        for (char r : roundtrip) ok = ok && r;
        if (ok) {
            std::sort(images.begin(), images.end());
            ok = std::adjacent_find(images.begin(), images.end()) == images.end();
            std::sort(labels.begin(), labels.end());
            ok = ok && images == labels;
        }
        rep.add_check("n=" + std::to_string(n) + " bijective, " + std::to_string(lams.size()) +
                          " labels",
                      ok);
    }
    return rep;
}

SuiteReport verify_sym_constituents() {
    SuiteReport rep{"sym-constituents", {}};
    // all 3-adic digits equal to 1: the composed map is constituent-compatible
    for (int n : {3, 4, 9, 10, 12, 13}) {
        for (const auto& lam : enumerate_3prime_sn(n)) {
            auto mus = star_sequence(lam);
            Int young = iterated_restriction_multiplicity(lam, mus);
            rep.add_check("young stage " + lam.str(), young > 0,
                          "multiplicity " + young.get_str());
            const ThreeAdicExpansion digits = three_adic(n);
            for (size_t i = 0; i < mus.size(); ++i) {
                if (digits.digits[i].exp == 0) continue; // S_1 wr S_1 is trivial
                int unit = pow3(digits.digits[i].exp);
                WreathLabel star = star_map(mus[i], 3);
                Int mult = restriction_mult(mus[i], unit / 3, 3, star);
                rep.add("wreath stage " + lam.str() + " digit " + std::to_string(unit), "1",
                        mult.get_str());
            }
        }
    }
    // hooks-only sequences induce with positive multiplicity for every n <= 13
    for (int n = 1; n <= 13; ++n)
        for (const auto& lam : enumerate_3prime_sn(n)) {
            auto mus = star_sequence(lam);
            bool all_hooks = true;
            for (const auto& mu : mus) all_hooks = all_hooks && mu.is_hook();
            if (!all_hooks) continue;
            Int mult = iterated_restriction_multiplicity(lam, mus);
            rep.add_check("hook sequence " + lam.str(), mult > 0, "multiplicity " + mult.get_str());
        }
    return rep;
}

namespace {

// "sym:N" -> (sym, {N}), "gl:N:Q" -> ...
std::pair<std::string, std::vector<int>> parse_kind(const std::string& kind) {
    size_t colon = kind.find(':');
    std::string name = kind.substr(0, colon);
    std::vector<int> args;
    while (colon != std::string::npos) {
        size_t next = kind.find(':', colon + 1);
        args.push_back(std::stoi(kind.substr(colon + 1, next - colon - 1)));
        colon = next;
    }
    return {name, args};
}

} // namespace

SuiteReport verify_oracle_crosscheck(const std::string& kind, long cap) {
    SuiteReport rep{"oracle-crosscheck", {}};
    auto [name, args] = parse_kind(kind);
    PermGroup g = build_group(kind, cap);
    auto [p, nrm] = sylow3_and_normalizer(g, cap);
    int oracle_g = count_3prime(character_table(g));
    int oracle_n = count_3prime(character_table(nrm));
    rep.add(kind + " |Irr_3'(G)| = |Irr_3'(N)| (oracle)", std::to_string(oracle_g),
            std::to_string(oracle_n));
    if (name == "sym") {
        int n = args.at(0);
        rep.add(kind + " label enumeration", std::to_string(oracle_g),
                std::to_string(enumerate_3prime_sn(n).size()));
        rep.add(kind + " normalizer labels", std::to_string(oracle_g),
                std::to_string(enumerate_normalizer_labels(n).size()));
    } else if (name == "gl" || name == "gu") {
        char eps = (name == "gl") ? '+' : '-';
        int n = args.at(0), q = args.at(1);
        rep.add(kind + " label enumeration", std::to_string(oracle_g),
                std::to_string(enumerate_3prime_labels(eps, q, n).size()));
        rep.add(kind + " normalizer labels", std::to_string(oracle_g),
                count_normalizer_labels(eps, q, n).get_str());
    }
    return rep;
}

SuiteReport verify_mckay_counts(const std::vector<std::string>& kinds, long cap) {
    SuiteReport rep{"mckay-counts", {}};
    for (const auto& kind : kinds) {
        SuiteReport one = verify_oracle_crosscheck(kind, cap);
        for (auto& c : one.cases) rep.cases.push_back(std::move(c));
    }
    return rep;
}

SuiteReport verify_glgu_equivariance(char epsilon, int q, int nmax) {
    SuiteReport rep{"glgu-equivariance", {}};
    const long M = static_cast<long>(q) * q - 1;
    for (int n = 1; n <= nmax; ++n) {
        auto labels = enumerate_3prime_labels(epsilon, q, n);
        std::string base = std::string(1, epsilon) + ",q=" + std::to_string(q) +
                           ",n=" + std::to_string(n);
        bool galois_ok = true, frob_ok = true, tau_ok = true;
        for (const auto& lab : labels) {
            NormalizerImage img = full_bijection(lab);
            for (long u = 1; u < M; ++u) {
                if (std::gcd(u, M) != 1) continue;
                if (!(full_bijection(galois_act(u, lab)) == galois_act(u, img, epsilon, q)))
                    galois_ok = false;
            }
            long p = q;
            for (int d = 2; d * d <= q; ++d)
                if (q % d == 0) {
                    p = d;
                    break;
                }
            if (!(full_bijection(frobenius_act(lab)) == galois_act(p, img, epsilon, q)))
                frob_ok = false;
            if (epsilon == '+' &&
                !(full_bijection(transpose_inverse_act(lab)) == galois_act(-1, img, epsilon, q)))
                tau_ok = false;
        }
        rep.add_check(base + " galois (" + std::to_string(labels.size()) + " labels)", galois_ok);
        rep.add_check(base + " frobenius", frob_ok);
        if (epsilon == '+') rep.add_check(base + " transpose-inverse", tau_ok);
    }
    return rep;
}

SuiteReport verify_glgu_orbits(char epsilon, int q, int nmax) {
    SuiteReport rep{"glgu-orbits", {}};
    for (int n = 1; n <= nmax; ++n) {
        GaloisOrbitReport r = fields_orbits(epsilon, q, n);
        std::string base = std::string(1, epsilon) + ",q=" + std::to_string(q) +
                           ",n=" + std::to_string(n);
        rep.add_check(base + " orbits transported", r.orbits_match);
        rep.add_check(base + " stabilizers transported", r.stabilizers_match);
    }
    return rep;
}

SuiteReport verify_oracle_fields_crosscheck(long cap) {
    SuiteReport rep{"oracle-fields", {}};
    for (const std::string& kind : {std::string("gl:2:2"), std::string("gu:2:2")}) {
        auto [name, args] = parse_kind(kind);
        char eps = (name == "gl") ? '+' : '-';
        int n = args.at(0), q = args.at(1);
        GaloisOrbitReport labels = fields_orbits(eps, q, n);
        std::multiset<size_t> label_sizes;
        for (const auto& orb : labels.label_orbits) label_sizes.insert(orb.size());

        FieldData oracle = fields_of_values(character_table(build_group(kind, cap)));
        std::multiset<size_t> oracle_sizes;
        for (const auto& orb : oracle.orbits) oracle_sizes.insert(orb.size());

        auto str_of = [](const std::multiset<size_t>& s) {
            std::string out;
            for (size_t x : s) out += std::to_string(x) + " ";
            return out;
        };
        rep.add(kind + " galois orbit sizes", str_of(oracle_sizes), str_of(label_sizes));
    }
    return rep;
}

SuiteReport verify_negative_control(long cap) {
    SuiteReport rep{"negative-control", {}};
    PermGroup g = build_group("gl:2:3", cap);
    auto [p, nrm] = sylow3_and_normalizer(g, cap);
    CharacterTable tg = character_table(g);
    CharacterTable tn = character_table(nrm);
    rep.add("|GL_2(3)|", "48", std::to_string(tg.group_order));
    rep.add("counts still agree", std::to_string(count_3prime(tg)),
            std::to_string(count_3prime(tn)));
    long L = std::lcm(tg.exponent, tn.exponent);
    bool differ = stabilizers_mod(tg, L) != stabilizers_mod(tn, L);
    rep.add_check("3'-field multisets differ", differ);
    return rep;
}

SuiteReport verify_properties(unsigned seed) {
    SuiteReport rep{"properties", {}};

    // randomized core/quotient roundtrips up to size 60
    {
        std::mt19937 rng(seed);
        bool ok = true;
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            int n = static_cast<int>(rng() % 61);
            std::vector<int> parts;
            int rem = n, prev = n;
            while (rem > 0) {
                int part = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(rem, prev)));
                parts.push_back(part);
                prev = part;
                rem -= part;
            }
            Partition lam(parts);
            for (int p : {2, 3, 5, 7}) {
                auto [core, quot] = p_core_and_quotient(lam, p);
                if (combine_core_quotient(core, quot, p) != lam) ok = false;
                if (!removable_rim_hooks(core, p).empty()) ok = false;
            }
        }
        rep.add_check("random core/quotient roundtrips, |lambda| <= 60, p in {2,3,5,7}", ok);
    }

    // core tower injectivity at p = 3 for n <= 20
    {
        bool ok = true;
        for (int n = 0; n <= 20 && ok; ++n) {
            std::set<std::string> keys;
            for (const auto& lam : partitions_of(n)) {
                CoreTower t = core_tower(lam, 3);
                std::string key;
                for (const auto& layer : t.layers)
                    for (const auto& c : layer) key += c.str() + "|";
                if (!keys.insert(key).second) ok = false;
            }
        }
        rep.add_check("3-core tower injectivity, n <= 20", ok);
    }

    // Murnaghan-Nakayama orthogonality for n <= 10
    {
        bool ok = true;
        for (int n = 1; n <= 10 && ok; ++n) {
            const auto& parts = partitions_of(n);
            auto table = sn_character_table(n);
            for (size_t a = 0; a < parts.size() && ok; ++a)
                for (size_t b = a; b < parts.size() && ok; ++b) {
                    Int sum = 0;
                    for (size_t c = 0; c < parts.size(); ++c)
                        sum += sn_class_size(parts[c]) * table[a][c] * table[b][c];
                    if (sum != (a == b ? factorial(n) : Int(0))) ok = false;
                }
        }
        rep.add_check("MN orthogonality, n <= 10", ok);
    }

    // Littlewood-Richardson degree-sum identity for |gamma| <= 12
    {
        bool ok = true;
        for (int g = 2; g <= 12 && ok; ++g)
            for (int a = 1; a < g && ok; ++a) {
                int b = g - a;
                if (a > b) continue;
                for (const auto& alpha : partitions_of(a))
                    for (const auto& beta : partitions_of(b)) {
                        Int lhs = 0;
                        for (const auto& gamma : partitions_of(g))
                            lhs += Int(lr_coefficient(alpha, beta, gamma)) * char_degree(gamma);
                        if (lhs != binomial(g, a) * char_degree(alpha) * char_degree(beta))
                            ok = false;
                    }
            }
        rep.add_check("LR degree-sum identity, |gamma| <= 12", ok);
    }

    // Macdonald criterion agrees with the hook length formula for n <= 25
    {
        bool ok = true;
        for (int n = 0; n <= 25 && ok; ++n)
            for (const auto& lam : partitions_of(n))
                for (int p : {2, 3, 5})
                    if (is_pprime_degree(lam, p) != (char_degree(lam) % p != 0)) ok = false;
        rep.add_check("Macdonald vs hook length formula, n <= 25, p in {2,3,5}", ok);
    }

    return rep;
}

} // namespace mckay
