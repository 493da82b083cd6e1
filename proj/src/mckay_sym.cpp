#include "mckay/mckay_sym.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

int pow3(int k) {
    int r = 1;
    while (k-- > 0) r *= 3;
    return r;
}

// Position of the single layer-exp mark in the 3-core tower of
// gamma + (3^exp-hook of the given leg); |gamma| < 3^exp. Shared suffixes in
// the label enumerations hit the same (gamma, exp, leg) constantly; memoized.
int layer_mark_position(const Partition& gamma, int exp, int leg) {
    static std::map<std::tuple<std::vector<int>, int, int>, int> cache;
    static std::mutex mtx;
    std::tuple<std::vector<int>, int, int> key{gamma.parts(), exp, leg};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Partition nu = add_rim_hook(gamma, pow3(exp), leg);
    CoreTower t = core_tower(nu, 3);
    int pos = -1;
    for (size_t s = 0; s < t.layers[exp].size(); ++s)
        if (!t.layers[exp][s].empty()) pos = static_cast<int>(s);
    if (pos < 0) throw std::logic_error("added hook left no layer mark");
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::move(key), pos);
    return pos;
}

} // namespace

std::string SymBlock::str() const {
    switch (kind) {
        case Kind::hook: return "hook:" + h1.str();
        case Kind::C: return "C:(" + h1.str() + "," + mu.str() + ")";
        default: return "D:{" + h1.str() + "," + h2.str() + "}";
    }
}

int SymNormalizerLabel::n() const {
    int total = 0;
    for (const auto& b : blocks) {
        int unit = pow3(b.exp);
        total += (b.kind == SymBlock::Kind::hook) ? unit : 2 * unit;
    }
    return total;
}

std::string SymNormalizerLabel::str() const {
    std::string s = "[";
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ";";
        s += blocks[i].str();
    }
    return s + "]";
}

std::vector<Partition> star_sequence(const Partition& lambda) {
    if (!is_pprime_degree(lambda, 3)) throw not_three_prime();
    std::vector<Partition> mus;
    Partition cur = lambda;
    const ThreeAdicExpansion expansion = three_adic(lambda.size());
    for (auto [a, exp] : expansion.digits) {
        int unit = pow3(exp);
        auto big = removable_rim_hooks(cur, a * unit);
        if (big.size() == 1) {
            mus.push_back(big[0].shape());
            cur = remove_rim_hook(cur, big[0]);
            continue;
        }
        if (a != 2 || !big.empty())
            throw std::logic_error("unexpected hook structure on a 3'-partition");
        auto small = removable_rim_hooks(cur, unit);
        if (small.size() != 2)
            throw std::logic_error("expected exactly two removable hooks");
        std::vector<Partition> shapes;
        Partition after;
        for (const auto& h : small) {
            Partition gamma = remove_rim_hook(cur, h);
            auto rest = removable_rim_hooks(gamma, unit);
            if (rest.size() != 1) throw std::logic_error("expected a unique second hook");
            shapes.push_back(rest[0].shape());
            after = remove_rim_hook(gamma, rest[0]);
        }
        mus.push_back(hook_generated(shapes[0], shapes[1]));
        cur = after;
    }
    if (!cur.empty()) throw std::logic_error("digits did not exhaust the partition");
    return mus;
}

Partition star_sequence_inverse(const std::vector<Partition>& mus, int n) {
    auto digits = three_adic(n).digits;
    if (digits.size() != mus.size()) throw malformed_label("one block per 3-adic digit");
    Partition gamma;
    for (size_t i = digits.size(); i-- > 0;) {
        auto [a, exp] = digits[i];
        int unit = pow3(exp);
        const Partition& mu = mus[i];
        if (mu.size() != a * unit) throw malformed_label("block size must match its digit");
        if (mu.is_hook()) {
            gamma = add_rim_hook(gamma, a * unit, mu.hook_leg());
            continue;
        }
        if (a != 2) throw malformed_label("non-hook block at an a=1 digit");
        auto pair = generating_pair(mu);
        if (!pair) throw malformed_label("block is neither a hook nor hook-generated");
        // place the two layer-exp cores of the tower at the positions the two
        // hook additions would occupy
        CoreTower base = core_tower(gamma, 3);
        CoreTower t;
        t.p = 3;
        size_t width = 1;
        for (int j = 0; j <= exp; ++j) {
            t.layers.emplace_back(width, Partition{});
            width *= 3;
        }
        for (int j = 0; j < base.height() && j < exp; ++j) t.layers[j] = base.layers[j];
        for (const Partition& h : {pair->first, pair->second})
            t.layers[exp].at(layer_mark_position(gamma, exp, h.hook_leg())) = Partition::column(1);
        gamma = partition_from_tower(t);
    }
    return gamma;
}

SymNormalizerLabel phi(const Partition& lambda) {
    auto mus = star_sequence(lambda);
    auto digits = three_adic(lambda.size()).digits;
    SymNormalizerLabel label;
    for (size_t i = 0; i < digits.size(); ++i) {
        SymBlock b;
        b.exp = digits[i].exp;
        if (digits[i].a == 1) {
            b.kind = SymBlock::Kind::hook;
            b.h1 = mus[i];
        } else {
            WreathLabel w = psi_map(mus[i]);
            if (w.kind == WreathLabel::Kind::diagonal) {
                b.kind = SymBlock::Kind::C;
                b.h1 = w.base;
                b.mu = w.top;
            } else {
                b.kind = SymBlock::Kind::D;
                b.h1 = w.pair_first;
                b.h2 = w.pair_second;
            }
        }
        label.blocks.push_back(std::move(b));
    }
    return label;
}

Partition phi_inverse(const SymNormalizerLabel& label) {
    std::vector<Partition> mus;
    int n = 0;
    for (const auto& b : label.blocks) {
        int unit = pow3(b.exp);
        switch (b.kind) {
            case SymBlock::Kind::hook:
                if (!b.h1.is_hook() || b.h1.size() != unit) throw malformed_label();
                mus.push_back(b.h1);
                n += unit;
                break;
            case SymBlock::Kind::C:
                mus.push_back(psi_inverse(WreathLabel::diagonal(b.h1, b.mu), b.exp));
                n += 2 * unit;
                break;
            case SymBlock::Kind::D:
                mus.push_back(hook_generated(b.h1, b.h2));
                n += 2 * unit;
                break;
        }
    }
    return star_sequence_inverse(mus, n);
}

std::vector<Partition> enumerate_3prime_sn(int n) {
    // Macdonald towers: layer weights must equal the 3-adic digits of n.
    std::vector<int> digits;
    for (int m = n; m > 0; m /= 3) digits.push_back(m % 3);
    CoreTower t;
    t.p = 3;
    size_t width = 1;
    for (size_t j = 0; j < digits.size(); ++j) {
        t.layers.emplace_back(width, Partition{});
        width *= 3;
    }
    std::vector<Partition> out;
    std::function<void(size_t)> rec = [&](size_t j) {
        if (j == digits.size()) {
            out.push_back(partition_from_tower(t));
            return;
        }
        auto& layer = t.layers[j];
        const int w = static_cast<int>(layer.size());
        switch (digits[j]) {
            case 0: rec(j + 1); break;
            case 1:
                for (int pos = 0; pos < w; ++pos) {
                    layer[pos] = Partition::column(1);
                    rec(j + 1);
                    layer[pos] = Partition{};
                }
                break;
            default:
                for (int pos = 0; pos < w; ++pos) {
                    for (const Partition& core : {Partition::row(2), Partition::column(2)}) {
                        layer[pos] = core;
                        rec(j + 1);
                    }
                    layer[pos] = Partition{};
                }
                for (int p1 = 0; p1 < w; ++p1)
                    for (int p2 = p1 + 1; p2 < w; ++p2) {
                        layer[p1] = layer[p2] = Partition::column(1);
                        rec(j + 1);
                        layer[p1] = layer[p2] = Partition{};
                    }
                break;
        }
    };
    rec(0);
    return out;
}

std::vector<SymNormalizerLabel> enumerate_normalizer_labels(int n) {
    auto digits = three_adic(n).digits;
    std::vector<SymNormalizerLabel> out;
    SymNormalizerLabel cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == digits.size()) {
            out.push_back(cur);
            return;
        }
        auto [a, exp] = digits[i];
        int unit = pow3(exp);
        if (a == 1) {
            for (int x = 0; x < unit; ++x) {
                SymBlock b;
                b.kind = SymBlock::Kind::hook;
                b.exp = exp;
                b.h1 = Partition::hook(unit, x);
                cur.blocks.push_back(std::move(b));
                rec(i + 1);
                cur.blocks.pop_back();
            }
            return;
        }
        for (int x = 0; x < unit; ++x)
            for (const Partition& mu : {Partition::row(2), Partition::column(2)}) {
                SymBlock b;
                b.kind = SymBlock::Kind::C;
                b.exp = exp;
                b.h1 = Partition::hook(unit, x);
                b.mu = mu;
                cur.blocks.push_back(std::move(b));
                rec(i + 1);
                cur.blocks.pop_back();
            }
        for (int x = 0; x < unit; ++x)
            for (int y = x + 1; y < unit; ++y) {
                SymBlock b;
                b.kind = SymBlock::Kind::D;
                b.exp = exp;
                b.h1 = Partition::hook(unit, x);
                b.h2 = Partition::hook(unit, y);
                if (b.h2 < b.h1) std::swap(b.h1, b.h2);
                cur.blocks.push_back(std::move(b));
                rec(i + 1);
                cur.blocks.pop_back();
            }
    };
    rec(0);
    return out;
}

} // namespace mckay
