#include "mckay/sym_characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mckay/errors.hpp"

namespace mckay {

Int sn_class_size(const CycleType& type) {
    Int z = 1;
    int run = 0, prev = 0;
    for (int i = type.length(); i >= 1; --i) {
        int part = type.part(i);
        if (part == prev) {
            ++run;
        } else {
            prev = part;
            run = 1;
        }
        z *= part * run;
    }
    return factorial(type.size()) / z;
}

namespace {

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

long mn_rec(const Partition& lambda, const std::vector<int>& cycles, size_t at,
                 std::map<MnKey, long>& cache, std::mutex& mtx) {
    if (lambda.empty()) return 1;
    MnKey key{lambda.parts(), std::vector<int>(cycles.begin() + at, cycles.end())};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    long total = 0;
    for (const RimHook& h : removable_rim_hooks(lambda, cycles[at])) {
        long sub = mn_rec(remove_rim_hook(lambda, h), cycles, at + 1, cache, mtx);
        total += (h.leg % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::move(key), total);
    return total;
}

} // namespace

long mn_value(const Partition& lambda, const CycleType& sigma) {
    if (lambda.size() != sigma.size()) throw size_mismatch("|lambda| != |sigma|");
    static std::map<MnKey, long> cache;
    static std::mutex mtx;
    return mn_rec(lambda, sigma.parts(), 0, cache, mtx);
}

namespace {

struct SkewCell {
    int row;
    int col;
};

// Cells of [gamma \ alpha] in reading order: rows top to bottom, right to
// left within a row, matching the reverse lattice word condition.
std::vector<SkewCell> skew_reading_order(const Partition& alpha, const Partition& gamma) {
    std::vector<SkewCell> cells;
    for (int r = 1; r <= gamma.length(); ++r)
        for (int c = gamma.part(r); c > alpha.part(r); --c) cells.push_back({r, c});
    return cells;
}

void lr_search(const Partition& alpha, const Partition& beta, const Partition& gamma,
               const std::vector<SkewCell>& cells, size_t at, std::vector<int>& values,
               std::vector<int>& counts, std::map<std::pair<int, int>, int>& placed,
               const std::function<void(const std::vector<int>&)>& emit) {
    if (at == cells.size()) {
        emit(values);
        return;
    }
    auto [r, c] = cells[at];
    int hi = beta.length();
    // weakly increasing along rows: bounded by the right neighbour
    if (auto it = placed.find({r, c + 1}); it != placed.end()) hi = std::min(hi, it->second);
    int lo = 1;
    // strictly increasing down columns
    if (auto it = placed.find({r - 1, c}); it != placed.end()) lo = std::max(lo, it->second + 1);
    for (int v = lo; v <= hi; ++v) {
        if (counts[v] >= beta.part(v)) continue;                 // content bound
        if (v > 1 && counts[v] >= counts[v - 1]) continue;       // reverse lattice word
        counts[v] += 1;
        values.push_back(v);
        placed[{r, c}] = v;
        lr_search(alpha, beta, gamma, cells, at + 1, values, counts, placed, emit);
        placed.erase({r, c});
        values.pop_back();
        counts[v] -= 1;
    }
}

void for_each_lr_filling(const Partition& alpha, const Partition& beta, const Partition& gamma,
                         const std::function<void(const std::vector<int>&)>& emit) {
    if (!gamma.contains(alpha)) return;
    if (alpha.size() + beta.size() != gamma.size()) return;
    auto cells = skew_reading_order(alpha, gamma);
    std::vector<int> values;
    std::vector<int> counts(static_cast<size_t>(beta.length()) + 1, 0);
    std::map<std::pair<int, int>, int> placed;
    lr_search(alpha, beta, gamma, cells, 0, values, counts, placed, emit);
}

} // namespace

long lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    long count = 0;
    for_each_lr_filling(alpha, beta, gamma, [&](const std::vector<int>&) { ++count; });
    return count;
}

std::vector<LRWitness> lr_witnesses(const Partition& alpha, const Partition& beta,
                                    const Partition& gamma) {
    std::vector<LRWitness> out;
    auto cells = skew_reading_order(alpha, gamma);
    for_each_lr_filling(alpha, beta, gamma, [&](const std::vector<int>& values) {
        LRWitness w;
        w.filling.assign(gamma.length(), {});
        for (size_t i = 0; i < cells.size(); ++i)
            w.filling[cells[i].row - 1].push_back(values[i]);
        for (auto& row : w.filling) std::reverse(row.begin(), row.end());
        out.push_back(std::move(w));
    });
    return out;
}

Int iterated_restriction_multiplicity(const Partition& rho, const std::vector<Partition>& mus) {
    if (mus.empty()) throw size_mismatch("need at least one factor");
    int total = 0;
    for (const auto& mu : mus) total += mu.size();
    if (total != rho.size()) throw size_mismatch("sum |mu_i| != |rho|");

    std::map<Partition, Int> chain = {{mus[0], Int(1)}};
    int size_so_far = mus[0].size();
    for (size_t j = 1; j < mus.size(); ++j) {
        size_so_far += mus[j].size();
        std::map<Partition, Int> next;
        auto layer = (size_so_far == rho.size()) ? std::vector<Partition>{rho}
                                                 : partitions_of_bounded(size_so_far, rho);
        for (const auto& [lam, coeff] : chain) {
            for (const auto& lam2 : layer) {
                if (!lam2.contains(lam)) continue;
                long c = static_cast<long>(lr_coefficient(lam, mus[j], lam2));
                if (c != 0) next[lam2] += coeff * c;
            }
        }
        chain = std::move(next);
    }
    auto it = chain.find(rho);
    return it == chain.end() ? Int(0) : it->second;
}

std::pair<Partition, Int> diagonal_power_multiplicity(int k, int p, int j) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (k < 1) throw std::invalid_argument("k must be positive");
    int pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    if (j < 0 || j >= pk) throw std::invalid_argument("j out of range");
    int m = j / p, x = j % p;
    return {Partition::hook(pk / p, m), binomial(p - 1, x)};
}

Int diagonal_power_multiplicity_checked(int k, int p, int j, const Partition& mu) {
    int pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    Partition hj = Partition::hook(pk, j);
    return iterated_restriction_multiplicity(hj, std::vector<Partition>(p, mu));
}

Rat sn_inner_product(const std::vector<Int>& f, const std::vector<Int>& g, int n) {
    const auto& types = partitions_of(n);
    if (f.size() != types.size() || g.size() != types.size())
        throw index_mismatch("tables must be indexed by all cycle types of n");
    Int sum = 0;
    for (size_t i = 0; i < types.size(); ++i) sum += sn_class_size(types[i]) * f[i] * g[i];
    Rat r(sum, factorial(n));
    r.canonicalize();
    return r;
}

std::vector<std::vector<long>> sn_character_table(int n) {
    const auto& parts = partitions_of(n);
    std::vector<std::vector<long>> table(parts.size(), std::vector<long>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = 0; j < parts.size(); ++j) table[i][j] = mn_value(parts[i], parts[j]);
    return table;
}

} // namespace mckay
