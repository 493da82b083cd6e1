#include "mckay/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mckay/errors.hpp"

namespace mckay {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::hook(int n, int leg) {
    if (n == 0 && leg == 0) return Partition{};
    if (n < 1 || leg < 0 || leg >= n) throw std::invalid_argument("bad hook parameters");
    std::vector<int> parts(static_cast<size_t>(leg) + 1, 1);
    parts[0] = n - leg;
    return Partition(std::move(parts));
}

Partition Partition::row(int n) { return n == 0 ? Partition{} : hook(n, 0); }
Partition Partition::column(int n) { return n == 0 ? Partition{} : hook(n, n - 1); }

int Partition::col_length(int c) const {
    int count = 0;
    for (int p : parts_) {
        if (p >= c) ++count;
        else break;
    }
    return count;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    for (int c = 1; c <= part(1); ++c) cols.push_back(col_length(c));
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

bool Partition::is_hook() const {
    return empty() || (length() == 1) || (part(2) == 1);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

int CoreTower::layer_weight(int j) const {
    if (j < 0 || j >= height()) return 0;
    int w = 0;
    for (const Partition& c : layers[j]) w += c.size();
    return w;
}

std::vector<int> beta_set(const Partition& lambda, int beads) {
    if (beads < lambda.length()) throw std::invalid_argument("bead count below partition length");
    std::vector<int> beta(beads);
    for (int i = 1; i <= beads; ++i) beta[i - 1] = lambda.part(i) + beads - i;
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int beads = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 1; i <= beads; ++i) {
        int p = beta[i - 1] - (beads - i);
        if (p < 0) throw std::invalid_argument("beta set with repeated entries");
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

Int char_degree(const Partition& lambda) {
    Int deg = factorial(lambda.size());
    const Partition conj = lambda.conjugate();
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c) {
            int hook = lambda.part(r) - c + conj.part(c) - r + 1;
            deg /= hook;
        }
    return deg;
}

std::vector<RimHook> removable_rim_hooks(const Partition& lambda, int e) {
    if (e < 1) throw std::invalid_argument("hook size must be positive");
    std::vector<RimHook> hooks;
    const int beads = lambda.length();
    std::vector<int> beta = beta_set(lambda, beads);
    std::set<int> members(beta.begin(), beta.end());
    for (int i = 0; i < beads; ++i) {
        int b = beta[i];
        if (b < e || members.count(b - e)) continue;
        int leg = 0;
        for (int x : beta)
            if (x > b - e && x < b) ++leg;
        RimHook h;
        h.row = i + 1;
        h.size = e;
        h.leg = leg;
        // the hook ends in row r+leg; its anchor column is one past what
        // survives of that row after removal
        std::vector<int> nb = beta;
        nb[i] = b - e;
        Partition removed = partition_from_beta(std::move(nb));
        h.col = removed.part(h.row + leg) + 1;
        hooks.push_back(h);
    }
    return hooks;
}

Partition remove_rim_hook(const Partition& lambda, const RimHook& h) {
    const int beads = lambda.length();
    std::vector<int> beta = beta_set(lambda, beads);
    if (h.row < 1 || h.row > beads) throw std::invalid_argument("hook row out of range");
    int b = beta[h.row - 1];
    if (b < h.size) throw std::invalid_argument("hook does not fit");
    for (int x : beta)
        if (x == b - h.size) throw std::invalid_argument("not a removable hook");
    beta[h.row - 1] = b - h.size;
    return partition_from_beta(std::move(beta));
}

Partition add_rim_hook(const Partition& lambda, int e, int leg) {
    if (e < 1) throw std::invalid_argument("hook size must be positive");
    if (leg < 0 || leg >= e) throw no_such_addable_hook();
    const int beads = lambda.length() + e;
    std::vector<int> beta = beta_set(lambda, beads);
    std::set<int> members(beta.begin(), beta.end());
    std::vector<Partition> results;
    for (int i = 0; i < beads; ++i) {
        int b = beta[i];
        if (members.count(b + e)) continue;
        int between = 0;
        for (int x : beta)
            if (x > b && x < b + e) ++between;
        if (between != leg) continue;
        std::vector<int> nb = beta;
        nb[i] = b + e;
        results.push_back(partition_from_beta(std::move(nb)));
    }
    if (results.empty()) throw no_such_addable_hook();
    std::sort(results.begin(), results.end());
    results.erase(std::unique(results.begin(), results.end()), results.end());
    if (results.size() > 1)
        throw std::logic_error("ambiguous addable hook; caller must guarantee e > |lambda|");
    return results.front();
}

namespace {

int bead_count_for(const Partition& lambda, int p) {
    int L = lambda.length();
    return (L % p == 0) ? L : L + (p - L % p);
}

// runner -> descending bead positions, from a beta set with `beads` beads.
std::vector<std::vector<int>> runner_positions(const std::vector<int>& beta, int p) {
    std::vector<std::vector<int>> runners(p);
    for (int b : beta) runners[b % p].push_back((b - b % p) / p);
    for (auto& r : runners) std::sort(r.begin(), r.end(), std::greater<int>());
    return runners;
}

Partition partition_from_positions(const std::vector<int>& desc_positions) {
    std::vector<int> parts;
    const int cnt = static_cast<int>(desc_positions.size());
    for (int j = 1; j <= cnt; ++j) {
        int part = desc_positions[j - 1] - (cnt - j);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

} // namespace

std::pair<Partition, std::vector<Partition>> p_core_and_quotient(const Partition& lambda, int p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    const int beads = bead_count_for(lambda, p);
    std::vector<int> beta = beta_set(lambda, beads);
    auto runners = runner_positions(beta, p);

    std::vector<Partition> quotient(p);
    std::vector<int> core_beta;
    for (int r = 0; r < p; ++r) {
        quotient[r] = partition_from_positions(runners[r]);
        // push the beads down the runner to read off the core
        const int cnt = static_cast<int>(runners[r].size());
        for (int j = 0; j < cnt; ++j) core_beta.push_back(r + p * j);
    }
    Partition core = partition_from_beta(std::move(core_beta));
    return {std::move(core), std::move(quotient)};
}

Partition combine_core_quotient(const Partition& core, const std::vector<Partition>& quotient, int p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    if (static_cast<int>(quotient.size()) != p)
        throw std::invalid_argument("quotient must have exactly p components");
    if (!removable_rim_hooks(core, p).empty()) throw invalid_core();

    int beads = bead_count_for(core, p);
    for (;;) {
        std::vector<int> beta = beta_set(core, beads);
        auto runners = runner_positions(beta, p);
        bool enough = true;
        for (int r = 0; r < p; ++r)
            if (static_cast<int>(runners[r].size()) < quotient[r].length()) enough = false;
        if (enough) {
            std::vector<int> out;
            for (int r = 0; r < p; ++r) {
                const int cnt = static_cast<int>(runners[r].size());
                for (int j = 1; j <= cnt; ++j)
                    out.push_back(r + p * (quotient[r].part(j) + cnt - j));
            }
            return partition_from_beta(std::move(out));
        }
        beads += p;
    }
}

CoreTower core_tower(const Partition& lambda, int p) {
    CoreTower t;
    t.p = p;
    auto [core, quotient] = p_core_and_quotient(lambda, p);
    t.layers.push_back({core});
    if (lambda.size() == core.size()) {
        bool all_empty = true;
        for (const auto& q : quotient) all_empty = all_empty && q.empty();
        if (all_empty) return t;
    }
    std::vector<CoreTower> sub;
    int sub_height = 0;
    for (int r = 0; r < p; ++r) {
        sub.push_back(core_tower(quotient[r], p));
        sub_height = std::max(sub_height, sub.back().height());
    }
    for (int j = 0; j < sub_height; ++j) {
        std::vector<Partition> layer;
        size_t expected = 1;
        for (int jj = 0; jj < j; ++jj) expected *= p;
        for (int r = 0; r < p; ++r) {
            if (j < sub[r].height()) {
                const auto& l = sub[r].layers[j];
                layer.insert(layer.end(), l.begin(), l.end());
                for (size_t pad = l.size(); pad < expected; ++pad) layer.emplace_back();
            } else {
                for (size_t pad = 0; pad < expected; ++pad) layer.emplace_back();
            }
        }
        t.layers.push_back(std::move(layer));
    }
    return t;
}

Partition partition_from_tower(const CoreTower& tower) {
    const int p = tower.p;
    if (tower.height() == 0) return {};
    const Partition& core = tower.layers[0].at(0);
    if (tower.height() == 1) return core;
    std::vector<Partition> quotient(p);
    for (int r = 0; r < p; ++r) {
        CoreTower sub;
        sub.p = p;
        size_t width = 1;
        for (int j = 1; j < tower.height(); ++j) {
            const auto& layer = tower.layers[j];
            std::vector<Partition> slice;
            for (size_t i = 0; i < width; ++i) {
                size_t idx = static_cast<size_t>(r) * width + i;
                slice.push_back(idx < layer.size() ? layer[idx] : Partition{});
            }
            sub.layers.push_back(std::move(slice));
            width *= p;
        }
        quotient[r] = partition_from_tower(sub);
    }
    return combine_core_quotient(core, quotient, p);
}

bool is_pprime_degree(const Partition& lambda, int p) {
    CoreTower t = core_tower(lambda, p);
    int n = lambda.size();
    int j = 0;
    while (n > 0 || j < t.height()) {
        if (t.layer_weight(j) != n % p) return false;
        n /= p;
        ++j;
    }
    return true;
}

namespace {
int pow3(int k) {
    int r = 1;
    while (k-- > 0) r *= 3;
    return r;
}
} // namespace

int tower_hook_position(const Partition& h, int k) {
    if (!h.is_hook() || h.size() != pow3(k)) throw not_hooks();
    CoreTower t = core_tower(h, 3);
    if (t.height() != k + 1) throw not_hooks();
    int pos = -1;
    for (size_t i = 0; i < t.layers[k].size(); ++i) {
        if (t.layers[k][i].empty()) continue;
        if (pos >= 0 || t.layers[k][i] != Partition::column(1)) throw not_hooks();
        pos = static_cast<int>(i);
    }
    if (pos < 0) throw not_hooks();
    return pos;
}

Partition hook_from_tower_position(int k, int pos) {
    CoreTower t;
    t.p = 3;
    t.layers.assign(static_cast<size_t>(k) + 1, {});
    size_t width = 1;
    for (int j = 0; j <= k; ++j) {
        t.layers[j].assign(width, Partition{});
        width *= 3;
    }
    t.layers[k].at(pos) = Partition::column(1);
    return partition_from_tower(t);
}

Partition hook_generated(const Partition& h1, const Partition& h2) {
    if (h1 == h2) throw equal_hooks();
    if (h1.size() != h2.size()) throw not_hooks();
    int k = 0;
    while (pow3(k) < h1.size()) ++k;
    if (pow3(k) != h1.size() || h1.size() == 0) throw not_hooks();
    // the same pairs recur constantly in the composed bijections; memoize
    static std::map<std::tuple<int, int, int>, Partition> cache;
    static std::mutex mtx;
    std::tuple<int, int, int> key{k, std::min(h1.hook_leg(), h2.hook_leg()),
                                  std::max(h1.hook_leg(), h2.hook_leg())};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    if (!h1.is_hook() || !h2.is_hook()) throw not_hooks();
    int x1 = tower_hook_position(h1, k);
    int x2 = tower_hook_position(h2, k);
    CoreTower t;
    t.p = 3;
    size_t width = 1;
    for (int j = 0; j <= k; ++j) {
        t.layers.emplace_back(width, Partition{});
        width *= 3;
    }
    t.layers[k].at(x1) = Partition::column(1);
    t.layers[k].at(x2) = Partition::column(1);
    Partition result = partition_from_tower(t);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(result)).first->second;
}

std::optional<std::pair<Partition, Partition>> generating_pair(const Partition& lambda) {
    int k = 0;
    while (2 * pow3(k) < lambda.size()) ++k;
    if (2 * pow3(k) != lambda.size() || lambda.empty())
        throw std::invalid_argument("size must be 2*3^k");
    static std::map<Partition, std::optional<std::pair<Partition, Partition>>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    std::optional<std::pair<Partition, Partition>> result;
    CoreTower t = core_tower(lambda, 3);
    std::vector<int> positions;
    bool good = true;
    for (int j = 0; j < t.height() && good; ++j) {
        for (size_t i = 0; i < t.layers[j].size(); ++i) {
            const Partition& c = t.layers[j][i];
            if (c.empty()) continue;
            if (j != k || c != Partition::column(1)) {
                good = false;
                break;
            }
            positions.push_back(static_cast<int>(i));
        }
    }
    if (good && positions.size() == 2) {
        Partition a = hook_from_tower_position(k, positions[0]);
        Partition b = hook_from_tower_position(k, positions[1]);
        if (b < a) std::swap(a, b);
        result = std::make_pair(std::move(a), std::move(b));
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(lambda, std::move(result)).first->second;
}

ThreeAdicExpansion three_adic(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    ThreeAdicExpansion e;
    for (int exp = 0; n > 0; ++exp, n /= 3)
        if (int a = n % 3; a != 0)
            e.digits.push_back({a, exp});
    std::reverse(e.digits.begin(), e.digits.end());
    return e;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& stack, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        stack.push_back(p);
        gen_partitions(n - p, p, stack, out);
        stack.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(n, n == 0 ? 1 : n, stack, out);
    return cache.emplace(n, std::move(out)).first->second;
}

namespace {

void gen_bounded(int n, int row, const Partition& bound, int prev, std::vector<int>& stack,
                 std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(stack));
        return;
    }
    if (row > bound.length()) return;
    int hi = std::min({n, prev, bound.part(row)});
    for (int p = hi; p >= 1; --p) {
        stack.push_back(p);
        gen_bounded(n - p, row + 1, bound, p, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of_bounded(int n, const Partition& bound) {
    std::vector<Partition> out;
    if (n > bound.size()) return out;
    std::vector<int> stack;
    gen_bounded(n, 1, bound, n == 0 ? 1 : n, stack, out);
    return out;
}

} // namespace mckay
