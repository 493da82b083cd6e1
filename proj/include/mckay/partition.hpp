#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/ints.hpp"

namespace mckay {

// A partition in canonical trimmed form: weakly decreasing positive parts,
// no trailing zeros. The empty partition is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // The hook partition (n - leg, 1^leg) of n; requires 0 <= leg < n for
    // n >= 1, and yields the empty partition for n == 0.
    static Partition hook(int n, int leg);
    static Partition row(int n);    // (n)
    static Partition column(int n); // (1^n)

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row access; rows beyond the length read as 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    // 1-based column length lambda'_c.
    int col_length(int c) const;
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;
    bool is_hook() const;
    // Leg length of a hook partition: number of parts below the first row.
    int hook_leg() const { return empty() ? 0 : length() - 1; }

    std::string str() const; // "[4,3,1]", "[]" for the empty partition

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// A removable (or freshly added) rim hook of a host partition, recorded by
// its anchor cell (1-based), size, and leg length. arm + leg + 1 == size.
struct RimHook {
    int row = 0;
    int col = 0;
    int size = 0;
    int leg = 0;
    int arm() const { return size - leg - 1; }
    // The hook partition (size - leg, 1^leg) describing the hook's shape.
    Partition shape() const { return Partition::hook(size, leg); }
};

// Layered family of p-cores T_j(lambda); layer j holds exactly p^j cores and
// sum_j |T_j| p^j = |lambda|. The tower determines the partition uniquely.
struct CoreTower {
    int p = 0;
    std::vector<std::vector<Partition>> layers;

    int height() const { return static_cast<int>(layers.size()); }
    int layer_weight(int j) const;
};

// 3-adic expansion n = sum a_k 3^{n_k} with a_k in {1,2}, exponents strictly
// decreasing.
struct ThreeAdicExpansion {
    struct Digit {
        int a = 0;   // 1 or 2
        int exp = 0; // n_k
        bool operator==(const Digit&) const = default;
    };
    std::vector<Digit> digits; // decreasing exponents
    bool operator==(const ThreeAdicExpansion&) const = default;
};

// --- beta sets -------------------------------------------------------------

// First-column hook lengths of lambda padded to `beads` entries (so the last
// entries run ..., 1, 0); strictly decreasing. Requires beads >= length.
std::vector<int> beta_set(const Partition& lambda, int beads);
Partition partition_from_beta(std::vector<int> beta);

// --- core operations --------------------------------------------------------

Partition conjugate(const Partition& lambda);

// n! / prod(hook lengths); exact.
Int char_degree(const Partition& lambda);

// All removable rim hooks of the given size, ordered by anchor row.
std::vector<RimHook> removable_rim_hooks(const Partition& lambda, int e);
Partition remove_rim_hook(const Partition& lambda, const RimHook& h);

// The unique partition of |lambda| + e obtained by adding an e-rim-hook of
// the given leg length; throws no_such_addable_hook when none exists. If the
// choice is ambiguous (possible only when e <= |lambda|) a logic_error is
// raised; all callers in this library add hooks with e > |lambda|, where the
// result is unique for every leg in [0, e).
Partition add_rim_hook(const Partition& lambda, int e, int leg);

// Abacus convention used throughout: James' abacus with bead count the least
// multiple of p that is >= length(lambda), first-gap justified; the quotient
// component of runner r (residue r mod p) sits at index r. Every
// 2-quotient-dependent map downstream relies on this one convention.
std::pair<Partition, std::vector<Partition>> p_core_and_quotient(const Partition& lambda, int p);

// Inverse of p_core_and_quotient under the fixed convention; throws
// invalid_core if `core` has a removable p-hook.
Partition combine_core_quotient(const Partition& core, const std::vector<Partition>& quotient, int p);

CoreTower core_tower(const Partition& lambda, int p);
Partition partition_from_tower(const CoreTower& tower);

// Macdonald criterion: layer weights of the p-core tower equal the base-p
// digits of |lambda|.
bool is_pprime_degree(const Partition& lambda, int p);

// Position (0-based, within layer k of the 3-core tower) of the single box
// of a hook partition of 3^k, and its inverse.
int tower_hook_position(const Partition& h, int k);
Partition hook_from_tower_position(int k, int pos);

// The unique partition of 2*3^k whose 3-core tower carries (1) exactly at
// the two layer-k positions determined by the distinct hooks h1, h2 of 3^k.
Partition hook_generated(const Partition& h1, const Partition& h2);

// Inverse of hook_generated; empty when lambda (of size 2*3^k) is not
// hook-generated. The pair is returned sorted.
std::optional<std::pair<Partition, Partition>> generating_pair(const Partition& lambda);

ThreeAdicExpansion three_adic(int n);

// --- enumeration -----------------------------------------------------------

// All partitions of n, largest-first lexicographic order, (n) first and
// (1^n) last; memoized.
const std::vector<Partition>& partitions_of(int n);

// Partitions of n contained in bound (row-wise).
std::vector<Partition> partitions_of_bounded(int n, const Partition& bound);

} // namespace mckay
