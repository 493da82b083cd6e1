#pragma once

#include <map>
#include <string>
#include <vector>

#include "mckay/cyclotomic.hpp"
#include "mckay/partition.hpp"

namespace mckay {

using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_mul(const Perm& a, const Perm& b); // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);
int perm_order(const Perm& a);
Partition perm_type(const Perm& a);

// A concrete group: the full element list of a permutation group on at most
// a few hundred points, with an index for constant-time multiplication. The
// order is bounded by the configured cap (default 20000, overridable through
// MCKAY_ORACLE_CAP).
class PermGroup {
public:
    static PermGroup closure(int degree, std::vector<Perm> gens, long cap);
    static PermGroup from_elements(int degree, std::vector<Perm> elems, long cap);

    int degree() const { return degree_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const Perm& element(int i) const { return elements_[static_cast<size_t>(i)]; }
    const std::vector<Perm>& generators() const { return gens_; }
    int index_of(const Perm& p) const;
    int mul(int a, int b) const;
    int inv(int a) const;

private:
    int degree_ = 1;
    std::vector<Perm> elements_; // sorted; index 0 is the identity
    std::vector<Perm> gens_;
    std::map<Perm, int> index_;
};

long default_oracle_cap(); // MCKAY_ORACLE_CAP or 20000

struct Classes {
    std::vector<int> of;    // element index -> class index
    std::vector<int> reps;  // minimal element index per class
    std::vector<long> sizes;
    int count = 0;
};
Classes conjugacy_classes(const PermGroup& g);

// Sylow 3-subgroup by deterministic normalizer growth, and its normalizer.
std::pair<PermGroup, PermGroup> sylow3_and_normalizer(const PermGroup& g, long cap);

struct CharacterTable {
    long group_order = 0;
    long exponent = 1;
    std::vector<long> class_sizes;
    std::vector<int> class_orders;          // orders of class representatives
    std::vector<Partition> class_types;     // cycle types of class representatives
    std::vector<long> degrees;              // sorted ascending with the rows
    std::vector<std::vector<Cyclotomic>> rows;
    int class_count() const { return static_cast<int>(class_sizes.size()); }
};

// Exact character table via class-sum eigenvectors over a prime l = 1 mod
// exp(G), l > 2 sqrt(|G|), lifted to cyclotomic integers.
CharacterTable character_table(const PermGroup& g);

int count_3prime(const CharacterTable& t);

struct FieldData {
    std::vector<long> units;                    // (Z/E)^x
    std::vector<int> row_indices;               // the 3'-rows, ascending
    std::vector<std::vector<long>> stabilizers; // per 3'-row, subgroup of units
    std::vector<std::vector<int>> orbits;       // Galois orbit partition of the 3'-rows
};
FieldData fields_of_values(const CharacterTable& t);

// Stabilizers of the 3'-rows lifted to (Z/L)^x for cross-group comparison;
// requires exponent | L.
std::vector<std::vector<long>> stabilizers_mod(const CharacterTable& t, long L);

// kinds: "sym:N", "symnorm:N", "gl:N:Q", "gu:N:Q".
PermGroup build_group(const std::string& kind, long cap);

// Small finite field F_q, q = p^k, elements encoded 0..q-1.
class FiniteField {
public:
    explicit FiniteField(int q);
    int q() const { return q_; }
    int characteristic() const { return p_; }
    int add(int a, int b) const { return add_[static_cast<size_t>(a) * q_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * q_ + b]; }
    int neg(int a) const;
    int pow(int a, long e) const;
    int inv(int a) const;

private:
    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> add_, mul_;
};

} // namespace mckay
