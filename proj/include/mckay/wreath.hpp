#pragma once

#include <vector>

#include "mckay/sym_characters.hpp"

namespace mckay {

// Conjugacy class of S_r wr S_m: for each top-cycle length and class of the
// cycle product in S_r, a multiplicity. sum cycle*mult over entries == m.
struct WreathClassPart {
    int cycle = 0;       // length of the top cycle
    Partition base_cls;  // class of the cycle product in S_r
    int mult = 0;
    bool operator==(const WreathClassPart&) const = default;
};

struct WreathClass {
    std::vector<WreathClassPart> parts;
    int top_size() const;
};

std::vector<WreathClass> wreath_classes(int r, int m);
Int wreath_order(int r, int m); // (r!)^m m!
Int wreath_class_size(int r, int m, const WreathClass& cls);

// Cycle type of the class as an element of S_{rm}: a top c-cycle whose cycle
// product has a d-cycle contributes a (c*d)-cycle.
Partition underlying_cycle_type(int r, const WreathClass& cls);
Partition top_cycle_type(const WreathClass& cls);

// Label of an irreducible character of S_r wr S_m of the two kinds the
// bijections use: the canonical extension of lambda^{tensor m} times the
// inflation of chi^mu, or (m = 2 only) the character induced from a pair of
// distinct hooks on the base group.
struct WreathLabel {
    enum class Kind { diagonal, induced_pair };
    Kind kind = Kind::diagonal;
    Partition base; // diagonal: lambda, a partition of r
    Partition top;  // diagonal: mu, a partition of m
    Partition pair_first, pair_second; // induced_pair: sorted, distinct

    static WreathLabel diagonal(Partition lambda, Partition mu);
    static WreathLabel induced_pair(Partition h1, Partition h2);
    bool operator==(const WreathLabel&) const = default;
    auto operator<=>(const WreathLabel&) const = default;
    std::string str() const;
};

// Value at cls of the canonical extension of chi^{tensor m}, chi = chi^lambda
// in Irr(S_r): the product over top cycles of chi at the class of the cycle
// product. This is the extension realized by permuting tensor factors; its
// trace at a transposition is deg(chi)^{m-1} > 0.
long canonical_extension_value(const Partition& lambda, int m, const WreathClass& cls);

long wreath_char_value(int r, int m, const WreathLabel& label, const WreathClass& cls);
Int wreath_label_degree(int r, int m, const WreathLabel& label);

// <chi^rho restricted to S_r wr S_m, label>, exact.
Int restriction_mult(const Partition& rho, int r, int m, const WreathLabel& label);

// Degrees of all irreducible characters of S_r wr S_m (multipartition model),
// for p-divisibility sweeps.
std::vector<Int> wreath_all_degrees(int r, int m);

// The unique p'-constituent of chi^h restricted from S_{p^k} to
// S_{p^{k-1}} wr S_p. For p = 3 the top part follows the parity table; for
// general odd p it is resolved by computing both candidate multiplicities.
WreathLabel star_map(const Partition& h, int p);
WreathLabel star_map_resolved_by_restriction(const Partition& h, int p);

// The canonical bijection Irr_{3'}(S_{2*3^k}) -> C u D at label level, and
// its inverse.
WreathLabel psi_map(const Partition& lambda);
Partition psi_inverse(const WreathLabel& label, int k);

// The unique constituent of chi^h, h a hook of 2*3^k, restricted to
// S_{3^k} wr S_2 that has diagonal kind: chi((3^k - m, 1^m), mu) with
// mu = (2) for m + x even and (1,1) for m + x odd, where leg(h) = 2m + x.
WreathLabel hook_constituent_23k(const Partition& h);

} // namespace mckay
