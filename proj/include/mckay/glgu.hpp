#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay/partition.hpp"

namespace mckay {

// Frobenius orbit of a semisimple eigenvalue, canonicalized to its minimal
// exponent. For epsilon '+' the orbit of rep under multiplication by q
// modulo q^d - 1 has size exactly d. For epsilon '-' only the degrees
// dividing 2 are modeled (all that the 3'-theory uses): d = 1 means
// s^{q+1} = 1 with rep taken modulo q + 1; d = 2 means s in F_{q^2} with
// s^{q+1} != 1, rep modulo q^2 - 1, orbit {rep, -q rep}.
struct SemisimpleOrbit {
    char epsilon = '+';
    int q = 0;
    int d = 1;
    long rep = 0;

    long modulus() const;
    auto key() const { return std::pair<int, long>(d, rep); }
    bool operator==(const SemisimpleOrbit&) const = default;
    bool operator<(const SemisimpleOrbit& o) const { return key() < o.key(); }
    std::string str() const;
};

SemisimpleOrbit make_orbit(char epsilon, int q, int d, long rep);

struct GLGUPair {
    SemisimpleOrbit s;
    Partition lambda;
    bool operator==(const GLGUPair&) const = default;
};

// Dipper-James style label: a multiset of (orbit, partition) pairs with
// pairwise distinct orbits; n = sum |lambda_i| * d_i.
struct GLGULabel {
    char epsilon = '+';
    int q = 0;
    std::vector<GLGUPair> pairs; // sorted by orbit key
    int n() const;
    void canonicalize();
    bool operator==(const GLGULabel&) const = default;
    bool operator<(const GLGULabel& o) const;
    std::string str() const;
};

// Multiplicative order of (epsilon q) modulo 3; throws on 3 | q.
int order_mod3(char epsilon, int q);

bool is_3prime_label(const GLGULabel& label);
std::vector<GLGULabel> enumerate_3prime_labels(char epsilon, int q, int n);

// Label of an irreducible 3'-character of K, the base group of the wreath
// product H containing the Sylow normalizer: for 3 | (q - eps), K = G_1^eps
// is cyclic of order q - eps (kind linear, g modulo q - eps). For
// 3 | (q + eps), K = GL_1(q^2) x| C_2: either g in G_1^eps with a partition
// of 2 recording the extension (kind omega1), or a 2-orbit {g, g^{eps q}} in
// F_{q^2} (kind omega2, canonical rep).
struct KChar {
    enum class Kind { linear, omega1, omega2 };
    Kind kind = Kind::linear;
    long g = 0;
    int nu = 0; // omega1 only: 0 = (2), 1 = (1,1)

    int degree() const { return kind == Kind::omega2 ? 2 : 1; }
    auto key() const { return std::tuple<int, long, int>(degree(), g, nu); }
    bool operator==(const KChar&) const = default;
    bool operator<(const KChar& o) const { return key() < o.key(); }
    std::string str() const;
};

// Label of an irreducible 3'-character of H = K wr S_m: pairwise distinct
// K-labels sigma_i with 3'-partitions lambda_i of k_i, 3'-multinomial.
struct HLabel {
    char epsilon = '+';
    int q = 0;
    int e = 1;
    struct Entry {
        KChar sigma;
        Partition lambda;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries; // sorted by sigma
    int m() const;
    bool operator==(const HLabel&) const = default;
    std::string str() const;
};

// One block per 3-adic digit a*3^exp of m: a1 when the digit is covered by a
// single sigma with b = a = 1; d2 when b = a = 2; d1 when two sigmas
// contribute one 3^exp piece each (tau1 > tau2, hooks aligned with them).
struct LocalBlock {
    enum class Kind { a1, d1, d2 };
    Kind kind = Kind::a1;
    int exp = 0;
    KChar tau1, tau2;
    Partition p1, p2;
    bool operator==(const LocalBlock&) const = default;
    std::string str() const;
};

struct LocalLabel {
    char epsilon = '+';
    int q = 0;
    int e = 1;
    std::vector<LocalBlock> blocks; // decreasing exponents
    bool operator==(const LocalLabel&) const = default;
    std::string str() const;
};

// Image of the full bijection: an Irr(G_1^eps) coordinate when n is odd and
// 3 | (q + eps), plus the local label.
struct NormalizerImage {
    std::optional<long> linear; // exponent modulo q - eps
    LocalLabel local;
    bool operator==(const NormalizerImage&) const = default;
    std::string str() const;
};

// Global bijection Irr_{3'}(G) -> Irr_{3'}(H). Identity transport of pairs
// when 3 | (q - eps); the 2-quotient unfolding of the zeta map when
// 3 | (q + eps) (n must be even there). Inverse provided.
HLabel global_star(const GLGULabel& label);
GLGULabel global_star_inverse(const HLabel& h);

// Odd-to-even reduction for 3 | (q + eps): peel the unique odd-size pair
// down to a linear coordinate, replacing its partition (2-core (1)) by the
// unique partition with empty 2-core and the same 2-quotient.
std::pair<GLGUPair, GLGULabel> odd_reduction(const GLGULabel& label);
GLGULabel odd_reduction_inverse(const GLGUPair& linear, const GLGULabel& even);

// Local bijection Irr_{3'}(H) -> Irr_{3'}(N_H(P)) at label level. Inverse
// provided.
LocalLabel local_theta(const HLabel& h);
HLabel local_theta_inverse(const LocalLabel& label);

NormalizerImage full_bijection(const GLGULabel& label);
GLGULabel full_bijection_inverse(char epsilon, int q, int n, const NormalizerImage& image);

// Independent count of the normalizer-side label set.
Int count_normalizer_labels(char epsilon, int q, int n);

// Galois/automorphism actions on labels: exponent multiplication on every
// orbit representative, partitions untouched.
GLGULabel galois_act(long u, const GLGULabel& label);
GLGULabel frobenius_act(const GLGULabel& label);
GLGULabel transpose_inverse_act(const GLGULabel& label); // epsilon '+' only
NormalizerImage galois_act(long u, const NormalizerImage& image, char epsilon, int q);

// Orbit/stabilizer transport report for the Galois exponent action on both
// sides of the bijection.
struct GaloisOrbitReport {
    std::vector<long> units; // the acting exponents
    std::vector<std::vector<int>> label_orbits;
    std::vector<std::vector<int>> image_orbits;
    std::vector<std::vector<long>> label_stabilizers;
    std::vector<std::vector<long>> image_stabilizers;
    bool orbits_match = false;
    bool stabilizers_match = false;
};
GaloisOrbitReport fields_orbits(char epsilon, int q, int n);

} // namespace mckay
