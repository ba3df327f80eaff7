#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pic27/perm.hpp"

namespace pic27 {

/**
 * PicVec: class l*L + sum_i e_i*E_i in the rank-7 Picard lattice of a
 * smooth cubic surface, coordinates on the basis (L, E1..E6). The
 * intersection pairing has signature (1,6):
 *     <u, v> = u.l*v.l - sum_i u.e[i]*v.e[i].
 */
struct PicVec {
    std::int64_t l = 0;
    std::array<std::int64_t, 6> e{};

    PicVec() = default;
    PicVec(std::int64_t l_, std::array<std::int64_t, 6> e_) : l(l_), e(e_) {}

    PicVec operator+(const PicVec& o) const {
        PicVec r(l + o.l, e);
        for (int i = 0; i < 6; ++i) r.e[i] += o.e[i];
        return r;
    }
    PicVec operator-(const PicVec& o) const {
        PicVec r(l - o.l, e);
        for (int i = 0; i < 6; ++i) r.e[i] -= o.e[i];
        return r;
    }
    PicVec operator-() const {
        PicVec r(-l, e);
        for (int i = 0; i < 6; ++i) r.e[i] = -e[i];
        return r;
    }
    PicVec scaled(std::int64_t c) const {
        PicVec r(l * c, e);
        for (int i = 0; i < 6; ++i) r.e[i] *= c;
        return r;
    }

    bool operator==(const PicVec& o) const { return l == o.l && e == o.e; }
    bool operator!=(const PicVec& o) const { return !(*this == o); }
    bool operator<(const PicVec& o) const { return l != o.l ? l < o.l : e < o.e; }

    std::string str() const;
};

std::int64_t pairing(const PicVec& u, const PicVec& v);

// K = -3L + E1 + ... + E6; satisfies K^2 = 3.
PicVec canonical_class();

PicVec basis_l();
PicVec basis_e(int i); // i in [0, 6)

/**
 * LineClass: one of the 27 classes with v^2 = -1 and v.K = -1, carrying
 * its conventional tag:
 *   E(i)             = E_i
 *   Q(i)             = 2L - sum_{j != i} E_j
 *   L(i,j), i < j    = L - E_i - E_j
 *
 * Index convention (fixed so permutations are stable across runs):
 * E1..E6 -> 0..5, Q1..Q6 -> 6..11, L_ij in lexicographic (i,j) order
 * -> 12..26.
 */
struct LineClass {
    enum class Kind { E, Q, L };
    Kind kind;
    int i;      // 1-based
    int j;      // 1-based, only for Kind::L, with i < j
    PicVec vec;

    std::string name() const;
};

// The 27 line classes in the fixed index order.
const std::array<LineClass, 27>& lines27();

bool is_line_class(const PicVec& v); // v^2 = -1 and v.K = -1

// Independent construction of the line classes: scan the finite solution
// box of {v^2 = -1, v.K = -1} and return the solutions sorted.
std::vector<PicVec> solve_line_classes();

// Index into lines27(), or -1 if v is not a line class.
int line_index(const PicVec& v);
int line_index(LineClass::Kind kind, int i, int j = 0);

// Six distinct, pairwise skew classes (all pairings 0).
bool is_sixer(const std::array<int, 6>& line_indices);

// All 72 unordered sixers, each sorted ascending, in lexicographic order.
const std::vector<std::array<int, 6>>& all_sixers();

/**
 * The unique line meeting all five of the given pairwise skew classes
 * (pairing 1 with each). The input must extend to a sixer; zero or
 * several transversals raise structure_error.
 */
int unique_transversal(const std::array<int, 5>& five);

/**
 * LatticeMap: integer endomorphism of the Picard lattice on the basis
 * (L, E1..E6); column k holds the image of the k-th basis vector.
 */
struct LatticeMap {
    std::array<std::array<std::int64_t, 7>, 7> m{};

    static LatticeMap identity();

    PicVec apply(const PicVec& v) const;
    LatticeMap operator*(const LatticeMap& o) const;
    bool operator==(const LatticeMap& o) const { return m == o.m; }
    bool operator!=(const LatticeMap& o) const { return !(*this == o); }

    bool fixes_canonical_class() const;
    bool preserves_pairing() const; // checked on all basis pairs
    std::int64_t det() const;       // exact, fraction-free elimination
};

/**
 * The unique lattice map fixing K and sending E_i to the given line
 * classes. The images must be a sixer (std::domain_error otherwise); the
 * result is verified to be integral, pairing-preserving and unimodular.
 */
LatticeMap extend_to_weyl(const std::array<int, 6>& image_line_indices);

// The permutation the map induces on the 27 line classes; throws
// structure_error if some image is not a line class.
Perm line_perm(const LatticeMap& map);

} // namespace pic27
