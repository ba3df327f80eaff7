#pragma once

#include <array>
#include <string>
#include <vector>

#include "pic27/cycmat.hpp"
#include "pic27/weyl.hpp"

namespace pic27 {

/**
 * FermatLine: one of the 27 lines on the Fermat cubic
 * x^3 + y^3 + z^3 + t^3 = 0 over Q(w). The four coordinates split into
 * two pairs and the line is cut out by two binomial forms:
 *
 *   grouping 0 "xy|zt": x + w^a y = 0,  z + w^b t = 0
 *   grouping 1 "xz|yt": x + w^a z = 0,  y + w^b t = 0
 *   grouping 2 "xt|yz": x + w^a t = 0,  y + w^b z = 0
 *
 * with a, b in {0, 1, 2}; 3 groupings x 9 exponent pairs = 27 lines.
 */
struct FermatLine {
    int grouping; // 0, 1, 2
    int a, b;     // exponents in {0, 1, 2}

    std::string name() const;
    bool operator==(const FermatLine& o) const {
        return grouping == o.grouping && a == o.a && b == o.b;
    }
};

// All 27 lines in index order (grouping, a, b lexicographic); each is
// verified symbolically to lie on the surface on first use.
const std::array<FermatLine, 27>& fermat_lines();

// The two defining linear forms as coefficient rows on (x, y, z, t).
std::array<std::array<CycNum, 4>, 2> line_forms(const FermatLine& l);

// Two spanning points of the line.
std::array<std::array<CycNum, 4>, 2> line_points(const FermatLine& l);

// Two distinct lines meet in P^3 iff the 4x4 matrix of their defining
// forms is singular. Exact arithmetic in Q(w).
bool lines_meet(const FermatLine& l1, const FermatLine& l2);

/**
 * FermatAut: an automorphism of the Fermat cubic, given as the projective
 * monomial matrix diag(1, w^d0, w^d1, w^d2) * P_sigma. The leading
 * diagonal entry is normalized to 1, which makes representatives modulo
 * scalars unique; the 648 = 27 * 24 such maps form the full automorphism
 * group, of shape (Z/3Z)^3 : S4.
 */
struct FermatAut {
    Perm sigma;           // degree-4 coordinate permutation
    std::array<int, 3> d; // exponents on coordinates y, z, t

    static FermatAut identity();
    std::string name() const;
    bool operator==(const FermatAut& o) const { return sigma == o.sigma && d == o.d; }
    bool operator<(const FermatAut& o) const;
};

// The 4x4 matrix representative over Q(w).
CycMat aut_matrix(const FermatAut& g);

// Group law matching matrix multiplication modulo scalars.
FermatAut aut_compose(const FermatAut& f, const FermatAut& g);

// All 648 automorphisms in canonical (sigma, d) order; each verified to
// preserve the surface equation on first use.
const std::vector<FermatAut>& fermat_aut_group();

// Symbolic substitution check: the cubic form composed with m is a nonzero
// scalar multiple of itself.
bool preserves_fermat_cubic(const CycMat& m);

/**
 * Eigenvalue typing of a monomial matrix. Per cycle of the coordinate
 * permutation the eigenvalues are the len-th roots of the cycle's entry
 * product; all of them are 36th roots of unity, tracked as exponents.
 * The element has type A2 (resp. A2xA2) iff the multiset of eigenvalues,
 * up to one common scalar, is {1, 1, w, w} (resp. {1, 1, w, w^2}).
 */
CarterType eigen_type(const FermatAut& g);

// All automorphisms of type A2. Asserts there are exactly 6, that they are
// the pure diagonal maps with exponent patterns (a,a,0), (a,0,a), (0,a,a),
// and that they commute pairwise in PGL4; throws structure_error otherwise.
std::vector<FermatAut> a2_census();

/**
 * Marking: incidence-preserving bijection from the 27 Fermat lines to the
 * 27 abstract line classes. Built by sending the lexicographically first
 * sixer of skew Fermat lines to E1..E6 and reading every other line off
 * its incidence pattern with the sixer; verified on all 351 pairs.
 */
struct Marking {
    std::array<int, 27> to_class; // fermat line index -> line class index
};

Marking find_marking();

// Permutation induced by g on the 27 Fermat lines (by line index).
Perm aut_line_perm(const FermatAut& g);

// The Weyl-group image of g under the marking, as a 27-class permutation.
Perm embed_aut(const Marking& m, const FermatAut& g);

/**
 * The full embedding Aut(S) -> W(E6): image permutations for all 648
 * automorphisms (aligned with fermat_aut_group()), its subgroup closure,
 * and the verified injectivity/homomorphism flags.
 */
struct Embedding {
    Marking marking;
    std::vector<Perm> images;
    PermGroup group; // the embedded 648-element subgroup of W(E6)
    bool injective = false;
    bool homomorphism = false;
};

const Embedding& fermat_embedding();

/// Point of P^2 with exact coordinates; equality is up to a nonzero scalar.
using ProjPoint3 = std::array<CycNum, 3>;

bool proj_equal(const ProjPoint3& u, const ProjPoint3& v);

/**
 * The six marked points [1:1:1], [w:1:w^2], [w^2:1:w], [1:0:0], [0:1:0],
 * [0:0:1] of the plane model. General position is verified: all 20
 * triples are non-collinear and no conic passes through all six.
 */
std::array<ProjPoint3, 6> plane_marked_points();

struct PlaneReport {
    bool points_general_position = false;
    bool b_fixes_p123 = false;   // b = cyclic coordinate shift
    bool b_cycles_p456 = false;
    bool c_fixes_p456 = false;   // c = diag(w, 1, w^2)
    bool c_cycles_p123 = false;
    std::size_t projective_group_order = 0; // <b, c> modulo scalars
    bool fixed_sets_are_p123_p456 = false;
    bool fixed_point_sets_disjoint = false;
    int lift_commutator_exponent = 0;       // k with b c b^-1 c^-1 = w^k * id
    std::string veronese_det;
};

/**
 * Checks the plane model: the actions of b (coordinate 3-cycle) and
 * c = diag(w, 1, w^2) on the six marked points, the order-9 projective
 * group they generate, the disjointness of their fixed-point sets
 * (computed as exact eigenvectors), and the scalar commutator of the
 * matrix lifts.
 */
PlaneReport plane_actions_check();

} // namespace pic27
