#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pic27/cyclotomic.hpp"
#include "pic27/rational.hpp"

namespace pic27 {

/**
 * ExponentQuad: (a, b, c, d) with entries mod 3, encoding the diagonal
 * matrix diag(w^a, w^b, w^c, w^d). Componentwise addition mod 3 models
 * matrix multiplication.
 */
using ExponentQuad = std::array<int, 4>;

struct RepLemmaReport {
    int cond1_count = 0;   // quads with a+b+c+d = 0 mod 3
    int cond12_count = 0;  // ... whose trace w^a+w^b+w^c+w^d lies in the base field
    ExponentQuad witness{1, 1, 1, 0};
    bool witness_satisfies_cond1 = false;
    bool witness_fails_cond2 = false;
    std::size_t cond1_group_order = 0; // the quads under addition, as a permutation group
    int cond1_group_rank = -1;         // elementary abelian 3-rank
    bool no_order27_subgroup_in_cond2 = false;
    ExponentQuad nonclosure_a{}, nonclosure_b{};
    bool cond2_subset_not_closed = false; // witnessed by the pair above
};

/**
 * Enumerates the 81 exponent quads and counts the determinant condition
 * (a+b+c+d = 0 mod 3, giving 27) and the trace condition on top of it.
 * With has_omega the base field contains w, every trace is admissible and
 * the count returns to 27; over Q it drops to 19 and the quad (1,1,1,0)
 * is an explicit witness, so no subgroup of order 27 fits inside the
 * admissible set.
 */
RepLemmaReport rep_lemma_check(bool has_omega);

struct RadCubicReport {
    int samples = 0;
    bool rationality_iff_monomial = true; // y^3 rational <=> at most one of u, v, w nonzero
    bool expansion_identity = true;       // closed form of (v x + w x^2)^3
    bool trace_identity = true;           // trace of multiplication by y equals 3u
};

/**
 * Property test over Q[x]/(x^3 - alpha) for a non-cube alpha: a cube
 * y^3 is rational exactly when y is a rational multiple of 1, x or x^2,
 * the u = 0 expansion y^3 = v^3 a + w^3 a^2 + 3a v^2 w x + 3a v w^2 x^2
 * holds coefficientwise, and the multiplication trace equals 3u.
 * Throws std::domain_error when alpha is zero or a rational cube.
 */
RadCubicReport rad_cubic_classification(const Rat& alpha, int samples, std::uint64_t seed);

struct Pgl2Report {
    int class_count = 0;        // diag(w^a, w^b) modulo scalars
    bool classes_form_z3 = false;
    bool diag_1_w_order3 = false;
    bool diag_w_w_trivial = false;
};

// The projective classes of the 2x2 diagonal mu_3 matrices form a cyclic
// group of order exactly 3, so a simultaneously diagonalized exponent-3
// abelian subgroup of PGL2 is cyclic of order at most 3.
Pgl2Report pgl2_diagonal_check();

/**
 * True iff some subgroup of the multiplicative group mod p has an orbit of
 * size exactly 3 on the nonzero residues. Brute force over all subgroups;
 * callers assert the equivalence with p = 1 mod 3. Requires p prime with
 * 5 <= p < 10^4.
 */
bool prime_orbit_check(int p);

/**
 * SymbolAlg: the degree-3 symbol algebra over Q(w) with parameters a, b:
 * nine-dimensional with basis x^i y^j (0 <= i, j <= 2) and relations
 *
 *     x^3 = a,   y^3 = b,   x y = w y x.
 *
 * Elements are coefficient arrays on that basis; index 3*i + j holds the
 * coefficient of x^i y^j.
 */
class SymbolAlg {
public:
    using Elt = std::array<CycNum, 9>;

    SymbolAlg(Rat a, Rat b);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    static Elt zero() { return Elt{}; }
    static Elt basis(int i, int j);
    static Elt scaled(const Elt& e, const CycNum& c);
    static Elt add(const Elt& e, const Elt& f);
    static bool equal(const Elt& e, const Elt& f) { return e == f; }
    static bool proportional(const Elt& e, const Elt& f);

    Elt one() const { return basis(0, 0); }
    Elt x() const { return basis(1, 0); }
    Elt y() const { return basis(0, 1); }
    Elt x_inv() const; // a^-1 x^2
    Elt y_inv() const; // b^-1 y^2

    Elt mul(const Elt& e, const Elt& f) const;

    bool is_scalar(const Elt& e) const;

    // Dimension over Q(w) of {z : zu = uz for all u}, by solving the
    // commutation system against the generators x and y exactly.
    int center_dimension() const;

private:
    Rat a_, b_;
};

struct SymbolReport {
    bool associative = false;          // all 729 basis triples
    int center_dim = 0;                // must be 1
    bool conjugation_relation = false; // x y x^-1 = w y
    bool x_cubed_central_scalar = false;
    bool projective_group_z3sq = false; // classes of x^i y^j form (Z/3Z)^2
    bool commutator_is_omega = false;   // x y x^-1 y^-1 = w * 1
};

// Builds SymbolAlg(a, b) and verifies its defining structure. Throws
// std::domain_error if a or b vanishes.
SymbolReport symbol_algebra_check(const Rat& a, const Rat& b);

} // namespace pic27
