#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pic27/permgroup.hpp"
#include "pic27/piclattice.hpp"

namespace pic27 {

/**
 * Weyl groups of the del Pezzo lattices <L, E1..En> for n = 4, 5, 6:
 * all lattice automorphisms preserving the pairing and fixing the
 * canonical class K_n = -3L + E1 + ... + En. Roots are the vectors with
 * v^2 = -2 and v.K_n = 0; each root gives the reflection
 * s_r(x) = x + <x, r> r.
 *
 * For n = 6 the group is W(E6) acting on the 27 line classes; for
 * n = 4, 5 only the group order matters here, so those groups act on
 * their own root sets.
 */

// Full root set of the rank-(1+n) lattice, sorted. Sizes: 20, 40, 72.
std::vector<PicVec> roots(int n);

// The reflection in a root, as a lattice map.
LatticeMap reflection_map(const PicVec& root);

// The reflection in a rank-7 root as a permutation of the 27 lines.
Perm reflection(const PicVec& root);

// W(A4), W(D5), W(E6) as permutation groups (orders 120, 1920, 51840).
PermGroup generate(int n);

// Cached copy of W(E6) on the 27 lines.
const PermGroup& weyl_e6();

/**
 * WeylElem: an element of W(E6) in both of its guises, the permutation of
 * the 27 line classes and the 7x7 lattice matrix. Either determines the
 * other since the lines span the lattice rationally.
 */
struct WeylElem {
    Perm lines;
    LatticeMap mat;

    bool operator==(const WeylElem& o) const { return lines == o.lines; }
};

// Rebuild the lattice matrix from a 27-line permutation and verify the two
// representations agree on every line.
WeylElem elem_from_line_perm(const Perm& p);

// The lattice map fixing L and permuting E1..E6 by p (degree-6 permutation).
WeylElem standard_s6(const Perm& p);

enum class CarterType { A2, A2xA2, Other };

const char* carter_name(CarterType t);

/**
 * Conjugacy type read off the characteristic polynomial on the orthogonal
 * complement of K:
 *   A2    <=>  (t-1)^4 (t^2+t+1)
 *   A2xA2 <=>  (t-1)^2 (t^2+t+1)^2
 * Everything else is Other.
 */
CarterType carter_type(const WeylElem& g);
CarterType carter_type(const Perm& line_perm);

// Integer characteristic polynomial of the 7x7 lattice matrix, lowest
// degree first (degree 7, monic).
std::array<std::int64_t, 8> char_poly7(const LatticeMap& m);

// Simple-root basis of the K-orthogonal sublattice used by the tests:
// E1-E2, ..., E5-E6, L-E1-E2-E3.
std::array<PicVec, 6> simple_roots_e6();

/**
 * The order-3 element sending E1, E2, E3, E4, E5, E6 to
 * Q1, Q2, Q3, L56, L46, L45.
 */
WeylElem build_r();

/**
 * True iff r commutes with every element of W(E6) whose line permutation
 * preserves both sets {E1,E2,E3} and {E4,E5,E6}. Exhaustive over the
 * whole group.
 */
bool commutes_with_set_preservers(const WeylElem& r);

// The subgroup of W(E6) preserving both sets {E1,E2,E3} and {E4,E5,E6}.
std::vector<Perm> set_preservers();

struct SylowLemmaReport {
    std::size_t class_size = 0;          // conjugacy class of the A2 element
    std::size_t centralizer_order = 0;   // centralizer in W(E6)
    std::size_t sylow_order = 0;         // its unique Sylow 3-subgroup
    int sylow_rank = -1;                 // log_3 of the Sylow order
    bool sylow_normal = false;           // normal in the centralizer
    std::size_t aut_centralizer_order = 0; // centralizer in the embedded 648-group
    std::size_t aut_sylow_order = 0;
    bool sylow_subgroups_coincide = false; // the two Sylow 3-subgroups are equal
};

/**
 * Computes, for an A2 element lying in the embedded automorphism group of
 * the Fermat cubic: its W(E6) conjugacy class size, centralizer order and
 * unique Sylow 3-subgroup, the matching data inside the embedded
 * 648-element group, and whether the two Sylow 3-subgroups are literally
 * the same set of permutations.
 */
SylowLemmaReport verify_sylow_lemma();

} // namespace pic27
