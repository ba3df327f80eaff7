#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pic27/fieldlemmas.hpp"

using namespace pic27;

namespace {

CycNum w(int k) { return CycNum::omega_pow(k); }

bool trace_rational_oracle(int a, int b, int c, int d) {
    // w^a + w^b + w^c + w^d is rational iff exponent 1 and exponent 2
    // appear equally often (the w-coefficients cancel exactly then).
    int n1 = (a == 1) + (b == 1) + (c == 1) + (d == 1);
    int n2 = (a == 2) + (b == 2) + (c == 2) + (d == 2);
    return n1 == n2;
}

} // namespace

TEST_CASE("trace rationality oracle matches the field computation") {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    CycNum t = w(a) + w(b) + w(c) + w(d);
                    CHECK(t.is_rational() == trace_rational_oracle(a, b, c, d));
                }
}

TEST_CASE("representation counting over Q") {
    RepLemmaReport rep = rep_lemma_check(false);
    CHECK(rep.cond1_count == 27);
    CHECK(rep.cond12_count == 19);
    CHECK(rep.witness == ExponentQuad{1, 1, 1, 0});
    CHECK(rep.witness_satisfies_cond1);
    CHECK(rep.witness_fails_cond2);
    CHECK(rep.cond1_group_order == 27);
    CHECK(rep.cond1_group_rank == 3);
    CHECK(rep.no_order27_subgroup_in_cond2);
    CHECK(rep.cond2_subset_not_closed);

    // the non-closure pair really does break condition (2)
    auto sum = ExponentQuad{(rep.nonclosure_a[0] + rep.nonclosure_b[0]) % 3,
                            (rep.nonclosure_a[1] + rep.nonclosure_b[1]) % 3,
                            (rep.nonclosure_a[2] + rep.nonclosure_b[2]) % 3,
                            (rep.nonclosure_a[3] + rep.nonclosure_b[3]) % 3};
    CycNum t = w(sum[0]) + w(sum[1]) + w(sum[2]) + w(sum[3]);
    CHECK(!t.is_rational());
    CHECK((sum[0] + sum[1] + sum[2] + sum[3]) % 3 == 0);
}

TEST_CASE("representation counting with omega in the field") {
    RepLemmaReport rep = rep_lemma_check(true);
    CHECK(rep.cond1_count == 27);
    CHECK(rep.cond12_count == 27);
    CHECK(!rep.witness_fails_cond2);
    CHECK(!rep.no_order27_subgroup_in_cond2);
}

TEST_CASE("derived count: 19 = 1 + 12 + 6") {
    // all-zero; one 1 and one 2 placed anywhere (4*3); two 1s and two 2s (C(4,2))
    int count = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    if ((a + b + c + d) % 3 == 0 && trace_rational_oracle(a, b, c, d)) ++count;
    CHECK(count == 19);
}

TEST_CASE("cubic radical classification") {
    RadCubicReport rep = rad_cubic_classification(Rat(2), 400, 99);
    CHECK(rep.rationality_iff_monomial);
    CHECK(rep.expansion_identity);
    CHECK(rep.trace_identity);

    RadCubicReport rep3 = rad_cubic_classification(Rat(3, 5), 200, 7);
    CHECK(rep3.rationality_iff_monomial);

    CHECK_THROWS_AS(rad_cubic_classification(Rat(8), 10, 1), std::domain_error);
    CHECK_THROWS_AS(rad_cubic_classification(Rat(-27, 8), 10, 1), std::domain_error);
    CHECK_THROWS_AS(rad_cubic_classification(Rat(0), 10, 1), std::domain_error);
}

TEST_CASE("PGL2 diagonal classes") {
    Pgl2Report rep = pgl2_diagonal_check();
    CHECK(rep.class_count == 3);
    CHECK(rep.classes_form_z3);
    CHECK(rep.diag_1_w_order3);
    CHECK(rep.diag_w_w_trivial);
}

TEST_CASE("prime orbit criterion") {
    CHECK(prime_orbit_check(7));    // subgroup {1, 2, 4} has orbits of size 3
    CHECK(!prime_orbit_check(5));
    CHECK(prime_orbit_check(13));
    CHECK(!prime_orbit_check(11));
    CHECK(prime_orbit_check(9973)); // 9973 - 1 = 3 * 3324
    for (int p = 5; p < 200; ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        CHECK(prime_orbit_check(p) == (p % 3 == 1));
    }
    CHECK_THROWS_AS(prime_orbit_check(4), std::domain_error);
    CHECK_THROWS_AS(prime_orbit_check(3), std::domain_error);
    CHECK_THROWS_AS(prime_orbit_check(10007), std::domain_error);
}

TEST_CASE("symbol algebra structure") {
    SymbolReport rep = symbol_algebra_check(Rat(2), Rat(3));
    CHECK(rep.associative);
    CHECK(rep.center_dim == 1);
    CHECK(rep.conjugation_relation);
    CHECK(rep.x_cubed_central_scalar);
    CHECK(rep.projective_group_z3sq);
    CHECK(rep.commutator_is_omega);

    CHECK_THROWS_AS(symbol_algebra_check(Rat(0), Rat(3)), std::domain_error);
    CHECK_THROWS_AS(symbol_algebra_check(Rat(2), Rat(0)), std::domain_error);
}

TEST_CASE("symbol algebra: conjugation eigenvalues pin the center") {
    // Conjugation by x scales x^i y^j by w^j, conjugation by y by w^{2i}.
    // Only the (0, 0) slot is fixed by both, so the center is the scalars:
    // the independent route to center_dimension() == 1.
    SymbolAlg alg(Rat(5), Rat(7));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SymbolAlg::Elt e = SymbolAlg::basis(i, j);
            SymbolAlg::Elt cx = alg.mul(alg.mul(alg.x(), e), alg.x_inv());
            CHECK(cx == SymbolAlg::scaled(e, w(j)));
            SymbolAlg::Elt cy = alg.mul(alg.mul(alg.y(), e), alg.y_inv());
            CHECK(cy == SymbolAlg::scaled(e, w(2 * i)));
        }

    // y x = w^2 x y
    CHECK(alg.mul(alg.y(), alg.x()) ==
          SymbolAlg::scaled(alg.mul(alg.x(), alg.y()), w(2)));
    // x^3 = a, y^3 = b as scalars
    CHECK(alg.mul(alg.mul(alg.x(), alg.x()), alg.x()) ==
          SymbolAlg::scaled(alg.one(), CycNum(Rat(5))));
    CHECK(alg.mul(alg.mul(alg.y(), alg.y()), alg.y()) ==
          SymbolAlg::scaled(alg.one(), CycNum(Rat(7))));
}
