#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pic27/errors.hpp"
#include "pic27/permgroup.hpp"
#include "pic27/rng.hpp"

using namespace pic27;

namespace {

PermGroup sym(int n) {
    // adjacent transpositions generate S_n
    std::vector<Perm> gens;
    for (int i = 0; i + 1 < n; ++i) gens.push_back(Perm::from_cycles(n, {{i, i + 1}}));
    return PermGroup::closure(gens);
}

} // namespace

TEST_CASE("perm basics") {
    Perm p = Perm::from_cycles(5, {{0, 1, 2}, {3, 4}});
    CHECK(p.order() == 6);
    CHECK(p.inverse() * p == Perm::identity(5));
    CHECK(p.cycle_string() == "(0 1 2)(3 4)");
    CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
    // composition applies the right factor first
    Perm q = Perm::from_cycles(3, {{0, 1}});
    Perm r = Perm::from_cycles(3, {{1, 2}});
    CHECK((q * r)(1) == q(r(1)));
}

TEST_CASE("closure small cases") {
    CHECK(PermGroup::trivial(4).order() == 1);
    CHECK(PermGroup::closure({Perm::identity(3)}).order() == 1);
    CHECK(PermGroup::closure({Perm::from_cycles(3, {{0, 1, 2}})}).order() == 3);
    CHECK(sym(3).order() == 6);
    CHECK(sym(4).order() == 24);
    CHECK(sym(5).order() == 120);
}

TEST_CASE("closure is deterministic under generator reordering") {
    std::vector<Perm> gens{Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}}),
                           Perm::from_cycles(5, {{2, 3}})};
    PermGroup g1 = PermGroup::closure(gens);
    std::vector<Perm> shuffled{gens[2], gens[0], gens[1]};
    PermGroup g2 = PermGroup::closure(shuffled);
    std::vector<Perm> reversed{gens[1], gens[2], gens[0]};
    PermGroup g3 = PermGroup::closure(reversed);
    CHECK(g1.elements() == g2.elements());
    CHECK(g1.elements() == g3.elements());
    CHECK(std::is_sorted(g1.elements().begin(), g1.elements().end()));
}

TEST_CASE("conjugacy classes in S3") {
    PermGroup s3 = sym(3);
    CHECK(s3.conjugacy_class(Perm::identity(3)).size() == 1);
    CHECK(s3.conjugacy_class(Perm::from_cycles(3, {{0, 1, 2}})).size() == 2);
    CHECK(s3.conjugacy_class(Perm::from_cycles(3, {{0, 1}})).size() == 3);
    CHECK_THROWS_AS(sym(4).conjugacy_class(Perm::identity(3)), std::invalid_argument);
    Perm not_in = Perm::from_cycles(4, {{0, 1}});
    PermGroup a4 = PermGroup::closure({Perm::from_cycles(4, {{0, 1, 2}}),
                                       Perm::from_cycles(4, {{1, 2, 3}})});
    CHECK(a4.order() == 12);
    CHECK_THROWS_AS(a4.conjugacy_class(not_in), std::domain_error);
}

TEST_CASE("orbit-stabilizer identity on S4") {
    PermGroup s4 = sym(4);
    for (const auto& g : s4.elements()) {
        auto cls = s4.conjugacy_class(g);
        auto cent = s4.centralizer(g);
        CHECK(cls.size() * cent.order() == s4.order());
        CHECK(s4.order() % cent.order() == 0); // Lagrange
    }
}

TEST_CASE("centralizer of the identity is everything") {
    PermGroup s4 = sym(4);
    CHECK(s4.centralizer(Perm::identity(4)).order() == 24);
}

TEST_CASE("sylow3: normal cases and failures") {
    // cyclic of order 3: its own Sylow-3
    PermGroup c3 = PermGroup::closure({Perm::from_cycles(3, {{0, 1, 2}})});
    CHECK(c3.sylow3_unique().order() == 3);

    // S3 has a unique (normal) Sylow-3
    PermGroup s3 = sym(3);
    PermGroup syl = s3.sylow3_unique();
    CHECK(syl.order() == 3);
    CHECK(s3.normalizes(syl));

    // S4 has four Sylow-3 subgroups: the 3-element set is too large
    CHECK_THROWS_AS(sym(4).sylow3_unique(), structure_error);
}

TEST_CASE("elementary abelian 3-groups") {
    CHECK(PermGroup::trivial(2).is_elementary_abelian_3() == 0);
    PermGroup c3 = PermGroup::closure({Perm::from_cycles(3, {{0, 1, 2}})});
    CHECK(c3.is_elementary_abelian_3() == 1);
    // two disjoint 3-cycles commute: (Z/3)^2
    PermGroup z3sq = PermGroup::closure(
        {Perm::from_cycles(6, {{0, 1, 2}}), Perm::from_cycles(6, {{3, 4, 5}})});
    CHECK(z3sq.order() == 9);
    CHECK(z3sq.is_elementary_abelian_3() == 2);
    CHECK(sym(3).is_elementary_abelian_3() == std::nullopt);
    // cyclic of order 9 is a 3-group but not elementary
    PermGroup c9 = PermGroup::closure({Perm::from_cycles(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}})});
    CHECK(c9.is_elementary_abelian_3() == std::nullopt);
}

TEST_CASE("subgroup_generated") {
    PermGroup s4 = sym(4);
    CHECK(s4.subgroup_generated({}).order() == 1);
    CHECK(s4.subgroup_generated({Perm::from_cycles(4, {{0, 1}})}).order() == 2);
    CHECK(s4.subgroup_generated({Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})})
              .order() == 4);
    PermGroup a3 = PermGroup::closure({Perm::from_cycles(3, {{0, 1, 2}})});
    CHECK_THROWS_AS(a3.subgroup_generated({Perm::from_cycles(3, {{0, 1}})}), std::domain_error);
    // the lifted disjoint 3-cycles from the 27-line story, degree 6 model
    PermGroup g = sym(6).subgroup_generated(
        {Perm::from_cycles(6, {{3, 4, 5}}), Perm::from_cycles(6, {{0, 1, 2}})});
    CHECK(g.order() == 9);
}

TEST_CASE("closure stops at the element limit") {
    // S10 has 3628800 > 10^6 elements
    CHECK_THROWS_AS(PermGroup::closure({Perm::from_cycles(10, {{0, 1}}),
                                        Perm::from_cycles(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}})}),
                    resource_error);
}

TEST_CASE("every subgroup order divides the group order") {
    PermGroup s4 = sym(4);
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        std::vector<Perm> gens;
        for (int k = 0; k < 2; ++k)
            gens.push_back(s4.elements()[rng.range(0, static_cast<long>(s4.order()) - 1)]);
        CHECK(s4.order() % s4.subgroup_generated(gens).order() == 0);
    }
}
