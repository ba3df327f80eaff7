#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pic27/errors.hpp"
#include "pic27/fermat.hpp"

using namespace pic27;

namespace {

CycNum w(int k) { return CycNum::omega_pow(k); }

// independent 4x4 determinant (cofactor expansion)
CycNum det4(const CycMat& m) {
    CycNum acc;
    for (int j = 0; j < 4; ++j) {
        if (m.at(0, j).is_zero()) continue;
        CycMat minor(3);
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        CycNum d = minor.at(0, 0) * (minor.at(1, 1) * minor.at(2, 2) - minor.at(1, 2) * minor.at(2, 1)) -
                   minor.at(0, 1) * (minor.at(1, 0) * minor.at(2, 2) - minor.at(1, 2) * minor.at(2, 0)) +
                   minor.at(0, 2) * (minor.at(1, 0) * minor.at(2, 1) - minor.at(1, 1) * minor.at(2, 0));
        CycNum term = m.at(0, j) * d;
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

CycMat forms_matrix(const FermatLine& l1, const FermatLine& l2) {
    auto f1 = line_forms(l1);
    auto f2 = line_forms(l2);
    CycMat m(4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = f1[0][j];
        m.at(1, j) = f1[1][j];
        m.at(2, j) = f2[0][j];
        m.at(3, j) = f2[1][j];
    }
    return m;
}

int line_pos(const FermatLine& l) {
    const auto& lines = fermat_lines();
    return static_cast<int>(std::find(lines.begin(), lines.end(), l) - lines.begin());
}

} // namespace

TEST_CASE("the 27 Fermat lines") {
    const auto& lines = fermat_lines(); // construction verifies each lies on the surface
    CHECK(lines.size() == 27);
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j) CHECK(!(lines[i] == lines[j]));
    CHECK(lines[0].name() == "xy|zt[0,0]");
}

TEST_CASE("lines_meet: pinned cases and the determinant oracle") {
    FermatLine a{0, 0, 0}, skew{0, 1, 1}, coplanar{0, 0, 1}, crossing{1, 0, 0};
    CHECK(!lines_meet(a, skew));
    CHECK(lines_meet(a, coplanar));   // both contain the plane x + y = 0
    CHECK(lines_meet(a, crossing));

    // the skew pair has determinant -(w - 1)^2 != 0 (block structure up to a row swap)
    CycNum want = -((w(1) - CycNum(1)) * (w(1) - CycNum(1)));
    CHECK(det4(forms_matrix(a, skew)) == want);
    CHECK(det4(forms_matrix(a, coplanar)).is_zero());
    CHECK(det4(forms_matrix(a, crossing)).is_zero());

    CHECK_THROWS_AS(lines_meet(a, a), std::domain_error);

    // symmetry and 10-regularity
    const auto& lines = fermat_lines();
    for (int i = 0; i < 27; ++i) {
        int deg = 0;
        for (int j = 0; j < 27; ++j) {
            if (i == j) continue;
            CHECK(lines_meet(lines[i], lines[j]) == lines_meet(lines[j], lines[i]));
            if (lines_meet(lines[i], lines[j])) ++deg;
        }
        CHECK(deg == 10);
    }
}

TEST_CASE("automorphism group: 648 monomial maps") {
    const auto& auts = fermat_aut_group();
    CHECK(auts.size() == 648);
    CHECK(aut_matrix(FermatAut::identity()) == CycMat::identity(4));

    // composition law against matrix multiplication (projective equality)
    for (std::size_t i = 0; i < auts.size(); i += 47)
        for (std::size_t j = 0; j < auts.size(); j += 61) {
            FermatAut prod = aut_compose(auts[i], auts[j]);
            CHECK(std::find(auts.begin(), auts.end(), prod) != auts.end());
            CHECK(aut_matrix(prod).proportional(aut_matrix(auts[i]) * aut_matrix(auts[j])));
        }

    // non-automorphisms are rejected by the symbolic substitution check
    CycMat bad = CycMat::identity(4);
    bad.at(3, 3) = CycNum(2);
    CHECK(!preserves_fermat_cubic(bad));
    CycMat shear = CycMat::identity(4);
    shear.at(0, 1) = CycNum(1);
    CHECK(!preserves_fermat_cubic(shear));
}

TEST_CASE("line action of a coordinate swap") {
    // x <-> y sends (xy|zt)[a, b] to (xy|zt)[-a, b]
    FermatAut swap01{Perm::from_cycles(4, {{0, 1}}), {0, 0, 0}};
    Perm p = aut_line_perm(swap01);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(p(line_pos(FermatLine{0, a, b})) == line_pos(FermatLine{0, (3 - a) % 3, b}));
}

TEST_CASE("eigenvalue typing") {
    CHECK(eigen_type(FermatAut{Perm::identity(4), {1, 1, 0}}) == CarterType::A2);   // diag(1,w,w,1)
    CHECK(eigen_type(FermatAut{Perm::identity(4), {2, 2, 0}}) == CarterType::A2);
    CHECK(eigen_type(FermatAut{Perm::identity(4), {0, 1, 2}}) == CarterType::A2xA2); // diag(1,1,w,w^2)
    CHECK(eigen_type(FermatAut::identity()) == CarterType::Other);
    CHECK(eigen_type(FermatAut{Perm::identity(4), {1, 0, 0}}) == CarterType::Other);
    // order-3 coordinate cycles have eigenvalues 1,1,w,w^2
    CHECK(eigen_type(FermatAut{Perm::from_cycles(4, {{1, 2, 3}}), {0, 0, 0}}) == CarterType::A2xA2);
    // involutions and 4-cycles are neither
    CHECK(eigen_type(FermatAut{Perm::from_cycles(4, {{0, 1}}), {0, 0, 0}}) == CarterType::Other);
    CHECK(eigen_type(FermatAut{Perm::from_cycles(4, {{0, 1, 2, 3}}), {0, 0, 0}}) == CarterType::Other);
    // g h with h = (234) and exponent sum 0 mod 3
    FermatAut gh = aut_compose(FermatAut{Perm::identity(4), {1, 1, 1}},
                               FermatAut{Perm::from_cycles(4, {{1, 2, 3}}), {0, 0, 0}});
    CHECK(eigen_type(gh) == CarterType::A2xA2);
}

TEST_CASE("A2 census") {
    std::vector<FermatAut> census = a2_census();
    CHECK(census.size() == 6);
    FermatAut diag110{Perm::identity(4), {1, 1, 0}};
    CHECK(std::find(census.begin(), census.end(), diag110) != census.end());
    for (const auto& g : census) {
        CHECK(g.sigma.is_identity());
        FermatAut cube = aut_compose(aut_compose(g, g), g);
        CHECK(cube == FermatAut::identity());
    }
}

TEST_CASE("marking: incidence-preserving and deterministic") {
    Marking m1 = find_marking();
    Marking m2 = find_marking();
    CHECK(m1.to_class == m2.to_class);

    std::array<bool, 27> hit{};
    for (int i = 0; i < 27; ++i) {
        CHECK(!hit[m1.to_class[i]]);
        hit[m1.to_class[i]] = true;
    }
    const auto& lines = fermat_lines();
    const auto& classes = lines27();
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j)
            CHECK(lines_meet(lines[i], lines[j]) ==
                  (pairing(classes[m1.to_class[i]].vec, classes[m1.to_class[j]].vec) == 1));
}

TEST_CASE("embedding into W(E6)") {
    const Embedding& emb = fermat_embedding();
    CHECK(emb.injective);
    CHECK(emb.homomorphism);
    CHECK(emb.group.order() == 648);

    const auto& auts = fermat_aut_group();
    std::size_t id_pos =
        static_cast<std::size_t>(std::find(auts.begin(), auts.end(), FermatAut::identity()) -
                                 auts.begin());
    CHECK(emb.images[id_pos].is_identity());

    // a diagonal A2 automorphism embeds as a Carter-A2 Weyl element
    FermatAut diag110{Perm::identity(4), {1, 1, 0}};
    Perm image = embed_aut(emb.marking, diag110);
    CHECK(carter_type(image) == CarterType::A2);
    CHECK(weyl_e6().contains(image));

    // eigenvalue typing agrees with Carter typing on a stride sample
    for (std::size_t i = 0; i < auts.size(); i += 29)
        CHECK(eigen_type(auts[i]) == carter_type(emb.images[i]));

    // The six A2 automorphisms are {s, s^2} over the three diagonal
    // patterns; over F_3 the patterns (1,1,0), (1,0,1), (0,1,1) are
    // linearly independent, so the span is the full diagonal 3-torus.
    std::vector<FermatAut> census = a2_census();
    std::vector<Perm> a2_images;
    for (const auto& g : census) {
        a2_images.push_back(embed_aut(emb.marking, g));
        FermatAut sq = aut_compose(g, g);
        CHECK(std::find(census.begin(), census.end(), sq) != census.end());
    }
    PermGroup span = weyl_e6().subgroup_generated(a2_images);
    CHECK(span.order() == 27);
    CHECK(span.is_elementary_abelian_3() == 3);
    // two elements from distinct patterns already generate a (Z/3)^2
    PermGroup two = weyl_e6().subgroup_generated({a2_images[0],
                                                  embed_aut(emb.marking, FermatAut{Perm::identity(4), {1, 0, 1}})});
    CHECK(two.order() == 9);
    CHECK(two.is_elementary_abelian_3() == 2);
}

TEST_CASE("centralizer of an A2 element inside the embedded group") {
    const Embedding& emb = fermat_embedding();
    const auto& auts = fermat_aut_group();
    FermatAut s = a2_census().front();
    std::size_t pos =
        static_cast<std::size_t>(std::find(auts.begin(), auts.end(), s) - auts.begin());
    PermGroup cent = emb.group.centralizer(emb.images[pos]);
    CHECK(cent.order() == 108); // (Z/3Z)^3 : (Z/2Z)^2
    PermGroup sylow = cent.sylow3_unique();
    CHECK(sylow.order() == 27);
    CHECK(sylow.is_elementary_abelian_3() == 3);
}

TEST_CASE("sylow subgroups of the two centralizers coincide") {
    SylowLemmaReport rep = verify_sylow_lemma();
    CHECK(rep.class_size == 240);
    CHECK(rep.centralizer_order == 216);
    CHECK(rep.sylow_order == 27);
    CHECK(rep.sylow_rank == 3);
    CHECK(rep.sylow_normal);
    CHECK(rep.aut_centralizer_order == 108);
    CHECK(rep.aut_sylow_order == 27);
    CHECK(rep.sylow_subgroups_coincide);
}

TEST_CASE("plane marked points") {
    auto p = plane_marked_points(); // throws unless in general position
    // det(p4, p5, p6) = 1 on the unit vectors
    CycMat unit(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) unit.at(i, j) = p[3 + i][j];
    CHECK(unit.det() == CycNum(1));
    // det(p1, p2, p3) is the Vandermonde-type value 3(w - w^2) = 3 + 6w
    CycMat first(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) first.at(i, j) = p[i][j];
    CHECK(first.det() == CycNum(Rat(3), Rat(6)));
}

TEST_CASE("plane actions of b and c") {
    PlaneReport rep = plane_actions_check();
    CHECK(rep.points_general_position);
    CHECK(rep.b_fixes_p123);
    CHECK(rep.b_cycles_p456);
    CHECK(rep.c_fixes_p456);
    CHECK(rep.c_cycles_p123);
    CHECK(rep.projective_group_order == 9);
    CHECK(rep.fixed_sets_are_p123_p456);
    CHECK(rep.fixed_point_sets_disjoint);
    CHECK(rep.lift_commutator_exponent == 1); // b c b^-1 c^-1 = w * id
}

TEST_CASE("projective point equality") {
    ProjPoint3 u{CycNum(1), w(1), w(2)};
    ProjPoint3 v{w(1), w(2), CycNum(1)}; // w * u
    CHECK(proj_equal(u, v));
    ProjPoint3 x{CycNum(1), CycNum(0), CycNum(0)};
    ProjPoint3 y{CycNum(0), CycNum(1), CycNum(0)};
    CHECK(!proj_equal(x, y));
}
