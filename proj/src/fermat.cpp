#include "pic27/fermat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pic27/coverage.hpp"
#include "pic27/errors.hpp"

namespace pic27 {

namespace {

const char* kGroupingNames[3] = {"xy|zt", "xz|yt", "xt|yz"};

CycNum w(int k) { return CycNum::omega_pow(k); }

} // namespace

std::string FermatLine::name() const {
    return std::string(kGroupingNames[grouping]) + "[" + std::to_string(a) + "," +
           std::to_string(b) + "]";
}

std::array<std::array<CycNum, 4>, 2> line_forms(const FermatLine& l) {
    std::array<std::array<CycNum, 4>, 2> f{};
    switch (l.grouping) {
        case 0: // x + w^a y, z + w^b t
            f[0] = {CycNum(1), w(l.a), CycNum(0), CycNum(0)};
            f[1] = {CycNum(0), CycNum(0), CycNum(1), w(l.b)};
            break;
        case 1: // x + w^a z, y + w^b t
            f[0] = {CycNum(1), CycNum(0), w(l.a), CycNum(0)};
            f[1] = {CycNum(0), CycNum(1), CycNum(0), w(l.b)};
            break;
        case 2: // x + w^a t, y + w^b z
            f[0] = {CycNum(1), CycNum(0), CycNum(0), w(l.a)};
            f[1] = {CycNum(0), CycNum(1), w(l.b), CycNum(0)};
            break;
        default:
            throw std::invalid_argument("line_forms: bad grouping");
    }
    return f;
}

std::array<std::array<CycNum, 4>, 2> line_points(const FermatLine& l) {
    std::array<std::array<CycNum, 4>, 2> p{};
    switch (l.grouping) {
        case 0:
            p[0] = {-w(l.a), CycNum(1), CycNum(0), CycNum(0)};
            p[1] = {CycNum(0), CycNum(0), -w(l.b), CycNum(1)};
            break;
        case 1:
            p[0] = {-w(l.a), CycNum(0), CycNum(1), CycNum(0)};
            p[1] = {CycNum(0), -w(l.b), CycNum(0), CycNum(1)};
            break;
        case 2:
            p[0] = {-w(l.a), CycNum(0), CycNum(0), CycNum(1)};
            p[1] = {CycNum(0), -w(l.b), CycNum(1), CycNum(0)};
            break;
        default:
            throw std::invalid_argument("line_points: bad grouping");
    }
    return p;
}

namespace {

// The cubic form restricted to the span of u and v: coefficients of
// s^3, s^2 t, s t^2, t^3 must all vanish for the line to lie on the surface.
bool line_on_surface(const FermatLine& l) {
    auto pts = line_points(l);
    const auto& u = pts[0];
    const auto& v = pts[1];
    CycNum c30, c21, c12, c03;
    for (int i = 0; i < 4; ++i) {
        c30 += u[i] * u[i] * u[i];
        c21 += CycNum(3) * u[i] * u[i] * v[i];
        c12 += CycNum(3) * u[i] * v[i] * v[i];
        c03 += v[i] * v[i] * v[i];
    }
    return c30.is_zero() && c21.is_zero() && c12.is_zero() && c03.is_zero();
}

std::array<FermatLine, 27> build_fermat_lines() {
    std::array<FermatLine, 27> out;
    int idx = 0;
    for (int g = 0; g < 3; ++g)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                out[idx] = FermatLine{g, a, b};
                if (!line_on_surface(out[idx]))
                    throw structure_error("fermat_lines: line fails the surface equation");
                ++idx;
            }
    return out;
}

} // namespace

const std::array<FermatLine, 27>& fermat_lines() {
    PIC27_COVER("fermat.fermat_lines");
    static const std::array<FermatLine, 27> table = build_fermat_lines();
    return table;
}

bool lines_meet(const FermatLine& l1, const FermatLine& l2) {
    PIC27_COVER("fermat.lines_meet");
    if (l1 == l2) throw std::domain_error("lines_meet: lines must be distinct");
    auto f1 = line_forms(l1);
    auto f2 = line_forms(l2);
    CycMat m(4);
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = f1[0][j];
        m.at(1, j) = f1[1][j];
        m.at(2, j) = f2[0][j];
        m.at(3, j) = f2[1][j];
    }
    return m.det().is_zero();
}

FermatAut FermatAut::identity() {
    return FermatAut{Perm::identity(4), {0, 0, 0}};
}

std::string FermatAut::name() const {
    return sigma.cycle_string() + ";d=" + std::to_string(d[0]) + std::to_string(d[1]) +
           std::to_string(d[2]);
}

bool FermatAut::operator<(const FermatAut& o) const {
    if (sigma != o.sigma) return sigma < o.sigma;
    return d < o.d;
}

CycMat aut_matrix(const FermatAut& g) {
    // diag(1, w^d0, w^d1, w^d2) * P_sigma: entry w^{dd(sigma(j))} at
    // (sigma(j), j).
    std::array<int, 4> dd{0, g.d[0], g.d[1], g.d[2]};
    CycMat m(4);
    for (int j = 0; j < 4; ++j) m.at(g.sigma(j), j) = w(dd[g.sigma(j)]);
    return m;
}

FermatAut aut_compose(const FermatAut& f, const FermatAut& g) {
    Perm sigma = f.sigma * g.sigma;
    Perm finv = f.sigma.inverse();
    std::array<int, 4> ddf{0, f.d[0], f.d[1], f.d[2]};
    std::array<int, 4> ddg{0, g.d[0], g.d[1], g.d[2]};
    std::array<int, 4> dd{};
    for (int i = 0; i < 4; ++i) dd[i] = (ddf[i] + ddg[finv(i)]) % 3;
    int shift = dd[0];
    FermatAut out{sigma, {}};
    for (int i = 1; i < 4; ++i) out.d[i - 1] = ((dd[i] - shift) % 3 + 3) % 3;
    return out;
}

bool preserves_fermat_cubic(const CycMat& m) {
    if (m.size() != 4) throw std::invalid_argument("preserves_fermat_cubic: need a 4x4 matrix");
    // Expand sum_r (sum_j m[r][j] x_j)^3 over the 20 cubic monomials.
    std::map<std::array<int, 3>, CycNum> coeff;
    for (int r = 0; r < 4; ++r)
        for (int j = 0; j < 4; ++j)
            for (int k = j; k < 4; ++k)
                for (int l = k; l < 4; ++l) {
                    int mult = (j == k && k == l) ? 1 : (j == k || k == l) ? 3 : 6;
                    coeff[{j, k, l}] += CycNum(mult) * m.at(r, j) * m.at(r, k) * m.at(r, l);
                }
    CycNum scale;
    for (const auto& [mono, c] : coeff) {
        bool pure_cube = mono[0] == mono[1] && mono[1] == mono[2];
        if (!pure_cube) {
            if (!c.is_zero()) return false;
            continue;
        }
        if (c.is_zero()) return false;
        if (scale.is_zero()) scale = c;
        else if (!(scale == c)) return false;
    }
    return true;
}

namespace {

std::vector<FermatAut> build_aut_group() {
    std::vector<FermatAut> out;
    out.reserve(648);
    std::vector<std::uint8_t> img{0, 1, 2, 3};
    do {
        Perm sigma(img);
        for (int d0 = 0; d0 < 3; ++d0)
            for (int d1 = 0; d1 < 3; ++d1)
                for (int d2 = 0; d2 < 3; ++d2) {
                    FermatAut g{sigma, {d0, d1, d2}};
                    if (!preserves_fermat_cubic(aut_matrix(g)))
                        throw structure_error("fermat_aut_group: element fails the surface equation");
                    out.push_back(g);
                }
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace

const std::vector<FermatAut>& fermat_aut_group() {
    PIC27_COVER("fermat.fermat_aut_group");
    static const std::vector<FermatAut> group = build_aut_group();
    return group;
}

CarterType eigen_type(const FermatAut& g) {
    PIC27_COVER("fermat.eigen_type");
    // Eigenvalue exponents in the 36th roots of unity, one batch per cycle:
    // the len eigenvalues on a cycle with entry product w^s are the len-th
    // roots of w^s, i.e. exponents (12 s + 36 k) / len for k < len.
    std::array<int, 4> dd{0, g.d[0], g.d[1], g.d[2]};
    std::vector<int> expo;
    for (const auto& cyc : g.sigma.cycles()) {
        int s = 0;
        for (int i : cyc) s += dd[i];
        s %= 3;
        int len = static_cast<int>(cyc.size());
        for (int k = 0; k < len; ++k) {
            int num = 12 * s + 36 * k;
            if (num % len != 0)
                throw structure_error("eigen_type: eigenvalue outside the 36th roots of unity");
            expo.push_back((num / len) % 36);
        }
    }
    std::sort(expo.begin(), expo.end());

    static const std::vector<int> a2{0, 0, 12, 12};     // 1, 1, w, w
    static const std::vector<int> a2a2{0, 0, 12, 24};   // 1, 1, w, w^2
    for (int shift = 0; shift < 36; ++shift) {
        std::vector<int> shifted(4);
        for (int i = 0; i < 4; ++i) shifted[i] = (expo[i] + shift) % 36;
        std::sort(shifted.begin(), shifted.end());
        if (shifted == a2) return CarterType::A2;
        if (shifted == a2a2) return CarterType::A2xA2;
    }
    return CarterType::Other;
}

std::vector<FermatAut> a2_census() {
    PIC27_COVER("fermat.a2_census");
    std::vector<FermatAut> found;
    for (const auto& g : fermat_aut_group())
        if (eigen_type(g) == CarterType::A2) found.push_back(g);

    if (found.size() != 6)
        throw structure_error("a2_census: expected exactly 6 elements of type A2");
    for (const auto& g : found) {
        if (!g.sigma.is_identity())
            throw structure_error("a2_census: non-diagonal element of type A2");
        const auto& d = g.d;
        bool pattern = (d[0] == d[1] && d[2] == 0 && d[0] != 0) ||
                       (d[0] == d[2] && d[1] == 0 && d[0] != 0) ||
                       (d[1] == d[2] && d[0] == 0 && d[1] != 0);
        if (!pattern)
            throw structure_error("a2_census: element outside the diagonal patterns");
    }
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = i + 1; j < found.size(); ++j)
            if (!(aut_compose(found[i], found[j]) == aut_compose(found[j], found[i])))
                throw structure_error("a2_census: elements do not commute");
    return found;
}

namespace {

std::array<std::array<bool, 27>, 27> meet_table() {
    std::array<std::array<bool, 27>, 27> meets{};
    const auto& lines = fermat_lines();
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j)
            meets[i][j] = meets[j][i] = lines_meet(lines[i], lines[j]);
    return meets;
}

} // namespace

Marking find_marking() {
    PIC27_COVER("fermat.find_marking");
    static const auto meets = meet_table();

    // Lexicographically first six pairwise skew lines become E1..E6.
    std::array<int, 6> sixer{};
    bool found = false;
    auto rec = [&](auto&& self, int depth, int start) -> bool {
        if (depth == 6) return true;
        for (int c = start; c < 27; ++c) {
            bool ok = true;
            for (int d = 0; d < depth; ++d)
                if (meets[sixer[d]][c]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            sixer[depth] = c;
            if (self(self, depth + 1, c + 1)) return true;
        }
        return false;
    };
    found = rec(rec, 0, 0);
    if (!found) throw structure_error("find_marking: no sixer among the Fermat lines");

    Marking m{};
    std::array<bool, 27> assigned{};
    std::array<bool, 27> used_class{};
    for (int k = 0; k < 6; ++k) {
        m.to_class[sixer[k]] = k; // E_{k+1}
        assigned[sixer[k]] = true;
        used_class[k] = true;
    }
    for (int l = 0; l < 27; ++l) {
        if (assigned[l]) continue;
        std::vector<int> pattern;
        for (int k = 0; k < 6; ++k)
            if (meets[l][sixer[k]]) pattern.push_back(k);
        int cls = -1;
        if (pattern.size() == 5) {
            int missing = 15 - (pattern[0] + pattern[1] + pattern[2] + pattern[3] + pattern[4]);
            cls = line_index(LineClass::Kind::Q, missing + 1);
        } else if (pattern.size() == 2) {
            cls = line_index(LineClass::Kind::L, pattern[0] + 1, pattern[1] + 1);
        } else {
            throw structure_error("find_marking: ambiguous incidence pattern");
        }
        if (used_class[cls]) throw structure_error("find_marking: marking is not injective");
        used_class[cls] = true;
        m.to_class[l] = cls;
    }

    // Full graph-isomorphism check over all 351 pairs.
    const auto& classes = lines27();
    for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j) {
            bool abstract_meet = pairing(classes[m.to_class[i]].vec, classes[m.to_class[j]].vec) == 1;
            if (meets[i][j] != abstract_meet)
                throw structure_error("find_marking: marking does not preserve incidence");
        }
    return m;
}

namespace {

bool point_on_line(const std::array<CycNum, 4>& p, const FermatLine& l) {
    auto forms = line_forms(l);
    for (const auto& f : forms) {
        CycNum dot;
        for (int i = 0; i < 4; ++i) dot += f[i] * p[i];
        if (!dot.is_zero()) return false;
    }
    return true;
}

} // namespace

Perm aut_line_perm(const FermatAut& g) {
    const auto& lines = fermat_lines();
    CycMat m = aut_matrix(g);
    std::vector<std::uint8_t> img(27, 255);
    for (int i = 0; i < 27; ++i) {
        auto pts = line_points(lines[i]);
        std::array<CycNum, 4> u{}, v{};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                u[r] += m.at(r, c) * pts[0][c];
                v[r] += m.at(r, c) * pts[1][c];
            }
        int target = -1;
        for (int j = 0; j < 27; ++j)
            if (point_on_line(u, lines[j]) && point_on_line(v, lines[j])) {
                if (target >= 0)
                    throw structure_error("aut_line_perm: image lies on two lines");
                target = j;
            }
        if (target < 0)
            throw structure_error("aut_line_perm: image is not one of the 27 lines");
        img[i] = static_cast<std::uint8_t>(target);
    }
    return Perm(std::move(img));
}

Perm embed_aut(const Marking& m, const FermatAut& g) {
    PIC27_COVER("fermat.embed_aut");
    Perm on_lines = aut_line_perm(g);
    std::vector<std::uint8_t> img(27);
    for (int i = 0; i < 27; ++i)
        img[m.to_class[i]] = static_cast<std::uint8_t>(m.to_class[on_lines(i)]);
    return Perm(std::move(img));
}

namespace {

Embedding build_embedding() {
    Embedding emb{find_marking(), {}, PermGroup::trivial(27), false, false};
    const auto& auts = fermat_aut_group();
    emb.images.reserve(auts.size());
    for (const auto& g : auts) emb.images.push_back(embed_aut(emb.marking, g));

    std::vector<Perm> sorted = emb.images;
    std::sort(sorted.begin(), sorted.end());
    emb.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    // Homomorphism check against a generating set of (Z/3Z)^3 : S4.
    const std::vector<FermatAut> gens{
        FermatAut{Perm::from_cycles(4, {{0, 1}}), {0, 0, 0}},
        FermatAut{Perm::from_cycles(4, {{0, 1, 2, 3}}), {0, 0, 0}},
        FermatAut{Perm::identity(4), {1, 0, 0}},
        FermatAut{Perm::identity(4), {0, 1, 0}},
        FermatAut{Perm::identity(4), {0, 0, 1}},
    };
    std::map<FermatAut, std::size_t> index;
    for (std::size_t i = 0; i < auts.size(); ++i) index[auts[i]] = i;
    emb.homomorphism = true;
    std::vector<Perm> gen_images;
    for (const auto& gen : gens) gen_images.push_back(embed_aut(emb.marking, gen));
    for (std::size_t i = 0; i < auts.size() && emb.homomorphism; ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) {
            auto it = index.find(aut_compose(auts[i], gens[k]));
            if (it == index.end() ||
                !(emb.images[it->second] == emb.images[i] * gen_images[k])) {
                emb.homomorphism = false;
                break;
            }
        }

    emb.group = PermGroup::closure(gen_images);
    if (emb.group.order() != auts.size() || !(emb.group.elements() == sorted))
        throw structure_error("fermat_embedding: closure of generators differs from the image set");
    for (const auto& p : sorted)
        if (!weyl_e6().contains(p))
            throw structure_error("fermat_embedding: image is not in W(E6)");
    return emb;
}

} // namespace

const Embedding& fermat_embedding() {
    static const Embedding emb = build_embedding();
    return emb;
}

bool proj_equal(const ProjPoint3& u, const ProjPoint3& v) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(u[i] * v[j] == u[j] * v[i])) return false;
    return true;
}

namespace {

CycNum det3(const ProjPoint3& a, const ProjPoint3& b, const ProjPoint3& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::array<ProjPoint3, 6> marked_points_raw() {
    return {ProjPoint3{CycNum(1), CycNum(1), CycNum(1)},
            ProjPoint3{w(1), CycNum(1), w(2)},
            ProjPoint3{w(2), CycNum(1), w(1)},
            ProjPoint3{CycNum(1), CycNum(0), CycNum(0)},
            ProjPoint3{CycNum(0), CycNum(1), CycNum(0)},
            ProjPoint3{CycNum(0), CycNum(0), CycNum(1)}};
}

CycNum veronese_det(const std::array<ProjPoint3, 6>& p) {
    CycMat m(6);
    for (int i = 0; i < 6; ++i) {
        const auto& [x, y, z] = p[i];
        m.at(i, 0) = x * x;
        m.at(i, 1) = y * y;
        m.at(i, 2) = z * z;
        m.at(i, 3) = x * y;
        m.at(i, 4) = x * z;
        m.at(i, 5) = y * z;
    }
    return m.det();
}

} // namespace

std::array<ProjPoint3, 6> plane_marked_points() {
    PIC27_COVER("fermat.plane_marked_points");
    auto p = marked_points_raw();
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k)
                if (det3(p[i], p[j], p[k]).is_zero())
                    throw structure_error("plane_marked_points: three points are collinear");
    if (veronese_det(p).is_zero())
        throw structure_error("plane_marked_points: the six points lie on a conic");
    return p;
}

namespace {

CycMat plane_b() {
    // [x : y : z] -> [z : x : y]
    CycMat m(3);
    m.at(0, 2) = CycNum(1);
    m.at(1, 0) = CycNum(1);
    m.at(2, 1) = CycNum(1);
    return m;
}

CycMat plane_c() {
    CycMat m(3);
    m.at(0, 0) = w(1);
    m.at(1, 1) = CycNum(1);
    m.at(2, 2) = w(2);
    return m;
}

ProjPoint3 apply3(const CycMat& m, const ProjPoint3& p) {
    ProjPoint3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i] += m.at(i, j) * p[j];
    return r;
}

// Eigenvector classes (= projective fixed points) of a 3x3 matrix whose
// eigenvalues all lie in {1, w, w^2} and are simple.
std::vector<ProjPoint3> projective_fixed_points(const CycMat& m) {
    std::vector<ProjPoint3> out;
    for (int k = 0; k < 3; ++k) {
        CycMat shifted = m + CycMat::identity(3).scaled(-w(k));
        auto ker = shifted.kernel();
        if (ker.size() != 1)
            throw structure_error("projective_fixed_points: eigenvalue is not simple");
        out.push_back(ProjPoint3{ker[0][0], ker[0][1], ker[0][2]});
    }
    return out;
}

bool same_projective_set(const std::vector<ProjPoint3>& a, const std::vector<ProjPoint3>& b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& u : a) {
        bool matched = false;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!used[i] && proj_equal(u, b[i])) {
                used[i] = matched = true;
                break;
            }
        if (!matched) return false;
    }
    return true;
}

} // namespace

PlaneReport plane_actions_check() {
    PIC27_COVER("fermat.plane_actions_check");
    PlaneReport rep;
    auto p = plane_marked_points();
    rep.points_general_position = true;
    rep.veronese_det = veronese_det(p).str();

    CycMat b = plane_b();
    CycMat c = plane_c();

    rep.b_fixes_p123 = proj_equal(apply3(b, p[0]), p[0]) && proj_equal(apply3(b, p[1]), p[1]) &&
                       proj_equal(apply3(b, p[2]), p[2]);
    rep.b_cycles_p456 = proj_equal(apply3(b, p[3]), p[4]) && proj_equal(apply3(b, p[4]), p[5]) &&
                        proj_equal(apply3(b, p[5]), p[3]);
    rep.c_fixes_p456 = proj_equal(apply3(c, p[3]), p[3]) && proj_equal(apply3(c, p[4]), p[4]) &&
                       proj_equal(apply3(c, p[5]), p[5]);
    rep.c_cycles_p123 = proj_equal(apply3(c, p[0]), p[1]) && proj_equal(apply3(c, p[1]), p[2]) &&
                        proj_equal(apply3(c, p[2]), p[0]);

    // Projective group generated by b and c.
    std::vector<CycMat> elems{CycMat::identity(3)};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const CycMat* gen : {&b, &c}) {
            CycMat prod = elems[head] * *gen;
            bool seen = false;
            for (const auto& e : elems)
                if (e.proportional(prod)) {
                    seen = true;
                    break;
                }
            if (!seen) elems.push_back(prod);
            if (elems.size() > 32)
                throw structure_error("plane_actions_check: projective group blew up");
        }
    }
    rep.projective_group_order = elems.size();

    auto fix_b = projective_fixed_points(b);
    auto fix_c = projective_fixed_points(c);
    rep.fixed_sets_are_p123_p456 =
        same_projective_set(fix_b, {p[0], p[1], p[2]}) &&
        same_projective_set(fix_c, {p[3], p[4], p[5]});
    rep.fixed_point_sets_disjoint = true;
    for (const auto& u : fix_b)
        for (const auto& v : fix_c)
            if (proj_equal(u, v)) rep.fixed_point_sets_disjoint = false;

    // Matrix lifts: b c b^-1 c^-1 must be a nontrivial cube root of unity
    // times the identity, equivalently b c = w^k c b with k != 0.
    CycMat b_inv(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b_inv.at(i, j) = b.at(j, i); // permutation transpose
    CycMat c_inv(3);
    c_inv.at(0, 0) = w(2);
    c_inv.at(1, 1) = CycNum(1);
    c_inv.at(2, 2) = w(1);
    CycMat comm = b * c * b_inv * c_inv;
    rep.lift_commutator_exponent = -1;
    for (int k = 0; k < 3; ++k)
        if (comm == CycMat::identity(3).scaled(w(k))) rep.lift_commutator_exponent = k;
    if (rep.lift_commutator_exponent >= 0) {
        CycMat bc = b * c;
        CycMat cb_scaled = (c * b).scaled(w(rep.lift_commutator_exponent));
        if (!(bc == cb_scaled)) rep.lift_commutator_exponent = -1;
    }
    return rep;
}

} // namespace pic27
