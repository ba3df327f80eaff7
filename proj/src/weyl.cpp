#include "pic27/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pic27/coverage.hpp"
#include "pic27/errors.hpp"

namespace pic27 {

std::vector<PicVec> roots(int n) {
    PIC27_COVER("weyl.roots");
    if (n != 4 && n != 5 && n != 6)
        throw std::invalid_argument("roots: n must be 4, 5 or 6");
    PicVec k(-3, {});
    for (int i = 0; i < n; ++i) k.e[i] = 1;

    // v^2 = -2, v.K_n = 0 give sum e_i = -3l and sum e_i^2 = l^2 + 2, so
    // 9l^2 <= n(l^2 + 2) forces |l| <= 2 and |e_i| <= 2 for n <= 6.
    std::vector<PicVec> out;
    PicVec v;
    std::array<std::int64_t, 6> lo{}, hi{};
    for (int i = 0; i < 6; ++i) {
        lo[i] = i < n ? -2 : 0;
        hi[i] = i < n ? 2 : 0;
    }
    for (v.l = -2; v.l <= 2; ++v.l)
        for (v.e[0] = lo[0]; v.e[0] <= hi[0]; ++v.e[0])
            for (v.e[1] = lo[1]; v.e[1] <= hi[1]; ++v.e[1])
                for (v.e[2] = lo[2]; v.e[2] <= hi[2]; ++v.e[2])
                    for (v.e[3] = lo[3]; v.e[3] <= hi[3]; ++v.e[3])
                        for (v.e[4] = lo[4]; v.e[4] <= hi[4]; ++v.e[4])
                            for (v.e[5] = lo[5]; v.e[5] <= hi[5]; ++v.e[5])
                                if (pairing(v, v) == -2 && pairing(v, k) == 0)
                                    out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

LatticeMap reflection_map(const PicVec& root) {
    if (pairing(root, root) != -2)
        throw std::domain_error("reflection_map: not a root (norm must be -2)");
    LatticeMap map;
    std::array<PicVec, 7> basis{basis_l(), basis_e(0), basis_e(1), basis_e(2),
                                basis_e(3), basis_e(4), basis_e(5)};
    for (int col = 0; col < 7; ++col) {
        PicVec img = basis[col] + root.scaled(pairing(basis[col], root));
        map.m[0][col] = img.l;
        for (int r = 0; r < 6; ++r) map.m[r + 1][col] = img.e[r];
    }
    return map;
}

Perm reflection(const PicVec& root) {
    PIC27_COVER("weyl.reflection");
    return line_perm(reflection_map(root));
}

namespace {

// Action of a lattice map on an indexed vector set (used for the root-set
// actions of W(A4) and W(D5)).
Perm vector_set_perm(const LatticeMap& map, const std::vector<PicVec>& vecs) {
    std::map<PicVec, int> index;
    for (std::size_t i = 0; i < vecs.size(); ++i) index[vecs[i]] = static_cast<int>(i);
    std::vector<std::uint8_t> img(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        auto it = index.find(map.apply(vecs[i]));
        if (it == index.end())
            throw structure_error("vector_set_perm: image leaves the set");
        img[i] = static_cast<std::uint8_t>(it->second);
    }
    return Perm(std::move(img));
}

} // namespace

PermGroup generate(int n) {
    PIC27_COVER("weyl.generate");
    std::vector<PicVec> rts = roots(n);
    std::vector<Perm> gens;
    for (const auto& r : rts) {
        Perm p = (n == 6) ? reflection(r) : vector_set_perm(reflection_map(r), rts);
        if (std::find(gens.begin(), gens.end(), p) == gens.end())
            gens.push_back(p);
    }
    return PermGroup::closure(gens);
}

const PermGroup& weyl_e6() {
    static const PermGroup w = generate(6);
    return w;
}

WeylElem elem_from_line_perm(const Perm& p) {
    if (p.degree() != 27)
        throw std::invalid_argument("elem_from_line_perm: need a 27-line permutation");
    std::array<int, 6> images{};
    for (int i = 0; i < 6; ++i) images[i] = p(i);
    LatticeMap map = extend_to_weyl(images);
    WeylElem g{p, map};
    if (!(line_perm(map) == p))
        throw structure_error("elem_from_line_perm: permutation is not induced by a lattice map");
    return g;
}

WeylElem standard_s6(const Perm& p) {
    PIC27_COVER("weyl.standard_s6");
    if (p.degree() != 6)
        throw std::invalid_argument("standard_s6: need a degree-6 permutation");
    std::array<int, 6> images{};
    for (int i = 0; i < 6; ++i) images[i] = p(i); // E_i -> E_{p(i)}
    LatticeMap map = extend_to_weyl(images);
    return WeylElem{line_perm(map), map};
}

const char* carter_name(CarterType t) {
    switch (t) {
        case CarterType::A2: return "A2";
        case CarterType::A2xA2: return "A2xA2";
        case CarterType::Other: return "Other";
    }
    return "?";
}

std::array<std::int64_t, 8> char_poly7(const LatticeMap& m) {
    // Faddeev-LeVerrier over the integers; the divisions are exact. Entries
    // of Weyl matrices are small (|m| <= 5), so intermediate values stay far
    // below the int64 range.
    std::array<std::int64_t, 8> coeff{};
    coeff[7] = 1;
    std::array<std::array<std::int64_t, 7>, 7> mk = m.m;
    std::int64_t ck = 0;
    for (int k = 1; k <= 7; ++k) {
        if (k > 1) {
            std::array<std::array<std::int64_t, 7>, 7> tmp = mk;
            for (int i = 0; i < 7; ++i) tmp[i][i] += ck;
            std::array<std::array<std::int64_t, 7>, 7> next{};
            for (int i = 0; i < 7; ++i)
                for (int l = 0; l < 7; ++l) {
                    if (m.m[i][l] == 0) continue;
                    for (int j = 0; j < 7; ++j) next[i][j] += m.m[i][l] * tmp[l][j];
                }
            mk = next;
        }
        std::int64_t tr = 0;
        for (int i = 0; i < 7; ++i) tr += mk[i][i];
        if (tr % k != 0)
            throw structure_error("char_poly7: non-integral trace division");
        ck = -tr / k;
        coeff[7 - k] = ck;
    }
    return coeff;
}

namespace {

// (t-1)^a * (t^2+t+1)^b as integer coefficients, lowest degree first.
std::vector<std::int64_t> cyclotomic_product(int a, int b) {
    std::vector<std::int64_t> poly{1};
    auto mul = [&poly](const std::vector<std::int64_t>& f) {
        std::vector<std::int64_t> r(poly.size() + f.size() - 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j)
                r[i + j] += poly[i] * f[j];
        poly = std::move(r);
    };
    for (int i = 0; i < a; ++i) mul({-1, 1});
    for (int i = 0; i < b; ++i) mul({1, 1, 1});
    return poly;
}

} // namespace

CarterType carter_type(const WeylElem& g) {
    PIC27_COVER("weyl.carter_type");
    std::array<std::int64_t, 8> c7 = char_poly7(g.mat);

    // K spans an invariant line with eigenvalue 1, so the full
    // characteristic polynomial is (t-1) times the one on the orthogonal
    // complement of K; peel that factor off by synthetic division.
    std::array<std::int64_t, 7> c6{};
    std::int64_t carry = 0;
    for (int i = 7; i >= 1; --i) {
        carry += c7[i];
        c6[i - 1] = carry;
    }
    if (carry + c7[0] != 0)
        throw structure_error("carter_type: 1 is not an eigenvalue");

    static const std::vector<std::int64_t> a2 = cyclotomic_product(4, 1);
    static const std::vector<std::int64_t> a2a2 = cyclotomic_product(2, 2);
    if (std::equal(c6.begin(), c6.end(), a2.begin(), a2.end())) return CarterType::A2;
    if (std::equal(c6.begin(), c6.end(), a2a2.begin(), a2a2.end())) return CarterType::A2xA2;
    return CarterType::Other;
}

CarterType carter_type(const Perm& line_perm) {
    return carter_type(elem_from_line_perm(line_perm));
}

std::array<PicVec, 6> simple_roots_e6() {
    std::array<PicVec, 6> s{};
    for (int i = 0; i < 5; ++i) {
        s[i].e[i] = 1;
        s[i].e[i + 1] = -1;
    }
    s[5].l = 1;
    s[5].e[0] = s[5].e[1] = s[5].e[2] = -1;
    return s;
}

WeylElem build_r() {
    PIC27_COVER("weyl.build_r");
    std::array<int, 6> images{
        line_index(LineClass::Kind::Q, 1),
        line_index(LineClass::Kind::Q, 2),
        line_index(LineClass::Kind::Q, 3),
        line_index(LineClass::Kind::L, 5, 6),
        line_index(LineClass::Kind::L, 4, 6),
        line_index(LineClass::Kind::L, 4, 5),
    };
    LatticeMap map = extend_to_weyl(images);
    return WeylElem{line_perm(map), map};
}

std::vector<Perm> set_preservers() {
    std::vector<Perm> out;
    auto in_set = [](int x, int lo, int hi) { return x >= lo && x <= hi; };
    for (const auto& g : weyl_e6().elements()) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) ok = in_set(g(i), 0, 2);
        for (int i = 3; i < 6 && ok; ++i) ok = in_set(g(i), 3, 5);
        if (ok) out.push_back(g);
    }
    return out;
}

bool commutes_with_set_preservers(const WeylElem& r) {
    PIC27_COVER("weyl.commutes_with_set_preservers");
    for (const auto& g : set_preservers())
        if (!(g * r.lines == r.lines * g)) return false;
    return true;
}

} // namespace pic27
