#include "pic27/piclattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pic27/coverage.hpp"
#include "pic27/errors.hpp"

namespace pic27 {

std::string PicVec::str() const {
    std::string s = "(" + std::to_string(l) + ";";
    for (int i = 0; i < 6; ++i) s += (i ? "," : " ") + std::to_string(e[i]);
    return s + ")";
}

std::int64_t pairing(const PicVec& u, const PicVec& v) {
    PIC27_COVER("piclattice.pairing");
    std::int64_t s = u.l * v.l;
    for (int i = 0; i < 6; ++i) s -= u.e[i] * v.e[i];
    return s;
}

PicVec canonical_class() {
    return PicVec(-3, {1, 1, 1, 1, 1, 1});
}

PicVec basis_l() { return PicVec(1, {}); }

PicVec basis_e(int i) {
    PicVec v;
    v.e[i] = 1;
    return v;
}

std::string LineClass::name() const {
    switch (kind) {
        case Kind::E: return "E" + std::to_string(i);
        case Kind::Q: return "Q" + std::to_string(i);
        case Kind::L: return "L" + std::to_string(i) + std::to_string(j);
    }
    return "?";
}

namespace {

std::array<LineClass, 27> build_lines() {
    std::array<LineClass, 27> out;
    int idx = 0;
    for (int i = 1; i <= 6; ++i) {
        PicVec v;
        v.e[i - 1] = 1;
        out[idx++] = LineClass{LineClass::Kind::E, i, 0, v};
    }
    for (int i = 1; i <= 6; ++i) {
        PicVec v(2, {-1, -1, -1, -1, -1, -1});
        v.e[i - 1] = 0;
        out[idx++] = LineClass{LineClass::Kind::Q, i, 0, v};
    }
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            PicVec v(1, {});
            v.e[i - 1] = -1;
            v.e[j - 1] = -1;
            out[idx++] = LineClass{LineClass::Kind::L, i, j, v};
        }
    return out;
}

} // namespace

const std::array<LineClass, 27>& lines27() {
    PIC27_COVER("piclattice.lines27");
    static const std::array<LineClass, 27> table = build_lines();
    return table;
}

bool is_line_class(const PicVec& v) {
    static const PicVec k = canonical_class();
    return pairing(v, v) == -1 && pairing(v, k) == -1;
}

std::vector<PicVec> solve_line_classes() {
    // For v = (l; e) with v^2 = -1 and v.K = -1 one gets sum e_i = 1 - 3l
    // and sum e_i^2 = l^2 + 1. Cauchy-Schwarz, (1-3l)^2 <= 6(l^2+1), pins
    // l to {0, 1, 2}, and then |e_i| <= 2, so the box below is exhaustive.
    std::vector<PicVec> out;
    PicVec v;
    for (v.l = 0; v.l <= 2; ++v.l)
        for (v.e[0] = -2; v.e[0] <= 2; ++v.e[0])
            for (v.e[1] = -2; v.e[1] <= 2; ++v.e[1])
                for (v.e[2] = -2; v.e[2] <= 2; ++v.e[2])
                    for (v.e[3] = -2; v.e[3] <= 2; ++v.e[3])
                        for (v.e[4] = -2; v.e[4] <= 2; ++v.e[4])
                            for (v.e[5] = -2; v.e[5] <= 2; ++v.e[5])
                                if (is_line_class(v)) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

const std::map<PicVec, int>& line_lookup() {
    static const std::map<PicVec, int> lut = [] {
        std::map<PicVec, int> m;
        for (int i = 0; i < 27; ++i) m[lines27()[i].vec] = i;
        return m;
    }();
    return lut;
}

} // namespace

int line_index(const PicVec& v) {
    auto it = line_lookup().find(v);
    return it == line_lookup().end() ? -1 : it->second;
}

int line_index(LineClass::Kind kind, int i, int j) {
    switch (kind) {
        case LineClass::Kind::E: return i - 1;
        case LineClass::Kind::Q: return 6 + (i - 1);
        case LineClass::Kind::L: {
            if (i > j) std::swap(i, j);
            // lexicographic rank of the pair (i, j), 1 <= i < j <= 6
            int rank = 0;
            for (int a = 1; a < i; ++a) rank += 6 - a;
            rank += j - i - 1;
            return 12 + rank;
        }
    }
    return -1;
}

bool is_sixer(const std::array<int, 6>& idx) {
    PIC27_COVER("piclattice.is_sixer");
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            if (idx[a] == idx[b]) return false;
            if (pairing(lines27()[idx[a]].vec, lines27()[idx[b]].vec) != 0) return false;
        }
    return true;
}

const std::vector<std::array<int, 6>>& all_sixers() {
    static const std::vector<std::array<int, 6>> sixers = [] {
        std::vector<std::array<int, 6>> out;
        std::array<int, 6> pick{};
        // depth-first over ascending indices, pruning on the first meeting pair
        auto rec = [&](auto&& self, int depth, int start) -> void {
            if (depth == 6) {
                out.push_back(pick);
                return;
            }
            for (int c = start; c < 27; ++c) {
                bool ok = true;
                for (int d = 0; d < depth; ++d)
                    if (pairing(lines27()[pick[d]].vec, lines27()[c].vec) != 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                pick[depth] = c;
                self(self, depth + 1, c + 1);
            }
        };
        rec(rec, 0, 0);
        return out;
    }();
    return sixers;
}

int unique_transversal(const std::array<int, 5>& five) {
    PIC27_COVER("piclattice.unique_transversal");
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            if (five[a] == five[b])
                throw std::domain_error("unique_transversal: repeated line");
            if (pairing(lines27()[five[a]].vec, lines27()[five[b]].vec) != 0)
                throw std::domain_error("unique_transversal: input lines are not pairwise skew");
        }
    int found = -1;
    for (int c = 0; c < 27; ++c) {
        bool meets_all = true;
        for (int a = 0; a < 5; ++a)
            if (pairing(lines27()[c].vec, lines27()[five[a]].vec) != 1) {
                meets_all = false;
                break;
            }
        if (!meets_all) continue;
        if (found >= 0)
            throw structure_error("unique_transversal: several transversals");
        found = c;
    }
    if (found < 0) throw structure_error("unique_transversal: no transversal");
    return found;
}

LatticeMap LatticeMap::identity() {
    LatticeMap id;
    for (int i = 0; i < 7; ++i) id.m[i][i] = 1;
    return id;
}

PicVec LatticeMap::apply(const PicVec& v) const {
    std::array<std::int64_t, 7> in{v.l, v.e[0], v.e[1], v.e[2], v.e[3], v.e[4], v.e[5]};
    std::array<std::int64_t, 7> out{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            out[i] += m[i][j] * in[j];
    return PicVec(out[0], {out[1], out[2], out[3], out[4], out[5], out[6]});
}

LatticeMap LatticeMap::operator*(const LatticeMap& o) const {
    LatticeMap r;
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k) {
            if (m[i][k] == 0) continue;
            for (int j = 0; j < 7; ++j)
                r.m[i][j] += m[i][k] * o.m[k][j];
        }
    return r;
}

bool LatticeMap::fixes_canonical_class() const {
    return apply(canonical_class()) == canonical_class();
}

bool LatticeMap::preserves_pairing() const {
    std::array<PicVec, 7> basis{basis_l(), basis_e(0), basis_e(1), basis_e(2),
                                basis_e(3), basis_e(4), basis_e(5)};
    std::array<PicVec, 7> image;
    for (int i = 0; i < 7; ++i) image[i] = apply(basis[i]);
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j)
            if (pairing(image[i], image[j]) != pairing(basis[i], basis[j])) return false;
    return true;
}

std::int64_t LatticeMap::det() const {
    // Bareiss fraction-free elimination; all divisions are exact.
    std::array<std::array<std::int64_t, 7>, 7> a = m;
    std::int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k < 6; ++k) {
        if (a[k][k] == 0) {
            int p = k + 1;
            while (p < 7 && a[p][k] == 0) ++p;
            if (p == 7) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < 7; ++i)
            for (int j = k + 1; j < 7; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[6][6];
}

LatticeMap extend_to_weyl(const std::array<int, 6>& images) {
    PIC27_COVER("piclattice.extend_to_weyl");
    if (!is_sixer(images))
        throw std::domain_error("extend_to_weyl: images of E1..E6 must be a sixer");

    // K fixed forces image(L) = (-K + sum image(E_i)) / 3.
    PicVec sum = -canonical_class();
    for (int i = 0; i < 6; ++i) sum = sum + lines27()[images[i]].vec;
    PicVec img_l;
    if (sum.l % 3 != 0) throw structure_error("extend_to_weyl: image of L is not integral");
    img_l.l = sum.l / 3;
    for (int i = 0; i < 6; ++i) {
        if (sum.e[i] % 3 != 0) throw structure_error("extend_to_weyl: image of L is not integral");
        img_l.e[i] = sum.e[i] / 3;
    }

    LatticeMap map;
    auto set_col = [&map](int col, const PicVec& v) {
        map.m[0][col] = v.l;
        for (int r = 0; r < 6; ++r) map.m[r + 1][col] = v.e[r];
    };
    set_col(0, img_l);
    for (int i = 0; i < 6; ++i) set_col(i + 1, lines27()[images[i]].vec);

    if (!map.fixes_canonical_class())
        throw structure_error("extend_to_weyl: map does not fix K");
    if (!map.preserves_pairing())
        throw structure_error("extend_to_weyl: map does not preserve the pairing");
    std::int64_t d = map.det();
    if (d != 1 && d != -1)
        throw structure_error("extend_to_weyl: map is not unimodular");
    return map;
}

Perm line_perm(const LatticeMap& map) {
    std::vector<std::uint8_t> img(27);
    for (int i = 0; i < 27; ++i) {
        int target = line_index(map.apply(lines27()[i].vec));
        if (target < 0)
            throw structure_error("line_perm: image of a line class is not a line class");
        img[i] = static_cast<std::uint8_t>(target);
    }
    return Perm(std::move(img));
}

} // namespace pic27
