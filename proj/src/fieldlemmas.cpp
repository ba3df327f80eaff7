#include "pic27/fieldlemmas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pic27/coverage.hpp"
#include "pic27/errors.hpp"
#include "pic27/permgroup.hpp"
#include "pic27/radical.hpp"
#include "pic27/rng.hpp"

namespace pic27 {

namespace {

int quad_index(const ExponentQuad& q) {
    return ((q[0] * 3 + q[1]) * 3 + q[2]) * 3 + q[3];
}

ExponentQuad quad_from_index(int idx) {
    ExponentQuad q{};
    q[3] = idx % 3; idx /= 3;
    q[2] = idx % 3; idx /= 3;
    q[1] = idx % 3; idx /= 3;
    q[0] = idx % 3;
    return q;
}

ExponentQuad quad_add(const ExponentQuad& p, const ExponentQuad& q) {
    return {(p[0] + q[0]) % 3, (p[1] + q[1]) % 3, (p[2] + q[2]) % 3, (p[3] + q[3]) % 3};
}

bool cond1(const ExponentQuad& q) {
    return (q[0] + q[1] + q[2] + q[3]) % 3 == 0;
}

bool cond2(const ExponentQuad& q, bool has_omega) {
    if (has_omega) return true; // every element of Q(w) is admissible
    CycNum trace;
    for (int i : q) trace += CycNum::omega_pow(i);
    return trace.is_rational();
}

} // namespace

RepLemmaReport rep_lemma_check(bool has_omega) {
    PIC27_COVER("fieldlemmas.rep_lemma_check");
    RepLemmaReport rep;
    std::vector<ExponentQuad> cond1_set, cond12_set;
    for (int idx = 0; idx < 81; ++idx) {
        ExponentQuad q = quad_from_index(idx);
        if (!cond1(q)) continue;
        cond1_set.push_back(q);
        if (cond2(q, has_omega)) cond12_set.push_back(q);
    }
    rep.cond1_count = static_cast<int>(cond1_set.size());
    rep.cond12_count = static_cast<int>(cond12_set.size());
    rep.witness_satisfies_cond1 = cond1(rep.witness);
    rep.witness_fails_cond2 = !cond2(rep.witness, has_omega);

    // The determinant-condition quads under addition, realized as
    // translations of all 81 quads.
    std::vector<Perm> translations;
    for (const auto& q : cond1_set) {
        std::vector<std::uint8_t> img(81);
        for (int idx = 0; idx < 81; ++idx)
            img[idx] = static_cast<std::uint8_t>(quad_index(quad_add(quad_from_index(idx), q)));
        translations.push_back(Perm(std::move(img)));
    }
    PermGroup group = PermGroup::closure(translations);
    rep.cond1_group_order = group.order();
    rep.cond1_group_rank = group.is_elementary_abelian_3().value_or(-1);

    // A group of order 27 has itself as its only order-27 subgroup, so the
    // witness quad (inside the group, outside the admissible subset) rules
    // out every order-27 subgroup of admissible matrices.
    rep.no_order27_subgroup_in_cond2 =
        rep.cond1_group_order == 27 && rep.witness_satisfies_cond1 && rep.witness_fails_cond2;

    rep.cond2_subset_not_closed = false;
    for (std::size_t i = 0; i < cond12_set.size() && !rep.cond2_subset_not_closed; ++i)
        for (std::size_t j = 0; j < cond12_set.size(); ++j) {
            ExponentQuad sum = quad_add(cond12_set[i], cond12_set[j]);
            if (!cond2(sum, has_omega)) {
                rep.nonclosure_a = cond12_set[i];
                rep.nonclosure_b = cond12_set[j];
                rep.cond2_subset_not_closed = true;
                break;
            }
        }
    return rep;
}

RadCubicReport rad_cubic_classification(const Rat& alpha, int samples, std::uint64_t seed) {
    PIC27_COVER("fieldlemmas.rad_cubic_classification");
    if (alpha.is_zero() || rat_is_cube(alpha))
        throw std::domain_error("rad_cubic_classification: alpha must be a nonzero non-cube");

    RadCubicReport rep;
    rep.samples = samples;
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        // Cycle through all sparsity patterns so both sides of the
        // equivalence are exercised.
        int pattern = i % 8;
        Rat u = (pattern & 1) ? rng.nonzero_rat() : Rat(0);
        Rat v = (pattern & 2) ? rng.nonzero_rat() : Rat(0);
        Rat w = (pattern & 4) ? rng.nonzero_rat() : Rat(0);
        int nonzero = ((pattern & 1) != 0) + ((pattern & 2) != 0) + ((pattern & 4) != 0);

        RadCubicNum y(alpha, u, v, w);
        bool expect_rational = nonzero <= 1;
        if (y.cube().is_rational() != expect_rational) rep.rationality_iff_monomial = false;
        if (y.trace() != Rat(3) * u) rep.trace_identity = false;

        // Hand-expanded cube of v x + w x^2, reduced with x^3 = alpha:
        // v^3 a + w^3 a^2 + 3a v^2 w x + 3a v w^2 x^2.
        RadCubicNum pure(alpha, Rat(0), v, w);
        RadCubicNum expanded(alpha,
                             v * v * v * alpha + w * w * w * alpha * alpha,
                             Rat(3) * alpha * v * v * w,
                             Rat(3) * alpha * v * w * w);
        if (pure.cube() != expanded) rep.expansion_identity = false;
    }
    return rep;
}

Pgl2Report pgl2_diagonal_check() {
    PIC27_COVER("fieldlemmas.pgl2_diagonal_check");
    Pgl2Report rep;
    // diag(w^a, w^b) modulo scalars: normalize to (0, b - a).
    auto cls = [](int a, int b) { return ((b - a) % 3 + 3) % 3; };
    std::array<bool, 3> seen{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) seen[cls(a, b)] = true;
    rep.class_count = static_cast<int>(std::count(seen.begin(), seen.end(), true));

    // Class addition: <(0,1)> covers everything and (0,1) has order 3.
    rep.classes_form_z3 = rep.class_count == 3 && cls(0, 1) != 0 &&
                          (cls(0, 1) + cls(0, 1)) % 3 != 0 &&
                          (cls(0, 1) + cls(0, 1) + cls(0, 1)) % 3 == 0;
    rep.diag_1_w_order3 = cls(0, 1) != 0 && (3 * cls(0, 1)) % 3 == 0;
    rep.diag_w_w_trivial = cls(1, 1) == 0;
    return rep;
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int mod_pow(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

int primitive_root(int p) {
    std::vector<int> qs = prime_factors(p - 1);
    for (int g = 2; g < p; ++g) {
        bool ok = true;
        for (int q : qs)
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw structure_error("primitive_root: none found"); // unreachable for prime p
}

} // namespace

bool prime_orbit_check(int p) {
    PIC27_COVER("fieldlemmas.prime_orbit_check");
    if (p < 5 || p >= 10000 || !is_prime(p))
        throw std::domain_error("prime_orbit_check: need a prime with 5 <= p < 10^4");

    // The subgroups of the cyclic group (Z/pZ)* are exactly the sets of
    // d-th powers for divisors d of p-1; enumerate each and partition the
    // nonzero residues into multiplication orbits.
    int g = primitive_root(p);
    bool orbit3 = false;
    for (int d = 1; d <= p - 1; ++d) {
        if ((p - 1) % d != 0) continue;
        std::vector<int> subgroup;
        int step = mod_pow(g, (p - 1) / d, p);
        int cur = 1;
        for (int k = 0; k < d; ++k) {
            subgroup.push_back(cur);
            cur = static_cast<int>(static_cast<long>(cur) * step % p);
        }
        std::vector<bool> visited(p, false);
        for (int x = 1; x < p; ++x) {
            if (visited[x]) continue;
            int size = 0;
            for (int h : subgroup) {
                int y = static_cast<int>(static_cast<long>(x) * h % p);
                if (!visited[y]) {
                    visited[y] = true;
                    ++size;
                }
            }
            if (size == 3) orbit3 = true;
        }
    }
    return orbit3;
}

SymbolAlg::SymbolAlg(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero() || b_.is_zero())
        throw std::domain_error("SymbolAlg: parameters must be nonzero");
}

SymbolAlg::Elt SymbolAlg::basis(int i, int j) {
    Elt e{};
    e[3 * i + j] = CycNum(1);
    return e;
}

SymbolAlg::Elt SymbolAlg::scaled(const Elt& e, const CycNum& c) {
    Elt r{};
    for (int k = 0; k < 9; ++k) r[k] = e[k] * c;
    return r;
}

SymbolAlg::Elt SymbolAlg::add(const Elt& e, const Elt& f) {
    Elt r{};
    for (int k = 0; k < 9; ++k) r[k] = e[k] + f[k];
    return r;
}

bool SymbolAlg::proportional(const Elt& e, const Elt& f) {
    CycNum c;
    for (int k = 0; k < 9; ++k) {
        if (e[k].is_zero() != f[k].is_zero()) return false;
        if (!e[k].is_zero() && c.is_zero()) c = f[k] / e[k];
    }
    if (c.is_zero()) return true;
    for (int k = 0; k < 9; ++k)
        if (!(e[k] * c == f[k])) return false;
    return true;
}

SymbolAlg::Elt SymbolAlg::x_inv() const {
    return scaled(basis(2, 0), CycNum(a_.inverse()));
}

SymbolAlg::Elt SymbolAlg::y_inv() const {
    return scaled(basis(0, 2), CycNum(b_.inverse()));
}

SymbolAlg::Elt SymbolAlg::mul(const Elt& e, const Elt& f) const {
    // (x^i y^j)(x^k y^l) = w^{2jk} a^[(i+k)/3] b^[(j+l)/3] x^{(i+k)%3} y^{(j+l)%3},
    // from y x = w^2 x y and the cube relations.
    Elt r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const CycNum& ce = e[3 * i + j];
            if (ce.is_zero()) continue;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const CycNum& cf = f[3 * k + l];
                    if (cf.is_zero()) continue;
                    CycNum coeff = ce * cf * CycNum::omega_pow(2 * j * k);
                    if (i + k >= 3) coeff = coeff * CycNum(a_);
                    if (j + l >= 3) coeff = coeff * CycNum(b_);
                    r[3 * ((i + k) % 3) + (j + l) % 3] += coeff;
                }
        }
    return r;
}

bool SymbolAlg::is_scalar(const Elt& e) const {
    for (int k = 1; k < 9; ++k)
        if (!e[k].is_zero()) return false;
    return true;
}

int SymbolAlg::center_dimension() const {
    // z is central iff it commutes with the generators x and y; set up the
    // 18x9 linear system over Q(w) and row-reduce it exactly.
    std::vector<std::array<CycNum, 9>> rows;
    for (const Elt& gen : {x(), y()}) {
        // row block: coefficients of (e_k * gen - gen * e_k) per basis slot
        std::array<Elt, 9> cols;
        for (int k = 0; k < 9; ++k) {
            Elt ek{};
            ek[k] = CycNum(1);
            Elt diff = add(mul(ek, gen), scaled(mul(gen, ek), CycNum(-1)));
            cols[k] = diff;
        }
        for (int slot = 0; slot < 9; ++slot) {
            std::array<CycNum, 9> row{};
            for (int k = 0; k < 9; ++k) row[k] = cols[k][slot];
            rows.push_back(row);
        }
    }
    // rank of the 18x9 system
    int rank = 0;
    for (int col = 0; col < 9; ++col) {
        int pivot = -1;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        CycNum inv = rows[rank][col].inverse();
        for (int c = 0; c < 9; ++c) rows[rank][c] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][col].is_zero()) continue;
            CycNum f = rows[r][col];
            for (int c = 0; c < 9; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return 9 - rank;
}

SymbolReport symbol_algebra_check(const Rat& a, const Rat& b) {
    PIC27_COVER("fieldlemmas.symbol_algebra_check");
    SymbolAlg alg(a, b);
    SymbolReport rep;

    rep.associative = true;
    for (int i = 0; i < 9 && rep.associative; ++i)
        for (int j = 0; j < 9 && rep.associative; ++j)
            for (int k = 0; k < 9; ++k) {
                SymbolAlg::Elt ei = SymbolAlg::basis(i / 3, i % 3);
                SymbolAlg::Elt ej = SymbolAlg::basis(j / 3, j % 3);
                SymbolAlg::Elt ek = SymbolAlg::basis(k / 3, k % 3);
                if (!(alg.mul(alg.mul(ei, ej), ek) == alg.mul(ei, alg.mul(ej, ek)))) {
                    rep.associative = false;
                    break;
                }
            }

    rep.center_dim = alg.center_dimension();

    SymbolAlg::Elt x = alg.x(), y = alg.y();
    rep.conjugation_relation =
        alg.mul(alg.mul(x, y), alg.x_inv()) == SymbolAlg::scaled(y, CycNum::omega());

    SymbolAlg::Elt x3 = alg.mul(alg.mul(x, x), x);
    rep.x_cubed_central_scalar = x3 == SymbolAlg::scaled(alg.one(), CycNum(a));
    for (int k = 0; k < 9 && rep.x_cubed_central_scalar; ++k) {
        SymbolAlg::Elt ek = SymbolAlg::basis(k / 3, k % 3);
        SymbolAlg::Elt want = SymbolAlg::scaled(ek, CycNum(a));
        if (!(alg.mul(x3, ek) == want && alg.mul(ek, x3) == want))
            rep.x_cubed_central_scalar = false;
    }

    // The classes of x^i y^j modulo scalars: 9 distinct commuting classes,
    // each nontrivial one of order 3.
    rep.projective_group_z3sq = true;
    for (int i = 0; i < 3 && rep.projective_group_z3sq; ++i)
        for (int j = 0; j < 3; ++j) {
            SymbolAlg::Elt e = SymbolAlg::basis(i, j);
            SymbolAlg::Elt cube = alg.mul(alg.mul(e, e), e);
            if (!alg.is_scalar(cube)) { rep.projective_group_z3sq = false; break; }
            if ((i || j) && alg.is_scalar(e)) { rep.projective_group_z3sq = false; break; }
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    SymbolAlg::Elt f = SymbolAlg::basis(k, l);
                    if (!SymbolAlg::proportional(alg.mul(e, f), alg.mul(f, e))) {
                        rep.projective_group_z3sq = false;
                        break;
                    }
                }
        }

    rep.commutator_is_omega =
        alg.mul(alg.mul(alg.mul(x, y), alg.x_inv()), alg.y_inv()) ==
        SymbolAlg::scaled(alg.one(), CycNum::omega());
    return rep;
}

} // namespace pic27
