#pragma once

#include <string>
#include <vector>

#include "pic27/coverage.hpp"
#include "pic27/rational.hpp"

namespace pic27 {

/**
 * CycNum: element a + b*w of the field Q(w), where w is a primitive cube
 * root of unity, so w^2 = -1 - w.
 *
 * The basis {1, w} makes the representation unique, hence equality and the
 * rationality test are coefficient comparisons. The conjugate of a + b*w
 * is (a - b) - b*w and the norm a^2 - a*b + b^2 is nonnegative, vanishing
 * only at zero.
 */
class CycNum {
public:
    CycNum() = default;
    CycNum(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}
    CycNum(int n) : a_(n) {}
    CycNum(long n) : a_(n) {}
    CycNum(const Rat& r) : a_(r) {}

    static CycNum omega() { return CycNum(Rat(0), Rat(1)); }
    static CycNum omega_pow(long k) {
        long r = ((k % 3) + 3) % 3;
        if (r == 0) return CycNum(1);
        if (r == 1) return omega();
        return CycNum(Rat(-1), Rat(-1)); // w^2 = -1 - w
    }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const {
        PIC27_COVER("exact.cyc_is_rational");
        return b_.is_zero();
    }

    CycNum conj() const { return CycNum(a_ - b_, -b_); }

    // N(a + b*w) = a^2 - a*b + b^2.
    Rat norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    CycNum operator-() const { return CycNum(-a_, -b_); }
    CycNum operator+(const CycNum& o) const { return CycNum(a_ + o.a_, b_ + o.b_); }
    CycNum operator-(const CycNum& o) const { return CycNum(a_ - o.a_, b_ - o.b_); }

    // (a1 + b1 w)(a2 + b2 w) = a1 a2 - b1 b2 + (a1 b2 + a2 b1 - b1 b2) w.
    CycNum operator*(const CycNum& o) const {
        PIC27_COVER("exact.cyc_mul");
        Rat bb = b_ * o.b_;
        return CycNum(a_ * o.a_ - bb, a_ * o.b_ + b_ * o.a_ - bb);
    }

    CycNum inverse() const {
        if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
        Rat n = norm();
        CycNum c = conj();
        return CycNum(c.a_ / n, c.b_ / n);
    }
    CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }

    CycNum& operator+=(const CycNum& o) { a_ += o.a_; b_ += o.b_; return *this; }
    CycNum& operator-=(const CycNum& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    CycNum& operator*=(const CycNum& o) { *this = *this * o; return *this; }

    bool operator==(const CycNum& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str();
        if (b_ == Rat(1)) s += s.empty() ? "w" : "+w";
        else if (b_ == Rat(-1)) s += "-w";
        else {
            if (!s.empty() && b_.sign() > 0) s += "+";
            s += b_.str() + "w";
        }
        return s;
    }

private:
    Rat a_, b_;
};

/**
 * PolyCyc: dense univariate polynomial over Q(w), coefficients stored
 * lowest degree first. The zero polynomial has an empty coefficient
 * vector; otherwise the leading coefficient is nonzero.
 */
class PolyCyc {
public:
    PolyCyc() = default;
    explicit PolyCyc(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static PolyCyc constant(const CycNum& v) { return PolyCyc({v}); }
    // c0 + c1 x + ... given as an initializer for tests and tables.
    static PolyCyc of(std::initializer_list<CycNum> cs) {
        return PolyCyc(std::vector<CycNum>(cs));
    }
    // x - root
    static PolyCyc linear_root(const CycNum& root) { return PolyCyc({-root, CycNum(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<CycNum>& coeffs() const { return c_; }
    CycNum coeff(std::size_t i) const { return i < c_.size() ? c_[i] : CycNum(); }
    bool is_monic() const { return !c_.empty() && c_.back() == CycNum(1); }

    PolyCyc operator+(const PolyCyc& o) const {
        std::vector<CycNum> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return PolyCyc(std::move(r));
    }
    PolyCyc operator-(const PolyCyc& o) const {
        std::vector<CycNum> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return PolyCyc(std::move(r));
    }
    PolyCyc operator*(const PolyCyc& o) const {
        if (is_zero() || o.is_zero()) return PolyCyc();
        std::vector<CycNum> r(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return PolyCyc(std::move(r));
    }

    CycNum eval(const CycNum& x) const {
        CycNum acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    bool operator==(const PolyCyc& o) const { return c_ == o.c_; }
    bool operator!=(const PolyCyc& o) const { return !(*this == o); }

    std::string str(const char* var = "t") const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const CycNum& ci = c_[i];
            if (ci.is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) { s += "(" + ci.str() + ")"; continue; }
            if (!(ci == CycNum(1))) s += "(" + ci.str() + ")*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<CycNum> c_;
};

} // namespace pic27
