#pragma once

#include <array>
#include <stdexcept>

#include "pic27/coverage.hpp"
#include "pic27/rational.hpp"

namespace pic27 {

/**
 * RadCubicNum: element u + v*x + w*x^2 of the cubic radical extension
 * Q[x]/(x^3 - alpha), alpha a nonzero rational.
 *
 * The reduction x^3 -> alpha is applied by every operation, so stored
 * elements always have degree < 3. Whether alpha is actually a non-cube
 * (so that the ring is a field) is a separate predicate, rat_is_cube();
 * the type itself is also useful for degenerate inputs.
 */
class RadCubicNum {
public:
    RadCubicNum(Rat alpha, Rat u, Rat v, Rat w)
        : alpha_(std::move(alpha)), u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {
        if (alpha_.is_zero()) throw std::domain_error("RadCubicNum: alpha must be nonzero");
    }

    const Rat& alpha() const { return alpha_; }
    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }
    const Rat& w() const { return w_; }

    bool is_rational() const { return v_.is_zero() && w_.is_zero(); }

    RadCubicNum operator+(const RadCubicNum& o) const {
        check_same_field(o);
        return RadCubicNum(alpha_, u_ + o.u_, v_ + o.v_, w_ + o.w_);
    }

    RadCubicNum operator*(const RadCubicNum& o) const {
        check_same_field(o);
        // (u1 + v1 x + w1 x^2)(u2 + v2 x + w2 x^2) reduced with x^3 = alpha,
        // x^4 = alpha x.
        Rat u = u_ * o.u_ + alpha_ * (v_ * o.w_ + w_ * o.v_);
        Rat v = u_ * o.v_ + v_ * o.u_ + alpha_ * (w_ * o.w_);
        Rat w = u_ * o.w_ + v_ * o.v_ + w_ * o.u_;
        return RadCubicNum(alpha_, u, v, w);
    }

    RadCubicNum cube() const {
        PIC27_COVER("exact.rad_cube");
        return *this * *this * *this;
    }

    // The multiplication-by-this operator on the basis {1, x, x^2}:
    //   y*1   = (u, v, w)
    //   y*x   = (alpha*w, u, v)
    //   y*x^2 = (alpha*v, alpha*w, u)
    std::array<std::array<Rat, 3>, 3> mult_matrix() const {
        return {{{u_, alpha_ * w_, alpha_ * v_},
                 {v_, u_, alpha_ * w_},
                 {w_, v_, u_}}};
    }

    // Trace of the multiplication operator, read off the matrix diagonal.
    Rat trace() const {
        PIC27_COVER("exact.rad_trace");
        auto m = mult_matrix();
        return m[0][0] + m[1][1] + m[2][2];
    }

    bool operator==(const RadCubicNum& o) const {
        return alpha_ == o.alpha_ && u_ == o.u_ && v_ == o.v_ && w_ == o.w_;
    }
    bool operator!=(const RadCubicNum& o) const { return !(*this == o); }

    std::string str() const {
        return "(" + u_.str() + ") + (" + v_.str() + ")x + (" + w_.str() + ")x^2";
    }

private:
    void check_same_field(const RadCubicNum& o) const {
        if (alpha_ != o.alpha_)
            throw std::domain_error("RadCubicNum: mixed radicals");
    }

    Rat alpha_, u_, v_, w_;
};

} // namespace pic27
