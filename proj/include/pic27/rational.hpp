#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pic27 {

/**
 * Rat: arbitrary-precision rational number.
 *
 * Canonical form is maintained at all times: positive denominator,
 * gcd(num, den) = 1, zero stored as 0/1. Backed by GMP's mpq type.
 */
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<long>(n)) {}
    Rat(long long n) { set_ll(n); }
    Rat(long n, long d) : q_(n, d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : q_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) : q_(n, d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Parses "n" or "n/d".
    static Rat from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat: bad literal: " + s);
        if (q.get_den() == 0) throw std::domain_error("Rat: zero denominator");
        q.canonicalize();
        return Rat(q);
    }

    const mpq_class& value() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(q_ / o.q_));
    }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1 / q_));
    }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }
    bool operator<(const Rat& o) const { return q_ < o.q_; }
    bool operator<=(const Rat& o) const { return q_ <= o.q_; }
    bool operator>(const Rat& o) const { return q_ > o.q_; }
    bool operator>=(const Rat& o) const { return q_ >= o.q_; }

    std::string str() const { return q_.get_str(); }

private:
    void set_ll(long long n) {
        mpz_class z;
        bool neg = n < 0;
        unsigned long long u = neg ? 0ULL - static_cast<unsigned long long>(n)
                                   : static_cast<unsigned long long>(n);
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
        if (neg) z = -z;
        q_ = mpq_class(z);
    }

    mpq_class q_;
};

// True iff r = (p/q)^3 for some rational p/q; with r = n/d in lowest terms
// this means both n and d are integer cubes.
inline bool rat_is_cube(const Rat& r) {
    if (r.is_zero()) return true;
    auto is_cube_z = [](const mpz_class& z) {
        mpz_class root;
        return mpz_root(root.get_mpz_t(), z.get_mpz_t(), 3) != 0;
    };
    // mpz_root requires a nonnegative argument for even roots only; cube
    // roots of negatives are fine.
    return is_cube_z(r.num()) && is_cube_z(r.den());
}

} // namespace pic27
