#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace plgroup {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Backed by GMP.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}

    // Accepts "p/q", "p", optional leading '-'.
    static Rat parse(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_half_integer() const;     // element of (1/2)Z
    bool is_dyadic() const;           // denominator a power of 2
    bool is_power_of_two() const;     // value equal to 2^k for some k in Z

    // Exponent k with value == 2^k; requires is_power_of_two().
    long log2_exact() const;

    // Largest integer <= value.
    mpz_class floor_z() const;
    long floor_long() const;
    long to_long() const;             // requires integer that fits

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    std::string str() const;          // lowest-term "p/q", or "p" when q == 1

    static Rat pow2(long k);          // 2^k, k may be negative

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class v_;
};

// Closed interval [lo, hi] with lo < hi.
struct Interval {
    Rat lo;
    Rat hi;

    Interval(Rat l, Rat h);

    Rat length() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool strictly_contains(const Interval& o) const { return lo < o.lo && o.hi < hi; }

    // [a/2^n, (a+1)/2^n] within [0,1].
    bool is_standard_dyadic() const;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Interval& iv);
};

Interval unit_interval();

}  // namespace plgroup
