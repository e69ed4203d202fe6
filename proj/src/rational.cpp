#include "plgroup/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace plgroup {

Rat::Rat(long n, long d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v{mpz_class(s)};
            return Rat(v);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rat::parse: zero denominator");
        mpq_class v(num, den);
        v.canonicalize();
        return Rat(v);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
    }
}

bool Rat::is_half_integer() const {
    return v_.get_den() == 1 || v_.get_den() == 2;
}

namespace {
bool is_pow2_z(const mpz_class& z) {
    if (z <= 0) return false;
    return mpz_popcount(z.get_mpz_t()) == 1;
}
}  // namespace

bool Rat::is_dyadic() const { return is_pow2_z(v_.get_den()); }

bool Rat::is_power_of_two() const {
    if (v_ <= 0) return false;
    return (v_.get_num() == 1 && is_pow2_z(v_.get_den())) ||
           (v_.get_den() == 1 && is_pow2_z(v_.get_num()));
}

long Rat::log2_exact() const {
    if (!is_power_of_two()) throw std::domain_error("Rat::log2_exact: not a power of 2");
    if (v_.get_den() == 1) return static_cast<long>(mpz_scan1(v_.get_num().get_mpz_t(), 0));
    return -static_cast<long>(mpz_scan1(v_.get_den().get_mpz_t(), 0));
}

mpz_class Rat::floor_z() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

long Rat::floor_long() const {
    mpz_class q = floor_z();
    if (!q.fits_slong_p()) throw std::overflow_error("Rat::floor_long: out of range");
    return q.get_si();
}

long Rat::to_long() const {
    if (!is_integer()) throw std::domain_error("Rat::to_long: not an integer");
    if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rat::to_long: out of range");
    return v_.get_num().get_si();
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::pow2(long k) {
    mpq_class v;
    if (k >= 0) {
        mpz_class z = 1;
        mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(k));
        v = z;
    } else {
        mpz_class z = 1;
        mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(-k));
        v = mpq_class(1, z);
    }
    return Rat(v);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Interval::Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
}

bool Interval::is_standard_dyadic() const {
    if (lo < Rat(0) || hi > Rat(1)) return false;
    Rat len = length();
    if (!len.is_power_of_two() || len > Rat(1)) return false;
    Rat ratio = lo / len;
    return ratio.is_integer();
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << "[" << iv.lo << ", " << iv.hi << "]";
}

Interval unit_interval() { return Interval(Rat(0), Rat(1)); }

}  // namespace plgroup
