#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace chipfire {

// Exact rational with 64-bit numerator/denominator, always reduced, den > 0.
// Intermediates go through __int128; results that do not fit back into 64
// bits throw std::overflow_error rather than wrap.
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    static Rat make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rat r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                    (__int128)a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                    (__int128)a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // Greatest integer <= value.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }
    // Fractional part in [0,1).
    Rat frac() const { return *this - Rat(floor()); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Exact conversion: every finite double is dyadic.
    static Rat from_double(double x);

    // Nearest multiple of 2^-bits; keeps denominators small enough for
    // exact piecewise-linear composition.
    static Rat dyadic_round(double x, int bits = 20);

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    // always "p/q", integers included ("0/1", "1/1")
    std::string str_frac() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    // Parses "p" or "p/q".
    static Rat parse(const std::string& s);

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    static std::int64_t narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
        return static_cast<std::int64_t>(v);
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace chipfire
