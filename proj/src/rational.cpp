#include "chipfire/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace chipfire {

Rat Rat::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite value");
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 mantissa bits make m * 2^53 integral
    auto num = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    __int128 n = num, d = 1;
    const __int128 nlim = (__int128)1 << 125;
    const __int128 dlim = (__int128)1 << 62;
    if (exp >= 0) {
        while (exp-- > 0) {
            if (n > nlim || -n > nlim) throw std::overflow_error("rational overflow");
            n *= 2;
        }
    } else {
        while (exp++ < 0) {
            if (d >= dlim) {
                // past 64-bit resolution; shed mantissa bits instead
                n /= 2;
                if (n == 0) return Rat(0);
                continue;
            }
            d *= 2;
        }
    }
    return make(n, d);
}

Rat Rat::dyadic_round(double x, int bits) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite value");
    double scaled = std::ldexp(x, bits);
    if (std::fabs(scaled) > 9e15) throw std::overflow_error("rational overflow");
    return make(static_cast<std::int64_t>(std::llround(scaled)), (__int128)1 << bits);
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace chipfire
