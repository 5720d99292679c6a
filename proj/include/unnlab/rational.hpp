#ifndef UNNLAB_RATIONAL_HPP
#define UNNLAB_RATIONAL_HPP

#include <cstdint>
#include <numeric>

namespace unnlab {

// Exact nonnegative rational, normalized to lowest terms with den > 0.
// Numerators and denominators in this library are small edge/node counts,
// so 64-bit cross products never overflow.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den) {
        std::int64_t g = std::gcd(num, den);
        if (g == 0)
            g = 1;
        return Rational{num / g, den / g};
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
};

} // namespace unnlab

#endif
