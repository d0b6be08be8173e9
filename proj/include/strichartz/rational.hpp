#pragma once

// Exact rational arithmetic and the combinatorial scalars (factorials,
// Pochhammer products, Gaussian moments) used throughout the library.
// All values are kept in lowest terms with positive denominator; there is
// no floating-point fallback on any code path in this header.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace strichartz {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
using BigRat = boost::multiprecision::cpp_rational;
}

/// Arbitrary-precision rational scalar, always reduced, denominator > 0.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
    Rational(T n) : v_(BigInt(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        // cpp_rational reduces but insists on a positive denominator.
        if (den < 0)
            v_ = detail::BigRat(-num, -den);
        else
            v_ = detail::BigRat(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    double to_double() const { return v_.convert_to<double>(); }

    /// "num" for integers, "num/den" otherwise.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    /// Parses "num" or "num/den" (den > 0 after normalization).
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    detail::BigRat v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Integer power; e < 0 inverts (base must be nonzero).
inline Rational pow(const Rational& base, long long e) {
    if (e < 0) {
        if (base.is_zero()) throw std::domain_error("pow: zero base, negative exponent");
        return Rational(1) / pow(base, -e);
    }
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

/// n! as an exact rational (integer valued).
inline Rational factorial(unsigned n) {
    BigInt acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return Rational(acc);
}

/// Pochhammer symbol (mu)_s = mu (mu+1) ... (mu+s-1); empty product for s = 0.
inline Rational pochhammer(const Rational& mu, unsigned s) {
    Rational acc(1);
    for (unsigned i = 0; i < s; ++i) acc *= mu + Rational(i);
    return acc;
}

/// Moment of the standard Gaussian: (n-1)!! for even n, 0 for odd n.
inline Rational gaussian_moment(unsigned n) {
    if (n % 2 == 1) return Rational(0);
    BigInt acc = 1;
    for (unsigned i = 1; i + 1 <= n; i += 2) acc *= i;  // 1*3*...*(n-1)
    return Rational(acc);
}

/// Binomial coefficient with the convention binom(n,k) = 0 outside 0 <= k <= n.
inline Rational binomial(long long n, long long k) {
    if (k < 0 || k > n) return Rational(0);
    // Symmetric reduction keeps the loop short.
    if (k > n - k) k = n - k;
    BigInt num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return Rational(num, den);
}

/// Multinomial coefficient N! / (k1! k2! ...), N = sum ki.
inline BigInt multinomial(std::initializer_list<unsigned> ks) {
    unsigned total = 0;
    for (unsigned k : ks) total += k;
    Rational r = factorial(total);
    for (unsigned k : ks) r /= factorial(k);
    return r.numerator();  // exact integer
}

}  // namespace strichartz
