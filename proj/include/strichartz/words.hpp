#pragma once

// Word-parity combinatorics over the four-letter alphabet: signed counting
// of multiset permutations against the sorted elementary word, and the
// explicit double-binomial formula.  Together with the Laguerre integral
// these give three independent exact routes to the same coefficients.

#include "strichartz/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace strichartz {

class EnumerationCapExceeded : public std::runtime_error {
public:
    explicit EnumerationCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct WordSpec {
    unsigned a = 0, b = 0, c = 0, d = 0;
    unsigned total() const { return a + b + c + d; }
};

constexpr std::uint64_t kDefaultWordCap = 10'000'000;

/// Number of distinct words 1^a 2^b 3^c 4^d.
inline BigInt word_count(const WordSpec& w) {
    return multinomial({w.a, w.b, w.c, w.d});
}

/// #even - #odd over all distinct arrangements, where a word's parity is the
/// parity of the number of positions at which it differs from the sorted
/// elementary word.  Enumeration is lexicographic via next_permutation.
inline long long signed_count(const WordSpec& w, std::uint64_t cap = kDefaultWordCap) {
    const unsigned n = w.total();
    if (n == 0) return 1;  // single empty word, distance 0
    if (word_count(w) > cap)
        throw EnumerationCapExceeded(
            "signed_count: word count exceeds cap; use q_explicit instead");
    std::vector<std::uint8_t> elem;
    elem.reserve(n);
    elem.insert(elem.end(), w.a, 1);
    elem.insert(elem.end(), w.b, 2);
    elem.insert(elem.end(), w.c, 3);
    elem.insert(elem.end(), w.d, 4);
    std::vector<std::uint8_t> word = elem;  // sorted start = elementary word
    long long acc = 0;
    do {
        unsigned dist = 0;
        for (unsigned i = 0; i < n; ++i) dist += (word[i] != elem[i]);
        acc += (dist % 2 == 0) ? 1 : -1;
    } while (std::next_permutation(word.begin(), word.end()));
    return acc;
}

/// Q(a,b,c,d) via the signed word count: (#even - #odd) / 2^N.
/// N = 0 is fixed to 1, matching the integral's value for empty products.
inline Rational q_from_words(const WordSpec& w, std::uint64_t cap = kDefaultWordCap) {
    const unsigned n = w.total();
    if (n == 0) return Rational(1);
    return Rational(BigInt(signed_count(w, cap)), pow(Rational(2), n).numerator());
}

/// Q(a,b,c,d) via the closed double-binomial formula:
/// 2^{-N} sum_u (a+b-u)!(c+d-u)!(u!)^2/(a!b!c!d!) *
///        ( sum_{r,s} (-1)^{r+s} C(a,r)C(b,u-r)C(c,s)C(d,u-s) )^2.
inline Rational q_explicit(unsigned a, unsigned b, unsigned c, unsigned d) {
    const unsigned n = a + b + c + d;
    const unsigned u_max = std::min(a + b, c + d);
    const Rational denom = factorial(a) * factorial(b) * factorial(c) * factorial(d);
    Rational acc(0);
    for (unsigned u = 0; u <= u_max; ++u) {
        Rational inner(0);
        for (unsigned r = 0; r <= u; ++r) {
            Rational left = binomial(a, r) * binomial(b, u - r);
            if (left.is_zero()) continue;
            for (unsigned s = 0; s <= u; ++s) {
                Rational right = binomial(c, s) * binomial(d, u - s);
                if (right.is_zero()) continue;
                Rational term = left * right;
                if ((r + s) % 2 == 1) term = -term;
                inner += term;
            }
        }
        acc += factorial(a + b - u) * factorial(c + d - u) * factorial(u) * factorial(u)
               / denom * inner * inner;
    }
    return acc / pow(Rational(2), n);
}

}  // namespace strichartz
