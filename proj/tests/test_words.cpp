#include "strichartz/laguerre_frame.hpp"
#include "strichartz/words.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

using namespace strichartz;

TEST_CASE("signed counts by hand", "[words]") {
    CHECK(signed_count({1, 0, 1, 0}) == 2);  // words 13, 31: distances 0 and 2
    CHECK(signed_count({1, 1, 1, 1}) == 8);
    CHECK(signed_count({4, 0, 0, 0}) == 1);  // single arrangement
    CHECK(signed_count({0, 0, 0, 0}) == 1);
}

TEST_CASE("word enumeration covers the multiset", "[words]") {
    // #even + #odd = multinomial
    WordSpec w{2, 1, 2, 1};
    std::vector<std::uint8_t> word = {1, 1, 2, 3, 3, 4};
    long long count = 0;
    do {
        ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    CHECK(BigInt(count) == word_count(w));
}

TEST_CASE("q_from_words values", "[words]") {
    CHECK(q_from_words({1, 0, 1, 0}) == Rational(1, 2));
    CHECK(q_from_words({0, 0, 0, 0}) == Rational(1));
    CHECK(q_from_words({1, 1, 1, 1}) == Rational(1, 2));
}

TEST_CASE("q_explicit values", "[words]") {
    CHECK(q_explicit(0, 0, 0, 0) == Rational(1));
    CHECK(q_explicit(1, 0, 1, 0) == Rational(1, 2));
    CHECK(q_explicit(1, 1, 1, 1) == Rational(1, 2));
}

TEST_CASE("three-way agreement on a small grid", "[words]") {
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned a = 0; a <= n; ++a)
            for (unsigned b = 0; a + b <= n; ++b)
                for (unsigned c = 0; a + b + c <= n; ++c) {
                    unsigned d = n - a - b - c;
                    Rational integral = q_coefficient({a, b, c, d});
                    CHECK(integral == q_from_words({a, b, c, d}));
                    CHECK(integral == q_explicit(a, b, c, d));
                    CHECK(integral > Rational(0));
                }
}

TEST_CASE("signed count symmetries", "[words]") {
    for (auto [a, b, c, d] :
         {std::array<unsigned, 4>{2, 1, 3, 0}, {1, 2, 2, 1}, {3, 0, 1, 2}, {2, 2, 1, 1}}) {
        long long base = signed_count({a, b, c, d});
        CHECK(signed_count({b, a, c, d}) == base);
        CHECK(signed_count({a, b, d, c}) == base);
        CHECK(signed_count({c, d, a, b}) == base);
    }
}

TEST_CASE("q_explicit row sums are stochastic", "[words]") {
    for (unsigned S = 0; S <= 12; ++S)
        for (unsigned c = 0; c <= S; ++c) {
            Rational row(0);
            for (unsigned a = 0; a <= S; ++a) row += q_explicit(a, S - a, c, S - c);
            CHECK(row == Rational(1));
        }
}

TEST_CASE("enumeration cap is enforced", "[words]") {
    CHECK_THROWS_AS(signed_count({5, 5, 5, 5}), EnumerationCapExceeded);
    CHECK_THROWS_AS(q_from_words({5, 5, 5, 5}), EnumerationCapExceeded);
    CHECK_NOTHROW(q_explicit(5, 5, 5, 5));  // formula has no cap
}
