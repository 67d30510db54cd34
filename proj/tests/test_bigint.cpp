#include <doctest.h>

#include <random>

#include "dpell/bigint.hpp"
#include "dpell/errors.hpp"
#include "dpell/rational.hpp"

using dpell::Int;
using dpell::Rational;

TEST_CASE("small integer round trips") {
    CHECK(Int(0).to_string() == "0");
    CHECK(Int(-1).to_string() == "-1");
    CHECK(Int(1234567890123456789ll).to_string() == "1234567890123456789");
    CHECK(Int("-981273891273812973891273912").to_string() == "-981273891273812973891273912");
    CHECK(Int(42).to_int64() == 42);
    CHECK(Int("123456789012345678901234567890").to_int64() == std::nullopt);
}

TEST_CASE("arithmetic agrees with machine integers on random inputs") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int it = 0; it < 2000; ++it) {
        long long a = d(rng), b = d(rng);
        CHECK((Int(a) + Int(b)).to_int64() == a + b);
        CHECK((Int(a) - Int(b)).to_int64() == a - b);
        CHECK((Int(a) * Int(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((Int(a) / Int(b)).to_int64() == a / b);
            CHECK((Int(a) % Int(b)).to_int64() == a % b);
        }
        CHECK((Int(a) < Int(b)) == (a < b));
    }
}

TEST_CASE("divmod identity and sign conventions") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long long> d(-50, 50);
    for (int it = 0; it < 500; ++it) {
        Int a = Int(d(rng)) * Int(d(rng)) * Int(d(rng));
        Int b = Int(d(rng));
        if (b.is_zero()) continue;
        Int q, r;
        Int::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
        Int fq, fr;
        Int::fdivmod(a, b, fq, fr);
        CHECK(fq * b + fr == a);
        if (!fr.is_zero()) CHECK(fr.sign() == b.sign());
    }
}

TEST_CASE("large multiplication: 25 factorial") {
    Int f = 1;
    for (int k = 2; k <= 25; ++k) f *= Int(k);
    CHECK(f.to_string() == "15511210043330985984000000");
    CHECK((f / Int("15511210043330985984")).to_string() == "1000000");
}

TEST_CASE("gcd") {
    CHECK(dpell::gcd(Int(12), Int(18)) == Int(6));
    CHECK(dpell::gcd(Int(-12), Int(18)) == Int(6));
    CHECK(dpell::gcd(Int(0), Int(0)) == Int(0));
    CHECK(dpell::gcd(Int(0), Int(-7)) == Int(7));
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Int(1) / Int(0), dpell::InvalidInput);
}

TEST_CASE("rationals reduce and compare") {
    Rational r(Int(6), Int(-4));
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(Int(1), Int(3)) + Rational(Int(1), Int(6)) == Rational(Int(1), Int(2)));
    CHECK(Rational(Int(3), Int(4)).to_string() == "3/4");
    CHECK((Rational(Int(1), Int(3)) < Rational(Int(1), Int(2))));
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), dpell::InvalidInput);
}
