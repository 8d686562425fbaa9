/*
   Copyright 2026 the tschirn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include "tschirn/fields.hpp"
#include "tschirn/rng.hpp"

using namespace tschirn;

TEST_CASE("rational arithmetic is exact") {
    StreamRng rng(42, "fields-exact");
    for (int i = 0; i < 10000; ++i) {
        Rational a(rng.uniform(-10000, 10000), rng.uniform(1, 10000));
        Rational b(rng.uniform(-10000, 10000), rng.uniform(1, 10000));
        REQUIRE((a + b) - b == a);
        if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
}

TEST_CASE("rational inverses and division guards") {
    REQUIRE(Rational(3, 7).inv() == Rational(7, 3));
    REQUIRE(Rational(-2, 4) == Rational(-1, 2));
    REQUIRE_THROWS_AS(Rational::zero().inv(), std::domain_error);
    REQUIRE_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    REQUIRE_THROWS_AS(Rational(1, 0), std::domain_error);
    REQUIRE(Rational::characteristic() == 0);
}

TEST_CASE("prime field arithmetic mod 10007") {
    Fp::set_modulus(10007);
    REQUIRE(Fp::characteristic() == 10007);
    REQUIRE(Fp(10007).is_zero());
    REQUIRE(Fp(-1) == Fp(10006));

    StreamRng rng(42, "fields-fp");
    for (int i = 0; i < 2000; ++i) {
        Fp a(rng.uniform(-100000, 100000)), b(rng.uniform(-100000, 100000));
        REQUIRE((a + b) - b == a);
        if (!b.is_zero()) {
            REQUIRE((a / b) * b == a);
            REQUIRE(b * b.inv() == Fp::one());
        }
    }

    // Fermat: a^(p-1) = 1
    Fp a(1234), acc = Fp::one();
    for (int i = 0; i < 10006; ++i) acc *= a;
    REQUIRE(acc == Fp::one());
}

TEST_CASE("prime field rejects bad moduli") {
    REQUIRE_THROWS_AS(Fp::set_modulus(10006), std::domain_error);
    REQUIRE_THROWS_AS(Fp::set_modulus(1), std::domain_error);
    REQUIRE_THROWS_AS(Fp::set_modulus(1LL << 40), std::domain_error);
    Fp::set_modulus(7);
    REQUIRE(Fp(3) + Fp(5) == Fp(1));
    Fp::set_modulus(10007);
}

TEST_CASE("stream rng is deterministic and stream-separated") {
    StreamRng a(99, "alpha"), b(99, "alpha"), c(99, "beta");
    bool diverged = false;
    for (int i = 0; i < 100; ++i) {
        uint64_t x = a.next();
        REQUIRE(x == b.next());
        if (x != c.next()) diverged = true;
    }
    REQUIRE(diverged);

    StreamRng d(99, "alpha", 1);
    REQUIRE(StreamRng(99, "alpha", 1).next() == d.next());

    StreamRng r(7, "range");
    for (int i = 0; i < 1000; ++i) {
        long long v = r.uniform(-3, 3);
        REQUIRE(v >= -3);
        REQUIRE(v <= 3);
    }
}
