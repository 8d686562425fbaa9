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

#include "tschirn/bivariate.hpp"
#include "tschirn/fields.hpp"
#include "tschirn/matrix.hpp"
#include "tschirn/poly.hpp"
#include "tschirn/ratfun.hpp"
#include "tschirn/rng.hpp"

using namespace tschirn;

using Q = Rational;
using PQ = Poly<Rational>;
using RQ = RationalFunction<Rational>;

namespace {

PQ qpoly(std::initializer_list<long> coeffs) {
    std::vector<Q> v;
    for (long c : coeffs) v.emplace_back(c);
    return PQ(std::move(v));
}

/* independent resultant oracle: determinant of the Sylvester matrix */
template <class K>
K sylvester_resultant(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero() || g.is_zero()) return K();
    int m = f.degree(), n = g.degree();
    if (m + n == 0) return K::one();
    Matrix<K> s(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s.at(i, i + k) = f.coeff(m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s.at(n + i, i + k) = g.coeff(n - k);
    return s.det();
}

}  // namespace

TEST_CASE("polynomial division round-trips") {
    Fp::set_modulus(10007);
    StreamRng rng(42, "poly-divmod");
    for (int i = 0; i < 200; ++i) {
        auto a = random_poly<Fp>(rng, static_cast<int>(rng.uniform(0, 10)));
        auto d = random_poly_exact<Fp>(rng, static_cast<int>(rng.uniform(0, 6)));
        auto [q, r] = a.divmod(d);
        REQUIRE(q * d + r == a);
        REQUIRE(r.degree() < d.degree());
    }
    REQUIRE_THROWS_AS(qpoly({1, 1}).divmod(PQ()), std::domain_error);
}

TEST_CASE("gcd and squarefree detection") {
    // (x-1)(x-2) vs (x-1)(x-3)
    PQ f = qpoly({2, -3, 1}), g = qpoly({3, -4, 1});
    REQUIRE(poly_gcd(f, g) == qpoly({-1, 1}));
    REQUIRE(poly_gcd(PQ(), PQ()).is_zero());
    REQUIRE(poly_lcm(f, g) == (f * qpoly({-3, 1})).monic());

    REQUIRE(squarefree(qpoly({-1, 0, 1})));       // x^2 - 1
    REQUIRE_FALSE(squarefree(qpoly({0, 0, 4})));  // 4x^2
    REQUIRE_FALSE(squarefree(PQ()));

    auto [gg, u, v] = poly_ext_gcd(f, g);
    REQUIRE(gg == qpoly({-1, 1}));
    REQUIRE(u * f + v * g == gg);
}

TEST_CASE("euclidean resultant matches the Sylvester determinant") {
    REQUIRE(resultant(qpoly({-1, 0, 1}), qpoly({-2, 1})) == Q(3));

    Fp::set_modulus(10007);
    StreamRng rng(42, "poly-resultant");
    for (int i = 0; i < 100; ++i) {
        auto f = random_poly_exact<Fp>(rng, static_cast<int>(rng.uniform(1, 6)));
        auto g = random_poly_exact<Fp>(rng, static_cast<int>(rng.uniform(1, 6)));
        REQUIRE(resultant(f, g) == sylvester_resultant(f, g));
    }
    // shared root forces zero
    for (int i = 0; i < 20; ++i) {
        auto h = random_poly_exact<Fp>(rng, 1);
        auto f = random_poly_exact<Fp>(rng, 2) * h;
        auto g = random_poly_exact<Fp>(rng, 3) * h;
        REQUIRE(resultant(f, g).is_zero());
        REQUIRE(sylvester_resultant(f, g).is_zero());
    }
}

TEST_CASE("poly helpers: reversal, valuation, derivative, eval") {
    PQ p = qpoly({0, 0, 3, 1});  // x^3 + 3x^2
    REQUIRE(p.valuation() == 2);
    REQUIRE(p.reversed(3) == qpoly({1, 3}));
    REQUIRE(p.reversed(5) == qpoly({0, 0, 1, 3}));
    REQUIRE_THROWS_AS(p.reversed(2), std::domain_error);
    REQUIRE(p.derivative() == qpoly({0, 6, 3}));
    REQUIRE(p.eval(Q(2)) == Q(20));
    REQUIRE(qpoly({1, 2}).pow(3) == qpoly({1, 6, 12, 8}));
    REQUIRE_THROWS_AS(PQ().valuation(), std::domain_error);
    REQUIRE_THROWS_AS(qpoly({1, 1, 1}).exact_div(qpoly({1, 1})), std::logic_error);
}

TEST_CASE("rational functions reduce and normalize") {
    RQ f(qpoly({0, 2, 2}), qpoly({0, 0, 4}));  // (2x^2+2x)/(4x^2) = (x+1)/(2x)
    REQUIRE(f.num() == qpoly({1, 1}).scaled(Q(1, 2)));
    REQUIRE(f.den() == qpoly({0, 1}));
    REQUIRE(f.ratdeg() == 0);
    REQUIRE(f + (-f) == RQ::zero());
    REQUIRE(f * f.inv() == RQ::one());
    REQUIRE_THROWS_AS(RQ(qpoly({1}), PQ()), std::domain_error);

    // derivative of 1/x is -1/x^2
    RQ g = RQ::one() / RQ::x();
    REQUIRE(g.derivative() == RQ(qpoly({-1}), qpoly({0, 0, 1})));

    // residue of (x+1)/(x(x-1)) at 0 and 1
    RQ h(qpoly({1, 1}), qpoly({0, -1, 1}));
    REQUIRE(h.residue_at_simple_pole(Q(0)) == Q(-1));
    REQUIRE(h.residue_at_simple_pole(Q(1)) == Q(2));
    REQUIRE_THROWS_AS(h.residue_at_simple_pole(Q(5)), std::domain_error);
}

TEST_CASE("infinity-chart membership and substitution") {
    RQ f(qpoly({1, 2}), qpoly({0, 0, 1}));  // (2x+1)/x^2
    REQUIRE(f.in_inf_ring());
    REQUIRE(f.to_inf_poly() == qpoly({0, 2, 1}));  // 2s + s^2
    REQUIRE(inf_poly_to_ratfun(qpoly({0, 2, 1})) == f);

    RQ g(qpoly({1, 1}), qpoly({-1, 1}));  // (x+1)/(x-1): pole away from 0
    REQUIRE_FALSE(g.in_inf_ring());
    REQUIRE_FALSE(RQ(qpoly({0, 0, 1})).in_inf_ring());  // x^2 has a pole at infinity
    REQUIRE(RQ(qpoly({5})).in_inf_ring());

    // subst_inverse is an involution and matches on values
    REQUIRE(g.subst_inverse().subst_inverse() == g);
    REQUIRE(g.subst_inverse().eval(Q(1, 3)) == g.eval(Q(3)));
}

TEST_CASE("bivariate discriminants") {
    using BQ = BiPoly<Rational>;
    // y^2 - x: disc 4x
    BQ f(std::vector<PQ>{qpoly({0, -1}), PQ(), PQ(Q(1))});
    REQUIRE(f.discriminant_y() == qpoly({0, 4}));

    // y^3 - y - x: disc 4 - 27x^2
    BQ g(std::vector<PQ>{qpoly({0, -1}), qpoly({-1}), PQ(), PQ(Q(1))});
    REQUIRE(g.discriminant_y() == qpoly({4, 0, -27}));

    // y^2 - x^2: disc 4x^2, not squarefree
    BQ h(std::vector<PQ>{qpoly({0, 0, -1}), PQ(), PQ(Q(1))});
    REQUIRE(h.discriminant_y() == qpoly({0, 0, 4}));
    REQUIRE_FALSE(squarefree(h.discriminant_y()));

    // reduction mod a monic-in-y divisor
    BQ prod = g * BQ::y() + BQ::from_x(qpoly({7}));
    REQUIRE(prod.mod_monic(g) == BQ::from_x(qpoly({7})));
    REQUIRE((BQ::y() * BQ::y()).mod_monic(f) == BQ::from_x(qpoly({0, 1})));

    REQUIRE(g.eval(Q(2), Q(3)) == Q(22));  // 27 - 3 - 2
    REQUIRE(g.eval_y(qpoly({0, 1})) == qpoly({0, -2, 0, 1}));
}
