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

#include "tschirn/bundle.hpp"
#include "tschirn/fields.hpp"
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

std::vector<int> random_parts(StreamRng& rng, int max_rank, int lo, int hi) {
    int r = static_cast<int>(rng.uniform(1, max_rank));
    std::vector<int> parts(static_cast<size_t>(r));
    for (int& p : parts) p = static_cast<int>(rng.uniform(lo, hi));
    return parts;
}

/* standard pair hidden behind changes of basis in both charts and a
   rational change of ambient coordinates */
template <class K>
BundleLattice<K> obfuscated_bundle(StreamRng& rng, const std::vector<int>& parts) {
    using RF = RationalFunction<K>;
    BundleLattice<K> b = standard_bundle<K>(parts);
    const int r = b.rank;

    PolyMatrix<K> u = PolyMatrix<K>::identity(r);
    PolyMatrix<K> v = PolyMatrix<K>::identity(r);
    for (int k = 0; k < 2 * r; ++k) {
        int i = static_cast<int>(rng.uniform(0, r - 1));
        int j = static_cast<int>(rng.uniform(0, r - 1));
        if (i != j) u.axpy_row(i, j, K::from_int(rng.uniform(-3, 3)), static_cast<int>(rng.uniform(0, 2)));
        i = static_cast<int>(rng.uniform(0, r - 1));
        j = static_cast<int>(rng.uniform(0, r - 1));
        if (i != j) v.axpy_row(i, j, K::from_int(rng.uniform(-3, 3)), static_cast<int>(rng.uniform(0, 2)));
    }
    // u re-bases the finite chart over k[x]; v, read in s = 1/x, the infinity chart
    Matrix<RF> uf(r, r), vi(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            uf.at(i, j) = RF(u.at(i, j));
            vi.at(i, j) = inf_poly_to_ratfun(v.at(i, j));
        }
    b.finite = b.finite * uf;
    b.infinity = b.infinity * vi;

    // ambient coordinate change by a random invertible matrix over k(x)
    Matrix<RF> g(r, r);
    do {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                g.at(i, j) = RF(random_poly<K>(rng, 1), random_poly_exact<K>(rng, static_cast<int>(rng.uniform(0, 1))));
    } while (g.det().is_zero());
    b.finite = g * b.finite;
    b.infinity = g * b.infinity;
    return b;
}

template <class K>
InflationDatum<K> random_datum(StreamRng& rng, int rank, int m) {
    InflationDatum<K> q;
    q.point = K::from_int(rng.uniform(-50, 50));
    for (;;) {
        q.vectors.assign(static_cast<size_t>(m), std::vector<K>(static_cast<size_t>(rank)));
        Matrix<K> chk(m, rank);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < rank; ++j) {
                q.vectors[static_cast<size_t>(i)][static_cast<size_t>(j)] = random_scalar<K>(rng);
                chk.at(i, j) = q.vectors[static_cast<size_t>(i)][static_cast<size_t>(j)];
            }
        if (chk.rank() == m) return q;
    }
}

}  // namespace

TEST_CASE("line bundle cohomology closed form") {
    REQUIRE(cohomology(SplittingType({-3, 0, 2})).h0 == 4);
    REQUIRE(cohomology(SplittingType({-3, 0, 2})).h1 == 2);
    REQUIRE(cohomology(SplittingType({-1, -1})).h0 == 0);
    REQUIRE(cohomology(SplittingType({-1, -1})).h1 == 0);
    REQUIRE(cohomology(SplittingType({0})).h0 == 1);
    REQUIRE(cohomology(SplittingType({0})).h1 == 0);
    REQUIRE_THROWS_AS(SplittingType({}), std::domain_error);

    // riemann-roch across a sweep
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            SplittingType t({a, b});
            Cohomology c = cohomology(t);
            REQUIRE(c.h0 - c.h1 == t.degree() + t.rank());
        }
}

TEST_CASE("splitting types of pinned lattices") {
    auto b = standard_bundle<Q>({2, -1});
    REQUIRE(bundle_degree(b) == 1);
    REQUIRE(splitting_type(b) == SplittingType({-1, 2}));
    REQUIRE(splitting_type(dual(b)) == SplittingType({-2, 1}));
    REQUIRE(splitting_type(twist(b, 3)) == SplittingType({2, 5}));
    REQUIRE(splitting_type(chart_flip(b)) == SplittingType({-1, 2}));

    // non-split presentation: finite identity, infinity [[x,1],[0,x]]
    BundleLattice<Q> n;
    n.rank = 2;
    n.finite = Matrix<RQ>::identity(2);
    n.infinity = Matrix<RQ>(2, 2);
    n.infinity.at(0, 0) = RQ::x();
    n.infinity.at(0, 1) = RQ::one();
    n.infinity.at(1, 1) = RQ::x();
    REQUIRE(h0_twisted(n, 0) == 4);
    REQUIRE(splitting_type(n) == SplittingType({1, 1}));

    auto sing = n;
    sing.finite.at(0, 0) = RQ::zero();
    sing.finite.at(1, 1) = RQ::zero();
    sing.finite.at(0, 1) = RQ::x();
    sing.finite.at(1, 0) = RQ::zero();
    try {
        splitting_type(sing);
        FAIL("expected singular rejection");
    } catch (const std::domain_error& e) {
        REQUIRE(std::string(e.what()) == "finite chart basis singular");
    }
}

TEST_CASE("global sections of standard pairs") {
    auto b = standard_bundle<Q>({1, -1});
    auto sec = global_sections(b, 0);
    REQUIRE(sec.size() == 2);
    for (const auto& s : sec) {
        REQUIRE(s[1].is_zero());
        REQUIRE(s[0].degree() <= 1);
    }
    // the two sections span {1, x} in the first coordinate
    Matrix<Q> span(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int t = 0; t < 2; ++t) span.at(i, t) = sec[static_cast<size_t>(i)][0].coeff(t);
    REQUIRE(span.rank() == 2);

    REQUIRE(global_sections(standard_bundle<Q>({-1, -1}), 0).empty());
    REQUIRE(h0_twisted(standard_bundle<Q>({-1, -1}), 1) == 2);
}

TEST_CASE("profile splitting matches hidden type under obfuscation") {
    Fp::set_modulus(10007);
    for (int trial = 0; trial < 12; ++trial) {
        StreamRng rng(42, "bundle-profile", static_cast<uint64_t>(trial));
        auto parts = random_parts(rng, 3, -4, 4);
        auto b = obfuscated_bundle<Fp>(rng, parts);
        std::sort(parts.begin(), parts.end());
        REQUIRE(splitting_type(b) == SplittingType(parts));
        REQUIRE(splitting_type(dual(b)) == SplittingType(parts).negated_reversed());
        REQUIRE(splitting_type(chart_flip(b)) == SplittingType(parts));
    }
    // one exact-rational sample of the same path
    StreamRng rng(42, "bundle-profile-q");
    auto parts = random_parts(rng, 2, -3, 3);
    auto b = obfuscated_bundle<Q>(rng, parts);
    std::sort(parts.begin(), parts.end());
    REQUIRE(splitting_type(b) == SplittingType(parts));
}

TEST_CASE("inflation on pinned inputs") {
    // length-1 inflation of O(-1)+O(-1) lifts one part
    auto b = standard_bundle<Q>({-1, -1});
    InflationDatum<Q> q{Q(0), {{Q(1), Q(0)}}};
    auto t = inflate(b, q);
    REQUIRE(bundle_degree(t) == -1);
    REQUIRE(splitting_type(t) == SplittingType({-1, 0}));

    // full-fiber inflation twists by the point divisor
    for (int a : {-1, 1}) {
        auto f = standard_bundle<Q>({a, a});
        InflationDatum<Q> full{Q(2), {{Q(1), Q(0)}, {Q(0), Q(1)}}};
        REQUIRE(splitting_type(inflate(f, full)) == SplittingType({a + 1, a + 1}));
    }

    InflationDatum<Q> dep{Q(0), {{Q(1), Q(1)}, {Q(2), Q(2)}}};
    REQUIRE_THROWS_AS(inflate(b, dep), std::domain_error);
    InflationDatum<Q> empty{Q(0), {}};
    REQUIRE_THROWS_AS(inflate(b, empty), std::domain_error);
}

TEST_CASE("inflation cohomology law on pinned inputs") {
    // no dual sections: h0 grows by the full length
    auto b1 = standard_bundle<Q>({-1, -1});
    auto p1 = predicted_inflation(b1, InflationDatum<Q>{Q(7), {{Q(3), Q(5)}}});
    REQUIRE(p1.rank_qv == 0);
    REQUIRE(p1.h0 == 1);
    REQUIRE(p1.h1 == 0);

    // constants pair nontrivially: h1 drops
    auto b2 = standard_bundle<Q>({-2, -2});
    auto p2 = predicted_inflation(b2, InflationDatum<Q>{Q(1), {{Q(1), Q(0)}}});
    REQUIRE(p2.rank_qv == 1);
    REQUIRE(p2.h0 == 0);
    REQUIRE(p2.h1 == 1);

    auto b3 = standard_bundle<Q>({-3});
    auto p3 = predicted_inflation(b3, InflationDatum<Q>{Q(4), {{Q(2)}}});
    REQUIRE(p3.rank_qv == 1);
    REQUIRE(p3.h0 == 0);
    REQUIRE(p3.h1 == 1);
}

TEST_CASE("inflation law matches the actual lattice on random instances") {
    Fp::set_modulus(10007);
    for (int trial = 0; trial < 25; ++trial) {
        StreamRng rng(42, "bundle-law", static_cast<uint64_t>(trial));
        auto parts = random_parts(rng, 3, -5, 5);
        auto b = obfuscated_bundle<Fp>(rng, parts);
        int m = static_cast<int>(rng.uniform(1, b.rank));
        auto q = random_datum<Fp>(rng, b.rank, m);

        auto predicted = predicted_inflation(b, q);
        auto actual = cohomology(splitting_type(inflate(b, q)));
        REQUIRE(actual.h0 == predicted.h0);
        REQUIRE(actual.h1 == predicted.h1);
        REQUIRE(predicted.h1 <= cohomology(SplittingType(parts)).h1);
    }
}

TEST_CASE("a generic length-1 inflation drops h1 by one") {
    Fp::set_modulus(10007);
    int clean = 0;
    for (int trial = 0; trial < 10; ++trial) {
        StreamRng rng(42, "bundle-drop", static_cast<uint64_t>(trial));
        std::vector<int> parts = random_parts(rng, 3, -5, -2);
        auto b = obfuscated_bundle<Fp>(rng, parts);
        Cohomology before = cohomology(SplittingType(parts));
        REQUIRE(before.h1 > 0);

        auto q = random_datum<Fp>(rng, b.rank, 1);
        auto p = predicted_inflation(b, q);
        if (p.rank_qv == 1 && p.h0 == before.h0 && p.h1 == before.h1 - 1) ++clean;
    }
    REQUIRE(clean >= 9);
}

TEST_CASE("iterated generic inflations reach h1 zero") {
    Fp::set_modulus(10007);
    StreamRng rng(42, "bundle-iterate");
    auto b = standard_bundle<Fp>(std::vector<int>{-3, -2});
    int h1 = cohomology(splitting_type(b)).h1;
    REQUIRE(h1 == 3);
    int steps = 0;
    while (h1 > 0) {
        auto q = random_datum<Fp>(rng, b.rank, 1);
        auto next = inflate(b, q);
        int h1_next = cohomology(splitting_type(next)).h1;
        REQUIRE(h1_next <= h1);  // monotone even on unlucky draws
        if (h1_next < h1) {
            b = next;
            h1 = h1_next;
            ++steps;
        }
    }
    REQUIRE(steps == 3);
}

TEST_CASE("effective quotient selection") {
    auto b = standard_bundle<Q>({-2, -2});
    InflationDatum<Q> e1{Q(5), {{Q(1), Q(0)}}};
    InflationDatum<Q> e2{Q(5), {{Q(0), Q(1)}}};

    auto sel = select_effective_quotient(b, Q(5), {e1, e2});
    REQUIRE(sel.spanning);
    REQUIRE(sel.dim_values == 2);
    REQUIRE(sel.chosen.has_value());
    auto after = cohomology(splitting_type(inflate(b, *sel.chosen)));
    REQUIRE(after.h1 == 1);

    auto nodrop = select_effective_quotient(b, Q(5), {e1});
    REQUIRE_FALSE(nodrop.chosen.has_value());
    REQUIRE(nodrop.reason == NoDropReason::spanning_fails);

    auto flat = standard_bundle<Q>({0, 1});
    REQUIRE_THROWS_AS(select_effective_quotient(flat, Q(5), {e1}), std::domain_error);
    REQUIRE_THROWS_AS(select_effective_quotient(b, Q(5), std::vector<InflationDatum<Q>>{}), std::domain_error);
    // candidate at a different point is rejected
    InflationDatum<Q> wrong{Q(4), {{Q(1), Q(0)}}};
    REQUIRE_THROWS_AS(select_effective_quotient(b, Q(5), {wrong}), std::domain_error);
}

TEST_CASE("endomorphism h1: closed form and lattice computation agree") {
    REQUIRE(end_h1(SplittingType({0, 0, 0})) == 0);
    REQUIRE(end_h1(SplittingType({0, 2})) == 1);
    REQUIRE(end_h1(SplittingType({-1, 3})) == 3);

    for (std::vector<int> parts : {std::vector<int>{0, 2}, {-1, 3}, {1, 1}, {-2, 0, 1}}) {
        auto e = end_bundle(standard_bundle<Q>(parts));
        auto t = splitting_type(e);
        REQUIRE(cohomology(t).h1 == end_h1(SplittingType(parts)));
        REQUIRE(t.degree() == 0);
    }
}
