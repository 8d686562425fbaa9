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

#ifndef TSCHIRN_RNC_HPP
#define TSCHIRN_RNC_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"
#include "ratfun.hpp"
#include "rng.hpp"

namespace tschirn {

/* A rational normal curve through the d coordinate points of P^{d-1},
   parametrized by x -> [b_1 F/(x-a_1) : ... : b_d F/(x-a_d)] with
   F = prod (x - a_i); x = a_i lands on the i-th coordinate point. */
template <class K>
struct RncData {
    std::vector<K> a;
    std::vector<K> b;
};

template <class K>
void validate_rnc(const RncData<K>& r) {
    const size_t d = r.a.size();
    if (r.b.size() != d) throw std::domain_error("a and b must have the same length");
    if (d < 3) throw std::domain_error("need at least 3 coordinate points");
    for (size_t i = 0; i < d; ++i) {
        if (r.b[i].is_zero()) throw std::domain_error("coordinate weights must be nonzero");
        for (size_t j = i + 1; j < d; ++j)
            if (r.a[i] == r.a[j]) throw std::domain_error("parameter points must be distinct");
    }
}

/* transversality certificate for R against the hyperplane sum Y_i = 0 */
struct RncReport {
    bool coordinate_points_hit = false;
    bool g_squarefree = false;
    int g_degree = 0;
    bool infinity_on_hyperplane = false;  // iff sum of b_i vanishes
    int infinity_multiplicity = 0;        // intersection multiplicity at x = infinity
    bool transverse = false;
};

template <class K>
struct RncParametrization {
    std::vector<Poly<K>> components;  // b_i F / (x - a_i), degree d-1 each
    Poly<K> g;                        // sum of the components
    RncReport report;
};

template <class K>
RncParametrization<K> rnc_parametrize(const RncData<K>& r) {
    validate_rnc(r);
    const int d = static_cast<int>(r.a.size());

    Poly<K> f = Poly<K>::one();
    for (const K& ai : r.a) f *= Poly<K>(std::vector<K>{-ai, K::one()});

    RncParametrization<K> out;
    out.components.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        Poly<K> den(std::vector<K>{-r.a[static_cast<size_t>(i)], K::one()});
        out.components.push_back(f.exact_div(den).scaled(r.b[static_cast<size_t>(i)]));
        out.g += out.components.back();
    }

    out.report.coordinate_points_hit = true;
    for (int i = 0; i < d && out.report.coordinate_points_hit; ++i)
        for (int j = 0; j < d; ++j) {
            bool nonzero = !out.components[static_cast<size_t>(j)].eval(r.a[static_cast<size_t>(i)]).is_zero();
            if (nonzero != (i == j)) {
                out.report.coordinate_points_hit = false;
                break;
            }
        }

    out.report.g_degree = out.g.is_zero() ? -1 : out.g.degree();
    out.report.g_squarefree = !out.g.is_zero() && squarefree(out.g);
    K sum_b;
    for (const K& bi : r.b) sum_b += bi;
    out.report.infinity_on_hyperplane = sum_b.is_zero();
    out.report.infinity_multiplicity = d - 1 - out.report.g_degree;
    out.report.transverse =
        out.report.g_squarefree && (!out.report.infinity_on_hyperplane || out.report.infinity_multiplicity == 1);
    return out;
}

/* The d(d-1) pairing values of the section (ux+v)G/F against the
   cotangent directions at the coordinate points, by the closed formula
   b_i (u a_j + v)/(a_j - a_i).  Rows run over ordered pairs (i, j),
   i != j, lexicographically. */
template <class K>
std::vector<K> lingen_values(const RncData<K>& r, const K& u, const K& v) {
    validate_rnc(r);
    if (u.is_zero() && v.is_zero()) throw std::domain_error("section (u, v) must be nonzero");
    const int d = static_cast<int>(r.a.size());
    std::vector<K> out;
    out.reserve(static_cast<size_t>(d) * static_cast<size_t>(d - 1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            const K& ai = r.a[static_cast<size_t>(i)];
            const K& aj = r.a[static_cast<size_t>(j)];
            out.push_back(r.b[static_cast<size_t>(i)] * (u * aj + v) / (aj - ai));
        }
    return out;
}

/* The same pairing from first principles, never consulting the closed
   formula: the section (ux+v)G/F has a simple pole at x = a_j, and its
   residue there is its value in O_R(delta)|_{a_j} = T_R|_{a_j}; contract
   that tangent vector against the pullback of the cotangent basis
   d(Y_i/Y_j) at the j-th coordinate point.  The normalization (residue
   with respect to the parameter x, no extra sign on d(Y_i/Y_j)) is
   pinned so the match with lingen_values is exact with scalar 1. */
template <class K>
std::vector<K> lingen_oracle(const RncData<K>& r, const K& u, const K& v) {
    using RF = RationalFunction<K>;
    validate_rnc(r);
    if (u.is_zero() && v.is_zero()) throw std::domain_error("section (u, v) must be nonzero");
    const int d = static_cast<int>(r.a.size());

    auto par = rnc_parametrize(r);
    Poly<K> f = Poly<K>::one();
    for (const K& ai : r.a) f *= Poly<K>(std::vector<K>{-ai, K::one()});
    RF section(Poly<K>(std::vector<K>{v, u}) * par.g, f);

    std::vector<K> out;
    out.reserve(static_cast<size_t>(d) * static_cast<size_t>(d - 1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            const K& aj = r.a[static_cast<size_t>(j)];
            // residue of the section at a_j: clear the pole and evaluate
            RF cleared = section * RF(Poly<K>(std::vector<K>{-aj, K::one()}));
            K residue = cleared.eval(aj);
            // pullback of Y_i/Y_j along the parametrization, as a symbolic
            // ratio of the raw components
            RF coord(par.components[static_cast<size_t>(i)], par.components[static_cast<size_t>(j)]);
            K slope = coord.derivative().eval(aj);
            out.push_back(slope * residue);
        }
    return out;
}

struct LingenRankResult {
    int rank = 0;
    int target = 0;
    bool conclusive = false;  // full rank proves the independence claim
};

/* Sampling certificate for the independence of the d(d-1) pairing
   functionals: stack lingen_values rows for random data; any linear
   relation among the functionals would annihilate every sample, so
   reaching full rank d(d-1) is a sound proof.  Lower rank only means the
   samples were insufficient. */
template <class K>
LingenRankResult lingen_rank(int d, int trials, uint64_t seed) {
    if (d < 3) throw std::domain_error("need at least 3 coordinate points");
    if (trials < 1) throw std::domain_error("need at least one trial");
    const int n = d * (d - 1);
    Matrix<K> samples(trials, n);
    for (int t = 0; t < trials; ++t) {
        StreamRng rng(seed, "lingen-rank", static_cast<uint64_t>(t));
        RncData<K> r;
        r.a.resize(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) {
            bool fresh = false;
            while (!fresh) {
                r.a[static_cast<size_t>(i)] = random_scalar<K>(rng);
                fresh = true;
                for (int k = 0; k < i; ++k)
                    if (r.a[static_cast<size_t>(k)] == r.a[static_cast<size_t>(i)]) fresh = false;
            }
        }
        for (int i = 0; i < d; ++i) r.b.push_back(random_nonzero<K>(rng));
        K u = random_scalar<K>(rng), v = random_scalar<K>(rng);
        if (u.is_zero() && v.is_zero()) u = K::one();
        auto row = lingen_values(r, u, v);
        for (int c = 0; c < n; ++c) samples.at(t, c) = row[static_cast<size_t>(c)];
    }
    LingenRankResult out;
    out.target = n;
    out.rank = static_cast<int>(samples.rref().size());
    out.conclusive = out.rank == n;
    return out;
}

}  // namespace tschirn

#endif
