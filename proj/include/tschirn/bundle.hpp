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

#ifndef TSCHIRN_BUNDLE_HPP
#define TSCHIRN_BUNDLE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "polymat.hpp"

namespace tschirn {

/* sorted line-bundle degrees (a_1 <= ... <= a_r) of a splittable bundle */
class SplittingType {
  public:
    explicit SplittingType(std::vector<int> parts) : p_(std::move(parts)) {
        if (p_.empty()) throw std::domain_error("splitting type needs rank >= 1");
        std::sort(p_.begin(), p_.end());
    }

    const std::vector<int>& parts() const { return p_; }
    int rank() const { return static_cast<int>(p_.size()); }
    int degree() const {
        int s = 0;
        for (int a : p_) s += a;
        return s;
    }
    SplittingType shifted(int n) const {
        std::vector<int> q = p_;
        for (int& a : q) a += n;
        return SplittingType(std::move(q));
    }
    /* type of the dual bundle */
    SplittingType negated_reversed() const {
        std::vector<int> q = p_;
        for (int& a : q) a = -a;
        return SplittingType(std::move(q));
    }
    friend bool operator==(const SplittingType& a, const SplittingType& b) { return a.p_ == b.p_; }
    friend bool operator!=(const SplittingType& a, const SplittingType& b) { return a.p_ != b.p_; }

  private:
    std::vector<int> p_;
};

struct Cohomology {
    int h0 = 0;
    int h1 = 0;
};

inline Cohomology cohomology(const SplittingType& t) {
    Cohomology c;
    for (int a : t.parts()) {
        c.h0 += std::max(a + 1, 0);
        c.h1 += std::max(-a - 1, 0);
    }
    return c;
}

/* h^1 of the endomorphism bundle of the split bundle with this type */
inline int end_h1(const SplittingType& t) {
    int s = 0;
    for (int ai : t.parts())
        for (int aj : t.parts()) s += std::max(ai - aj - 1, 0);
    return s;
}

/* A bundle on the projective line as a pair of lattices inside k(x)^r:
   the columns of `finite` span a k[x]-module (the sections over the
   affine line) and the columns of `infinity` a module over the local
   ring at infinity (the stalk there).  Any two nonsingular bases define
   a bundle; rational entries are deliberate, since inflation and
   dualization leave the polynomial world even when the input is in it. */
template <class K>
struct BundleLattice {
    using RF = RationalFunction<K>;
    int rank = 0;
    Matrix<RF> finite;
    Matrix<RF> infinity;
};

template <class K>
void validate_lattice(const BundleLattice<K>& b) {
    if (b.rank < 1) throw std::domain_error("bundle rank must be positive");
    if (b.finite.rows() != b.rank || b.finite.cols() != b.rank ||
        b.infinity.rows() != b.rank || b.infinity.cols() != b.rank)
        throw std::domain_error("lattice basis shape does not match rank");
    if (b.finite.det().is_zero()) throw std::domain_error("finite chart basis singular");
    if (b.infinity.det().is_zero()) throw std::domain_error("infinity chart basis singular");
}

/* the standard pair for O(a_1) + ... + O(a_r), in the order given */
template <class K>
BundleLattice<K> standard_bundle(const std::vector<int>& parts) {
    using RF = RationalFunction<K>;
    int r = static_cast<int>(parts.size());
    BundleLattice<K> b;
    b.rank = r;
    b.finite = Matrix<RF>::identity(r);
    b.infinity = Matrix<RF>(r, r);
    for (int i = 0; i < r; ++i) b.infinity.at(i, i) = RF::x_power(parts[static_cast<size_t>(i)]);
    return b;
}

template <class K>
int bundle_degree(const BundleLattice<K>& b) {
    validate_lattice(b);
    return b.infinity.det().ratdeg() - b.finite.det().ratdeg();
}

template <class K>
BundleLattice<K> twist(const BundleLattice<K>& b, int n) {
    BundleLattice<K> t = b;
    t.infinity = t.infinity.scaled(RationalFunction<K>::x_power(n));
    return t;
}

template <class K>
BundleLattice<K> dual(const BundleLattice<K>& b) {
    validate_lattice(b);
    BundleLattice<K> d = b;
    d.finite = b.finite.inverse().transpose();
    d.infinity = b.infinity.inverse().transpose();
    return d;
}

template <class K>
int entry_degree_spread(const BundleLattice<K>& b) {
    int spread = 0;
    auto widen = [&spread](const Matrix<RationalFunction<K>>& m) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                const auto& e = m.at(i, j);
                if (!e.is_zero()) spread = std::max({spread, e.num().degree(), e.den().degree()});
            }
    };
    widen(b.finite);
    widen(b.infinity);
    widen(b.finite.inverse());
    widen(b.infinity.inverse());
    return spread;
}

template <class K>
std::vector<std::vector<Poly<K>>> global_sections(const BundleLattice<K>& b, int n);

/* Relabel the charts through x -> 1/x; the splitting type is unchanged.
   The stalk at the new infinity is the old finite stalk at x = 0, read
   in the new coordinate.  The new affine lattice is the module of
   sections away from x = 0, generated by sections with a pole budget at
   0 large enough to reach every summand's generator. */
template <class K>
BundleLattice<K> chart_flip(const BundleLattice<K>& b) {
    using RF = RationalFunction<K>;
    validate_lattice(b);
    const int r = b.rank;

    const int budget = entry_degree_spread(b) + 2;
    BundleLattice<K> widened = b;
    widened.finite = b.finite.scaled(RF::x_power(-budget));
    auto gens = global_sections(widened, 0);

    // ambient generators under x -> 1/x, cleared of denominators
    Poly<K> den = Poly<K>::one();
    std::vector<std::vector<RF>> rows;
    for (const auto& g : gens) {
        std::vector<RF> row(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) {
            RF w;
            for (int j = 0; j < r; ++j) w += widened.finite.at(i, j) * RF(g[static_cast<size_t>(j)]);
            row[static_cast<size_t>(i)] = w.subst_inverse();
            den = poly_lcm(den, row[static_cast<size_t>(i)].den());
        }
        rows.push_back(std::move(row));
    }
    PolyMatrix<K> gen(static_cast<int>(rows.size()), r);
    for (int k = 0; k < gen.rows(); ++k)
        for (int i = 0; i < r; ++i) {
            const RF& e = rows[static_cast<size_t>(k)][static_cast<size_t>(i)];
            gen.at(k, i) = e.num() * den.exact_div(e.den());
        }
    PolyMatrix<K> basis = row_lattice_basis(gen);
    if (basis.rows() != r) throw std::logic_error("chart flip produced a degenerate lattice");

    BundleLattice<K> f;
    f.rank = r;
    f.finite = Matrix<RF>(r, r);
    for (int c = 0; c < r; ++c)
        for (int i = 0; i < r; ++i) f.finite.at(i, c) = RF(basis.at(c, i), den);
    f.infinity = Matrix<RF>(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) f.infinity.at(i, j) = b.finite.at(i, j).subst_inverse();
    if (bundle_degree(f) != bundle_degree(b)) throw std::logic_error("chart flip changed the degree");
    return f;
}

template <class K>
BundleLattice<K> end_bundle(const BundleLattice<K>& b) {
    using RF = RationalFunction<K>;
    BundleLattice<K> d = dual(b);
    BundleLattice<K> e;
    e.rank = b.rank * b.rank;
    e.finite = Matrix<RF>::kronecker(b.finite, d.finite);
    e.infinity = Matrix<RF>::kronecker(b.infinity, d.infinity);
    return e;
}

/* Sections of one lattice pair across many twists.  A section of E(n)
   is F*g with g polynomial, and the degree of each g_j is bounded by n
   plus the largest entry degree of F^{-1} * I.  Writing row i of
   M = I^{-1} F over a common polynomial denominator D_i, the
   infinity-chart condition on x^{-n} (M g)_i is regularity at infinity,
   i.e. deg of the cleared numerator at most n + deg D_i.  That is linear
   in the coefficients of g, so the sections at each twist are the kernel
   of one scalar matrix assembled by probing unit coefficient vectors.
   The chart inversions and denominator clearing are shared across
   twists, which is what makes the profile scan in splitting_type cheap. */
template <class K>
class SectionSolver {
  public:
    explicit SectionSolver(const BundleLattice<K>& b) : r_(b.rank) {
        using RF = RationalFunction<K>;
        validate_lattice(b);
        Matrix<RF> w = b.finite.inverse() * b.infinity;
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j) bound_ = std::max(bound_, w.at(i, j).ratdeg());

        Matrix<RF> m = b.infinity.inverse() * b.finite;
        nums_.resize(static_cast<size_t>(r_));
        dendeg_.resize(static_cast<size_t>(r_));
        maxnum_.resize(static_cast<size_t>(r_));
        for (int i = 0; i < r_; ++i) {
            Poly<K> den = Poly<K>::one();
            for (int j = 0; j < r_; ++j) den = poly_lcm(den, m.at(i, j).den());
            dendeg_[static_cast<size_t>(i)] = den.degree();
            int maxnum = Poly<K>::neg_inf;
            nums_[static_cast<size_t>(i)].resize(static_cast<size_t>(r_));
            for (int j = 0; j < r_; ++j) {
                nums_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    m.at(i, j).num() * den.exact_div(m.at(i, j).den());
                maxnum = std::max(maxnum, nums_[static_cast<size_t>(i)][static_cast<size_t>(j)].degree());
            }
            maxnum_[static_cast<size_t>(i)] = maxnum;
        }
    }

    /* k-basis of H^0 of the bundle twisted by n, i.e. of L_fin intersected
       with x^n L_inf, as polynomial coordinate vectors with respect to the
       finite-chart basis columns */
    std::vector<std::vector<Poly<K>>> sections(int n) const {
        const int deg_cap = n + bound_;
        if (deg_cap < 0) return {};
        const int unknowns = r_ * (deg_cap + 1);

        std::vector<int> lo(static_cast<size_t>(r_)), hi(static_cast<size_t>(r_));
        int total = 0;
        for (int i = 0; i < r_; ++i) {
            lo[static_cast<size_t>(i)] = n + dendeg_[static_cast<size_t>(i)] + 1;
            hi[static_cast<size_t>(i)] = maxnum_[static_cast<size_t>(i)] + deg_cap;
            total += std::max(0, hi[static_cast<size_t>(i)] - lo[static_cast<size_t>(i)] + 1);
        }

        Matrix<K> cons(total, unknowns);
        for (int j = 0; j < r_; ++j)
            for (int t = 0; t <= deg_cap; ++t) {
                int col = j * (deg_cap + 1) + t;
                int row = 0;
                for (int i = 0; i < r_; ++i) {
                    const Poly<K>& p = nums_[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    for (int k = lo[static_cast<size_t>(i)]; k <= hi[static_cast<size_t>(i)]; ++k)
                        cons.at(row++, col) = p.coeff(k - t);
                }
            }

        std::vector<std::vector<Poly<K>>> out;
        for (const auto& v : cons.kernel()) {
            std::vector<Poly<K>> g(static_cast<size_t>(r_));
            for (int j = 0; j < r_; ++j) {
                std::vector<K> coeffs(static_cast<size_t>(deg_cap) + 1);
                for (int t = 0; t <= deg_cap; ++t)
                    coeffs[static_cast<size_t>(t)] = v[static_cast<size_t>(j * (deg_cap + 1) + t)];
                g[static_cast<size_t>(j)] = Poly<K>(std::move(coeffs));
            }
            out.push_back(std::move(g));
        }
        return out;
    }

    int h0(int n) const { return static_cast<int>(sections(n).size()); }

  private:
    int r_;
    int bound_ = Poly<K>::neg_inf;
    std::vector<std::vector<Poly<K>>> nums_;
    std::vector<int> dendeg_;
    std::vector<int> maxnum_;
};

template <class K>
std::vector<std::vector<Poly<K>>> global_sections(const BundleLattice<K>& b, int n) {
    return SectionSolver<K>(b).sections(n);
}

template <class K>
int h0_twisted(const BundleLattice<K>& b, int n) {
    return static_cast<int>(global_sections(b, n).size());
}

/* splitting type from the h^0 profile: the increment h^0(n) - h^0(n-1)
   counts the parts with a_i >= -n, so scanning n until the profile is
   exhausted reads off the multiset of parts */
template <class K>
SplittingType splitting_type(const BundleLattice<K>& b) {
    const int deg = bundle_degree(b);
    const int r = b.rank;
    const int spread = entry_degree_spread(b);

    SectionSolver<K> solver(b);
    std::map<int, int> h0_cache;
    auto h0 = [&](int n) {
        auto it = h0_cache.find(n);
        if (it != h0_cache.end()) return it->second;
        int v = solver.h0(n);
        h0_cache.emplace(n, v);
        return v;
    };

    const int guard = 8 * (spread + 2) + 64;
    int lo = -(spread + 2);
    while (h0(lo) > 0) {
        --lo;
        if (lo < -guard) throw std::logic_error("splitting-type scan failed to empty h0");
    }
    int hi = lo + 1;
    while (h0(hi) - h0(hi - 1) < r) {
        ++hi;
        if (hi > guard) throw std::logic_error("splitting-type scan failed to saturate h0");
    }

    std::vector<int> parts;
    int prev_cnt = 0;
    for (int m = lo + 1; m <= hi; ++m) {
        int cnt = h0(m) - h0(m - 1);
        if (cnt < prev_cnt) throw std::logic_error("h0 profile not concave");
        for (int k = 0; k < cnt - prev_cnt; ++k) parts.push_back(-m);
        prev_cnt = cnt;
    }
    if (static_cast<int>(parts.size()) != r) throw std::logic_error("h0 profile rank mismatch");
    SplittingType t{std::move(parts)};
    if (t.degree() != deg) throw std::logic_error("h0 profile degree mismatch");
    return t;
}

/* a length-m modification supported at a finite point: m independent
   fiber vectors, in coordinates with respect to the finite-chart basis */
template <class K>
struct InflationDatum {
    K point;
    std::vector<std::vector<K>> vectors;
};

template <class K>
void validate_datum(const BundleLattice<K>& b, const InflationDatum<K>& q) {
    int m = static_cast<int>(q.vectors.size());
    if (m < 1 || m > b.rank) throw std::domain_error("inflation length must be between 1 and the rank");
    Matrix<K> v(m, b.rank);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(q.vectors[static_cast<size_t>(i)].size()) != b.rank)
            throw std::domain_error("fiber vector length does not match rank");
        for (int j = 0; j < b.rank; ++j) v.at(i, j) = q.vectors[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    if (v.rank() != m) throw std::domain_error("dependent inflation vectors");
}

/* enlarge the finite lattice by (x-y0)^{-1} times each fiber vector; the
   result has degree raised by the datum length */
template <class K>
BundleLattice<K> inflate(const BundleLattice<K>& b, const InflationDatum<K>& q) {
    using RF = RationalFunction<K>;
    validate_lattice(b);
    validate_datum(b, q);
    const int r = b.rank;
    const int m = static_cast<int>(q.vectors.size());

    // in finite-basis coordinates the new lattice is k[x]^r + sum (x-y0)^{-1} s_i k[x];
    // clear the pole and reduce the stacked generators to a square basis
    Poly<K> pole = Poly<K>::x() - Poly<K>(q.point);
    PolyMatrix<K> gen(r + m, r);
    for (int j = 0; j < r; ++j) gen.at(j, j) = pole;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < r; ++j) gen.at(r + i, j) = Poly<K>(q.vectors[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    PolyMatrix<K> basis = row_lattice_basis(gen);
    if (basis.rows() != r) throw std::logic_error("inflated lattice basis has wrong rank");

    Matrix<RF> g(r, r);
    for (int c = 0; c < r; ++c)
        for (int j = 0; j < r; ++j) g.at(j, c) = RF(basis.at(c, j), pole);

    BundleLattice<K> out;
    out.rank = r;
    out.finite = b.finite * g;
    out.infinity = b.infinity;
    if (bundle_degree(out) != bundle_degree(b) + m) throw std::logic_error("inflation degree additivity failed");
    return out;
}

struct InflationPrediction {
    int h0 = 0;
    int h1 = 0;
    int rank_qv = 0;
};

/* the exact cohomology law for inflations: evaluate the twisted-dual
   sections at the point, pair against the datum vectors, and drop h^1 by
   the rank of that pairing */
template <class K>
InflationPrediction predicted_inflation(const BundleLattice<K>& b, const InflationDatum<K>& q) {
    validate_lattice(b);
    validate_datum(b, q);
    const int m = static_cast<int>(q.vectors.size());
    Cohomology c = cohomology(splitting_type(b));

    // sections of E^dual twisted by -2; both sides live in plain coordinate
    // vectors, so the pairing is a dot product of coordinates
    auto sec = global_sections(dual(b), -2);
    Matrix<K> pairing(static_cast<int>(sec.size()), m);
    for (int k = 0; k < static_cast<int>(sec.size()); ++k)
        for (int i = 0; i < m; ++i) {
            K s;
            for (int j = 0; j < b.rank; ++j)
                s += sec[static_cast<size_t>(k)][static_cast<size_t>(j)].eval(q.point) *
                     q.vectors[static_cast<size_t>(i)][static_cast<size_t>(j)];
            pairing.at(k, i) = s;
        }
    int rk = pairing.rank();
    return {c.h0 + m - rk, c.h1 - rk, rk};
}

enum class NoDropReason { spanning_fails, no_section_values };

template <class K>
struct QuotientSelection {
    std::optional<InflationDatum<K>> chosen;
    std::optional<NoDropReason> reason;
    bool spanning = false;
    int dim_values = 0;  // dimension of the span of dual-section values at the point
};

/* pick, from candidate data at one point, a quotient that strictly drops
   h^1; when the candidates fail to span the fiber or the dual sections
   all vanish at the point, report why no drop is guaranteed */
template <class K>
QuotientSelection<K> select_effective_quotient(const BundleLattice<K>& b, const K& y0,
                                               const std::vector<InflationDatum<K>>& candidates) {
    validate_lattice(b);
    if (candidates.empty()) throw std::domain_error("no candidate quotients");
    Cohomology c = cohomology(splitting_type(b));
    if (c.h1 == 0) throw std::domain_error("h1 is already zero; nothing to drop");

    int nvec = 0;
    for (const auto& q : candidates) {
        validate_datum(b, q);
        if (q.point != y0) throw std::domain_error("candidate quotient at the wrong point");
        nvec += static_cast<int>(q.vectors.size());
    }

    QuotientSelection<K> out;

    Matrix<K> all(nvec, b.rank);
    int row = 0;
    for (const auto& q : candidates)
        for (const auto& v : q.vectors) {
            for (int j = 0; j < b.rank; ++j) all.at(row, j) = v[static_cast<size_t>(j)];
            ++row;
        }
    out.spanning = all.rank() == b.rank;

    auto sec = global_sections(dual(b), -2);
    Matrix<K> vals(static_cast<int>(sec.size()), b.rank);
    for (int k = 0; k < static_cast<int>(sec.size()); ++k)
        for (int j = 0; j < b.rank; ++j)
            vals.at(k, j) = sec[static_cast<size_t>(k)][static_cast<size_t>(j)].eval(y0);
    out.dim_values = vals.rank();

    if (!out.spanning) {
        out.reason = NoDropReason::spanning_fails;
        return out;
    }
    if (out.dim_values == 0) {
        out.reason = NoDropReason::no_section_values;
        return out;
    }
    for (const auto& q : candidates)
        if (predicted_inflation(b, q).rank_qv > 0) {
            out.chosen = q;
            return out;
        }
    throw std::logic_error("spanning quotients with nonzero section values produced no drop");
}

}  // namespace tschirn

#endif
