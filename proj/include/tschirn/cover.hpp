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

#ifndef TSCHIRN_COVER_HPP
#define TSCHIRN_COVER_HPP

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bivariate.hpp"
#include "bundle.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "polymat.hpp"
#include "ratfun.hpp"

namespace tschirn {

/* A finite flat degree-d cover of the line as its pushforward algebra: a
   free module with basis e_0 = 1, e_1, ..., e_{d-1} over k[x], the
   multiplication tensor e_i e_j = sum_k c(i,j,k) e_k, and a second basis
   at infinity given by its transition matrix (columns = infinity basis
   vectors in e_i coordinates).  `independent_branch` carries a branch
   degree known from construction data (discriminants, ramification
   counts, node counts) against which the trace computation is checked. */
template <class K>
struct CoverAlgebra {
    int degree = 0;
    std::vector<Poly<K>> mult;
    Matrix<RationalFunction<K>> infinity;
    std::string provenance;  // plane | kummer | pinched | manual
    std::optional<int> independent_branch;

    const Poly<K>& c(int i, int j, int k) const {
        return mult[(static_cast<size_t>(i) * static_cast<size_t>(degree) + static_cast<size_t>(j)) *
                        static_cast<size_t>(degree) +
                    static_cast<size_t>(k)];
    }
    Poly<K>& c(int i, int j, int k) {
        return mult[(static_cast<size_t>(i) * static_cast<size_t>(degree) + static_cast<size_t>(j)) *
                        static_cast<size_t>(degree) +
                    static_cast<size_t>(k)];
    }
};

/* trace of multiplication by each basis element */
template <class K>
std::vector<Poly<K>> trace_vector(const CoverAlgebra<K>& alg) {
    std::vector<Poly<K>> tr(static_cast<size_t>(alg.degree));
    for (int i = 0; i < alg.degree; ++i) {
        Poly<K> s;
        for (int k = 0; k < alg.degree; ++k) s += alg.c(i, k, k);
        tr[static_cast<size_t>(i)] = s;
    }
    return tr;
}

/* Gram matrix of the trace form, tr(e_i e_j) */
template <class K>
PolyMatrix<K> trace_gram(const CoverAlgebra<K>& alg) {
    auto tr = trace_vector(alg);
    PolyMatrix<K> g(alg.degree, alg.degree);
    for (int i = 0; i < alg.degree; ++i)
        for (int j = 0; j < alg.degree; ++j) {
            Poly<K> s;
            for (int k = 0; k < alg.degree; ++k) s += alg.c(i, j, k) * tr[static_cast<size_t>(k)];
            g.at(i, j) = s;
        }
    return g;
}

template <class K>
void validate_cover(const CoverAlgebra<K>& alg) {
    using RF = RationalFunction<K>;
    const int d = alg.degree;
    if (d < 1) throw std::domain_error("cover degree must be at least 1");
    long long p = K::characteristic();
    if (p != 0 && p <= d) throw std::domain_error("characteristic must be zero or exceed the cover degree");
    if (static_cast<long long>(alg.mult.size()) != static_cast<long long>(d) * d * d)
        throw std::domain_error("multiplication tensor shape mismatch");
    if (alg.infinity.rows() != d || alg.infinity.cols() != d)
        throw std::domain_error("infinity transition shape mismatch");

    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            const Poly<K>& v = alg.c(0, j, k);
            if (k == j ? !v.is_one() : !v.is_zero())
                throw std::domain_error("basis element 0 is not a unit");
        }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (alg.c(i, j, k) != alg.c(j, i, k))
                    throw std::domain_error("multiplication tensor is not commutative");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = i; l < d; ++l)
                for (int m = 0; m < d; ++m) {
                    Poly<K> lhs, rhs;
                    for (int k = 0; k < d; ++k) {
                        lhs += alg.c(i, j, k) * alg.c(k, l, m);
                        rhs += alg.c(j, l, k) * alg.c(i, k, m);
                    }
                    if (lhs != rhs) throw std::domain_error("multiplication tensor is not associative");
                }

    if (alg.infinity.det().is_zero()) throw std::domain_error("infinity transition singular");
    Matrix<RF> inv = alg.infinity.inverse();
    for (int i = 0; i < d; ++i)
        if (!inv.at(i, 0).regular_at_infinity())
            throw std::domain_error("unit is outside the infinity lattice");
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            std::vector<RF> w(static_cast<size_t>(d));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    RF f = alg.infinity.at(i, a) * alg.infinity.at(j, b);
                    if (f.is_zero()) continue;
                    for (int k = 0; k < d; ++k) {
                        if (alg.c(i, j, k).is_zero()) continue;
                        w[static_cast<size_t>(k)] += f * RF(alg.c(i, j, k));
                    }
                }
            for (const RF& e : inv.apply(w))
                if (!e.regular_at_infinity())
                    throw std::domain_error("infinity basis not closed under multiplication");
        }
}

/* refusal to compute with a plane model whose chart order might be
   smaller than the maximal one; carries the offending chart */
class MaximalityNotCertified : public std::runtime_error {
  public:
    explicit MaximalityNotCertified(std::string which)
        : std::runtime_error("maximality not certified on the " + which +
                             " chart: discriminant not squarefree"),
          chart(std::move(which)) {}
    std::string chart;
};

/* Cover from a monic plane model y^d + c_1(x) y^{d-1} + ... + c_d(x).
   The finite basis is 1, y, ..., y^{d-1}; the infinity basis comes from
   the reversed model under x -> 1/x, y -> y/x^s with the smallest s that
   clears every coefficient, i.e. s = max over i of ceil(deg c_i / i).
   Both discriminants must be squarefree (the reversed one up to a power
   of x), otherwise the visible orders are refused. */
template <class K>
CoverAlgebra<K> from_plane_model(const BiPoly<K>& f) {
    using RF = RationalFunction<K>;
    const int d = f.ydeg();
    if (d < 2) throw std::domain_error("plane model must have y-degree at least 2");
    if (!f.monic_in_y()) throw std::domain_error("plane model must be monic in y");

    Poly<K> disc = f.discriminant_y();
    if (disc.is_zero()) throw std::domain_error("plane model is not generically reduced");
    if (!squarefree(disc)) throw MaximalityNotCertified("finite");

    int s = 0;
    for (int i = 1; i <= d; ++i) {
        const Poly<K> ci = f.ycoeff(d - i);
        if (!ci.is_zero()) s = std::max(s, (ci.degree() + i - 1) / i);
    }
    std::vector<Poly<K>> rev_coeffs(static_cast<size_t>(d) + 1);
    rev_coeffs[static_cast<size_t>(d)] = Poly<K>::one();
    for (int i = 1; i <= d; ++i) {
        const Poly<K> ci = f.ycoeff(d - i);
        if (ci.is_zero()) continue;
        rev_coeffs[static_cast<size_t>(d - i)] =
            ci.reversed(ci.degree()).shifted(s * i - ci.degree());
    }
    BiPoly<K> rev(std::move(rev_coeffs));
    Poly<K> rdisc = rev.discriminant_y();
    if (rdisc.is_zero()) throw MaximalityNotCertified("infinity");
    int v = rdisc.valuation();
    if (!squarefree(rdisc.exact_div(Poly<K>::monomial(v)))) throw MaximalityNotCertified("infinity");

    CoverAlgebra<K> out;
    out.degree = d;
    out.mult.assign(static_cast<size_t>(d) * d * d, Poly<K>());
    std::vector<BiPoly<K>> ypow(static_cast<size_t>(2 * d - 1));
    ypow[0] = BiPoly<K>::from_x(Poly<K>::one());
    for (int m = 1; m <= 2 * d - 2; ++m)
        ypow[static_cast<size_t>(m)] = (ypow[static_cast<size_t>(m - 1)] * BiPoly<K>::y()).mod_monic(f);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) out.c(i, j, k) = ypow[static_cast<size_t>(i + j)].ycoeff(k);

    out.infinity = Matrix<RF>(d, d);
    for (int i = 0; i < d; ++i) out.infinity.at(i, i) = RF::x_power(-s * i);
    out.provenance = "plane";
    out.independent_branch = disc.degree() + v;
    validate_cover(out);
    return out;
}

/* expected splitting type of the kummer cover y^d = p, deg p = e */
inline SplittingType kummer_expected_type(int d, int e) {
    std::vector<int> parts;
    for (int i = 1; i < d; ++i) parts.push_back((i * e + d - 1) / d);
    return SplittingType(std::move(parts));
}

/* the cyclic cover y^d = p(x) with its natural infinity basis
   y^i / x^{ceil(i e / d)} */
template <class K>
CoverAlgebra<K> kummer_cover(int d, const Poly<K>& p) {
    using RF = RationalFunction<K>;
    if (d < 2) throw std::domain_error("kummer cover needs degree at least 2");
    if (p.degree() < 1) throw std::domain_error("kummer radicand must be nonconstant");
    if (!squarefree(p)) throw std::domain_error("kummer radicand must be squarefree");
    const int e = p.degree();

    CoverAlgebra<K> out;
    out.degree = d;
    out.mult.assign(static_cast<size_t>(d) * d * d, Poly<K>());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i + j < d)
                out.c(i, j, i + j) = Poly<K>::one();
            else
                out.c(i, j, i + j - d) = p;
        }
    out.infinity = Matrix<RF>(d, d);
    for (int i = 0; i < d; ++i) out.infinity.at(i, i) = RF::x_power(-((i * e + d - 1) / d));
    out.provenance = "kummer";
    out.independent_branch = e * (d - 1) + d - std::gcd(d, e);
    validate_cover(out);
    return out;
}

/* the identity cover of the line */
template <class K>
CoverAlgebra<K> trivial_cover() {
    CoverAlgebra<K> out;
    out.degree = 1;
    out.mult = {Poly<K>::one()};
    out.infinity = Matrix<RationalFunction<K>>::identity(1);
    out.provenance = "manual";
    out.independent_branch = 0;
    return out;
}

/* d disjoint copies of the line: basis 1 and d-1 orthogonal idempotents */
template <class K>
CoverAlgebra<K> split_cover(int d) {
    if (d < 1) throw std::domain_error("cover degree must be at least 1");
    CoverAlgebra<K> out;
    out.degree = d;
    out.mult.assign(static_cast<size_t>(d) * d * d, Poly<K>());
    for (int j = 0; j < d; ++j) {
        out.c(0, j, j) = Poly<K>::one();
        out.c(j, 0, j) = Poly<K>::one();
    }
    for (int a = 1; a < d; ++a) out.c(a, a, a) = Poly<K>::one();
    out.infinity = Matrix<RationalFunction<K>>::identity(d);
    out.provenance = "manual";
    out.independent_branch = 0;
    validate_cover(out);
    return out;
}

/* one gluing site: a base point plus the value vector (e_j at the chosen
   fiber point) of one sheet of the base cover over it */
template <class K>
struct PinchPoint {
    K point;
    std::vector<K> sheet;
};

template <class K>
using PinchSpec = std::vector<PinchPoint<K>>;

template <class K>
void validate_pinch_spec(const CoverAlgebra<K>& base, const PinchSpec<K>& spec) {
    const int r = base.degree;
    PolyMatrix<K> g = trace_gram(base);
    for (size_t i = 0; i < spec.size(); ++i) {
        for (size_t j = i + 1; j < spec.size(); ++j)
            if (spec[i].point == spec[j].point) throw std::domain_error("pinch points must be distinct");
        const auto& s = spec[i].sheet;
        if (static_cast<int>(s.size()) != r)
            throw std::domain_error("sheet vector length does not match the base degree");
        if (s[0] != K::one()) throw std::domain_error("sheet vector must evaluate the unit to 1");
        for (int a = 0; a < r; ++a)
            for (int b = a; b < r; ++b) {
                K rhs;
                for (int k = 0; k < r; ++k)
                    rhs += base.c(a, b, k).eval(spec[i].point) * s[static_cast<size_t>(k)];
                if (s[static_cast<size_t>(a)] * s[static_cast<size_t>(b)] != rhs)
                    throw std::domain_error("sheet vector is not an algebra point of the fiber");
            }
        if (g.eval(spec[i].point).det().is_zero())
            throw std::domain_error("base cover is ramified over a pinch point");
    }
}

template <class K>
struct PinchResult {
    CoverAlgebra<K> cover;
    /* rows: the new basis elements e_1, ..., e_r in base coordinates
       (they span the functions vanishing on every chosen sheet) */
    PolyMatrix<K> vanishing_basis;
};

/* Glue a fresh copy of the line onto the base cover along the chosen
   sheets: the result is the kernel subalgebra
   { (f, g) : f(sheet_i) = g(point_i) } of (base algebra) x k[x].  Its
   basis is the unit together with the vanishing sublattice of the base,
   so the finite chart drops out of constrained_kernel_basis and the
   multiplication tensor out of solve_in_lattice.  The infinity basis is
   the untouched product basis, re-expressed in the new coordinates. */
namespace detail {

/* pinch body without the base and result validation passes; callers
   guarantee the base is a valid cover */
template <class K>
PinchResult<K> pinch_unchecked(const CoverAlgebra<K>& base, const PinchSpec<K>& spec) {
    using RF = RationalFunction<K>;
    validate_pinch_spec(base, spec);
    const int r = base.degree;
    const int d = r + 1;

    std::vector<PointConstraint<K>> cons;
    cons.reserve(spec.size());
    for (const auto& pp : spec) cons.push_back({pp.point, pp.sheet});
    auto kb = constrained_kernel_basis(r, cons);
    if (kb.independent != static_cast<int>(spec.size()))
        throw std::logic_error("pinch constraints were dependent");
    const PolyMatrix<K>& vb = kb.basis;

    CoverAlgebra<K> out;
    out.degree = d;
    out.mult.assign(static_cast<size_t>(d) * d * d, Poly<K>());
    for (int j = 0; j < d; ++j) {
        out.c(0, j, j) = Poly<K>::one();
        out.c(j, 0, j) = Poly<K>::one();
    }
    for (int a = 1; a < d; ++a)
        for (int b = a; b < d; ++b) {
            std::vector<RF> prod(static_cast<size_t>(r));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    Poly<K> f = vb.at(a - 1, i) * vb.at(b - 1, j);
                    if (f.is_zero()) continue;
                    for (int k = 0; k < r; ++k) {
                        if (base.c(i, j, k).is_zero()) continue;
                        prod[static_cast<size_t>(k)] += RF(f * base.c(i, j, k));
                    }
                }
            auto coords = solve_in_lattice(vb, prod);
            if (!coords) throw std::logic_error("pinched product left the vanishing lattice");
            for (int t = 0; t < r; ++t) {
                out.c(a, b, t + 1) = (*coords)[static_cast<size_t>(t)];
                out.c(b, a, t + 1) = (*coords)[static_cast<size_t>(t)];
            }
        }

    Matrix<RF> vb_inv = vb.over_field().transpose().inverse();
    out.infinity = Matrix<RF>(d, d);
    // column 0: the unit of the new line component, (0, 1)
    std::vector<RF> unit_base(static_cast<size_t>(r));
    unit_base[0] = RF::one();
    auto w0 = vb_inv.apply(unit_base);
    out.infinity.at(0, 0) = RF::one();
    for (int i = 0; i < r; ++i) out.infinity.at(i + 1, 0) = -w0[static_cast<size_t>(i)];
    // columns 1..r: the base infinity basis, (F_a, 0)
    for (int a = 0; a < r; ++a) {
        std::vector<RF> fa(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) fa[static_cast<size_t>(i)] = base.infinity.at(i, a);
        auto w = vb_inv.apply(fa);
        for (int i = 0; i < r; ++i) out.infinity.at(i + 1, a + 1) = w[static_cast<size_t>(i)];
    }

    out.provenance = "pinched";
    if (base.independent_branch)
        out.independent_branch = *base.independent_branch + 2 * static_cast<int>(spec.size());
    return {std::move(out), kb.basis};
}

}  // namespace detail

template <class K>
PinchResult<K> pinch_detailed(const CoverAlgebra<K>& base, const PinchSpec<K>& spec) {
    validate_cover(base);
    auto res = detail::pinch_unchecked(base, spec);
    validate_cover(res.cover);
    return res;
}

template <class K>
CoverAlgebra<K> pinch(const CoverAlgebra<K>& base, const PinchSpec<K>& spec) {
    return pinch_detailed(base, spec).cover;
}

template <class K>
struct TschirnhausenResult {
    BundleLattice<K> dual_lattice;  // the trace-zero sublattice E^dual
    SplittingType type;             // splitting type of E itself
};

/* Split off the trace: the pushforward algebra is k[x] + (trace zero),
   and the trace-zero sublattice realizes the dual of the Tschirnhausen
   bundle.  Ambient coordinates are the projections e_i - (tr e_i / d),
   i >= 1; in them the finite chart is the identity, and the infinity
   chart is the kernel of the trace functional on the infinity module,
   computed by eliminating against a basis vector of unit trace. */
namespace detail {

/* the trace-zero sublattice, trusting the cover data */
template <class K>
BundleLattice<K> trace_zero_dual(const CoverAlgebra<K>& alg) {
    using RF = RationalFunction<K>;
    const int d = alg.degree;
    if (d < 2) throw std::domain_error("tschirnhausen bundle needs cover degree at least 2");
    if (trace_gram(alg).det().is_zero()) throw std::domain_error("trace form is degenerate");
    auto tr = trace_vector(alg);

    std::vector<RF> tau(static_cast<size_t>(d));
    for (int a = 0; a < d; ++a) {
        RF s;
        for (int i = 0; i < d; ++i) {
            if (tr[static_cast<size_t>(i)].is_zero()) continue;
            s += alg.infinity.at(i, a) * RF(tr[static_cast<size_t>(i)]);
        }
        if (!s.regular_at_infinity()) throw std::logic_error("trace is irregular at infinity");
        tau[static_cast<size_t>(a)] = s;
    }
    int piv = -1;
    for (int a = 0; a < d && piv < 0; ++a)
        if (!tau[static_cast<size_t>(a)].is_zero() && tau[static_cast<size_t>(a)].ratdeg() == 0) piv = a;
    if (piv < 0) throw std::logic_error("no unit-trace direction at infinity");

    BundleLattice<K> dual_lat;
    dual_lat.rank = d - 1;
    dual_lat.finite = Matrix<RF>::identity(d - 1);
    dual_lat.infinity = Matrix<RF>(d - 1, d - 1);
    int col = 0;
    for (int a = 0; a < d; ++a) {
        if (a == piv) continue;
        RF f = tau[static_cast<size_t>(a)] / tau[static_cast<size_t>(piv)];
        for (int i = 1; i < d; ++i)
            dual_lat.infinity.at(i - 1, col) = alg.infinity.at(i, a) - f * alg.infinity.at(i, piv);
        ++col;
    }
    return dual_lat;
}

template <class K>
int bundle_degree_of_cover(const CoverAlgebra<K>& alg) {
    return alg.degree == 1 ? 0 : -bundle_degree(trace_zero_dual(alg));
}

}  // namespace detail

template <class K>
TschirnhausenResult<K> tschirnhausen(const CoverAlgebra<K>& alg) {
    validate_cover(alg);
    BundleLattice<K> dual_lat = detail::trace_zero_dual(alg);
    SplittingType dual_type = splitting_type(dual_lat);
    return {std::move(dual_lat), dual_type.negated_reversed()};
}

struct BranchGenus {
    int branch_degree = 0;
    int p_a = 0;
};

/* branch degree through the identity branch = 2 deg E, and the
   arithmetic genus from deg E = g - 1 + d; construction-provided branch
   data must agree */
template <class K>
BranchGenus branch_and_genus(const CoverAlgebra<K>& alg) {
    validate_cover(alg);
    int deg_e = detail::bundle_degree_of_cover(alg);
    BranchGenus out{2 * deg_e, deg_e + 1 - alg.degree};
    if (alg.independent_branch && *alg.independent_branch != out.branch_degree)
        throw std::logic_error("branch degree disagrees with construction data");
    return out;
}

template <class K>
struct TowerResult {
    CoverAlgebra<K> cover;
    std::vector<int> degree_trace;  // deg E after each pinch
    std::vector<K> points_used;
};

/* Realize a sorted positive splitting type by a tower of pinches, one
   summand per step, largest degree first so that every intermediate
   extension of line bundles splits for degree reasons.  Gluing points
   are fresh integers, skipping any the current tower is ramified over
   (that check also rules out reusing an earlier node); sheets always sit
   on the original line component, whose basis values are tracked through
   the coordinate changes.  Degree additivity is asserted at every step. */
template <class K>
TowerResult<K> build_tower(const std::vector<int>& degrees) {
    if (degrees.empty()) throw std::domain_error("tower needs at least one degree");
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < 1) throw std::domain_error("tower degrees must be positive");
        if (i > 0 && degrees[i] < degrees[i - 1])
            throw std::domain_error("tower degrees must be sorted ascending");
    }
    std::vector<int> order(degrees.rbegin(), degrees.rend());

    TowerResult<K> out;
    CoverAlgebra<K> cur = trivial_cover<K>();
    // values of each basis element on each line component; component 0 is
    // the original line and carries every gluing sheet
    std::vector<std::vector<Poly<K>>> comp{{Poly<K>::one()}};
    long long next = 0;
    const long long char_p = K::characteristic();
    int prev_deg = 0;

    for (int ell : order) {
        PolyMatrix<K> g = trace_gram(cur);
        PinchSpec<K> spec;
        while (static_cast<int>(spec.size()) < ell) {
            if (char_p != 0 && next >= char_p)
                throw std::domain_error("not enough rational points in this characteristic");
            K y = K::from_int(next++);
            if (g.eval(y).det().is_zero()) continue;
            std::vector<K> sheet(static_cast<size_t>(cur.degree));
            for (int j = 0; j < cur.degree; ++j)
                sheet[static_cast<size_t>(j)] = comp[static_cast<size_t>(j)][0].eval(y);
            spec.push_back({y, std::move(sheet)});
            out.points_used.push_back(y);
        }
        auto res = detail::pinch_unchecked(cur, spec);

        int lines = static_cast<int>(comp[0].size());
        std::vector<std::vector<Poly<K>>> nc(static_cast<size_t>(res.cover.degree));
        nc[0].assign(static_cast<size_t>(lines) + 1, Poly<K>::one());
        for (int a = 1; a < res.cover.degree; ++a) {
            nc[static_cast<size_t>(a)].assign(static_cast<size_t>(lines) + 1, Poly<K>());
            for (int t = 0; t < lines; ++t) {
                Poly<K> s;
                for (int j = 0; j < cur.degree; ++j)
                    s += res.vanishing_basis.at(a - 1, j) * comp[static_cast<size_t>(j)][static_cast<size_t>(t)];
                nc[static_cast<size_t>(a)][static_cast<size_t>(t)] = s;
            }
        }
        comp = std::move(nc);
        cur = std::move(res.cover);

        int deg_now = detail::bundle_degree_of_cover(cur);
        if (deg_now != prev_deg + ell) throw std::logic_error("pinch degree additivity failed");
        out.degree_trace.push_back(deg_now);
        prev_deg = deg_now;
    }
    validate_cover(cur);
    out.cover = std::move(cur);
    return out;
}

class NotAnIsomorphism : public std::runtime_error {
  public:
    explicit NotAnIsomorphism(std::string which)
        : std::runtime_error("not an isomorphism on the " + which + " chart"), chart(std::move(which)) {}
    std::string chart;
};

/* an affine-linear presentation of an embedding map: linear part lambda
   in both charts plus the affine offset alpha */
template <class K>
struct EmbeddingPresentation {
    std::vector<Poly<K>> alpha;
    PolyMatrix<K> lambda_finite;
    Matrix<RationalFunction<K>> lambda_infinity;
};

template <class K>
struct AffineNormalization {
    std::vector<Poly<K>> translation;  // applied after the inverse linear part
    PolyMatrix<K> inverse_finite;
    Matrix<RationalFunction<K>> inverse_infinity;
};

/* Certify that the linear part is an isomorphism of lattice pairs
   (unimodular over k[x] on the finite chart, unimodular over the local
   ring at infinity on the other) and return the affine transform that
   carries the embedding back to the canonical one: the inverse linear
   part followed by translation. */
template <class K>
AffineNormalization<K> normalize_affine_embedding(const EmbeddingPresentation<K>& m,
                                                  const CoverAlgebra<K>& target) {
    using RF = RationalFunction<K>;
    validate_cover(target);
    const int r = target.degree - 1;
    if (r < 1) throw std::domain_error("target cover has no bundle directions");
    if (static_cast<int>(m.alpha.size()) != r || m.lambda_finite.rows() != r ||
        m.lambda_finite.cols() != r || m.lambda_infinity.rows() != r || m.lambda_infinity.cols() != r)
        throw std::domain_error("embedding data does not match the cover rank");

    Poly<K> df = m.lambda_finite.det();
    if (df.is_zero() || df.degree() != 0) throw NotAnIsomorphism("finite");
    bool inf_ok = true;
    for (int i = 0; i < r && inf_ok; ++i)
        for (int j = 0; j < r && inf_ok; ++j)
            if (!m.lambda_infinity.at(i, j).regular_at_infinity()) inf_ok = false;
    RF di = m.lambda_infinity.det();
    if (di.is_zero() || di.ratdeg() != 0) inf_ok = false;
    if (!inf_ok) throw NotAnIsomorphism("infinity");

    AffineNormalization<K> out;
    Matrix<RF> invf = m.lambda_finite.over_field().inverse();
    out.inverse_finite = PolyMatrix<K>(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out.inverse_finite.at(i, j) = invf.at(i, j).as_polynomial();
    out.inverse_infinity = m.lambda_infinity.inverse();

    std::vector<RF> arf(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) arf[static_cast<size_t>(i)] = RF(m.alpha[static_cast<size_t>(i)]);
    auto t = invf.apply(arf);
    out.translation.resize(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) out.translation[static_cast<size_t>(i)] = -t[static_cast<size_t>(i)].as_polynomial();
    return out;
}

}  // namespace tschirn

#endif
