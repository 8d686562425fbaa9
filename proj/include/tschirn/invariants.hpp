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

#ifndef TSCHIRN_INVARIANTS_HPP
#define TSCHIRN_INVARIANTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bundle.hpp"
#include "cover.hpp"
#include "poly.hpp"
#include "rng.hpp"

namespace tschirn {

/* moduli parameters of degree-d genus-g covers of a genus-g_Y base;
   b is the degree of the associated rank-(d-1) bundle */
struct HurwitzParams {
    int d = 2;
    int g = 0;
    int g_y = 0;

    int b() const { return g - 1 - d * (g_y - 1); }
};

inline void validate_hurwitz(const HurwitzParams& p) {
    if (p.d < 2) throw std::domain_error("cover degree must be at least 2");
    if (p.g_y < 0) throw std::domain_error("base genus must be nonnegative");
}

inline int hurwitz_dimension(const HurwitzParams& p) {
    validate_hurwitz(p);
    int b = p.b();
    if (b < 0) throw std::domain_error("bundle degree b is negative");
    int via_b = 2 * b;
    int via_riemann_hurwitz = (2 * p.g - 2) - p.d * (2 * p.g_y - 2);
    if (via_b != via_riemann_hurwitz) throw std::logic_error("dimension expressions disagree");
    return via_b;
}

/* expected dimensions of the stratum of covers with prescribed
   splitting type, via the embedded-curve parameter count: a Hilbert
   scheme of curves in the bundle's total space, reduced by the affine
   automorphisms of that total space */
struct MaroniExpected {
    int hilb_dim = 0;
    int affine_group_dim = 0;
    int maroni_dim = 0;
    int codim = 0;
};

inline MaroniExpected maroni_expected(const SplittingType& t, const HurwitzParams& p) {
    validate_hurwitz(p);
    if (t.rank() != p.d - 1) throw std::domain_error("splitting type rank must be d - 1");
    int b = p.b();
    if (t.degree() != b) throw std::domain_error("splitting type degree must equal b");
    int h1_end = end_h1(t);
    MaroniExpected out;
    out.hilb_dim = 3 * b - p.d * (p.d - 1) * (p.g_y - 1);
    out.affine_group_dim = b - p.d * (p.d - 1) * (p.g_y - 1) + h1_end;
    out.maroni_dim = out.hilb_dim - out.affine_group_dim;
    out.codim = h1_end;
    return out;
}

inline bool miranda_realizable(int a1, int a2) {
    if (a1 < 1 || a2 < a1) throw std::domain_error("need 1 <= a1 <= a2");
    return a2 <= 2 * a1;
}

/* a global section of Sym^3 E tensor det E-dual for E = O(a1) + O(a2),
   written as the fiberwise binary cubic p z^3 + q z^2 w + r z w^2 + s w^3;
   the four coefficient degrees are forced by the twist, a negative bound
   forcing the zero polynomial */
template <class K>
struct TripleCoverSection {
    int a1 = 1;
    int a2 = 1;
    Poly<K> p, q, r, s;
};

template <class K>
void validate_section(const TripleCoverSection<K>& c) {
    if (c.a1 < 1 || c.a2 < c.a1) throw std::domain_error("need 1 <= a1 <= a2");
    auto check = [](const Poly<K>& f, int bound, const char* name) {
        if (f.is_zero()) return;
        if (bound < 0 || f.degree() > bound)
            throw std::domain_error(std::string(name) + " exceeds its degree bound");
    };
    check(c.p, 2 * c.a1 - c.a2, "p");
    check(c.q, c.a1, "q");
    check(c.r, c.a2, "r");
    check(c.s, 2 * c.a2 - c.a1, "s");
}

/* discriminant of the binary cubic, a section of a degree-2(a1+a2)
   line bundle on the base */
template <class K>
Poly<K> cubic_discriminant(const TripleCoverSection<K>& c) {
    const Poly<K>&p = c.p, &q = c.q, &r = c.r, &s = c.s;
    return p * q * r * s * K::from_int(18) - q * q * q * s * K::from_int(4) + q * q * r * r -
           p * r * r * r * K::from_int(4) - p * p * s * s * K::from_int(27);
}

/* The cubic algebra of the section: for a root z of the dehomogenized
   cubic, the elements w = p z and t = p z^2 + q z close under
   multiplication with polynomial structure constants (w^2 = -q w + p t,
   w t = -p s - r w, t^2 = -q s - s w - r t), and the infinity basis
   (1, w/x^a1, t/x^a2) stays closed exactly because of the four degree
   bounds.  The table is polynomial in (p, q, r, s), so it defines a
   ring for degenerate sections too. */
template <class K>
CoverAlgebra<K> cover_from_cubic_section(const TripleCoverSection<K>& c) {
    using RF = RationalFunction<K>;
    validate_section(c);
    CoverAlgebra<K> out;
    out.degree = 3;
    out.mult.assign(27, Poly<K>());
    for (int j = 0; j < 3; ++j) {
        out.c(0, j, j) = Poly<K>::one();
        out.c(j, 0, j) = Poly<K>::one();
    }
    out.c(1, 1, 1) = -c.q;
    out.c(1, 1, 2) = c.p;
    out.c(1, 2, 0) = -(c.p * c.s);
    out.c(1, 2, 1) = -c.r;
    out.c(2, 1, 0) = -(c.p * c.s);
    out.c(2, 1, 1) = -c.r;
    out.c(2, 2, 0) = -(c.q * c.s);
    out.c(2, 2, 1) = -c.s;
    out.c(2, 2, 2) = -c.r;
    out.infinity = Matrix<RF>(3, 3);
    out.infinity.at(0, 0) = RF::one();
    out.infinity.at(1, 1) = RF::x_power(-c.a1);
    out.infinity.at(2, 2) = RF::x_power(-c.a2);
    out.provenance = "manual";
    validate_cover(out);
    return out;
}

struct MirandaSearchStats {
    int attempts = 0;
    int zero_discriminant = 0;
    int finite_chart_failures = 0;
    int infinity_chart_failures = 0;
};

class MirandaExhausted : public std::runtime_error {
  public:
    explicit MirandaExhausted(const MirandaSearchStats& st)
        : std::runtime_error("no smooth triple cover witness in " + std::to_string(st.attempts) +
                             " attempts"),
          stats(st) {}
    MirandaSearchStats stats;
};

template <class K>
struct MirandaWitness {
    TripleCoverSection<K> section;
    Poly<K> discriminant;
    MirandaSearchStats stats;
};

namespace detail {

template <class K>
Poly<K> random_bounded_poly(StreamRng& rng, int bound) {
    if (bound < 0) return Poly<K>();
    return random_poly<K>(rng, bound);
}

/* simple branching on both charts: the discriminant must be squarefree,
   and so must its reversal within the weighted-degree cap, which adds
   the branch multiplicity at the infinity point of the base */
template <class K>
bool simple_branching(const Poly<K>& disc, int cap, MirandaSearchStats& st) {
    if (disc.is_zero()) {
        ++st.zero_discriminant;
        return false;
    }
    if (!squarefree(disc)) {
        ++st.finite_chart_failures;
        return false;
    }
    if (!squarefree(disc.reversed(cap))) {
        ++st.infinity_chart_failures;
        return false;
    }
    return true;
}

}  // namespace detail

/* random search for a smooth-cover witness of the given invariants */
template <class K>
MirandaWitness<K> miranda_construct(int a1, int a2, int attempts, uint64_t seed) {
    if (!miranda_realizable(a1, a2))
        throw std::domain_error("no smooth triple cover exists: a2 exceeds 2*a1");
    if (attempts < 1) throw std::domain_error("need at least one attempt");
    MirandaSearchStats st;
    for (int k = 0; k < attempts; ++k) {
        StreamRng rng(seed, "miranda-construct", static_cast<uint64_t>(k));
        TripleCoverSection<K> c;
        c.a1 = a1;
        c.a2 = a2;
        c.p = detail::random_bounded_poly<K>(rng, 2 * a1 - a2);
        c.q = detail::random_bounded_poly<K>(rng, a1);
        c.r = detail::random_bounded_poly<K>(rng, a2);
        c.s = detail::random_bounded_poly<K>(rng, 2 * a2 - a1);
        ++st.attempts;
        Poly<K> disc = cubic_discriminant(c);
        if (detail::simple_branching(disc, 2 * (a1 + a2), st))
            return {std::move(c), std::move(disc), st};
    }
    throw MirandaExhausted(st);
}

struct DegenerationDiagnostic {
    int trials = 0;
    int failures = 0;   // draws rejected by the simple-branching certificate
    bool p_forced_zero = false;
};

/* companion run for non-realizable invariants: with 2*a1 - a2 < 0 the
   leading cubic coefficient is forced to vanish, so the discriminant
   picks up the square factor q^2; this gathers the failure counts
   (statistical evidence, not a proof of the obstruction) */
template <class K>
DegenerationDiagnostic miranda_degeneration_diagnostic(int a1, int a2, int trials, uint64_t seed) {
    if (a1 < 1 || a2 < a1) throw std::domain_error("need 1 <= a1 <= a2");
    if (miranda_realizable(a1, a2))
        throw std::domain_error("diagnostic applies to non-realizable invariants only");
    DegenerationDiagnostic out;
    out.p_forced_zero = true;
    MirandaSearchStats st;
    for (int k = 0; k < trials; ++k) {
        StreamRng rng(seed, "miranda-degenerate", static_cast<uint64_t>(k));
        TripleCoverSection<K> c;
        c.a1 = a1;
        c.a2 = a2;
        c.p = detail::random_bounded_poly<K>(rng, 2 * a1 - a2);
        c.q = detail::random_bounded_poly<K>(rng, a1);
        c.r = detail::random_bounded_poly<K>(rng, a2);
        c.s = detail::random_bounded_poly<K>(rng, 2 * a2 - a1);
        ++out.trials;
        if (!detail::simple_branching(cubic_discriminant(c), 2 * (a1 + a2), st)) ++out.failures;
    }
    return out;
}

/* Degree sequence (deg L_1, ..., deg L_r) with deg L_i + N <= deg L_{i+1}
   and total e, by the extremal greedy rule: push everything below the
   top as low as the gap chain allows relative to L_{r-1} = -N after a
   normalizing twist, and give the top quotient the remainder. */
inline std::vector<int> filtration_degrees(int r, int e, int n) {
    if (r < 1) throw std::domain_error("rank must be at least 1");
    if (n < 0) throw std::domain_error("gap must be nonnegative");
    int twist = 0;
    if (e < 0) twist = (-e + r - 1) / r;  // smallest m with e + r*m >= 0
    int e_pos = e + r * twist;
    std::vector<int> out(static_cast<size_t>(r));
    int lower_sum = 0;
    for (int i = 0; i < r - 1; ++i) {
        out[static_cast<size_t>(i)] = -n * (r - 1 - i);
        lower_sum += out[static_cast<size_t>(i)];
    }
    out[static_cast<size_t>(r - 1)] = e_pos - lower_sum;
    for (int& v : out) v -= twist;
    return out;
}

/* special fiber of the isotrivial degeneration with prescribed gaps */
inline SplittingType rees_degeneration_target(const SplittingType& t, int n) {
    return SplittingType(filtration_degrees(t.rank(), t.degree(), n));
}

}  // namespace tschirn

#endif
