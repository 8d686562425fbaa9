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

#ifndef TSCHIRN_POLY_HPP
#define TSCHIRN_POLY_HPP

#include <concepts>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tschirn {

/* dense univariate polynomial over a field K; coefficients ascending, no
   trailing zeros, degree of the zero polynomial is the sentinel neg_inf */
template <class K>
class Poly {
  public:
    static constexpr int neg_inf = std::numeric_limits<int>::min() / 2;

    Poly() {}
    Poly(const K& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { prune(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(K::one()); }
    static Poly x() { return monomial(1); }
    static Poly monomial(int k, const K& c = K::one()) {
        if (k < 0) throw std::domain_error("monomial with negative exponent");
        if (c.is_zero()) return Poly();
        std::vector<K> v(static_cast<size_t>(k) + 1);
        v[static_cast<size_t>(k)] = c;
        Poly p;
        p.c_ = std::move(v);
        return p;
    }

    int degree() const { return c_.empty() ? neg_inf : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == K::one(); }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K();
        return c_[static_cast<size_t>(i)];
    }
    K lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero");
        return c_.back();
    }
    const std::vector<K>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        prune();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        prune();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        Poly p;
        p.c_ = std::move(r);
        p.prune();
        return p;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& c) const {
        if (c.is_zero()) return Poly();
        Poly r = *this;
        for (auto& e : r.c_) e = e * c;
        return r;
    }
    /* multiply by x^k */
    Poly shifted(int k) const {
        if (is_zero()) return Poly();
        if (k < 0) throw std::domain_error("negative shift");
        Poly r;
        r.c_.assign(static_cast<size_t>(k), K());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c_ == b.c_); }

    /* euclidean division by a nonzero divisor: returns (quotient, remainder) */
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly r = *this, q;
        const K li = d.lc().inv();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            K c = r.lc() * li;
            q += monomial(k, c);
            r -= d.scaled(c).shifted(k);
        }
        return {q, r};
    }
    Poly exact_div(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::logic_error("exact_div with nonzero remainder");
        return q;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K::from_int(static_cast<long long>(i));
        Poly p;
        p.c_ = std::move(r);
        p.prune();
        return p;
    }

    K eval(const K& v) const {
        K acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        return scaled(lc().inv());
    }

    /* x^bound * p(1/x); requires bound >= degree */
    Poly reversed(int bound) const {
        if (is_zero()) return Poly();
        if (bound < degree()) throw std::domain_error("reversal bound below degree");
        std::vector<K> r(static_cast<size_t>(bound) + 1);
        for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(bound) - i] = c_[i];
        Poly p;
        p.c_ = std::move(r);
        p.prune();
        return p;
    }

    /* order of vanishing at x = 0 (0 for nonzero constant term) */
    int valuation() const {
        if (is_zero()) throw std::domain_error("valuation of zero");
        int v = 0;
        while (c_[static_cast<size_t>(v)].is_zero()) ++v;
        return v;
    }

    Poly pow(int e) const {
        if (e < 0) throw std::domain_error("negative power");
        Poly r = one(), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

  private:
    void prune() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

/* Fields of fractions (such as the rationals) can expose content_gcd,
   the gcd of two fractions in the content sense: gcd of numerators over
   lcm of denominators.  Plain Euclid over such a field swells its
   intermediate coefficients quadratically; with the hook, poly_gcd runs
   a primitive pseudo-remainder sequence instead, dividing out the
   content after every step so coefficients stay near the result size. */
template <class K>
concept HasContentGcd = requires(const K& a, const K& b) {
    { K::content_gcd(a, b) } -> std::same_as<K>;
};

template <class K>
    requires HasContentGcd<K>
K poly_content(const Poly<K>& p) {
    K c;
    for (int i = 0; i <= p.degree(); ++i) {
        const K& a = p.coeff(i);
        if (!a.is_zero()) c = K::content_gcd(c, a);
    }
    return c;
}

/* lc(b)^t * (a mod b) for some t >= 0, without leaving the subring
   generated by the coefficients */
template <class K>
Poly<K> pseudo_remainder(Poly<K> r, const Poly<K>& b) {
    const K lb = b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        K lr = r.lc();
        r = r.scaled(lb) - b.scaled(lr).shifted(k);
    }
    return r;
}

/* monic gcd; gcd(0, 0) = 0 */
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    if constexpr (HasContentGcd<K>) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        a = a.scaled(poly_content(a).inv());
        b = b.scaled(poly_content(b).inv());
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            Poly<K> r = pseudo_remainder(a, b);
            if (!r.is_zero()) r = r.scaled(poly_content(r).inv());
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    } else {
        while (!b.is_zero()) {
            Poly<K> r = a.divmod(b).second;
            a = b;
            b = r;
        }
        return a.monic();
    }
}

template <class K>
Poly<K> poly_lcm(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    return (a * b).exact_div(poly_gcd(a, b)).monic();
}

/* monic g = gcd(a, b) together with u, v such that u*a + v*b = g */
template <class K>
struct PolyExtGcd {
    Poly<K> g, u, v;
};

template <class K>
PolyExtGcd<K> poly_ext_gcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> u0 = Poly<K>::one(), u1;
    Poly<K> v0, v1 = Poly<K>::one();
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1;
        r1 = r;
        Poly<K> ut = u0 - q * u1, vt = v0 - q * v1;
        u0 = u1;
        u1 = ut;
        v0 = v1;
        v1 = vt;
    }
    if (r0.is_zero()) return {Poly<K>(), Poly<K>(), Poly<K>()};
    K c = r0.lc().inv();
    return {r0.scaled(c), u0.scaled(c), v0.scaled(c)};
}

/* nonzero with no repeated roots, detected via gcd with the derivative */
template <class K>
bool squarefree(const Poly<K>& f) {
    if (f.is_zero()) return false;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

/* resultant via the euclidean remainder sequence, over any field */
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
    if (a.is_zero() || b.is_zero()) return F();
    F res = F::one();
    bool negate = false;
    while (b.degree() > 0) {
        Poly<F> r = a.divmod(b).second;
        if (r.is_zero()) return F();
        if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
        F lead = b.lc();
        for (int i = 0; i < a.degree() - r.degree(); ++i) res = res * lead;
        a = b;
        b = r;
    }
    // b is a nonzero constant: res *= b^{deg a}
    for (int i = 0; i < a.degree(); ++i) res = res * b.lc();
    return negate ? -res : res;
}

}  // namespace tschirn

#endif
