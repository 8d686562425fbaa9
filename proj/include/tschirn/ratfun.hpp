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

#ifndef TSCHIRN_RATFUN_HPP
#define TSCHIRN_RATFUN_HPP

#include <stdexcept>
#include <utility>

#include "poly.hpp"

namespace tschirn {

/* element of k(x), reduced, with monic denominator */
template <class K>
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Poly<K>::one()) {}
    RationalFunction(const K& c) : num_(c), den_(Poly<K>::one()) {}
    RationalFunction(const Poly<K>& num) : num_(num), den_(Poly<K>::one()) {}
    RationalFunction(Poly<K> num, Poly<K> den) {
        if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
        num_ = std::move(num);
        den_ = std::move(den);
        normalize();
    }

    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(K::one()); }
    static RationalFunction from_int(long long n) { return RationalFunction(K::from_int(n)); }
    static RationalFunction x() { return RationalFunction(Poly<K>::x()); }
    /* x^k for any integer k */
    static RationalFunction x_power(int k) {
        if (k >= 0) return RationalFunction(Poly<K>::monomial(k));
        return RationalFunction(Poly<K>::one(), Poly<K>::monomial(-k));
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    const Poly<K>& as_polynomial() const {
        if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial");
        return num_;
    }

    /* degree as a rational function: deg num - deg den (neg_inf for zero) */
    int ratdeg() const {
        if (is_zero()) return Poly<K>::neg_inf;
        return num_.degree() - den_.degree();
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inv();
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return RationalFunction(den_, num_);
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K eval(const K& v) const {
        K d = den_.eval(v);
        if (d.is_zero()) throw std::domain_error("evaluation at a pole");
        return num_.eval(v) / d;
    }

    /* residue at a simple pole c: num(c) / den'(c) */
    K residue_at_simple_pole(const K& c) const {
        if (!den_.eval(c).is_zero()) throw std::domain_error("residue requested away from a pole");
        K dp = den_.derivative().eval(c);
        if (dp.is_zero()) throw std::domain_error("pole is not simple");
        return num_.eval(c) / dp;
    }

    /* membership in the local ring at infinity */
    bool regular_at_infinity() const { return is_zero() || ratdeg() <= 0; }

    /* membership in k[1/x]: poles at x = 0 only and no pole at infinity */
    bool in_inf_ring() const {
        if (is_zero()) return true;
        if (den_.degree() != den_.valuation()) return false;  // denominator not a monomial
        return num_.degree() <= den_.degree();
    }

    /* rewrite an element of k[1/x] as a polynomial in s = 1/x */
    Poly<K> to_inf_poly() const {
        if (!in_inf_ring()) throw std::domain_error("not regular away from x = 0");
        if (is_zero()) return Poly<K>();
        // num/x^k  ->  s^k * num(1/s) = s^(k - deg num) * rev(num)
        int k = den_.degree();
        return num_.reversed(num_.degree()).shifted(k - num_.degree());
    }

    /* substitute x -> 1/x */
    RationalFunction subst_inverse() const {
        if (is_zero()) return RationalFunction();
        int n = num_.degree(), m = den_.degree();
        Poly<K> rn = num_.reversed(n), rd = den_.reversed(m);
        if (m >= n) return RationalFunction(rn.shifted(m - n), rd);
        return RationalFunction(rn, rd.shifted(n - m));
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<K>::one();
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        K c = den_.lc().inv();
        num_ = num_.scaled(c);
        den_ = den_.scaled(c);
    }

    Poly<K> num_, den_;
};

/* element of k[1/x] given as a polynomial in s = 1/x, back to k(x) */
template <class K>
RationalFunction<K> inf_poly_to_ratfun(const Poly<K>& p) {
    if (p.is_zero()) return RationalFunction<K>();
    return RationalFunction<K>(p.reversed(p.degree()), Poly<K>::monomial(p.degree()));
}

}  // namespace tschirn

#endif
