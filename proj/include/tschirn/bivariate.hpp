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

#ifndef TSCHIRN_BIVARIATE_HPP
#define TSCHIRN_BIVARIATE_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "ratfun.hpp"

namespace tschirn {

/* polynomial in x and y, stored as a dense list of k[x] coefficients in
   ascending powers of y */
template <class K>
class BiPoly {
  public:
    BiPoly() {}
    explicit BiPoly(std::vector<Poly<K>> ycoeffs) : c_(std::move(ycoeffs)) { prune(); }

    static BiPoly y() { return BiPoly(std::vector<Poly<K>>{Poly<K>(), Poly<K>::one()}); }
    static BiPoly from_x(const Poly<K>& p) { return BiPoly(std::vector<Poly<K>>{p}); }
    static BiPoly y_monomial(int k, const Poly<K>& c = Poly<K>::one()) {
        if (k < 0) throw std::domain_error("monomial with negative exponent");
        std::vector<Poly<K>> v(static_cast<size_t>(k) + 1);
        v[static_cast<size_t>(k)] = c;
        return BiPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int ydeg() const { return c_.empty() ? Poly<K>::neg_inf : static_cast<int>(c_.size()) - 1; }
    Poly<K> ycoeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Poly<K>();
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<Poly<K>>& ycoeffs() const { return c_; }
    bool monic_in_y() const { return !c_.empty() && c_.back().is_one(); }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        prune();
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        prune();
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return BiPoly();
        std::vector<Poly<K>> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return BiPoly(std::move(r));
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a.c_ == b.c_); }

    BiPoly derivative_y() const {
        if (c_.size() <= 1) return BiPoly();
        std::vector<Poly<K>> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i].scaled(K::from_int(static_cast<long long>(i)));
        return BiPoly(std::move(r));
    }

    K eval(const K& x0, const K& y0) const {
        K acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * y0 + c_[i].eval(x0);
        return acc;
    }

    /* substitute a fixed polynomial value for y */
    Poly<K> eval_y(const Poly<K>& v) const {
        Poly<K> acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    /* remainder modulo a divisor that is monic in y */
    BiPoly mod_monic(const BiPoly& f) const {
        if (!f.monic_in_y() || f.ydeg() < 1) throw std::domain_error("divisor must be monic in y");
        BiPoly r = *this;
        while (r.ydeg() >= f.ydeg()) {
            int k = r.ydeg() - f.ydeg();
            Poly<K> c = r.c_.back();
            r -= f * y_monomial(k, c);
        }
        return r;
    }

    /* discriminant with respect to y, as a polynomial in x */
    Poly<K> discriminant_y() const {
        int d = ydeg();
        if (d < 1) throw std::domain_error("discriminant needs positive y-degree");
        long long p = K::characteristic();
        if (p != 0 && p <= d) throw std::domain_error("characteristic too small for discriminant");
        using RF = RationalFunction<K>;
        auto lift = [](const BiPoly& g) {
            std::vector<RF> v;
            v.reserve(g.c_.size());
            for (const auto& c : g.c_) v.push_back(RF(c));
            return Poly<RF>(std::move(v));
        };
        RF res = resultant(lift(*this), lift(derivative_y()));
        RF disc = res / RF(c_.back());
        if ((static_cast<long long>(d) * (d - 1) / 2) % 2 != 0) disc = -disc;
        return disc.as_polynomial();
    }

  private:
    void prune() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Poly<K>> c_;
};

}  // namespace tschirn

#endif
