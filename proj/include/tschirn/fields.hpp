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

#ifndef TSCHIRN_FIELDS_HPP
#define TSCHIRN_FIELDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tschirn {

/* exact rationals, arbitrary precision, always in lowest terms with positive
   denominator (GMP keeps the canonical form for us) */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long long n) {
        Rational r;
        r.v_ = mpq_class(static_cast<long>(n));
        return r;
    }
    static long long characteristic() { return 0; }

    /* gcd in the content sense: gcd of numerators over lcm of
       denominators; dividing a list by the fold of this over it leaves
       coprime integers */
    static Rational content_gcd(const Rational& a, const Rational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        mpz_class n, d;
        mpz_gcd(n.get_mpz_t(), a.v_.get_num().get_mpz_t(), b.v_.get_num().get_mpz_t());
        mpz_lcm(d.get_mpz_t(), a.v_.get_den().get_mpz_t(), b.v_.get_den().get_mpz_t());
        return Rational(mpq_class(std::move(n), std::move(d)));
    }

    bool is_zero() const { return sgn(v_) == 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    std::string str() const { return v_.get_str(); }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

  private:
    mpq_class v_;
};

/* prime field with a session-wide modulus; the modulus must be prime and
   below 2^31 so that products of reduced representatives fit in int64 */
class Fp {
  public:
    static void set_modulus(long long p) {
        if (p < 2 || p > 2147483647LL) throw std::domain_error("modulus out of range");
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0) throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
        slot() = p;
    }
    static long long modulus() {
        if (slot() == 0) throw std::logic_error("prime-field modulus not set");
        return slot();
    }
    static long long characteristic() { return modulus(); }

    Fp() : v_(0) {}
    Fp(long long n) { v_ = reduce(n); }

    static Fp zero() { return Fp(); }
    static Fp one() { return Fp(1); }
    static Fp from_int(long long n) { return Fp(n); }

    bool is_zero() const { return v_ == 0; }
    long long value() const { return v_; }

    Fp operator-() const { return v_ == 0 ? Fp() : raw(modulus() - v_); }
    Fp& operator+=(const Fp& o) {
        v_ += o.v_;
        if (v_ >= modulus()) v_ -= modulus();
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        v_ -= o.v_;
        if (v_ < 0) v_ += modulus();
        return *this;
    }
    Fp& operator*=(const Fp& o) { v_ = (v_ * o.v_) % modulus(); return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("inverse of zero");
        // extended Euclid on (v, p)
        long long a = v_, b = modulus(), x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            long long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0);
    }

    std::string str() const { return std::to_string(v_); }

  private:
    static long long& slot() {
        static long long m = 0;
        return m;
    }
    static long long reduce(long long n) {
        long long p = modulus();
        long long r = n % p;
        return r < 0 ? r + p : r;
    }
    static Fp raw(long long v) {
        Fp f;
        f.v_ = v;
        return f;
    }

    long long v_;
};

}  // namespace tschirn

#endif
