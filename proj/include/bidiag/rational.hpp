// Exact rational scalar type.  Thin value wrapper around GMP's mpq_class.
//
// The wrapper exists for two reasons: mpq_class construction from a
// numerator/denominator pair does not canonicalize (and canonicalize()
// aborts on a zero denominator), and we want parsing/printing pinned to the
// "p" / "p/q" wire format used everywhere else in the project.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "bidiag/errors.hpp"

namespace bidiag {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const mpz_class& n) : v_(n) {}

    Rational(long num, long den) {
        if (den == 0) throw Singular("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw Singular("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with optional leading '-' on p (and on q).
    // Rejects zero denominators and anything with stray characters.
    static Rational parse(const std::string& text) {
        auto bad = [&]() -> ParseError {
            return ParseError("not a rational: '" + text + "'");
        };
        auto is_int = [](const std::string& s) {
            if (s.empty()) return false;
            size_t start = (s[0] == '-') ? 1 : 0;
            if (start == s.size()) return false;
            for (size_t i = start; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        std::string num = text, den = "1";
        if (auto slash = text.find('/'); slash != std::string::npos) {
            num = text.substr(0, slash);
            den = text.substr(slash + 1);
        }
        if (!is_int(num) || !is_int(den)) throw bad();
        mpz_class n(num), d(den);
        if (d == 0) throw ParseError("zero denominator: '" + text + "'");
        Rational r;
        r.v_ = mpq_class(n, d);
        r.v_.canonicalize();
        return r;
    }

    std::string str() const { return v_.get_str(); }

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Singular("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw Singular("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational base = *this, acc = Rational(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    // Exact square root when both numerator and denominator are perfect
    // squares; nullopt otherwise (including all negative inputs).
    std::optional<Rational> sqrt_exact() const {
        if (sign() < 0) return std::nullopt;
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
            return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rational(rn, rd);
    }

    explicit Rational(const mpq_class& v) : v_(v) {
        if (v_.get_den() == 0) throw Singular("rational with zero denominator");
        v_.canonicalize();
    }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

}  // namespace bidiag
