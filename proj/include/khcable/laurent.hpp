#pragma once
// Sparse Laurent polynomials with exact rational coefficients.
// Exponents are plain ints; callers decide the variable's meaning
// (the Jones polynomial uses exponents counted in half-integer units).

#include "khcable/common.hpp"

#include <map>
#include <sstream>
#include <string>

namespace khc {

class LaurentPolynomial {
    std::map<int, Rational> c_;  // exponent -> coefficient, no zero entries

    void trim(int e) {
        auto it = c_.find(e);
        if (it != c_.end() && it->second == 0) c_.erase(it);
    }

public:
    LaurentPolynomial() = default;

    static LaurentPolynomial monomial(const Rational& coeff, int exp) {
        LaurentPolynomial p;
        if (coeff != 0) p.c_[exp] = coeff;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Rational>& terms() const { return c_; }

    Rational coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void add_term(int exp, const Rational& v) {
        if (v == 0) return;
        c_[exp] += v;
        trim(exp);
    }

    int min_exp() const { return c_.begin()->first; }   // pre: !is_zero()
    int max_exp() const { return c_.rbegin()->first; }  // pre: !is_zero()

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        for (const auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }

    LaurentPolynomial shifted(int delta) const {
        LaurentPolynomial r;
        for (const auto& [e, v] : c_) r.c_[e + delta] = v;
        return r;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    // Exact division; throws if the divisor does not divide evenly.
    LaurentPolynomial divide_exact(const LaurentPolynomial& div) const {
        if (div.is_zero()) throw std::invalid_argument("LaurentPolynomial: division by zero");
        LaurentPolynomial rem = *this, quot;
        const int de = div.max_exp();
        const Rational& dc = div.c_.rbegin()->second;
        while (!rem.is_zero()) {
            int re = rem.max_exp();
            LaurentPolynomial t = monomial(rem.c_.rbegin()->second / dc, re - de);
            quot += t;
            rem -= t * div;
            if (!rem.is_zero() && rem.max_exp() >= re)
                throw std::logic_error("LaurentPolynomial: non-terminating division");
        }
        return quot;
    }

    // Pretty-printer. With half_exponents the stored exponent e denotes x^(e/2).
    std::string to_string(const std::string& var = "q", bool half_exponents = false) const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : c_) {
            Rational av = v < 0 ? Rational(-v) : v;
            if (!first)
                os << (v < 0 ? " - " : " + ");
            else if (v < 0)
                os << "-";
            first = false;
            bool unit_exp = false;
            std::string expstr;
            if (half_exponents) {
                if (e % 2 == 0) {
                    unit_exp = (e == 2);
                    expstr = std::to_string(e / 2);
                } else {
                    expstr = std::to_string(e) + "/2";
                }
            } else {
                unit_exp = (e == 1);
                expstr = std::to_string(e);
            }
            if (e == 0) {
                os << av;
            } else {
                if (av != 1) os << av << "*";
                os << var;
                if (!unit_exp) os << "^" << expstr;
            }
        }
        return os.str();
    }
};

}  // namespace khc
