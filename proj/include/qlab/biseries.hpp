#pragma once

#include <map>

#include "qlab/qseries.hpp"

namespace qlab {

/// Finite-support Laurent polynomial in the auxiliary variable z.
/// Canonical form: no stored zero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Coefficient c) {
        if (!c.is_zero())
            terms_[0] = std::move(c);
    }
    static LaurentPoly monomial(Coefficient c, long long zexp) {
        LaurentPoly p;
        if (!c.is_zero())
            p.terms_[zexp] = std::move(c);
        return p;
    }

    const std::map<long long, Coefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coefficient coeff(long long zexp) const {
        auto it = terms_.find(zexp);
        return it == terms_.end() ? Coefficient(0) : it->second;
    }

    /// True iff the polynomial is the constant +-1 (used by bi_invert_unit).
    bool is_unit_constant() const {
        return terms_.size() == 1 && terms_.count(0) &&
               (terms_.at(0) == 1 || terms_.at(0) == -1);
    }

    void add_term(long long zexp, const Coefficient& c) {
        if (c.is_zero())
            return;
        auto [it, fresh] = terms_.try_emplace(zexp, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

private:
    std::map<long long, Coefficient> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly negate(const LaurentPoly& a);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Truncated series in q whose coefficients are Laurent polynomials in z.
/// Same window semantics as QSeries.
class BiSeries {
public:
    static BiSeries zero(long long prec) { return BiSeries(prec, prec, {}); }
    static BiSeries one(long long prec);

    BiSeries(long long min_exp, long long prec, std::vector<LaurentPoly> coeffs);

    long long min_exp() const { return min_exp_; }
    long long prec() const { return prec_; }
    const LaurentPoly& coeff(long long e) const;

private:
    long long min_exp_;
    long long prec_;
    std::vector<LaurentPoly> coeffs_;

    static const LaurentPoly zero_poly_;
};

BiSeries bi_add(const BiSeries& a, const BiSeries& b);
BiSeries bi_sub(const BiSeries& a, const BiSeries& b);
BiSeries bi_mul(const BiSeries& a, const BiSeries& b);
BiSeries bi_scale(const BiSeries& a, const LaurentPoly& c);

/// Multiply by the exact factor (1 + c*z^s*q^e).
BiSeries bi_mul_one_plus(const BiSeries& a, const Coefficient& c, long long zexp,
                         long long e);

/// Inverse; requires the q^0 coefficient to be the constant +-1 and q^0 to be
/// the lowest exponent.
BiSeries bi_invert_unit(const BiSeries& a);

/// The z^m coefficient, as a plain q-series.
QSeries bi_coeff_z(const BiSeries& a, long long m);

inline BiSeries operator+(const BiSeries& a, const BiSeries& b) { return bi_add(a, b); }
inline BiSeries operator-(const BiSeries& a, const BiSeries& b) { return bi_sub(a, b); }
inline BiSeries operator*(const BiSeries& a, const BiSeries& b) { return bi_mul(a, b); }

} // namespace qlab
