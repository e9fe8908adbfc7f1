#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "qlab/errors.hpp"

namespace qlab {

/// Exact integer coefficient. All arithmetic is arbitrary precision; there is
/// no overflow to detect.
using Coefficient = boost::multiprecision::cpp_int;

/// Truncated Laurent series in q over Coefficient.
///
/// A series knows its coefficients exactly for exponents e with
/// min_exp() <= e < prec(); exponents below min_exp() are exactly zero, and
/// exponents at or above prec() are unknown. Every operation propagates the
/// precision window pessimistically, so a reported coefficient is always
/// exact. Values are immutable after construction.
class QSeries {
public:
    /// Series that is exactly zero through prec.
    static QSeries zero(long long prec) { return QSeries(prec, prec, {}); }

    static QSeries constant(Coefficient c, long long prec) {
        return monomial(std::move(c), 0, prec);
    }

    /// c * q^e, known through prec.
    static QSeries monomial(Coefficient c, long long e, long long prec);

    QSeries(long long min_exp, long long prec, std::vector<Coefficient> coeffs);

    long long min_exp() const { return min_exp_; }
    long long prec() const { return prec_; }

    /// Exact coefficient of q^e. Throws OutOfRange for e >= prec(); exponents
    /// below min_exp() are exactly zero.
    const Coefficient& coeff(long long e) const;

    bool is_zero() const; // all known coefficients zero

    /// Same value with leading (lowest-exponent) explicit zeros dropped.
    QSeries canonicalized() const;

    /// Exponent of the lowest nonzero known coefficient, or prec() if none.
    long long valuation() const;

    std::string to_string() const; // human form, e.g. "1 - q + 2*q^3 + O(q^8)"

private:
    long long min_exp_;
    long long prec_;
    std::vector<Coefficient> coeffs_; // coeffs_[i] is the coefficient of q^(min_exp_+i)

    static const Coefficient zero_coeff_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries negate(const QSeries& a);
QSeries scale(const QSeries& a, const Coefficient& c);
QSeries shift(const QSeries& a, long long k); // multiply by q^k

/// Cauchy product. Result precision:
/// min(a.prec + b.min_exp, b.prec + a.min_exp), min_exp summed.
QSeries mul(const QSeries& a, const QSeries& b);

/// Multiply by the exact two-term factor (1 + c*q^e); e may be negative.
QSeries mul_one_plus(const QSeries& a, const Coefficient& c, long long e);

/// Multiplicative inverse. Requires the lowest nonzero coefficient to be +-1
/// at some exponent v; the result has min_exp = -v and prec = a.prec - 2v.
QSeries invert_unit(const QSeries& a);

/// q -> q^k (k >= 1). Exponents scale by k, gaps are exact zeros.
QSeries substitute_power(const QSeries& a, long long k);

/// Extract sum_n c(l*n+d) q^n for 0 <= d < l. Requires min_exp >= 0.
QSeries dissect(const QSeries& a, long long l, long long d);

/// Lower the precision window to new_prec (no-op if already lower).
QSeries truncate(const QSeries& a, long long new_prec);

inline const Coefficient& coeff(const QSeries& a, long long e) { return a.coeff(e); }

struct CompareResult {
    bool equal = true;
    long long exponent = 0; // smallest mismatching exponent when !equal
    Coefficient lhs;
    Coefficient rhs;
};

/// Compare all coefficients for exponents <= order. Throws
/// InsufficientPrecision unless both windows extend past order.
CompareResult equal_to_order(const QSeries& a, const QSeries& b, long long order);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator-(const QSeries& a) { return negate(a); }

} // namespace qlab
