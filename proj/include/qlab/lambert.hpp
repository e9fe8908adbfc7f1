#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qlab/qseries.hpp"

namespace qlab {

/// One summand of a generalized Lambert series:
/// c * (q^{e0} + q^{e1} + ...) / (1 - q^{den_exp}).
struct LambertTerm {
    Coefficient c;
    std::vector<long long> num_exps;
    long long den_exp = 0;
};

/// Expand sum over n in Z of f(n), truncated at prec. Iterates n outward from
/// 0 in both directions, stopping a direction after (3 + extra_iters)
/// consecutive indices whose term valuation is >= prec. A term with
/// den_exp == 0 inside the scanned range raises ZeroDenominator. Denominators
/// 1 - q^E with E < 0 are rewritten as -q^{-E}/(1 - q^{-E}) before geometric
/// expansion, so the result may have negative exponents only through the
/// numerator exponents.
QSeries bilateral_lambert(long long prec, bool omit_n0,
                          const std::function<LambertTerm(long long)>& f,
                          int extra_iters = 0);

/// Sigma(a,b) = sum_n (-1)^n y^{4bn + l*n(2n+3)} / (1 - y^{2ln+2a}) in the
/// y variable (exponents are y-exponents). Requires a != 0 (mod l).
QSeries sigma_y(long long a, long long b, long long l, long long prec,
                int extra_iters = 0);

/// Sigma(0,b), the n = 0 term omitted, in the y variable.
QSeries sigma0_y(long long b, long long l, long long prec, int extra_iters = 0);

/// q-realized Sigma(a,b) with y = q^l.
QSeries sigma_ab(long long a, long long b, long long l, long long prec);

/// q-realized Sigma(0,b) with y = q^l.
QSeries sigma_0b(long long b, long long l, long long prec);

/// S2(b) = primed sum_n (-1)^n q^{2n^2+bn} / (1 - q^{2ln}), n = 0 omitted.
QSeries s2(long long b, long long l, long long prec, int extra_iters = 0);

/// g(a) in the y variable:
///   y^{2a} * P(-y^l,y^{2l}) P(y^{4a},y^{2l}) / (P(y^{2a},y^{2l}) P(-y^{2a+l},y^{2l}))
///     * Sigma(a,0)  -  y^{6a} Sigma(2a,a)  -  Sigma(0,-a).
/// Defined for any integer a with a != 0 (mod l), l an odd prime (general odd
/// l >= 3 accepted).
QSeries g_y(long long a, long long l, long long prec);

/// q-realized g(a) with y = q^l.
QSeries g_of(long long a, long long l, long long prec);

} // namespace qlab
