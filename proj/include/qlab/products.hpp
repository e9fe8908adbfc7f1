#pragma once

#include <optional>
#include <vector>

#include "qlab/qseries.hpp"

namespace qlab {

/// One q-Pochhammer factor (sign*q^a; q^k)_n, infinite when n is empty.
struct PochFactor {
    int sign = 1;    // sign of the monomial argument
    long long a = 0; // argument is sign * q^a, a >= 0
    long long k = 1; // base q^k, k >= 1
    std::optional<long long> length; // empty means infinite

    bool operator==(const PochFactor&) const = default;
};

/// (sign*q^a; q^k)_inf = prod_{r>=0} (1 - sign*q^{a+rk}), truncated at prec.
/// a = 0 with sign +1 gives the zero series (a normal value).
QSeries poch_inf(int sign, long long a, long long k, long long prec);

/// (sign*q^a; q^k)_n, the first n factors (exact polynomial, windowed at prec).
QSeries poch_fin(int sign, long long a, long long k, long long n, long long prec);

/// P(z,q) = prod_{r>=1} (1 - z*q^{r-1})(1 - z^{-1}*q^r) at z = sign*q^a,
/// base q^k. a may be any integer; negative exponents give Laurent output.
/// An exponent-zero factor with sign +1 makes the whole product zero.
QSeries big_p(int sign, long long a, long long k, long long prec);

/// P(0) = prod_{r>=1} (1 - y^{2*l*r}) with y = q^l, i.e. (q^{2l^2}; q^{2l^2})_inf.
QSeries p_zero(long long l, long long prec);

/// sum_{n in Z} z^n q^{k n^2} at z = sign*q^a (both directions of n).
QSeries theta_sum(int sign, long long a, long long k, long long prec);

/// prefactor c*q^j times a ratio of Pochhammer products.
struct ProductSpec {
    Coefficient prefactor_c = 1;
    long long prefactor_j = 0;
    std::vector<PochFactor> num;
    std::vector<PochFactor> den;
};

/// Expand prefactor * num / den; throws NotAUnit if the denominator is not a
/// unit series. The empty spec expands to 1.
QSeries expand_product_spec(const ProductSpec& spec, long long prec);

} // namespace qlab
