#include "qlab/products.hpp"

#include <algorithm>
#include <map>

namespace qlab {

QSeries poch_inf(int sign, long long a, long long k, long long prec) {
    if (k < 1)
        throw SeriesError("poch_inf: base exponent k must be >= 1");
    if (a < 0)
        throw SeriesError("poch_inf: argument exponent a must be >= 0");
    QSeries s = QSeries::constant(1, prec);
    for (long long e = a; e < prec; e += k)
        s = mul_one_plus(s, Coefficient(-sign), e);
    return s;
}

QSeries poch_fin(int sign, long long a, long long k, long long n, long long prec) {
    if (k < 1)
        throw SeriesError("poch_fin: base exponent k must be >= 1");
    if (a < 0)
        throw SeriesError("poch_fin: argument exponent a must be >= 0");
    if (n < 0)
        throw SeriesError("poch_fin: length must be >= 0");
    QSeries s = QSeries::constant(1, prec);
    for (long long r = 0; r < n; ++r) {
        long long e = a + r * k;
        if (e >= prec)
            break; // remaining exact factors are 1 + O(q^prec)
        s = mul_one_plus(s, Coefficient(-sign), e);
    }
    return s;
}

QSeries big_p(int sign, long long a, long long k, long long prec) {
    if (k < 1)
        throw SeriesError("big_p: base exponent k must be >= 1");
    // Two interleaved progressions: a + k(r-1) and -a + kr, r >= 1. Finitely
    // many exponents are negative; widen the working window by their total
    // depth so skipped factors really are 1 + O(q^prec) relative to the
    // Laurent tail.
    long long depth = 0;
    for (long long e = a; e < 0; e += k)
        depth += -e;
    for (long long e = k - a; e < 0; e += k)
        depth += -e;
    long long w = prec + depth;
    QSeries s = QSeries::constant(1, w);
    for (long long e = a; e < w; e += k)
        s = mul_one_plus(s, Coefficient(-sign), e);
    for (long long e = k - a; e < w; e += k)
        s = mul_one_plus(s, Coefficient(-sign), e);
    return s;
}

QSeries p_zero(long long l, long long prec) {
    if (l < 1)
        throw SeriesError("p_zero: l must be >= 1");
    return poch_inf(+1, 2 * l * l, 2 * l * l, prec);
}

QSeries theta_sum(int sign, long long a, long long k, long long prec) {
    if (k < 1)
        throw SeriesError("theta_sum: base exponent k must be >= 1");
    std::map<long long, Coefficient> acc;
    auto term = [&](long long n) -> bool {
        long long e = k * n * n + a * n;
        if (e >= prec)
            return false;
        acc[e] += (sign < 0 && (n % 2 != 0)) ? Coefficient(-1) : Coefficient(1);
        return true;
    };
    // Exponents are increasing once past the parabola vertex at -a/(2k).
    for (long long n = 0;; ++n)
        if (!term(n) && 2 * k * n + a >= 0)
            break;
    for (long long n = -1;; --n)
        if (!term(n) && 2 * k * n + a <= 0)
            break;
    long long rmin = acc.empty() ? prec : std::min(acc.begin()->first, 0LL);
    if (rmin > prec)
        rmin = prec;
    std::vector<Coefficient> c(static_cast<size_t>(prec - rmin));
    for (auto& [e, v] : acc)
        c[static_cast<size_t>(e - rmin)] = std::move(v);
    return QSeries(rmin, prec, std::move(c));
}

namespace {

QSeries expand_factor_list(const std::vector<PochFactor>& fs, long long prec) {
    QSeries s = QSeries::constant(1, prec);
    for (const auto& f : fs) {
        QSeries g = f.length ? poch_fin(f.sign, f.a, f.k, *f.length, prec)
                             : poch_inf(f.sign, f.a, f.k, prec);
        s = mul(s, g);
    }
    return s;
}

} // namespace

QSeries expand_product_spec(const ProductSpec& spec, long long prec) {
    long long w = prec + std::max<long long>(0, -spec.prefactor_j);
    QSeries num = expand_factor_list(spec.num, w);
    QSeries den = expand_factor_list(spec.den, w);
    QSeries r = mul(num, invert_unit(den));
    if (spec.prefactor_c != 1)
        r = scale(r, spec.prefactor_c);
    if (spec.prefactor_j != 0)
        r = shift(r, spec.prefactor_j);
    return r;
}

} // namespace qlab
