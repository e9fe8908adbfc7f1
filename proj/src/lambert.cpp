#include "qlab/lambert.hpp"

#include <algorithm>
#include <map>

#include "qlab/products.hpp"

namespace qlab {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

long long term_valuation(const LambertTerm& t) {
    long long m = t.num_exps.empty() ? 0 : *std::min_element(t.num_exps.begin(),
                                                             t.num_exps.end());
    return m + std::max<long long>(0, -t.den_exp);
}

void accumulate(std::map<long long, Coefficient>& acc, const LambertTerm& t,
                long long prec) {
    for (long long e : t.num_exps) {
        if (t.den_exp > 0) {
            for (long long x = e; x < prec; x += t.den_exp)
                acc[x] += t.c;
        } else {
            // 1/(1-q^E) = -q^{-E}/(1-q^{-E}) for E < 0
            long long step = -t.den_exp;
            for (long long x = e + step; x < prec; x += step)
                acc[x] -= t.c;
        }
    }
}

// Adaptive working precision: rerun f with a wider window until the result
// covers the requested one (Laurent factors shrink windows by a fixed amount,
// so the deficit-driven bump converges immediately).
template <typename F> QSeries with_prec(long long prec, F&& f) {
    long long pad = 8;
    for (int attempt = 0; attempt < 8; ++attempt) {
        QSeries r = f(prec + pad);
        if (r.prec() >= prec)
            return truncate(r, prec);
        pad += (prec - r.prec()) + 8;
    }
    throw InsufficientPrecision("internal working precision did not converge");
}

} // namespace

QSeries bilateral_lambert(long long prec, bool omit_n0,
                          const std::function<LambertTerm(long long)>& f,
                          int extra_iters) {
    std::map<long long, Coefficient> acc;
    const int stop_after = 3 + extra_iters;
    auto scan = [&](long long dir) {
        int misses = 0;
        for (long long n = (dir > 0) ? (omit_n0 ? 1 : 0) : -1; misses < stop_after;
             n += dir) {
            LambertTerm t = f(n);
            if (t.den_exp == 0)
                throw ZeroDenominator("generalized Lambert series: denominator 1-q^0 at n = " +
                                      std::to_string(n));
            if (term_valuation(t) >= prec) {
                ++misses;
                continue;
            }
            misses = 0;
            accumulate(acc, t, prec);
        }
    };
    scan(+1);
    scan(-1);
    long long rmin = acc.empty() ? std::min<long long>(0, prec)
                                 : std::min<long long>(0, acc.begin()->first);
    std::vector<Coefficient> c(static_cast<size_t>(std::max<long long>(0, prec - rmin)));
    for (auto& [e, v] : acc)
        c[static_cast<size_t>(e - rmin)] += v;
    if (prec <= rmin)
        return QSeries(prec, prec, {});
    return QSeries(rmin, prec, std::move(c));
}

QSeries sigma_y(long long a, long long b, long long l, long long prec,
                int extra_iters) {
    if (l < 2)
        throw SeriesError("sigma: l must be >= 2");
    if (a % l == 0)
        throw ZeroDenominator("Sigma(a,b): a = " + std::to_string(a) +
                              " is a multiple of l = " + std::to_string(l) +
                              " (vanishing denominator at n = " + std::to_string(-a / l) +
                              ")");
    return bilateral_lambert(prec, /*omit_n0=*/false,
                             [&](long long n) {
                                 LambertTerm t;
                                 t.c = (n % 2 != 0) ? -1 : 1;
                                 t.num_exps = {4 * b * n + l * n * (2 * n + 3)};
                                 t.den_exp = 2 * l * n + 2 * a;
                                 return t;
                             },
                             extra_iters);
}

QSeries sigma0_y(long long b, long long l, long long prec, int extra_iters) {
    if (l < 2)
        throw SeriesError("sigma0: l must be >= 2");
    return bilateral_lambert(prec, /*omit_n0=*/true,
                             [&](long long n) {
                                 LambertTerm t;
                                 t.c = (n % 2 != 0) ? -1 : 1;
                                 t.num_exps = {4 * b * n + l * n * (2 * n + 3)};
                                 t.den_exp = 2 * l * n;
                                 return t;
                             },
                             extra_iters);
}

QSeries sigma_ab(long long a, long long b, long long l, long long prec) {
    return substitute_power(sigma_y(a, b, l, ceil_div(prec, l)), l);
}

QSeries sigma_0b(long long b, long long l, long long prec) {
    return substitute_power(sigma0_y(b, l, ceil_div(prec, l)), l);
}

QSeries s2(long long b, long long l, long long prec, int extra_iters) {
    if (l < 2)
        throw SeriesError("s2: l must be >= 2");
    return bilateral_lambert(prec, /*omit_n0=*/true,
                             [&](long long n) {
                                 LambertTerm t;
                                 t.c = (n % 2 != 0) ? -1 : 1;
                                 t.num_exps = {2 * n * n + b * n};
                                 t.den_exp = 2 * l * n;
                                 return t;
                             },
                             extra_iters);
}

QSeries g_y(long long a, long long l, long long prec) {
    if (l < 3 || l % 2 == 0)
        throw SeriesError("g: l must be an odd modulus >= 3");
    if (a % l == 0)
        throw ZeroDenominator("g(a): a must not be a multiple of l");
    if ((2 * a) % l == 0)
        throw ZeroDenominator("g(a): 2a must not be a multiple of l");
    return with_prec(prec, [&](long long w) {
        QSeries ratio = mul(big_p(-1, l, 2 * l, w), big_p(+1, 4 * a, 2 * l, w));
        ratio = mul(ratio, invert_unit(mul(big_p(+1, 2 * a, 2 * l, w),
                                           big_p(-1, 2 * a + l, 2 * l, w))));
        QSeries r = shift(mul(ratio, sigma_y(a, 0, l, w)), 2 * a);
        r = sub(r, shift(sigma_y(2 * a, a, l, w), 6 * a));
        r = sub(r, sigma0_y(-a, l, w));
        return r;
    });
}

QSeries g_of(long long a, long long l, long long prec) {
    return substitute_power(g_y(a, l, ceil_div(prec, l)), l);
}

} // namespace qlab
