#include "qlab/biseries.hpp"

#include <algorithm>

namespace qlab {

const LaurentPoly BiSeries::zero_poly_;

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms())
        r.add_term(e, c);
    return r;
}

LaurentPoly negate(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms())
        r.add_term(e, -c);
    return r;
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return add(a, negate(b)); }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            r.add_term(ea + eb, ca * cb);
    return r;
}

BiSeries::BiSeries(long long min_exp, long long prec, std::vector<LaurentPoly> coeffs)
    : min_exp_(min_exp), prec_(prec), coeffs_(std::move(coeffs)) {
    if (prec_ < min_exp_)
        throw SeriesError("BiSeries: prec < min_exp");
    if (static_cast<long long>(coeffs_.size()) != prec_ - min_exp_)
        throw SeriesError("BiSeries: coefficient count does not match window");
}

BiSeries BiSeries::one(long long prec) {
    if (prec <= 0)
        return zero(prec);
    std::vector<LaurentPoly> c(static_cast<size_t>(prec));
    c[0] = LaurentPoly(Coefficient(1));
    return BiSeries(0, prec, std::move(c));
}

const LaurentPoly& BiSeries::coeff(long long e) const {
    if (e >= prec_)
        throw OutOfRange("BiSeries::coeff: exponent " + std::to_string(e) +
                         " is at or above precision " + std::to_string(prec_));
    if (e < min_exp_)
        return zero_poly_;
    return coeffs_[static_cast<size_t>(e - min_exp_)];
}

BiSeries bi_add(const BiSeries& a, const BiSeries& b) {
    long long rmin = std::min(a.min_exp(), b.min_exp());
    long long rprec = std::min(a.prec(), b.prec());
    if (rprec <= rmin)
        return BiSeries(rprec, rprec, {});
    std::vector<LaurentPoly> c(static_cast<size_t>(rprec - rmin));
    for (long long e = rmin; e < rprec; ++e)
        c[static_cast<size_t>(e - rmin)] = add(a.coeff(e), b.coeff(e));
    return BiSeries(rmin, rprec, std::move(c));
}

BiSeries bi_sub(const BiSeries& a, const BiSeries& b) {
    return bi_add(a, bi_scale(b, LaurentPoly(Coefficient(-1))));
}

BiSeries bi_scale(const BiSeries& a, const LaurentPoly& k) {
    std::vector<LaurentPoly> c(static_cast<size_t>(a.prec() - a.min_exp()));
    for (long long e = a.min_exp(); e < a.prec(); ++e)
        c[static_cast<size_t>(e - a.min_exp())] = mul(a.coeff(e), k);
    return BiSeries(a.min_exp(), a.prec(), std::move(c));
}

BiSeries bi_mul(const BiSeries& a, const BiSeries& b) {
    long long rmin = a.min_exp() + b.min_exp();
    long long rprec = std::min(a.prec() + b.min_exp(), b.prec() + a.min_exp());
    if (rprec <= rmin)
        return BiSeries(rprec, rprec, {});
    std::vector<LaurentPoly> c(static_cast<size_t>(rprec - rmin));
    for (long long i = a.min_exp(); i < a.prec(); ++i) {
        if (a.coeff(i).is_zero())
            continue;
        long long jmax = std::min(b.prec(), rprec - i);
        for (long long j = b.min_exp(); j < jmax; ++j) {
            if (b.coeff(j).is_zero())
                continue;
            c[static_cast<size_t>(i + j - rmin)] =
                add(c[static_cast<size_t>(i + j - rmin)], mul(a.coeff(i), b.coeff(j)));
        }
    }
    return BiSeries(rmin, rprec, std::move(c));
}

BiSeries bi_mul_one_plus(const BiSeries& a, const Coefficient& c, long long zexp,
                         long long e) {
    long long rmin = a.min_exp() + std::min<long long>(0, e);
    long long rprec = a.prec() + std::min<long long>(0, e);
    if (rprec <= rmin)
        return BiSeries(rprec, rprec, {});
    std::vector<LaurentPoly> out(static_cast<size_t>(rprec - rmin));
    for (long long i = a.min_exp(); i < a.prec(); ++i) {
        const LaurentPoly& ai = a.coeff(i);
        if (ai.is_zero())
            continue;
        if (i < rprec)
            out[static_cast<size_t>(i - rmin)] = add(out[static_cast<size_t>(i - rmin)], ai);
        if (i + e < rprec) {
            LaurentPoly shifted;
            for (const auto& [ze, cc] : ai.terms())
                shifted.add_term(ze + zexp, cc * c);
            out[static_cast<size_t>(i + e - rmin)] =
                add(out[static_cast<size_t>(i + e - rmin)], shifted);
        }
    }
    return BiSeries(rmin, rprec, std::move(out));
}

BiSeries bi_invert_unit(const BiSeries& a) {
    if (a.min_exp() > 0 || a.prec() <= 0)
        throw NotAUnit("bi_invert_unit: q^0 coefficient not available");
    for (long long e = a.min_exp(); e < 0; ++e)
        if (!a.coeff(e).is_zero())
            throw NotAUnit("bi_invert_unit: negative q-exponents present");
    const LaurentPoly& c0 = a.coeff(0);
    if (!c0.is_unit_constant())
        throw NotAUnit("bi_invert_unit: q^0 coefficient is not the constant +-1");
    LaurentPoly c0inv = c0; // +-1 is its own inverse
    long long len = a.prec();
    std::vector<LaurentPoly> b(static_cast<size_t>(len));
    b[0] = c0inv;
    for (long long k = 1; k < len; ++k) {
        LaurentPoly s;
        for (long long j = 1; j <= k; ++j) {
            if (a.coeff(j).is_zero())
                continue;
            s = add(s, mul(a.coeff(j), b[static_cast<size_t>(k - j)]));
        }
        b[static_cast<size_t>(k)] = negate(mul(c0inv, s));
    }
    return BiSeries(0, len, std::move(b));
}

QSeries bi_coeff_z(const BiSeries& a, long long m) {
    std::vector<Coefficient> c(static_cast<size_t>(a.prec() - a.min_exp()));
    for (long long e = a.min_exp(); e < a.prec(); ++e)
        c[static_cast<size_t>(e - a.min_exp())] = a.coeff(e).coeff(m);
    return QSeries(a.min_exp(), a.prec(), std::move(c));
}

} // namespace qlab
