#include "qlab/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace qlab {

const Coefficient QSeries::zero_coeff_ = 0;

QSeries::QSeries(long long min_exp, long long prec, std::vector<Coefficient> coeffs)
    : min_exp_(min_exp), prec_(prec), coeffs_(std::move(coeffs)) {
    if (prec_ < min_exp_)
        throw SeriesError("QSeries: prec < min_exp");
    if (static_cast<long long>(coeffs_.size()) != prec_ - min_exp_)
        throw SeriesError("QSeries: coefficient count does not match window");
}

QSeries QSeries::monomial(Coefficient c, long long e, long long prec) {
    if (e >= prec)
        return zero(prec);
    std::vector<Coefficient> v(static_cast<size_t>(prec - e));
    v[0] = std::move(c);
    return QSeries(e, prec, std::move(v));
}

const Coefficient& QSeries::coeff(long long e) const {
    if (e >= prec_)
        throw OutOfRange("coeff: exponent " + std::to_string(e) +
                         " is at or above precision " + std::to_string(prec_));
    if (e < min_exp_)
        return zero_coeff_;
    return coeffs_[static_cast<size_t>(e - min_exp_)];
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Coefficient& c) { return c.is_zero(); });
}

QSeries QSeries::canonicalized() const {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero())
        ++lead;
    return QSeries(min_exp_ + static_cast<long long>(lead), prec_,
                   std::vector<Coefficient>(coeffs_.begin() + lead, coeffs_.end()));
}

long long QSeries::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            return min_exp_ + static_cast<long long>(i);
    return prec_;
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (long long e = min_exp_; e < prec_; ++e) {
        const Coefficient& c = coeff(e);
        if (c.is_zero())
            continue;
        Coefficient mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0)
            os << mag.str();
        if (e != 0) {
            if (mag != 1)
                os << "*";
            os << "q";
            if (e != 1)
                os << "^" << e;
        }
    }
    if (first)
        os << "0";
    os << " + O(q^" << prec_ << ")";
    return os.str();
}

QSeries add(const QSeries& a, const QSeries& b) {
    long long rmin = std::min(a.min_exp(), b.min_exp());
    long long rprec = std::min(a.prec(), b.prec());
    if (rprec <= rmin)
        return QSeries(rprec, rprec, {});
    std::vector<Coefficient> c(static_cast<size_t>(rprec - rmin));
    for (long long e = rmin; e < rprec; ++e) {
        Coefficient v = (e >= a.min_exp() && e < a.prec()) ? a.coeff(e) : Coefficient(0);
        if (e >= b.min_exp() && e < b.prec())
            v += b.coeff(e);
        c[static_cast<size_t>(e - rmin)] = std::move(v);
    }
    return QSeries(rmin, rprec, std::move(c));
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, negate(b)); }

QSeries negate(const QSeries& a) {
    std::vector<Coefficient> c(static_cast<size_t>(a.prec() - a.min_exp()));
    for (long long e = a.min_exp(); e < a.prec(); ++e)
        c[static_cast<size_t>(e - a.min_exp())] = -a.coeff(e);
    return QSeries(a.min_exp(), a.prec(), std::move(c));
}

QSeries scale(const QSeries& a, const Coefficient& k) {
    std::vector<Coefficient> c(static_cast<size_t>(a.prec() - a.min_exp()));
    for (long long e = a.min_exp(); e < a.prec(); ++e)
        c[static_cast<size_t>(e - a.min_exp())] = a.coeff(e) * k;
    return QSeries(a.min_exp(), a.prec(), std::move(c));
}

QSeries shift(const QSeries& a, long long k) {
    std::vector<Coefficient> c(a.prec() - a.min_exp());
    for (long long e = a.min_exp(); e < a.prec(); ++e)
        c[static_cast<size_t>(e - a.min_exp())] = a.coeff(e);
    return QSeries(a.min_exp() + k, a.prec() + k, std::move(c));
}

QSeries mul(const QSeries& a, const QSeries& b) {
    long long rmin = a.min_exp() + b.min_exp();
    long long rprec = std::min(a.prec() + b.min_exp(), b.prec() + a.min_exp());
    if (rprec <= rmin)
        return QSeries(rprec, rprec, {});
    std::vector<Coefficient> c(static_cast<size_t>(rprec - rmin));
    for (long long i = a.min_exp(); i < a.prec(); ++i) {
        const Coefficient& ai = a.coeff(i);
        if (ai.is_zero())
            continue;
        long long jmax = std::min(b.prec(), rprec - i);
        for (long long j = b.min_exp(); j < jmax; ++j) {
            const Coefficient& bj = b.coeff(j);
            if (!bj.is_zero())
                c[static_cast<size_t>(i + j - rmin)] += ai * bj;
        }
    }
    return QSeries(rmin, rprec, std::move(c));
}

QSeries mul_one_plus(const QSeries& a, const Coefficient& k, long long e) {
    // (1 + k*q^e) is exact, so the window only moves when e < 0.
    long long rmin = a.min_exp() + std::min<long long>(0, e);
    long long rprec = a.prec() + std::min<long long>(0, e);
    if (rprec <= rmin)
        return QSeries(rprec, rprec, {});
    std::vector<Coefficient> c(static_cast<size_t>(rprec - rmin));
    for (long long i = a.min_exp(); i < a.prec(); ++i) {
        const Coefficient& ai = a.coeff(i);
        if (ai.is_zero())
            continue;
        if (i < rprec)
            c[static_cast<size_t>(i - rmin)] += ai;
        if (i + e < rprec)
            c[static_cast<size_t>(i + e - rmin)] += ai * k;
    }
    return QSeries(rmin, rprec, std::move(c));
}

QSeries invert_unit(const QSeries& a) {
    long long v = a.valuation();
    if (v == a.prec())
        throw ZeroSeries("invert_unit: no nonzero coefficient in the known window");
    const Coefficient& c0 = a.coeff(v);
    if (c0 != 1 && c0 != -1)
        throw NotAUnit("invert_unit: lowest nonzero coefficient is " + c0.str() +
                       ", not +-1");
    // a = c0*q^v*(1 + h); invert the unit part by the usual recurrence.
    long long len = a.prec() - v; // known relative orders of the unit part
    std::vector<Coefficient> u(static_cast<size_t>(len));
    std::vector<long long> support; // nonzero relative exponents of h
    for (long long j = 0; j < len; ++j) {
        u[static_cast<size_t>(j)] = a.coeff(v + j);
        if (j > 0 && !u[static_cast<size_t>(j)].is_zero())
            support.push_back(j);
    }
    std::vector<Coefficient> b(static_cast<size_t>(len));
    b[0] = c0; // c0 is its own inverse
    for (long long k = 1; k < len; ++k) {
        Coefficient s = 0;
        for (long long j : support) {
            if (j > k)
                break;
            s += u[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
        }
        b[static_cast<size_t>(k)] = -c0 * s;
    }
    return QSeries(-v, a.prec() - 2 * v, std::move(b));
}

QSeries substitute_power(const QSeries& a, long long k) {
    if (k < 1)
        throw SeriesError("substitute_power: k must be >= 1");
    if (k == 1)
        return a;
    long long rmin = k * a.min_exp();
    long long rprec = k * a.prec();
    std::vector<Coefficient> c(static_cast<size_t>(rprec - rmin));
    for (long long e = a.min_exp(); e < a.prec(); ++e)
        c[static_cast<size_t>(k * e - rmin)] = a.coeff(e);
    return QSeries(rmin, rprec, std::move(c));
}

QSeries dissect(const QSeries& a, long long l, long long d) {
    if (l < 1 || d < 0 || d >= l)
        throw SeriesError("dissect: need l >= 1 and 0 <= d < l");
    if (a.min_exp() < 0)
        throw NegativeSupport("dissect: series has negative exponents (min_exp " +
                              std::to_string(a.min_exp()) + ")");
    long long rprec = (a.prec() - d - 1) / l + 1;
    if (rprec < 0)
        rprec = 0;
    std::vector<Coefficient> c(static_cast<size_t>(rprec));
    for (long long n = 0; n < rprec; ++n) {
        long long e = l * n + d;
        if (e >= a.min_exp() && e < a.prec())
            c[static_cast<size_t>(n)] = a.coeff(e);
    }
    return QSeries(0, rprec, std::move(c));
}

QSeries truncate(const QSeries& a, long long new_prec) {
    if (new_prec >= a.prec())
        return a;
    long long rmin = std::min(a.min_exp(), new_prec);
    std::vector<Coefficient> c(static_cast<size_t>(new_prec - rmin));
    for (long long e = rmin; e < new_prec; ++e)
        c[static_cast<size_t>(e - rmin)] = (e >= a.min_exp()) ? a.coeff(e) : Coefficient(0);
    return QSeries(rmin, new_prec, std::move(c));
}

CompareResult equal_to_order(const QSeries& a, const QSeries& b, long long order) {
    if (a.prec() <= order || b.prec() <= order)
        throw InsufficientPrecision(
            "equal_to_order: order " + std::to_string(order) + " not covered (prec " +
            std::to_string(a.prec()) + " and " + std::to_string(b.prec()) + ")");
    CompareResult r;
    for (long long e = std::min(a.min_exp(), b.min_exp()); e <= order; ++e) {
        if (a.coeff(e) != b.coeff(e)) {
            r.equal = false;
            r.exponent = e;
            r.lhs = a.coeff(e);
            r.rhs = b.coeff(e);
            return r;
        }
    }
    return r;
}

} // namespace qlab
