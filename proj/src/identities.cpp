#include "qlab/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "qlab/dsl.hpp"
#include "qlab/lambert.hpp"
#include "qlab/products.hpp"

namespace qlab {

QSeries multiplier(long long prec) {
    return mul(poch_inf(+1, 2, 2, prec), invert_unit(poch_inf(-1, 1, 2, prec)));
}

QSeries multiplier_dissect(long long l, long long d, long long prec) {
    return dissect(multiplier(l * prec + d), l, d);
}

QSeries rank_m_gf(long long m, long long prec) {
    long long am = m < 0 ? -m : m;
    std::vector<Coefficient> t(static_cast<size_t>(std::max<long long>(prec, 0)));
    for (long long n = 1;; ++n) {
        long long e = 2 * n * n - n + 2 * am * n;
        if (e >= prec)
            break;
        Coefficient s = (n % 2 == 0) ? -1 : 1; // (-1)^{n+1}
        t[static_cast<size_t>(e)] += s;
        if (e + 2 * n < prec)
            t[static_cast<size_t>(e + 2 * n)] -= s;
    }
    QSeries sum(0, std::max<long long>(prec, 0), std::move(t));
    QSeries phi = mul(poch_inf(-1, 1, 2, prec), invert_unit(poch_inf(+1, 2, 2, prec)));
    QSeries r = mul(phi, sum);
    if (m == 0)
        r = add(r, QSeries::constant(1, prec)); // empty-partition constant
    return r;
}

QSeries rank_gf(long long s, long long l, long long prec) {
    if (l < 2)
        throw SeriesError("rank_gf: l must be >= 2");
    if (s < 0 || s >= l)
        throw SeriesError("rank_gf: need 0 <= s <= l-1");
    QSeries u = bilateral_lambert(prec, /*omit_n0=*/true, [&](long long n) {
        LambertTerm t;
        t.c = (n % 2 != 0) ? -1 : 1;
        t.num_exps = {2 * n * n + n + 2 * s * n, 2 * n * n + n + 2 * (l - s) * n};
        t.den_exp = 2 * l * n;
        return t;
    });
    QSeries phi = mul(poch_inf(-1, 1, 2, prec), invert_unit(poch_inf(+1, 2, 2, prec)));
    QSeries r = mul(phi, u);
    if (s == 0)
        r = add(r, QSeries::constant(1, prec)); // empty-partition constant
    return r;
}

namespace {

BiSeries bi_from_q(const QSeries& s) {
    std::vector<LaurentPoly> c(static_cast<size_t>(s.prec() - s.min_exp()));
    for (long long e = s.min_exp(); e < s.prec(); ++e)
        c[static_cast<size_t>(e - s.min_exp())] = LaurentPoly(s.coeff(e));
    return BiSeries(s.min_exp(), s.prec(), std::move(c));
}

// 1/(1 - z^zexp q^e) = sum_j z^{j*zexp} q^{j*e}, e >= 1
BiSeries bi_geometric(long long zexp, long long e, long long prec) {
    std::vector<LaurentPoly> c(static_cast<size_t>(std::max<long long>(prec, 0)));
    for (long long j = 0; j * e < prec; ++j)
        c[static_cast<size_t>(j * e)] = LaurentPoly::monomial(1, j * zexp);
    return BiSeries(0, std::max<long long>(prec, 0), std::move(c));
}

} // namespace

BiSeries rank_bivariate_gf(long long prec) {
    BiSeries total = BiSeries::zero(prec);
    for (long long n = 0; n * n < prec; ++n) {
        QSeries num = shift(poch_fin(-1, 1, 2, n, prec - n * n), n * n);
        BiSeries term = bi_from_q(num);
        for (long long j = 1; j <= n; ++j) {
            term = bi_mul(term, bi_geometric(+1, 2 * j, prec));
            term = bi_mul(term, bi_geometric(-1, 2 * j, prec));
        }
        total = bi_add(total, term);
    }
    return total;
}

QSeries analytic_rank_diff(long long s, long long t, long long l, long long d,
                           long long prec) {
    long long qprec = l * prec + d;
    return dissect(sub(rank_gf(s, l, qprec), rank_gf(t, l, qprec)), l, d);
}

std::string final_rhs_dsl(long long l, long long m) {
    if (l == 3 && m == 2)
        return "-g(2,3) + (-q^9*poch(q^2;q^2;inf)*poch(-q^9;q^18;inf)"
               "/(poch(-q;q^2;inf)*poch(q^18;q^18;inf)))*sigma(2,0,3)";
    if (l == 5 && m == 1)
        return "-g(1,5) + q*P(-q^35; q^50)*P(q^20; q^50)*P0(5)^2"
               "/(P(q^30; q^50)*P(q^10; q^50)*P(-q^45; q^50))"
               " + (q^10*poch(q^2;q^2;inf)*poch(-q^25;q^50;inf)"
               "/(poch(-q;q^2;inf)*poch(q^50;q^50;inf)))*sigma(1,0,5)";
    if (l == 5 && m == 2)
        return "-g(2,5) - q^9*P(-q^45; q^50)*P(q^20; q^50)*P(q^10; q^50)*P0(5)^2"
               "/(P(q^10; q^50)*P(q^30; q^50)*P(q^20; q^50)*P(-q^35; q^50))"
               " + (-q^19*poch(q^2;q^2;inf)*poch(-q^25;q^50;inf)"
               "/(poch(-q;q^2;inf)*poch(q^50;q^50;inf)))*sigma(2,0,5)";
    throw SeriesError("assemble_final: (l,m) must be (3,2), (5,1) or (5,2)");
}

namespace {

// Laurent-heavy entries can lose window; widen and retry.
constexpr long long kMargins[] = {32, 128, 512, 2048};

QSeries eval_with_retry(const dsl::ExprPtr& e, long long order,
                        dsl::EvalCache* cache) {
    for (size_t i = 0;; ++i) {
        try {
            QSeries r = dsl::eval(e, order, kMargins[i], cache);
            if (r.prec() > order)
                return r;
            throw InsufficientPrecision("evaluation window ends at " +
                                        std::to_string(r.prec()));
        } catch (const InsufficientPrecision&) {
            if (i + 1 == std::size(kMargins))
                throw;
        } catch (const ZeroSeries&) {
            if (i + 1 == std::size(kMargins))
                throw;
        }
    }
}

} // namespace

QSeries assemble_final(long long l, long long m, long long prec) {
    return eval_with_retry(dsl::parse(final_rhs_dsl(l, m)), prec - 1, nullptr);
}

struct VerifyEngine::Cache {
    dsl::EvalCache ec;
};

VerifyEngine::VerifyEngine() : VerifyEngine(builtin_catalog()) {}

VerifyEngine::VerifyEngine(std::vector<IdentitySpec> catalog)
    : catalog_(std::move(catalog)), cache_(std::make_unique<Cache>()) {}

VerifyEngine::~VerifyEngine() = default;

const IdentitySpec* VerifyEngine::find(const std::string& id) const {
    for (const auto& s : catalog_)
        if (s.id == id)
            return &s;
    return nullptr;
}

VerificationReport VerifyEngine::verify(const IdentitySpec& spec, long long order) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = spec.id;
    long long effective = std::max<long long>(4, order / std::max(1, spec.order_divisor));
    r.order = effective;
    try {
        dsl::ExprPtr lhs = dsl::parse(spec.lhs);
        dsl::ExprPtr rhs = dsl::parse(spec.rhs);
        for (size_t i = 0;; ++i) {
            try {
                QSeries lv = dsl::eval(lhs, effective, kMargins[i], &cache_->ec);
                QSeries rv = dsl::eval(rhs, effective, kMargins[i], &cache_->ec);
                CompareResult cr = equal_to_order(lv, rv, effective);
                r.pass = cr.equal;
                if (!cr.equal)
                    r.first_mismatch = Mismatch{cr.exponent, cr.lhs, cr.rhs};
                break;
            } catch (const InsufficientPrecision&) {
                if (i + 1 == std::size(kMargins))
                    throw;
            } catch (const ZeroSeries&) {
                if (i + 1 == std::size(kMargins))
                    throw;
            }
        }
    } catch (const std::exception& e) {
        r.pass = false;
        r.error = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

VerificationReport VerifyEngine::verify(const std::string& id, long long order) {
    const IdentitySpec* s = find(id);
    if (!s)
        throw SeriesError("unknown identity id '" + id + "'");
    return verify(*s, order);
}

std::vector<VerificationReport> VerifyEngine::verify_all(long long order, int jobs) {
    std::vector<VerificationReport> reports(catalog_.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < catalog_.size(); ++i)
            reports[i] = verify(catalog_[i], order);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= catalog_.size())
                    return;
                reports[i] = verify(catalog_[i], order);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.id < b.id;
              });
    return reports;
}

} // namespace qlab
