#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qlab/biseries.hpp"
#include "qlab/qseries.hpp"
#include "qlab/serialize.hpp"

using namespace qlab;

namespace {

QSeries from_coeffs(long long min_exp, std::vector<long long> cs, long long prec) {
    std::vector<Coefficient> v;
    for (long long c : cs)
        v.emplace_back(c);
    v.resize(static_cast<size_t>(prec - min_exp));
    return QSeries(min_exp, prec, std::move(v));
}

QSeries random_series(std::mt19937& rng, long long prec, bool laurent = true) {
    std::uniform_int_distribution<long long> mdist(laurent ? -5 : 0, 5);
    std::uniform_int_distribution<int> cdist(-9, 9);
    long long min_exp = mdist(rng);
    std::vector<Coefficient> v(static_cast<size_t>(prec - min_exp));
    for (auto& c : v)
        c = cdist(rng);
    return QSeries(min_exp, prec, std::move(v));
}

bool same_through_common(const QSeries& a, const QSeries& b) {
    long long n = std::min(a.prec(), b.prec()) - 1;
    return equal_to_order(a, b, n).equal;
}

} // namespace

TEST_CASE("add basics") {
    QSeries one_minus_q = from_coeffs(0, {1, -1}, 16);
    QSeries just_q = from_coeffs(0, {0, 1}, 16);
    QSeries s = add(one_minus_q, just_q);
    CHECK(s.prec() == 16);
    CHECK(s.coeff(0) == 1);
    for (long long e = 1; e < 16; ++e)
        CHECK(s.coeff(e) == 0);

    std::mt19937 rng7(7);
    QSeries a = random_series(rng7, 20);
    CHECK(same_through_common(add(a, QSeries::zero(20)), a));

    QSeries qinv = QSeries::monomial(1, -1, 10);
    QSeries sum = add(qinv, just_q);
    CHECK(sum.min_exp() == -1);
    CHECK(sum.coeff(-1) == 1);
    CHECK(sum.coeff(1) == 1);
    CHECK(sum.coeff(0) == 0);
}

TEST_CASE("mul basics and window") {
    // (1-q) * (1+q+...+q^{N-1}) telescopes to 1
    long long n = 24;
    std::vector<Coefficient> ones(static_cast<size_t>(n), 1);
    QSeries geo(0, n, std::move(ones));
    QSeries p = mul(from_coeffs(0, {1, -1}, n), geo);
    CHECK(p.prec() == n);
    CHECK(p.coeff(0) == 1);
    for (long long e = 1; e < n - 1; ++e)
        CHECK(p.coeff(e) == 0);

    std::mt19937 rng11(11);
    QSeries a = random_series(rng11, 30);
    CHECK(same_through_common(mul(a, QSeries::constant(1, 30)), a));

    QSeries r = mul(from_coeffs(0, {1, -1}, 10), from_coeffs(0, {1, 1}, 10));
    CHECK(r.coeff(0) == 1);
    CHECK(r.coeff(1) == 0);
    CHECK(r.coeff(2) == -1);

    // precision contract: prec = min(a.prec + b.min_exp, b.prec + a.min_exp)
    QSeries la = QSeries::monomial(1, -2, 6);
    QSeries lb = QSeries::monomial(3, 1, 9);
    QSeries lp = mul(la, lb);
    CHECK(lp.min_exp() == -1);
    CHECK(lp.prec() == std::min<long long>(6 + 1, 9 - 2));
    CHECK(lp.coeff(-1) == 3);
}

TEST_CASE("invert_unit") {
    QSeries inv = invert_unit(from_coeffs(0, {1, -1}, 12)); // 1/(1-q)
    for (long long e = 0; e < 12; ++e)
        CHECK(inv.coeff(e) == 1);

    // q^2*(1-q): inverse has min_exp -2
    QSeries f = from_coeffs(2, {1, -1}, 12);
    QSeries g = invert_unit(f);
    CHECK(g.min_exp() == -2);
    CHECK(g.prec() == 12 - 4);
    CHECK(same_through_common(mul(f, g), QSeries::constant(1, 12)));

    CHECK_THROWS_AS(invert_unit(from_coeffs(0, {2, 1}, 8)), NotAUnit);
    CHECK_THROWS_AS(invert_unit(QSeries::zero(8)), ZeroSeries);

    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
        QSeries u = random_series(rng, 48);
        // force a unit: set the lowest coefficient to +-1 by rebuilding
        std::vector<Coefficient> v;
        for (long long e = u.min_exp(); e < u.prec(); ++e)
            v.push_back(u.coeff(e));
        v[0] = (i % 2) ? 1 : -1;
        QSeries w(u.min_exp(), u.prec(), std::move(v));
        QSeries one = mul(w, invert_unit(w));
        CHECK(equal_to_order(one, QSeries::constant(1, one.prec()), one.prec() - 1).equal);
    }
}

TEST_CASE("shift scale negate substitute") {
    CHECK(shift(QSeries::constant(1, 5), 3).coeff(3) == 1);
    QSeries m = scale(QSeries::monomial(1, 1, 9), -3);
    CHECK(m.coeff(1) == -3);
    std::mt19937 rng5(5);
    QSeries a = random_series(rng5, 20);
    CHECK(same_through_common(negate(negate(a)), a));

    QSeries s = substitute_power(from_coeffs(0, {1, 1}, 8), 3);
    CHECK(s.prec() == 24);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(3) == 1);
    CHECK(s.coeff(1) == 0);
    CHECK(same_through_common(substitute_power(a, 1), a));
    QSeries qinv2 = substitute_power(QSeries::monomial(1, -1, 4), 2);
    CHECK(qinv2.coeff(-2) == 1);
    CHECK(qinv2.min_exp() == -2);
}

TEST_CASE("dissect") {
    QSeries f = from_coeffs(0, {1, 1, 1, 1}, 4);
    QSeries d0 = dissect(f, 2, 0);
    CHECK(d0.prec() == 2);
    CHECK(d0.coeff(0) == 1);
    CHECK(d0.coeff(1) == 1);

    std::mt19937 rng9(9);
    QSeries g = random_series(rng9, 30, /*laurent=*/false);
    CHECK(same_through_common(dissect(g, 1, 0), g));
    CHECK(same_through_common(substitute_power(dissect(g, 1, 0), 1), g));

    CHECK_THROWS_AS(dissect(QSeries::monomial(1, -1, 5), 2, 0), NegativeSupport);
}

TEST_CASE("dissection roundtrip property") {
    std::mt19937 rng(2026);
    for (int rep = 0; rep < 100; ++rep) {
        QSeries f = random_series(rng, 64, /*laurent=*/false);
        for (long long l : {2, 3, 5, 7}) {
            QSeries sum = QSeries::zero(64 + l);
            long long window = f.prec();
            for (long long d = 0; d < l; ++d) {
                QSeries piece = shift(substitute_power(dissect(f, l, d), l), d);
                window = std::min(window, piece.prec());
                sum = add(sum, piece);
            }
            CHECK(equal_to_order(sum, f, window - 1).equal);
        }
    }
}

TEST_CASE("coeff access and windows") {
    QSeries f = from_coeffs(0, {1, -1}, 10);
    CHECK(f.coeff(1) == -1);
    CHECK(f.coeff(5) == 0);
    CHECK(QSeries::monomial(1, -1, 4).coeff(-1) == 1);
    CHECK_THROWS_AS(f.coeff(10), OutOfRange);
    CHECK(f.coeff(-100) == 0); // below min_exp is exactly zero
}

TEST_CASE("equal_to_order") {
    std::mt19937 rng1(1);
    QSeries a = random_series(rng1, 20);
    CHECK(equal_to_order(a, a, 19).equal);
    QSeries one = QSeries::constant(1, 12);
    QSeries oneplus = add(one, QSeries::monomial(1, 9, 12));
    CHECK(equal_to_order(one, oneplus, 8).equal);
    auto r = equal_to_order(one, add(one, QSeries::monomial(1, 1, 12)), 1);
    CHECK(!r.equal);
    CHECK(r.exponent == 1);
    CHECK(r.lhs == 0);
    CHECK(r.rhs == 1);
    CHECK_THROWS_AS(equal_to_order(one, one, 12), InsufficientPrecision);
}

TEST_CASE("canonicalize trims leading zeros only") {
    QSeries f = from_coeffs(-3, {0, 0, 1, -1, 0}, 2);
    QSeries c = f.canonicalized();
    CHECK(c.min_exp() == -1);
    CHECK(c.prec() == f.prec());
    CHECK(same_through_common(c, f));
    CHECK(c.valuation() == -1);
}

TEST_CASE("ring axioms on random Laurent series") {
    std::mt19937 rng(424242);
    for (int rep = 0; rep < 100; ++rep) {
        QSeries a = random_series(rng, 64);
        QSeries b = random_series(rng, 64);
        QSeries c = random_series(rng, 64);
        CHECK(same_through_common(add(a, b), add(b, a)));
        CHECK(same_through_common(mul(a, b), mul(b, a)));
        CHECK(same_through_common(add(add(a, b), c), add(a, add(b, c))));
        CHECK(same_through_common(mul(mul(a, b), c), mul(a, mul(b, c))));
        CHECK(same_through_common(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));
    }
}

TEST_CASE("series JSON round trip") {
    QSeries f = from_coeffs(-2, {7, 0, -123456789, 1}, 2);
    std::string j = series_to_json(f);
    CHECK(j.find("\"variable\":\"q\"") != std::string::npos);
    QSeries g = series_from_json(j);
    CHECK(g.min_exp() == f.min_exp());
    CHECK(g.prec() == f.prec());
    CHECK(same_through_common(f, g));
    // big coefficients survive the decimal-string encoding
    QSeries big = scale(QSeries::constant(1, 2), Coefficient("123456789012345678901234567890"));
    QSeries big2 = series_from_json(series_to_json(big));
    CHECK(big2.coeff(0) == Coefficient("123456789012345678901234567890"));
}

TEST_CASE("bivariate arithmetic") {
    // 1/(1 - z q^2) = sum z^j q^{2j}
    BiSeries f = bi_mul_one_plus(BiSeries::one(12), -1, 1, 2);
    BiSeries inv = bi_invert_unit(f);
    for (long long j = 0; 2 * j < 12; ++j)
        CHECK(inv.coeff(2 * j).coeff(j) == 1);
    CHECK(bi_coeff_z(inv, 1).coeff(2) == 1);

    // bi_coeff_z(z q + z^-1 q, 1) = q
    BiSeries g = bi_add(bi_mul_one_plus(BiSeries::zero(6), 1, 1, 1),
                        bi_mul_one_plus(BiSeries::zero(6), 1, -1, 1));
    BiSeries zq = bi_mul_one_plus(BiSeries::one(6), 1, 1, 1); // 1 + z q
    BiSeries zq2 = bi_mul_one_plus(zq, 1, -1, 1);             // (1+zq)(1+q/z)
    QSeries z1 = bi_coeff_z(zq2, 1);
    CHECK(z1.coeff(1) == 1);
    CHECK(z1.coeff(0) == 0);

    // bi_coeff_z commutes with bi_add and scalar multiples
    BiSeries u = bi_mul(zq2, inv);
    BiSeries v = bi_mul(zq2, zq2);
    for (long long m = -2; m <= 2; ++m) {
        QSeries lhs = bi_coeff_z(bi_add(u, v), m);
        QSeries rhs = add(bi_coeff_z(u, m), bi_coeff_z(v, m));
        CHECK(equal_to_order(lhs, rhs, std::min(lhs.prec(), rhs.prec()) - 1).equal);
        LaurentPoly three(Coefficient(3));
        CHECK(equal_to_order(bi_coeff_z(bi_scale(u, three), m),
                             scale(bi_coeff_z(u, m), 3), u.prec() - 1)
                  .equal);
    }
    // q^0 coefficient must be the constant +-1
    BiSeries nonunit = bi_mul_one_plus(BiSeries::one(6), -1, 1, 0); // 1 - z
    CHECK_THROWS_AS(bi_invert_unit(nonunit), NotAUnit);
}
