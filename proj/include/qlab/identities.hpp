#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlab/biseries.hpp"
#include "qlab/qseries.hpp"

namespace qlab {

/// (q^2;q^2)_inf / (-q;q^2)_inf, the normalizing factor in front of every
/// rank-difference generating function.
QSeries multiplier(long long prec);

/// d-dissection of the multiplier (reindexed to the base variable).
QSeries multiplier_dissect(long long l, long long d, long long prec);

/// Generating function of N2(m, .): the inverse multiplier times
/// sum_{n>=1} (-1)^{n+1} q^{2n^2-n+2|m|n} (1-q^{2n}), plus 1 when m = 0 (the
/// empty-partition constant the bare sum convention drops).
QSeries rank_m_gf(long long m, long long prec);

/// Generating function of N2(s, l, .): the inverse multiplier times the
/// primed bilateral sum, plus 1 when s = 0 (same convention fix, pinned by
/// the brute-force oracle).
QSeries rank_gf(long long s, long long l, long long prec);

/// Two-variable generating function sum q^{n^2} (-q;q^2)_n / ((zq^2;q^2)_n
/// (q^2/z;q^2)_n); the z^m coefficient series is N2(m, .).
BiSeries rank_bivariate_gf(long long prec);

/// dissect(rank_gf(s) - rank_gf(t), l, d): the series R_st(d) in its own
/// variable. prec counts coefficients of that series.
QSeries analytic_rank_diff(long long s, long long t, long long l, long long d,
                           long long prec);

/// Right side of the S2(3l-4m) decomposition for (l,m) in
/// {(3,2),(5,1),(5,2)}, with the Sigma(m,0) bracket in its closed product
/// form; equals s2(3l-4m, l).
QSeries assemble_final(long long l, long long m, long long prec);

/// The DSL text assemble_final evaluates (also the catalog entry's rhs).
std::string final_rhs_dsl(long long l, long long m);

/// One catalog entry. lhs/rhs are DSL expressions. Entries whose natural
/// comparison variable is the theorem R-variable carry order_divisor = l so
/// `verify_all --order N` compares them through N/l.
struct IdentitySpec {
    std::string id;
    std::string lhs;
    std::string rhs;
    int order_divisor = 1;
    std::string note;
};

struct Mismatch {
    long long exponent = 0;
    Coefficient lhs;
    Coefficient rhs;
};

struct VerificationReport {
    std::string id;
    long long order = 0; // effective comparison order
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    std::string error; // nonempty when evaluation itself failed
    double elapsed_ms = 0.0;
};

/// The full built-in catalog of identities.
const std::vector<IdentitySpec>& builtin_catalog();

class VerifyEngine {
public:
    VerifyEngine();
    explicit VerifyEngine(std::vector<IdentitySpec> catalog);
    ~VerifyEngine();

    const std::vector<IdentitySpec>& catalog() const { return catalog_; }
    const IdentitySpec* find(const std::string& id) const;

    VerificationReport verify(const IdentitySpec& spec, long long order);
    VerificationReport verify(const std::string& id, long long order);

    /// Runs every entry (id-sorted result). A spec that fails to evaluate
    /// yields a failing report, never a crash.
    std::vector<VerificationReport> verify_all(long long order, int jobs = 1);

private:
    std::vector<IdentitySpec> catalog_;
    struct Cache;
    std::unique_ptr<Cache> cache_;
};

} // namespace qlab
