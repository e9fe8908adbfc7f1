#pragma once

#include <string>
#include <vector>

#include "qlab/identities.hpp"
#include "qlab/products.hpp"
#include "qlab/qseries.hpp"

namespace qlab {

/// {"variable":"q","min_exp":..,"prec":..,"coeffs":[..decimal strings..]}
std::string series_to_json(const QSeries& s, int indent = -1);
QSeries series_from_json(const std::string& text);

/// {"prefactor":{"c":"<decimal>","j":<int>},"num":[{"sign","a","k","n"}...],"den":[...]}
/// with "n" either an integer or the string "inf".
std::string product_spec_to_json(const ProductSpec& spec, int indent = -1);
ProductSpec product_spec_from_json(const std::string& text);

/// JSON array of {"id","lhs","rhs","order_divisor","note"}.
std::string catalog_to_json(const std::vector<IdentitySpec>& catalog, int indent = 2);
std::vector<IdentitySpec> catalog_from_json(const std::string& text);

/// {"order":N,"reports":[{"id","order","pass","first_mismatch","error","elapsed_ms"}...]}
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            long long order, int indent = 2);

} // namespace qlab
