#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qlab/qseries.hpp"

namespace qlab::dsl {

struct Span {
    size_t begin = 0;
    size_t end = 0;
};

enum class TokenKind {
    INT,
    IDENT,
    Q,
    CARET,
    STAR,
    SLASH,
    PLUS,
    MINUS,
    LPAREN,
    RPAREN,
    COMMA,
    SEMI,
    INF,
    END
};

struct Token {
    TokenKind kind;
    Span span;
    long long value = 0;   // INT
    std::string text;      // IDENT
};

struct ParseError : std::runtime_error {
    size_t offset;
    std::string expected;
    ParseError(const std::string& msg, size_t off, std::string exp = {})
        : std::runtime_error(msg), offset(off), expected(std::move(exp)) {}
};

struct LexError : ParseError {
    using ParseError::ParseError;
};

/// Maximal-munch tokenization; unknown characters raise LexError.
std::vector<Token> tokenize(const std::string& src);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ConstE { Coefficient v; };
struct MonoE { Coefficient c; long long j; };          // c * q^j
struct PochInfE { int sign; long long a, k; };
struct PochFinE { int sign; long long a, k, n; };
struct BigPE { int sign; long long a, k; };
struct PZeroE { long long ell; };
struct ThetaE { int sign; long long a, k; };
struct SigmaABE { long long a, b, ell; };
struct Sigma0BE { long long b, ell; };
struct S2E { long long b, ell; };
struct GE { long long a, ell; };
struct RankGFE { long long s, ell; };
struct MultE {};
struct DissectE { ExprPtr child; long long ell, d; };
struct SubPowE { ExprPtr child; long long k; };
struct AddE { ExprPtr lhs, rhs; };
struct SubE { ExprPtr lhs, rhs; };
struct MulE { ExprPtr lhs, rhs; };
struct DivE { ExprPtr lhs, rhs; };
struct PowE { ExprPtr base; long long e; };
struct NegE { ExprPtr child; };

using Node = std::variant<ConstE, MonoE, PochInfE, PochFinE, BigPE, PZeroE, ThetaE,
                          SigmaABE, Sigma0BE, S2E, GE, RankGFE, MultE, DissectE,
                          SubPowE, AddE, SubE, MulE, DivE, PowE, NegE>;

struct Expr {
    Node node;
    Span span;
};

ExprPtr parse(const std::string& src);

/// Canonical text form; parse(print(e)) is structurally identical to e.
std::string print(const ExprPtr& e);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

/// Shared, thread-safe (expression text, precision) -> series memo.
class EvalCache {
public:
    EvalCache();
    ~EvalCache();
    struct Impl;
    Impl* impl() const { return impl_.get(); }

private:
    std::unique_ptr<Impl> impl_;
};

/// Evaluate with every coefficient through q^order exact (result prec >
/// order barring Laurent-heavy cancellation, which callers handle by
/// retrying with a larger margin). margin widens every internal window.
QSeries eval(const ExprPtr& e, long long order, long long margin = 32,
             EvalCache* cache = nullptr);

QSeries eval_str(const std::string& src, long long order, long long margin = 32,
                 EvalCache* cache = nullptr);

} // namespace qlab::dsl
