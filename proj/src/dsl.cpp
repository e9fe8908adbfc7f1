#include "qlab/dsl.hpp"

#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "qlab/identities.hpp"
#include "qlab/lambert.hpp"
#include "qlab/products.hpp"

namespace qlab::dsl {

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                if (v > (1LL << 50))
                    throw LexError("integer literal too large", start);
                v = v * 10 + (src[i] - '0');
                ++i;
            }
            out.push_back({TokenKind::INT, {start, i}, v, {}});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                      src[i] == '_'))
                ++i;
            std::string word = src.substr(start, i - start);
            if (word == "q")
                out.push_back({TokenKind::Q, {start, i}, 0, word});
            else if (word == "inf")
                out.push_back({TokenKind::INF, {start, i}, 0, word});
            else
                out.push_back({TokenKind::IDENT, {start, i}, 0, word});
            continue;
        }
        TokenKind k;
        switch (c) {
        case '^': k = TokenKind::CARET; break;
        case '*': k = TokenKind::STAR; break;
        case '/': k = TokenKind::SLASH; break;
        case '+': k = TokenKind::PLUS; break;
        case '-': k = TokenKind::MINUS; break;
        case '(': k = TokenKind::LPAREN; break;
        case ')': k = TokenKind::RPAREN; break;
        case ',': k = TokenKind::COMMA; break;
        case ';': k = TokenKind::SEMI; break;
        default:
            throw LexError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({k, {start, start + 1}, 0, {}});
        ++i;
    }
    out.push_back({TokenKind::END, {src.size(), src.size()}, 0, {}});
    return out;
}

namespace {

const char* kind_name(TokenKind k) {
    switch (k) {
    case TokenKind::INT: return "integer";
    case TokenKind::IDENT: return "identifier";
    case TokenKind::Q: return "'q'";
    case TokenKind::CARET: return "'^'";
    case TokenKind::STAR: return "'*'";
    case TokenKind::SLASH: return "'/'";
    case TokenKind::PLUS: return "'+'";
    case TokenKind::MINUS: return "'-'";
    case TokenKind::LPAREN: return "'('";
    case TokenKind::RPAREN: return "')'";
    case TokenKind::COMMA: return "','";
    case TokenKind::SEMI: return "';'";
    case TokenKind::INF: return "'inf'";
    case TokenKind::END: return "end of input";
    }
    return "?";
}

ExprPtr make(Node n, Span sp) {
    return std::make_shared<Expr>(Expr{std::move(n), sp});
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        expect(TokenKind::END, "end of input");
        return e;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    const Token& get() { return toks_[pos_++]; }
    bool accept(TokenKind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    Token expect(TokenKind k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError("expected " + what + ", found " +
                             kind_name(peek().kind),
                             peek().span.begin, what);
        return get();
    }

    [[noreturn]] void fail(const std::string& msg, const std::string& expected = {}) {
        throw ParseError(msg, peek().span.begin, expected);
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (accept(TokenKind::PLUS)) {
                ExprPtr r = term();
                Span sp{e->span.begin, r->span.end};
                e = make(AddE{e, r}, sp);
            } else if (accept(TokenKind::MINUS)) {
                ExprPtr r = term();
                Span sp{e->span.begin, r->span.end};
                e = make(SubE{e, r}, sp);
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (accept(TokenKind::STAR)) {
                ExprPtr r = factor();
                Span sp{e->span.begin, r->span.end};
                e = make(MulE{e, r}, sp);
            } else if (accept(TokenKind::SLASH)) {
                ExprPtr r = factor();
                Span sp{e->span.begin, r->span.end};
                e = make(DivE{e, r}, sp);
            } else {
                return e;
            }
        }
    }

    ExprPtr factor() {
        if (peek().kind == TokenKind::MINUS) {
            Token t = get();
            ExprPtr c = factor();
            Span sp{t.span.begin, c->span.end};
            // fold unary minus into numeric leaves so printing round-trips
            if (const auto* k = std::get_if<ConstE>(&c->node))
                return make(ConstE{-k->v}, sp);
            if (const auto* m = std::get_if<MonoE>(&c->node))
                return make(MonoE{-m->c, m->j}, sp);
            return make(NegE{c}, sp);
        }
        ExprPtr a = atom();
        if (peek().kind == TokenKind::CARET) {
            get();
            Token e = expect(TokenKind::INT, "integer exponent");
            Span sp{a->span.begin, e.span.end};
            return make(PowE{a, e.value}, sp);
        }
        return a;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::INT: {
            Token v = get();
            return make(ConstE{Coefficient(v.value)}, v.span);
        }
        case TokenKind::Q: {
            Token v = get();
            long long j = 1;
            Span sp = v.span;
            if (peek().kind == TokenKind::CARET) {
                get();
                Token e = expect(TokenKind::INT, "integer exponent");
                j = e.value;
                sp.end = e.span.end;
            }
            return make(MonoE{Coefficient(1), j}, sp);
        }
        case TokenKind::LPAREN: {
            get();
            ExprPtr e = expr();
            expect(TokenKind::RPAREN, "')'");
            return e;
        }
        case TokenKind::IDENT:
            return call();
        default:
            fail(std::string("expected an expression atom, found ") +
                 kind_name(t.kind),
                 "integer, 'q', function call, or '('");
        }
    }

    struct Monomial {
        int sign;
        long long a;
    };

    Monomial parse_monomial(const std::string& fn) {
        int sign = 1;
        if (accept(TokenKind::MINUS))
            sign = -1;
        if (peek().kind == TokenKind::INT) {
            Token t = get();
            if (t.value != 1)
                fail(fn + ": monomial argument must be +-1 or +-q^a");
            return {sign, 0};
        }
        expect(TokenKind::Q, fn + " monomial argument (+-q^a or +-1)");
        long long a = 1;
        if (accept(TokenKind::CARET))
            a = expect(TokenKind::INT, "integer exponent").value;
        return {sign, a};
    }

    long long parse_base(const std::string& fn) {
        expect(TokenKind::Q, fn + " base (q or q^k)");
        long long k = 1;
        if (accept(TokenKind::CARET))
            k = expect(TokenKind::INT, "integer exponent").value;
        if (k < 1)
            fail(fn + ": base exponent must be >= 1");
        return k;
    }

    long long parse_int(const std::string& fn) {
        bool neg = accept(TokenKind::MINUS);
        Token t = expect(TokenKind::INT, fn + " integer argument");
        return neg ? -t.value : t.value;
    }

    ExprPtr call() {
        Token name = get();
        const std::string& fn = name.text;
        expect(TokenKind::LPAREN, "'(' after function name '" + fn + "'");
        ExprPtr result;
        if (fn == "poch") {
            std::vector<Monomial> args{parse_monomial(fn)};
            while (accept(TokenKind::COMMA))
                args.push_back(parse_monomial(fn));
            expect(TokenKind::SEMI, "';' between poch arguments and base");
            long long k = parse_base(fn);
            expect(TokenKind::SEMI, "';' between poch base and length");
            std::optional<long long> len;
            if (peek().kind == TokenKind::INF)
                get();
            else
                len = expect(TokenKind::INT, "poch length (integer or inf)").value;
            Token close = expect(TokenKind::RPAREN, "')'");
            Span sp{name.span.begin, close.span.end};
            for (const auto& m : args) {
                if (m.a < 0)
                    fail("poch: argument exponent must be >= 0");
                ExprPtr f = len ? make(PochFinE{m.sign, m.a, k, *len}, sp)
                                : make(PochInfE{m.sign, m.a, k}, sp);
                result = result ? make(MulE{result, f}, sp) : f;
            }
            return result;
        }
        if (fn == "P") {
            Monomial m = parse_monomial(fn);
            expect(TokenKind::SEMI, "';' between P argument and base");
            long long k = parse_base(fn);
            Token close = expect(TokenKind::RPAREN, "')'");
            return make(BigPE{m.sign, m.a, k}, Span{name.span.begin, close.span.end});
        }
        if (fn == "theta") {
            Monomial m = parse_monomial(fn);
            expect(TokenKind::SEMI, "';' between theta argument and base");
            long long k = parse_base(fn);
            Token close = expect(TokenKind::RPAREN, "')'");
            return make(ThetaE{m.sign, m.a, k}, Span{name.span.begin, close.span.end});
        }
        if (fn == "P0") {
            long long l = parse_int(fn);
            if (l < 1)
                fail("P0: l must be >= 1");
            Token close = expect(TokenKind::RPAREN, "')'");
            return make(PZeroE{l}, Span{name.span.begin, close.span.end});
        }
        if (fn == "mult") {
            Token close = expect(TokenKind::RPAREN, "')' (mult takes no arguments)");
            return make(MultE{}, Span{name.span.begin, close.span.end});
        }
        if (fn == "sigma" || fn == "sigma0" || fn == "S2" || fn == "g" ||
            fn == "rankgf") {
            std::vector<long long> args{parse_int(fn)};
            while (accept(TokenKind::COMMA))
                args.push_back(parse_int(fn));
            Token close = expect(TokenKind::RPAREN, "')'");
            Span sp{name.span.begin, close.span.end};
            auto arity = [&](size_t n) {
                if (args.size() != n)
                    fail(fn + ": expected " + std::to_string(n) + " arguments, got " +
                         std::to_string(args.size()));
            };
            if (fn == "sigma") {
                arity(3);
                return make(SigmaABE{args[0], args[1], args[2]}, sp);
            }
            if (fn == "sigma0") {
                arity(2);
                return make(Sigma0BE{args[0], args[1]}, sp);
            }
            if (fn == "S2") {
                arity(2);
                return make(S2E{args[0], args[1]}, sp);
            }
            if (fn == "g") {
                arity(2);
                return make(GE{args[0], args[1]}, sp);
            }
            arity(2);
            return make(RankGFE{args[0], args[1]}, sp);
        }
        if (fn == "dissect") {
            ExprPtr child = expr();
            expect(TokenKind::COMMA, "',' after dissect expression");
            long long l = parse_int(fn);
            expect(TokenKind::COMMA, "',' between dissect modulus and residue");
            long long d = parse_int(fn);
            Token close = expect(TokenKind::RPAREN, "')'");
            if (l < 1 || d < 0 || d >= l)
                fail("dissect: need l >= 1 and 0 <= d < l");
            return make(DissectE{child, l, d}, Span{name.span.begin, close.span.end});
        }
        if (fn == "subpow") {
            ExprPtr child = expr();
            expect(TokenKind::COMMA, "',' after subpow expression");
            long long k = parse_int(fn);
            Token close = expect(TokenKind::RPAREN, "')'");
            if (k < 1)
                fail("subpow: k must be >= 1");
            return make(SubPowE{child, k}, Span{name.span.begin, close.span.end});
        }
        throw ParseError("unknown function '" + fn + "'", name.span.begin,
                         "poch, P, P0, theta, sigma, sigma0, S2, g, rankgf, mult, "
                         "dissect, subpow");
    }
};

} // namespace

ExprPtr parse(const std::string& src) { return Parser(tokenize(src)).run(); }

namespace {

// precedence levels: 0 expr, 1 term, 2 factor, 3 atom
int level(const Expr& e) {
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, AddE> || std::is_same_v<T, SubE>)
                return 0;
            else if constexpr (std::is_same_v<T, MulE> || std::is_same_v<T, DivE>)
                return 1;
            else if constexpr (std::is_same_v<T, NegE> || std::is_same_v<T, PowE>)
                return 2;
            else
                return 3;
        },
        e.node);
}

std::string mono_text(int sign, long long a) {
    std::string s = sign < 0 ? "-" : "";
    if (a == 0)
        return s + "1";
    if (a == 1)
        return s + "q";
    return s + "q^" + std::to_string(a);
}

std::string base_text(long long k) {
    return k == 1 ? "q" : "q^" + std::to_string(k);
}

void print_rec(const ExprPtr& e, int min_level, std::string& out);

std::string printed(const ExprPtr& e, int min_level) {
    std::string s;
    print_rec(e, min_level, s);
    return s;
}

void print_rec(const ExprPtr& e, int min_level, std::string& out) {
    int lv = level(*e);
    bool wrap = lv < min_level;
    if (wrap)
        out += "(";
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstE>) {
                out += n.v.str();
            } else if constexpr (std::is_same_v<T, MonoE>) {
                if (n.j < 0)
                    throw SeriesError("print: negative monomial exponent is not "
                                      "representable in the grammar");
                if (n.c == -1)
                    out += "-";
                else if (n.c != 1)
                    throw SeriesError("print: monomial coefficient must be +-1");
                out += (n.j == 1) ? "q" : "q^" + std::to_string(n.j);
            } else if constexpr (std::is_same_v<T, PochInfE>) {
                out += "poch(" + mono_text(n.sign, n.a) + "; " + base_text(n.k) +
                       "; inf)";
            } else if constexpr (std::is_same_v<T, PochFinE>) {
                out += "poch(" + mono_text(n.sign, n.a) + "; " + base_text(n.k) +
                       "; " + std::to_string(n.n) + ")";
            } else if constexpr (std::is_same_v<T, BigPE>) {
                out += "P(" + mono_text(n.sign, n.a) + "; " + base_text(n.k) + ")";
            } else if constexpr (std::is_same_v<T, PZeroE>) {
                out += "P0(" + std::to_string(n.ell) + ")";
            } else if constexpr (std::is_same_v<T, ThetaE>) {
                out += "theta(" + mono_text(n.sign, n.a) + "; " + base_text(n.k) + ")";
            } else if constexpr (std::is_same_v<T, SigmaABE>) {
                out += "sigma(" + std::to_string(n.a) + "," + std::to_string(n.b) +
                       "," + std::to_string(n.ell) + ")";
            } else if constexpr (std::is_same_v<T, Sigma0BE>) {
                out += "sigma0(" + std::to_string(n.b) + "," + std::to_string(n.ell) +
                       ")";
            } else if constexpr (std::is_same_v<T, S2E>) {
                out += "S2(" + std::to_string(n.b) + "," + std::to_string(n.ell) + ")";
            } else if constexpr (std::is_same_v<T, GE>) {
                out += "g(" + std::to_string(n.a) + "," + std::to_string(n.ell) + ")";
            } else if constexpr (std::is_same_v<T, RankGFE>) {
                out += "rankgf(" + std::to_string(n.s) + "," + std::to_string(n.ell) +
                       ")";
            } else if constexpr (std::is_same_v<T, MultE>) {
                out += "mult()";
            } else if constexpr (std::is_same_v<T, DissectE>) {
                out += "dissect(" + printed(n.child, 0) + ", " +
                       std::to_string(n.ell) + ", " + std::to_string(n.d) + ")";
            } else if constexpr (std::is_same_v<T, SubPowE>) {
                out += "subpow(" + printed(n.child, 0) + ", " + std::to_string(n.k) +
                       ")";
            } else if constexpr (std::is_same_v<T, AddE>) {
                print_rec(n.lhs, 0, out);
                out += " + ";
                print_rec(n.rhs, 1, out);
            } else if constexpr (std::is_same_v<T, SubE>) {
                print_rec(n.lhs, 0, out);
                out += " - ";
                print_rec(n.rhs, 1, out);
            } else if constexpr (std::is_same_v<T, MulE>) {
                print_rec(n.lhs, 1, out);
                out += "*";
                print_rec(n.rhs, 2, out);
            } else if constexpr (std::is_same_v<T, DivE>) {
                print_rec(n.lhs, 1, out);
                out += "/";
                print_rec(n.rhs, 2, out);
            } else if constexpr (std::is_same_v<T, PowE>) {
                print_rec(n.base, 3, out);
                out += "^" + std::to_string(n.e);
            } else if constexpr (std::is_same_v<T, NegE>) {
                out += "-";
                print_rec(n.child, 2, out);
            }
        },
        e->node);
    if (wrap)
        out += ")";
}

} // namespace

std::string print(const ExprPtr& e) { return printed(e, 0); }

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->node.index() != b->node.index())
        return false;
    bool eq = true;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b->node);
            if constexpr (std::is_same_v<T, ConstE>)
                eq = x.v == y.v;
            else if constexpr (std::is_same_v<T, MonoE>)
                eq = x.c == y.c && x.j == y.j;
            else if constexpr (std::is_same_v<T, PochInfE>)
                eq = x.sign == y.sign && x.a == y.a && x.k == y.k;
            else if constexpr (std::is_same_v<T, PochFinE>)
                eq = x.sign == y.sign && x.a == y.a && x.k == y.k && x.n == y.n;
            else if constexpr (std::is_same_v<T, BigPE>)
                eq = x.sign == y.sign && x.a == y.a && x.k == y.k;
            else if constexpr (std::is_same_v<T, PZeroE>)
                eq = x.ell == y.ell;
            else if constexpr (std::is_same_v<T, ThetaE>)
                eq = x.sign == y.sign && x.a == y.a && x.k == y.k;
            else if constexpr (std::is_same_v<T, SigmaABE>)
                eq = x.a == y.a && x.b == y.b && x.ell == y.ell;
            else if constexpr (std::is_same_v<T, Sigma0BE>)
                eq = x.b == y.b && x.ell == y.ell;
            else if constexpr (std::is_same_v<T, S2E>)
                eq = x.b == y.b && x.ell == y.ell;
            else if constexpr (std::is_same_v<T, GE>)
                eq = x.a == y.a && x.ell == y.ell;
            else if constexpr (std::is_same_v<T, RankGFE>)
                eq = x.s == y.s && x.ell == y.ell;
            else if constexpr (std::is_same_v<T, MultE>)
                eq = true;
            else if constexpr (std::is_same_v<T, DissectE>)
                eq = x.ell == y.ell && x.d == y.d &&
                     structurally_equal(x.child, y.child);
            else if constexpr (std::is_same_v<T, SubPowE>)
                eq = x.k == y.k && structurally_equal(x.child, y.child);
            else if constexpr (std::is_same_v<T, AddE> || std::is_same_v<T, SubE> ||
                               std::is_same_v<T, MulE> || std::is_same_v<T, DivE>)
                eq = structurally_equal(x.lhs, y.lhs) &&
                     structurally_equal(x.rhs, y.rhs);
            else if constexpr (std::is_same_v<T, PowE>)
                eq = x.e == y.e && structurally_equal(x.base, y.base);
            else if constexpr (std::is_same_v<T, NegE>)
                eq = structurally_equal(x.child, y.child);
        },
        a->node);
    return eq;
}

struct EvalCache::Impl {
    std::mutex mutex;
    std::unordered_map<std::string, QSeries> map;
};

EvalCache::EvalCache() : impl_(std::make_unique<Impl>()) {}
EvalCache::~EvalCache() = default;

namespace {

std::string annotate(const std::exception& e, const Span& sp) {
    std::string msg = e.what();
    if (msg.find(" [in sub-expression at offset") != std::string::npos)
        return msg;
    return msg + " [in sub-expression at offset " + std::to_string(sp.begin) + ".." +
           std::to_string(sp.end) + "]";
}

template <typename F>
QSeries with_span(const Span& sp, F&& f) {
    try {
        return f();
    } catch (NotAUnit& e) {
        throw NotAUnit(annotate(e, sp));
    } catch (ZeroDenominator& e) {
        throw ZeroDenominator(annotate(e, sp));
    } catch (ZeroSeries& e) {
        throw ZeroSeries(annotate(e, sp));
    } catch (OutOfRange& e) {
        throw OutOfRange(annotate(e, sp));
    } catch (NegativeSupport& e) {
        throw NegativeSupport(annotate(e, sp));
    } catch (InsufficientPrecision& e) {
        throw InsufficientPrecision(annotate(e, sp));
    }
}

struct Evaluator {
    EvalCache::Impl* cache;

    QSeries eval(const ExprPtr& e, long long p) {
        bool memoize = !std::holds_alternative<ConstE>(e->node) &&
                       !std::holds_alternative<MonoE>(e->node);
        std::string key;
        if (cache && memoize) {
            key = print(e) + "#" + std::to_string(p);
            std::lock_guard<std::mutex> lock(cache->mutex);
            auto it = cache->map.find(key);
            if (it != cache->map.end())
                return it->second;
        }
        QSeries r = with_span(e->span, [&] { return compute(e, p); });
        if (cache && memoize) {
            std::lock_guard<std::mutex> lock(cache->mutex);
            cache->map.emplace(std::move(key), r);
        }
        return r;
    }

    QSeries compute(const ExprPtr& e, long long p) {
        return std::visit(
            [&](const auto& n) -> QSeries {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, ConstE>)
                    return QSeries::constant(n.v, p);
                else if constexpr (std::is_same_v<T, MonoE>)
                    return QSeries::monomial(n.c, n.j, p);
                else if constexpr (std::is_same_v<T, PochInfE>)
                    return poch_inf(n.sign, n.a, n.k, p);
                else if constexpr (std::is_same_v<T, PochFinE>)
                    return poch_fin(n.sign, n.a, n.k, n.n, p);
                else if constexpr (std::is_same_v<T, BigPE>)
                    return big_p(n.sign, n.a, n.k, p);
                else if constexpr (std::is_same_v<T, PZeroE>)
                    return p_zero(n.ell, p);
                else if constexpr (std::is_same_v<T, ThetaE>)
                    return theta_sum(n.sign, n.a, n.k, p);
                else if constexpr (std::is_same_v<T, SigmaABE>)
                    return sigma_ab(n.a, n.b, n.ell, p);
                else if constexpr (std::is_same_v<T, Sigma0BE>)
                    return sigma_0b(n.b, n.ell, p);
                else if constexpr (std::is_same_v<T, S2E>)
                    return s2(n.b, n.ell, p);
                else if constexpr (std::is_same_v<T, GE>)
                    return g_of(n.a, n.ell, p);
                else if constexpr (std::is_same_v<T, RankGFE>)
                    return rank_gf(n.s, n.ell, p);
                else if constexpr (std::is_same_v<T, MultE>)
                    return multiplier(p);
                else if constexpr (std::is_same_v<T, DissectE>)
                    return dissect(eval(n.child, n.ell * p + n.d), n.ell, n.d);
                else if constexpr (std::is_same_v<T, SubPowE>)
                    return substitute_power(eval(n.child, (p + n.k - 1) / n.k), n.k);
                else if constexpr (std::is_same_v<T, AddE>)
                    return add(eval(n.lhs, p), eval(n.rhs, p));
                else if constexpr (std::is_same_v<T, SubE>)
                    return sub(eval(n.lhs, p), eval(n.rhs, p));
                else if constexpr (std::is_same_v<T, MulE>)
                    return mul(eval(n.lhs, p), eval(n.rhs, p));
                else if constexpr (std::is_same_v<T, DivE>)
                    return mul(eval(n.lhs, p), invert_unit(eval(n.rhs, p)));
                else if constexpr (std::is_same_v<T, PowE>) {
                    if (n.e < 0)
                        throw SeriesError("pow: exponent must be >= 0");
                    QSeries r = QSeries::constant(1, p);
                    if (n.e == 0)
                        return r;
                    QSeries b = eval(n.base, p);
                    for (long long i = 0; i < n.e; ++i)
                        r = mul(r, b);
                    return r;
                } else {
                    static_assert(std::is_same_v<T, NegE>);
                    return negate(eval(n.child, p));
                }
            },
            e->node);
    }
};

} // namespace

QSeries eval(const ExprPtr& e, long long order, long long margin, EvalCache* cache) {
    if (!cache) {
        // still memoize repeated sub-expressions within this one call
        EvalCache local;
        Evaluator ev{local.impl()};
        return ev.eval(e, order + 1 + margin);
    }
    Evaluator ev{cache->impl()};
    return ev.eval(e, order + 1 + margin);
}

QSeries eval_str(const std::string& src, long long order, long long margin,
                 EvalCache* cache) {
    return eval(parse(src), order, margin, cache);
}

} // namespace qlab::dsl
