#include "ssf/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <vector>

namespace ssf {

const char* unary_fn_name(UnaryFn fn) {
    switch (fn) {
        case UnaryFn::Sin: return "sin";
        case UnaryFn::Cos: return "cos";
        case UnaryFn::Tan: return "tan";
        case UnaryFn::Exp: return "exp";
        case UnaryFn::Log: return "ln";
        case UnaryFn::Atan: return "arctan";
        case UnaryFn::Sqrt: return "sqrt";
    }
    return "?";
}

ExprPtr make_constant(double value) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Constant;
    e->value = value;
    return e;
}

ExprPtr make_variable() {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Variable;
    return e;
}

static ExprPtr make_binary(Expr::Kind kind, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr make_add(ExprPtr a, ExprPtr b) { return make_binary(Expr::Kind::Add, std::move(a), std::move(b)); }
ExprPtr make_sub(ExprPtr a, ExprPtr b) { return make_binary(Expr::Kind::Sub, std::move(a), std::move(b)); }
ExprPtr make_mul(ExprPtr a, ExprPtr b) { return make_binary(Expr::Kind::Mul, std::move(a), std::move(b)); }
ExprPtr make_div(ExprPtr a, ExprPtr b) { return make_binary(Expr::Kind::Div, std::move(a), std::move(b)); }
ExprPtr make_pow(ExprPtr base, ExprPtr exponent) {
    return make_binary(Expr::Kind::Pow, std::move(base), std::move(exponent));
}

ExprPtr make_neg(ExprPtr a) {
    // Fold negated literals so "-2" round-trips as a single constant node.
    if (a->kind == Expr::Kind::Constant) return make_constant(-a->value);
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Neg;
    e->lhs = std::move(a);
    return e;
}

ExprPtr make_call(UnaryFn fn, ExprPtr arg) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Call;
    e->fn = fn;
    e->lhs = std::move(arg);
    return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Constant: return a.value == b.value;
        case Expr::Kind::Variable: return true;
        case Expr::Kind::Neg: return expr_equal(*a.lhs, *b.lhs);
        case Expr::Kind::Call: return a.fn == b.fn && expr_equal(*a.lhs, *b.lhs);
        default: return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    }
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Precedence levels: add/sub 1, mul/div 2, unary minus 3, pow 4, atoms 5.
// A negative literal prints with a leading minus, so it binds like a Neg node.
int print_level(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        case Expr::Kind::Constant: return e.value < 0.0 ? 3 : 5;
        default: return 5;
    }
}

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

void print_node(const Expr& e, std::string& out);

void print_child(const Expr& child, int min_level, std::string& out) {
    if (print_level(child) < min_level) {
        out += '(';
        print_node(child, out);
        out += ')';
    } else {
        print_node(child, out);
    }
}

void print_node(const Expr& e, std::string& out) {
    switch (e.kind) {
        case Expr::Kind::Constant:
            out += format_double(e.value);
            break;
        case Expr::Kind::Variable:
            out += 's';
            break;
        case Expr::Kind::Add:
            print_child(*e.lhs, 1, out);
            out += " + ";
            print_child(*e.rhs, 2, out);
            break;
        case Expr::Kind::Sub:
            print_child(*e.lhs, 1, out);
            out += " - ";
            print_child(*e.rhs, 2, out);
            break;
        case Expr::Kind::Mul:
            print_child(*e.lhs, 2, out);
            out += '*';
            print_child(*e.rhs, 3, out);
            break;
        case Expr::Kind::Div:
            print_child(*e.lhs, 2, out);
            out += '/';
            print_child(*e.rhs, 3, out);
            break;
        case Expr::Kind::Neg:
            out += '-';
            print_child(*e.lhs, 4, out);
            break;
        case Expr::Kind::Pow:
            print_child(*e.lhs, 5, out);
            out += '^';
            print_child(*e.rhs, 3, out);
            break;
        case Expr::Kind::Call:
            out += unary_fn_name(e.fn);
            out += '(';
            print_node(*e.lhs, out);
            out += ')';
            break;
    }
}

} // namespace

std::string print_expr(const Expr& expr) {
    std::string out;
    print_node(expr, out);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Jet3 eval_expr(const Expr& expr, const Jet3& s) {
    switch (expr.kind) {
        case Expr::Kind::Constant: return Jet3::constant(expr.value);
        case Expr::Kind::Variable: return s;
        case Expr::Kind::Add: return eval_expr(*expr.lhs, s) + eval_expr(*expr.rhs, s);
        case Expr::Kind::Sub: return eval_expr(*expr.lhs, s) - eval_expr(*expr.rhs, s);
        case Expr::Kind::Mul: return eval_expr(*expr.lhs, s) * eval_expr(*expr.rhs, s);
        case Expr::Kind::Div: return eval_expr(*expr.lhs, s) / eval_expr(*expr.rhs, s);
        case Expr::Kind::Neg: return -eval_expr(*expr.lhs, s);
        case Expr::Kind::Pow:
            return pow(eval_expr(*expr.lhs, s), eval_expr(*expr.rhs, s));
        case Expr::Kind::Call: {
            const Jet3 arg = eval_expr(*expr.lhs, s);
            switch (expr.fn) {
                case UnaryFn::Sin: return sin(arg);
                case UnaryFn::Cos: return cos(arg);
                case UnaryFn::Tan: return tan(arg);
                case UnaryFn::Exp: return exp(arg);
                case UnaryFn::Log: return log(arg);
                case UnaryFn::Atan: return atan(arg);
                case UnaryFn::Sqrt: return sqrt(arg);
            }
            break;
        }
    }
    throw Error("corrupt expression tree");
}

// ---------------------------------------------------------------------------
// Lexer + recursive-descent parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };
    Kind kind;
    std::size_t position;
    std::string text;
    double value{};
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            std::size_t start = i;
            while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'))
                ++i;
            if (i < n && (text[i] == 'e' || text[i] == 'E')) {
                std::size_t mark = i;
                ++i;
                if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
                if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                } else {
                    i = mark; // "2e" with no exponent digits: leave 'e' for the ident lexer
                }
            }
            const std::string number = text.substr(start, i - start);
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
            if (ec != std::errc() || ptr != number.data() + number.size())
                throw SyntaxError("malformed number '" + number + "'", start);
            tokens.push_back({Token::Kind::Number, start, number, value});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            tokens.push_back({Token::Kind::Ident, start, text.substr(start, i - start), 0.0});
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '/': kind = Token::Kind::Slash; break;
            case '^': kind = Token::Kind::Caret; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            case ',': kind = Token::Kind::Comma; break;
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", i);
        }
        tokens.push_back({kind, i, std::string(1, c), 0.0});
        ++i;
    }
    tokens.push_back({Token::Kind::End, n, "", 0.0});
    return tokens;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    ExprPtr parse_full_expression() {
        ExprPtr e = parse_expr();
        expect_end();
        return e;
    }

    std::array<ExprPtr, 3> parse_curve_components() {
        std::array<ExprPtr, 3> components;
        components[0] = parse_expr();
        expect(Token::Kind::Comma, "expected ','");
        components[1] = parse_expr();
        expect(Token::Kind::Comma, "expected ','");
        components[2] = parse_expr();
        expect_end();
        return components;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    void expect(Token::Kind kind, const std::string& message) {
        if (peek().kind != kind)
            throw SyntaxError(message + ", got '" + describe(peek()) + "'", peek().position);
        ++pos_;
    }

    void expect_end() {
        if (peek().kind != Token::Kind::End)
            throw SyntaxError("unexpected trailing input '" + describe(peek()) + "'",
                              peek().position);
    }

    static std::string describe(const Token& t) {
        return t.kind == Token::Kind::End ? "end of input" : t.text;
    }

    // expr := term (('+' | '-') term)*
    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            const bool plus = advance().kind == Token::Kind::Plus;
            ExprPtr r = parse_term();
            e = plus ? make_add(std::move(e), std::move(r)) : make_sub(std::move(e), std::move(r));
        }
        return e;
    }

    // term := unary (('*' | '/') unary)*
    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
            const bool mul = advance().kind == Token::Kind::Star;
            ExprPtr r = parse_unary();
            e = mul ? make_mul(std::move(e), std::move(r)) : make_div(std::move(e), std::move(r));
        }
        return e;
    }

    // unary := '-' unary | power    (pow binds tighter than unary minus)
    ExprPtr parse_unary() {
        if (peek().kind == Token::Kind::Minus) {
            ++pos_;
            return make_neg(parse_unary());
        }
        return parse_power();
    }

    // power := atom ('^' unary)?    (right-associative)
    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek().kind == Token::Kind::Caret) {
            ++pos_;
            return make_pow(std::move(base), parse_unary());
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number:
                ++pos_;
                return make_constant(t.value);
            case Token::Kind::LParen: {
                ++pos_;
                ExprPtr e = parse_expr();
                expect(Token::Kind::RParen, "expected ')'");
                return e;
            }
            case Token::Kind::Ident: {
                ++pos_;
                if (t.text == "s") return make_variable();
                const std::optional<UnaryFn> fn = lookup_function(t.text);
                if (!fn) throw UnknownFunctionError(t.text, t.position);
                if (peek().kind != Token::Kind::LParen)
                    throw SyntaxError("expected '(' after function '" + t.text + "'",
                                      peek().position);
                ++pos_;
                ExprPtr arg = parse_expr();
                if (peek().kind == Token::Kind::Comma) {
                    const std::size_t comma_pos = peek().position;
                    ++pos_;
                    parse_expr(); // malformed second argument raises SyntaxError instead
                    throw ArityError("function '" + t.text + "' takes exactly one argument",
                                     comma_pos);
                }
                expect(Token::Kind::RParen, "expected ')'");
                return make_call(*fn, std::move(arg));
            }
            default:
                throw SyntaxError("expected expression, got '" + describe(t) + "'", t.position);
        }
    }

    static std::optional<UnaryFn> lookup_function(const std::string& name) {
        if (name == "sin") return UnaryFn::Sin;
        if (name == "cos") return UnaryFn::Cos;
        if (name == "tan") return UnaryFn::Tan;
        if (name == "exp") return UnaryFn::Exp;
        if (name == "ln") return UnaryFn::Log;
        if (name == "arctan") return UnaryFn::Atan;
        if (name == "sqrt") return UnaryFn::Sqrt;
        return std::nullopt;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expression(const std::string& text) {
    return Parser(text).parse_full_expression();
}

CurveExpr parse_curve(const std::string& text) {
    CurveExpr curve;
    curve.components = Parser(text).parse_curve_components();
    curve.source_text = text;
    return curve;
}

std::string print_curve(const CurveExpr& curve) {
    return print_expr(*curve.components[0]) + ", " + print_expr(*curve.components[1]) + ", " +
           print_expr(*curve.components[2]);
}

std::array<Jet3, 3> eval_jet3(const CurveExpr& curve, double s) {
    if (curve.domain && !(s >= curve.domain->first && s <= curve.domain->second))
        throw DomainError("parameter s = " + std::to_string(s) + " outside curve domain");
    const Jet3 var = Jet3::variable(s);
    std::array<Jet3, 3> jets;
    for (int k = 0; k < 3; ++k) {
        jets[k] = eval_expr(*curve.components[k], var);
        if (!jet_finite(jets[k]))
            throw DomainError("curve component " + std::to_string(k + 1) +
                              " is non-finite at s = " + std::to_string(s));
    }
    return jets;
}

} // namespace ssf
