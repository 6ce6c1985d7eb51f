#include "gdua/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gdua {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string rat_str(const BigRat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

} // namespace

std::string to_string(const Scalar& x) {
    if (x.is_rational()) return rat_str(x.a_part());
    // Common-denominator form (A+B*sqrt(D))/Q.
    BigInt q1 = denominator(x.a_part()), q2 = denominator(x.b_part());
    BigInt q = q1 * q2 / gcd(q1, q2);
    BigInt A = numerator(x.a_part()) * (q / q1);
    BigInt B = numerator(x.b_part()) * (q / q2);
    std::ostringstream os;
    os << "(" << A << (B < 0 ? "-" : "+") << boost::multiprecision::abs(B) << "*sqrt("
       << x.extension_d() << "))";
    if (q != 1) os << "/" << q;
    return os.str();
}

namespace {

// Sign-aware piece of a term: magnitude text plus whether it prints with a
// leading minus.  Quadratic coefficients always print in full.
struct TermText {
    bool negative = false;
    std::string magnitude; // empty means coefficient 1
};

TermText coeff_text(const Scalar& c) {
    TermText t;
    if (c.is_rational()) {
        BigRat q = c.a_part();
        if (q < 0) {
            t.negative = true;
            q = -q;
        }
        if (q != 1) t.magnitude = rat_str(q);
    } else {
        t.magnitude = to_string(c);
    }
    return t;
}

std::string join_terms(const std::vector<std::pair<TermText, std::string>>& parts) {
    if (parts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [coef, body] : parts) {
        if (first) {
            if (coef.negative) os << "-";
            first = false;
        } else {
            os << (coef.negative ? " - " : " + ");
        }
        if (coef.magnitude.empty()) {
            os << (body.empty() ? "1" : body);
        } else {
            os << coef.magnitude;
            if (!body.empty()) os << "*" << body;
        }
    }
    return os.str();
}

} // namespace

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    bool any = false;
    auto put = [&](char g, long e) {
        if (e == 0) return;
        if (any) os << "*";
        os << g;
        if (e > 1) os << "^" << e;
        any = true;
    };
    put('u', m.u);
    put('h', m.h);
    put('d', m.d);
    return any ? os.str() : "1";
}

std::string to_string(const Element& x) {
    std::vector<std::pair<Monomial, Scalar>> terms(x.terms().begin(), x.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.zdegree() != b.first.zdegree()) return a.first.zdegree() < b.first.zdegree();
        return a.first < b.first;
    });
    std::vector<std::pair<TermText, std::string>> parts;
    for (const auto& [m, c] : terms) {
        std::string body = to_string(m);
        if (body == "1") body.clear();
        parts.emplace_back(coeff_text(c), body);
    }
    return join_terms(parts);
}

std::string to_string(const Poly& p) {
    std::vector<std::pair<TermText, std::string>> parts;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.coeff(i).is_zero()) continue;
        std::string body;
        if (i == 1) body = "X";
        else if (i > 1) body = "X^" + std::to_string(i);
        parts.emplace_back(coeff_text(p.coeff(i)), body);
    }
    return join_terms(parts);
}

// --- parsing -----------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    std::shared_ptr<ExprAst> parse_expression_all() {
        auto ast = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return ast;
    }

    Scalar parse_scalar_all() {
        skip_ws();
        bool neg = eat('-');
        Scalar v = parse_scalar_literal();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return neg ? -v : v;
    }

private:
    std::string s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw Error(Errc::syntax_error,
                    what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    BigInt parse_nat() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return BigInt(s_.substr(start, pos_ - start));
    }

    BigRat parse_rational(bool allow_sign) {
        bool neg = allow_sign && eat('-');
        BigInt num = parse_nat();
        BigInt den = 1;
        if (eat('/')) {
            den = parse_nat();
            if (den == 0) fail("zero denominator");
        }
        BigRat q(num, den);
        return neg ? -q : q;
    }

    bool lookahead_word(const char* w) {
        skip_ws();
        size_t n = std::string(w).size();
        return s_.compare(pos_, n, w) == 0;
    }
    void expect_word(const char* w) {
        if (!lookahead_word(w)) fail(std::string("expected '") + w + "'");
        pos_ += std::string(w).size();
    }

    // "sqrt(" int ")" normalized into canonical quadratic form.
    Scalar parse_sqrt() {
        expect_word("sqrt");
        expect('(');
        bool neg = eat('-');
        BigInt n = parse_nat();
        expect(')');
        return sqrt_of_rational(BigRat(neg ? -n : n));
    }

    // Assumes the opening '(' was consumed; parses
    //   a ('+'|'-') b '*sqrt(' int ')' ')' ['/' nat]
    Scalar parse_quad_tail() {
        BigRat a = parse_rational(true);
        char op = peek();
        if (op != '+' && op != '-') fail("expected '+' or '-' in quadratic literal");
        ++pos_;
        BigRat b = parse_rational(false);
        expect('*');
        Scalar root = parse_sqrt();
        expect(')');
        Scalar value = Scalar(a) + root * Scalar(op == '-' ? -b : b);
        if (eat('/')) {
            BigInt den = parse_nat();
            if (den == 0) fail("zero denominator");
            value = value / Scalar(BigRat(den));
        }
        return value;
    }

    Scalar parse_scalar_literal() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(parse_rational(false));
        if (lookahead_word("sqrt")) return parse_sqrt();
        if (c == '(') {
            ++pos_;
            return parse_quad_tail();
        }
        fail("expected a scalar literal");
    }

    std::shared_ptr<ExprAst> make_scalar(Scalar v) {
        auto n = std::make_shared<ExprAst>();
        n->kind = ExprAst::Kind::scalar;
        n->scalar = std::move(v);
        return n;
    }

    std::shared_ptr<ExprAst> parse_factor() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return make_scalar(Scalar(parse_rational(false)));
        if (c == 'd' || c == 'u' || c == 'h') {
            size_t at = pos_;
            ++pos_;
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                pos_ = at;
                fail("implicit multiplication is not allowed (use '*')");
            }
            auto n = std::make_shared<ExprAst>();
            n->kind = ExprAst::Kind::generator;
            n->gen = c == 'd' ? Gen::d : (c == 'u' ? Gen::u : Gen::h);
            if (eat('^')) {
                BigInt e = parse_nat();
                if (e > 1000) fail("exponent too large");
                auto p = std::make_shared<ExprAst>();
                p->kind = ExprAst::Kind::power;
                p->exponent = e.convert_to<long>();
                p->children.push_back(n);
                return p;
            }
            return n;
        }
        if (c == '(') {
            size_t save = pos_;
            ++pos_;
            try {
                return make_scalar(parse_quad_tail());
            } catch (const Error& e) {
                if (e.kind() != Errc::syntax_error) throw;
                pos_ = save;
            }
            expect('(');
            auto inner = parse_sum();
            expect(')');
            return inner;
        }
        fail("expected a scalar, generator or '('");
    }

    std::shared_ptr<ExprAst> parse_term() {
        auto n = std::make_shared<ExprAst>();
        n->kind = ExprAst::Kind::product;
        n->children.push_back(parse_factor());
        while (eat('*')) n->children.push_back(parse_factor());
        if (n->children.size() == 1) return n->children[0];
        return n;
    }

    std::shared_ptr<ExprAst> parse_sum() {
        auto n = std::make_shared<ExprAst>();
        n->kind = ExprAst::Kind::sum;
        int sign = 1;
        if (eat('-')) sign = -1;
        n->children.push_back(parse_term());
        n->signs.push_back(sign);
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                n->children.push_back(parse_term());
                n->signs.push_back(c == '+' ? 1 : -1);
            } else {
                break;
            }
        }
        if (n->children.size() == 1 && n->signs[0] == 1) return n->children[0];
        return n;
    }
};

} // namespace

std::shared_ptr<ExprAst> parse_expression(const std::string& text) {
    return Parser(text).parse_expression_all();
}

Scalar parse_scalar(const std::string& text) { return Parser(text).parse_scalar_all(); }

Element eval_ast(const Presentation& pres, const ExprAst& ast) {
    switch (ast.kind) {
    case ExprAst::Kind::scalar:
        return Element::constant(ast.scalar);
    case ExprAst::Kind::generator:
        return Element::generator(ast.gen);
    case ExprAst::Kind::power:
        return pow(pres, eval_ast(pres, *ast.children[0]), ast.exponent);
    case ExprAst::Kind::product: {
        Element acc = Element::one();
        for (const auto& c : ast.children) acc = mul(pres, acc, eval_ast(pres, *c));
        return acc;
    }
    case ExprAst::Kind::sum: {
        Element acc;
        for (size_t i = 0; i < ast.children.size(); ++i) {
            Element t = eval_ast(pres, *ast.children[i]);
            acc = ast.signs[i] > 0 ? acc + t : acc - t;
        }
        return acc;
    }
    }
    throw Error(Errc::internal, "unreachable");
}

Element parse_element(const Presentation& pres, const std::string& text) {
    return eval_ast(pres, *parse_expression(text));
}

} // namespace gdua
