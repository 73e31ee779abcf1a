#include "gkwb/parser.hpp"

#include <cctype>

#include "gkwb/errors.hpp"

namespace gkwb {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }

    BigInt read_nat() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", pos);
        return BigInt(std::string(text.substr(start, pos - start)), 10);
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an identifier", pos);
        return std::string(text.substr(start, pos - start));
    }
};

struct Parser {
    Lexer lex;
    const GensPtr& gens;

    ExprPtr make(ExprNode::Kind k) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        return n;
    }

    ExprPtr parse_expr() {
        ExprPtr node;
        if (lex.accept('-')) {
            // leading minus: negate the first term
            node = make(ExprNode::Kind::difference);
            node->lhs = make(ExprNode::Kind::constant);
            node->lhs->value = Rational(0);
            node->rhs = parse_term();
        } else {
            node = parse_term();
        }
        while (true) {
            if (lex.accept('+')) {
                auto sum = make(ExprNode::Kind::sum);
                sum->lhs = std::move(node);
                sum->rhs = parse_term();
                node = std::move(sum);
            } else if (lex.accept('-')) {
                auto diff = make(ExprNode::Kind::difference);
                diff->lhs = std::move(node);
                diff->rhs = parse_term();
                node = std::move(diff);
            } else {
                return node;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr node = parse_factor();
        while (lex.accept('*')) {
            auto prod = make(ExprNode::Kind::product);
            prod->lhs = std::move(node);
            prod->rhs = parse_factor();
            node = std::move(prod);
        }
        return node;
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_base();
        if (lex.accept('^')) {
            if (lex.peek() == '-') throw ParseError("negative exponent", lex.pos);
            BigInt e = lex.read_nat();
            if (e > 4096) throw ParseError("exponent too large", lex.pos);
            auto pw = make(ExprNode::Kind::power);
            pw->lhs = std::move(base);
            pw->exponent = static_cast<unsigned>(e.get_ui());
            return pw;
        }
        return base;
    }

    ExprPtr parse_base() {
        char c = lex.peek();
        if (c == '(') {
            lex.accept('(');
            ExprPtr inner = parse_expr();
            lex.expect(')', "to close parenthesis");
            return inner;
        }
        if (c == '[') {
            lex.accept('[');
            auto br = make(ExprNode::Kind::bracket);
            br->lhs = parse_expr();
            lex.expect(',', "between commutator arguments");
            br->rhs = parse_expr();
            lex.expect(']', "to close commutator");
            return br;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = lex.read_nat();
            auto node = make(ExprNode::Kind::constant);
            if (lex.accept('/')) {
                BigInt den = lex.read_nat();
                if (sgn(den) == 0) throw ParseError("zero denominator", lex.pos);
                node->value = Rational(num, den);
            } else {
                node->value = Rational(num);
            }
            return node;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = lex.pos;
            std::string name = lex.read_ident();
            auto idx = gens->index_of(name);
            if (!idx) throw ParseError("unknown generator '" + name + "'", at);
            auto node = make(ExprNode::Kind::generator);
            node->gen = *idx;
            return node;
        }
        throw ParseError("unexpected character", lex.pos);
    }
};

}  // namespace

ExprPtr parse_ast(std::string_view text, const GensPtr& gens) {
    Parser p{Lexer{text}, gens};
    ExprPtr root = p.parse_expr();
    if (!p.lex.at_end()) throw ParseError("trailing input", p.lex.pos);
    return root;
}

Poly eval_ast(const ExprNode& node, const GensPtr& gens) {
    switch (node.kind) {
        case ExprNode::Kind::constant:
            return Poly::constant(gens, node.value);
        case ExprNode::Kind::generator:
            return Poly::generator(gens, node.gen);
        case ExprNode::Kind::sum:
            return eval_ast(*node.lhs, gens) + eval_ast(*node.rhs, gens);
        case ExprNode::Kind::difference:
            return eval_ast(*node.lhs, gens) - eval_ast(*node.rhs, gens);
        case ExprNode::Kind::product:
            return eval_ast(*node.lhs, gens) * eval_ast(*node.rhs, gens);
        case ExprNode::Kind::power:
            return poly_pow(eval_ast(*node.lhs, gens), node.exponent);
        case ExprNode::Kind::bracket:
            return commutator(eval_ast(*node.lhs, gens), eval_ast(*node.rhs, gens));
    }
    throw InternalError("unreachable expression kind");
}

Poly parse_expr(std::string_view text, const GensPtr& gens) {
    return eval_ast(*parse_ast(text, gens), gens);
}

Word parse_word(std::string_view text, const GensPtr& gens) {
    Poly p = parse_expr(text, gens);
    if (p.term_count() != 1 || !p.leading_coeff().is_one())
        throw UsageError("expected a single monomial with coefficient 1: " + std::string(text));
    return p.leading_word();
}

}  // namespace gkwb
