#include "rthopf/expr.hpp"

#include <cctype>

namespace rthopf {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing characters after expression", pos_);
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool try_keyword(std::string_view kw) {
        skip_ws();
        if (s_.substr(pos_, kw.size()) != kw) return false;
        pos_ += kw.size();
        return true;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
            const bool plus = s_[pos_] == '+';
            ++pos_;
            auto node = std::make_unique<Expr>();
            node->kind = plus ? Expr::Kind::sum : Expr::Kind::diff;
            node->args.push_back(std::move(e));
            node->args.push_back(term());
            e = std::move(node);
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (peek_is('*')) {
            ++pos_;
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::prod;
            node->args.push_back(std::move(e));
            node->args.push_back(factor());
            e = std::move(node);
        }
        return e;
    }

    ExprPtr call(Expr::Kind kind, int arity) {
        auto node = std::make_unique<Expr>();
        node->kind = kind;
        expect('(');
        for (int i = 0; i < arity; ++i) {
            if (i) expect(',');
            node->args.push_back(expr());
        }
        expect(')');
        return node;
    }

    // a '('-span is a tree literal iff it holds nothing but parentheses
    bool paren_span_is_tree() const {
        int depth = 0;
        for (std::size_t i = pos_; i < s_.size(); ++i) {
            if (s_[i] == '(') ++depth;
            else if (s_[i] == ')') {
                if (--depth == 0) return true;
            } else {
                return false;
            }
        }
        return false; // unbalanced; let the grouping path report it
    }

    std::size_t paren_span_end() const {
        int depth = 0;
        for (std::size_t i = pos_; i < s_.size(); ++i) {
            if (s_[i] == '(') ++depth;
            else if (s_[i] == ')' && --depth == 0) return i + 1;
        }
        return std::string_view::npos;
    }

    ExprPtr factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("expected a factor", pos_);
        const char c = s_[pos_];

        if (std::isdigit(static_cast<unsigned char>(c))) return rational();

        if (c == 't' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '"') return quoted_forest();

        if (try_keyword("graft")) return call(Expr::Kind::graft, 2);
        if (try_keyword("bplus")) return call(Expr::Kind::bplus, 1);
        if (try_keyword("antipode")) return call(Expr::Kind::antipode, 1);
        if (try_keyword("coproduct")) return call(Expr::Kind::coproduct, 1);

        if (c == '(') {
            if (paren_span_is_tree()) {
                const std::size_t end = paren_span_end();
                auto node = std::make_unique<Expr>();
                node->kind = Expr::Kind::forest;
                try {
                    node->forest = Forest(Tree::parse(s_.substr(pos_, end - pos_)));
                } catch (const ParseError& e) {
                    throw ParseError(e.message(), pos_ + e.offset());
                }
                pos_ = end;
                return node;
            }
            expect('(');
            ExprPtr e = expr();
            expect(')');
            return e;
        }

        throw ParseError("unexpected character in expression", pos_);
    }

    ExprPtr rational() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string text(s_.substr(start, pos_ - start));
        if (peek_is('/')) {
            ++pos_;
            skip_ws();
            const std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == dstart) throw ParseError("expected denominator digits", pos_);
            text += "/" + std::string(s_.substr(dstart, pos_ - dstart));
        }
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::rational;
        node->value = Rat::parse(text);
        return node;
    }

    ExprPtr quoted_forest() {
        pos_ += 2; // t"
        const std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
        if (pos_ >= s_.size()) throw ParseError("unterminated forest literal", start);
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::forest;
        try {
            node->forest = Forest::parse(s_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), start + e.offset());
        }
        ++pos_; // closing quote
        return node;
    }
};

HElem expect_helem(EvalValue v, const char* what) {
    if (!std::holds_alternative<HElem>(v))
        throw EvalError(std::string("coproduct results cannot feed ") + what);
    return std::get<HElem>(std::move(v));
}

void check_degree(const HElem& x, int bound) {
    if (degree(x) > bound)
        throw BoundError("expression exceeds degree bound " + std::to_string(bound));
}

} // namespace

ExprPtr parse_expr(std::string_view s) {
    return Parser(s).run();
}

EvalValue eval_expr(const Expr& e, int degree_bound) {
    switch (e.kind) {
    case Expr::Kind::rational:
        return HElem::scalar(e.value);
    case Expr::Kind::forest: {
        HElem x = HElem::from(e.forest);
        check_degree(x, degree_bound);
        return x;
    }
    case Expr::Kind::sum:
    case Expr::Kind::diff: {
        HElem a = expect_helem(eval_expr(*e.args[0], degree_bound), "addition");
        HElem b = expect_helem(eval_expr(*e.args[1], degree_bound), "addition");
        return e.kind == Expr::Kind::sum ? a + b : a - b;
    }
    case Expr::Kind::prod: {
        HElem a = expect_helem(eval_expr(*e.args[0], degree_bound), "multiplication");
        HElem b = expect_helem(eval_expr(*e.args[1], degree_bound), "multiplication");
        HElem out = product(a, b);
        check_degree(out, degree_bound);
        return out;
    }
    case Expr::Kind::graft: {
        HElem m = expect_helem(eval_expr(*e.args[0], degree_bound), "graft");
        HElem n = expect_helem(eval_expr(*e.args[1], degree_bound), "graft");
        HElem out = graft_top(m, n);
        check_degree(out, degree_bound);
        return out;
    }
    case Expr::Kind::bplus: {
        HElem f = expect_helem(eval_expr(*e.args[0], degree_bound), "bplus");
        HElem out;
        for (const auto& [forest, c] : f.terms()) out.add_term(Forest(b_plus(forest)), c);
        check_degree(out, degree_bound);
        return out;
    }
    case Expr::Kind::antipode: {
        HElem x = expect_helem(eval_expr(*e.args[0], degree_bound), "antipode");
        return antipode(x);
    }
    case Expr::Kind::coproduct: {
        HElem x = expect_helem(eval_expr(*e.args[0], degree_bound), "coproduct");
        return coproduct(x);
    }
    }
    throw EvalError("unreachable expression kind");
}

std::string render(const EvalValue& v) {
    if (std::holds_alternative<HElem>(v)) return to_string(std::get<HElem>(v));
    return to_string(std::get<TensorElem>(v));
}

} // namespace rthopf
