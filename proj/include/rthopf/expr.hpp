#pragma once

/*
 * expr.hpp
 * --------
 * The CLI expression language.
 *
 *   expr   := term (("+"|"-") term)*
 *   term   := factor ("*" factor)*
 *   factor := rational | tree | graft(e, e) | bplus(e) | antipode(e)
 *           | coproduct(e) | "(" expr ")"
 *
 * Tree literals come in two forms: a bare parenthesized span consisting
 * only of parentheses ("(())"), and a quoted forest literal t"().()" or
 * t"1" for anything the bare form cannot say.  A parenthesized span that
 * contains any other character is ordinary grouping.
 *
 * Evaluation is exact; coproduct results are terminal values that cannot
 * feed further operators.  Every intermediate value is degree-checked
 * against the configured bound.
 */

#include "rthopf/errors.hpp"
#include "rthopf/hopf.hpp"

#include <memory>
#include <string_view>
#include <variant>
#include <vector>

namespace rthopf {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { rational, forest, sum, diff, prod, graft, bplus, antipode, coproduct };

    Kind kind;
    Rat value;     // Kind::rational
    Forest forest; // Kind::forest
    std::vector<ExprPtr> args;
};

ExprPtr parse_expr(std::string_view s);

using EvalValue = std::variant<HElem, TensorElem>;

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

EvalValue eval_expr(const Expr& e, int degree_bound = 8);

std::string render(const EvalValue& v);

} // namespace rthopf
