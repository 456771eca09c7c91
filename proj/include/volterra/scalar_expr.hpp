#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace volterra {

struct ScalarExprNode;

// Closed-form function of one variable `x`: numeric literals, '+', '-', '*',
// '/', '^' with integer exponents, sin/cos/exp, parentheses, unary minus.
class ScalarExpr {
public:
    static ScalarExpr parse(std::string_view src);

    double operator()(double x) const;

    const std::string& source() const noexcept { return source_; }

private:
    ScalarExpr(std::shared_ptr<const ScalarExprNode> root, std::string source)
        : root_(std::move(root)), source_(std::move(source)) {}

    std::shared_ptr<const ScalarExprNode> root_;
    std::string source_;
};

} // namespace volterra
