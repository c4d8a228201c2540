#include "funcwalk/expr.hpp"

#include <cctype>
#include <limits>
#include <utility>
#include <vector>

namespace funcwalk {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
      message_(message),
      offset_(offset) {}

SingularEvaluation::SingularEvaluation(const Int& at)
    : std::runtime_error("singular evaluation: division by zero at n = " + at.str()),
      at_(at) {}

struct ExprAst::Node {
    ExprKind kind;
    Int value;  // Constant: the constant; Power: the exponent
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

ExprAst::ExprAst(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ExprAst ExprAst::constant(Int value) {
    return ExprAst(std::make_shared<Node>(Node{ExprKind::Constant, std::move(value), nullptr, nullptr}));
}

ExprAst ExprAst::variable() {
    return ExprAst(std::make_shared<Node>(Node{ExprKind::Variable, 0, nullptr, nullptr}));
}

ExprAst ExprAst::add(ExprAst lhs, ExprAst rhs) {
    return ExprAst(std::make_shared<Node>(Node{ExprKind::Add, 0, std::move(lhs.node_), std::move(rhs.node_)}));
}

ExprAst ExprAst::subtract(ExprAst lhs, ExprAst rhs) {
    return ExprAst(std::make_shared<Node>(Node{ExprKind::Subtract, 0, std::move(lhs.node_), std::move(rhs.node_)}));
}

ExprAst ExprAst::multiply(ExprAst lhs, ExprAst rhs) {
    return ExprAst(std::make_shared<Node>(Node{ExprKind::Multiply, 0, std::move(lhs.node_), std::move(rhs.node_)}));
}

ExprAst ExprAst::divide(ExprAst lhs, ExprAst rhs) {
    return ExprAst(std::make_shared<Node>(Node{ExprKind::Divide, 0, std::move(lhs.node_), std::move(rhs.node_)}));
}

ExprAst ExprAst::power(ExprAst base, Int exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("power exponent must be a nonnegative integer");
    }
    return ExprAst(std::make_shared<Node>(Node{ExprKind::Power, std::move(exponent), std::move(base.node_), nullptr}));
}

ExprKind ExprAst::kind() const { return node_->kind; }

const Int& ExprAst::constant_value() const {
    if (node_->kind != ExprKind::Constant) {
        throw std::logic_error("constant_value on non-constant node");
    }
    return node_->value;
}

const Int& ExprAst::exponent() const {
    if (node_->kind != ExprKind::Power) {
        throw std::logic_error("exponent on non-power node");
    }
    return node_->value;
}

ExprAst ExprAst::lhs() const {
    if (!node_->lhs) {
        throw std::logic_error("node has no children");
    }
    return ExprAst(node_->lhs);
}

ExprAst ExprAst::rhs() const {
    if (!node_->rhs) {
        throw std::logic_error("node has no right child");
    }
    return ExprAst(node_->rhs);
}

bool ExprAst::integer_class() const {
    switch (node_->kind) {
        case ExprKind::Constant:
        case ExprKind::Variable:
            return true;
        case ExprKind::Divide:
            return false;
        case ExprKind::Power:
            return lhs().integer_class();
        default:
            return lhs().integer_class() && rhs().integer_class();
    }
}

namespace {

unsigned checked_exponent(const Int& e) {
    if (e > std::numeric_limits<unsigned>::max()) {
        throw std::overflow_error("power exponent too large to evaluate");
    }
    return e.convert_to<unsigned>();
}

}  // namespace

Int ExprAst::eval_int(const Int& n) const {
    switch (node_->kind) {
        case ExprKind::Constant:
            return node_->value;
        case ExprKind::Variable:
            return n;
        case ExprKind::Add:
            return lhs().eval_int(n) + rhs().eval_int(n);
        case ExprKind::Subtract:
            return lhs().eval_int(n) - rhs().eval_int(n);
        case ExprKind::Multiply:
            return lhs().eval_int(n) * rhs().eval_int(n);
        case ExprKind::Divide:
            throw std::logic_error("eval_int on an expression containing division");
        case ExprKind::Power:
            return boost::multiprecision::pow(lhs().eval_int(n), checked_exponent(node_->value));
    }
    throw std::logic_error("unreachable");
}

Rational ExprAst::eval_rat(const Int& n) const {
    switch (node_->kind) {
        case ExprKind::Constant:
            return Rational(node_->value);
        case ExprKind::Variable:
            return Rational(n);
        case ExprKind::Add:
            return lhs().eval_rat(n) + rhs().eval_rat(n);
        case ExprKind::Subtract:
            return lhs().eval_rat(n) - rhs().eval_rat(n);
        case ExprKind::Multiply:
            return lhs().eval_rat(n) * rhs().eval_rat(n);
        case ExprKind::Divide: {
            Rational denominator = rhs().eval_rat(n);
            if (denominator == 0) {
                throw SingularEvaluation(n);
            }
            return lhs().eval_rat(n) / denominator;
        }
        case ExprKind::Power: {
            const unsigned e = checked_exponent(node_->value);
            const Rational base = lhs().eval_rat(n);
            const Int num = boost::multiprecision::pow(boost::multiprecision::numerator(base), e);
            const Int den = boost::multiprecision::pow(boost::multiprecision::denominator(base), e);
            return Rational(num, den);
        }
    }
    throw std::logic_error("unreachable");
}

bool ExprAst::structural_equal(const ExprAst& other) const {
    if (node_ == other.node_) {
        return true;
    }
    if (node_->kind != other.node_->kind || node_->value != other.node_->value) {
        return false;
    }
    if (static_cast<bool>(node_->lhs) != static_cast<bool>(other.node_->lhs) ||
        static_cast<bool>(node_->rhs) != static_cast<bool>(other.node_->rhs)) {
        return false;
    }
    if (node_->lhs && !lhs().structural_equal(other.lhs())) {
        return false;
    }
    if (node_->rhs && !rhs().structural_equal(other.rhs())) {
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// printing

namespace {

// precedence levels: 1 add/sub, 2 mul/div (and unary minus), 3 power, 4 atom
int print_level(const ExprAst& e) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return e.constant_value() < 0 ? 2 : 4;
        case ExprKind::Variable:
            return 4;
        case ExprKind::Add:
        case ExprKind::Subtract:
            return 1;
        case ExprKind::Multiply:
        case ExprKind::Divide:
            return 2;
        case ExprKind::Power:
            return 3;
    }
    return 4;
}

// Printed with a leading '-' only when reparsing recovers the same tree:
// the parser folds a negated constant literal into the constant itself.
bool is_unary_minus(const ExprAst& e) {
    return (e.kind() == ExprKind::Subtract && e.lhs().kind() == ExprKind::Constant &&
            e.lhs().constant_value() == 0 && e.rhs().kind() != ExprKind::Constant) ||
           (e.kind() == ExprKind::Constant && e.constant_value() < 0);
}

void print_into(const ExprAst& e, int min_level, std::string& out) {
    const int level = print_level(e);
    const bool parens = level < min_level;
    if (parens) {
        out += '(';
    }
    switch (e.kind()) {
        case ExprKind::Constant:
            out += e.constant_value().str();
            break;
        case ExprKind::Variable:
            out += 'n';
            break;
        case ExprKind::Add:
            print_into(e.lhs(), 1, out);
            out += '+';
            print_into(e.rhs(), is_unary_minus(e.rhs()) ? 4 : 2, out);
            break;
        case ExprKind::Subtract:
            if (is_unary_minus(e)) {
                out += '-';
                print_into(e.rhs(), 3, out);
                break;
            }
            print_into(e.lhs(), 1, out);
            out += '-';
            print_into(e.rhs(), is_unary_minus(e.rhs()) ? 4 : 2, out);
            break;
        case ExprKind::Multiply:
            print_into(e.lhs(), 2, out);
            out += '*';
            print_into(e.rhs(), is_unary_minus(e.rhs()) ? 4 : 3, out);
            break;
        case ExprKind::Divide:
            print_into(e.lhs(), 2, out);
            out += '/';
            print_into(e.rhs(), is_unary_minus(e.rhs()) ? 4 : 3, out);
            break;
        case ExprKind::Power:
            print_into(e.lhs(), 4, out);
            out += '^';
            out += e.exponent().str();
            break;
    }
    if (parens) {
        out += ')';
    }
}

}  // namespace

std::string ExprAst::to_string() const {
    std::string out;
    print_into(*this, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, char variable) : text_(text), variable_(variable) {}

    ExprAst parse() {
        if (text_.empty()) {
            throw ParseError("empty expression", 0);
        }
        ExprAst e = parse_expr_rule();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input", pos_);
        }
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Int parse_uint(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError(std::string("expected ") + what, start);
        }
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    ExprAst parse_expr_rule() {
        ExprAst e = parse_term();
        while (true) {
            if (accept('+')) {
                e = ExprAst::add(std::move(e), parse_term());
            } else if (accept('-')) {
                e = ExprAst::subtract(std::move(e), parse_term());
            } else {
                return e;
            }
        }
    }

    ExprAst parse_term() {
        ExprAst e = parse_factor();
        while (true) {
            if (accept('*')) {
                e = ExprAst::multiply(std::move(e), parse_factor());
            } else if (accept('/')) {
                e = ExprAst::divide(std::move(e), parse_factor());
            } else {
                return e;
            }
        }
    }

    // '^' binds tighter than unary minus: -n^2 parses as -(n^2)
    ExprAst parse_factor() {
        if (accept('-')) {
            ExprAst inner = parse_factor();
            if (inner.kind() == ExprKind::Constant) {
                return ExprAst::constant(-inner.constant_value());
            }
            return ExprAst::subtract(ExprAst::constant(0), std::move(inner));
        }
        ExprAst base = parse_atom();
        if (accept('^')) {
            return ExprAst::power(std::move(base), parse_uint("nonnegative integer exponent"));
        }
        return base;
    }

    ExprAst parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
            throw ParseError("unexpected end of expression", pos_);
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprAst e = parse_expr_rule();
            if (!accept(')')) {
                throw ParseError("expected ')'", pos_);
            }
            return e;
        }
        if (c == variable_) {
            ++pos_;
            return ExprAst::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return ExprAst::constant(parse_uint("integer"));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    char variable_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprAst parse_expr(std::string_view text, char variable) {
    return Parser(text, variable).parse();
}

// ---------------------------------------------------------------------------
// periodicity and identity

namespace {

std::vector<unsigned> sorted_divisors(unsigned m) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

}  // namespace

unsigned residue_period(const ExprAst& f, unsigned m) {
    if (m == 0) {
        throw std::domain_error("residue_period: m must be positive");
    }
    if (!f.integer_class()) {
        throw std::invalid_argument("residue_period: f must be integer-class");
    }
    for (unsigned period : sorted_divisors(m)) {
        bool ok = true;
        for (unsigned n = 0; n < m && ok; ++n) {
            ok = euclid_mod(f.eval_int(Int(n) + period), m) == euclid_mod(f.eval_int(n), m);
        }
        if (ok) {
            return period;
        }
    }
    throw std::logic_error("residue_period: no period found (f(n+m) = f(n) mod m must hold)");
}

bool exprs_identical(const ExprAst& a, const ExprAst& b, int probes) {
    if (probes < 1) {
        throw std::invalid_argument("exprs_identical: probes must be >= 1");
    }
    for (int n = 1; n <= probes; ++n) {
        Rational va;
        Rational vb;
        try {
            va = a.eval_rat(n);
            vb = b.eval_rat(n);
        } catch (const SingularEvaluation&) {
            continue;
        }
        if (va != vb) {
            return false;
        }
    }
    return true;
}

ExprAst shift_variable(const ExprAst& e, const Int& offset) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return e;
        case ExprKind::Variable:
            return offset == 0 ? e : ExprAst::add(ExprAst::variable(), ExprAst::constant(offset));
        case ExprKind::Add:
            return ExprAst::add(shift_variable(e.lhs(), offset), shift_variable(e.rhs(), offset));
        case ExprKind::Subtract:
            return ExprAst::subtract(shift_variable(e.lhs(), offset), shift_variable(e.rhs(), offset));
        case ExprKind::Multiply:
            return ExprAst::multiply(shift_variable(e.lhs(), offset), shift_variable(e.rhs(), offset));
        case ExprKind::Divide:
            return ExprAst::divide(shift_variable(e.lhs(), offset), shift_variable(e.rhs(), offset));
        case ExprKind::Power:
            return ExprAst::power(shift_variable(e.lhs(), offset), e.exponent());
    }
    throw std::logic_error("unreachable");
}

namespace {

struct DegreePair {
    long num;
    long den;
};

long checked_mul(long a, long b) {
    constexpr long cap = 1L << 40;
    if (a > 0 && b > 0 && (a > cap / b)) {
        throw std::overflow_error("degree bound overflow");
    }
    return a * b;
}

DegreePair degree_pair(const ExprAst& e) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return {0, 0};
        case ExprKind::Variable:
            return {1, 0};
        case ExprKind::Add:
        case ExprKind::Subtract: {
            DegreePair a = degree_pair(e.lhs());
            DegreePair b = degree_pair(e.rhs());
            return {std::max(a.num + b.den, b.num + a.den), a.den + b.den};
        }
        case ExprKind::Multiply: {
            DegreePair a = degree_pair(e.lhs());
            DegreePair b = degree_pair(e.rhs());
            return {a.num + b.num, a.den + b.den};
        }
        case ExprKind::Divide: {
            DegreePair a = degree_pair(e.lhs());
            DegreePair b = degree_pair(e.rhs());
            return {a.num + b.den, a.den + b.num};
        }
        case ExprKind::Power: {
            DegreePair a = degree_pair(e.lhs());
            const long k = e.exponent() > (1L << 30) ? (1L << 30) : e.exponent().convert_to<long>();
            return {checked_mul(a.num, k), checked_mul(a.den, k)};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

long degree_bound(const ExprAst& e) {
    DegreePair p = degree_pair(e);
    return p.num + p.den;
}

}  // namespace funcwalk
