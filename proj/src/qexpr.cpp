#include "qv0/qexpr.hpp"

#include <array>
#include <cctype>

namespace qv0::qexpr {

namespace {

struct BuiltinInfo {
    const char* name;
    Builtin fn;
    unsigned arity;
};

constexpr std::array<BuiltinInfo, 9> kBuiltins = {{
    {"phi", Builtin::Phi, 1},
    {"psi", Builtin::Psi, 1},
    {"f", Builtin::F, 2},
    {"E", Builtin::E, 1},
    {"poch", Builtin::Poch, 4},
    {"v0", Builtin::V0, 0},
    {"H", Builtin::H, 1},
    {"ext", Builtin::Ext, 3},
    {"sub", Builtin::Sub, 2},
}};

std::shared_ptr<Expr> make(NodeKind kind, std::size_t offset) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->offset = offset;
    return e;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr run() {
        if (text_.empty()) throw ParseError("empty expression", 0);
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos_);
    }

    bool digit_ahead() {
        std::size_t save = pos_;
        bool yes = std::isdigit(static_cast<unsigned char>(peek())) != 0;
        pos_ = save;
        return yes;
    }

    unsigned long long parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        BigInt v = parse_uint_big();
        if (v > std::numeric_limits<unsigned long long>::max() / 2)
            throw ParseError("integer too large", start);
        return v.convert_to<unsigned long long>();
    }

    BigInt parse_uint_big() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected a digit", pos_);
        BigInt v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        (void)start;
        return v;
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            std::size_t at = pos_;
            if (consume('+')) {
                auto e = make(NodeKind::Add, at);
                e->children = {lhs, parse_term()};
                lhs = e;
            } else if (consume('-')) {
                auto e = make(NodeKind::Sub, at);
                e->children = {lhs, parse_term()};
                lhs = e;
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            std::size_t at = pos_;
            if (consume('*')) {
                auto e = make(NodeKind::Mul, at);
                e->children = {lhs, parse_factor()};
                lhs = e;
            } else if (consume('/')) {
                auto e = make(NodeKind::Div, at);
                e->children = {lhs, parse_factor()};
                lhs = e;
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_factor() {
        std::size_t at = pos_;
        if (consume('-')) {
            auto e = make(NodeKind::Neg, at);
            e->children = {parse_factor()};
            return e;
        }
        ExprPtr atom = parse_atom();
        skip_ws();
        if (peek() == '^') {
            std::size_t caret = pos_;
            ++pos_;
            bool negative = consume('-');
            long long mag = static_cast<long long>(parse_uint());
            auto e = make(NodeKind::Pow, caret);
            e->pow_exp = negative ? -mag : mag;
            e->children = {atom};
            return e;
        }
        return atom;
    }

    ExprPtr parse_atom() {
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_expr();
            expect(')', "to close parenthesized expression");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = make(NodeKind::IntLit, at);
            e->value = parse_uint_big();
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = parse_ident();
            if (name == "q") return parse_qpow_tail(at);
            return parse_call(name, at);
        }
        throw ParseError("expected a number, q-power, function call, or '('", pos_);
    }

    // "q" has been consumed; an immediately following "^ uint" belongs to
    // the q-power, while "^ -uint" is left for the factor-level exponent.
    ExprPtr parse_qpow_tail(std::size_t at) {
        auto e = make(NodeKind::QPow, at);
        e->qexp = 1;
        std::size_t save = pos_;
        if (peek() == '^') {
            ++pos_;
            if (digit_ahead())
                e->qexp = parse_uint();
            else
                pos_ = save;
        }
        return e;
    }

    ExprPtr parse_call(const std::string& name, std::size_t at) {
        const BuiltinInfo* info = nullptr;
        for (const auto& b : kBuiltins)
            if (name == b.name) info = &b;
        if (!info) throw ParseError("unknown function name '" + name + "'", at);
        expect('(', "after function name");
        auto e = make(NodeKind::Call, at);
        e->fn = info->fn;
        if (peek() != ')')
            for (;;) {
                e->children.push_back(parse_arg());
                if (!consume(',')) break;
            }
        expect(')', "to close argument list");
        if (e->children.size() != info->arity)
            throw ParseError("function '" + name + "' takes " + std::to_string(info->arity) +
                                 " argument(s), got " + std::to_string(e->children.size()),
                             at);
        return e;
    }

    ExprPtr parse_arg() {
        skip_ws();
        std::size_t at = pos_;
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::size_t save = pos_;
            std::string name = parse_ident();
            if (name == "inf") return make(NodeKind::Inf, at);
            pos_ = save;
        }
        return parse_expr();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int precedence(NodeKind k) {
    switch (k) {
        case NodeKind::Add:
        case NodeKind::Sub:
            return 1;
        case NodeKind::Mul:
        case NodeKind::Div:
            return 2;
        case NodeKind::Neg:
            return 3;
        case NodeKind::Pow:
            return 4;
        default:
            return 5;  // atoms
    }
}

void print_node(const Expr& e, std::string& out);

// Children print parenthesized whenever their top-level binding is looser
// than the context requires (or equal, for the right side of left-
// associative operators).
void print_child(const Expr& c, int min_prec, std::string& out) {
    if (precedence(c.kind) < min_prec) {
        out += '(';
        print_node(c, out);
        out += ')';
    } else {
        print_node(c, out);
    }
}

void print_node(const Expr& e, std::string& out) {
    switch (e.kind) {
        case NodeKind::IntLit:
            out += e.value.str();
            return;
        case NodeKind::QPow:
            out += 'q';
            if (e.qexp != 1) out += "^" + std::to_string(e.qexp);
            return;
        case NodeKind::Inf:
            out += "inf";
            return;
        case NodeKind::Neg:
            out += '-';
            print_child(*e.children[0], precedence(NodeKind::Neg), out);
            return;
        case NodeKind::Add:
        case NodeKind::Sub: {
            print_child(*e.children[0], 1, out);
            out += e.kind == NodeKind::Add ? '+' : '-';
            print_child(*e.children[1], 2, out);
            return;
        }
        case NodeKind::Mul:
        case NodeKind::Div: {
            print_child(*e.children[0], 2, out);
            out += e.kind == NodeKind::Mul ? '*' : '/';
            print_child(*e.children[1], 3, out);
            return;
        }
        case NodeKind::Pow: {
            const Expr& base = *e.children[0];
            // "q^k^e" reparses with the first exponent bound to q, so a
            // q-power base needs its exponent spelled even when it is 1
            if (base.kind == NodeKind::QPow) {
                out += "q^" + std::to_string(base.qexp);
            } else if (base.kind == NodeKind::Pow || precedence(base.kind) < 5) {
                out += '(';
                print_node(base, out);
                out += ')';
            } else {
                print_node(base, out);
            }
            out += '^';
            out += std::to_string(e.pow_exp);
            return;
        }
        case NodeKind::Call: {
            out += builtin_name(e.fn);
            out += '(';
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += ',';
                print_node(*e.children[i], out);
            }
            out += ')';
            return;
        }
    }
}

}  // namespace

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
    switch (a.kind) {
        case NodeKind::IntLit:
            if (a.value != b.value) return false;
            break;
        case NodeKind::QPow:
            if (a.qexp != b.qexp) return false;
            break;
        case NodeKind::Pow:
            if (a.pow_exp != b.pow_exp) return false;
            break;
        case NodeKind::Call:
            if (a.fn != b.fn) return false;
            break;
        default:
            break;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!equal(*a.children[i], *b.children[i])) return false;
    return true;
}

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Expr& e) {
    std::string out;
    print_node(e, out);
    return out;
}

const char* builtin_name(Builtin fn) {
    for (const auto& b : kBuiltins)
        if (b.fn == fn) return b.name;
    return "?";
}

unsigned builtin_arity(Builtin fn) {
    for (const auto& b : kBuiltins)
        if (b.fn == fn) return b.arity;
    return 0;
}

std::vector<std::string> evaluate_to_strings(const Expr& e, const EvalContext& ctx) {
    return dispatch_ring(ctx.ring, [&](auto ring) {
        auto s = evaluate(e, ring, ctx.order);
        std::vector<std::string> out;
        out.reserve(s.order());
        for (const auto& c : s.coeffs()) out.push_back(ring.to_string(c));
        return out;
    });
}

}  // namespace qv0::qexpr
