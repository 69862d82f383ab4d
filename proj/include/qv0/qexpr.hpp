#pragma once

// A small expression language for q-series, so identities can be stated as
// text on the command line and in tests.  Grammar (whitespace-insensitive,
// ASCII):
//
//   expr   := term (("+"|"-") term)* ;
//   term   := factor (("*"|"/") factor)* ;
//   factor := ("-" factor) | atom ("^" sint)? ;
//   atom   := uint | qpow | call | "(" expr ")" ;
//   qpow   := "q" ("^" uint)? ;
//   call   := name "(" (arg ("," arg)*)? ")" ;
//   arg    := expr | monomial | "inf" ;
//   monomial := ("-")? "q" ("^" uint)? ;
//   name   := "phi"|"psi"|"f"|"E"|"poch"|"v0"|"H"|"ext"|"sub" ;
//   sint   := ("-")? uint ;  uint := digit+ ;
//
// Builtins: phi(+-q^k), psi(q^k), f(m1, m2) for monomials m1, m2, E(k) for
// (q^k;q^k)_inf, poch(sign, r, step, n|inf) for (sign*q^r; q^step)_n, v0()
// for the counting series, H(e) for the Huffing operator, ext(e, p, r) for
// compressed extraction of exponents p*n+r, and sub(e, k) for q -> q^k.
//
// Monomial arguments parse as ordinary expressions of the shape +-q^k; their
// shape is enforced when the builtin is evaluated.  Arity and function names
// are checked at parse time.

#include "qv0/dissect.hpp"
#include "qv0/rings.hpp"
#include "qv0/series.hpp"
#include "qv0/theta.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qv0::qexpr {

enum class NodeKind { IntLit, QPow, Inf, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class Builtin { Phi, Psi, F, E, Poch, V0, H, Ext, Sub };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    NodeKind kind;
    std::size_t offset = 0;          // byte offset in the source text
    BigInt value;                    // IntLit
    unsigned long long qexp = 0;     // QPow
    long long pow_exp = 0;           // Pow
    Builtin fn = Builtin::V0;        // Call
    std::vector<ExprPtr> children;   // operands or call arguments
};

// Structural equality; source offsets are ignored.
bool equal(const Expr& a, const Expr& b);

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t at)
        : std::runtime_error(message + " (byte " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

ExprPtr parse(std::string_view text);

// Canonical text form; parse(print(e)) reproduces e node for node.
std::string print(const Expr& e);

const char* builtin_name(Builtin fn);
unsigned builtin_arity(Builtin fn);

struct EvalContext {
    RingTag ring = RingTag::exact();
    std::size_t order = 1;
};

namespace detail {

// +-q^k with k >= 1, the only shapes theta builtins accept.
inline theta::Monomial monomial_arg(const Expr& e, const char* fn) {
    const Expr* node = &e;
    int sign = 1;
    if (node->kind == NodeKind::Neg) {
        sign = -1;
        node = node->children[0].get();
    }
    if (node->kind != NodeKind::QPow || node->qexp == 0)
        throw std::domain_error(std::string(fn) +
                                " expects a monomial argument of the form +-q^k with k >= 1");
    return theta::Monomial{sign, node->qexp};
}

inline BigInt const_int_arg(const Expr& e, const char* fn) {
    if (e.kind == NodeKind::IntLit) return e.value;
    if (e.kind == NodeKind::Neg && e.children[0]->kind == NodeKind::IntLit)
        return -e.children[0]->value;
    throw std::domain_error(std::string(fn) + " expects an integer literal argument");
}

inline unsigned long long const_uint_arg(const Expr& e, const char* fn, bool positive) {
    BigInt v = const_int_arg(e, fn);
    if (v < 0 || (positive && v == 0))
        throw std::domain_error(std::string(fn) + " argument out of range: " + v.str());
    return v.convert_to<unsigned long long>();
}

}  // namespace detail

template <class R>
Series<R> evaluate(const Expr& e, const R& r, std::size_t order) {
    auto child = [&](std::size_t i) { return evaluate(*e.children[i], r, order); };
    switch (e.kind) {
        case NodeKind::IntLit:
            return Series<R>::constant(r, r.from_bigint(e.value), order);
        case NodeKind::QPow:
            return Series<R>::monomial(r, static_cast<std::size_t>(e.qexp), order);
        case NodeKind::Inf:
            throw std::domain_error("'inf' is only meaningful as a pochhammer length");
        case NodeKind::Neg:
            return neg(child(0));
        case NodeKind::Add:
            return add(child(0), child(1));
        case NodeKind::Sub:
            return sub(child(0), child(1));
        case NodeKind::Mul:
            return mul(child(0), child(1));
        case NodeKind::Div:
            return mul(child(0), invert(child(1)));
        case NodeKind::Pow:
            return pow(child(0), e.pow_exp);
        case NodeKind::Call:
            break;
    }
    switch (e.fn) {
        case Builtin::Phi: {
            theta::Monomial m = detail::monomial_arg(*e.children[0], "phi");
            return theta::phi(r, m.sign, m.exponent, order);
        }
        case Builtin::Psi: {
            theta::Monomial m = detail::monomial_arg(*e.children[0], "psi");
            if (m.sign != 1) throw std::domain_error("psi expects a positive monomial q^k");
            return theta::psi(r, m.exponent, order);
        }
        case Builtin::F:
            return theta::f(r, detail::monomial_arg(*e.children[0], "f"),
                            detail::monomial_arg(*e.children[1], "f"), order);
        case Builtin::E:
            return theta::euler(r, detail::const_uint_arg(*e.children[0], "E", true), order);
        case Builtin::Poch: {
            BigInt sign = detail::const_int_arg(*e.children[0], "poch");
            if (sign != 1 && sign != -1)
                throw std::domain_error("poch sign argument must be 1 or -1");
            unsigned long long first = detail::const_uint_arg(*e.children[1], "poch", true);
            unsigned long long step = detail::const_uint_arg(*e.children[2], "poch", true);
            std::optional<unsigned long long> n;
            if (e.children[3]->kind != NodeKind::Inf)
                n = detail::const_uint_arg(*e.children[3], "poch", false);
            return theta::pochhammer(r, sign.convert_to<int>(), first, step, n, order);
        }
        case Builtin::V0:
            return theta::v0(r, order);
        case Builtin::H:
            return dissect::huffing(child(0));
        case Builtin::Ext: {
            auto p = detail::const_uint_arg(*e.children[1], "ext", true);
            auto res = detail::const_uint_arg(*e.children[2], "ext", false);
            return dissect::extract(child(0), dissect::Progression{static_cast<std::size_t>(p),
                                                                   static_cast<std::size_t>(res)});
        }
        case Builtin::Sub:
            return substitute_power(child(0),
                                    static_cast<std::size_t>(
                                        detail::const_uint_arg(*e.children[1], "sub", true)));
    }
    throw std::logic_error("unreachable builtin");
}

// Runtime-ring evaluation for the CLI: coefficients rendered as decimal
// strings (dyadic values as num/2^e).
std::vector<std::string> evaluate_to_strings(const Expr& e, const EvalContext& ctx);

}  // namespace qv0::qexpr
