#include "qv0/qexpr.hpp"

#include <doctest.h>

#include <random>

using namespace qv0;
using namespace qv0::qexpr;

namespace {

std::vector<long long> eval_ints(const std::string& text, std::size_t order) {
    auto ast = parse(text);
    ZRing z;
    auto s = evaluate(*ast, z, order);
    std::vector<long long> out;
    for (std::size_t i = 0; i < order && i < s.order(); ++i)
        out.push_back(s.coefficient(i).convert_to<long long>());
    return out;
}

// random grammar-reachable expression text for the round-trip property
std::string random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 9);
    switch (pick(rng)) {
        case 0: return std::to_string(rng() % 100);
        case 1: return "q";
        case 2: return "q^" + std::to_string(rng() % 7);
        case 3: {
            const char* leaves[] = {"psi(q)",      "phi(-q)",        "f(q,q^2)",
                                    "E(2)",        "poch(-1,2,4,inf)", "v0()",
                                    "f(-q^3,-q^15)"};
            return leaves[rng() % 7];
        }
        case 4: return random_expr(rng, depth - 1) + "+" + random_expr(rng, depth - 1);
        case 5: return random_expr(rng, depth - 1) + "-" + random_expr(rng, depth - 1);
        case 6: return random_expr(rng, depth - 1) + "*" + random_expr(rng, depth - 1);
        case 7: return "(" + random_expr(rng, depth - 1) + ")^" + std::to_string(2 + rng() % 3);
        case 8: return "-" + random_expr(rng, depth - 1);
        default: return "H(" + random_expr(rng, depth - 1) + ")";
    }
}

}  // namespace

TEST_CASE("parser produces the expected shapes") {
    auto e = parse("phi(-q)^2/phi(q^2)^2");
    REQUIRE(e->kind == NodeKind::Div);
    REQUIRE(e->children[0]->kind == NodeKind::Pow);
    const Expr& call = *e->children[0]->children[0];
    REQUIRE(call.kind == NodeKind::Call);
    CHECK(call.fn == Builtin::Phi);
    REQUIRE(call.children[0]->kind == NodeKind::Neg);
    CHECK(call.children[0]->children[0]->kind == NodeKind::QPow);

    CHECK_NOTHROW(parse("3*psi(q) + 512*q^1*psi(q)^9/phi(-q)^8"));
    CHECK_NOTHROW(parse("ext(v0(), 4, 0)"));
    CHECK_NOTHROW(parse("sub(psi(q), 4)"));
}

TEST_CASE("arity and name errors carry byte offsets") {
    CHECK_THROWS_AS(parse("phi(q,q)"), ParseError);
    CHECK_THROWS_AS(parse("zeta(q)"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    try {
        parse("1 + omega(q)");
    } catch (const ParseError& err) {
        CHECK(err.offset == 4);
    }
    try {
        parse("1 + (2*q");
    } catch (const ParseError& err) {
        CHECK(err.offset == 8);
    }
}

TEST_CASE("exponent binds tighter than product") {
    CHECK(eval_ints("1+2*q^1^2", 4) == std::vector<long long>{1, 0, 2, 0});
    CHECK(eval_ints("q^2^3", 8) == std::vector<long long>{0, 0, 0, 0, 0, 0, 1, 0});
}

TEST_CASE("print-parse round trip on a corpus") {
    std::vector<std::string> corpus = {
        "phi(-q)^2/phi(q^2)^2",
        "3*psi(q)+512*q^1*psi(q)^9/phi(-q)^8",
        "E(1)",
        "v0()",
        "H(1-2*q^1*psi(q^8)/phi(q^4))",
        "ext(v0(),4,0)",
        "sub(psi(q),4)",
        "poch(-1,2,4,inf)",
        "poch(1,1,2,5)",
        "f(q,q^2)",
        "f(-q^3,-q^15)",
        "1+2*q^1^2",
        "q",
        "-q",
        "2^-1",
        "1-2-3",
        "8/4/2",
        "2*(3+q)",
        "-(q+1)*4",
        "(q^2)^3",
    };
    std::mt19937 rng(20250809);
    while (corpus.size() < 50) corpus.push_back(random_expr(rng, 3));

    for (const auto& text : corpus) {
        CAPTURE(text);
        auto a = parse(text);
        std::string printed = print(*a);
        auto b = parse(printed);
        CHECK(equal(*a, *b));
        CHECK(print(*b) == printed);  // printing is a fixpoint
    }
}

TEST_CASE("evaluation of builtins") {
    CHECK(eval_ints("E(1)", 8) == std::vector<long long>{1, -1, -1, 0, 0, 1, 0, 1});
    CHECK(eval_ints("psi(q)", 8) == std::vector<long long>{1, 1, 0, 1, 0, 0, 1, 0});
    CHECK(eval_ints("v0()", 6) == std::vector<long long>{1, 1, 2, 2, 3, 4});
    CHECK(eval_ints("ext(1+2*q+3*q^2+4*q^3,2,1)", 2) == std::vector<long long>{2, 4});
    CHECK(eval_ints("H(1+q+q^2+q^3)", 4) == std::vector<long long>{1, 0, 1, 0});
    CHECK(eval_ints("poch(-1,1,2,2)", 6) == std::vector<long long>{1, 1, 0, 1, 1, 0});

    ZRing z;
    auto zero = evaluate(*parse("phi(q)*phi(-q) - phi(-q^2)^2"), z, 500);
    CHECK(is_zero_to_order(zero, 500));
    auto one = evaluate(*parse("H(1-2*q^1*psi(q^8)/phi(q^4))"), z, 400);
    CHECK(equal_to_order(one, Series<ZRing>::one(z, 400), 400));
}

TEST_CASE("evaluation errors") {
    ZRing z;
    CHECK_THROWS_AS(evaluate(*parse("1/2"), z, 4), std::domain_error);
    CHECK_THROWS_AS(evaluate(*parse("q^-2"), z, 4), std::domain_error);
    CHECK_THROWS_AS(evaluate(*parse("psi(-q)"), z, 4), std::domain_error);
    CHECK_THROWS_AS(evaluate(*parse("phi(2)"), z, 4), std::domain_error);
    CHECK_THROWS_AS(evaluate(*parse("f(q,q+1)"), z, 4), std::domain_error);
    CHECK_THROWS_AS(evaluate(*parse("poch(3,1,2,inf)"), z, 4), std::domain_error);
}

TEST_CASE("evaluation commutes with reduction for division-free expressions") {
    std::vector<std::string> corpus = {
        "3*psi(q)+512*q^1*psi(q)^9",
        "phi(q)*phi(-q)-phi(-q^2)^2",
        "E(2)^3*f(q,q^2)",
        "H(v0())+sub(psi(q),3)",
        "psi(q)^9/phi(-q)^8",  // division by a unit-constant series is fine
    };
    for (const auto& text : corpus) {
        CAPTURE(text);
        auto ast = parse(text);
        ZRing z;
        ModRing m(27);
        auto exact = evaluate(*ast, z, 60);
        auto modular = evaluate(*ast, m, 60);
        CHECK(equal_to_order(reduce_mod(exact, m), modular, 60));
    }
}

TEST_CASE("runtime ring dispatch renders decimal strings") {
    EvalContext ctx;
    ctx.order = 6;
    auto ast = parse("v0()");
    CHECK(evaluate_to_strings(*ast, ctx) ==
          std::vector<std::string>{"1", "1", "2", "2", "3", "4"});
    ctx.ring = RingTag::modular(BigInt(3));
    CHECK(evaluate_to_strings(*ast, ctx) ==
          std::vector<std::string>{"1", "1", "2", "2", "0", "1"});
}
