#include <doctest.h>

#include <random>
#include <string>

#include <fanzoo/dsl.hpp>
#include <fanzoo/errors.hpp>

using namespace fanzoo;
using namespace fanzoo::dsl;

namespace {

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
    const std::uint64_t pick = depth <= 0 ? rng() % 2 : rng() % 7;
    switch (pick) {
        case 0: return nat(rng() % 10);
        case 1: return bit(nat(rng() % 6));
        case 2: return add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 3: return monus(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 4: return mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 5: return max(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        default:
            return if_zero(random_expr(rng, depth - 1), random_expr(rng, depth - 1),
                           random_expr(rng, depth - 1));
    }
}

}  // namespace

TEST_CASE("parser builds the expected trees") {
    CHECK(equal(*parse("f[0] + 1"), *add(bit(nat(0)), nat(1))));
    CHECK(equal(*parse("f[0]+1"), *add(bit(nat(0)), nat(1))));
    CHECK(equal(*parse("2*3+4"), *add(mul(nat(2), nat(3)), nat(4))));
    CHECK(equal(*parse("2+3*4"), *add(nat(2), mul(nat(3), nat(4)))));
    CHECK(equal(*parse("2*(3+4)"), *mul(nat(2), add(nat(3), nat(4)))));
    CHECK(equal(*parse("1 - 2 - 3"), *monus(monus(nat(1), nat(2)), nat(3))));
    CHECK(equal(*parse("if0(f[2], 3, 5)"), *if_zero(bit(nat(2)), nat(3), nat(5))));
    CHECK(equal(*parse("max(f[0], f[f[0]+1])"),
                *max(bit(nat(0)), bit(add(bit(nat(0)), nat(1))))));
    CHECK(!equal(*parse("1+2"), *parse("2+1")));
}

TEST_CASE("printing is canonical and reparses to the same tree") {
    CHECK(print(*parse("f[0]   +   1")) == "f[0] + 1");
    CHECK(print(*parse("2+3*4")) == "2 + 3 * 4");
    CHECK(print(*parse("2*(3+4)")) == "2 * (3 + 4)");
    CHECK(print(*parse("(1-2)-3")) == "1 - 2 - 3");
    CHECK(print(*parse("1-(2-3)")) == "1 - (2 - 3)");
    CHECK(print(*parse("if0( f[2] ,3,5 )")) == "if0(f[2], 3, 5)");

    std::mt19937_64 rng(71);
    for (int round = 0; round < 500; ++round) {
        const ExprPtr e = random_expr(rng, 4);
        const std::string s = print(*e);
        const ExprPtr back = parse(s);
        CHECK(equal(*e, *back));
        CHECK(print(*back) == s);
    }
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_WITH_AS(parse("f["), doctest::Contains("1:3"), fanzoo::usage_error);
    CHECK_THROWS_WITH_AS(parse("2 +"), doctest::Contains("1:4"), fanzoo::usage_error);
    CHECK_THROWS_WITH_AS(parse("foo(1)"), doctest::Contains("unknown name"), fanzoo::usage_error);
    CHECK_THROWS_WITH_AS(parse("f[0] +\n@"), doctest::Contains("2:1"), fanzoo::usage_error);
    CHECK_THROWS_AS(parse(""), fanzoo::usage_error);
    CHECK_THROWS_AS(parse("1 2"), fanzoo::usage_error);       // trailing input
    CHECK_THROWS_AS(parse("max(1)"), fanzoo::usage_error);    // missing argument
    CHECK_THROWS_AS(parse("18446744073709551616"), fanzoo::usage_error);  // > 64 bits

    std::string deep;
    for (int i = 0; i < 5000; ++i) deep += "(";
    CHECK_THROWS_AS(parse(deep + "1" + std::string(5000, ')')), fanzoo::usage_error);
}

TEST_CASE("evaluation semantics") {
    const BitSeq f = BitSeq::eventually(Stem::from_string("1011"), 0);
    CHECK(compile(parse("7"))(f) == 7);
    CHECK(compile(parse("f[0] + 1"))(f) == 2);
    CHECK(compile(parse("f[1]*2 + f[0]"))(f) == 1);
    CHECK(compile(parse("f[2]*2 + f[0]"))(f) == 3);
    CHECK(compile(parse("max(2, 3)"))(f) == 3);
    CHECK(compile(parse("max(f[1], f[2])"))(f) == 1);
    CHECK(compile(parse("2 - 5"))(f) == 0);   // truncated subtraction
    CHECK(compile(parse("5 - 2"))(f) == 3);
    CHECK(compile(parse("1 - f[3]"))(f) == 0);
    CHECK(compile(parse("if0(f[1], 10, 20)"))(f) == 10);
    CHECK(compile(parse("if0(f[0], 10, 20)"))(f) == 20);
}

TEST_CASE("if0 only reads the taken branch") {
    const Functional2 y = compile(parse("if0(f[2], f[0], f[5]+1)"));
    auto then_side = eval_traced(y, BitSeq::zeros());
    CHECK(then_side.value == 0);
    CHECK(then_side.inspected == std::set<std::uint64_t>{0, 2});

    auto else_side = eval_traced(y, BitSeq::eventually(Stem::from_string("001"), 0));
    CHECK(else_side.value == 1);
    CHECK(else_side.inspected == std::set<std::uint64_t>{2, 5});
}

TEST_CASE("arithmetic overflow is a resource limit") {
    const BitSeq f = BitSeq::zeros();
    CHECK_THROWS_AS(compile(parse("4294967296 * 4294967296"))(f), fanzoo::resource_limit_error);
    CHECK_THROWS_AS(compile(parse("18446744073709551615 + 1"))(f), fanzoo::resource_limit_error);
    CHECK(compile(parse("18446744073709551615 - 1"))(f) == 18446744073709551614ull);
}

TEST_CASE("compiled functionals carry their rendering as a name") {
    const Functional2 y = compile(parse("f[0]+1"));
    CHECK(y.name() == "dsl(f[0] + 1)");
}
