#include <doctest.h>

#include <random>

#include "klr/expr.hpp"

using namespace klr;

namespace {

ContextPtr ctx_a1()
{
    CartanDatum d = CartanDatum::validate({"1"}, {{2}});
    return make_context(d, validate_params(d, {}, {}, {}));
}

ContextPtr ctx_a2()
{
    CartanDatum d = CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}});
    return make_context(d, validate_params(d, {}, {}, {}));
}

EvalContext plain(const ContextPtr& c) { return EvalContext{c, nullptr}; }

} // namespace

TEST_CASE("parsing")
{
    const ExprAst a = parse_expr("psi1 * x1 * e(1,1)");
    REQUIRE(a.terms.size() == 1);
    CHECK(a.terms[0].factors.size() == 3);
    CHECK(a.terms[0].factors[0].kind == Atom::Kind::Psi);
    CHECK(a.terms[0].factors[2].kind == Atom::Kind::Idem);

    const ExprAst b = parse_expr("x1^3 * e(1) + 2/3 * e(1)");
    REQUIRE(b.terms.size() == 2);
    CHECK(b.terms[0].factors[0].power == 3);
    CHECK(b.terms[1].factors[0].kind == Atom::Kind::Rational);
    CHECK(b.terms[1].factors[0].value == Rat(2, 3));

    const ExprAst c = parse_expr("Psi1 * E[1,1,1] * e(L1,1)");
    CHECK(c.terms[0].factors[0].kind == Atom::Kind::ThickPsi);
    CHECK(c.terms[0].factors[1].kind == Atom::Kind::ESym);
    CHECK(c.terms[0].factors[2].labels == std::vector<std::string>{"L1", "1"});

    CHECK_THROWS_AS((void)parse_expr("psi * e(1)"), parse_error);
    CHECK_THROWS_AS((void)parse_expr("x1 * (e(1)"), parse_error);
    CHECK_THROWS_AS((void)parse_expr("foo1 * e(1)"), error);
    try {
        (void)parse_expr("x1 * ");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.offset() == 5);
    }
}

TEST_CASE("evaluation")
{
    auto a1 = ctx_a1();
    CHECK(evaluate(parse_expr("psi1*psi1*e(1,1)"), plain(a1)).value.is_zero());
    CHECK(evaluate(parse_expr("x1*psi1*e(1,1) - psi1*x2*e(1,1)"), plain(a1)).value
          == idempotent(a1, {0, 0}));

    auto a2 = ctx_a2();
    CHECK(evaluate(parse_expr("e(1,2)*e(2,1)"), plain(a2)).value.is_zero());
    CHECK(evaluate(parse_expr("(e(1,2) + e(2,1)) * e(2,1)"), plain(a2)).value
          == idempotent(a2, {1, 0}));
    CHECK(evaluate(parse_expr("2/3*e(1) + 1/3*e(1)"), plain(a2)).value
          == idempotent(a2, {0}));
    // powers
    CHECK(evaluate(parse_expr("psi1^2*e(1,2)"), plain(a2)).value
          == evaluate(parse_expr("psi1*psi1*e(1,2)"), plain(a2)).value);
    // unknown label
    CHECK_THROWS_AS((void)evaluate(parse_expr("e(9)"), plain(a1)), error);
    // unanchored product
    CHECK_THROWS_AS((void)evaluate(parse_expr("psi1"), plain(a1)), error);
    // thick atom without thick context
    CHECK_THROWS_AS((void)evaluate(parse_expr("y1*e(1)"), plain(a1)), error);
}

TEST_CASE("thick evaluation")
{
    CartanDatum d = CartanDatum::validate({"1"}, {{2}}).extend();
    auto ctx = make_context(d, specialized_params(d, {}));
    auto tc = make_thick_context(ctx, {ThickLabel{{2}}}, {0});
    const EvalContext ec{ctx, tc};

    const ThickSeq s_1l{tc, {0, -1}};
    CHECK(evaluate(parse_expr("e(1,L1)"), ec).value == seq_idempotent(s_1l).ambient);
    CHECK(evaluate(parse_expr("y1*e(1,L1)"), ec).value == y_dot(1, s_1l).ambient);
    CHECK(evaluate(parse_expr("y2*e(1,L1)"), ec).value.is_zero());
    CHECK(evaluate(parse_expr("E[1,1,2]*e(1,L1)"), ec).value
          == esym_dot(1, 0, 2, s_1l).ambient);
    CHECK(evaluate(parse_expr("Psi1*e(1,L1)"), ec).value
          == thick_crossing(1, s_1l).ambient);
    // not a member of Seq(lambda,nu)
    CHECK_THROWS_AS((void)evaluate(parse_expr("e(L1,L1)"), ec), error);
    // ambient expressions still evaluate under a thick context
    CHECK(evaluate(parse_expr("e(~1,~1,1)"), ec).value
          == idempotent(ctx, {d.bar(0), d.bar(0), 0}));
}

TEST_CASE("printing")
{
    auto a1 = ctx_a1();
    CHECK(print_element(idempotent(a1, {0, 0})) == "e(1,1)");
    CHECK(print_element(Element::zero(a1, 2)) == "0");
    const Element e = evaluate(parse_expr("psi1*x1*e(1,1)"), plain(a1)).value;
    CHECK(print_element(e) == "x2*psi1*e(1,1) + e(1,1)");
    CHECK(print_element(Rat(-1) * idempotent(a1, {0})) == "-1*e(1)");
    CHECK(print_element(idempotent(a1, {})) == "e()");
    // negative later coefficient
    const Element diff = evaluate(parse_expr("psi1*psi1*e(~1,1)"),
                                  plain([] {
                                      CartanDatum d =
                                          CartanDatum::validate({"1"}, {{2}}).extend();
                                      return make_context(d, specialized_params(d, {}));
                                  }()))
                             .value;
    CHECK(print_element(diff) == "x2*e(~1,1) - x1*e(~1,1)");
}

TEST_CASE("print/parse round trip on structured elements")
{
    auto a2 = ctx_a2();
    std::mt19937 rng(23);
    for (int t = 0; t < 50; ++t) {
        Element e = Element::zero(a2, 3);
        const int terms = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < terms; ++k) {
            BasisDiagram dg;
            for (int q = 0; q < 3; ++q)
                dg.bottom.push_back(static_cast<int>(rng() % 2));
            std::vector<int> ol{1, 2, 3};
            std::shuffle(ol.begin(), ol.end(), rng);
            dg.perm = Perm::from_one_line(ol);
            for (int q = 0; q < 3; ++q)
                dg.exps.push_back(static_cast<int>(rng() % 3));
            int num = static_cast<int>(rng() % 7) - 3;
            if (num == 0)
                num = 2;
            e.add(dg, Rat(num, 1 + static_cast<int>(rng() % 2)));
        }
        const EvalResult back = evaluate(parse_expr(print_element(e)), plain(a2));
        CHECK(back.value == e);
    }
}

TEST_CASE("the parser is total on garbage input")
{
    std::mt19937 rng(99);
    auto a1 = ctx_a1();
    // half near-miss strings over the grammar's alphabet, half raw bytes
    const std::string alphabet = "epsixyE123456789L~*+-/^()[], \t";
    for (int t = 0; t < 12000; ++t) {
        const int len = static_cast<int>(rng() % 24);
        std::string s;
        for (int k = 0; k < len; ++k) {
            if (t % 2 == 0)
                s += alphabet[rng() % alphabet.size()];
            else
                s += static_cast<char>(rng() % 256);
        }
        try {
            (void)evaluate(parse_expr(s), plain(a1));
        } catch (const error&) {
            // positioned diagnostics are the contract; crashes are not
        }
    }
    CHECK(true);
}
