#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace frontal;
using frontal::testing::P;
using frontal::testing::Rng;

TEST_CASE("parse_polynomial accepts the reference expressions") {
    auto ctx = testing::ctx_uvw();

    const Polynomial q = P(ctx, "2*u*v + 3*v^2 + w^2");
    REQUIRE(q.terms().size() == 3);
    CHECK(q.coeff(Monomial({1, 1, 0})) == 2);
    CHECK(q.coeff(Monomial({0, 2, 0})) == 3);
    CHECK(q.coeff(Monomial({0, 0, 2})) == 1);

    CHECK(P(ctx, "0").is_zero());
    CHECK(P(ctx, "0").terms().empty());

    const Polynomial r = P(ctx, "u*v^2 + 2*v^3 + 2*v*w^2");
    REQUIRE(r.terms().size() == 3);
    CHECK(r.coeff(Monomial({1, 2, 0})) == 1);
    CHECK(r.coeff(Monomial({0, 3, 0})) == 2);
    CHECK(r.coeff(Monomial({0, 1, 2})) == 2);
}

TEST_CASE("parser handles literals, precedence and parentheses") {
    auto ctx = testing::ctx_xy();
    CHECK(P(ctx, "1/2*x") == Polynomial::variable(ctx, std::size_t{0}).scaled(Rational(1, 2)));
    CHECK(P(ctx, "3 / 2") == Polynomial::constant(ctx, Rational(3, 2)));
    CHECK(P(ctx, "(x + y)^2") == P(ctx, "x^2 + 2*x*y + y^2"));
    CHECK(P(ctx, "-x^2") == -P(ctx, "x^2"));     // ^ binds tighter than unary minus
    CHECK(P(ctx, "-2^2") == Polynomial::constant(ctx, Rational(-4)));
    CHECK(P(ctx, "2*-x") == P(ctx, "-2*x"));
    CHECK(P(ctx, "x^0") == Polynomial::constant(ctx, Rational(1)));
    CHECK(P(ctx, "  x +\t y ") == P(ctx, "x+y"));
}

TEST_CASE("parser reports positions and unknown variables") {
    auto ctx = testing::ctx_uvw();

    try {
        P(ctx, "u + )");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }

    try {
        P(ctx, "u * zz + v");
        FAIL("expected UnknownVariableError");
    } catch (const UnknownVariableError& e) {
        CHECK(e.name() == "zz");
        CHECK(e.position() == 4);
    }

    CHECK_THROWS_AS(P(ctx, ""), ParseError);
    CHECK_THROWS_AS(P(ctx, "1/0"), ParseError);
    CHECK_THROWS_AS(P(ctx, "u / 2"), ParseError);  // '/' only in rational literals
    CHECK_THROWS_AS(P(ctx, "u^-2"), ParseError);   // exponents are non-negative
    CHECK_THROWS_AS(P(ctx, "u v"), ParseError);    // no implicit multiplication
}

TEST_CASE("ring arithmetic on reference inputs") {
    auto ctx = testing::ctx_uvw();
    CHECK(P(ctx, "v*w") * P(ctx, "v*w") == P(ctx, "v^2*w^2"));

    const Polynomial p = P(ctx, "2*u*v + 3*v^2 + w^2");
    CHECK((p + (-p)).is_zero());

    CHECK(P(ctx, "2*u + 6*v") * P(ctx, "w") == P(ctx, "2*u*w + 6*v*w"));
}

TEST_CASE("arithmetic across contexts is rejected") {
    auto a = testing::ctx_uvw();
    auto b = testing::ctx_xy();
    CHECK_THROWS_AS(P(a, "u") + P(b, "x"), ContextMismatchError);
    CHECK_THROWS_AS(P(a, "u") * P(b, "x"), ContextMismatchError);
}

TEST_CASE("differentiation matches calculus identities") {
    auto ctx = testing::ctx_uvw();
    CHECK(P(ctx, "v*w").derivative("v") == P(ctx, "w"));
    CHECK(P(ctx, "2*u*v + 3*v^2 + w^2").derivative("v") == P(ctx, "2*u + 6*v"));
    CHECK(P(ctx, "u*v^2 + 2*v^3 + 2*v*w^2").derivative("w") == P(ctx, "4*v*w"));
    CHECK_THROWS_AS(P(ctx, "u").derivative("zz"), DomainError);
}

TEST_CASE("substitution composes exactly") {
    auto ctx = testing::ctx_uvw();

    SECTION("forced cancellation of s - p, t - q") {
        auto ext = make_context({"u", "s", "t", "v", "w"});
        // alpha_v*(s - p) + beta_v*(t - q) with alpha_v = w, beta_v = 1
        const Polynomial expr =
            P(ext, "w*(s - v*w) + (t - (2*u*v + 3*v^2 + w^2))");
        const Polynomial image = substitute(
            expr,
            {{"s", P(ctx, "v*w")}, {"t", P(ctx, "2*u*v + 3*v^2 + w^2")}}, ctx);
        CHECK(image.is_zero());
    }

    SECTION("setting v and w to zero") {
        const Polynomial g = P(ctx, "2*u^3 + 6*u*v + 12*v^2");
        const Polynomial image = substitute(
            g, {{"v", Polynomial::zero(ctx)}, {"w", Polynomial::zero(ctx)}}, ctx);
        CHECK(image == P(ctx, "2*u^3"));
    }

    SECTION("identity bindings") {
        auto xy = testing::ctx_xy();
        const Polynomial g = P(xy, "x^2*y - 3*y^2");
        const Polynomial image = substitute(
            g, {{"x", Polynomial::variable(xy, std::size_t{0})},
                {"y", Polynomial::variable(xy, std::size_t{1})}});
        CHECK(image == g);
    }

    SECTION("unbound variable missing from target context") {
        auto xy = testing::ctx_xy();
        CHECK_THROWS_AS(substitute(P(ctx, "u + v"), {{"v", P(xy, "x")}}, xy),
                        ContextMismatchError);
    }
}

TEST_CASE("truncation drops high-degree terms and records the order") {
    auto ctx = testing::ctx_uvw();
    const TruncatedSeries s1 = truncate(P(ctx, "u*v^2 + 2*v^3 + 2*v*w^2"), 2);
    CHECK(s1.poly().is_zero());
    CHECK(s1.order() == 2);

    const TruncatedSeries s2 = truncate(P(ctx, "2*u + 6*v"), 5);
    CHECK(s2.poly() == P(ctx, "2*u + 6*v"));
    CHECK(s2.order() == 5);

    auto cx = make_context({"x"});
    const TruncatedSeries s3 = truncate(P(cx, "1 + x + x^3"), 1);
    CHECK(s3.poly() == P(cx, "1 + x"));
    CHECK(s3.order() == 1);
}

TEST_CASE("series arithmetic propagates the smaller order") {
    auto ctx = testing::ctx_uvw();
    const TruncatedSeries a = truncate(P(ctx, "u + v^2"), 4);
    const TruncatedSeries b = truncate(P(ctx, "1 + w"), 2);
    CHECK((a + b).order() == 2);
    CHECK((a * b).order() == 2);
    CHECK((a * b).poly().degree() <= 2);
    CHECK(a.derivative(0).order() == 3);
}

TEST_CASE("gcd spans monomials, common factors and coprime inputs") {
    auto cxy = testing::ctx_xy();

    // minors of the folded Whitney umbrella
    CHECK(gcd_multivariate({P(cxy, "2*y"), P(cxy, "3*x*y^2"), P(cxy, "-2*y^4")}) ==
          P(cxy, "y"));

    // minors of the F4 germ: coprime up to units
    CHECK(gcd_multivariate({P(cxy, "2*y"), P(cxy, "5*y^4 + x^3"), P(cxy, "-6*x^2*y^2")}) ==
          P(cxy, "1"));

    CHECK(gcd_multivariate({P(cxy, "x^2*y"), P(cxy, "x*y^2")}) == P(cxy, "x*y"));

    CHECK_THROWS_AS(gcd_multivariate({Polynomial::zero(cxy), Polynomial::zero(cxy)}),
                    DomainError);

    // single nonzero input normalizes
    CHECK(gcd_multivariate({P(cxy, "3*x^2"), Polynomial::zero(cxy)}) == P(cxy, "x^2"));
}

TEST_CASE("exact division certifies divisibility") {
    auto ctx = testing::ctx_uvw();
    const Polynomial g = P(ctx, "u*v + 3*v^2 - w^2");
    const Polynomial m = P(ctx, "-2*v") * g;
    auto q = divide_exact(m, g);
    REQUIRE(q);
    CHECK(*q == P(ctx, "-2*v"));
    CHECK(!divide_exact(P(ctx, "u*v + 1"), g));
    CHECK_THROWS_AS(divide_exact(g, Polynomial::zero(ctx)), DomainError);
}

TEST_CASE("printer emits the canonical order and round-trips") {
    auto ctx = testing::ctx_uvw();
    CHECK(P(ctx, "w^2 + 2*u*v + 3*v^2").str() == "2*u*v + 3*v^2 + w^2");
    CHECK(P(ctx, "0").str() == "0");
    CHECK(P(ctx, "-u + 1/3*w").str() == "-u + 1/3*w");
    CHECK(P(ctx, "v^2 - 2*u^2").str() == "-2*u^2 + v^2");
}

TEST_CASE("property: ring axioms hold exactly", "[property]") {
    Rng rng(20240701);
    auto ctx = testing::ctx_uvw();
    for (int i = 0; i < 120; ++i) {
        const Polynomial a = rng.polynomial(ctx, 5, 4);
        const Polynomial b = rng.polynomial(ctx, 5, 4);
        const Polynomial c = rng.polynomial(ctx, 5, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("property: Leibniz rule", "[property]") {
    Rng rng(20240702);
    auto ctx = testing::ctx_uvw();
    for (int i = 0; i < 120; ++i) {
        const Polynomial a = rng.polynomial(ctx, 5, 4);
        const Polynomial b = rng.polynomial(ctx, 5, 4);
        const std::size_t var = static_cast<std::size_t>(rng.uniform(0, 2));
        CHECK((a * b).derivative(var) == a * b.derivative(var) + b * a.derivative(var));
    }
}

TEST_CASE("property: gcd of common multiples is divisible by the factor", "[property]") {
    Rng rng(20240703);
    auto ctx = testing::ctx_xy();
    for (int i = 0; i < 100; ++i) {
        const Polynomial g = rng.nonzero_polynomial(ctx, 3, 3);
        const Polynomial a = rng.nonzero_polynomial(ctx, 3, 3);
        const Polynomial b = rng.nonzero_polynomial(ctx, 3, 3);
        const Polynomial d = gcd_multivariate(a * g, b * g);
        const auto q = divide_exact(d, g.monic_trailing());
        REQUIRE(q);
        CHECK((*q * g.monic_trailing()) == d);
    }
}

TEST_CASE("property: print/parse round-trip", "[property]") {
    Rng rng(20240704);
    auto ctx = testing::ctx_uvw();
    for (int i = 0; i < 150; ++i) {
        const Polynomial p = rng.polynomial(ctx, 6, 5);
        CHECK(parse_polynomial(p.str(), ctx) == p);
    }
}

TEST_CASE("property: truncation tower", "[property]") {
    Rng rng(20240705);
    auto ctx = testing::ctx_uvw();
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = rng.polynomial(ctx, 6, 6);
        const int d1 = rng.uniform(0, 6);
        const int d2 = rng.uniform(0, d1);
        CHECK(truncate(truncate(p, d1).poly(), d2) == truncate(p, d2));
    }
}
