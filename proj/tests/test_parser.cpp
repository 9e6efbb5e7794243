#include <catch2/catch_amalgamated.hpp>

#include "properties.hpp"
#include "test_util.hpp"

using namespace testutil;

TEST_CASE("grammar basics") {
    CHECK(P("x^2 + y^3") == P("y^3+x^2"));
    CHECK(P("(x+y)^2 - 2*x*y") == P("x^2+y^2"));
    CHECK(P("3/4*x - x") == P("-1/4*x"));
    CHECK(P("-x^2") == -P("x^2"));          // ^ binds tighter than unary minus
    CHECK(P("x/2") == P("1/2*x"));          // division by an integer literal
    CHECK(P("2^3") == P("8"));
    CHECK(P("  x * ( y + 1 ) ") == P("x*y+x"));
    CHECK(P("x^0") == P("1"));
}

TEST_CASE("three-variable parsing") {
    auto ctx = ctx_xyz();
    CHECK(parse_poly("x*y*z - z^2", ctx) == parse_poly("-(z^2 - x*y*z)", ctx));
}

TEST_CASE("positioned errors") {
    auto at = [](const std::string& src) -> std::size_t {
        try {
            P(src);
        } catch (const ParseError& e) {
            return e.position;
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK_THROWS_AS(P("x +"), ParseError);
    CHECK(at("x +") == 3);
    CHECK_THROWS_AS(P("x y"), ParseError);      // implicit multiplication rejected
    CHECK(at("x y") == 2);
    CHECK_THROWS_AS(P("q + 1"), ParseError);    // unknown variable
    CHECK(at("q + 1") == 0);
    CHECK_THROWS_AS(P("x^-1"), ParseError);     // exponent must be a natural literal
    CHECK_THROWS_AS(P("x^(2)"), ParseError);
    CHECK_THROWS_AS(P("x/y"), ParseError);      // division only by integer literals
    CHECK_THROWS_AS(P("x/(2)"), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
    CHECK_THROWS_AS(P("(x+y"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x**y"), ParseError);
    CHECK_THROWS_AS(P("x^999999999"), ParseError);
    CHECK_THROWS_AS(P("x + \xc3\xa9"), ParseError); // non-ASCII input
}

TEST_CASE("round trip property") {
    auto rt = properties::parser_roundtrip(21, 150);
    INFO(rt.first_failure);
    CHECK(rt.failures == 0);
    CHECK(rt.instances >= 150);
}
