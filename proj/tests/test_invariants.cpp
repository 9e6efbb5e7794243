#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace testutil;

namespace {

InvariantReport verify(const std::string& f, const std::string& g, bool oracle = false) {
    VerifyOptions opts;
    opts.with_oracle = oracle;
    return verify_theorem(make_germ_pair(P(f), P(g)), opts);
}

bool weights_fit(const Poly& g, const std::vector<Rational>& w) {
    for (const Term& t : g.terms()) {
        Rational s(0);
        for (std::size_t i = 0; i < w.size(); ++i)
            s += w[i] * Rational(static_cast<long>(t.mon.exps[i]));
        if (s != 1) return false;
    }
    for (const auto& q : w)
        if (sgn(q) <= 0) return false;
    return true;
}

} // namespace

TEST_CASE("milnor numbers") {
    CHECK(milnor_number(P("x^2+y^2")) == DimResult::of(1));
    CHECK(milnor_number(P("x^3+y^3")) == DimResult::of(4));
    CHECK(milnor_number(P("x^2+y^3")) == DimResult::of(2));
    CHECK(milnor_number(P("x")) == DimResult::of(0));   // smooth
    CHECK_FALSE(milnor_number(P("x^2")).finite);        // non-isolated
    CHECK_THROWS_AS(milnor_number(P("x+1")), std::invalid_argument);
}

TEST_CASE("tjurina numbers") {
    CHECK(tjurina_number(P("x^2+y^3")) == DimResult::of(2));
    CHECK(tjurina_number(P("x")) == DimResult::of(0));
    CHECK(tjurina_number(P("x^2+y^2")) == DimResult::of(1));
    CHECK(tjurina_number(P("x^5+y^5+x^2*y^2")) == DimResult::of(10));
}

TEST_CASE("bruce-roberts numbers") {
    CHECK(bruce_roberts(P("x^2+y^3"), P("x")) == 4);
    CHECK(bruce_roberts(P("x^2+y^2"), P("x^2+y^3")) == 4);
    CHECK(bruce_roberts(P("x^2+y^2"), P("x")) == 2);
}

TEST_CASE("mu(f_V) through both Le-Greuel routes") {
    CHECK(mu_fV_le_greuel(P("x^2+y^2"), P("x^2+y^3")) == 3);
    CHECK(mu_fV_le_greuel(P("x^2+y^3"), P("x")) == 2);
    CHECK(mu_fV_le_greuel(P("x^2+y^2"), P("x")) == 1);
}

TEST_CASE("precondition checks") {
    auto all = check_preconditions(make_germ_pair(P("x^2+y^3"), P("x")));
    CHECK(all.all_ok());

    // f = x^2+y^2 against the node xy: the minors test decides, and passes
    auto node = check_preconditions(make_germ_pair(P("x^2+y^2"), P("x*y")));
    CHECK(node.f_isolated);
    CHECK(node.g_isolated);
    CHECK(node.icis_ok);
    CHECK(node.reduced_ok);

    // x^2 has a non-isolated critical locus in two variables
    auto bad = check_preconditions(make_germ_pair(P("x^2"), P("y")));
    CHECK_FALSE(bad.f_isolated);
    CHECK(bad.failed() == std::vector<std::string>{"f_isolated"});

    // f = g forces f_V = 0, which is not an isolated complete intersection
    auto degenerate = check_preconditions(make_germ_pair(P("x^2+y^2"), P("x^2+y^2")));
    CHECK_FALSE(degenerate.icis_ok);

    CHECK_THROWS_AS(make_germ_pair(P("x+1"), P("x")), std::invalid_argument);
    CHECK_THROWS_AS(make_germ_pair(P("x"), P("2*y+3")), std::invalid_argument);
}

TEST_CASE("quasihomogeneity detection") {
    auto cusp = is_quasihomogeneous(P("x^2+y^3"));
    CHECK(cusp.by_saito);
    REQUIRE(cusp.weights);
    CHECK(*cusp.weights == std::vector<Rational>{make_rational(1, 2), make_rational(1, 3)});

    auto node = is_quasihomogeneous(P("x^2+y^2"));
    CHECK(node.by_saito);
    REQUIRE(node.weights);
    CHECK(*node.weights == std::vector<Rational>{make_rational(1, 2), make_rational(1, 2)});

    // the weight system 5w1=1, 5w2=1, 2w1+2w2=1 is inconsistent
    auto t55 = is_quasihomogeneous(P("x^5+y^5+x^2*y^2"));
    CHECK_FALSE(t55.weights);
    CHECK_FALSE(t55.by_saito); // mu = 11, tau = 10

    // underdetermined system: any positive solution works
    auto smooth = is_quasihomogeneous(P("x"));
    REQUIRE(smooth.weights);
    CHECK(weights_fit(P("x"), *smooth.weights));

    // underdetermined with a bounded feasible interval: w1 + w2 = 1
    auto node_xy = is_quasihomogeneous(P("x*y"));
    REQUIRE(node_xy.weights);
    CHECK(weights_fit(P("x*y"), *node_xy.weights));

    // consistent linear system whose only solution has a zero weight:
    // strict positivity must reject it
    auto flat = is_quasihomogeneous(P("x + x*y"));
    CHECK_FALSE(flat.weights);
}

TEST_CASE("verify_theorem on the boundary case") {
    InvariantReport rep = verify("x^2+y^3", "x");
    CHECK(rep.mu_f == 2);
    CHECK(rep.mu_fV == 2);
    CHECK(rep.mu_V == 0);
    CHECK(rep.tau_V == 0);
    CHECK(rep.q_V == 0);
    CHECK(rep.mu_BR_pair == 4);
    CHECK(rep.mu_pair_topological == 4);
    CHECK(rep.all_identities_hold());
}

TEST_CASE("verify_theorem on the cusp pair") {
    InvariantReport rep = verify("x^2+y^2", "x^2+y^3");
    CHECK(rep.mu_f == 1);
    CHECK(rep.mu_fV == 3);
    CHECK(rep.mu_V == 2);
    CHECK(rep.tau_V == 2);
    CHECK(rep.q_V == 0);
    CHECK(rep.mu_BR_pair == 4);
    CHECK(rep.mu_G == 5);
    CHECK(rep.mu_BR_rel == 3);
    CHECK(rep.all_identities_hold());
    CHECK(rep.quasihomogeneous_by_saito);
}

TEST_CASE("verify_theorem on a non-quasihomogeneous divisor") {
    InvariantReport rep = verify("x^2+y^3", "x^5+y^5+x^2*y^2");
    CHECK(rep.q_V == 1);
    CHECK_FALSE(rep.quasihomogeneous_by_saito);
    CHECK_FALSE(rep.weights);
    CHECK(rep.mu_BR_pair > rep.mu_f + rep.mu_fV); // strict, exercising the only-if direction
    CHECK(rep.all_identities_hold());             // EQ6 holds exactly, COR1 as biconditional
}

TEST_CASE("verify_theorem refuses bad inputs with the failed test named") {
    try {
        verify("x^2", "x");
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        REQUIRE_FALSE(e.failed.empty());
        CHECK(e.failed.front() == "f_isolated");
        CHECK(e.flags.size() == 4);
    }
}

TEST_CASE("monotone sanity and q sign on a small corpus") {
    const std::pair<std::string, std::string> corpus[] = {
        {"x^2+y^3", "x"},
        {"x^2+y^2", "x^2+y^3"},
        {"x^3+y^3", "x^2+y^5"},
        {"x^2+y^3", "x^5+y^5+x^2*y^2"},
        {"x^2+y^7", "y^2+x^3"},
    };
    for (const auto& [f, g] : corpus) {
        InvariantReport rep = verify(f, g);
        CHECK(rep.mu_BR_pair >= rep.mu_f); // J_f(V) inside J_f
        CHECK(rep.q_V >= 0);
        CHECK(rep.all_identities_hold());
    }
}

TEST_CASE("oracle cross-check flags") {
    InvariantReport rep = verify("x^2+y^2", "x^2+y^3", true);
    REQUIRE(rep.oracle_agrees);
    CHECK(rep.oracle_agrees->size() == 7);
    for (const auto& [name, ok] : *rep.oracle_agrees) {
        INFO(name);
        CHECK(ok);
    }
}

TEST_CASE("report JSON is byte-deterministic") {
    InvariantReport a = verify("x^2+y^2", "x^2+y^3");
    InvariantReport b = verify("x^2+y^2", "x^2+y^3");
    std::string ja = report_json(a, "x,y", "x^2 + y^2", "x^2 + y^3").dump(2);
    std::string jb = report_json(b, "x,y", "x^2 + y^2", "x^2 + y^3").dump(2);
    CHECK(ja == jb);
    CHECK(ja.find("\"mu_BR_pair\": 4") != std::string::npos);
    CHECK(ja.find("\"weights\": [") != std::string::npos);
}
