#include <vector>

#include "doctest.h"
#include "orthotope/class_table.hpp"
#include "orthotope/diagram.hpp"
#include "orthotope/errors.hpp"

using namespace ortho;

TEST_CASE("identity diagram") {
    Diagram one = Diagram::one();
    CHECK(one.kind() == NodeKind::One);
    CHECK(one.dim() == 0);
    CHECK(one.encoding() == "1");
    CHECK(one == Diagram());
}

TEST_CASE("leaf diagram") {
    Diagram x = Diagram::leaf();
    CHECK(x.kind() == NodeKind::Leaf);
    CHECK(x.dim() == 1);
    CHECK(x.encoding() == "x");
}

TEST_CASE("canonical form") {
    Diagram x = Diagram::leaf();

    SUBCASE("single child collapses") {
        CHECK(Diagram::series({x}) == x);
        CHECK(Diagram::parallel({x}) == x);
    }
    SUBCASE("nested same-kind nodes flatten") {
        Diagram inner = Diagram::series({x, x});
        CHECK(Diagram::series({inner, x}).encoding() == "x*x*x");
        Diagram pinner = Diagram::parallel({x, x});
        CHECK(Diagram::parallel({pinner, x}).encoding() == "x+x+x");
    }
    SUBCASE("TRUE is the series unit") {
        CHECK(Diagram::series({Diagram::one(), x}) == x);
        CHECK(Diagram::series({Diagram::one(), Diagram::one()}) ==
              Diagram::one());
    }
    SUBCASE("TRUE absorbs a parallel node") {
        CHECK(Diagram::parallel({Diagram::one(), x}) == Diagram::one());
    }
    SUBCASE("empty child list gives TRUE") {
        CHECK(Diagram::series({}) == Diagram::one());
    }
    SUBCASE("children sort by dimension descending, then by encoding") {
        Diagram pp = parse_diagram("x+x");
        CHECK(Diagram::series({x, pp}).encoding() == "(x+x)*x");
        CHECK(Diagram::series({pp, x}).encoding() == "(x+x)*x");
        Diagram ss = parse_diagram("x*x");
        CHECK(Diagram::parallel({x, ss}).encoding() == "x*x+x");
    }
}

TEST_CASE("encodings of the classes through dimension three") {
    Diagram x = Diagram::leaf();
    CHECK(Diagram::series({x, x}).encoding() == "x*x");
    CHECK(Diagram::parallel({x, x}).encoding() == "x+x");
    CHECK(Diagram::series({x, x, x}).encoding() == "x*x*x");
    CHECK(Diagram::series({Diagram::parallel({x, x}), x}).encoding() ==
          "(x+x)*x");
    CHECK(Diagram::parallel({Diagram::series({x, x}), x}).encoding() ==
          "x*x+x");
    CHECK(Diagram::parallel({x, x, x}).encoding() == "x+x+x");
}

TEST_CASE("parsing round-trips every class through dimension five") {
    for (const Diagram& d : enumerate_classes(5)) {
        CAPTURE(d.encoding());
        CHECK(parse_diagram(d.encoding()) == d);
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_diagram(""), ParseError);
    CHECK_THROWS_AS(parse_diagram("x*"), ParseError);
    CHECK_THROWS_AS(parse_diagram("*x"), ParseError);
    CHECK_THROWS_AS(parse_diagram("(x+x"), ParseError);
    CHECK_THROWS_AS(parse_diagram("x)"), ParseError);
    CHECK_THROWS_AS(parse_diagram("y"), ParseError);
    CHECK_THROWS_AS(parse_diagram("x x"), ParseError);
}

TEST_CASE("parse accepts surrounding whitespace") {
    CHECK(parse_diagram(" x * x ") == parse_diagram("x*x"));
    CHECK(parse_diagram("( x + x ) * x") == parse_diagram("(x+x)*x"));
}

TEST_CASE("complement swaps series and parallel") {
    CHECK(complement(parse_diagram("x")) == parse_diagram("x"));
    CHECK(complement(parse_diagram("x*x")) == parse_diagram("x+x"));
    CHECK(complement(parse_diagram("(x+x)*x")) == parse_diagram("x*x+x"));
    CHECK(complement(parse_diagram("(x+x)*(x+x)")) ==
          parse_diagram("x*x+x*x"));
    CHECK_THROWS_AS(complement(Diagram::one()), ComplementOfIdentity);
}

TEST_CASE("complement is an involution") {
    for (const Diagram& d : enumerate_classes(5)) {
        if (d == Diagram::one()) continue;
        CAPTURE(d.encoding());
        CHECK(complement(complement(d)) == d);
    }
}

TEST_CASE("product basics") {
    Diagram one = Diagram::one();
    Diagram x = Diagram::leaf();
    Diagram pp = parse_diagram("x+x");
    CHECK(product(one, one) == one);
    CHECK(product(one, pp) == pp);
    CHECK(product(pp, one) == pp);
    CHECK(product(x, x) == parse_diagram("x*x"));
    CHECK(product(pp, x) == parse_diagram("(x+x)*x"));
    CHECK(product(pp, pp) == parse_diagram("(x+x)*(x+x)"));
    CHECK(product(parse_diagram("x*x"), x) == parse_diagram("x*x*x"));
}

TEST_CASE("product is commutative and associative") {
    std::vector<Diagram> classes = enumerate_classes(3);
    for (const Diagram& a : classes)
        for (const Diagram& b : classes) {
            CAPTURE(a.encoding());
            CAPTURE(b.encoding());
            CHECK(product(a, b) == product(b, a));
        }
    for (const Diagram& a : classes)
        for (const Diagram& b : classes)
            for (const Diagram& c : classes) {
                if (a.dim() + b.dim() + c.dim() > 5) continue;
                CHECK(product(product(a, b), c) == product(a, product(b, c)));
            }
}

TEST_CASE("orthant counts") {
    CHECK(mu(Diagram::one()) == 1);
    CHECK(mu(parse_diagram("x")) == 1);
    CHECK(mu(parse_diagram("x*x")) == 1);
    CHECK(mu(parse_diagram("x+x")) == 3);
    CHECK(mu(parse_diagram("x*x*x")) == 1);
    CHECK(mu(parse_diagram("(x+x)*x")) == 3);
    CHECK(mu(parse_diagram("x*x+x")) == 5);
    CHECK(mu(parse_diagram("x+x+x")) == 7);
    CHECK(mu(parse_diagram("x+x+x+x")) == 15);
    CHECK(mu(parse_diagram("(x+x)*(x+x)")) == 9);
}

TEST_CASE("orthant count of a complementary pair fills the orthant set") {
    for (const Diagram& d : enumerate_classes(5)) {
        if (d == Diagram::one()) continue;
        CAPTURE(d.encoding());
        CHECK(mu(d) + mu(complement(d)) == std::int64_t{1} << d.dim());
    }
}

TEST_CASE("branching defect and parity sign") {
    CHECK(rho(Diagram::one()) == 0);
    CHECK(rho(parse_diagram("x")) == 0);
    CHECK(rho(parse_diagram("x*x*x")) == 0);
    CHECK(rho(parse_diagram("x+x")) == 1);
    CHECK(rho(parse_diagram("(x+x)*x")) == 1);
    CHECK(rho(parse_diagram("x+x+x")) == 2);
    CHECK(rho(parse_diagram("(x+x)*(x+x)")) == 2);
    CHECK(rho(parse_diagram("x+x+x+x")) == 3);
    CHECK(sigma(parse_diagram("x*x")) == 1);
    CHECK(sigma(parse_diagram("x+x")) == -1);
    CHECK(sigma(parse_diagram("x+x+x")) == 1);
    CHECK(sigma(parse_diagram("x+x+x+x")) == -1);
}

TEST_CASE("partial evaluation") {
    // Leaves are numbered left to right in the encoding, so for (x+x)*x the
    // parallel pair holds leaves 0 and 1 and the series leaf is 2.
    Diagram d = parse_diagram("(x+x)*x");

    SUBCASE("full assignments decide the function") {
        CHECK(partial_eval(d, {1, -1, 1}).kind == EvalKind::ConstTrue);
        CHECK(partial_eval(d, {-1, 1, 1}).kind == EvalKind::ConstTrue);
        CHECK(partial_eval(d, {-1, -1, 1}).kind == EvalKind::ConstFalse);
        CHECK(partial_eval(d, {1, 1, -1}).kind == EvalKind::ConstFalse);
    }
    SUBCASE("free coordinates survive into the residual") {
        PartialEval r = partial_eval(d, {0, 0, 1});
        REQUIRE(r.kind == EvalKind::Residual);
        CHECK(r.residual == parse_diagram("x+x"));
        CHECK(r.survivors == std::vector<int>{0, 1});
    }
    SUBCASE("a decided branch swallows its free leaves") {
        PartialEval r = partial_eval(d, {1, 0, 0});
        REQUIRE(r.kind == EvalKind::Residual);
        CHECK(r.residual == parse_diagram("x"));
        CHECK(r.survivors == std::vector<int>{2});
    }
    SUBCASE("the all-free assignment returns the diagram itself") {
        PartialEval r = partial_eval(d, {0, 0, 0});
        REQUIRE(r.kind == EvalKind::Residual);
        CHECK(r.residual == d);
        CHECK(r.survivors == std::vector<int>{0, 1, 2});
    }
    SUBCASE("negative residuals can shrink a parallel node") {
        PartialEval r = partial_eval(d, {-1, 0, 1});
        REQUIRE(r.kind == EvalKind::Residual);
        CHECK(r.residual == parse_diagram("x"));
        CHECK(r.survivors == std::vector<int>{1});
    }
    SUBCASE("sign vector length must match the dimension") {
        CHECK_THROWS_AS(partial_eval(d, {0, 0}), LengthMismatch);
        CHECK_THROWS_AS(partial_eval(d, {0, 0, 0, 0}), LengthMismatch);
    }
}

TEST_CASE("partial evaluation of the identity") {
    PartialEval r = partial_eval(Diagram::one(), {});
    CHECK(r.kind == EvalKind::ConstTrue);
}
