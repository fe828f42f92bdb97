#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbeq/groebner.hpp"
#include "orbeq/ring.hpp"

using namespace orbeq;

namespace {

Ring make_ring(std::initializer_list<std::pair<const char*, Rat>> vars) {
    std::vector<VariableSpec> vs;
    for (const auto& [n, w] : vars) vs.push_back({n, w, VarKind::geometric});
    return GradedRing::make(std::move(vs));
}

Polynomial rand_poly(const Ring& ring, std::mt19937_64& rng, int max_terms = 6, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        Monomial m(ring->size());
        for (std::size_t i = 0; i < ring->size(); ++i) m[i] = static_cast<std::uint16_t>(exp(rng));
        terms.push_back({std::move(m), Rat(coef(rng))});
    }
    return Polynomial(ring, std::move(terms));
}

} // namespace

TEST_CASE("parse: three-term potential") {
    auto ring = make_ring({{"x", rat(1, 2)}, {"y", rat(2, 3)}, {"z", rat(3, 4)}});
    Polynomial p = parse_polynomial("x^4 + y^3 + x*z^2", ring);
    CHECK(p.term_count() == 3);
    CHECK(p.to_string() == "x^4 + x*z^2 + y^3");
    CHECK(parse_polynomial(p.to_string(), ring) == p);
}

TEST_CASE("parse: zero and cancellation") {
    auto ring = make_ring({{"x", Rat(1)}, {"y", Rat(1)}});
    CHECK(parse_polynomial("0", ring).is_zero());
    CHECK(parse_polynomial("2/3*x*y - 2/3*x*y", ring).is_zero());
}

TEST_CASE("parse: errors") {
    auto ring = make_ring({{"x", Rat(1)}});
    CHECK_THROWS(parse_polynomial("q + 1", ring));       // unknown variable
    CHECK_THROWS(parse_polynomial("x +", ring));         // dangling sign
    CHECK_THROWS(parse_polynomial("1/0*x", ring));       // zero denominator
    CHECK_THROWS(parse_polynomial("x^^2", ring));
}

TEST_CASE("parse: rational coefficients and signs") {
    auto ring = make_ring({{"x", Rat(1)}, {"y", Rat(1)}});
    Polynomial p = parse_polynomial("-2/3*x + y - -1", ring);
    CHECK(p.coefficient(parse_polynomial("x", ring).terms()[0].mono) == rat(-2, 3));
    CHECK(p.to_string() == "-2/3*x + y + 1");
}

TEST_CASE("quasi-homogeneous degree") {
    auto r1 = make_ring({{"x", rat(2, 3)}});
    CHECK(quasi_homogeneous_degree(parse_polynomial("x^3", r1)).degree == Rat(2));

    auto r2 = make_ring({{"x", rat(1, 5)}, {"y", rat(2, 3)}, {"z", Rat(1)}});
    auto gr = quasi_homogeneous_degree(parse_polynomial("x^5*z + y^3 + z^2", r2));
    CHECK(gr.homogeneous);
    CHECK(gr.degree == Rat(2));

    auto r3 = make_ring({{"x", Rat(1)}});
    CHECK_FALSE(quasi_homogeneous_degree(parse_polynomial("x + x^2", r3)).homogeneous);
    CHECK_THROWS(quasi_homogeneous_degree(Polynomial(r3)));   // zero polynomial
}

TEST_CASE("validate_potential: x^3") {
    auto ring = make_ring({{"x", rat(2, 3)}});
    Potential p = validate_potential(parse_polynomial("x^3", ring));
    CHECK(p.degree == Rat(2));
    CHECK(p.jacobian_dimension == 2);   // Jac(x^3) = k[x]/(3x^2), basis {1, x}
    CHECK(central_charge(p) == rat(1, 3));
}

TEST_CASE("validate_potential: weight rescaling to degree 2") {
    auto ring = make_ring({{"x", Rat(1)}});   // x^3 has degree 3 here
    Potential p = validate_potential(parse_polynomial("x^3", ring));
    CHECK(p.degree == Rat(2));
    CHECK(p.ring->var(0).weight == rat(2, 3));
}

TEST_CASE("validate_potential: infinite-dimensional quotient rejected") {
    auto ring = make_ring({{"x", rat(2, 3)}, {"y", rat(2, 3)}});
    // I_f = (2xy, x^2) leaves every power of y unreduced
    CHECK_THROWS_WITH_AS(validate_potential(parse_polynomial("x^2*y", ring)),
                         doctest::Contains("infinite-dimensional"), std::runtime_error);
}

TEST_CASE("validate_potential: Q12 potential") {
    auto ring = make_ring({{"u", rat(2, 5)}, {"v", rat(2, 3)}, {"w", rat(4, 5)}});
    Potential p = validate_potential(parse_polynomial("u^5 + v^3 + u*w^2", ring));
    CHECK(p.degree == Rat(2));
    CHECK(p.jacobian_dimension == 12);
    CHECK(central_charge(p) == rat(17, 15));
}

TEST_CASE("jacobian_ideal in declared variable order") {
    auto ring = make_ring({{"x", rat(1, 2)}, {"y", rat(2, 3)}, {"z", rat(3, 4)}});
    Potential p = validate_potential(parse_polynomial("x^4 + y^3 + x*z^2", ring));
    auto jac = jacobian_ideal(p);
    REQUIRE(jac.size() == 3);
    CHECK(jac[0] == parse_polynomial("4*x^3 + z^2", p.ring));
    CHECK(jac[1] == parse_polynomial("3*y^2", p.ring));
    CHECK(jac[2] == parse_polynomial("2*x*z", p.ring));

    // f lies in its own Jacobian ideal
    auto gb = groebner_basis(jac, MonomialOrder::degrevlex());
    CHECK(normal_form(p.poly, gb).is_zero());
}

TEST_CASE("central charges of the paper pairs") {
    auto q12 = validate_potential(parse_polynomial(
        "u^5 + v^3 + u*w^2", make_ring({{"u", rat(2, 5)}, {"v", rat(2, 3)}, {"w", rat(4, 5)}})));
    auto e18 = validate_potential(parse_polynomial(
        "x^5*z + y^3 + z^2", make_ring({{"x", rat(1, 5)}, {"y", rat(2, 3)}, {"z", Rat(1)}})));
    CHECK(central_charge(q12) == rat(17, 15));
    CHECK(central_charge(e18) == rat(17, 15));

    auto q18 = validate_potential(parse_polynomial(
        "x^8 + y^3 + x*z^2", make_ring({{"x", rat(1, 4)}, {"y", rat(2, 3)}, {"z", rat(7, 8)}})));
    auto e30 = validate_potential(parse_polynomial(
        "u^8*w + v^3 + w^2", make_ring({{"u", rat(1, 8)}, {"v", rat(2, 3)}, {"w", Rat(1)}})));
    CHECK(central_charge(q18) == central_charge(e30));
    CHECK(central_charge(q18) == rat(29, 24));
}

TEST_CASE("monomials_of_grading: paper charge spans") {
    auto r2 = make_ring({{"u", rat(2, 3)}, {"v", rat(2, 3)}});
    auto m1 = monomials_of_grading(r2, rat(2, 3));
    REQUIRE(m1.size() == 2);
    CHECK(Polynomial::monomial(r2, m1[0], Rat(1)).to_string() == "u");
    CHECK(Polynomial::monomial(r2, m1[1], Rat(1)).to_string() == "v");
    auto m2 = monomials_of_grading(r2, rat(4, 3));
    REQUIRE(m2.size() == 3);
    CHECK(Polynomial::monomial(r2, m2[0], Rat(1)).to_string() == "u^2");
    CHECK(Polynomial::monomial(r2, m2[1], Rat(1)).to_string() == "u*v");
    CHECK(Polynomial::monomial(r2, m2[2], Rat(1)).to_string() == "v^2");

    // section-5 joint ring: no monomials of charge 7/15 at all
    auto r6 = make_ring({{"x", rat(1, 5)}, {"y", rat(2, 3)}, {"z", Rat(1)},
                         {"u", rat(2, 5)}, {"v", rat(2, 3)}, {"w", rat(4, 5)}});
    CHECK(monomials_of_grading(r6, rat(7, 15)).empty());
    CHECK(monomials_of_grading(r6, Rat(-1)).empty());
}

TEST_CASE("monomials_of_grading agrees with brute force") {
    auto ring = make_ring({{"x", rat(1, 3)}, {"y", rat(1, 2)}, {"z", Rat(1)}});
    std::mt19937_64 rng(7);
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<int> num(0, 9), den(1, 4);
        Rat q(num(rng), den(rng));
        q.canonicalize();
        auto fast = monomials_of_grading(ring, q);
        // brute force with exponent bound ceil(q / min weight) = 3q <= 27
        std::vector<Monomial> slow;
        const int bound = 27;
        for (int a = 0; a <= bound; ++a)
            for (int b = 0; b <= bound; ++b)
                for (int c = 0; c <= bound; ++c) {
                    Monomial m(3);
                    m[0] = a; m[1] = b; m[2] = c;
                    if (grading(*ring, m) == q) slow.push_back(m);
                }
        CHECK(fast.size() == slow.size());
        for (const auto& m : slow)
            CHECK(std::find(fast.begin(), fast.end(), m) != fast.end());
    }
}

TEST_CASE("berglund-huebsch transpose") {
    auto ring = make_ring({{"x", rat(1, 4)}, {"y", rat(2, 3)}, {"z", rat(7, 8)}});
    Potential q18 = validate_potential(parse_polynomial("x^8 + y^3 + x*z^2", ring));
    Potential t = berglund_huebsch_transpose(q18);
    CHECK(t.poly == parse_polynomial("x^8*z + y^3 + z^2", t.ring));
    CHECK(central_charge(t) == central_charge(q18));

    auto r1 = make_ring({{"x", rat(2, 3)}});
    Potential x3 = validate_potential(parse_polynomial("x^3", r1));
    CHECK(berglund_huebsch_transpose(x3).poly == x3.poly);

    auto r2 = make_ring({{"x", rat(2, 3)}, {"y", rat(2, 3)}});
    Potential sym = validate_potential(parse_polynomial("x^2*y + y^2*x", r2));
    CHECK(berglund_huebsch_transpose(sym).poly == sym.poly);

    // not invertible-type: four monomials in three variables
    auto r3 = make_ring({{"x", rat(1, 2)}, {"y", rat(1, 2)}, {"z", rat(1, 2)}});
    Polynomial bad = parse_polynomial("x^4 + y^4 + z^4 + x^2*y^2", r3);
    CHECK_THROWS(berglund_huebsch_transpose(validate_potential(bad)));
}

TEST_CASE("polynomial arithmetic properties (randomized)") {
    auto ring = make_ring({{"x", Rat(1)}, {"y", Rat(1)}, {"z", Rat(1)}});
    std::mt19937_64 rng(42);
    for (int it = 0; it < 200; ++it) {
        Polynomial a = rand_poly(ring, rng), b = rand_poly(ring, rng), c = rand_poly(ring, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("grading is additive over monomial products") {
    auto ring = make_ring({{"x", rat(1, 5)}, {"y", rat(2, 3)}, {"z", Rat(1)}});
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> exp(0, 6);
    for (int it = 0; it < 200; ++it) {
        Monomial m1(3), m2(3);
        for (int i = 0; i < 3; ++i) {
            m1[i] = exp(rng);
            m2[i] = exp(rng);
        }
        CHECK(grading(*ring, m1 * m2) == grading(*ring, m1) + grading(*ring, m2));
    }
}

TEST_CASE("Euler identity holds for validated potentials") {
    for (auto [expr, w1, w2, w3] :
         {std::tuple<const char*, Rat, Rat, Rat>{"x^4 + y^3 + x*z^2", rat(1, 2), rat(2, 3), rat(3, 4)},
          {"u^4*w + v^3 + w^2", rat(1, 4), rat(2, 3), Rat(1)}}) {
        auto ring = GradedRing::make({{"x", w1, VarKind::geometric},
                                      {"y", w2, VarKind::geometric},
                                      {"z", w3, VarKind::geometric}});
        std::string s(expr);
        for (char& c : s) {
            if (c == 'u') c = 'x';
            if (c == 'v') c = 'y';
            if (c == 'w') c = 'z';
        }
        Potential p = validate_potential(parse_polynomial(s, ring));
        Polynomial acc(p.ring);
        for (std::size_t i = 0; i < 3; ++i)
            acc = acc + (p.poly.derivative(i) * Polynomial::variable(p.ring, i))
                            .scaled(p.ring->var(i).weight / p.degree);
        CHECK(acc == p.poly);
    }
}
