#include <doctest.h>

#include "liejordan/bounds.hpp"
#include "liejordan/error.hpp"
#include "oracles.hpp"

using namespace liejordan;

namespace {

BoundExpr fact(unsigned long n) { return BoundExpr::exact(oracle::factorial_by_loop(n)); }

}  // namespace

TEST_CASE("J(m) exact range") {
    CHECK(jordan_gl(71) == fact(72));
    CHECK(jordan_gl(63) == fact(64));
    CHECK(jordan_gl(65) == fact(66));
    CHECK(jordan_gl(69) == fact(70));
    CHECK(jordan_gl(0) == BoundExpr::exact(1));
    CHECK(jordan_gl(10) == BoundExpr::symbolic_j(10));
    CHECK(jordan_gl(64) == BoundExpr::symbolic_j(64));
    CHECK(jordan_gl(70) == BoundExpr::symbolic_j(70));
    CHECK(jordan_gl(10).to_string() == "J(10)");
    CHECK_THROWS_AS(jordan_gl(-1), InputError);
    for (unsigned long m = 71; m < 200; ++m) CHECK(jordan_gl(m).value() == oracle::factorial_by_loop(m + 1));
}

TEST_CASE("J(m) is nondecreasing where known") {
    mpz_class last = 0;
    for (unsigned long m = 60; m < 120; ++m) {
        if (!jordan_gl_is_known(m)) continue;
        const auto v = jordan_gl(m);
        REQUIRE(v.is_exact());
        CHECK(v.value() >= last);
        last = v.value();
    }
    CHECK(jordan_gl_is_known(67));
    CHECK_FALSE(jordan_gl_is_known(68));
}

TEST_CASE("family arguments") {
    CHECK(lie_argument(4) == 104);
    CHECK(algebraic_argument(1) == 28);
    CHECK(algebraic_argument(2) == 104);
    CHECK(compact_complex_argument(1) == 54);
    CHECK(compact_complex_argument(2) == 10340);
    CHECK(hyperbolic_argument(1) == 54);
    CHECK(riemannian_argument(2) == 54);
    CHECK(riemannian_argument(3) == 444);
    CHECK_THROWS_AS(riemannian_argument(0), InputError);
}

TEST_CASE("Lie group bounds") {
    CHECK(bound_lie_connected(4) == fact(105));
    CHECK(bound_lie_connected(5) == fact(211));
    CHECK(bound_lie_connected(0) == BoundExpr::exact(1));
    CHECK(bound_lie({4, 1}) == fact(105));
    CHECK(bound_lie({0, 1}) == BoundExpr::exact(1));
    const auto b = bound_lie({3, 2});
    CHECK(b.to_string() == "2 * J(54)^2");
    CHECK(b == BoundExpr::product({BoundExpr::exact(2), BoundExpr::power(BoundExpr::symbolic_j(54), 2)}));
    const mpz_class f105 = oracle::factorial_by_loop(105);
    CHECK(bound_lie({4, 2}).value() == 2 * f105 * f105);
    CHECK_THROWS_AS(bound_lie({4, 0}), InputError);
}

TEST_CASE("algebraic and complex-geometry bounds") {
    CHECK(bound_algebraic({2, 1}) == fact(105));
    CHECK(bound_algebraic({1, 1}) == BoundExpr::symbolic_j(28));
    CHECK(bound_algebraic({0, 3}) == BoundExpr::exact(3));
    CHECK(bound_compact_complex(1) == BoundExpr::symbolic_j(54));
    CHECK(bound_compact_complex(2) == fact(10341));
    CHECK(bound_compact_complex(0) == BoundExpr::exact(1));
    CHECK(bound_hyperbolic(1) == BoundExpr::symbolic_j(54));
    CHECK(bound_hyperbolic(0) == BoundExpr::exact(1));
    CHECK(stabilizer_bound_hyperbolic(71) == fact(72));
    CHECK(stabilizer_bound_hyperbolic(5) == BoundExpr::symbolic_j(5));
}

TEST_CASE("Riemannian bounds") {
    CHECK(bound_riemannian(0) == BoundExpr::exact(1));
    CHECK(bound_riemannian(1) == BoundExpr::symbolic_j(12));
    CHECK(bound_riemannian(2) == BoundExpr::symbolic_j(54));
    CHECK(bound_riemannian(3) == fact(445));
}

TEST_CASE("consistency across families") {
    for (std::uint64_t n = 1; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(consistency_check_bounds(n));
        for (const auto& row : consistency_rows(n)) {
            CAPTURE(row.family);
            const mpz_class m = row.dimension_cap;
            CHECK(row.via_lie == m * ((mpz_class(1) << static_cast<mp_bitcnt_t>(row.dimension_cap)) + 10));
            CHECK(row.ok());
        }
    }
    const auto rows = consistency_rows(2);
    bool saw_riemannian = false;
    for (const auto& r : rows)
        if (r.family == "riemannian") {
            saw_riemannian = true;
            CHECK(r.dimension_cap == 3);
            CHECK(r.stated == 54);
        }
    CHECK(saw_riemannian);
    CHECK_THROWS_AS(consistency_check_bounds(0), InputError);
}

TEST_CASE("normalization collapses exact trees") {
    const auto p = BoundExpr::product({BoundExpr::exact(3), BoundExpr::power(BoundExpr::exact(5), 3)});
    CHECK(p.is_exact());
    CHECK(p.value() == 375);
    CHECK(BoundExpr::power(BoundExpr::symbolic_j(10), 1) == BoundExpr::symbolic_j(10));
    CHECK(BoundExpr::product({BoundExpr::exact(1), BoundExpr::symbolic_j(10)}) == BoundExpr::symbolic_j(10));
    const auto mixed = BoundExpr::product({BoundExpr::exact(2), BoundExpr::exact(3), BoundExpr::symbolic_j(9)});
    CHECK(mixed.to_string() == "6 * J(9)");
}

TEST_CASE("JSON round trip") {
    const std::vector<BoundExpr> samples{
        BoundExpr::exact(1),
        fact(105),
        BoundExpr::symbolic_j(54),
        bound_lie({3, 2}),
        BoundExpr::product({BoundExpr::exact(7), BoundExpr::symbolic_j(3), BoundExpr::power(BoundExpr::symbolic_j(4), 5)}),
    };
    for (const auto& e : samples) {
        CAPTURE(e.to_string());
        const auto j = e.to_json();
        CHECK(BoundExpr::from_json(j) == e);
        CHECK(BoundExpr::from_json(nlohmann::json::parse(j.dump())) == e);
    }
    CHECK(fact(105).to_json()["value"].is_string());
    CHECK(BoundExpr::symbolic_j(54).to_json()["kind"] == "symbolic_j");
    CHECK_THROWS_AS(BoundExpr::from_json(nlohmann::json{{"kind", "bogus"}}), InputError);
    CHECK_THROWS_AS(BoundExpr::from_json(nlohmann::json{{"kind", "exact"}, {"value", "12x"}}), InputError);
    CHECK_THROWS_AS(BoundExpr::from_json(nlohmann::json::array()), InputError);
}

TEST_CASE("resource guards") {
    CHECK_THROWS_AS(bound_lie_connected(20), ResourceLimit);
    CHECK_THROWS_AS(bound_compact_complex(5), ResourceLimit);
    BoundLimits small;
    small.max_factorial_arg = 100;
    CHECK_THROWS_AS(bound_lie_connected(4, small), ResourceLimit);
    CHECK_NOTHROW(jordan_gl(99, small));
}
