#include "braidcoh/laurent.hpp"

#include "doctest.h"

using braidcoh::Laurent;

TEST_CASE("laurent constants and monomials") {
    CHECK(Laurent{}.is_zero());
    CHECK(Laurent::constant(0).is_zero());
    CHECK(Laurent::one().is_one());
    CHECK(Laurent::q_power(0).is_one());
    CHECK(!Laurent::q_power(2).is_one());
    CHECK(Laurent::q_power(-3).is_monomial());
    CHECK(Laurent::monomial(5, 2).coeff(2) == 5);
    CHECK(Laurent::monomial(5, 2).coeff(1) == 0);
}

TEST_CASE("laurent arithmetic") {
    const Laurent q2 = Laurent::q_power(2);
    const Laurent one = Laurent::one();

    SUBCASE("addition and cancellation") {
        Laurent s = q2 + one;
        CHECK(s.coeff(2) == 1);
        CHECK(s.coeff(0) == 1);
        Laurent z = s - q2 - one;
        CHECK(z.is_zero());
        // cancelled terms are not kept around
        CHECK(z.terms().empty());
    }
    SUBCASE("multiplication adds exponents") {
        CHECK(Laurent::q_power(2) * Laurent::q_power(-5) == Laurent::q_power(-3));
        Laurent p = (q2 - one) * (q2 + one);  // q^4 - 1
        CHECK(p.coeff(4) == 1);
        CHECK(p.coeff(0) == -1);
        CHECK(p.coeff(2) == 0);
    }
    SUBCASE("multiplying by zero") {
        CHECK((q2 * Laurent{}).is_zero());
    }
}

TEST_CASE("laurent q := 1 specialization") {
    Laurent p = Laurent::q_power(2) - Laurent::one();
    CHECK(p.at_q1().is_zero());
    Laurent s = Laurent::monomial(3, -1) + Laurent::monomial(4, 7);
    CHECK(s.at_q1() == Laurent::constant(7));
}

TEST_CASE("laurent printing") {
    CHECK(Laurent{}.str() == "0");
    CHECK(Laurent::one().str() == "1");
    CHECK(Laurent::constant(-2).str() == "-2");
    CHECK(Laurent::q_power(1).str() == "q");
    CHECK(Laurent::q_power(-1).str() == "q^-1");
    CHECK(Laurent::monomial(2, 2).str() == "2*q^2");
    CHECK(Laurent::monomial(-1, 1).str() == "-q");
    CHECK((Laurent::q_power(2) - Laurent::one()).str() == "q^2 - 1");
    CHECK((Laurent::one() - Laurent::q_power(2)).str() == "-q^2 + 1");
}

TEST_CASE("laurent equality is exact") {
    CHECK(Laurent::q_power(2) == Laurent::q_power(2));
    CHECK(Laurent::q_power(2) != Laurent::constant(1));
    CHECK(Laurent::monomial(1, 0) == Laurent::one());
}
