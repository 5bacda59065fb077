#include <doctest.h>

#include "bow/kclass.hpp"
#include "golden_data.hpp"

using namespace bow;

TEST_CASE("ring operations") {
    KClass X(2);
    X.add_monomial(1, 0, {1, -1}, 2);
    X.add_monomial(0, -1, {0, 0}, 1);
    CHECK((X - X).is_zero());
    CHECK(X.dual().dual() == X);
    CHECK(X.swap_u(1).swap_u(1) == X);
    CHECK(X.monomial_count() == 3);
    CHECK((X * 3).coeff({1, 0, {1, -1}}) == 6);

    KClass Y(3);
    CHECK_THROWS_AS(X + Y, std::invalid_argument);
    CHECK_THROWS_AS(X.swap_u(2), std::invalid_argument);

    // cancellation removes stored terms
    KClass Z(2);
    Z.add_monomial(1, 0, {1, -1}, -2);
    CHECK((X + Z).coeff({1, 0, {1, -1}}) == 0);
    CHECK((X + Z).terms().size() == 1);
}

TEST_CASE("gamma sign rule") {
    // negative t2 weight dominates
    CHECK(gamma_sign({5, -1, {1, -1}}) == -1);
    CHECK(gamma_sign({-5, 2, {0, 0}}) == 1);
    // b = 0: sign of the first nonzero u-exponent
    CHECK(gamma_sign({0, 0, {-1, 1}}) == -1);  // u2 u1^{-1}
    CHECK(gamma_sign({0, 0, {1, -1}}) == 1);   // u1 u2^{-1}
    CHECK(gamma_sign({7, 0, {-1, 0, 1}}) == -1);
    // b = 0, w = 0: sign of a
    CHECK(gamma_sign({3, 0, {0, 0}}) == 1);
    CHECK(gamma_sign({-3, 0, {0}}) == -1);
    CHECK(gamma_sign({0, 0, {0}}) == 0);
    CHECK_THROWS_AS(gamma_sign({0, 0, {2, -2}}), std::invalid_argument);
    CHECK_THROWS_AS(gamma_sign({0, 0, {1, 0}}), std::invalid_argument);
}

TEST_CASE("euler linear forms") {
    KClass X(2);
    X.add_monomial(2, 0, {-1, 1});
    auto forms = euler_linear_forms(X);
    REQUIRE(forms.size() == 1);
    CHECK(forms[0].str() == "2*eps1-a1+a2");

    KClass Y(2);
    Y.add_monomial(3, 1, {-1, 1}, 2);
    auto two = euler_linear_forms(Y);
    REQUIRE(two.size() == 2);
    CHECK(two[0].str() == two[1].str());
    CHECK(two[0].str() == "3*eps1+eps2-a1+a2");

    KClass neg(1);
    neg.add_monomial(1, 0, {0}, -1);
    CHECK_THROWS_AS(euler_linear_forms(neg), std::invalid_argument);
}

TEST_CASE("symplectic symmetry of the golden classes") {
    for (const KClass& cls : testdata::tangent_classes_03()) {
        CHECK(has_symplectic_symmetry(cls));
        CHECK(cls.monomial_count() == 6);
    }
    KClass broken(1);
    broken.add_monomial(1, 1, {0});
    CHECK_FALSE(has_symplectic_symmetry(broken));
}
