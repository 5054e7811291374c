#include <doctest.h>

#include <cmath>
#include <numbers>

#include "decocat/interference.hpp"
#include "decocat/numerics.hpp"

using namespace decocat;
using namespace decocat::interference;

namespace {

complex random_disk_point(numerics::RngEngine& rng)
{
    return std::polar(std::sqrt(numerics::uniform_sample(rng)), 2.0 * std::numbers::pi * numerics::uniform_sample(rng));
}

}  // namespace

TEST_CASE("coherent overlap")
{
    CHECK(coherent_overlap(0.0) == complex(1.0, 0.0));
    CHECK(coherent_overlap(0.01).real() == doctest::Approx(0.99980001999866673).epsilon(1e-14));
    CHECK(coherent_overlap(3.4).real() == doctest::Approx(9.1014707644879441e-11).epsilon(1e-12));
    // Depends on |alpha| only.
    CHECK(coherent_overlap({0.6, 0.8}).real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    CHECK(coherent_overlap({0.6, 0.8}).imag() == 0.0);
}

TEST_CASE("two-qubit coefficients")
{
    SUBCASE("orthogonal alternatives") {
        const auto c = two_qubit_coefficients({0.0, 0.0});
        CHECK(c.c00 == complex(1.0));
        CHECK(c.c01 == complex(0.0));
        CHECK(c.c10 == complex(0.0));
        CHECK(c.c11 == 1.0);
        CHECK(c.norm2 == 2.0);
    }
    SUBCASE("identical alternatives") {
        const auto c = two_qubit_coefficients({1.0, 1.0});
        CHECK(c.c00 == complex(2.0));
        CHECK(std::abs(c.c01) == 0.0);
        CHECK(std::abs(c.c10) == 0.0);
        CHECK(c.c11 == 0.0);
        CHECK(c.norm2 == 4.0);
    }
    SUBCASE("one-sided overlap") {
        const auto c = two_qubit_coefficients({0.5, 0.0});
        CHECK(c.c00 == complex(1.0));
        CHECK(c.c01 == complex(0.5));
        CHECK(c.c10 == complex(0.0));
        CHECK(c.c11 == doctest::Approx(0.86602540378443865).epsilon(1e-15));
        CHECK(c.norm2 == 2.0);
    }
    SUBCASE("invalid overlap") {
        CHECK_THROWS_AS(two_qubit_coefficients({1.1, 0.0}), std::invalid_argument);
        CHECK_THROWS_AS(two_qubit_coefficients({0.0, complex(0.8, 0.8)}), std::invalid_argument);
        CHECK_NOTHROW(two_qubit_coefficients({1.0 + 5e-13, 0.0}));
    }
}

TEST_CASE("delta")
{
    CHECK(delta({0.0, 0.0}) == 0.25);
    CHECK(delta({1.0, 0.3}) == 0.0);
    CHECK(delta({1.0, complex(0.0, -0.7)}) == 0.0);
    CHECK(delta({0.5, 0.0}) == doctest::Approx(0.1875).epsilon(1e-15));
    CHECK_THROWS_AS(delta({1.0, -1.0}), DegenerateStateError);
    CHECK_THROWS_AS(delta({complex(0.0, 1.0), complex(0.0, 1.0)}), DegenerateStateError);
    CHECK_THROWS_AS(delta({2.0, 0.0}), std::invalid_argument);
}

TEST_CASE("schmidt summary")
{
    SUBCASE("product state") {
        const auto s = schmidt_summary(0.0);
        CHECK(s.lambda0 == 1.0);
        CHECK(s.lambda1 == 0.0);
        CHECK(s.K == 1.0);
        CHECK(s.V == 1.0);
    }
    SUBCASE("maximally entangled") {
        const auto s = schmidt_summary(0.25);
        CHECK(s.lambda0 == 0.5);
        CHECK(s.lambda1 == 0.5);
        CHECK(s.K == 2.0);
        CHECK(s.V == 0.0);
    }
    SUBCASE("intermediate") {
        const auto s = schmidt_summary(0.1875);
        CHECK(s.lambda0 == doctest::Approx(0.75).epsilon(1e-15));
        CHECK(s.lambda1 == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(s.K == doctest::Approx(1.6).epsilon(1e-15));
        CHECK(s.V == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(s.V == doctest::Approx(std::sqrt((2.0 - s.K) / s.K)).epsilon(1e-14));
    }
    SUBCASE("boundary slack is clamped") {
        CHECK(schmidt_summary(-5e-13).delta == 0.0);
        CHECK(schmidt_summary(0.25 + 5e-13).delta == 0.25);
        CHECK(schmidt_summary(0.25 + 5e-13).V == 0.0);
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(schmidt_summary(-1e-6), std::domain_error);
        CHECK_THROWS_AS(schmidt_summary(0.26), std::domain_error);
        CHECK_THROWS_AS(schmidt_summary(std::nan("")), std::domain_error);
    }
}

TEST_CASE("environment visibility")
{
    CHECK(environment_visibility(1.0) == 1.0);
    CHECK(environment_visibility(0.0) == 0.0);
    CHECK(environment_visibility(std::exp(-2.2)) == doctest::Approx(0.11080315836233386).epsilon(1e-14));
    CHECK(environment_visibility(complex(0.0, -0.3)) == doctest::Approx(0.3));
}

TEST_CASE("property: identities over random overlap pairs")
{
    auto rng = numerics::make_stream(17, 0);
    for (int i = 0; i < 5000; ++i) {
        const OverlapPair pair{random_disk_point(rng), random_disk_point(rng)};
        const auto c = two_qubit_coefficients(pair);
        CHECK(c.c11 >= 0.0);
        const double coeff_norm = std::norm(c.c00) + std::norm(c.c01) + std::norm(c.c10) + c.c11 * c.c11;
        CHECK(std::abs(coeff_norm - (2.0 + 2.0 * (pair.q1 * pair.q2).real())) <= 1e-12);

        if (c.norm2 < 1e-3) {
            continue;
        }
        // Determinant route for Delta against the closed form.
        const complex det = c.c00 * c.c11 - c.c01 * c.c10;
        const double d = delta(pair);
        CHECK(std::abs(std::norm(det) / (c.norm2 * c.norm2) - d) <= 1e-12);
        CHECK(d >= 0.0);
        CHECK(d <= 0.25);

        const auto s = schmidt_summary(d);
        CHECK(std::abs(s.lambda0 + s.lambda1 - 1.0) <= 1e-12);
        CHECK(s.lambda0 >= s.lambda1);
        CHECK(s.lambda1 >= 0.0);
        CHECK(std::abs(1.0 / (s.lambda0 * s.lambda0 + s.lambda1 * s.lambda1) - s.K) <= 1e-12);
        CHECK(std::abs(s.V - (s.lambda0 - s.lambda1)) <= 1e-12);
        CHECK(std::abs(s.V * s.V - (1.0 - 4.0 * s.delta)) <= 1e-12);
        CHECK(s.K >= 1.0);
        CHECK(s.K <= 2.0);
    }
}

TEST_CASE("property: distinguishable system alternatives give V = |q2|")
{
    for (double q1 : {0.0, 1e-9, -1e-8, 1e-8}) {
        for (int i = 0; i <= 100; ++i) {
            const double q2 = i / 100.0;
            const double v = schmidt_summary(delta({q1, q2})).V;
            CHECK(std::abs(v - environment_visibility(q2)) <= 2e-8);
        }
    }
}

TEST_CASE("property: monotone in |q2| at q1 = 0")
{
    double last_v = -1.0;
    double last_k = 3.0;
    for (int i = 0; i <= 200; ++i) {
        const auto s = schmidt_summary(delta({0.0, i / 200.0}));
        CHECK(s.V > last_v);
        CHECK(s.K < last_k);
        last_v = s.V;
        last_k = s.K;
    }
}
