#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "oracles.hpp"
#include "slq/cyclo.hpp"
#include "slq/error.hpp"

using slq::Cyclotomic;
using slq::q_power;

namespace {

Cyclotomic lam(int ell, long k = 1) { return q_power(ell, k); }

Cyclotomic random_element(std::mt19937& rng, int ell) {
    std::uniform_int_distribution<int> coeff(-4, 4), den(1, 3), deg(0, 2 * ell);
    Cyclotomic x(ell);
    for (int i = 0; i < 4; ++i)
        x += lam(ell, deg(rng)) * Cyclotomic(ell, slq::Rational(coeff(rng), den(rng)));
    return x;
}

} // namespace

TEST(Cyclotomic, CyclotomicRelation) {
    EXPECT_EQ(lam(3) + lam(3, 2), Cyclotomic(3, -1));
    EXPECT_EQ(lam(3) * lam(3, 2), Cyclotomic(3, 1));
    for (int ell : {3, 5, 7, 9}) {
        Cyclotomic sum(ell);
        for (int k = 0; k < ell; ++k)
            sum += lam(ell, k);
        EXPECT_TRUE(sum.is_zero()) << ell;
        EXPECT_EQ(lam(ell, ell), Cyclotomic(ell, 1));
    }
}

TEST(Cyclotomic, Inverse) {
    EXPECT_EQ(lam(5).inv(), lam(5, 4));
    std::mt19937 rng(7);
    for (int ell : {3, 5, 7}) {
        for (int i = 0; i < 50; ++i) {
            Cyclotomic x = random_element(rng, ell);
            if (x.is_zero())
                continue;
            EXPECT_EQ(x * x.inv(), Cyclotomic(ell, 1));
        }
    }
    EXPECT_THROW(Cyclotomic(3).inv(), slq::division_by_zero);
    EXPECT_THROW(Cyclotomic(3, 1) / Cyclotomic(3), slq::division_by_zero);
}

TEST(Cyclotomic, MixedFieldsAreRejected) {
    EXPECT_THROW(lam(3) + lam(5), slq::usage_error);
    EXPECT_THROW(lam(3) * lam(5), slq::usage_error);
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements) {
    std::mt19937 rng(11);
    for (int ell : {3, 5}) {
        for (int i = 0; i < 40; ++i) {
            Cyclotomic x = random_element(rng, ell), y = random_element(rng, ell), z = random_element(rng, ell);
            EXPECT_EQ(x * (y + z), x * y + x * z);
            EXPECT_EQ((x * y) * z, x * (y * z));
            EXPECT_EQ(x - x, Cyclotomic(ell));
        }
    }
}

TEST(Cyclotomic, EvaluationMatchesComplexRoot) {
    std::mt19937 rng(3);
    for (int ell : {3, 5, 7}) {
        for (int i = 0; i < 20; ++i) {
            Cyclotomic x = random_element(rng, ell), y = random_element(rng, ell);
            EXPECT_TRUE(oracle::close((x * y).evaluate(), x.evaluate() * y.evaluate()));
        }
        EXPECT_TRUE(oracle::close(lam(ell).evaluate(), oracle::q(ell)));
    }
}

TEST(QPowers, Examples) {
    EXPECT_EQ(q_power(3, -2), lam(3));
    EXPECT_EQ(slq::q_half_power(3, 2), lam(3));
    EXPECT_EQ(slq::q_half_power(3, 3), Cyclotomic(3, -1));
}

TEST(QPowers, HalfPowerBranch) {
    for (int ell : {3, 5, 7, 9}) {
        const Cyclotomic s = slq::q_half_power(ell, 1);
        EXPECT_EQ(s * s, lam(ell));
        EXPECT_EQ(s.pow(ell), Cyclotomic(ell, -1));
        EXPECT_EQ(s, -lam(ell, (ell + 1) / 2));
        EXPECT_TRUE(oracle::close(s.evaluate(), oracle::s(ell)));
        for (long k = -2 * ell; k <= 2 * ell; ++k)
            EXPECT_EQ(slq::q_half_power(ell, 2 * k), q_power(ell, k));
    }
}

TEST(QPowers, HalfPowerRecognition) {
    for (int ell : {3, 5}) {
        for (long j = -ell + 1; j <= ell; ++j) {
            auto got = slq::as_half_power(slq::q_half_power(ell, j));
            ASSERT_TRUE(got.has_value());
            EXPECT_EQ(*got, j);
        }
        EXPECT_FALSE(slq::as_half_power(Cyclotomic(ell, 2)).has_value());
    }
    EXPECT_EQ(slq::to_half_power_string(slq::q_half_power(3, -1)), "q^(-1/2)");
    EXPECT_EQ(slq::to_half_power_string(slq::q_half_power(3, 1)), "q^(1/2)");
}

TEST(QBinomial, Examples) {
    EXPECT_TRUE(slq::q_binomial(3, 3, 1, -2).is_zero());
    EXPECT_EQ(slq::q_binomial(3, 4, 1, -2), Cyclotomic(3, 1));
    for (int m = 0; m < 10; ++m)
        EXPECT_EQ(slq::q_binomial(3, m, 0, -2), Cyclotomic(3, 1));
    EXPECT_TRUE(slq::q_binomial(3, 2, 5, -2).is_zero());
}

TEST(QBinomial, AgreesWithGaussianPolynomialOracle) {
    for (int ell : {3, 5, 7}) {
        for (long exponent : {-2L, 1L, 2L}) {
            const std::complex<double> p = std::pow(oracle::q(ell), static_cast<double>(exponent));
            for (int m = 0; m <= 12; ++m)
                for (int r = 0; r <= m; ++r) {
                    const auto expected = oracle::evaluate(oracle::gaussian_binomial(m, r), p);
                    EXPECT_TRUE(oracle::close(slq::q_binomial(ell, m, r, exponent).evaluate(), expected))
                        << "ell " << ell << " m " << m << " r " << r << " exponent " << exponent;
                }
        }
    }
}

TEST(ScalarText, ParsesExamples) {
    const int ell = 3;
    EXPECT_EQ(slq::parse_scalar("1 - q^2 + (1/2)q", ell),
              Cyclotomic(ell, 1) - lam(ell, 2) + lam(ell) * slq::Rational(1, 2));
    EXPECT_EQ(slq::parse_scalar("q^(1/2)", ell), slq::q_half_power(ell, 1));
    EXPECT_EQ(slq::parse_scalar("q^(-1/2)", ell), slq::q_half_power(ell, -1));
    EXPECT_EQ(slq::parse_scalar("q^(-1)", ell), lam(ell, 2));
    EXPECT_EQ(slq::parse_scalar("-(q - 1)(q - 1)", ell), -((lam(ell) - Cyclotomic(ell, 1)) * (lam(ell) - Cyclotomic(ell, 1))));
    EXPECT_EQ(slq::parse_scalar("0", ell), Cyclotomic(ell));
}

TEST(ScalarText, RoundTrip) {
    std::mt19937 rng(5);
    for (int ell : {3, 5, 7}) {
        for (int i = 0; i < 60; ++i) {
            Cyclotomic x = random_element(rng, ell);
            EXPECT_EQ(slq::parse_scalar(x.to_string(), ell), x) << x.to_string();
            EXPECT_EQ(slq::parse_scalar(slq::to_half_power_string(x), ell), x);
        }
        for (long j = -2 * ell; j <= 2 * ell; ++j) {
            const Cyclotomic s = slq::q_half_power(ell, j);
            EXPECT_EQ(slq::parse_scalar(slq::to_half_power_string(s), ell), s);
        }
    }
}

TEST(ScalarText, SymmetricExponentDisplay) {
    EXPECT_EQ(lam(3, 2).to_string(), "q^(-1)");
    EXPECT_EQ((-lam(3, 2)).to_string(), "-q^(-1)");
    EXPECT_EQ(lam(5, 2).to_string(), "q^2");
    EXPECT_EQ(lam(5, 3).to_string(), "q^(-2)");
}

TEST(ScalarText, ErrorsCarryPosition) {
    try {
        slq::parse_scalar("1 + * q", 3);
        FAIL() << "expected a parse error";
    } catch (const slq::parse_error& e) {
        EXPECT_EQ(e.position(), 4U);
    }
    EXPECT_THROW(slq::parse_scalar("q^", 3), slq::parse_error);
    EXPECT_THROW(slq::parse_scalar("(1/0)", 3), slq::parse_error);
    EXPECT_THROW(slq::parse_scalar("1 q q)", 3), slq::parse_error);
}
