#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "trslab/char_sums.hpp"

using namespace trslab;

namespace {

// Trace by Frobenius powers and characters from first principles.
Complex chi_ref(const Field& f, Elem a, Elem x) {
    Elem t{0}, y = f.mul(a, x);
    for (std::uint32_t i = 0; i < f.m(); ++i, y = f.pow(y, f.p())) t = f.add(t, y);
    return std::polar(1.0, 2 * std::numbers::pi * t.v / f.p());
}

Complex psi_ref(const Field& f, std::uint64_t i, Elem x) {
    if (x.is_zero()) return 0;
    std::uint64_t j = 0;
    for (Elem y = f.one(); y != x; y = f.mul(y, f.primitive())) ++j;
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i * j % (f.q() - 1)) / (f.q() - 1));
}

Elem cube(const Field& f, Elem x) { return f.mul(x, f.mul(x, x)); }

}  // namespace

TEST(CharSums, CharacterValues) {
    for (const char* d : {"8", "9", "7", "16"}) {
        const Field f = Field::parse(d);
        for (std::uint32_t x = 0; x < f.q(); ++x) {
            EXPECT_EQ(additive_character(f, Elem{0}, Elem{x}), Complex(1, 0));
            for (std::uint32_t a = 0; a < f.q(); ++a) {
                const Complex z = additive_character(f, Elem{a}, Elem{x});
                ASSERT_NEAR(std::abs(z), 1.0, 1e-9);
                ASSERT_TRUE(near(z, chi_ref(f, Elem{a}, Elem{x}), 1e-9));
            }
            for (std::uint64_t i = 0; i + 1 < f.q(); ++i) {
                ASSERT_TRUE(near(multiplicative_character(f, i, Elem{x}), psi_ref(f, i, Elem{x}), 1e-9));
            }
        }
        EXPECT_EQ(multiplicative_character(f, 0, Elem{0}), Complex(0, 0));
    }
    const Field f8 = Field::parse("8");
    for (std::uint32_t x = 0; x < 8; ++x) {
        const Complex z = additive_character(f8, Elem{1}, Elem{x});
        EXPECT_EQ(z, Complex(f8.trace(Elem{x}).v ? -1.0 : 1.0, 0.0));
    }
}

TEST(CharSums, AdditiveOrthogonality) {
    for (const char* d : {"4", "9", "16", "25", "27"}) {
        const Field f = Field::parse(d);
        for (std::uint32_t a = 1; a < f.q(); ++a) {
            Complex s = 0;
            for (std::uint32_t x = 0; x < f.q(); ++x) s += additive_character(f, Elem{a}, Elem{x});
            EXPECT_TRUE(near(s, 0, sum_tolerance(f)));
        }
    }
}

TEST(CharSums, GaussSums) {
    for (const char* d : {"9", "16", "25"}) {
        const Field f = Field::parse(d);
        const double tol = sum_tolerance(f);
        for (std::uint64_t i = 1; i + 1 < f.q(); ++i) {
            for (std::uint32_t b = 1; b < f.q(); ++b) {
                EXPECT_NEAR(std::abs(gauss_sum(f, i, Elem{b})), std::sqrt(f.q()), tol);
            }
        }
        for (std::uint32_t b = 1; b < f.q(); ++b) EXPECT_TRUE(near(gauss_sum(f, 0, Elem{b}), -1, tol));
    }
    EXPECT_NEAR(std::abs(gauss_sum(Field::parse("9"), 4, Elem{1})), 3.0, 1e-6);

    // G(psi, chi_{ab}) = conj(psi(a)) G(psi, chi_b).
    const Field f = Field::parse("25");
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint32_t> nz(1, f.q() - 1);
    for (int t = 0; t < 50; ++t) {
        const Elem a{nz(rng)}, b{nz(rng)};
        const std::uint64_t i = nz(rng) % (f.q() - 1);
        EXPECT_TRUE(near(gauss_sum(f, i, f.mul(a, b)), std::conj(multiplicative_character(f, i, a)) * gauss_sum(f, i, b),
                         sum_tolerance(f)));
    }
}

TEST(CharSums, MonomialSums) {
    const Field f8 = Field::parse("8");
    EXPECT_TRUE(near(monomial_sum(f8, Elem{1}, Elem{0}, 3), 0, 1e-9));
    for (const char* d : {"8", "13", "16"}) {
        const Field f = Field::parse(d);
        for (std::uint32_t a = 1; a < f.q(); ++a) {
            EXPECT_TRUE(near(monomial_sum(f, Elem{a}, Elem{0}, 1), 0, sum_tolerance(f)));
        }
    }
    const Field f16 = Field::parse("16");
    EXPECT_DOUBLE_EQ(monomial_sum_bound(f16, 3), 8.0);
    for (std::uint32_t a = 1; a < 16; ++a) {
        for (std::uint32_t b = 0; b < 16; ++b) {
            EXPECT_LE(std::abs(monomial_sum(f16, Elem{a}, Elem{b}, 3)), 8.0 + 1e-9);
        }
    }
    EXPECT_THROW(monomial_sum(f16, Elem{0}, Elem{1}, 3), std::invalid_argument);
}

TEST(CharSums, QuadraticSumOddClosedForm) {
    const Field f9 = Field::parse("9");
    const Complex g = gauss_sum(f9, 4, Elem{1});
    EXPECT_TRUE(near(quadratic_sum_closed_odd(f9, f9.one(), Elem{0}, Elem{0}), g, 1e-9));
    std::mt19937 rng(11);
    for (const char* d : {"9", "5", "27", "49"}) {
        const Field f = Field::parse(d);
        std::uniform_int_distribution<std::uint32_t> any(0, f.q() - 1), nz(1, f.q() - 1);
        for (int t = 0; t < 100; ++t) {
            const Elem a2{nz(rng)}, a1{any(rng)}, a0{any(rng)};
            ASSERT_TRUE(near(quadratic_sum_closed_odd(f, a2, a1, a0), quadratic_sum(f, f.one(), a2, a1, a0),
                             sum_tolerance(f)))
                << d;
        }
    }
}

TEST(CharSums, QuadraticSumEvenConditionIsExact) {
    // Every (b, a2, a1, a0) with b, a2 != 0 over GF(8) and GF(16).
    for (const char* d : {"8", "16"}) {
        const Field f = Field::parse(d);
        for (std::uint32_t b = 1; b < f.q(); ++b) {
            for (std::uint32_t a2 = 1; a2 < f.q(); ++a2) {
                for (std::uint32_t a1 = 0; a1 < f.q(); ++a1) {
                    for (std::uint32_t a0 = 0; a0 < f.q(); a0 += 3) {
                        const Elem eb{b}, e2{a2}, e1{a1}, e0{a0};
                        ASSERT_TRUE(near(quadratic_sum_closed_even(f, eb, e2, e1, e0), quadratic_sum(f, eb, e2, e1, e0),
                                         sum_tolerance(f)));
                    }
                }
            }
        }
    }
    const Field f8 = Field::parse("8");
    // b a2 + b^2 a1^2 != 0 gives 0.
    EXPECT_TRUE(near(quadratic_sum_closed_even(f8, Elem{1}, Elem{1}, Elem{0}, Elem{0}), 0, 1e-9));
    EXPECT_TRUE(near(quadratic_sum(f8, Elem{1}, Elem{1}, Elem{0}, Elem{0}), 0, 1e-9));
}

TEST(CharSums, QuadricCounts) {
    const Field f5 = Field::parse("5");
    EXPECT_EQ(count_quadric(f5, Elem{1}, Elem{1}, Elem{0}), 9);
    EXPECT_EQ(count_quadric_brute(f5, Elem{1}, Elem{1}, Elem{0}), 9);
    std::mt19937 rng(5);
    for (const char* d : {"5", "9", "13", "17"}) {
        const Field f = Field::parse(d);
        std::uniform_int_distribution<std::uint32_t> any(0, f.q() - 1), nz(1, f.q() - 1);
        for (int t = 0; t < 100; ++t) {
            const Elem a1{nz(rng)}, a2{nz(rng)}, b{any(rng)};
            ASSERT_EQ(count_quadric(f, a1, a2, b), count_quadric_brute(f, a1, a2, b)) << d;
            if (!b.is_zero() && f.quadratic_character(f.neg(f.mul(a1, a2))) == 1) {
                EXPECT_EQ(count_quadric(f, a1, a2, b), static_cast<std::int64_t>(f.q()) - 1);
            }
        }
    }
}

TEST(CharSums, CubicSums) {
    const Field f8 = Field::parse("8");
    for (std::uint32_t a = 1; a < 8; ++a) EXPECT_TRUE(near(cubic_sum(f8, Elem{a}), 0, 1e-9));
    const Field f16 = Field::parse("16");
    for (std::uint32_t a = 1; a < 16; ++a) {
        if (f16.log(Elem{a}) % 3 == 0) EXPECT_TRUE(near(cubic_sum(f16, Elem{a}), -8, 1e-9));
    }
    for (const char* d : {"4", "16", "64", "256"}) {
        const Field f = Field::parse(d);
        for (std::uint32_t a = 1; a < f.q(); ++a) {
            ASSERT_TRUE(near(cubic_sum(f, Elem{a}), cubic_sum_brute(f, Elem{a}), sum_tolerance(f))) << d << " " << a;
        }
    }
    EXPECT_THROW(cubic_sum(Field::parse("9"), Elem{1}), FieldError);
}

TEST(CharSums, SurfaceCubicCounts) {
    const Field f8 = Field::parse("8");
    for (std::uint32_t a = 1; a < 8; ++a) EXPECT_EQ(count_surface_cubic(f8, Elem{a}), 6);
    const Field f16 = Field::parse("16");
    for (std::uint32_t a = 1; a < 16; ++a) {
        if (f16.log(Elem{a}) % 3 != 0) EXPECT_EQ(count_surface_cubic(f16, Elem{a}), 18);
    }
    for (const char* d : {"4", "8", "16", "32", "64"}) {
        const Field f = Field::parse(d);
        for (std::uint32_t a = 1; a < f.q(); ++a) {
            ASSERT_EQ(count_surface_cubic(f, Elem{a}), count_surface_cubic_brute(f, Elem{a})) << d << " " << a;
        }
    }
}

TEST(CharSums, FermatCubicBound) {
    const Field f8 = Field::parse("8");
    EXPECT_EQ(count_fermat_cubic(f8, Elem{0}).count, 8);  // x -> x^3 permutes GF(8)
    const Field f16 = Field::parse("16");
    for (std::uint32_t b = 0; b < 16; ++b) {
        const auto res = count_fermat_cubic(f16, Elem{b});
        EXPECT_GE(res.count, 6);
        EXPECT_DOUBLE_EQ(res.lower_bound, 6.0);
    }
}

TEST(CharSums, FermatCubicNonzeroCubesOverGf16) {
    // A nonzero cube b has only the six solutions with x = 0 or y = 0, so it
    // is not a sum of two nonzero cubes.
    const Field f = Field::parse("16");
    int without = 0;
    for (std::uint32_t b = 0; b < 16; ++b) {
        const auto res = count_fermat_cubic(f, Elem{b});
        const bool b_is_cube = b != 0 && f.log(Elem{b}) % 3 == 0;
        EXPECT_EQ(!res.nonzero_representation.has_value(), b_is_cube) << b;
        if (b_is_cube) EXPECT_EQ(res.count, 6);
        if (res.nonzero_representation) {
            const auto [x, y] = *res.nonzero_representation;
            EXPECT_EQ(f.add(cube(f, x), cube(f, y)), Elem{b});
        }
        without += !res.nonzero_representation;
    }
    EXPECT_EQ(without, 5);
}

TEST(CharSums, FermatCubicRepresentationForLargerFields) {
    for (const char* d : {"32", "64", "25"}) {
        const Field f = Field::parse(d);
        for (std::uint32_t b = 0; b < f.q(); ++b) EXPECT_TRUE(count_fermat_cubic(f, Elem{b}).nonzero_representation) << d;
    }
}

TEST(CharSums, MultiplicativePolynomialSum) {
    const Field f = Field::parse("13");
    const std::uint64_t eta = 6;
    // (x - 1)(x - 2): d = 2, |sum| <= sqrt(q).
    const std::vector<Elem> poly{Elem{2}, f.neg(Elem{3}), f.one()};
    EXPECT_LE(std::abs(multiplicative_poly_sum(f, eta, f.one(), poly)), std::sqrt(13.0) + 1e-9);
    // Linear polynomial: eta summed over all of F_q vanishes.
    const std::vector<Elem> lin{Elem{5}, Elem{1}};
    EXPECT_TRUE(near(multiplicative_poly_sum(f, eta, Elem{3}, lin), 0, 1e-9));
}
