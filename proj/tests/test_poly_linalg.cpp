#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "trslab/determinants.hpp"
#include "trslab/matrix.hpp"
#include "trslab/poly.hpp"

using namespace trslab;

namespace {

using Rng = std::mt19937_64;

// Laplace expansion along the first row.
Elem cofactor_det(const Field& f, const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Elem acc{0};
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t c = 0, cc = 0; c < n; ++c) {
                if (c != j) minor(r - 1, cc++) = m(r, c);
            }
        }
        Elem term = f.mul(m(0, j), cofactor_det(f, minor));
        acc = j % 2 ? f.sub(acc, term) : f.add(acc, term);
    }
    return acc;
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Elem{pick(rng)};
    }
    return m;
}

std::vector<Elem> distinct(const Field& f, std::size_t n, Rng& rng) {
    auto all = f.elements();
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(n);
    return all;
}

Elem naive_pow(const Field& f, Elem x, std::size_t e) {
    Elem r = f.one();
    for (std::size_t i = 0; i < e; ++i) r = f.mul(r, x);
    return r;
}

}  // namespace

TEST(Poly, Evaluation) {
    const Field f = Field::parse("8");
    for (std::uint32_t x = 0; x < 8; ++x) EXPECT_EQ(eval(f, Poly(), Elem{x}), Elem{0});
    const Poly top = Poly::monomial(f.one(), 7);
    for (std::uint32_t x = 1; x < 8; ++x) EXPECT_EQ(eval(f, top, Elem{x}), f.one());
    // x^3 + x + 1 by Horner against repeated multiplication.
    const Poly p({f.one(), f.one(), Elem{0}, f.one()});
    for (std::uint32_t x = 0; x < 8; ++x) {
        const Elem e{x};
        EXPECT_EQ(eval(f, p, e), f.add(f.add(naive_pow(f, e, 3), e), f.one()));
    }
}

TEST(Poly, InterpolationRecoversPolynomials) {
    const Field f = Field::parse("17");
    const std::vector<Elem> pts{Elem{1}, Elem{4}, Elem{9}, Elem{12}, Elem{16}};
    std::vector<Elem> constant(5, Elem{7});
    EXPECT_EQ(interpolate(f, pts, constant), Poly::constant(Elem{7}));

    const Poly cubic({Elem{3}, Elem{0}, Elem{5}, Elem{11}});
    std::vector<Elem> vals;
    for (auto x : pts) vals.push_back(eval(f, cubic, x));
    EXPECT_EQ(interpolate(f, pts, vals), cubic);

    const Field g = Field::parse("16");
    Rng rng(1);
    std::uniform_int_distribution<std::uint32_t> pick(0, 15);
    std::vector<Elem> u(16);
    for (auto& x : u) x = Elem{pick(rng)};
    const auto all = g.elements();
    const Poly gp = interpolate(g, all, u);
    for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(eval(g, gp, all[i]), u[i]);

    EXPECT_THROW(interpolate(f, std::vector<Elem>{Elem{1}, Elem{1}}, std::vector<Elem>{Elem{0}, Elem{1}}),
                 std::invalid_argument);
}

TEST(Poly, ElementarySymmetricMatchesNaiveExpansion) {
    const Field f = Field::parse("16");
    EXPECT_EQ(elementary_symmetric(f, {}), std::vector<Elem>{f.one()});
    const Elem a{5};
    EXPECT_EQ(elementary_symmetric(f, std::vector<Elem>{a}), (std::vector<Elem>{f.neg(a), f.one()}));
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        const auto xs = distinct(f, 5, rng);
        Poly prod = Poly::constant(f.one());
        for (auto x : xs) prod = mul(f, prod, Poly({f.neg(x), f.one()}));
        const auto s = elementary_symmetric(f, xs);
        ASSERT_EQ(s.size(), 6u);
        for (std::size_t i = 0; i <= 5; ++i) EXPECT_EQ(s[i], prod.coeff(i));
    }
}

TEST(Poly, PowerSumIdentity) {
    for (const char* d : {"4", "5", "8", "9", "16", "25", "27", "32"}) {
        const Field f = Field::parse(d);
        for (std::uint64_t j = 0; j <= 3 * (f.q() - 1); ++j) {
            Elem s{0};
            for (auto a : f.elements()) s = f.add(s, f.pow(a, j));
            const bool special = j != 0 && j % (f.q() - 1) == 0;
            ASSERT_EQ(s, special ? f.neg(f.one()) : Elem{0}) << d << " j=" << j;
        }
    }
}

TEST(Matrix, DeterminantAgainstCofactorExpansion) {
    EXPECT_EQ(det(Field::parse("7"), Matrix::identity(4)), Elem{1});
    for (const char* d : {"17", "16", "9"}) {
        const Field f = Field::parse(d);
        Rng rng(3);
        for (int t = 0; t < 50; ++t) {
            const Matrix m = random_matrix(f, 4, 4, rng);
            ASSERT_EQ(det(f, m), cofactor_det(f, m)) << d;
        }
        Matrix rep = random_matrix(f, 4, 4, rng);
        for (std::size_t i = 0; i < 4; ++i) rep(i, 3) = rep(i, 1);
        EXPECT_EQ(det(f, rep), Elem{0});
    }
}

TEST(Matrix, RankNullspaceAndProducts) {
    const Field f = Field::parse("13");
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        const Matrix m = random_matrix(f, 3, 6, rng);
        const Matrix ns = nullspace(f, m);
        EXPECT_EQ(rank(f, m) + ns.rows(), 6u);
        EXPECT_TRUE(is_zero(multiply(f, m, ns.transpose())));
    }
    const Matrix a = random_matrix(f, 3, 3, rng);
    EXPECT_EQ(multiply(f, a, Matrix::identity(3)), a);
    const std::vector<Elem> v{Elem{1}, Elem{2}, Elem{3}};
    const auto av = apply(f, a, v);
    for (std::size_t i = 0; i < 3; ++i) {
        Elem s{0};
        for (std::size_t j = 0; j < 3; ++j) s = f.add(s, f.mul(a(i, j), v[j]));
        EXPECT_EQ(av[i], s);
    }
}

TEST(Determinants, VandermondeVariants) {
    const Field f5 = Field::parse("5");
    EXPECT_EQ(vandermonde(f5, std::vector<Elem>{Elem{3}}), f5.one());
    // Rows {1, x^2} at (1, 2): det [[1, 1], [1, 4]] = 3 = V (1 + 2).
    const std::vector<Elem> xs{Elem{1}, Elem{2}};
    EXPECT_EQ(power_row_det(f5, xs, PowerRow::kPowerN), Elem{3});
    EXPECT_EQ(det(f5, power_row_matrix(f5, xs, PowerRow::kPowerN)), Elem{3});

    const Field f = Field::parse("16");
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto pts = distinct(f, 4, rng);
        for (auto row : {PowerRow::kNone, PowerRow::kPowerN, PowerRow::kPowerNPlus1}) {
            ASSERT_EQ(power_row_det(f, pts, row), cofactor_det(f, power_row_matrix(f, pts, row)));
        }
    }
}

TEST(Determinants, TwistedDeterminant) {
    const Field f = Field::parse("17");
    const Elem theta{6}, alpha{4};
    EXPECT_EQ(twisted_det(f, std::vector<Elem>{alpha}, theta), f.sub(f.one(), f.mul(theta, alpha)));
    for (const char* d : {"4", "8", "17"}) {
        const Field g = Field::parse(d);
        EXPECT_EQ(twisted_det(g, std::vector<Elem>{Elem{0}, Elem{1}}, g.one()), Elem{0});
        EXPECT_EQ(det(g, twisted_matrix(g, std::vector<Elem>{Elem{0}, Elem{1}}, g.one())), Elem{0});
    }
    Rng rng(6);
    std::uniform_int_distribution<std::uint32_t> nz(1, 16);
    for (int t = 0; t < 200; ++t) {
        const auto pts = distinct(f, 5, rng);
        const Elem th{nz(rng)};
        ASSERT_EQ(twisted_det(f, pts, th), cofactor_det(f, twisted_matrix(f, pts, th)));
    }
    EXPECT_THROW(twisted_det(f, std::vector<Elem>{Elem{1}}, Elem{0}), std::invalid_argument);
}

TEST(Determinants, QuadraticInLastPoint) {
    const Field f = Field::parse("16");
    const Elem theta{7};
    const std::vector<Elem> pts{Elem{2}, Elem{9}};
    const std::vector<Elem> zero(4, Elem{0});
    EXPECT_EQ(det_quadratic_in_last(f, pts, zero, theta), (Quadratic{Elem{0}, Elem{0}, Elem{0}}));
    const std::vector<Elem> standard{Elem{0}, Elem{0}, Elem{0}, f.one()};
    EXPECT_EQ(det_quadratic_in_last(f, pts, standard, theta), (Quadratic{Elem{0}, Elem{0}, f.inv(theta)}));

    Rng rng(7);
    std::uniform_int_distribution<std::uint32_t> pick(0, 15), nz(1, 15);
    for (int t = 0; t < 100; ++t) {
        const auto xs = distinct(f, 2, rng);
        std::vector<Elem> w(4);
        for (auto& x : w) x = Elem{pick(rng)};
        const Elem th{nz(rng)};
        const Quadratic qd = det_quadratic_in_last(f, xs, w, th);
        for (std::uint32_t x = 0; x < 16; ++x) {
            if (std::find(xs.begin(), xs.end(), Elem{x}) != xs.end()) continue;
            std::vector<Elem> all = xs;
            all.push_back(Elem{x});
            std::vector<std::vector<Elem>> cols;
            for (auto a : all) cols.push_back(twisted_column(f, 4, th, a));
            cols.push_back(w);
            const Elem explicit_det = cofactor_det(f, Matrix::from_columns(cols));
            const Elem qx = f.add(f.add(f.mul(qd.a, f.mul(Elem{x}, Elem{x})), f.mul(qd.b, Elem{x})), qd.c);
            ASSERT_EQ(explicit_det, f.mul(f.mul(th, vandermonde(f, all)), qx));
            ASSERT_EQ(syndrome_det(f, all, w, th), explicit_det);
        }
    }
    EXPECT_THROW(det_quadratic_in_last(Field::parse("17"), pts, standard, theta), FieldError);
}

TEST(Determinants, QuadraticIsLinearInSyndrome) {
    const Field f = Field::parse("32");
    Rng rng(8);
    std::uniform_int_distribution<std::uint32_t> pick(0, 31), nz(1, 31);
    for (int t = 0; t < 200; ++t) {
        const auto xs = distinct(f, 3, rng);
        std::vector<Elem> w(5), v(5), sum(5), scaled(5);
        const Elem a{nz(rng)}, th{nz(rng)};
        for (std::size_t i = 0; i < 5; ++i) {
            w[i] = Elem{pick(rng)};
            v[i] = Elem{pick(rng)};
            sum[i] = f.add(w[i], v[i]);
            scaled[i] = f.mul(a, w[i]);
        }
        const auto qw = det_quadratic_in_last(f, xs, w, th);
        const auto qv = det_quadratic_in_last(f, xs, v, th);
        const auto qs = det_quadratic_in_last(f, xs, sum, th);
        const auto qa = det_quadratic_in_last(f, xs, scaled, th);
        EXPECT_EQ(qs, (Quadratic{f.add(qw.a, qv.a), f.add(qw.b, qv.b), f.add(qw.c, qv.c)}));
        EXPECT_EQ(qa, (Quadratic{f.mul(a, qw.a), f.mul(a, qw.b), f.mul(a, qw.c)}));
    }
}

TEST(Determinants, ObstructionPolynomial) {
    const Field f = Field::parse("16");
    const Elem theta{3};
    const std::vector<Elem> standard{Elem{0}, Elem{0}, Elem{0}, f.one()};
    // r = 5 with repeated coordinates: the Vandermonde factor vanishes.
    const std::vector<Elem> w5{f.one(), Elem{2}, Elem{3}, Elem{4}, Elem{5}};
    EXPECT_EQ(obstruction_eval(f, std::vector<Elem>{Elem{6}, Elem{6}}, w5, theta), Elem{0});
    for (std::uint32_t x = 0; x < 16; ++x) {
        EXPECT_EQ(obstruction_eval(f, std::vector<Elem>{Elem{x}}, standard, theta), Elem{0});
    }
    const std::vector<Elem> e0{f.one(), Elem{0}, Elem{0}, Elem{0}};
    bool nonzero = false;
    for (std::uint32_t x = 0; x < 16; ++x) nonzero |= !obstruction_eval(f, std::vector<Elem>{Elem{x}}, e0, theta).is_zero();
    EXPECT_TRUE(nonzero);
    EXPECT_THROW(obstruction_eval(Field::parse("17"), std::vector<Elem>{Elem{1}}, standard, theta), FieldError);
}
