#include "trslab/char_sums.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "trslab/poly.hpp"

namespace trslab {

namespace {

Complex root_of_unity(std::uint64_t order, std::uint64_t k) {
    k %= order;
    if (k == 0) return {1.0, 0.0};
    if (2 * k == order) return {-1.0, 0.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order);
    return std::polar(1.0, angle);
}

void require_even(const Field& f, const char* what) {
    if (!f.even()) throw FieldError(std::string(what) + " needs characteristic 2");
}

void require_odd(const Field& f, const char* what) {
    if (f.even()) throw FieldError(std::string(what) + " needs odd characteristic");
}

std::int64_t isqrt_exact(std::int64_t q) {
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(q))));
    if (s * s != q) throw std::logic_error("q is not a perfect square");
    return s;
}

bool is_cube(const Field& f, Elem a) { return f.log(a) % 3 == 0; }

}  // namespace

Complex additive_character(const Field& f, Elem a, Elem x) {
    return root_of_unity(f.p(), f.trace(f.mul(a, x)).v);
}

Complex multiplicative_character(const Field& f, std::uint64_t i, Elem x) {
    if (x.is_zero()) return {0.0, 0.0};
    const std::uint64_t order = f.q() - 1;
    return root_of_unity(order, (i % order) * f.log(x));
}

Complex gauss_sum(const Field& f, std::uint64_t psi, Elem chi) {
    Complex acc{0.0, 0.0};
    for (std::uint32_t v = 1; v < f.q(); ++v) {
        const Elem x{v};
        acc += multiplicative_character(f, psi, x) * additive_character(f, chi, x);
    }
    return acc;
}

Complex monomial_sum(const Field& f, Elem a, Elem b, std::uint64_t n) {
    if (a.is_zero()) throw std::invalid_argument("monomial_sum: a must be nonzero");
    Complex acc{0.0, 0.0};
    for (auto c : f.elements()) acc += additive_character(f, f.one(), f.add(f.mul(a, f.pow(c, n)), b));
    return acc;
}

double monomial_sum_bound(const Field& f, std::uint64_t n) {
    const auto d = std::gcd(n, static_cast<std::uint64_t>(f.q() - 1));
    return (static_cast<double>(d) - 1.0) * std::sqrt(static_cast<double>(f.q()));
}

Complex quadratic_sum(const Field& f, Elem b, Elem a2, Elem a1, Elem a0) {
    Complex acc{0.0, 0.0};
    for (auto c : f.elements()) {
        const Elem v = f.add(f.mul(f.add(f.mul(a2, c), a1), c), a0);
        acc += additive_character(f, b, v);
    }
    return acc;
}

Complex quadratic_sum_closed_odd(const Field& f, Elem a2, Elem a1, Elem a0) {
    require_odd(f, "quadratic_sum_closed_odd");
    if (a2.is_zero()) throw std::invalid_argument("quadratic_sum_closed_odd: a2 must be nonzero");
    const Elem four_a2 = f.mul(f.from_int(4), a2);
    const Elem arg = f.sub(a0, f.div(f.mul(a1, a1), four_a2));
    const std::uint64_t eta = (f.q() - 1) / 2;
    return additive_character(f, f.one(), arg) * static_cast<double>(f.quadratic_character(a2)) *
           gauss_sum(f, eta, f.one());
}

Complex quadratic_sum_closed_even(const Field& f, Elem b, Elem a2, Elem a1, Elem a0) {
    require_even(f, "quadratic_sum_closed_even");
    if (a2.is_zero()) throw std::invalid_argument("quadratic_sum_closed_even: a2 must be nonzero");
    if (b.is_zero()) throw std::invalid_argument("quadratic_sum_closed_even: b must be nonzero");
    const Elem cond = f.add(f.mul(b, a2), f.mul(f.mul(b, b), f.mul(a1, a1)));
    if (!cond.is_zero()) return {0.0, 0.0};
    return additive_character(f, b, a0) * static_cast<double>(f.q());
}

std::int64_t count_quadric(const Field& f, Elem a1, Elem a2, Elem b) {
    require_odd(f, "count_quadric");
    if (a1.is_zero() || a2.is_zero()) throw std::invalid_argument("count_quadric: coefficients must be nonzero");
    const std::int64_t q = f.q();
    const std::int64_t v = b.is_zero() ? q - 1 : -1;
    return q + v * f.quadratic_character(f.neg(f.mul(a1, a2)));
}

std::int64_t count_quadric_brute(const Field& f, Elem a1, Elem a2, Elem b) {
    std::int64_t n = 0;
    for (auto x : f.elements()) {
        const Elem lhs = f.sub(f.mul(a1, f.mul(x, x)), b);
        for (auto y : f.elements()) {
            if (f.add(lhs, f.mul(a2, f.mul(y, y))).is_zero()) ++n;
        }
    }
    return n;
}

Complex cubic_character(const Field& f, Elem x) {
    if ((f.q() - 1) % 3 != 0) throw FieldError("cubic character needs 3 | q - 1");
    return multiplicative_character(f, (f.q() - 1) / 3, x);
}

Complex cubic_sum(const Field& f, Elem a) {
    require_even(f, "cubic_sum");
    if (a.is_zero()) throw std::invalid_argument("cubic_sum: a must be nonzero");
    if (f.m() % 2 == 1) return {0.0, 0.0};
    const Complex lam = std::conj(cubic_character(f, a));
    const double sign = (f.m() / 2) % 2 == 1 ? 1.0 : -1.0;
    return sign * (lam + lam * lam) * std::sqrt(static_cast<double>(f.q()));
}

Complex cubic_sum_brute(const Field& f, Elem a) {
    Complex acc{0.0, 0.0};
    for (auto x : f.elements()) acc += additive_character(f, f.one(), f.mul(a, f.pow(x, 3)));
    return acc;
}

std::int64_t count_surface_cubic(const Field& f, Elem a) {
    require_even(f, "count_surface_cubic");
    if (a.is_zero()) throw std::invalid_argument("count_surface_cubic: a must be nonzero");
    const std::int64_t q = f.q();
    if (f.m() % 2 == 1) return q - 2;
    const std::int64_t s = isqrt_exact(q);
    const std::int64_t sign = (f.m() / 2) % 2 == 1 ? 1 : -1;
    // lambda-bar(a) + lambda-bar(a)^2 is 2 on cubes and -1 elsewhere.
    return q - 2 + sign * (is_cube(f, a) ? 2 * s : -s);
}

std::int64_t count_surface_cubic_brute(const Field& f, Elem a) {
    std::int64_t n = 0;
    for (auto x : f.elements()) {
        for (auto y : f.elements()) {
            if (f.add(f.mul(f.mul(x, y), f.add(x, y)), a).is_zero()) ++n;
        }
    }
    return n;
}

FermatCubicCount count_fermat_cubic(const Field& f, Elem b) {
    FermatCubicCount out;
    const double q = f.q();
    out.lower_bound = q - 2.0 * std::sqrt(q) - 2.0;
    std::vector<Elem> cubes(f.q());
    for (auto x : f.elements()) cubes[x.v] = f.pow(x, 3);
    for (auto x : f.elements()) {
        for (auto y : f.elements()) {
            if (f.sub(f.add(cubes[x.v], cubes[y.v]), b).is_zero()) {
                ++out.count;
                if (!out.nonzero_representation && !x.is_zero() && !y.is_zero()) {
                    out.nonzero_representation = std::make_pair(x, y);
                }
            }
        }
    }
    return out;
}

Complex multiplicative_poly_sum(const Field& f, std::uint64_t psi, Elem a, std::span<const Elem> poly) {
    Complex acc{0.0, 0.0};
    for (auto c : f.elements()) acc += multiplicative_character(f, psi, f.mul(a, eval(f, poly, c)));
    return acc;
}

}  // namespace trslab
