#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "trslab/field.hpp"

namespace trslab {

using Complex = std::complex<double>;

/// |a - b| <= tol.
inline bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

/// Comparison tolerance for character sums over GF(q): 1e-6 * q.
inline double sum_tolerance(const Field& f) { return 1e-6 * f.q(); }

/// chi_a(x) = zeta_p^{Tr(a x)}; exactly +-1 in characteristic 2.
Complex additive_character(const Field& f, Elem a, Elem x);

/// psi_i(pi^j) = zeta_{q-1}^{i j} with psi_i(0) = 0, pi = f.primitive().
Complex multiplicative_character(const Field& f, std::uint64_t i, Elem x);

/// Sum over nonzero x of psi_i(x) chi_a(x).
Complex gauss_sum(const Field& f, std::uint64_t psi, Elem chi);

/// Sum over c of chi_1(a c^n + b). Throws for a = 0.
Complex monomial_sum(const Field& f, Elem a, Elem b, std::uint64_t n);
/// (gcd(n, q-1) - 1) sqrt(q).
double monomial_sum_bound(const Field& f, std::uint64_t n);

/// Sum over c of chi_b(a2 c^2 + a1 c + a0), evaluated directly.
Complex quadratic_sum(const Field& f, Elem b, Elem a2, Elem a1, Elem a0);
/// Odd q, canonical chi: chi(a0 - a1^2 / (4 a2)) eta(a2) G(eta, chi).
Complex quadratic_sum_closed_odd(const Field& f, Elem a2, Elem a1, Elem a0);
/// Even q, b != 0: chi_b(a0) q when b a2 + b^2 a1^2 = 0, else 0.
Complex quadratic_sum_closed_even(const Field& f, Elem b, Elem a2, Elem a1, Elem a0);

/// N(a1 X^2 + a2 Y^2 - b) from q + v(b) eta(-a1 a2); odd q, a1, a2 != 0.
std::int64_t count_quadric(const Field& f, Elem a1, Elem a2, Elem b);
std::int64_t count_quadric_brute(const Field& f, Elem a1, Elem a2, Elem b);

/// lambda = psi_{(q-1)/3}; requires 3 | q-1.
Complex cubic_character(const Field& f, Elem x);

/// Sum over X of chi(a X^3) in characteristic 2, from the Gauss-sum case
/// split on m. Throws for odd characteristic or a = 0.
Complex cubic_sum(const Field& f, Elem a);
Complex cubic_sum_brute(const Field& f, Elem a);

/// N(XY(X+Y) + a) = q - 2 + cubic_sum(a); characteristic 2, a != 0.
std::int64_t count_surface_cubic(const Field& f, Elem a);
std::int64_t count_surface_cubic_brute(const Field& f, Elem a);

struct FermatCubicCount {
    std::int64_t count = 0;
    double lower_bound = 0;  // q - 2 sqrt(q) - 2
    /// Lexicographically first (x, y) with x, y != 0 and x^3 + y^3 = b.
    std::optional<std::pair<Elem, Elem>> nonzero_representation;
};

/// N(X^3 + Y^3 - b) by enumeration.
FermatCubicCount count_fermat_cubic(const Field& f, Elem b);

/// Sum over c of psi_i(a * poly(c)), coefficients constant term first.
Complex multiplicative_poly_sum(const Field& f, std::uint64_t psi, Elem a, std::span<const Elem> poly);

}  // namespace trslab
