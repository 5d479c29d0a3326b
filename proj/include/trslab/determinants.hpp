#pragma once

#include <span>
#include <vector>

#include "trslab/field.hpp"
#include "trslab/matrix.hpp"

namespace trslab {

/// prod_{i<j} (x_j - x_i); 1 for fewer than two points.
Elem vandermonde(const Field& f, std::span<const Elem> xs);

/// Which power row of an n x n Vandermonde matrix is replaced: rows are
/// x^0..x^{n-2} followed by x^{n-1} (kNone), x^n, or x^{n+1}.
enum class PowerRow { kNone, kPowerN, kPowerNPlus1 };

/// Explicit matrix with columns (1, x, .., x^{n-2}, x^e) for the selected e.
Matrix power_row_matrix(const Field& f, std::span<const Elem> xs, PowerRow last);

/// Closed forms V, V * sum x_i, V * sum_{i<=j} x_i x_j.
Elem power_row_det(const Field& f, std::span<const Elem> xs, PowerRow last);

/// (1, a, .., a^{n-2}, a^{n-1} - theta a^n).
std::vector<Elem> twisted_column(const Field& f, std::size_t n, Elem theta, Elem alpha);
/// (1, a, .., a^{n-1}).
std::vector<Elem> power_column(const Field& f, std::size_t n, Elem alpha);
/// (0, .., 0, 1).
std::vector<Elem> infinity_column(const Field& f, std::size_t n);

/// Matrix whose columns are twisted_column(xs.size(), theta, x_i).
Matrix twisted_matrix(const Field& f, std::span<const Elem> xs, Elem theta);

/// V(xs) * (1 - theta * sum x_i). Throws std::invalid_argument for theta = 0.
Elem twisted_det(const Field& f, std::span<const Elem> xs, Elem theta);

/// det(c(x_1) | .. | c(x_{r-1}) | w) for twisted columns of length r = |w|.
Elem syndrome_det(const Field& f, std::span<const Elem> xs, std::span<const Elem> w, Elem theta);

/// a x^2 + b x + c.
struct Quadratic {
    Elem a;
    Elem b;
    Elem c;
    bool operator==(const Quadratic&) const = default;
};

/// Characteristic 2 only. For r-2 points xs and a syndrome w of length r,
/// returns the quadratic Q in the last point with
///   syndrome_det(xs + {x}, w) = theta * V(xs + {x}) * Q(x)
/// for every x. Built from the symmetric-function combinations
///   f = sum_{i<=r-2} w_i S_i,  g = sum_{1<=i<=r-2} w_i S_{i-1},
///   h = sum_{2<=i<=r-2} w_i S_{i-2} + w_{r-1} / theta
/// of xs, with a = f, b = (1/theta + sum xs) f, c = (1/theta + sum xs) g + h.
Quadratic det_quadratic_in_last(const Field& f, std::span<const Elem> xs, std::span<const Elem> w, Elem theta);

/// Characteristic 2 only, r >= 4, point of length r-3. Pointwise value of the
/// product that must vanish identically when w is the syndrome of a deep
/// hole: with s = sum x_j + 1/theta and f~, h~ the values of f, h at
/// (x_1, .., x_{r-3}, s),
///   V(x) * prod_t (s + x_t) * prod_i (f~ x_i^2 + h~) * f~ * (f~ s^2 + h~).
Elem obstruction_eval(const Field& f, std::span<const Elem> point, std::span<const Elem> w, Elem theta);

}  // namespace trslab
