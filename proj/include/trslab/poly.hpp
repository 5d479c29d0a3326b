#pragma once

#include <span>
#include <vector>

#include "trslab/field.hpp"

namespace trslab {

/// Univariate polynomial over a Field, coefficients constant term first.
/// Always normalized: no trailing zero coefficients.
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs);

    static Poly constant(Elem c) { return Poly({c}); }
    /// c * x^degree.
    static Poly monomial(Elem c, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const Elem> coeffs() const { return coeffs_; }
    /// Zero past the degree.
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }

    bool operator==(const Poly&) const = default;

   private:
    std::vector<Elem> coeffs_;
};

/// Horner evaluation.
Elem eval(const Field& f, const Poly& poly, Elem x);
Elem eval(const Field& f, std::span<const Elem> coeffs, Elem x);

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly scale(const Field& f, const Poly& a, Elem c);
Poly mul(const Field& f, const Poly& a, const Poly& b);

/// The unique polynomial of degree < points.size() through the given points.
/// Throws std::invalid_argument on duplicate points or a length mismatch.
Poly interpolate(const Field& f, std::span<const Elem> points, std::span<const Elem> values);

/// Coefficients S_0..S_n of prod (X - x_i), so S_n = 1 and xs = {} gives {1}.
std::vector<Elem> elementary_symmetric(const Field& f, std::span<const Elem> xs);

/// S_i from the output of elementary_symmetric(), zero for i outside [0, n].
inline Elem sym_at(std::span<const Elem> s, long i) {
    if (i < 0 || i >= static_cast<long>(s.size())) return Elem{0};
    return s[static_cast<std::size_t>(i)];
}

}  // namespace trslab
