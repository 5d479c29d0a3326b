#include "trslab/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace trslab {

Poly::Poly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, Elem{0});
    v[degree] = c;
    return Poly(std::move(v));
}

Elem eval(const Field& f, std::span<const Elem> coeffs, Elem x) {
    Elem acc{0};
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
    return acc;
}

Elem eval(const Field& f, const Poly& poly, Elem x) { return eval(f, poly.coeffs(), x); }

Poly add(const Field& f, const Poly& a, const Poly& b) {
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly scale(const Field& f, const Poly& a, Elem c) {
    std::vector<Elem> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : out) x = f.mul(x, c);
    return Poly(std::move(out));
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    const auto ca = a.coeffs();
    const auto cb = b.coeffs();
    std::vector<Elem> out(ca.size() + cb.size() - 1, Elem{0});
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].is_zero()) continue;
        for (std::size_t j = 0; j < cb.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(ca[i], cb[j]));
    }
    return Poly(std::move(out));
}

Poly interpolate(const Field& f, std::span<const Elem> points, std::span<const Elem> values) {
    if (points.size() != values.size()) throw std::invalid_argument("interpolate: length mismatch");
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i] == points[j]) throw std::invalid_argument("interpolate: duplicate points");
        }
    }

    // Newton divided differences, then expansion of the Newton form.
    std::vector<Elem> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Elem num = f.sub(dd[i], dd[i - 1]);
            const Elem den = f.sub(points[i], points[i - level]);
            dd[i] = f.div(num, den);
        }
    }
    std::vector<Elem> acc;  // Horner over the Newton basis
    for (std::size_t i = n; i-- > 0;) {
        // acc = acc * (x - points[i]) + dd[i]
        std::vector<Elem> next(acc.size() + 1, Elem{0});
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = f.add(next[j + 1], acc[j]);
            next[j] = f.sub(next[j], f.mul(acc[j], points[i]));
        }
        next[0] = f.add(next[0], dd[i]);
        acc = std::move(next);
    }
    return Poly(std::move(acc));
}

std::vector<Elem> elementary_symmetric(const Field& f, std::span<const Elem> xs) {
    std::vector<Elem> s{f.one()};
    for (Elem x : xs) {
        const Elem nx = f.neg(x);
        std::vector<Elem> next(s.size() + 1, Elem{0});
        for (std::size_t j = 0; j < s.size(); ++j) {
            next[j + 1] = f.add(next[j + 1], s[j]);
            next[j] = f.add(next[j], f.mul(s[j], nx));
        }
        s = std::move(next);
    }
    return s;
}

}  // namespace trslab
