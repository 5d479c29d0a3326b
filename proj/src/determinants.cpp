#include "trslab/determinants.hpp"

#include <stdexcept>

#include "trslab/poly.hpp"

namespace trslab {

namespace {

void require_even(const Field& f, const char* what) {
    if (!f.even()) throw FieldError(std::string(what) + " is only defined in characteristic 2");
}

Elem sum(const Field& f, std::span<const Elem> xs) {
    Elem s{0};
    for (auto x : xs) s = f.add(s, x);
    return s;
}

struct Fgh {
    Elem f, g, h;
};

// f, g, h of the r-2 points xs for syndrome w (|w| = r).
Fgh symmetric_combinations(const Field& f, std::span<const Elem> xs, std::span<const Elem> w, Elem theta_inv) {
    const long r = static_cast<long>(w.size());
    const auto s = elementary_symmetric(f, xs);
    Elem fv{0}, gv{0}, hv{0};
    for (long i = 0; i <= r - 2; ++i) {
        const Elem wi = w[static_cast<std::size_t>(i)];
        if (wi.is_zero()) continue;
        fv = f.add(fv, f.mul(wi, sym_at(s, i)));
        if (i >= 1) gv = f.add(gv, f.mul(wi, sym_at(s, i - 1)));
        if (i >= 2) hv = f.add(hv, f.mul(wi, sym_at(s, i - 2)));
    }
    hv = f.add(hv, f.mul(theta_inv, w[static_cast<std::size_t>(r - 1)]));
    return {fv, gv, hv};
}

}  // namespace

Elem vandermonde(const Field& f, std::span<const Elem> xs) {
    Elem v = f.one();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) v = f.mul(v, f.sub(xs[j], xs[i]));
    }
    return v;
}

Matrix power_row_matrix(const Field& f, std::span<const Elem> xs, PowerRow last) {
    const std::size_t n = xs.size();
    Matrix m(n, n);
    if (n == 0) return m;
    std::size_t e = n - 1;
    if (last == PowerRow::kPowerN) e = n;
    if (last == PowerRow::kPowerNPlus1) e = n + 1;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i + 1 < n; ++i) m(i, j) = f.pow(xs[j], i);
        m(n - 1, j) = f.pow(xs[j], e);
    }
    return m;
}

Elem power_row_det(const Field& f, std::span<const Elem> xs, PowerRow last) {
    const Elem v = vandermonde(f, xs);
    switch (last) {
        case PowerRow::kNone:
            return v;
        case PowerRow::kPowerN:
            return f.mul(v, sum(f, xs));
        case PowerRow::kPowerNPlus1: {
            Elem acc{0};
            for (std::size_t i = 0; i < xs.size(); ++i) {
                for (std::size_t j = i; j < xs.size(); ++j) acc = f.add(acc, f.mul(xs[i], xs[j]));
            }
            return f.mul(v, acc);
        }
    }
    return v;
}

std::vector<Elem> twisted_column(const Field& f, std::size_t n, Elem theta, Elem alpha) {
    std::vector<Elem> c(n);
    Elem pw = f.one();
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = pw;
        pw = f.mul(pw, alpha);
    }
    if (n > 0) c[n - 1] = f.sub(c[n - 1], f.mul(theta, pw));
    return c;
}

std::vector<Elem> power_column(const Field& f, std::size_t n, Elem alpha) {
    std::vector<Elem> c(n);
    Elem pw = f.one();
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = pw;
        pw = f.mul(pw, alpha);
    }
    return c;
}

std::vector<Elem> infinity_column(const Field& f, std::size_t n) {
    std::vector<Elem> c(n, f.zero());
    if (n > 0) c[n - 1] = f.one();
    return c;
}

Matrix twisted_matrix(const Field& f, std::span<const Elem> xs, Elem theta) {
    std::vector<std::vector<Elem>> cols;
    cols.reserve(xs.size());
    for (auto x : xs) cols.push_back(twisted_column(f, xs.size(), theta, x));
    if (cols.empty()) return Matrix{};
    return Matrix::from_columns(cols);
}

Elem twisted_det(const Field& f, std::span<const Elem> xs, Elem theta) {
    if (theta.is_zero()) throw std::invalid_argument("twisted_det: theta must be nonzero");
    return f.mul(vandermonde(f, xs), f.sub(f.one(), f.mul(theta, sum(f, xs))));
}

Elem syndrome_det(const Field& f, std::span<const Elem> xs, std::span<const Elem> w, Elem theta) {
    const std::size_t r = w.size();
    if (xs.size() + 1 != r) throw std::invalid_argument("syndrome_det: need |w| - 1 points");
    std::vector<std::vector<Elem>> cols;
    cols.reserve(r);
    for (auto x : xs) cols.push_back(twisted_column(f, r, theta, x));
    cols.emplace_back(w.begin(), w.end());
    return det_of_columns(f, cols);
}

Quadratic det_quadratic_in_last(const Field& f, std::span<const Elem> xs, std::span<const Elem> w, Elem theta) {
    require_even(f, "det_quadratic_in_last");
    if (theta.is_zero()) throw std::invalid_argument("det_quadratic_in_last: theta must be nonzero");
    if (w.size() < 2 || xs.size() + 2 != w.size()) {
        throw std::invalid_argument("det_quadratic_in_last: need |w| - 2 points");
    }
    const Elem ti = f.inv(theta);
    const auto [fv, gv, hv] = symmetric_combinations(f, xs, w, ti);
    const Elem shift = f.add(ti, sum(f, xs));
    return {fv, f.mul(shift, fv), f.add(f.mul(shift, gv), hv)};
}

Elem obstruction_eval(const Field& f, std::span<const Elem> point, std::span<const Elem> w, Elem theta) {
    require_even(f, "obstruction_eval");
    if (theta.is_zero()) throw std::invalid_argument("obstruction_eval: theta must be nonzero");
    if (w.size() < 4 || point.size() + 3 != w.size()) {
        throw std::invalid_argument("obstruction_eval: need r >= 4 and r - 3 coordinates");
    }
    const Elem ti = f.inv(theta);
    const Elem s = f.add(sum(f, point), ti);

    std::vector<Elem> ext(point.begin(), point.end());
    ext.push_back(s);
    const auto [ft, gt, ht] = symmetric_combinations(f, ext, w, ti);
    (void)gt;

    Elem acc = vandermonde(f, point);
    for (auto x : point) acc = f.mul(acc, f.add(s, x));
    for (auto x : point) acc = f.mul(acc, f.add(f.mul(ft, f.mul(x, x)), ht));
    acc = f.mul(acc, ft);
    acc = f.mul(acc, f.add(f.mul(ft, f.mul(s, s)), ht));
    return acc;
}

}  // namespace trslab
