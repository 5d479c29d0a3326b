#include "trslab/witnesses.hpp"

#include <algorithm>
#include <set>

#include "trslab/deep_holes.hpp"
#include "trslab/determinants.hpp"
#include "trslab/projective.hpp"

namespace trslab {

namespace {

Elem tail_factor(const Field& f, Elem theta, TailPattern pattern) {
    const Elem t = pattern == TailPattern::kTheta ? theta : f.inv(theta);
    return f.neg(t);
}

Elem sum(const Field& f, std::span<const Elem> xs) {
    Elem s{0};
    for (auto x : xs) s = f.add(s, x);
    return s;
}

Elem cube(const Field& f, Elem x) { return f.mul(x, f.mul(x, x)); }

bool proportional(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    std::vector<Elem> ca(a.begin(), a.end());
    std::vector<Elem> cb(b.begin(), b.end());
    const ProjectiveSpace space(f, a.size());
    return space.canonicalize(ca) && space.canonicalize(cb) && ca == cb;
}

// Lexicographic k-subsets of {0..n-1}; false after the last.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

}  // namespace

std::string_view to_string(TailPattern p) {
    return p == TailPattern::kTheta ? "theta" : "theta-inverse";
}

bool matches_tail_pattern(const Field& f, std::span<const Elem> w, Elem theta, TailPattern pattern) {
    const std::size_t r = w.size();
    if (r < 3 || theta.is_zero()) return false;
    for (std::size_t i = 0; i + 3 < r; ++i) {
        if (!w[i].is_zero()) return false;
    }
    const Elem a = w[r - 3];
    return !a.is_zero() && w[r - 2] == f.mul(tail_factor(f, theta, pattern), a);
}

std::vector<Elem> tail_pattern_syndrome(const Field& f, std::size_t r, Elem theta, TailPattern pattern, Elem a,
                                        Elem last) {
    if (r < 3) throw std::invalid_argument("tail pattern needs r >= 3");
    if (a.is_zero()) throw std::invalid_argument("tail pattern needs a nonzero lead");
    std::vector<Elem> w(r, Elem{0});
    w[r - 3] = a;
    w[r - 2] = f.mul(tail_factor(f, theta, pattern), a);
    w[r - 1] = last;
    return w;
}

std::vector<Elem> tail_pattern_witness(const TwistedRSCode& code, std::span<const Elem> w, TailPattern pattern,
                                       const Budget& budget) {
    const Field& f = code.field();
    if (!f.even() || !code.full_length()) throw std::invalid_argument("tail pattern witness needs a full-length code over even q");
    if (!in_even_completeness_range(f.q(), code.k())) {
        throw std::invalid_argument("tail pattern witness needs (3q-4)/4 <= k <= q-4");
    }
    if (!matches_tail_pattern(f, w, code.theta(), pattern)) {
        throw std::invalid_argument("syndrome does not match the " + std::string(to_string(pattern)) + " tail pattern");
    }
    auto verdict = is_deep_hole(code, w, budget);
    if (verdict.is_deep_hole) {
        throw Falsification("no vanishing subset for tail-pattern syndrome in " + code.descriptor());
    }
    return std::move(*verdict.witness);
}

Elem cubic_form(const Field& f, std::span<const Elem> xs, Elem theta, Elem w) {
    if (!f.even()) throw FieldError("cubic_form needs characteristic 2");
    const Elem ti = f.inv(theta);
    Elem acc = f.add(cube(f, ti), cube(f, f.add(sum(f, xs), ti)));
    for (auto x : xs) acc = f.add(acc, cube(f, x));
    return f.add(acc, f.mul(ti, w));
}

Elem cubic_form_target(const Field& f, Elem c) {
    if (f.m() % 2 == 1) return c;
    if ((f.m() / 2) % 2 == 1) return cube(f, c);
    return f.mul(f.primitive(), cube(f, c));
}

CubicFormWitness cubic_form_witness(const Field& f, Elem theta, Elem w, std::size_t n) {
    if (!f.even() || f.q() < 16) throw std::invalid_argument("cubic form witness needs q = 2^m >= 16");
    if (n < 1 || 4 * n > f.q()) throw std::invalid_argument("cubic form witness needs 1 <= n <= q/4");
    if (theta.is_zero()) throw std::invalid_argument("theta must be nonzero");

    // preimage[v] = smallest c != 0 with target(c) = v, or 0 if none.
    std::vector<std::uint32_t> preimage(f.q(), 0);
    for (std::uint32_t c = f.q() - 1; c >= 1; --c) preimage[cubic_form_target(f, Elem{c}).v] = c;

    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<Elem> xs(n);
    do {
        for (std::size_t i = 0; i < n; ++i) xs[i] = Elem{static_cast<std::uint32_t>(idx[i])};
        const Elem v = cubic_form(f, xs, theta, w);
        if (!v.is_zero() && preimage[v.v] != 0) return {xs, Elem{preimage[v.v]}};
    } while (next_subset(idx, f.q()));
    throw Falsification("no distinct points reach the cubic-form target over " + f.descriptor());
}

Elem tail_pair_det(const Field& f, std::span<const Elem> xs, Elem theta, Elem lambda) {
    const Elem ti = f.inv(theta);
    Elem quad{0};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i; j < xs.size(); ++j) quad = f.add(quad, f.mul(xs[i], xs[j]));
    }
    const Elem inner = f.sub(f.add(f.mul(ti, lambda), quad), f.mul(ti, sum(f, xs)));
    return f.mul(f.mul(theta, vandermonde(f, xs)), inner);
}

bool in_tail_pair_range(std::uint32_t q, std::size_t r) {
    return q % 2 == 1 && r >= 4 && 4 * r <= static_cast<std::size_t>(q) + 8;
}

std::vector<Elem> tail_pair_witness(const Field& f, Elem theta, Elem lambda, std::size_t r, const Budget& budget) {
    if (!in_tail_pair_range(f.q(), r)) throw std::invalid_argument("tail pair witness needs odd q and 4 <= r <= (q+8)/4");
    const auto code = TwistedRSCode::full(f, f.q() - r, theta);
    std::vector<Elem> v(r, Elem{0});
    v[r - 2] = f.one();
    v[r - 1] = lambda;
    auto verdict = is_deep_hole(code, v, budget);
    if (verdict.is_deep_hole) {
        throw Falsification("no vanishing subset for (0, .., 1, " + std::to_string(lambda.v) + ") over " +
                            f.descriptor());
    }
    return std::move(*verdict.witness);
}

Elem shifted_column_det(const Field& f, std::span<const Elem> points, Elem theta, Elem b) {
    const std::size_t r = points.size();
    if (r < 2) throw std::invalid_argument("shifted column determinant needs r >= 2");
    Elem prod = f.one();
    for (std::size_t j = 1; j < r; ++j) prod = f.mul(prod, f.sub(points[j], points[0]));
    const Elem twist = f.sub(f.one(), f.mul(theta, sum(f, points)));
    const Elem shift = r % 2 == 1 ? b : f.neg(b);
    return f.mul(vandermonde(f, points.subspan(1)), f.add(f.mul(twist, prod), shift));
}

Elem shifted_column_det_explicit(const Field& f, std::span<const Elem> points, Elem theta, Elem b) {
    const std::size_t r = points.size();
    std::vector<std::vector<Elem>> cols;
    for (auto a : points) cols.push_back(twisted_column(f, r, theta, a));
    cols[0][r - 1] = f.add(cols[0][r - 1], b);
    return det_of_columns(f, cols);
}

bool in_shifted_column_range(std::uint32_t q, std::size_t r) {
    if (q % 2 == 0 || r < 3) return false;
    // 4r <= q - 3 sqrt(q) + 7  <=>  3 sqrt(q) <= q + 7 - 4r.
    const long long slack = static_cast<long long>(q) + 7 - 4 * static_cast<long long>(r);
    return slack >= 0 && slack * slack >= 9 * static_cast<long long>(q);
}

std::pair<Elem, Elem> shifted_column_witness(const Field& f, Elem theta, std::span<const Elem> prefix, Elem b) {
    const std::size_t r = prefix.size() + 2;
    if (!in_shifted_column_range(f.q(), r)) {
        throw std::invalid_argument("shifted column witness needs odd q and 3 <= r <= (q - 3 sqrt(q) + 7)/4");
    }
    std::set<std::uint32_t> used;
    for (auto a : prefix) {
        if (!f.contains(a) || !used.insert(a.v).second) throw std::invalid_argument("prefix must be distinct field elements");
    }
    std::vector<Elem> points(prefix.begin(), prefix.end());
    points.resize(r);
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        if (used.count(x)) continue;
        for (std::uint32_t y = x + 1; y < f.q(); ++y) {
            if (used.count(y)) continue;
            points[r - 2] = Elem{x};
            points[r - 1] = Elem{y};
            if (shifted_column_det_explicit(f, points, theta, b).is_zero()) return {Elem{x}, Elem{y}};
        }
    }
    throw Falsification("no completing pair for the shifted-column determinant over " + f.descriptor());
}

Matrix rs_generator(const Field& f, std::size_t s, std::span<const Elem> points) {
    std::vector<std::vector<Elem>> cols;
    for (auto a : points) cols.push_back(power_column(f, s, a));
    if (cols.empty()) return Matrix(s, 0);
    return Matrix::from_columns(cols);
}

bool extends_rs_mds(const Field& f, std::size_t s, std::span<const Elem> points, std::span<const Elem> w) {
    const std::size_t n = points.size();
    if (s < 2 || 2 * (n - std::min(n, s)) + 1 < f.q() || s > n) {
        throw std::invalid_argument("extension rule needs 2 <= s <= n - (q-1)/2");
    }
    if (w.size() != s) throw std::invalid_argument("w must have length s");
    if (std::all_of(w.begin(), w.end(), [](Elem x) { return x.is_zero(); })) return false;

    if (proportional(f, w, infinity_column(f, s))) return true;
    std::set<std::uint32_t> in_a;
    for (auto a : points) in_a.insert(a.v);
    for (std::uint32_t d = 0; d < f.q(); ++d) {
        if (!in_a.count(d) && proportional(f, w, power_column(f, s, Elem{d}))) return true;
    }
    if (f.even() && s == 3) {
        const std::vector<Elem> nucleus{Elem{0}, f.one(), Elem{0}};
        return proportional(f, w, nucleus);
    }
    return false;
}

}  // namespace trslab
