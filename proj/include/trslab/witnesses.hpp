#pragma once

#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "trslab/codes.hpp"
#include "trslab/field.hpp"
#include "trslab/matrix.hpp"

namespace trslab {

/// A constructive existence claim had no solution in an exhaustive search.
class Falsification : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Syndromes (0, .., 0, a, b, c) with a != 0 and either a theta + b = 0
/// (kTheta) or a / theta + b = 0 (kThetaInverse).
enum class TailPattern { kTheta, kThetaInverse };

std::string_view to_string(TailPattern p);

bool matches_tail_pattern(const Field& f, std::span<const Elem> w, Elem theta, TailPattern pattern);
/// (0, .., 0, a, b, last) of length r >= 3 with b fixed by the pattern.
std::vector<Elem> tail_pattern_syndrome(const Field& f, std::size_t r, Elem theta, TailPattern pattern, Elem a,
                                        Elem last);

/// Even q, full-length code with (3q-4)/4 <= k <= q-4, w matching the pattern.
/// Lexicographically first vanishing subset; Falsification when w turns out
/// to be a deep hole.
std::vector<Elem> tail_pattern_witness(const TwistedRSCode& code, std::span<const Elem> w, TailPattern pattern,
                                       const Budget& budget = Budget::from_env());

/// Characteristic 2:
///   sum x_i^3 + theta^-3 + (sum x_i + theta^-1)^3 + theta^-1 w.
/// For r-1 points this is det(c(x_1)|..|c(x_{r-1})|s) / (theta V) with
/// s = (0, .., 0, 1, 1/theta, w).
Elem cubic_form(const Field& f, std::span<const Elem> xs, Elem theta, Elem w);

/// c for odd m, c^3 for m = 2 mod 4, pi c^3 for 4 | m.
Elem cubic_form_target(const Field& f, Elem c);

struct CubicFormWitness {
    std::vector<Elem> points;  // pairwise distinct, ascending index
    Elem c;
};

/// q = 2^m >= 16, 1 <= n <= q/4: distinct points and c != 0 with
/// cubic_form(points) = cubic_form_target(c). First solution in lexicographic
/// order; Falsification when none exists.
CubicFormWitness cubic_form_witness(const Field& f, Elem theta, Elem w, std::size_t n);

/// theta V (lambda / theta + sum_{i<=j} x_i x_j - (sum x_i) / theta), the
/// determinant against v = (0, .., 0, 1, lambda).
Elem tail_pair_det(const Field& f, std::span<const Elem> xs, Elem theta, Elem lambda);

/// Odd q and 4 <= r <= (q + 8)/4.
bool in_tail_pair_range(std::uint32_t q, std::size_t r);

/// First r-1 distinct points with vanishing determinant against
/// (0, .., 0, 1, lambda). Falsification when none exists.
std::vector<Elem> tail_pair_witness(const Field& f, Elem theta, Elem lambda, std::size_t r,
                                    const Budget& budget = Budget::from_env());

/// det(c(a_1) + b c(inf) | c(a_2) | .. | c(a_r)) from the closed form
///   V(a_2..a_r) ((1 - theta sum a_i) prod_{j>=2} (a_j - a_1) + (-1)^{r+1} b).
Elem shifted_column_det(const Field& f, std::span<const Elem> points, Elem theta, Elem b);
/// The same determinant built explicitly.
Elem shifted_column_det_explicit(const Field& f, std::span<const Elem> points, Elem theta, Elem b);

/// Odd q and 3 <= r <= (q - 3 sqrt(q) + 7)/4, decided in integers.
bool in_shifted_column_range(std::uint32_t q, std::size_t r);

/// Given r-2 distinct points, the first pair x < y (by index) outside them
/// making shifted_column_det vanish. Falsification when none exists.
std::pair<Elem, Elem> shifted_column_witness(const Field& f, Elem theta, std::span<const Elem> prefix, Elem b);

/// Columns c_s(a) for a in A.
Matrix rs_generator(const Field& f, std::size_t s, std::span<const Elem> points);

/// Whether (G_s | w) generates an [n + 1, s] MDS code, for
/// 2 <= s <= n - (q-1)/2: w = a c_s(d) for some d in (F_q + inf) \ A, or, for
/// even q and s = 3, w = a (0, 1, 0).
bool extends_rs_mds(const Field& f, std::size_t s, std::span<const Elem> points, std::span<const Elem> w);

}  // namespace trslab
