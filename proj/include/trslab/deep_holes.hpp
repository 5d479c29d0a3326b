#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trslab/codes.hpp"

namespace trslab {

enum class Method { kSubsetExhaustive, kCosetOracle, kClassifier };

/// "subset-exhaustive", "coset-oracle", "classifier".
std::string_view to_string(Method m);

struct DeepHoleVerdict {
    bool is_deep_hole = false;
    /// Distinct alpha_1 < .. < alpha_{r-1} (by index) whose twisted columns
    /// are dependent together with w. Only from the subset search.
    std::optional<std::vector<Elem>> witness;
    Method method = Method::kSubsetExhaustive;
    /// Closed form evaluated where it is not proved (odd q <= 16).
    bool outside_proved_range = false;
};

/// det(c(alpha_1) | .. | c(alpha_{r-1}) | w) == 0 with distinct alphas.
bool witness_vanishes(const TwistedRSCode& code, std::span<const Elem> w, std::span<const Elem> witness);

/// w is a deep-hole syndrome iff w lies outside the span of every r-1
/// distinct twisted columns. Full-length codes only. Subsets are visited in
/// lexicographic order of element index, so the witness is the first
/// vanishing subset. w = 0 is a codeword and reported as not a deep hole.
DeepHoleVerdict is_deep_hole(const TwistedRSCode& code, std::span<const Elem> w,
                             const Budget& budget = Budget::from_env());

/// d(u, C) = n - k for the coset of w, by codeword enumeration.
DeepHoleVerdict is_deep_hole_by_distance(const TwistedRSCode& code, const CodewordTable& table,
                                         std::span<const Elem> w);

struct DeepHoleEnumeration {
    std::uint64_t classes_scanned = 0;
    /// Canonical deep-hole syndromes in ascending lexicographic order.
    std::vector<std::vector<Elem>> classes;
};

/// All deep-hole syndrome classes of a full-length code: every projective
/// point on the span of some r-1 twisted columns is marked, and the unmarked
/// classes are returned. Subsets are split round-robin over `jobs` threads.
DeepHoleEnumeration enumerate_deep_holes(const TwistedRSCode& code, const Budget& budget = Budget::from_env(),
                                         unsigned jobs = 1);

/// Even q >= 8, k in {q-3, q-2, q-1}.
///   k = q-1: any w != 0.
///   k = q-2: w_0 = 0, w_1 != 0, or Tr(w_1 theta / w_0) = 1.
///   k = q-3: w in F*(0, 0, 1), or F*(0, 1, 1/theta) when m is odd.
DeepHoleVerdict classify_even_boundary(const Field& f, std::size_t k, Elem theta, std::span<const Elem> w);

/// Odd q, k in {q-3, q-2, q-1}; tagged outside_proved_range for q <= 16.
///   k = q-2: w_0 = 0, w_1 != 0, or eta(w_0^2 - 4 w_0 w_1 theta) = -1.
///   k = q-3: w in F*(0, 0, 1), or F*(0, 1, 1/(3 theta)) when eta(-3) = -1.
DeepHoleVerdict classify_odd_boundary(const Field& f, std::size_t k, Elem theta, std::span<const Elem> w);

/// Dispatches on the characteristic.
DeepHoleVerdict classify_boundary(const Field& f, std::size_t k, Elem theta, std::span<const Elem> w);

/// q = 2^m >= 8 and (3q - 4)/4 <= k <= q - 4.
bool in_even_completeness_range(std::uint32_t q, std::size_t k);
/// q odd and (3q + 3 sqrt(q) - 7)/4 <= k <= q - 4, decided in integers.
bool in_odd_completeness_range(std::uint32_t q, std::size_t k);

struct DeepHoleFamily {
    std::string label;  // "standard", "boundary-pair", "extra"
    /// Canonical syndromes of the family's classes.
    std::vector<std::vector<Elem>> classes;
};

struct FamilyPrediction {
    std::vector<DeepHoleFamily> families;
    bool outside_proved_range = false;
};

/// The closed-form deep-hole classes of TRS_k(F_q, theta) where a
/// classification applies (boundary k or a completeness range), else nullopt.
std::optional<FamilyPrediction> expected_families(const Field& f, std::size_t k, Elem theta);

/// (0, .., 0, 1) of length r.
std::vector<Elem> standard_syndrome(std::size_t r);

}  // namespace trslab
