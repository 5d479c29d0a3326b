#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trslab/field.hpp"
#include "trslab/matrix.hpp"
#include "trslab/poly.hpp"

namespace trslab {

/// Work cap for exhaustive searches: an up-front operation estimate is checked
/// against max_ops, and long scans poll the optional wall deadline.
struct Budget {
    static constexpr std::uint64_t kDefaultMaxOps = std::uint64_t{1} << 26;

    std::uint64_t max_ops = kDefaultMaxOps;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    /// Default cap, overridden by TRSLAB_BUDGET when set to a positive integer.
    static Budget from_env();
    static Budget unlimited();

    /// Throws BudgetExceeded when estimate > max_ops.
    void require(std::uint64_t estimate, std::string_view what) const;
    /// Throws BudgetExceeded once the deadline has passed.
    void poll(std::string_view what) const;
};

class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(std::string what, std::uint64_t estimate, std::uint64_t cap);

    std::uint64_t estimate() const { return estimate_; }
    std::uint64_t cap() const { return cap_; }

   private:
    std::uint64_t estimate_;
    std::uint64_t cap_;
};

/// Saturating helpers for budget estimates.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

class CodeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// TRS_k(A, theta), or RS_k(A) when built by make_rs (theta = 0).
///
/// G has rows x^0..x^{k-2} and x^{k-1} + theta x^k evaluated on A. A full-length
/// code (A = F_q in ascending index order) carries the explicit parity-check
/// matrix with rows x^0..x^{r-2}, x^{r-1} - theta x^r; otherwise H is a
/// nullspace basis of G and parity_check_derived() is true.
class TwistedRSCode {
   public:
    static TwistedRSCode make_trs(const Field& f, std::vector<Elem> points, std::size_t k, Elem theta);
    static TwistedRSCode make_rs(const Field& f, std::vector<Elem> points, std::size_t k);
    /// Full-length TRS code.
    static TwistedRSCode full(const Field& f, std::size_t k, Elem theta);

    /// `trs:q=<field>:k=<k>:theta=<idx>:A=<full|i,j,..>`; `rs:` selects theta = 0.
    static TwistedRSCode parse(std::string_view descriptor);
    std::string descriptor() const;

    const Field& field() const { return field_; }
    std::span<const Elem> points() const { return points_; }
    std::size_t n() const { return points_.size(); }
    std::size_t k() const { return k_; }
    std::size_t r() const { return points_.size() - k_; }
    Elem theta() const { return theta_; }
    bool twisted() const { return !theta_.is_zero(); }
    bool full_length() const { return full_length_; }
    bool parity_check_derived() const { return !full_length_; }

    const Matrix& generator() const { return g_; }
    const Matrix& parity_check() const { return h_; }

    /// Codeword of sum_{i<k-1} m_i x^i + m_{k-1} (x^{k-1} + theta x^k).
    std::vector<Elem> encode(std::span<const Elem> message) const;
    /// H u^T.
    std::vector<Elem> syndrome(std::span<const Elem> word) const;
    bool contains(std::span<const Elem> word) const;
    /// Evaluations of -sum_i w_i x^{q-1-i}; full-length codes only.
    std::vector<Elem> word_from_syndrome(std::span<const Elem> syndrome) const;
    /// Interpolant of degree < n on the evaluation set.
    Poly generating_polynomial(std::span<const Elem> word) const;

   private:
    TwistedRSCode(Field f, std::vector<Elem> points, std::size_t k, Elem theta);

    Field field_;
    std::vector<Elem> points_;
    std::size_t k_;
    Elem theta_;
    bool full_length_;
    Matrix g_;
    Matrix h_;
};

std::size_t hamming_weight(std::span<const Elem> v);
std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b);

/// Every codeword, stored flat in message-odometer order.
class CodewordTable {
   public:
    static constexpr std::uint64_t kMaxCodewords = std::uint64_t{1} << 22;

    /// Throws BudgetExceeded when q^k exceeds kMaxCodewords or the budget.
    explicit CodewordTable(const TwistedRSCode& code, const Budget& budget = Budget::from_env());

    std::size_t size() const { return count_; }
    std::size_t length() const { return n_; }
    std::span<const Elem> operator[](std::size_t i) const { return {data_.data() + i * n_, n_}; }

    /// min_c d(u, c). Stops early once the distance is <= stop_at.
    std::size_t distance_to(std::span<const Elem> word, std::size_t stop_at = 0) const;

   private:
    std::size_t n_ = 0;
    std::size_t count_ = 0;
    std::vector<Elem> data_;
};

/// d(u, C) by full codeword enumeration.
std::size_t error_distance(const TwistedRSCode& code, std::span<const Elem> word,
                           const Budget& budget = Budget::from_env());

/// Max over syndrome classes of the minimum coset weight. Coset leaders are
/// taken on the pivot columns of H, one per projective class; the scan ends
/// early once the redundancy bound n - k is reached.
std::size_t covering_radius(const TwistedRSCode& code, const Budget& budget = Budget::from_env());
std::size_t covering_radius(const TwistedRSCode& code, const CodewordTable& table,
                            const Budget& budget = Budget::from_env());

std::size_t min_distance(const TwistedRSCode& code, const Budget& budget = Budget::from_env());

/// Every maximal square minor is nonsingular. Requires rows <= cols.
bool is_mds(const Field& f, const Matrix& m);

/// Word supported on the pivot columns of H with the given syndrome.
std::vector<Elem> coset_leader(const TwistedRSCode& code, std::span<const Elem> syndrome);

}  // namespace trslab
