#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trslab {

/// An element of GF(p^m), stored as the base-p little-endian integer encoding
/// of its polynomial-basis representative. 0 is zero, 1 is the identity.
struct Elem {
    std::uint32_t v = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t index) : v(index) {}

    constexpr bool is_zero() const { return v == 0; }
    constexpr auto operator<=>(const Elem&) const = default;
};

class FieldError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A concrete finite field GF(p^m) with q <= 2^16.
///
/// Arithmetic is table driven: exp/log tables keyed by a fixed primitive
/// element, Zech logarithms for addition in proper extensions of odd
/// characteristic, and precomputed trace and negation tables. The tables are
/// immutable and shared, so copying a Field is cheap and a Field may be used
/// concurrently from any number of threads.
class Field {
   public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// Builds GF(p^m). Without a modulus the smallest monic irreducible of
    /// degree m is used, ordered by the integer value of its encoding
    /// (coefficients constant term first, base p). A supplied modulus is given
    /// constant term first including the leading 1.
    static Field make(std::uint32_t p, std::uint32_t m,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Accepts `p^m`, `p^m/<coeffs>`, or a bare prime power `q`. Coefficients
    /// are digits for p <= 10 (`2^3/1101`) and comma separated otherwise.
    static Field parse(std::string_view descriptor);

    /// `p^m/<coeffs>`, the inverse of parse().
    std::string descriptor() const;

    std::uint32_t p() const { return t_->p; }
    std::uint32_t m() const { return t_->m; }
    std::uint32_t q() const { return t_->q; }
    const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
    bool even() const { return t_->p == 2; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    Elem primitive() const { return Elem{t_->exp[1]}; }

    /// Checked conversion from an encoding index.
    Elem element(std::uint64_t index) const;
    bool contains(Elem a) const { return a.v < t_->q; }
    /// n * 1 for an integer n.
    Elem from_int(std::int64_t n) const;

    std::vector<Elem> elements() const;

    Elem add(Elem a, Elem b) const {
        switch (t_->kind) {
            case Kind::kBinary:
                return Elem{a.v ^ b.v};
            case Kind::kPrime: {
                std::uint32_t s = a.v + b.v;
                return Elem{s >= t_->p ? s - t_->p : s};
            }
            case Kind::kZech:
                break;
        }
        return add_zech(a, b);
    }
    Elem neg(Elem a) const { return Elem{t_->neg[a.v]}; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a.v == 0 || b.v == 0) return Elem{0};
        return Elem{t_->exp[t_->log[a.v] + t_->log[b.v]]};
    }
    /// Throws FieldError for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// a^n with pow(0, 0) = 1.
    Elem pow(Elem a, std::uint64_t n) const;
    /// a^n for signed n; negative n requires a != 0.
    Elem pow_signed(Elem a, std::int64_t n) const;

    /// Discrete logarithm to the base primitive(); a must be nonzero.
    std::uint32_t log(Elem a) const;
    /// primitive()^j.
    Elem exp(std::uint64_t j) const { return Elem{t_->exp[j % (t_->q - 1)]}; }

    /// Absolute trace, an element of the prime subfield (index < p).
    Elem trace(Elem a) const { return Elem{t_->trace[a.v]}; }
    /// Quadratic character in {-1, 0, 1}; odd characteristic only.
    int quadratic_character(Elem a) const;
    bool is_square(Elem a) const;

    bool operator==(const Field& other) const;

   private:
    enum class Kind { kBinary, kPrime, kZech };

    struct Tables {
        std::uint32_t p = 0;
        std::uint32_t m = 0;
        std::uint32_t q = 0;
        std::vector<std::uint32_t> modulus;
        Kind kind = Kind::kPrime;
        std::vector<std::uint32_t> exp;  // length 2(q-1)
        std::vector<std::uint32_t> log;  // log[0] unused
        std::vector<std::uint32_t> neg;
        std::vector<std::uint32_t> zech;  // log(1 + g^i), kNoZech when 1 + g^i = 0
        std::vector<std::uint32_t> trace;
    };
    static constexpr std::uint32_t kNoZech = 0xffffffffu;

    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    Elem add_zech(Elem a, Elem b) const;

    std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n);

/// Monic irreducibility over GF(p) by trial division with every monic
/// polynomial of degree <= deg/2. Coefficients constant term first.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

}  // namespace trslab
