#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "trslab/field.hpp"

namespace trslab {

/// Nonzero vectors of F_q^r up to scaling. A class is represented by its
/// canonical member (first nonzero entry 1). Vectors are indexed big-endian,
/// index = sum_i v_i q^{r-1-i}, so ascending index is lexicographic order.
class ProjectiveSpace {
   public:
    ProjectiveSpace(const Field& f, std::size_t r);

    std::size_t dimension() const { return r_; }
    /// (q^r - 1) / (q - 1).
    std::uint64_t class_count() const { return classes_; }
    /// q^r.
    std::uint64_t affine_size() const { return affine_; }

    std::uint64_t index(std::span<const Elem> v) const;
    std::vector<Elem> vector_at(std::uint64_t index) const;

    /// Scales v in place so its first nonzero entry is 1. False for v = 0.
    bool canonicalize(std::span<Elem> v) const;
    /// index() of the canonical member of v's class; v must be nonzero.
    std::uint64_t canonical_index(std::span<const Elem> v) const;

    /// Calls fn(v) for each canonical representative in ascending index order.
    template <class Fn>
    void for_each_class(Fn&& fn) const {
        std::vector<Elem> v(r_);
        for (std::size_t lead = r_; lead-- > 0;) {
            std::fill(v.begin(), v.end(), Elem{0});
            v[lead] = Elem{1};
            do {
                fn(std::span<const Elem>(v));
            } while (advance(v, lead + 1));
        }
    }

   private:
    // Odometer over v[from..], last coordinate fastest.
    bool advance(std::vector<Elem>& v, std::size_t from) const {
        for (std::size_t i = v.size(); i-- > from;) {
            if (v[i].v + 1 < f_.q()) {
                v[i] = Elem{v[i].v + 1};
                return true;
            }
            v[i] = Elem{0};
        }
        return false;
    }

    Field f_;
    std::size_t r_;
    std::uint64_t classes_;
    std::uint64_t affine_;
};

}  // namespace trslab
