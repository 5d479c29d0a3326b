#include "trslab/projective.hpp"

#include <stdexcept>

namespace trslab {

ProjectiveSpace::ProjectiveSpace(const Field& f, std::size_t r) : f_(f), r_(r), classes_(0), affine_(1) {
    if (r == 0) throw std::invalid_argument("projective space needs dimension >= 1");
    for (std::size_t i = 0; i < r; ++i) {
        if (affine_ > (std::uint64_t{1} << 40)) throw std::invalid_argument("projective space too large");
        affine_ *= f.q();
    }
    classes_ = (affine_ - 1) / (f.q() - 1);
}

std::uint64_t ProjectiveSpace::index(std::span<const Elem> v) const {
    std::uint64_t idx = 0;
    for (auto x : v) idx = idx * f_.q() + x.v;
    return idx;
}

std::vector<Elem> ProjectiveSpace::vector_at(std::uint64_t index) const {
    std::vector<Elem> v(r_);
    for (std::size_t i = r_; i-- > 0;) {
        v[i] = Elem{static_cast<std::uint32_t>(index % f_.q())};
        index /= f_.q();
    }
    return v;
}

bool ProjectiveSpace::canonicalize(std::span<Elem> v) const {
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    if (lead == v.size()) return false;
    const Elem s = f_.inv(v[lead]);
    for (std::size_t i = lead; i < v.size(); ++i) v[i] = f_.mul(v[i], s);
    return true;
}

std::uint64_t ProjectiveSpace::canonical_index(std::span<const Elem> v) const {
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    if (lead == v.size()) throw std::invalid_argument("zero vector has no projective class");
    const Elem s = f_.inv(v[lead]);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i) idx = idx * f_.q() + f_.mul(v[i], s).v;
    return idx;
}

}  // namespace trslab
