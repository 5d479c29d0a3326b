#include "trslab/codes.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

#include "trslab/projective.hpp"

namespace trslab {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::uint64_t parse_number(std::string_view s, std::string_view what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw CodeError("malformed " + std::string(what) + " '" + std::string(s) + "'");
    }
    return v;
}

bool is_full_set(const Field& f, std::span<const Elem> points) {
    if (points.size() != f.q()) return false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].v != i) return false;
    }
    return true;
}

}  // namespace

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("TRSLAB_BUDGET")) {
        std::uint64_t v = 0;
        std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) b.max_ops = v;
    }
    return b;
}

Budget Budget::unlimited() {
    Budget b;
    b.max_ops = kSaturated;
    return b;
}

void Budget::require(std::uint64_t estimate, std::string_view what) const {
    if (estimate > max_ops) throw BudgetExceeded(std::string(what), estimate, max_ops);
}

void Budget::poll(std::string_view what) const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
        throw BudgetExceeded(std::string(what) + ": wall deadline passed", 0, max_ops);
    }
}

BudgetExceeded::BudgetExceeded(std::string what, std::uint64_t estimate, std::uint64_t cap)
    : std::runtime_error(what + " needs ~" + std::to_string(estimate) + " ops, cap is " + std::to_string(cap)),
      estimate_(estimate),
      cap_(cap) {}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (out > kSaturated / (n - k + i)) return kSaturated;
        out = out * (n - k + i) / i;
    }
    return out;
}

TwistedRSCode::TwistedRSCode(Field f, std::vector<Elem> points, std::size_t k, Elem theta)
    : field_(std::move(f)), points_(std::move(points)), k_(k), theta_(theta), full_length_(false) {
    const std::size_t n = points_.size();
    if (!field_.contains(theta_)) throw CodeError("theta is not an element of " + field_.descriptor());
    std::set<std::uint32_t> seen;
    for (auto a : points_) {
        if (!field_.contains(a)) throw CodeError("evaluation point outside " + field_.descriptor());
        if (!seen.insert(a.v).second) throw CodeError("duplicate evaluation point " + std::to_string(a.v));
    }
    if (k_ < 2 || k_ >= n) {
        throw CodeError("dimension k = " + std::to_string(k_) + " must satisfy 1 < k < n = " + std::to_string(n));
    }
    full_length_ = is_full_set(field_, points_);

    g_ = Matrix(k_, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Elem a = points_[j];
        for (std::size_t i = 0; i + 1 < k_; ++i) g_(i, j) = field_.pow(a, i);
        g_(k_ - 1, j) = field_.add(field_.pow(a, k_ - 1), field_.mul(theta_, field_.pow(a, k_)));
    }

    const std::size_t r = n - k_;
    if (full_length_) {
        h_ = Matrix(r, n);
        for (std::size_t j = 0; j < n; ++j) {
            const Elem a = points_[j];
            for (std::size_t i = 0; i + 1 < r; ++i) h_(i, j) = field_.pow(a, i);
            h_(r - 1, j) = field_.sub(field_.pow(a, r - 1), field_.mul(theta_, field_.pow(a, r)));
        }
    } else {
        h_ = nullspace(field_, g_);
    }
    if (h_.rows() != r || !is_zero(multiply(field_, g_, h_.transpose()))) {
        throw std::logic_error("parity-check construction failed for " + descriptor());
    }
}

TwistedRSCode TwistedRSCode::make_trs(const Field& f, std::vector<Elem> points, std::size_t k, Elem theta) {
    if (theta.is_zero()) throw CodeError("theta = 0 gives a plain Reed-Solomon code; use make_rs");
    return TwistedRSCode(f, std::move(points), k, theta);
}

TwistedRSCode TwistedRSCode::make_rs(const Field& f, std::vector<Elem> points, std::size_t k) {
    return TwistedRSCode(f, std::move(points), k, Elem{0});
}

TwistedRSCode TwistedRSCode::full(const Field& f, std::size_t k, Elem theta) {
    return make_trs(f, f.elements(), k, theta);
}

TwistedRSCode TwistedRSCode::parse(std::string_view descriptor) {
    const auto parts = split(descriptor, ':');
    if (parts.empty() || (parts[0] != "trs" && parts[0] != "rs")) {
        throw CodeError("code descriptor must start with trs: or rs:");
    }
    const bool twisted = parts[0] == "trs";
    std::optional<Field> field;
    std::optional<std::size_t> k;
    std::optional<std::uint64_t> theta;
    std::string_view points_spec = "full";
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto eq = parts[i].find('=');
        if (eq == std::string_view::npos) throw CodeError("malformed descriptor field '" + std::string(parts[i]) + "'");
        const auto key = parts[i].substr(0, eq);
        const auto value = parts[i].substr(eq + 1);
        if (key == "q") {
            field = Field::parse(value);
        } else if (key == "k") {
            k = parse_number(value, "dimension");
        } else if (key == "theta") {
            theta = parse_number(value, "theta");
        } else if (key == "A") {
            points_spec = value;
        } else {
            throw CodeError("unknown descriptor field '" + std::string(key) + "'");
        }
    }
    if (!field || !k) throw CodeError("descriptor needs q= and k=");
    if (twisted && !theta) throw CodeError("trs descriptor needs theta=");
    if (!twisted && theta && *theta != 0) throw CodeError("rs descriptor cannot carry a nonzero theta");

    std::vector<Elem> points;
    if (points_spec == "full") {
        points = field->elements();
    } else {
        for (auto tok : split(points_spec, ',')) points.push_back(field->element(parse_number(tok, "evaluation point")));
    }
    if (!twisted) return make_rs(*field, std::move(points), *k);
    return make_trs(*field, std::move(points), *k, field->element(*theta));
}

std::string TwistedRSCode::descriptor() const {
    std::ostringstream os;
    os << (twisted() ? "trs" : "rs") << ":q=" << field_.descriptor() << ":k=" << k_;
    if (twisted()) os << ":theta=" << theta_.v;
    os << ":A=";
    if (full_length_) {
        os << "full";
    } else {
        for (std::size_t i = 0; i < points_.size(); ++i) os << (i ? "," : "") << points_[i].v;
    }
    return os.str();
}

std::vector<Elem> TwistedRSCode::encode(std::span<const Elem> message) const {
    if (message.size() != k_) throw CodeError("message length must be k = " + std::to_string(k_));
    std::vector<Elem> out(n(), Elem{0});
    for (std::size_t i = 0; i < k_; ++i) {
        if (message[i].is_zero()) continue;
        const auto row = g_.row(i);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = field_.add(out[j], field_.mul(message[i], row[j]));
    }
    return out;
}

std::vector<Elem> TwistedRSCode::syndrome(std::span<const Elem> word) const {
    if (word.size() != n()) throw CodeError("word length must be n = " + std::to_string(n()));
    return apply(field_, h_, word);
}

bool TwistedRSCode::contains(std::span<const Elem> word) const {
    for (auto s : syndrome(word)) {
        if (!s.is_zero()) return false;
    }
    return true;
}

std::vector<Elem> TwistedRSCode::word_from_syndrome(std::span<const Elem> syndrome) const {
    if (!full_length_) throw CodeError("word_from_syndrome needs a full-length code");
    if (syndrome.size() != r()) throw CodeError("syndrome length must be r = " + std::to_string(r()));
    const std::size_t q = field_.q();
    std::vector<Elem> coeffs(q, Elem{0});
    for (std::size_t i = 0; i < syndrome.size(); ++i) coeffs[q - 1 - i] = field_.neg(syndrome[i]);
    std::vector<Elem> out(n());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = eval(field_, coeffs, points_[j]);
    return out;
}

Poly TwistedRSCode::generating_polynomial(std::span<const Elem> word) const {
    return interpolate(field_, points_, word);
}

std::size_t hamming_weight(std::span<const Elem> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return !x.is_zero(); }));
}

std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

CodewordTable::CodewordTable(const TwistedRSCode& code, const Budget& budget) : n_(code.n()) {
    const Field& f = code.field();
    const std::uint64_t count = checked_pow(f.q(), code.k());
    if (count > kMaxCodewords) throw BudgetExceeded("codeword enumeration", count, kMaxCodewords);
    budget.require(checked_mul(count, n_), "codeword enumeration");
    count_ = static_cast<std::size_t>(count);
    data_.assign(count_ * n_, Elem{0});

    const Matrix& g = code.generator();
    std::size_t filled = 1;
    std::vector<Elem> multiple(n_);
    for (std::size_t i = 0; i < code.k(); ++i) {
        const auto row = g.row(i);
        for (std::uint32_t a = 1; a < f.q(); ++a) {
            for (std::size_t j = 0; j < n_; ++j) multiple[j] = f.mul(Elem{a}, row[j]);
            Elem* dst = data_.data() + a * filled * n_;
            const Elem* src = data_.data();
            for (std::size_t c = 0; c < filled; ++c) {
                for (std::size_t j = 0; j < n_; ++j) dst[c * n_ + j] = f.add(src[c * n_ + j], multiple[j]);
            }
        }
        filled *= f.q();
    }
}

std::size_t CodewordTable::distance_to(std::span<const Elem> word, std::size_t stop_at) const {
    if (word.size() != n_) throw std::invalid_argument("distance_to: length mismatch");
    std::size_t best = n_;
    const Elem* c = data_.data();
    for (std::size_t i = 0; i < count_; ++i, c += n_) {
        std::size_t d = 0;
        for (std::size_t j = 0; j < n_ && d < best; ++j) d += c[j] != word[j];
        if (d < best) {
            best = d;
            if (best <= stop_at) break;
        }
    }
    return best;
}

std::size_t error_distance(const TwistedRSCode& code, std::span<const Elem> word, const Budget& budget) {
    return CodewordTable(code, budget).distance_to(word);
}

std::vector<Elem> coset_leader(const TwistedRSCode& code, std::span<const Elem> syndrome) {
    const Field& f = code.field();
    const std::size_t r = code.r();
    if (syndrome.size() != r) throw CodeError("syndrome length must be r = " + std::to_string(r));
    // [H | s] in reduced echelon form; H has full row rank, so s lands on the pivots.
    Matrix aug(r, code.n() + 1);
    const Matrix& h = code.parity_check();
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < code.n(); ++j) aug(i, j) = h(i, j);
        aug(i, code.n()) = syndrome[i];
    }
    const auto pivots = row_reduce(f, aug);
    std::vector<Elem> u(code.n(), Elem{0});
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == code.n()) throw std::logic_error("parity-check matrix is rank deficient");
        u[pivots[i]] = aug(i, code.n());
    }
    return u;
}

std::size_t covering_radius(const TwistedRSCode& code, const Budget& budget) {
    return covering_radius(code, CodewordTable(code, budget), budget);
}

std::size_t covering_radius(const TwistedRSCode& code, const CodewordTable& table, const Budget& budget) {
    const Field& f = code.field();
    const std::size_t r = code.r();
    const ProjectiveSpace space(f, r);
    budget.require(checked_mul(checked_mul(space.class_count(), table.size()), code.n()), "covering radius scan");

    // Coset leaders on the pivot columns: u_P = (H_P)^{-1} s.
    Matrix hr = code.parity_check();
    const auto pivots = row_reduce(f, hr);
    Matrix hp = code.parity_check().select_columns(pivots);
    Matrix aug(r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug(i, j) = hp(i, j);
        aug(i, r + i) = f.one();
    }
    row_reduce(f, aug);
    Matrix inv(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) inv(i, j) = aug(i, r + j);
    }

    std::size_t radius = 0;
    std::vector<Elem> u(code.n(), Elem{0});
    std::uint64_t scanned = 0;
    bool done = false;
    space.for_each_class([&](std::span<const Elem> s) {
        if (done) return;
        if ((++scanned & 0xff) == 0) budget.poll("covering radius scan");
        const auto x = apply(f, inv, s);
        for (std::size_t i = 0; i < r; ++i) u[pivots[i]] = x[i];
        const std::size_t d = table.distance_to(u, radius);
        radius = std::max(radius, d);
        if (radius == r) done = true;
    });
    return radius;
}

std::size_t min_distance(const TwistedRSCode& code, const Budget& budget) {
    const CodewordTable table(code, budget);
    std::size_t best = code.n();
    for (std::size_t i = 1; i < table.size(); ++i) best = std::min(best, hamming_weight(table[i]));
    return best;
}

bool is_mds(const Field& f, const Matrix& m) {
    const std::size_t k = m.rows();
    const std::size_t n = m.cols();
    if (k > n) throw std::invalid_argument("is_mds: more rows than columns");
    if (k == 0) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<std::vector<Elem>> cols(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) cols[i] = m.column(idx[i]);
        if (det_of_columns(f, cols).is_zero()) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace trslab
