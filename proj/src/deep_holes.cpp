#include "trslab/deep_holes.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "trslab/determinants.hpp"
#include "trslab/projective.hpp"

namespace trslab {

namespace {

void require_full(const TwistedRSCode& code, std::span<const Elem> w) {
    if (!code.full_length()) throw CodeError("the subset criterion needs a full-length code");
    if (w.size() != code.r()) throw CodeError("syndrome length must be r = " + std::to_string(code.r()));
}

bool all_zero(std::span<const Elem> w) {
    return std::all_of(w.begin(), w.end(), [](Elem x) { return x.is_zero(); });
}

std::vector<std::vector<Elem>> twisted_columns(const TwistedRSCode& code) {
    std::vector<std::vector<Elem>> cols;
    cols.reserve(code.n());
    for (auto a : code.points()) cols.push_back(twisted_column(code.field(), code.r(), code.theta(), a));
    return cols;
}

// Incremental echelon basis for the subset search: rows are kept reduced
// against earlier rows and normalized at their pivot.
class EchelonStack {
   public:
    EchelonStack(const Field& f, std::size_t r) : f_(f), r_(r), rows_(r * (r + 1)), pivots_(r + 1) {}

    std::size_t size() const { return size_; }
    void pop() { --size_; }

    // Reduces v against the stack; pushes it and returns true when independent.
    bool push(std::span<const Elem> v) {
        Elem* row = rows_.data() + size_ * r_;
        std::copy(v.begin(), v.end(), row);
        for (std::size_t i = 0; i < size_; ++i) {
            const Elem c = row[pivots_[i]];
            if (c.is_zero()) continue;
            const Elem* b = rows_.data() + i * r_;
            const Elem nc = f_.neg(c);
            for (std::size_t j = 0; j < r_; ++j) {
                if (!b[j].is_zero()) row[j] = f_.add(row[j], f_.mul(nc, b[j]));
            }
        }
        std::size_t piv = 0;
        while (piv < r_ && row[piv].is_zero()) ++piv;
        if (piv == r_) return false;
        const Elem s = f_.inv(row[piv]);
        for (std::size_t j = piv; j < r_; ++j) row[j] = f_.mul(row[j], s);
        pivots_[size_++] = piv;
        return true;
    }

   private:
    const Field& f_;
    std::size_t r_;
    std::vector<Elem> rows_;
    std::vector<std::size_t> pivots_;
    std::size_t size_ = 0;
};

struct SubsetSearch {
    const std::vector<std::vector<Elem>>& cols;
    std::size_t want;  // r - 1
    EchelonStack stack;
    std::vector<std::size_t> chosen;
    const Budget& budget;
    std::uint64_t nodes = 0;

    // True once a dependent prefix is found; chosen then holds the witness.
    bool run(std::size_t start) {
        const std::size_t depth = chosen.size();
        if (depth == want) return false;
        const std::size_t n = cols.size();
        for (std::size_t i = start; i + (want - depth) <= n; ++i) {
            if ((++nodes & 0xfff) == 0) budget.poll("deep-hole subset search");
            if (!stack.push(cols[i])) {
                chosen.push_back(i);
                for (std::size_t j = i + 1; chosen.size() < want; ++j) chosen.push_back(j);
                return true;
            }
            chosen.push_back(i);
            if (run(i + 1)) return true;
            chosen.pop_back();
            stack.pop();
        }
        return false;
    }
};

bool in_class(const Field& f, std::span<const Elem> w, std::span<const Elem> rep) {
    std::vector<Elem> canon(w.begin(), w.end());
    if (!ProjectiveSpace(f, w.size()).canonicalize(canon)) return false;
    return std::equal(canon.begin(), canon.end(), rep.begin(), rep.end());
}

void require_boundary(const Field& f, std::size_t k, Elem theta, std::span<const Elem> w) {
    if (theta.is_zero() || !f.contains(theta)) throw std::invalid_argument("theta must be a nonzero field element");
    if (k + 3 < f.q() || k >= f.q()) throw std::invalid_argument("boundary classifier needs k in {q-3, q-2, q-1}");
    if (w.size() != f.q() - k) throw std::invalid_argument("syndrome length must be q - k");
    for (auto x : w) {
        if (!f.contains(x)) throw std::invalid_argument("syndrome entry outside the field");
    }
}

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::kSubsetExhaustive:
            return "subset-exhaustive";
        case Method::kCosetOracle:
            return "coset-oracle";
        case Method::kClassifier:
            return "classifier";
    }
    return "unknown";
}

std::vector<Elem> standard_syndrome(std::size_t r) {
    std::vector<Elem> w(r, Elem{0});
    if (r > 0) w.back() = Elem{1};
    return w;
}

bool witness_vanishes(const TwistedRSCode& code, std::span<const Elem> w, std::span<const Elem> witness) {
    if (witness.size() + 1 != w.size()) return false;
    std::vector<Elem> sorted(witness.begin(), witness.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    return syndrome_det(code.field(), witness, w, code.theta()).is_zero();
}

DeepHoleVerdict is_deep_hole(const TwistedRSCode& code, std::span<const Elem> w, const Budget& budget) {
    require_full(code, w);
    DeepHoleVerdict out;
    out.method = Method::kSubsetExhaustive;
    if (all_zero(w)) return out;

    const std::size_t r = code.r();
    budget.require(checked_mul(binomial(code.n(), r - 1), r * r), "deep-hole subset search");

    const auto cols = twisted_columns(code);
    SubsetSearch search{cols, r - 1, EchelonStack(code.field(), r), {}, budget};
    search.stack.push(w);
    if (!search.run(0)) {
        out.is_deep_hole = true;
        return out;
    }
    std::vector<Elem> witness;
    for (auto i : search.chosen) witness.push_back(code.points()[i]);
    if (!witness_vanishes(code, w, witness)) throw std::logic_error("subset search produced a non-vanishing witness");
    out.witness = std::move(witness);
    return out;
}

DeepHoleVerdict is_deep_hole_by_distance(const TwistedRSCode& code, const CodewordTable& table,
                                         std::span<const Elem> w) {
    if (w.size() != code.r()) throw CodeError("syndrome length must be r = " + std::to_string(code.r()));
    DeepHoleVerdict out;
    out.method = Method::kCosetOracle;
    if (all_zero(w)) return out;
    const auto u = code.full_length() ? code.word_from_syndrome(w) : coset_leader(code, w);
    out.is_deep_hole = table.distance_to(u, code.r() - 1) == code.r();
    return out;
}

DeepHoleEnumeration enumerate_deep_holes(const TwistedRSCode& code, const Budget& budget, unsigned jobs) {
    if (!code.full_length()) throw CodeError("deep-hole enumeration needs a full-length code");
    const Field& f = code.field();
    const std::size_t r = code.r();
    const std::size_t m = r - 1;
    const ProjectiveSpace space(f, r);

    DeepHoleEnumeration out;
    out.classes_scanned = space.class_count();
    if (r == 1) {
        out.classes.push_back({f.one()});
        return out;
    }

    const std::uint64_t span_points = ProjectiveSpace(f, m).class_count();
    const std::uint64_t subsets = binomial(code.n(), m);
    budget.require(checked_mul(checked_mul(subsets, span_points), r) + space.affine_size(), "deep-hole enumeration");
    if (space.affine_size() > (std::uint64_t{1} << 30)) {
        throw BudgetExceeded("deep-hole enumeration bitmap", space.affine_size(), std::uint64_t{1} << 30);
    }

    const auto cols = twisted_columns(code);
    const std::size_t q = f.q();
    jobs = std::max(1u, jobs);

    auto worker = [&](unsigned job, std::vector<std::uint8_t>& marked) {
        // multiples[i * q + a] = a * c(alpha_{idx[i]}), flattened over r.
        std::vector<Elem> multiples(m * q * r);
        std::vector<Elem> partial((m + 1) * r);
        std::vector<std::size_t> idx(m);
        for (std::size_t i = 0; i < m; ++i) idx[i] = i;

        auto mark = [&](const Elem* v) {
            std::size_t lead = 0;
            while (v[lead].is_zero()) ++lead;
            const Elem s = f.inv(v[lead]);
            std::uint64_t pos = 0;
            for (std::size_t i = 0; i < r; ++i) pos = pos * q + (i < lead ? 0 : f.mul(v[i], s).v);
            marked[pos] = 1;
        };

        // Leaves are sum_{i >= t} c_i col_i with c_t = 1; partial[level] holds the prefix sum.
        auto expand = [&](auto& self, std::size_t col, std::size_t level) -> void {
            const Elem* acc = partial.data() + level * r;
            if (col == m) {
                mark(acc);
                return;
            }
            Elem* next = partial.data() + (level + 1) * r;
            const Elem* mult = multiples.data() + col * q * r;
            for (std::size_t a = 0; a < q; ++a) {
                const Elem* add = mult + a * r;
                for (std::size_t j = 0; j < r; ++j) next[j] = f.add(acc[j], add[j]);
                self(self, col + 1, level + 1);
            }
        };

        std::uint64_t ordinal = 0;
        for (;;) {
            if (ordinal++ % jobs == job) {
                if ((ordinal & 0x3f) == 0) budget.poll("deep-hole enumeration");
                for (std::size_t i = 0; i < m; ++i) {
                    const auto& c = cols[idx[i]];
                    for (std::size_t a = 0; a < q; ++a) {
                        Elem* dst = multiples.data() + (i * q + a) * r;
                        for (std::size_t j = 0; j < r; ++j) dst[j] = f.mul(Elem{static_cast<std::uint32_t>(a)}, c[j]);
                    }
                }
                for (std::size_t t = 0; t < m; ++t) {
                    std::copy(cols[idx[t]].begin(), cols[idx[t]].end(), partial.begin());
                    expand(expand, t + 1, 0);
                }
            }
            std::size_t i = m;
            while (i > 0 && idx[i - 1] == code.n() - m + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    };

    std::vector<std::vector<std::uint8_t>> marks(jobs, std::vector<std::uint8_t>(space.affine_size(), 0));
    if (jobs == 1) {
        worker(0, marks[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(jobs);
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back([&, j] {
                try {
                    worker(j, marks[j]);
                } catch (...) {
                    errors[j] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        for (unsigned j = 1; j < jobs; ++j) {
            for (std::size_t i = 0; i < marks[0].size(); ++i) marks[0][i] |= marks[j][i];
        }
    }

    space.for_each_class([&](std::span<const Elem> v) {
        if (!marks[0][space.index(v)]) out.classes.emplace_back(v.begin(), v.end());
    });
    return out;
}

DeepHoleVerdict classify_even_boundary(const Field& f, std::size_t k, Elem theta, std::span<const Elem> w) {
    if (!f.even() || f.q() < 8) throw std::invalid_argument("even boundary classifier needs q = 2^m >= 8");
    require_boundary(f, k, theta, w);
    DeepHoleVerdict out;
    out.method = Method::kClassifier;
    if (all_zero(w)) return out;
    switch (w.size()) {
        case 1:
            out.is_deep_hole = true;
            break;
        case 2:
            out.is_deep_hole = w[0].is_zero() || f.trace(f.div(f.mul(w[1], theta), w[0])) == f.one();
            break;
        default: {
            const std::vector<Elem> extra{Elem{0}, f.one(), f.inv(theta)};
            out.is_deep_hole = in_class(f, w, standard_syndrome(3)) || (f.m() % 2 == 1 && in_class(f, w, extra));
        }
    }
    return out;
}

DeepHoleVerdict classify_odd_boundary(const Field& f, std::size_t k, Elem theta, std::span<const Elem> w) {
    if (f.even()) throw std::invalid_argument("odd boundary classifier needs odd q");
    require_boundary(f, k, theta, w);
    DeepHoleVerdict out;
    out.method = Method::kClassifier;
    out.outside_proved_range = f.q() <= 16;
    if (all_zero(w)) return out;
    switch (w.size()) {
        case 1:
            out.is_deep_hole = true;
            break;
        case 2: {
            const Elem disc = f.sub(f.mul(w[0], w[0]), f.mul(f.from_int(4), f.mul(w[0], f.mul(w[1], theta))));
            out.is_deep_hole = w[0].is_zero() || f.quadratic_character(disc) == -1;
            break;
        }
        default: {
            bool deep = in_class(f, w, standard_syndrome(3));
            const Elem three_theta = f.mul(f.from_int(3), theta);
            if (!deep && f.quadratic_character(f.from_int(-3)) == -1 && !three_theta.is_zero()) {
                const std::vector<Elem> extra{Elem{0}, f.one(), f.inv(three_theta)};
                deep = in_class(f, w, extra);
            }
            out.is_deep_hole = deep;
        }
    }
    return out;
}

DeepHoleVerdict classify_boundary(const Field& f, std::size_t k, Elem theta, std::span<const Elem> w) {
    return f.even() ? classify_even_boundary(f, k, theta, w) : classify_odd_boundary(f, k, theta, w);
}

bool in_even_completeness_range(std::uint32_t q, std::size_t k) {
    if (q < 8 || (q & (q - 1)) != 0) return false;
    return 4 * k + 4 >= 3 * static_cast<std::size_t>(q) && k + 4 <= q;
}

bool in_odd_completeness_range(std::uint32_t q, std::size_t k) {
    if (q % 2 == 0 || k + 4 > q) return false;
    const long long slack = 4 * static_cast<long long>(k) - 3 * static_cast<long long>(q) + 7;
    return slack >= 0 && slack * slack >= 9 * static_cast<long long>(q);
}

std::optional<FamilyPrediction> expected_families(const Field& f, std::size_t k, Elem theta) {
    const std::uint32_t q = f.q();
    if (k < 2 || k >= q) return std::nullopt;
    const std::size_t r = q - k;
    FamilyPrediction out;
    out.families.push_back({"standard", {standard_syndrome(r)}});

    const bool boundary = r <= 3 && (f.even() ? q >= 8 : true);
    if (boundary) {
        out.outside_proved_range = !f.even() && q <= 16;
        if (r == 2) {
            DeepHoleFamily pair{"boundary-pair", {}};
            for (auto w1 : f.elements()) {
                const std::vector<Elem> w{f.one(), w1};
                if (classify_boundary(f, k, theta, w).is_deep_hole) pair.classes.push_back(w);
            }
            out.families.push_back(std::move(pair));
        } else if (r == 3) {
            DeepHoleFamily extra{"extra", {}};
            if (f.even() && f.m() % 2 == 1) {
                extra.classes.push_back({Elem{0}, f.one(), f.inv(theta)});
            } else if (!f.even() && f.p() != 3 && f.quadratic_character(f.from_int(-3)) == -1) {
                extra.classes.push_back({Elem{0}, f.one(), f.inv(f.mul(f.from_int(3), theta))});
            }
            out.families.push_back(std::move(extra));
        }
        return out;
    }
    if (in_even_completeness_range(q, k) || in_odd_completeness_range(q, k)) return out;
    return std::nullopt;
}

}  // namespace trslab
