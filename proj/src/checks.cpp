#include "trslab/checks.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "trslab/char_sums.hpp"
#include "trslab/deep_holes.hpp"
#include "trslab/determinants.hpp"
#include "trslab/poly.hpp"
#include "trslab/projective.hpp"
#include "trslab/witnesses.hpp"

namespace trslab {

namespace {

constexpr std::size_t kMaxWitnesses = 16;
constexpr std::size_t kThetaSample = 8;

using Ints = std::vector<std::int64_t>;
using Rng = std::mt19937_64;

Ints ints(std::span<const Elem> v) {
    Ints out;
    out.reserve(v.size());
    for (auto x : v) out.push_back(x.v);
    return out;
}

Ints concat(Ints a, const Ints& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

class Recorder {
   public:
    Recorder(std::string_view check, const CheckPoint& p, const Field& f) {
        rep_.check = check;
        auto& j = rep_.params;
        j["field"] = f.descriptor();
        j["q"] = f.q();
        if (p.k) j["k"] = *p.k;
        if (p.theta) {
            j["theta"] = *p.theta;
        } else {
            j["theta"] = f.q() <= 16 ? "all" : "sample";
        }
        if (p.r) j["r"] = *p.r;
        if (p.s) j["s"] = *p.s;
        if (p.n) j["n"] = *p.n;
        if (p.sets) j["sets"] = p.sets;
        if (p.trials) j["trials"] = p.trials;
        if (p.exhaustive) j["exhaustive"] = true;
        j["seed"] = p.seed;
    }

    VerificationReport& report() { return rep_; }
    Counts& counts() { return rep_.counts; }

    void pass() { ++rep_.counts.cases; }

    void mismatch(Ints witness, const std::string& note) {
        ++rep_.counts.cases;
        ++rep_.counts.mismatches;
        if (rep_.witnesses.size() < kMaxWitnesses) rep_.witnesses.push_back(std::move(witness));
        if (rep_.note.empty()) rep_.note = note;
    }

    void expect(bool ok, Ints witness, const std::string& note) {
        if (ok) {
            pass();
        } else {
            mismatch(std::move(witness), note);
        }
    }

    FamilyCount& family(std::string_view label) {
        for (auto& fc : families_) {
            if (fc.label == label) return fc;
        }
        families_.push_back({std::string(label), 0, 0});
        return families_.back();
    }

    VerificationReport finish(bool outside_proved_range = false) {
        rep_.families.assign(families_.begin(), families_.end());
        if (outside_proved_range) {
            rep_.verdict = Verdict::kOutsideProvedRange;
            if (rep_.counts.mismatches && rep_.note.empty()) rep_.note = "formula disagrees outside proved range";
        } else {
            rep_.verdict = rep_.counts.mismatches ? Verdict::kFail : Verdict::kPass;
        }
        return std::move(rep_);
    }

   private:
    VerificationReport rep_;
    std::deque<FamilyCount> families_;
};

Elem random_element(const Field& f, Rng& rng) {
    return Elem{std::uniform_int_distribution<std::uint32_t>(0, f.q() - 1)(rng)};
}

Elem random_nonzero(const Field& f, Rng& rng) {
    return Elem{std::uniform_int_distribution<std::uint32_t>(1, f.q() - 1)(rng)};
}

std::vector<Elem> random_vector(const Field& f, std::size_t len, Rng& rng) {
    std::vector<Elem> v(len);
    for (auto& x : v) x = random_element(f, rng);
    return v;
}

std::vector<Elem> random_nonzero_vector(const Field& f, std::size_t len, Rng& rng) {
    for (;;) {
        auto v = random_vector(f, len, rng);
        if (std::any_of(v.begin(), v.end(), [](Elem x) { return !x.is_zero(); })) return v;
    }
}

/// count distinct elements in random order.
std::vector<Elem> random_distinct(const Field& f, std::size_t count, Rng& rng) {
    auto all = f.elements();
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    return all;
}

std::vector<Elem> theta_sweep(const Field& f, const CheckPoint& p) {
    if (p.theta) {
        const Elem t{*p.theta};
        if (t.is_zero() || !f.contains(t)) throw std::invalid_argument("theta must be a nonzero field element");
        return {t};
    }
    std::vector<Elem> all;
    for (std::uint32_t i = 1; i < f.q(); ++i) all.push_back(Elem{i});
    if (f.q() <= 16) return all;
    Rng rng(p.seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(kThetaSample);
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<std::size_t> k_sweep(const CheckPoint& p, std::size_t lo, std::size_t hi) {
    if (p.k) return {*p.k};
    std::vector<std::size_t> ks;
    for (std::size_t k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
}

Field parse_field(const CheckPoint& p) {
    if (p.field.empty()) throw std::invalid_argument("check point needs a field");
    return Field::parse(p.field);
}

void require_even(const Field& f, std::string_view what) {
    if (!f.even()) throw std::invalid_argument(std::string(what) + " needs characteristic 2");
}

void require_odd(const Field& f, std::string_view what) {
    if (f.even()) throw std::invalid_argument(std::string(what) + " needs odd characteristic");
}

bool contains_class(const DeepHoleEnumeration& en, const std::vector<Elem>& w) {
    return std::binary_search(en.classes.begin(), en.classes.end(), w);
}

bool all_zero(std::span<const Elem> v) {
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x.is_zero(); });
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

template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
        fn(std::span<const std::size_t>(idx));
    } while (next_subset(idx, n));
}

std::vector<Elem> as_elems(std::span<const std::size_t> idx) {
    std::vector<Elem> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(Elem{static_cast<std::uint32_t>(i)});
    return out;
}

std::vector<Elem> random_subset_points(const Field& f, std::size_t n, Rng& rng) {
    auto pts = random_distinct(f, n, rng);
    std::sort(pts.begin(), pts.end());
    return pts;
}

// ---------------------------------------------------------------- codes

VerificationReport check_covering_radius(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    Recorder rec("thm4", p, f);
    const auto thetas = theta_sweep(f, p);
    std::optional<std::size_t> single_rho;

    auto run = [&](const TwistedRSCode& code) {
        const std::size_t rho = covering_radius(code, o.budget);
        single_rho = rho;
        auto& fam = rec.family("radius=n-k");
        ++fam.expected;
        if (rho == code.n() - code.k()) ++fam.found;
        rec.expect(rho == code.n() - code.k(),
                   concat({static_cast<std::int64_t>(code.k()), code.theta().v, static_cast<std::int64_t>(rho)},
                          ints(code.points())),
                   "covering radius differs from n - k for " + code.descriptor());
    };

    if (p.sets) {
        Rng rng(p.seed);
        if (f.q() < 4) throw std::invalid_argument("random evaluation sets need q >= 4");
        for (std::size_t i = 0; i < p.sets; ++i) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(3, f.q() - 1)(rng);
            const std::size_t k = p.k ? *p.k : std::uniform_int_distribution<std::size_t>(2, n - 1)(rng);
            if (k + 1 > n) throw std::invalid_argument("k too large for the random evaluation sets");
            const auto pts = random_subset_points(f, n, rng);
            for (auto t : thetas) run(TwistedRSCode::make_trs(f, pts, k, t));
        }
    } else {
        for (auto k : k_sweep(p, 2, f.q() - 2)) {
            for (auto t : thetas) run(TwistedRSCode::full(f, k, t));
        }
    }
    if (rec.counts().cases == 1 && single_rho) rec.report().params["rho"] = *single_rho;
    return rec.finish();
}

VerificationReport check_standard_family(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    Recorder rec("thm5", p, f);
    const auto thetas = theta_sweep(f, p);

    if (p.sets) {
        // Non-full sets: the word of a x^k is at distance n - k.
        Rng rng(p.seed);
        for (std::size_t i = 0; i < p.sets; ++i) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(4, f.q() - 1)(rng);
            const std::size_t k = p.k ? *p.k : std::uniform_int_distribution<std::size_t>(2, n - 2)(rng);
            const auto pts = random_subset_points(f, n, rng);
            for (auto t : thetas) {
                const auto code = TwistedRSCode::make_trs(f, pts, k, t);
                const CodewordTable table(code, o.budget);
                for (std::uint32_t a = 1; a < f.q(); ++a) {
                    std::vector<Elem> u;
                    for (auto x : pts) u.push_back(f.mul(Elem{a}, f.pow(x, k)));
                    const std::size_t d = table.distance_to(u);
                    rec.expect(d == n - k, concat({static_cast<std::int64_t>(k), t.v, a}, ints(pts)),
                               "a x^k is not at distance n - k on " + code.descriptor());
                }
            }
        }
        return rec.finish();
    }

    for (auto k : k_sweep(p, 2, f.q() - 2)) {
        for (auto t : thetas) {
            const auto code = TwistedRSCode::full(f, k, t);
            const std::size_t r = code.r();
            std::optional<CodewordTable> table;
            if (checked_pow(f.q(), k) <= (std::uint64_t{1} << 16)) table.emplace(code, o.budget);
            for (std::uint32_t a = 1; a < f.q(); ++a) {
                std::vector<Elem> w(r, Elem{0});
                w[r - 1] = Elem{a};
                const Ints wit = concat({static_cast<std::int64_t>(k), t.v}, ints(w));
                const auto verdict = is_deep_hole(code, w, o.budget);
                auto& fam = rec.family("standard");
                ++fam.expected;
                if (verdict.is_deep_hole) ++fam.found;
                rec.expect(verdict.is_deep_hole, verdict.witness ? concat(wit, ints(*verdict.witness)) : wit,
                           "standard syndrome rejected by the subset search");

                const auto word = code.word_from_syndrome(w);
                rec.expect(code.generating_polynomial(word) == Poly::monomial(f.neg(Elem{a}), k), wit,
                           "standard syndrome word is not generated by a monomial of degree k");
                if (table) {
                    rec.expect(table->distance_to(word, r - 1) == r, wit, "coset oracle disagrees on a standard syndrome");
                }
            }
        }
    }
    return rec.finish();
}

VerificationReport check_rs_extension(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    Recorder rec("seroussi-roth", p, f);
    if (!p.s) throw std::invalid_argument("seroussi-roth needs s");
    const std::size_t s = *p.s;
    const std::size_t min_n = s + f.q() / 2;  // 2(n - s) + 1 >= q
    if (min_n > f.q()) throw std::invalid_argument("s too large for an extension over this field");

    std::vector<std::vector<Elem>> sets;
    if (p.sets) {
        Rng rng(p.seed);
        for (std::size_t i = 0; i < p.sets; ++i) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(min_n, f.q() - 1)(rng);
            sets.push_back(random_subset_points(f, n, rng));
        }
    } else {
        sets.push_back(f.elements());
    }

    const ProjectiveSpace space(f, s);
    for (const auto& pts : sets) {
        o.budget.require(checked_mul(checked_mul(space.class_count(), binomial(pts.size() + 1, s)), s * s * s),
                         "MDS extension scan");
        const Matrix g = rs_generator(f, s, pts);
        space.for_each_class([&](std::span<const Elem> w) {
            std::vector<std::vector<Elem>> cols;
            for (std::size_t j = 0; j < g.cols(); ++j) cols.push_back(g.column(j));
            cols.emplace_back(w.begin(), w.end());
            const bool mds = is_mds(f, Matrix::from_columns(cols));
            const bool predicted = extends_rs_mds(f, s, pts, w);
            auto& fam = rec.family("extensions");
            if (predicted) ++fam.expected;
            if (mds) ++fam.found;
            rec.expect(mds == predicted, concat(concat({static_cast<std::int64_t>(pts.size()), mds}, ints(w)), ints(pts)),
                       "extension rule disagrees with the MDS check");
        });
        o.budget.poll("MDS extension scan");
    }
    return rec.finish();
}

// ----------------------------------------------------------- deep holes

DeepHoleEnumeration enumerate(Recorder& rec, const TwistedRSCode& code, const RunOptions& o) {
    auto en = enumerate_deep_holes(code, o.budget, o.jobs);
    rec.counts().classes += en.classes_scanned;
    rec.counts().deep_hole_classes += en.classes.size();
    return en;
}

/// Enumerated classes against the closed-form families; with `classifier`
/// every class is also run through the boundary classifier.
bool compare_with_prediction(Recorder& rec, const TwistedRSCode& code, const RunOptions& o, bool classifier) {
    const Field& f = code.field();
    const auto pred = expected_families(f, code.k(), code.theta());
    if (!pred) throw std::invalid_argument("no closed-form classification at " + code.descriptor());
    const auto en = enumerate(rec, code, o);
    const Ints head{static_cast<std::int64_t>(code.k()), code.theta().v};

    std::set<std::vector<Elem>> predicted;
    for (const auto& fam : pred->families) {
        auto& fc = rec.family(fam.label);
        fc.expected += fam.classes.size();
        for (const auto& c : fam.classes) {
            predicted.insert(c);
            if (contains_class(en, c)) {
                ++fc.found;
            } else {
                rec.mismatch(concat(head, ints(c)), "predicted deep hole missing from the enumeration");
            }
        }
    }
    for (const auto& c : en.classes) {
        if (!predicted.count(c)) rec.mismatch(concat(head, ints(c)), "enumerated deep hole outside the predicted families");
    }
    if (rec.counts().mismatches == 0) rec.pass();

    if (classifier) {
        const ProjectiveSpace space(f, code.r());
        space.for_each_class([&](std::span<const Elem> w) {
            const bool closed = classify_boundary(f, code.k(), code.theta(), w).is_deep_hole;
            const bool enumerated = contains_class(en, std::vector<Elem>(w.begin(), w.end()));
            rec.expect(closed == enumerated, concat(head, ints(w)), "boundary classifier disagrees with the enumeration");
        });
    }
    return pred->outside_proved_range;
}

VerificationReport check_even_boundary(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    require_even(f, "thm7");
    Recorder rec("thm7", p, f);
    for (auto k : k_sweep(p, f.q() - 3, f.q() - 1)) {
        for (auto t : theta_sweep(f, p)) compare_with_prediction(rec, TwistedRSCode::full(f, k, t), o, true);
    }
    return rec.finish();
}

VerificationReport check_odd_boundary(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    require_odd(f, "thm10");
    Recorder rec("thm10", p, f);
    rec.report().params["eta_minus_3"] = f.p() == 3 ? 0 : f.quadratic_character(f.neg(f.from_int(3)));
    bool outside = false;
    for (auto k : k_sweep(p, f.q() - 3, f.q() - 1)) {
        for (auto t : theta_sweep(f, p)) outside |= compare_with_prediction(rec, TwistedRSCode::full(f, k, t), o, true);
    }
    return rec.finish(outside);
}

std::vector<std::size_t> range_ks(const CheckPoint& p, const Field& f, bool (*in_range)(std::uint32_t, std::size_t)) {
    if (p.k) {
        if (!in_range(f.q(), *p.k)) throw std::invalid_argument("k outside the completeness range");
        return {*p.k};
    }
    std::vector<std::size_t> ks;
    for (std::size_t k = 2; k < f.q(); ++k) {
        if (in_range(f.q(), k)) ks.push_back(k);
    }
    return ks;
}

VerificationReport check_even_range(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    require_even(f, "thm-even-range");
    Recorder rec("thm-even-range", p, f);
    for (auto k : range_ks(p, f, in_even_completeness_range)) {
        for (auto t : theta_sweep(f, p)) compare_with_prediction(rec, TwistedRSCode::full(f, k, t), o, false);
    }
    return rec.finish();
}

VerificationReport check_odd_range(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    require_odd(f, "thm9");
    Recorder rec("thm9", p, f);
    for (auto k : range_ks(p, f, in_odd_completeness_range)) {
        for (auto t : theta_sweep(f, p)) compare_with_prediction(rec, TwistedRSCode::full(f, k, t), o, false);
    }
    return rec.finish();
}

VerificationReport check_master_oracle(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    Recorder rec("prop8", p, f);
    for (auto k : k_sweep(p, 2, f.q() - 2)) {
        for (auto t : theta_sweep(f, p)) {
            const auto code = TwistedRSCode::full(f, k, t);
            const std::size_t r = code.r();
            const ProjectiveSpace space(f, r);
            o.budget.require(checked_mul(checked_mul(space.class_count(), checked_pow(f.q(), k)), code.n()),
                             "coset oracle scan");
            const CodewordTable table(code, o.budget);
            const auto en = enumerate(rec, code, o);
            const Ints head{static_cast<std::int64_t>(k), t.v};
            std::uint64_t oracle_deep = 0;
            space.for_each_class([&](std::span<const Elem> w) {
                const bool by_enum = contains_class(en, std::vector<Elem>(w.begin(), w.end()));
                const bool by_oracle = table.distance_to(code.word_from_syndrome(w), r - 1) >= r;
                const bool by_search = is_deep_hole(code, w, o.budget).is_deep_hole;
                oracle_deep += by_oracle;
                rec.expect(by_enum == by_oracle && by_search == by_oracle, concat(head, ints(w)),
                           "syndrome criterion disagrees with the coset oracle");
            });
            auto& fam = rec.family("deep-holes");
            fam.expected += oracle_deep;
            fam.found += en.classes.size();
            o.budget.poll("coset oracle scan");
        }
    }
    return rec.finish();
}

VerificationReport check_range_shape(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    require_even(f, "prop9");
    Recorder rec("prop9", p, f);
    for (auto k : range_ks(p, f, in_even_completeness_range)) {
        for (auto t : theta_sweep(f, p)) {
            const auto code = TwistedRSCode::full(f, k, t);
            const auto en = enumerate(rec, code, o);
            const std::size_t r = code.r();
            auto& last = rec.family("last-coordinate");
            auto& tail = rec.family("tail-shape");
            ++last.expected;
            for (const auto& c : en.classes) {
                const bool last_only = all_zero(std::span(c).first(r - 1));
                ++(last_only ? last : tail).found;
                rec.expect(last_only, concat({static_cast<std::int64_t>(k), t.v}, ints(c)),
                           "deep hole with a nonzero coordinate before the last");
            }
        }
    }
    return rec.finish();
}

VerificationReport check_tail_patterns(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    require_even(f, "prop10");
    Recorder rec("prop10", p, f);
    const bool all_leads = f.q() <= 16;
    for (auto k : range_ks(p, f, in_even_completeness_range)) {
        const ProjectiveSpace points(f, f.q() - k - 3);
        o.budget.require(checked_mul(checked_mul(points.affine_size(), 2 * f.q() * f.q()), f.q()), "obstruction scan");
        for (auto t : theta_sweep(f, p)) {
            const auto code = TwistedRSCode::full(f, k, t);
            for (auto pattern : {TailPattern::kTheta, TailPattern::kThetaInverse}) {
                auto& fam = rec.family(to_string(pattern));
                // How many of the pattern's syndromes have an identically
                // vanishing obstruction polynomial.
                auto& shape = rec.family(std::string(to_string(pattern)) + "-obstruction-vanishes");
                for (std::uint32_t a = 1; a < (all_leads ? f.q() : 2u); ++a) {
                    for (std::uint32_t last = 0; last < f.q(); ++last) {
                        const auto w = tail_pattern_syndrome(f, code.r(), t, pattern, Elem{a}, Elem{last});
                        const Ints head = concat({static_cast<std::int64_t>(k), t.v}, ints(w));
                        ++fam.expected;
                        ++shape.expected;
                        bool vanishes = true;
                        for (std::uint64_t i = 0; i < points.affine_size() && vanishes; ++i) {
                            vanishes = obstruction_eval(f, points.vector_at(i), w, t).is_zero();
                        }
                        if (vanishes) ++shape.found;
                        try {
                            const auto wit = tail_pattern_witness(code, w, pattern, o.budget);
                            const bool ok = witness_vanishes(code, w, wit);
                            if (ok) ++fam.found;
                            rec.expect(ok, concat(head, ints(wit)), "tail-pattern witness does not vanish");
                        } catch (const Falsification&) {
                            rec.mismatch(head, std::string(to_string(pattern)) + " tail-pattern syndrome is a deep hole");
                        }
                    }
                }
            }
        }
    }
    return rec.finish();
}

VerificationReport check_tail_pair(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    require_odd(f, "lem8");
    Recorder rec("lem8", p, f);
    std::vector<std::size_t> rs;
    if (p.r) {
        rs = {*p.r};
    } else {
        for (std::size_t r = 4; 4 * r <= f.q() + 8; ++r) rs.push_back(r);
    }
    const std::size_t trials = p.trials ? p.trials : 100;
    Rng rng(p.seed);
    for (auto r : rs) {
        if (!in_tail_pair_range(f.q(), r)) throw std::invalid_argument("r outside the tail-pair range");
        for (auto t : theta_sweep(f, p)) {
            auto& fam = rec.family("witness");
            for (std::uint32_t lam = 0; lam < f.q(); ++lam) {
                const Ints head{static_cast<std::int64_t>(r), t.v, lam};
                ++fam.expected;
                try {
                    const auto xs = tail_pair_witness(f, t, Elem{lam}, r, o.budget);
                    std::vector<Elem> v(r, Elem{0});
                    v[r - 2] = f.one();
                    v[r - 1] = Elem{lam};
                    const bool ok = tail_pair_det(f, xs, t, Elem{lam}).is_zero() && syndrome_det(f, xs, v, t).is_zero();
                    if (ok) ++fam.found;
                    rec.expect(ok, concat(head, ints(xs)), "tail-pair witness does not vanish in closed form");
                } catch (const Falsification&) {
                    rec.mismatch(head, "no tail-pair witness");
                }
            }
            for (std::size_t i = 0; i < trials; ++i) {
                const auto xs = random_distinct(f, r - 1, rng);
                const Elem lam = random_element(f, rng);
                std::vector<Elem> v(r, Elem{0});
                v[r - 2] = f.one();
                v[r - 1] = lam;
                rec.expect(tail_pair_det(f, xs, t, lam) == syndrome_det(f, xs, v, t),
                           concat({static_cast<std::int64_t>(r), t.v, lam.v}, ints(xs)),
                           "tail-pair closed form differs from the determinant");
            }
        }
    }
    return rec.finish();
}

VerificationReport check_shifted_column(const CheckPoint& p, const RunOptions&) {
    const Field f = parse_field(p);
    require_odd(f, "lem9");
    Recorder rec("lem9", p, f);
    std::vector<std::size_t> rs;
    if (p.r) {
        rs = {*p.r};
    } else {
        for (std::size_t r = 3; r <= f.q(); ++r) {
            if (in_shifted_column_range(f.q(), r)) rs.push_back(r);
        }
    }
    const std::size_t prefixes = p.trials ? p.trials : 3;
    Rng rng(p.seed);
    for (auto r : rs) {
        if (!in_shifted_column_range(f.q(), r)) throw std::invalid_argument("r outside the shifted-column range");
        for (auto t : theta_sweep(f, p)) {
            auto& fam = rec.family("witness");
            for (std::uint32_t b = 0; b < f.q(); ++b) {
                for (std::size_t i = 0; i < prefixes; ++i) {
                    const auto prefix = random_distinct(f, r - 2, rng);
                    const Ints head = concat({static_cast<std::int64_t>(r), t.v, b}, ints(prefix));
                    ++fam.expected;
                    try {
                        const auto [x, y] = shifted_column_witness(f, t, prefix, Elem{b});
                        auto pts = prefix;
                        pts.push_back(x);
                        pts.push_back(y);
                        const bool ok = shifted_column_det(f, pts, t, Elem{b}).is_zero();
                        if (ok) ++fam.found;
                        rec.expect(ok, concat(head, {x.v, y.v}), "shifted-column witness fails the closed form");
                    } catch (const Falsification&) {
                        rec.mismatch(head, "no completing pair for the shifted column");
                    }
                }
                const auto pts = random_distinct(f, r, rng);
                rec.expect(shifted_column_det(f, pts, t, Elem{b}) == shifted_column_det_explicit(f, pts, t, Elem{b}),
                           concat({static_cast<std::int64_t>(r), t.v, b}, ints(pts)),
                           "shifted-column closed form differs from the determinant");
            }
        }
    }
    return rec.finish();
}

VerificationReport check_cubic_form(const CheckPoint& p, const RunOptions&) {
    const Field f = parse_field(p);
    require_even(f, "lemA13");
    Recorder rec("lemA13", p, f);
    std::vector<std::size_t> ns;
    if (p.n) {
        ns = {*p.n};
    } else {
        for (std::size_t n = 1; 4 * n <= f.q(); ++n) ns.push_back(n);
    }
    Rng rng(p.seed);
    const std::size_t identity_trials = p.trials ? p.trials : 50;
    for (auto n : ns) {
        for (auto t : theta_sweep(f, p)) {
            auto& fam = rec.family("witness");
            for (std::uint32_t w = 0; w < f.q(); ++w) {
                const Ints head{static_cast<std::int64_t>(n), t.v, w};
                ++fam.expected;
                try {
                    const auto wit = cubic_form_witness(f, t, Elem{w}, n);
                    const std::set<Elem> distinct(wit.points.begin(), wit.points.end());
                    const bool ok = distinct.size() == n && !wit.c.is_zero() &&
                                    cubic_form(f, wit.points, t, Elem{w}) == cubic_form_target(f, wit.c);
                    if (ok) ++fam.found;
                    rec.expect(ok, concat(concat(head, ints(wit.points)), {wit.c.v}), "cubic-form witness fails");
                } catch (const Falsification&) {
                    rec.mismatch(head, "no cubic-form witness");
                }
            }
            // With r - 1 = n points the form is the determinant against
            // (0, .., 0, 1, 1/theta, w) divided by theta V.
            if (n < 2) continue;
            for (std::size_t i = 0; i < identity_trials; ++i) {
                const auto xs = random_distinct(f, n, rng);
                const Elem w = random_element(f, rng);
                std::vector<Elem> s(n + 1, Elem{0});
                s[n - 2] = f.one();
                s[n - 1] = f.inv(t);
                s[n] = w;
                const Elem lhs = syndrome_det(f, xs, s, t);
                const Elem rhs = f.mul(f.mul(t, vandermonde(f, xs)), cubic_form(f, xs, t, w));
                rec.expect(lhs == rhs, concat({static_cast<std::int64_t>(n), t.v, w.v}, ints(xs)),
                           "cubic form is not the normalized determinant");
            }
        }
    }
    return rec.finish();
}

// ----------------------------------------------------------- identities

VerificationReport check_quadratic_identity(const CheckPoint& p, const RunOptions&) {
    const Field f = parse_field(p);
    require_even(f, "lem4");
    Recorder rec("lem4", p, f);
    const std::size_t r = p.r.value_or(4);
    if (r < 3 || r > f.q()) throw std::invalid_argument("lem4 needs 3 <= r <= q");
    Rng rng(p.seed);

    auto test = [&](std::span<const Elem> xs, std::span<const Elem> w, Elem t, Elem x) {
        std::vector<Elem> all(xs.begin(), xs.end());
        all.push_back(x);
        const Quadratic qd = det_quadratic_in_last(f, xs, w, t);
        const Elem qx = f.add(f.mul(qd.a, f.mul(x, x)), f.add(f.mul(qd.b, x), qd.c));
        const Elem rhs = f.mul(f.mul(t, vandermonde(f, all)), qx);
        rec.expect(syndrome_det(f, all, w, t) == rhs, concat(concat({t.v}, ints(all)), ints(w)),
                   "determinant is not theta V Q(x)");
    };

    if (p.exhaustive) {
        const std::size_t samples = p.trials ? p.trials : 200;
        std::vector<std::vector<Elem>> ws;
        for (std::size_t i = 0; i < samples; ++i) ws.push_back(random_nonzero_vector(f, r, rng));
        for (auto t : theta_sweep(f, p)) {
            for_each_subset(f.q(), r - 2, [&](std::span<const std::size_t> idx) {
                const auto xs = as_elems(idx);
                for (const auto& w : ws) {
                    for (std::uint32_t x = 0; x < f.q(); ++x) {
                        if (std::find(xs.begin(), xs.end(), Elem{x}) == xs.end()) test(xs, w, t, Elem{x});
                    }
                }
            });
        }
    } else {
        const std::size_t trials = p.trials ? p.trials : 1000;
        for (std::size_t i = 0; i < trials; ++i) {
            const Elem t = p.theta ? Elem{*p.theta} : random_nonzero(f, rng);
            const auto pts = random_distinct(f, r - 1, rng);
            const auto w = random_nonzero_vector(f, r, rng);
            test(std::span(pts).first(r - 2), w, t, pts.back());
        }
    }
    return rec.finish();
}

VerificationReport check_twisted_det(const CheckPoint& p, const RunOptions&) {
    const Field f = parse_field(p);
    Recorder rec("twisted-det", p, f);
    Rng rng(p.seed);

    auto test = [&](std::span<const Elem> xs, Elem t) {
        const Ints wit = concat({t.v}, ints(xs));
        rec.expect(twisted_det(f, xs, t) == det(f, twisted_matrix(f, xs, t)), wit,
                   "twisted determinant closed form differs from elimination");
        for (auto row : {PowerRow::kNone, PowerRow::kPowerN, PowerRow::kPowerNPlus1}) {
            rec.expect(power_row_det(f, xs, row) == det(f, power_row_matrix(f, xs, row)), wit,
                       "power-row determinant closed form differs from elimination");
        }
    };

    if (p.exhaustive) {
        const std::size_t r = p.r.value_or(4);
        std::vector<Elem> xs(r);
        for (auto t : theta_sweep(f, p)) {
            // All ordered r-tuples of distinct points.
            for_each_subset(f.q(), r, [&](std::span<const std::size_t> idx) {
                auto perm = as_elems(idx);
                do {
                    test(perm, t);
                } while (std::next_permutation(perm.begin(), perm.end()));
            });
        }
    } else {
        const std::size_t trials = p.trials ? p.trials : 1000;
        for (std::size_t i = 0; i < trials; ++i) {
            const std::size_t r =
                p.r ? *p.r : std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(8, f.q()))(rng);
            const Elem t = p.theta ? Elem{*p.theta} : random_nonzero(f, rng);
            test(random_distinct(f, r, rng), t);
        }
    }
    return rec.finish();
}

bool in_vanishing_shape(const Field& f, std::span<const Elem> w, Elem theta) {
    return all_zero(w.first(w.size() - 1)) || matches_tail_pattern(f, w, theta, TailPattern::kThetaInverse);
}

VerificationReport check_obstruction(const CheckPoint& p, const RunOptions& o) {
    const Field f = parse_field(p);
    require_even(f, "lem5");
    Recorder rec("lem5", p, f);
    const std::size_t r = p.r.value_or(4);
    if (r < 4 || r >= f.q()) throw std::invalid_argument("lem5 needs 4 <= r < q");
    const std::size_t trials = p.trials ? p.trials : 1000;
    Rng rng(p.seed);

    auto nonzero_somewhere = [&](std::span<const Elem> w, Elem t) {
        for (std::size_t i = 0; i < trials; ++i) {
            if (!obstruction_eval(f, random_vector(f, r - 3, rng), w, t).is_zero()) return true;
        }
        return false;
    };

    const ProjectiveSpace points(f, r - 3);
    const ProjectiveSpace classes(f, r);
    if (p.exhaustive) {
        o.budget.require(checked_mul(checked_mul(classes.class_count(), points.affine_size()), r * r),
                         "obstruction scan");
    }

    for (auto t : theta_sweep(f, p)) {
        const auto standard = standard_syndrome(r);
        auto& vanish = rec.family("vanishes-on-deep-hole");
        ++vanish.expected;
        bool vanished = true;
        for (std::size_t i = 0; i < trials && vanished; ++i) {
            const auto pt = random_vector(f, r - 3, rng);
            if (!obstruction_eval(f, pt, standard, t).is_zero()) {
                vanished = false;
                rec.mismatch(concat({t.v}, ints(pt)), "obstruction nonzero on the standard deep hole");
            }
        }
        if (vanished) {
            ++vanish.found;
            rec.pass();
        }

        std::vector<Elem> e0(r, Elem{0});
        e0[0] = f.one();
        auto& off = rec.family("nonzero-off-shapes");
        ++off.expected;
        const bool e0_nonzero = nonzero_somewhere(e0, t);
        if (e0_nonzero) ++off.found;
        rec.expect(e0_nonzero, concat({t.v}, ints(e0)), "obstruction vanished at every sampled point off the deep holes");

        if (!p.exhaustive) {
            // A few random syndromes outside both vanishing shapes.
            for (int i = 0; i < 3;) {
                const auto w = random_nonzero_vector(f, r, rng);
                if (in_vanishing_shape(f, w, t)) continue;
                ++i;
                ++off.expected;
                const bool nz = nonzero_somewhere(w, t);
                if (nz) ++off.found;
                rec.expect(nz, concat({t.v}, ints(w)), "obstruction vanished at every sampled point off the deep holes");
            }
            continue;
        }

        // Every class: P vanishes identically only on the standard class and
        // the theta-inverse tail pattern.
        auto& zero = rec.family("identically-zero");
        classes.for_each_class([&](std::span<const Elem> w) {
            bool identically_zero = true;
            for (std::uint64_t i = 0; i < points.affine_size() && identically_zero; ++i) {
                identically_zero = obstruction_eval(f, points.vector_at(i), w, t).is_zero();
            }
            const bool shape = in_vanishing_shape(f, w, t);
            if (shape) ++zero.expected;
            if (identically_zero) ++zero.found;
            ++rec.counts().classes;
            rec.expect(!identically_zero || shape, concat({t.v}, ints(w)),
                       "obstruction vanishes identically outside the two deep-hole shapes");
        });
        o.budget.poll("obstruction scan");
    }
    return rec.finish();
}

// ------------------------------------------------------ character sums

void expect_near(Recorder& rec, Complex a, Complex b, double tol, Ints witness, const std::string& note) {
    auto& fam = rec.family("matched");
    ++fam.expected;
    if (near(a, b, tol)) ++fam.found;
    rec.expect(near(a, b, tol), std::move(witness), note);
}

VerificationReport check_quadratic_sums(const CheckPoint& p, const RunOptions&) {
    const Field f = parse_field(p);
    Recorder rec("prop2", p, f);
    const double tol = sum_tolerance(f);
    Rng rng(p.seed);
    if (f.even() && (p.exhaustive || f.q() <= 16)) {
        for (std::uint32_t b = 1; b < f.q(); ++b) {
            for (std::uint32_t a2 = 1; a2 < f.q(); ++a2) {
                for (std::uint32_t a1 = 0; a1 < f.q(); ++a1) {
                    for (std::uint32_t a0 = 0; a0 < f.q(); ++a0) {
                        const Elem eb{b}, e2{a2}, e1{a1}, e0{a0};
                        expect_near(rec, quadratic_sum_closed_even(f, eb, e2, e1, e0), quadratic_sum(f, eb, e2, e1, e0),
                                    tol, {b, a2, a1, a0}, "even quadratic sum closed form differs from enumeration");
                    }
                }
            }
        }
        return rec.finish();
    }
    const std::size_t trials = p.trials ? p.trials : 100;
    for (std::size_t i = 0; i < trials; ++i) {
        const Elem a2 = random_nonzero(f, rng);
        const Elem a1 = random_element(f, rng);
        const Elem a0 = random_element(f, rng);
        if (f.even()) {
            const Elem b = random_nonzero(f, rng);
            expect_near(rec, quadratic_sum_closed_even(f, b, a2, a1, a0), quadratic_sum(f, b, a2, a1, a0), tol,
                        {b.v, a2.v, a1.v, a0.v}, "even quadratic sum closed form differs from enumeration");
        } else {
            expect_near(rec, quadratic_sum_closed_odd(f, a2, a1, a0), quadratic_sum(f, f.one(), a2, a1, a0), tol,
                        {1, a2.v, a1.v, a0.v}, "odd quadratic sum closed form differs from enumeration");
        }
    }
    return rec.finish();
}

VerificationReport check_quadric_count(const CheckPoint& p, const RunOptions&) {
    const Field f = parse_field(p);
    require_odd(f, "prop4");
    Recorder rec("prop4", p, f);
    const std::size_t trials = p.trials ? p.trials : 100;
    Rng rng(p.seed);
    auto& fam = rec.family("matched");
    for (std::size_t i = 0; i < trials; ++i) {
        const Elem a1 = random_nonzero(f, rng);
        const Elem a2 = random_nonzero(f, rng);
        const Elem b = random_element(f, rng);
        const bool ok = count_quadric(f, a1, a2, b) == count_quadric_brute(f, a1, a2, b);
        ++fam.expected;
        if (ok) ++fam.found;
        rec.expect(ok, {a1.v, a2.v, b.v}, "quadric count closed form differs from enumeration");
    }
    return rec.finish();
}

VerificationReport check_gauss(const CheckPoint& p, const RunOptions&) {
    const Field f = parse_field(p);
    Recorder rec("gauss", p, f);
    const double tol = sum_tolerance(f);
    const double root = std::sqrt(static_cast<double>(f.q()));
    auto& mag = rec.family("magnitude");
    for (std::uint64_t i = 1; i + 1 < f.q(); ++i) {
        for (std::uint32_t b = 1; b < f.q(); ++b) {
            const double m = std::abs(gauss_sum(f, i, Elem{b}));
            ++mag.expected;
            if (std::abs(m - root) <= tol) ++mag.found;
            rec.expect(std::abs(m - root) <= tol, {static_cast<std::int64_t>(i), b}, "|G| differs from sqrt(q)");
        }
        rec.expect(near(gauss_sum(f, i, Elem{0}), Complex(0, 0), tol), {static_cast<std::int64_t>(i), 0},
                   "trivial additive character does not give 0");
    }
    for (std::uint32_t b = 1; b < f.q(); ++b) {
        rec.expect(near(gauss_sum(f, 0, Elem{b}), Complex(-1, 0), tol), {0, b},
                   "trivial multiplicative character does not give -1");
    }
    return rec.finish();
}

VerificationReport check_cubic_sum(const CheckPoint& p, const RunOptions&) {
    const Field f = parse_field(p);
    require_even(f, "lemA10");
    Recorder rec("lemA10", p, f);
    const double tol = sum_tolerance(f);
    for (std::uint32_t a = 1; a < f.q(); ++a) {
        expect_near(rec, cubic_sum(f, Elem{a}), cubic_sum_brute(f, Elem{a}), tol, {a},
                    "cubic sum closed form differs from enumeration");
    }
    return rec.finish();
}

VerificationReport check_surface_cubic(const CheckPoint& p, const RunOptions&) {
    const Field f = parse_field(p);
    require_even(f, "lemA11");
    Recorder rec("lemA11", p, f);
    auto& fam = rec.family("matched");
    for (std::uint32_t a = 1; a < f.q(); ++a) {
        const auto closed = count_surface_cubic(f, Elem{a});
        const auto brute = count_surface_cubic_brute(f, Elem{a});
        ++fam.expected;
        if (closed == brute) ++fam.found;
        rec.expect(closed == brute, {a, closed, brute}, "surface cubic count differs from enumeration");
    }
    return rec.finish();
}

VerificationReport check_fermat_cubic(const CheckPoint& p, const RunOptions&) {
    const Field f = parse_field(p);
    Recorder rec("lemA12", p, f);
    auto& bound = rec.family("bound");
    auto& repr = rec.family("nonzero-representation");
    const bool need_repr = f.q() >= 16;
    for (std::uint32_t b = 0; b < f.q(); ++b) {
        const auto res = count_fermat_cubic(f, Elem{b});
        ++bound.expected;
        const bool above = static_cast<double>(res.count) >= res.lower_bound;
        if (above) ++bound.found;
        rec.expect(above, {b, res.count}, "Fermat cubic count below the Weil bound");
        if (!need_repr) continue;
        ++repr.expected;
        bool ok = false;
        if (res.nonzero_representation) {
            const auto [x, y] = *res.nonzero_representation;
            ok = !x.is_zero() && !y.is_zero() &&
                 f.add(f.mul(x, f.mul(x, x)), f.mul(y, f.mul(y, y))) == Elem{b};
        }
        if (ok) ++repr.found;
        rec.expect(ok, {b}, "no representation by two nonzero cubes");
    }
    return rec.finish();
}

VerificationReport check_weil(const CheckPoint& p, const RunOptions&) {
    const Field f = parse_field(p);
    require_odd(f, "weil");
    Recorder rec("weil", p, f);
    const std::size_t trials = p.trials ? p.trials : 100;
    const double tol = sum_tolerance(f);
    const double root = std::sqrt(static_cast<double>(f.q()));
    Rng rng(p.seed);
    auto& fam = rec.family("within-bound");
    for (std::size_t i = 0; i < trials; ++i) {
        const std::size_t d = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(4, f.q()))(rng);
        const auto roots = random_distinct(f, d, rng);
        std::vector<int> mult(d);
        for (auto& e : mult) e = std::uniform_int_distribution<int>(1, 3)(rng);
        mult[0] |= 1;  // an odd multiplicity keeps f from being a square
        Poly poly = Poly::constant(f.one());
        for (std::size_t j = 0; j < d; ++j) {
            for (int e = 0; e < mult[j]; ++e) poly = mul(f, poly, Poly({f.neg(roots[j]), f.one()}));
        }
        const Elem a = random_nonzero(f, rng);
        const Complex s = multiplicative_poly_sum(f, (f.q() - 1) / 2, a, poly.coeffs());
        const bool ok = std::abs(s) <= static_cast<double>(d - 1) * root + tol;
        ++fam.expected;
        if (ok) ++fam.found;
        rec.expect(ok, concat({a.v}, ints(poly.coeffs())), "character sum exceeds (d - 1) sqrt(q)");
    }
    return rec.finish();
}

// ------------------------------------------------------------ grids

CheckPoint at(std::string field) { return CheckPoint{.field = std::move(field)}; }

CheckPoint at_k(std::string field, std::size_t k) { return CheckPoint{.field = std::move(field), .k = k}; }

std::vector<CheckPoint> fields(std::initializer_list<const char*> qs) {
    std::vector<CheckPoint> out;
    for (auto q : qs) out.push_back(at(q));
    return out;
}

std::vector<CheckPoint> grid_thm4() {
    auto g = fields({"4", "5", "7", "8"});
    g.push_back(CheckPoint{.field = "4", .sets = 20});
    g.push_back(CheckPoint{.field = "8", .sets = 20});
    return g;
}

std::vector<CheckPoint> grid_thm5() {
    auto g = fields({"4", "5", "7", "8", "9", "11", "13", "16"});
    g.push_back(CheckPoint{.field = "8", .sets = 10});
    return g;
}

std::vector<CheckPoint> grid_thm7() { return fields({"8", "16", "32", "64"}); }
std::vector<CheckPoint> grid_thm10() { return fields({"7", "9", "11", "13", "17", "19", "23", "25", "27", "29"}); }
std::vector<CheckPoint> grid_even_range() { return {at_k("16", 11), at_k("16", 12), at_k("32", 28)}; }
std::vector<CheckPoint> grid_thm9() { return {at_k("25", 21), at_k("27", 23), at_k("29", 25)}; }
std::vector<CheckPoint> grid_prop8() { return fields({"4", "5", "7", "8"}); }

std::vector<CheckPoint> grid_lem4() {
    return {CheckPoint{.field = "8", .r = 4, .trials = 200, .exhaustive = true},
            CheckPoint{.field = "16", .r = 4, .trials = 1000}, CheckPoint{.field = "16", .r = 5, .trials = 1000},
            CheckPoint{.field = "32", .r = 6, .trials = 1000}};
}

std::vector<CheckPoint> grid_twisted_det() {
    return {CheckPoint{.field = "8", .r = 4, .exhaustive = true}, CheckPoint{.field = "16", .trials = 1000},
            CheckPoint{.field = "17", .trials = 1000}};
}

std::vector<CheckPoint> grid_lem5() {
    return {CheckPoint{.field = "16", .r = 4, .trials = 1000, .exhaustive = true},
            CheckPoint{.field = "16", .r = 5, .trials = 1000}, CheckPoint{.field = "32", .r = 4, .trials = 1000, .exhaustive = true},
            CheckPoint{.field = "64", .r = 4, .trials = 1000}};
}

std::vector<CheckPoint> grid_lem8() { return fields({"13", "17", "19", "23"}); }

std::vector<CheckPoint> grid_lem9() {
    return {CheckPoint{.field = "25", .r = 3}, CheckPoint{.field = "25", .r = 4}, CheckPoint{.field = "27", .r = 3},
            CheckPoint{.field = "27", .r = 4}, at("49")};
}

std::vector<CheckPoint> grid_lemA10() { return fields({"4", "8", "16", "32", "64", "256"}); }
std::vector<CheckPoint> grid_lemA11() { return fields({"4", "8", "16", "32", "64", "128"}); }
std::vector<CheckPoint> grid_lemA12() { return fields({"8", "16", "25", "27", "32", "64"}); }

std::vector<CheckPoint> grid_lemA13() {
    auto g = fields({"16", "32"});
    g.push_back(CheckPoint{.field = "64", .n = 3});
    return g;
}

std::vector<CheckPoint> grid_prop2() { return fields({"4", "8", "16", "5", "9", "13", "17", "25"}); }
std::vector<CheckPoint> grid_prop4() { return fields({"5", "9", "13", "17"}); }
std::vector<CheckPoint> grid_gauss() { return fields({"4", "5", "8", "9", "16", "25"}); }
std::vector<CheckPoint> grid_weil() { return fields({"9", "13", "17", "25"}); }

std::vector<CheckPoint> grid_seroussi_roth() {
    std::vector<CheckPoint> g;
    for (auto [q, s] : std::initializer_list<std::pair<const char*, std::size_t>>{
             {"7", 2}, {"7", 3}, {"8", 2}, {"8", 3}, {"8", 4}, {"9", 3}, {"16", 3}}) {
        g.push_back(CheckPoint{.field = q, .s = s});
    }
    g.push_back(CheckPoint{.field = "8", .s = 3, .sets = 5});
    g.push_back(CheckPoint{.field = "9", .s = 3, .sets = 5});
    return g;
}

std::vector<CheckInfo> build_registry() {
    std::vector<CheckInfo> r = {
        {"thm4", "codes", "covering radius equals n - k", check_covering_radius, grid_thm4},
        {"thm5", "codes", "(0, .., 0, a) is a deep hole", check_standard_family, grid_thm5},
        {"seroussi-roth", "codes", "MDS extensions of RS codes", check_rs_extension, grid_seroussi_roth},
        {"prop8", "deepholes", "syndrome criterion agrees with the coset oracle", check_master_oracle, grid_prop8},
        {"thm7", "deepholes", "even q boundary classification", check_even_boundary, grid_thm7},
        {"thm-even-range", "deepholes", "even q completeness range has only the standard class", check_even_range,
         grid_even_range},
        {"thm9", "deepholes", "odd q completeness range has only the standard class", check_odd_range, grid_thm9},
        {"thm10", "deepholes", "odd q boundary classification", check_odd_boundary, grid_thm10},
        {"prop9", "deepholes", "deep holes in the even range vanish before the last coordinate", check_range_shape,
         grid_even_range},
        {"prop10", "deepholes", "tail-pattern syndromes have vanishing witnesses", check_tail_patterns,
         grid_even_range},
        {"lem8", "deepholes", "tail-pair determinant and witnesses", check_tail_pair, grid_lem8},
        {"lem9", "deepholes", "shifted-column determinant and witnesses", check_shifted_column, grid_lem9},
        {"lemA13", "deepholes", "cubic form reaches every target", check_cubic_form, grid_lemA13},
        {"lem4", "identities", "determinant is quadratic in the last point", check_quadratic_identity, grid_lem4},
        {"lem5", "identities", "obstruction polynomial vanishes on deep holes", check_obstruction, grid_lem5},
        {"twisted-det", "identities", "twisted and power-row determinants", check_twisted_det, grid_twisted_det},
        {"prop2", "charsum", "quadratic character sums", check_quadratic_sums, grid_prop2},
        {"prop4", "charsum", "points on a diagonal quadric", check_quadric_count, grid_prop4},
        {"gauss", "charsum", "Gauss sum magnitudes", check_gauss, grid_gauss},
        {"lemA10", "charsum", "cubic character sums in characteristic 2", check_cubic_sum, grid_lemA10},
        {"lemA11", "charsum", "points on XY(X + Y) + a", check_surface_cubic, grid_lemA11},
        {"lemA12", "charsum", "sums of two cubes", check_fermat_cubic, grid_lemA12},
        {"weil", "bounds", "multiplicative character sums of polynomials", check_weil, grid_weil},
    };
    std::sort(r.begin(), r.end(), [](const CheckInfo& a, const CheckInfo& b) { return a.id < b.id; });
    return r;
}

}  // namespace

const std::vector<CheckInfo>& registry() {
    static const std::vector<CheckInfo> r = build_registry();
    return r;
}

const CheckInfo* find_check(std::string_view id) {
    for (const auto& c : registry()) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

bool check_matches(const CheckInfo& info, std::string_view filter) {
    const std::string pattern(filter);
    const std::string id(info.id);
    const std::string qualified = std::string(info.group) + "." + id;
    return fnmatch(pattern.c_str(), id.c_str(), 0) == 0 || fnmatch(pattern.c_str(), qualified.c_str(), 0) == 0;
}

VerificationReport run_check(std::string_view id, const CheckPoint& point, const RunOptions& options) {
    const CheckInfo* info = find_check(id);
    if (!info) throw std::invalid_argument("unknown check '" + std::string(id) + "'");

    RunOptions local = options;
    const auto start = std::chrono::steady_clock::now();
    if (options.max_seconds) {
        local.budget.deadline =
            start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(*options.max_seconds));
    }

    VerificationReport rep;
    try {
        rep = info->run(point, local);
    } catch (const BudgetExceeded& e) {
        const Field f = parse_field(point);
        rep = Recorder(info->id, point, f).finish();
        rep.verdict = Verdict::kSkipped;
        rep.note = e.what();
        rep.params["estimate"] = e.estimate();
        rep.params["cap"] = e.cap();
    } catch (const Falsification& e) {
        const Field f = parse_field(point);
        rep = Recorder(info->id, point, f).finish();
        rep.verdict = Verdict::kFail;
        rep.note = e.what();
        rep.witnesses.push_back({});
    }
    rep.metadata.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep.metadata.tool_version = std::string(kToolVersion);
    return rep;
}

std::vector<VerificationReport> run_suite(std::string_view filter, const RunOptions& options) {
    struct Task {
        const CheckInfo* info;
        CheckPoint point;
    };
    std::vector<Task> tasks;
    for (const auto& info : registry()) {
        if (!check_matches(info, filter)) continue;
        for (auto& pt : info.grid()) tasks.push_back({&info, std::move(pt)});
    }
    std::vector<VerificationReport> out(tasks.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));

    RunOptions inner = options;
    if (workers > 1) inner.jobs = 1;
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            try {
                out[i] = run_check(tasks[i].info->id, tasks[i].point, inner);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

int exit_code(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        if (r.verdict == Verdict::kFail) return 1;
    }
    return 0;
}

}  // namespace trslab
