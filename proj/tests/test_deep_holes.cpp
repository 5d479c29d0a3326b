#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "trslab/deep_holes.hpp"
#include "trslab/determinants.hpp"
#include "trslab/projective.hpp"
#include "trslab/witnesses.hpp"

using namespace trslab;

namespace {

using Rng = std::mt19937_64;
using Syndrome = std::vector<Elem>;

Syndrome scaled(const Field& f, Elem a, std::span<const Elem> w) {
    Syndrome out;
    for (auto x : w) out.push_back(f.mul(a, x));
    return out;
}

// Brute-force deep-hole classes via the distance definition.
std::set<Syndrome> deep_classes_by_distance(const TwistedRSCode& code) {
    const CodewordTable table(code);
    const ProjectiveSpace space(code.field(), code.r());
    std::set<Syndrome> out;
    space.for_each_class([&](std::span<const Elem> w) {
        if (table.distance_to(code.word_from_syndrome(w), code.r() - 1) == code.r()) out.emplace(w.begin(), w.end());
    });
    return out;
}

}  // namespace

TEST(ProjectiveSpace, CountsAndCanonicalForm) {
    const Field f = Field::parse("5");
    const ProjectiveSpace space(f, 3);
    EXPECT_EQ(space.class_count(), 31u);
    EXPECT_EQ(space.affine_size(), 125u);
    std::uint64_t seen = 0, last = 0;
    bool first = true;
    space.for_each_class([&](std::span<const Elem> v) {
        ++seen;
        const auto idx = space.index(v);
        if (!first) EXPECT_GT(idx, last);
        first = false;
        last = idx;
        EXPECT_EQ(space.vector_at(idx), Syndrome(v.begin(), v.end()));
        EXPECT_EQ(space.canonical_index(scaled(f, Elem{3}, v)), idx);
    });
    EXPECT_EQ(seen, 31u);
    Syndrome v{Elem{0}, Elem{2}, Elem{4}};
    EXPECT_TRUE(space.canonicalize(v));
    EXPECT_EQ(v, (Syndrome{Elem{0}, Elem{1}, Elem{2}}));
    Syndrome zero(3, Elem{0});
    EXPECT_FALSE(space.canonicalize(zero));
}

TEST(DeepHoles, Gf8ThetaInverseFamily) {
    const Field f = Field::parse("8");
    const auto code = TwistedRSCode::full(f, 5, f.one());
    const auto deep = is_deep_hole(code, Syndrome{Elem{0}, Elem{1}, Elem{1}});
    EXPECT_TRUE(deep.is_deep_hole);
    EXPECT_FALSE(deep.witness.has_value());

    const Syndrome e0{f.one(), Elem{0}, Elem{0}};
    const auto shallow = is_deep_hole(code, e0);
    EXPECT_FALSE(shallow.is_deep_hole);
    ASSERT_TRUE(shallow.witness.has_value());
    EXPECT_EQ(shallow.witness->size(), 2u);
    EXPECT_TRUE(witness_vanishes(code, e0, *shallow.witness));
    EXPECT_EQ(to_string(shallow.method), "subset-exhaustive");

    EXPECT_FALSE(is_deep_hole(code, Syndrome(3, Elem{0})).is_deep_hole);
}

TEST(DeepHoles, EnumerationAgreesWithDistanceDefinition) {
    for (const char* d : {"4", "5", "7", "8"}) {
        const Field f = Field::parse(d);
        for (std::size_t k = 2; k <= f.q() - 2; ++k) {
            for (std::uint32_t t = 1; t < f.q(); ++t) {
                const auto code = TwistedRSCode::full(f, k, Elem{t});
                const auto got = enumerate_deep_holes(code);
                const std::set<Syndrome> enumerated(got.classes.begin(), got.classes.end());
                ASSERT_EQ(enumerated, deep_classes_by_distance(code)) << d << " k=" << k << " theta=" << t;
                ASSERT_TRUE(std::is_sorted(got.classes.begin(), got.classes.end()));
            }
        }
    }
}

TEST(DeepHoles, Gf8RedundancyTwoCounts) {
    const Field f = Field::parse("8");
    std::size_t total = 0;
    for (std::uint32_t t = 1; t < 8; ++t) {
        const auto code = TwistedRSCode::full(f, 6, Elem{t});
        const auto got = enumerate_deep_holes(code);
        EXPECT_EQ(got.classes.size(), 5u);
        EXPECT_EQ(got.classes_scanned, 9u);
        total += got.classes.size() * 7;
        for (const auto& w : got.classes) {
            if (w[0].is_zero()) continue;
            EXPECT_EQ(f.trace(f.mul(f.div(w[1], w[0]), Elem{t})), f.one());
        }
    }
    EXPECT_EQ(total, 245u);  // 35 syndromes per theta
}

TEST(DeepHoles, Gf16EvenRangeHasOnlyStandardClass) {
    const Field f = Field::parse("16");
    for (std::uint32_t t : {1u, 6u, 15u}) {
        const auto got = enumerate_deep_holes(TwistedRSCode::full(f, 12, Elem{t}), Budget::from_env(), 2);
        ASSERT_EQ(got.classes.size(), 1u);
        EXPECT_EQ(got.classes[0], standard_syndrome(4));
    }
}

TEST(DeepHoles, Gf17ExtraFamily) {
    const Field f = Field::parse("17");
    EXPECT_EQ(f.quadratic_character(f.from_int(-3)), -1);
    for (std::uint32_t t : {1u, 5u}) {
        const Elem theta{t};
        const auto got = enumerate_deep_holes(TwistedRSCode::full(f, 14, theta));
        const Syndrome extra{Elem{0}, f.one(), f.inv(f.mul(f.from_int(3), theta))};
        EXPECT_EQ(got.classes, (std::vector<Syndrome>{standard_syndrome(3), extra}));
    }
}

TEST(DeepHoles, ClassVerdictIsScaleInvariant) {
    const Field f = Field::parse("8");
    const auto code = TwistedRSCode::full(f, 4, Elem{3});
    const ProjectiveSpace space(f, 4);
    space.for_each_class([&](std::span<const Elem> w) {
        const bool base = is_deep_hole(code, w).is_deep_hole;
        for (std::uint32_t a = 2; a < 8; ++a) ASSERT_EQ(is_deep_hole(code, scaled(f, Elem{a}, w)).is_deep_hole, base);
    });
}

TEST(Classifier, EvenBoundaryExamples) {
    const Field f16 = Field::parse("16");
    const Elem theta{9};
    const Syndrome inv_family{Elem{0}, f16.one(), f16.inv(theta)};
    EXPECT_FALSE(classify_even_boundary(f16, 13, theta, inv_family).is_deep_hole);
    EXPECT_TRUE(classify_even_boundary(f16, 13, theta, standard_syndrome(3)).is_deep_hole);
    EXPECT_TRUE(classify_even_boundary(f16, 15, theta, Syndrome{Elem{4}}).is_deep_hole);

    const Field f8 = Field::parse("8");
    const Elem one = f8.one();
    for (std::uint32_t w1 = 0; w1 < 8; ++w1) {
        const Syndrome w{one, Elem{w1}};
        const bool expect = f8.trace(Elem{w1}) == one;
        EXPECT_EQ(classify_even_boundary(f8, 6, one, w).is_deep_hole, expect);
    }
    EXPECT_TRUE(classify_even_boundary(f8, 5, one, Syndrome{Elem{0}, one, one}).is_deep_hole);
    EXPECT_EQ(to_string(classify_boundary(f8, 5, one, standard_syndrome(3)).method), "classifier");
}

TEST(Classifier, OddBoundaryExamples) {
    const Field f17 = Field::parse("17");
    const Elem theta{2};
    for (std::uint32_t w1 = 0; w1 < 17; ++w1) {
        const Elem disc = f17.sub(f17.one(), f17.mul(f17.from_int(4), f17.mul(Elem{w1}, theta)));
        const auto v = classify_odd_boundary(f17, 15, theta, Syndrome{f17.one(), Elem{w1}});
        EXPECT_EQ(v.is_deep_hole, f17.quadratic_character(disc) == -1);
        EXPECT_FALSE(v.outside_proved_range);
    }
    const Field f19 = Field::parse("19");
    EXPECT_TRUE(classify_odd_boundary(f19, 16, Elem{3}, standard_syndrome(3)).is_deep_hole);
    EXPECT_TRUE(classify_odd_boundary(Field::parse("7"), 4, Elem{1}, standard_syndrome(3)).outside_proved_range);
}

TEST(Classifier, AgreesWithSubsetSearch) {
    for (const char* d : {"8", "16", "17", "19"}) {
        const Field f = Field::parse(d);
        for (std::size_t k = f.q() - 3; k <= f.q() - 1; ++k) {
            for (std::uint32_t t : {1u, 2u, f.q() - 1}) {
                const auto code = TwistedRSCode::full(f, k, Elem{t});
                const ProjectiveSpace space(f, code.r());
                space.for_each_class([&](std::span<const Elem> w) {
                    ASSERT_EQ(classify_boundary(f, k, Elem{t}, w).is_deep_hole, is_deep_hole(code, w).is_deep_hole)
                        << d << " k=" << k << " theta=" << t;
                });
            }
        }
    }
}

TEST(Classifier, CompletenessRanges) {
    EXPECT_TRUE(in_even_completeness_range(16, 12));
    EXPECT_TRUE(in_even_completeness_range(16, 11));
    EXPECT_FALSE(in_even_completeness_range(16, 10));
    EXPECT_FALSE(in_even_completeness_range(16, 13));
    EXPECT_TRUE(in_odd_completeness_range(25, 21));
    EXPECT_FALSE(in_odd_completeness_range(25, 20));
    EXPECT_FALSE(expected_families(Field::parse("16"), 9, Elem{1}).has_value());
    const auto pred = expected_families(Field::parse("16"), 12, Elem{1});
    ASSERT_TRUE(pred.has_value());
    ASSERT_EQ(pred->families.size(), 1u);
    EXPECT_EQ(pred->families[0].label, "standard");
}

TEST(Witnesses, TailPatternWitnessesVanish) {
    const Field f = Field::parse("16");
    for (std::size_t k : {11u, 12u}) {
        for (std::uint32_t t : {1u, 7u}) {
            const auto code = TwistedRSCode::full(f, k, Elem{t});
            for (auto pattern : {TailPattern::kTheta, TailPattern::kThetaInverse}) {
                for (std::uint32_t last : {0u, 3u, 14u}) {
                    const auto w = tail_pattern_syndrome(f, code.r(), Elem{t}, pattern, f.one(), Elem{last});
                    EXPECT_TRUE(matches_tail_pattern(f, w, Elem{t}, pattern));
                    const auto alphas = tail_pattern_witness(code, w, pattern);
                    EXPECT_EQ(alphas.size(), code.r() - 1);
                    EXPECT_TRUE(witness_vanishes(code, w, alphas));
                }
            }
        }
    }
}

TEST(Witnesses, CubicFormWitness) {
    for (const char* d : {"16", "32"}) {
        const Field f = Field::parse(d);
        Rng rng(21);
        std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1), nz(1, f.q() - 1);
        for (int t = 0; t < 5; ++t) {
            const Elem theta{nz(rng)}, w{pick(rng)};
            const auto wit = cubic_form_witness(f, theta, w, 1 + t % 2);
            EXPECT_FALSE(wit.c.is_zero());
            EXPECT_EQ(cubic_form(f, wit.points, theta, w), cubic_form_target(f, wit.c));
        }
    }
    const Field f16 = Field::parse("16");
    EXPECT_EQ(cubic_form_target(f16, f16.one()), f16.primitive());
    const Field f32 = Field::parse("32");
    EXPECT_EQ(cubic_form_target(f32, Elem{6}), Elem{6});
}

TEST(Witnesses, CubicFormMatchesDeterminant) {
    const Field f = Field::parse("16");
    Rng rng(22);
    for (int t = 0; t < 50; ++t) {
        auto pts = f.elements();
        std::shuffle(pts.begin(), pts.end(), rng);
        pts.resize(3);
        const Elem theta{static_cast<std::uint32_t>(1 + t % 15)}, w{static_cast<std::uint32_t>(t % 16)};
        const Syndrome s{Elem{0}, f.one(), f.inv(theta), w};
        EXPECT_EQ(syndrome_det(f, pts, s, theta), f.mul(f.mul(theta, vandermonde(f, pts)), cubic_form(f, pts, theta, w)));
    }
}

TEST(Witnesses, TailPairWitness) {
    const Field f17 = Field::parse("17");
    const auto xs = tail_pair_witness(f17, f17.one(), Elem{0}, 4);
    EXPECT_EQ(xs.size(), 3u);
    EXPECT_EQ(tail_pair_det(f17, xs, f17.one(), Elem{0}), Elem{0});
    const Field f19 = Field::parse("19");
    for (std::uint32_t lambda = 0; lambda < 19; ++lambda) {
        const auto ws = tail_pair_witness(f19, Elem{2}, Elem{lambda}, 4);
        EXPECT_EQ(tail_pair_det(f19, ws, Elem{2}, Elem{lambda}), Elem{0});
        const Syndrome v{Elem{0}, Elem{0}, f19.one(), Elem{lambda}};
        EXPECT_EQ(syndrome_det(f19, ws, v, Elem{2}), Elem{0});
    }
    EXPECT_TRUE(in_tail_pair_range(17, 4));
    EXPECT_FALSE(in_tail_pair_range(17, 7));
}

TEST(Witnesses, ShiftedColumnSignAlternates) {
    const Field f = Field::parse("25");
    Rng rng(23);
    std::uniform_int_distribution<std::uint32_t> nz(1, 24);
    for (std::size_t r = 3; r <= 6; ++r) {
        for (int t = 0; t < 20; ++t) {
            auto pts = f.elements();
            std::shuffle(pts.begin(), pts.end(), rng);
            pts.resize(r);
            const Elem theta{nz(rng)}, b{nz(rng)};
            ASSERT_EQ(shifted_column_det(f, pts, theta, b), shifted_column_det_explicit(f, pts, theta, b)) << r;
        }
    }
}

TEST(Witnesses, ShiftedColumnWitness) {
    const Field f = Field::parse("25");
    const Elem theta{4};
    const auto [x, y] = shifted_column_witness(f, theta, std::vector<Elem>{Elem{3}}, Elem{0});
    EXPECT_NE(x, y);
    EXPECT_EQ(shifted_column_det(f, std::vector<Elem>{Elem{3}, x, y}, theta, Elem{0}), Elem{0});
    const std::vector<Elem> prefix{Elem{5}, Elem{11}};
    const auto [u, v] = shifted_column_witness(f, theta, prefix, Elem{7});
    EXPECT_EQ(shifted_column_det(f, std::vector<Elem>{Elem{5}, Elem{11}, u, v}, theta, Elem{7}), Elem{0});
    EXPECT_TRUE(in_shifted_column_range(25, 4));
    EXPECT_FALSE(in_shifted_column_range(25, 5));
}

TEST(SeroussiRoth, ExtensionExamples) {
    const Field f = Field::parse("8");
    std::vector<Elem> a;
    for (std::uint32_t i = 0; i < 7; ++i) a.push_back(Elem{i});
    const auto fresh = power_column(f, 3, Elem{7});
    EXPECT_TRUE(extends_rs_mds(f, 3, a, fresh));
    EXPECT_FALSE(extends_rs_mds(f, 3, a, power_column(f, 3, Elem{2})));
    EXPECT_TRUE(extends_rs_mds(f, 3, a, infinity_column(f, 3)));
    EXPECT_TRUE(extends_rs_mds(f, 3, a, Syndrome{Elem{0}, Elem{5}, Elem{0}}));
    for (auto w : {fresh, Syndrome{Elem{0}, Elem{1}, Elem{0}}}) {
        EXPECT_TRUE(is_mds(f, Matrix::from_columns([&] {
            std::vector<std::vector<Elem>> cols;
            for (std::size_t j = 0; j < a.size(); ++j) cols.push_back(power_column(f, 3, a[j]));
            cols.push_back(w);
            return cols;
        }())));
    }
    const Field f9 = Field::parse("9");
    std::vector<Elem> b;
    for (std::uint32_t i = 0; i < 8; ++i) b.push_back(Elem{i});
    EXPECT_FALSE(extends_rs_mds(f9, 3, b, Syndrome{Elem{0}, Elem{1}, Elem{0}}));
}
