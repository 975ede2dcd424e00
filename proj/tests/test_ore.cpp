#include <gtest/gtest.h>

#include "support.hpp"

using namespace orelab;

namespace {

std::vector<std::string> small_pool()
{
    std::vector<std::string> out;
    for (const auto& e : support::corpus())
        if (build_ring(e)->order() <= 12)
            out.push_back(e);
    std::mt19937 rng(5);
    while (out.size() < 40) {
        auto e = support::random_expression(rng);
        if (build_ring(e)->order() <= 12)
            out.push_back(e);
    }
    return out;
}

oracle::Mask oracle_closure(const FiniteRing& R, oracle::Mask X)
{
    oracle::Mask c = X | oracle::bit(R.one());
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t a = 0; a < R.order(); ++a)
            for (std::size_t b = 0; b < R.order(); ++b)
                if (oracle::has(c, a) && oracle::has(c, b) && !oracle::has(c, R.mul(Elem(a), Elem(b)))) {
                    c |= oracle::bit(R.mul(Elem(a), Elem(b)));
                    grew = true;
                }
    }
    return c;
}

} // namespace

TEST(MultiplicativeSets, EnumerationMatchesOracle)
{
    for (const auto& e : small_pool()) {
        auto R = build_ring(e);
        EXPECT_EQ(support::masks(all_multiplicative_sets(*R)), oracle::multiplicative_sets(*R)) << e;
    }
}

TEST(MultiplicativeSets, ClassificationMatchesOracle)
{
    for (const auto& e : small_pool()) {
        auto R = build_ring(e);
        for (auto m : oracle::multiplicative_sets(*R)) {
            auto rec = classify_mult_set(*R, support::from_mask(m, R->order()));
            ASSERT_EQ(rec.is_left_ore, oracle::left_ore(*R, m)) << e << " " << m;
            ASSERT_EQ(rec.is_left_denominator, oracle::left_denominator(*R, m)) << e << " " << m;
            ASSERT_EQ(oracle::to_mask(rec.ass), oracle::ass(*R, m)) << e << " " << m;
            ASSERT_EQ(oracle::to_mask(rec.core), oracle::core(*R, m)) << e << " " << m;
            if (!rec.is_left_ore) {
                ASSERT_TRUE(rec.ore_failure.has_value());
                auto [r, s] = *rec.ore_failure;
                // Sr ∩ Rs = ∅ read straight from the table.
                for (std::size_t x = 0; x < R->order(); ++x)
                    for (std::size_t y = 0; y < R->order(); ++y)
                        if (oracle::has(m, x))
                            ASSERT_NE(R->mul(Elem(x), r), R->mul(Elem(y), s));
            }
            if (rec.is_left_ore && !rec.is_left_denominator) {
                ASSERT_TRUE(rec.reversibility_failure.has_value());
                auto [r, s] = *rec.reversibility_failure;
                EXPECT_EQ(R->mul(r, s), R->zero());
                EXPECT_FALSE(oracle::has(oracle::ass(*R, m), r));
            }
            for (auto [r, s] : rec.kill_witness) {
                EXPECT_TRUE(oracle::has(m, s));
                EXPECT_EQ(R->mul(s, r), R->zero());
            }
        }
    }
}

TEST(DenominatorSets, CountsOnSmallRings)
{
    EXPECT_EQ(all_denominator_sets(*build_ring("Z/6")).size(), 7u);
    EXPECT_EQ(all_denominator_sets(*build_ring("F4")).size(), 2u);
    EXPECT_EQ(all_denominator_sets(*build_ring("Z/2")).size(), 1u);
    for (const auto& e : small_pool()) {
        auto R = build_ring(e);
        EXPECT_EQ(support::masks(all_denominator_sets(*R)), oracle::denominator_sets(*R)) << e;
    }
}

TEST(Profile, MaxDenMatchesOracle)
{
    for (const auto& e : small_pool()) {
        auto R = build_ring(e);
        auto p = localization_profile(R);
        EXPECT_TRUE(p.oracle_checked);
        EXPECT_EQ(support::masks(p.max_den_sets), oracle::max_den(*R)) << e;
        EXPECT_EQ(p.oracle_denominator_count, oracle::denominator_sets(*R).size()) << e;
    }
}

TEST(Profile, MaxDenMatchesOracleAtOrderSixteen)
{
    Bounds b;
    b.oracle = 16;
    for (std::string e : {"mat(2,F2)", "prod(F2,tri(2,F2))", "poly(F2,4)", "prod(F4,F4)", "Z/16", "poly(Z/4,2)"}) {
        auto R = build_ring(e);
        auto p = localization_profile(R, b);
        EXPECT_TRUE(p.oracle_checked) << e;
        EXPECT_EQ(support::masks(p.max_den_sets), oracle::max_den(*R)) << e;
    }
}

TEST(Profile, SweepOnlyAboveOracleBound)
{
    auto p = localization_profile(build_ring("mat(2,F2)"));
    EXPECT_FALSE(p.oracle_checked);
    ASSERT_EQ(p.max_den_sets.size(), 1u);
    EXPECT_EQ(p.max_den_sets[0].ass, p.ring->zero_set());
}

TEST(Profile, ZSixFacts)
{
    auto R = build_ring("Z/6");
    auto p = localization_profile(R);
    ASSERT_EQ(p.max_den_sets.size(), 2u);
    EXPECT_EQ(p.ll, R->zero_set());
    EXPECT_EQ(p.non_localizable, ElementSet(6, {0}));
    EXPECT_EQ(p.S0, ElementSet(6, {1, 5}));
    std::vector<ElementSet> asses = p.ass_max;
    std::sort(asses.begin(), asses.end(), canonical_less);
    EXPECT_EQ(asses[0], ElementSet(6, {0, 3}));
    EXPECT_EQ(asses[1], ElementSet(6, {0, 2, 4}));
}

TEST(Profile, OrderBound)
{
    Bounds b;
    b.profile = 8;
    EXPECT_THROW(localization_profile(build_ring("Z/12"), b), OrderBoundExceeded);
    EXPECT_THROW(all_multiplicative_sets(*build_ring("mat(2,F2)")), OrderBoundExceeded);
}

TEST(Errors, MultiplicativityChecks)
{
    auto R = build_ring("Z/6");
    EXPECT_THROW(classify_mult_set(*R, ElementSet(6, {0, 1})), ZeroInSet);
    EXPECT_THROW(classify_mult_set(*R, ElementSet(6, {3})), NotMultiplicative);
    EXPECT_THROW(classify_mult_set(*R, ElementSet(6, {1, 2})), NotMultiplicative);
    EXPECT_THROW(multiplicative_closure(*R, ElementSet(6, {2, 3})), ZeroInClosure);
    EXPECT_EQ(multiplicative_closure(*R, ElementSet(6, {2})), ElementSet(6, {1, 2, 4}));
    EXPECT_THROW(denominator_set_for_prime(R, R->zero_set()), NotPrime);
    EXPECT_THROW(product_support(R, ElementSet(6, {1})), NotAProduct);
}

TEST(Localize, ZSixAtThree)
{
    auto R = build_ring("Z/6");
    auto rec = classify_mult_set(*R, ElementSet(6, {1, 3}));
    ASSERT_TRUE(rec.is_left_denominator);
    EXPECT_EQ(rec.ass, ElementSet(6, {0, 2, 4}));
    auto L = localize(R, rec);
    EXPECT_EQ(L.target->order(), 2u);
    EXPECT_TRUE(L.kernel_is_ass);
    EXPECT_TRUE(L.inverts_denominators);
    EXPECT_TRUE(L.fractions_cover_target);
}

TEST(Localize, RejectsNonDenominatorSets)
{
    std::size_t seen = 0;
    for (const auto& e : small_pool()) {
        auto R = build_ring(e);
        for (auto m : oracle::multiplicative_sets(*R)) {
            if (oracle::left_denominator(*R, m))
                continue;
            auto rec = classify_mult_set(*R, support::from_mask(m, R->order()));
            EXPECT_THROW(localize(R, rec), NotDenominator);
            EXPECT_THROW(core_analysis(R, rec), NotDenominator);
            ++seen;
        }
    }
    EXPECT_GT(seen, 0u);
}

TEST(Core, PropertiesOnEveryDenominatorSet)
{
    for (const auto& e : small_pool()) {
        auto R = build_ring(e);
        for (const auto& d : all_denominator_sets(*R)) {
            auto c = core_analysis(R, d);
            EXPECT_TRUE(c.nonempty) << e;
            EXPECT_TRUE(c.absorbs) << e;
            EXPECT_TRUE(c.push_holds) << e;
            EXPECT_TRUE(c.core_is_denominator) << e;
            EXPECT_TRUE(c.core_ass_equal) << e;
            EXPECT_TRUE(c.targets_identical) << e;
            EXPECT_TRUE(c.max_kernels_equal) << e;
            EXPECT_TRUE(c.max_in_core) << e;
        }
    }
}

TEST(Join, ClosureAndNestedLemma)
{
    for (std::string e : {"Z/6", "Z/12", "tri(2,F2)", "prod(F2,F3)", "opp(tri(2,F2))"}) {
        auto R = build_ring(e);
        auto dens = all_denominator_sets(*R);
        std::size_t nested = 0;
        for (const auto& S : dens)
            for (const auto& T : dens) {
                auto j = semigroup_join(*R, S, T);
                auto want = oracle_closure(*R, oracle::to_mask(S.set | T.set));
                EXPECT_EQ(j.zero_in_closure, oracle::has(want, R->zero())) << e;
                if (j.record)
                    EXPECT_EQ(oracle::to_mask(j.record->set), want);
                if (j.ass_nested) {
                    EXPECT_TRUE(j.lemma_holds);
                    ++nested;
                }
            }
        EXPECT_GT(nested, 0u);
    }
}

TEST(Lift, TriangularQuotients)
{
    auto R = build_ring("tri(2,F2)");
    std::size_t asserted = 0;
    for (const auto& I : all_ideals(*R)) {
        if (I.members == R->all())
            continue;
        auto q = quotient_ring(R, I.members);
        for (const auto& d : all_denominator_sets(*q.ring)) {
            auto L = lift_denominator_set(R, I.members, d.set);
            auto S = oracle::to_mask(L.record.set);
            EXPECT_EQ(L.record.is_left_denominator || !L.hypothesis, true);
            EXPECT_EQ(L.record.is_left_denominator, oracle::left_denominator(*R, S));
            if (L.hypothesis) {
                EXPECT_TRUE(L.asserted);
                EXPECT_EQ(oracle::to_mask(L.record.ass), oracle::ass(*R, S));
                ++asserted;
            } else {
                ASSERT_TRUE(L.unkilled.has_value());
                for (std::size_t s = 0; s < R->order(); ++s)
                    if (oracle::has(S, s))
                        EXPECT_NE(R->mul(Elem(s), *L.unkilled), R->zero());
            }
        }
    }
    EXPECT_GT(asserted, 0u);
    auto q = quotient_ring(R, R->zero_set());
    for (auto m : oracle::multiplicative_sets(*q.ring))
        if (!oracle::left_denominator(*q.ring, m))
            EXPECT_THROW(lift_denominator_set(R, R->zero_set(), support::from_mask(m, 8)), NotDenominator);
}

TEST(Primes, DenominatorSetsAttachedToMinimalPrimes)
{
    for (std::string e : {"Z/6", "Z/12", "prod(F2,F3)", "tri(2,F2)", "F4"}) {
        auto R = build_ring(e);
        for (const auto& P : prime_structure(*R).minimal_primes) {
            auto d = denominator_set_for_prime(R, P.members);
            EXPECT_EQ(d.is_denominator, oracle::left_denominator(*R, oracle::to_mask(d.record.set))) << e;
        }
    }
    auto R = build_ring("Z/6");
    auto d = denominator_set_for_prime(R, ElementSet(6, {0, 3}));
    EXPECT_TRUE(d.is_denominator);
    EXPECT_TRUE(d.ass_equals_prime);
}

TEST(Products, SupportFormulaAgainstDirectCheck)
{
    for (std::string e : {"prod(F2,F2)", "prod(F2,F3)", "prod(F2,Z/6)", "prod(Z/4,F2)", "prod(F2,tri(2,F2))"}) {
        auto R = build_ring(e);
        Bounds b;
        b.oracle = 16;
        for (const auto& S : all_multiplicative_sets(*R, b)) {
            auto ps = product_support(R, S);
            auto m = oracle::to_mask(S);
            EXPECT_EQ(ps.ore_direct, oracle::left_ore(*R, m)) << e;
            EXPECT_EQ(ps.denominator_direct, oracle::left_denominator(*R, m)) << e;
            if (ps.ore_direct)
                EXPECT_EQ(oracle::to_mask(ps.ass_formula), oracle::ass(*R, m)) << e;
        }
    }
}

TEST(LocalizationMaximal, Examples)
{
    EXPECT_TRUE(is_localization_maximal(build_ring("F4")).verdict);
    auto M = is_localization_maximal(build_ring("mat(2,F2)"));
    EXPECT_TRUE(M.verdict);
    EXPECT_FALSE(M.exhaustive);
    auto Z6 = is_localization_maximal(build_ring("Z/6"));
    EXPECT_FALSE(Z6.verdict);
    EXPECT_TRUE(Z6.ql_is_identity);
    EXPECT_TRUE(Z6.exhaustive);
    EXPECT_FALSE(Z6.violating.empty());
}
