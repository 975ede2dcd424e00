#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "support.hpp"

using namespace orelab;

TEST(ElementSet, AgreesWithStdSet)
{
    std::mt19937 rng(7);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + rng() % kMaxOrder;
        ElementSet a(n), b(n);
        std::set<std::size_t> sa, sb;
        for (int k = 0; k < 40; ++k) {
            auto x = rng() % n, y = rng() % n;
            a.insert(x);
            sa.insert(x);
            b.insert(y);
            sb.insert(y);
        }
        EXPECT_EQ(a.count(), sa.size());
        std::set<std::size_t> inter, uni, diff;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(inter, inter.end()));
        std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(uni, uni.end()));
        std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(diff, diff.end()));
        EXPECT_EQ((a & b).count(), inter.size());
        EXPECT_EQ((a | b).count(), uni.size());
        EXPECT_EQ((a - b).count(), diff.size());
        EXPECT_EQ(a.complement().count(), n - sa.size());
        EXPECT_EQ((a & b).is_subset_of(a), true);
        std::vector<Elem> listed = a.elements();
        EXPECT_TRUE(std::equal(listed.begin(), listed.end(), sa.begin(), sa.end()));
        EXPECT_EQ(ElementSet::full(n).count(), n);
    }
}

TEST(ElementSet, CanonicalOrderIsSizeThenLex)
{
    ElementSet a(6, {1, 5}), b(6, {2, 3}), c(6, {0, 1, 2});
    EXPECT_TRUE(canonical_less(a, b));
    EXPECT_FALSE(canonical_less(b, a));
    EXPECT_TRUE(canonical_less(b, c));
}

TEST(Constructors, Orders)
{
    std::vector<std::pair<std::string, std::size_t>> cases{
        {"Z/6", 6},         {"F4", 4},         {"F9", 9},        {"mat(2,F2)", 16},
        {"tri(2,F2)", 8},   {"tri(3,F2)", 64}, {"poly(F2,3)", 8}, {"quot(poly(F2,3),{4})", 4},
        {"prod(F2,Z/6)", 12}, {"opp(mat(2,F2))", 16}, {"quot(Z/12,{4})", 4}};
    for (const auto& [expr, n] : cases)
        EXPECT_EQ(build_ring(expr)->order(), n) << expr;
}

TEST(Constructors, EncodingsOfIdentity)
{
    // Entries row-major, first entry most significant.
    EXPECT_EQ(build_ring("mat(2,F2)")->one(), 9);
    EXPECT_EQ(build_ring("tri(2,F2)")->one(), 5);
    EXPECT_EQ(build_ring("prod(Z/2,Z/3)")->one(), 4);
    EXPECT_EQ(build_ring("poly(F2,3)")->one(), 1);
}

TEST(Constructors, ResidueArithmetic)
{
    for (std::size_t n : {2u, 5u, 12u, 30u}) {
        auto R = make_zn(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                ASSERT_EQ(R->add(Elem(a), Elem(b)), (a + b) % n);
                ASSERT_EQ(R->mul(Elem(a), Elem(b)), (a * b) % n);
            }
    }
}

TEST(Constructors, FieldsAreDivisionRings)
{
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        auto R = make_field(std::size_t(q));
        auto u = oracle::units(*R);
        EXPECT_EQ(oracle::popcount(u), std::size_t(q - 1)) << q;
        EXPECT_FALSE(oracle::has(u, R->zero()));
    }
}

TEST(Constructors, F4MinimalPolynomial)
{
    // x = 2, x^2 = x + 1 = 3.
    auto R = build_ring("F4");
    EXPECT_EQ(R->mul(2, 2), 3);
    EXPECT_EQ(R->mul(2, 3), 1);
}

TEST(Constructors, OppositeIsInvolution)
{
    for (const auto& e : support::corpus()) {
        auto R = build_ring(e);
        EXPECT_TRUE(build_ring("opp(opp(" + e + "))")->tables_equal(*R)) << e;
        auto O = make_opposite(R);
        for (std::size_t a = 0; a < R->order(); ++a)
            for (std::size_t b = 0; b < R->order(); ++b)
                ASSERT_EQ(O->mul(Elem(a), Elem(b)), R->mul(Elem(b), Elem(a)));
    }
}

TEST(Constructors, Deterministic)
{
    for (const auto& e : support::corpus()) {
        auto a = build_ring(e), b = build_ring(e);
        EXPECT_TRUE(a->tables_equal(*b));
        EXPECT_EQ(a->content_hash(), b->content_hash());
    }
}

TEST(Constructors, ProductComponents)
{
    auto R = build_ring("prod(F2,Z/6)");
    ASSERT_TRUE(R->is_product());
    for (std::size_t e = 0; e < R->order(); ++e) {
        std::vector<Elem> c{R->component(Elem(e), 0), R->component(Elem(e), 1)};
        EXPECT_EQ(R->compose(c), e);
        EXPECT_EQ(e, c[0] * 6 + c[1]);
    }
}

TEST(Constructors, OrderBound)
{
    Bounds b;
    b.profile = 32;
    EXPECT_THROW(build_ring("mat(2,Z/3)", b), OrderBoundExceeded);
    EXPECT_THROW(build_ring("prod(Z/8,Z/8)", b), OrderBoundExceeded);
    EXPECT_NO_THROW(build_ring("tri(2,F2)", b));
}

TEST(Parser, Errors)
{
    for (std::string bad : {"Z/", "Z/1", "F6", "foo(F2)", "prod(F2,", "mat(2 F2)", "quot(Z/6,{9})", "Z/6 x", ""}) {
        EXPECT_THROW(build_ring(bad), ParseError) << bad;
    }
    try {
        build_ring("prod(F2,Q3)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_GT(e.position(), 0u);
    }
}

TEST(Validation, NamesFailingTriple)
{
    auto Z = make_zn(3);
    std::vector<Elem> add(Z->add_table().begin(), Z->add_table().end());
    std::vector<Elem> mul(Z->mul_table().begin(), Z->mul_table().end());
    mul[2 * 3 + 2] = 2;  // 2*2 = 2 breaks associativity or distributivity
    try {
        FiniteRing::make("bad", "test", 3, add, mul, 0, 1);
        FAIL();
    } catch (const AxiomViolation& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("fails at ("), std::string::npos) << msg;
    }
    EXPECT_THROW(FiniteRing::make("short", "test", 3, add, std::vector<Elem>(4, 0), 0, 1), AxiomViolation);
    EXPECT_THROW(FiniteRing::make("zero=one", "test", 3, add, mul, 0, 0), AxiomViolation);
}

TEST(Validation, RandomTableCorruptionIsCaught)
{
    std::mt19937 rng(11);
    for (int round = 0; round < 60; ++round) {
        auto R = build_ring(support::random_expression(rng));
        std::vector<Elem> add(R->add_table().begin(), R->add_table().end());
        std::vector<Elem> mul(R->mul_table().begin(), R->mul_table().end());
        std::size_t n = R->order();
        std::size_t slot = rng() % (n * n);
        Elem old = mul[slot];
        mul[slot] = Elem((old + 1 + rng() % (n - 1)) % n);
        // One wrong product always breaks some axiom: the tables of a ring with
        // given addition and identity are determined by distributivity.
        EXPECT_THROW(FiniteRing::make("x", "x", n, add, mul, R->zero(), R->one()), AxiomViolation) << R->name();
    }
}

TEST(Elements, ClassificationMatchesOracle)
{
    std::mt19937 rng(3);
    std::vector<std::string> exprs = support::corpus();
    for (int i = 0; i < 40; ++i)
        exprs.push_back(support::random_expression(rng));
    for (const auto& e : exprs) {
        auto R = build_ring(e);
        auto ec = classify_elements(*R);
        EXPECT_EQ(oracle::to_mask(ec.units), oracle::units(*R)) << e;
        EXPECT_EQ(oracle::to_mask(ec.regular), oracle::regular(*R)) << e;
        EXPECT_EQ(ec.regular, ec.units) << e;
        EXPECT_TRUE(ec.zero_divisors.contains(R->zero()));
        ec.idempotents.for_each([&](Elem x) { EXPECT_EQ(R->mul(x, x), x); });
    }
}

TEST(Elements, ZeroDivisorsIncludeZero)
{
    auto T = build_ring("tri(2,F2)");
    EXPECT_EQ(classify_elements(*T).zero_divisors.count(), 6u);
    EXPECT_EQ(classify_elements(*build_ring("F4")).zero_divisors, ElementSet(4, {0}));
}

TEST(Kernels, SidesAreIdealsOfTheRightKind)
{
    auto T = build_ring("tri(2,F2)");
    for (std::size_t s = 0; s < T->order(); ++s) {
        auto k = left_kernel(*T, Elem(s));
        k.for_each([&](Elem r) { EXPECT_EQ(T->mul(Elem(s), r), T->zero()); });
        EXPECT_TRUE(is_right_ideal(*T, k));
        EXPECT_TRUE(is_left_ideal(*T, right_kernel(*T, Elem(s))));
    }
}

TEST(Maps, KernelImagePreimage)
{
    auto R = build_ring("Z/12");
    auto q = quotient_ring(R, ElementSet(12, {0, 4, 8}));
    EXPECT_EQ(q.ring->order(), 4u);
    EXPECT_TRUE(q.projection.is_homomorphism());
    EXPECT_EQ(q.projection.kernel(), ElementSet(12, {0, 4, 8}));
    EXPECT_EQ(q.projection.preimage(q.ring->zero_set()), ElementSet(12, {0, 4, 8}));
    EXPECT_EQ(q.projection.image_of(R->all()), q.ring->all());
}

TEST(Isomorphism, KnownPairs)
{
    auto r = ring_isomorphic(build_ring("Z/6"), build_ring("prod(Z/2,Z/3)"));
    ASSERT_TRUE(r);
    EXPECT_TRUE(r.map->is_isomorphism());
    EXPECT_TRUE(ring_isomorphic(build_ring("tri(2,F2)"), build_ring("opp(tri(2,F2))")));
    EXPECT_TRUE(ring_isomorphic(build_ring("quot(poly(F2,3),{4})"), build_ring("poly(F2,2)")));
    EXPECT_TRUE(ring_isomorphic(build_ring("mat(2,F2)"), build_ring("opp(mat(2,F2))")));
}

TEST(Isomorphism, Distinguishes)
{
    auto r = ring_isomorphic(build_ring("Z/4"), build_ring("quot(poly(F2,3),{4})"));
    EXPECT_FALSE(r);
    EXPECT_EQ(r.mismatch, "additive group");
    EXPECT_EQ(ring_isomorphic(build_ring("F4"), build_ring("prod(F2,F2)")).mismatch, "unit count");
    EXPECT_FALSE(ring_isomorphic(build_ring("Z/6"), build_ring("Z/8")));
    EXPECT_FALSE(ring_isomorphic(build_ring("poly(F2,3)"), build_ring("tri(2,F2)")));
}

TEST(Isomorphism, Bound)
{
    Bounds b;
    b.iso = 8;
    EXPECT_THROW(ring_isomorphic(build_ring("mat(2,F2)"), build_ring("mat(2,F2)"), b), IsoBoundExceeded);
}

TEST(Isomorphism, RandomRelabellingIsFound)
{
    std::mt19937 rng(5);
    for (int round = 0; round < 30; ++round) {
        auto R = build_ring(support::random_expression(rng));
        std::size_t n = R->order();
        std::vector<Elem> perm(n);
        for (std::size_t i = 0; i < n; ++i)
            perm[i] = Elem(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Elem> add(n * n), mul(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                add[perm[a] * n + perm[b]] = perm[R->add(Elem(a), Elem(b))];
                mul[perm[a] * n + perm[b]] = perm[R->mul(Elem(a), Elem(b))];
            }
        auto S = FiniteRing::make("relabelled", "test", n, add, mul, perm[R->zero()], perm[R->one()]);
        auto r = ring_isomorphic(R, S);
        ASSERT_TRUE(r) << R->name();
        EXPECT_TRUE(r.map->is_isomorphism());
    }
}

TEST(RingFiles, RoundTrip)
{
    auto dir = std::filesystem::temp_directory_path() / "orelab_ring_files";
    std::filesystem::create_directories(dir);
    for (const auto& e : support::corpus()) {
        auto R = build_ring(e);
        auto path = dir / "ring.json";
        save_ring_file(*R, path);
        auto back = parse_ring_input(path.string());
        EXPECT_TRUE(back->tables_equal(*R)) << e;
        EXPECT_EQ(back->provenance(), "file:ring.json");
    }
}

TEST(RingFiles, InconsistentTableNamesTriple)
{
    auto dir = std::filesystem::temp_directory_path() / "orelab_ring_files";
    std::filesystem::create_directories(dir);
    auto j = ring_to_json(*build_ring("Z/4"));
    j["mul"][2][2] = 2;
    auto path = dir / "bad.json";
    std::ofstream(path) << j.dump();
    try {
        parse_ring_input(path.string());
        FAIL();
    } catch (const AxiomViolation& e) {
        EXPECT_NE(std::string(e.what()).find("fails at ("), std::string::npos);
    }
    std::ofstream(dir / "garbage.json") << "{\"order\": 3, \"add\": [";
    EXPECT_THROW(parse_ring_input((dir / "garbage.json").string()), ParseError);
}
