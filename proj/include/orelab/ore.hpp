#pragma once

/**
 * @file ore.hpp
 * @brief Left Ore sets, left denominator sets, assassinators, cores and left
 *        localizations of finite rings.
 *
 * In a finite ring every regular element is a unit, so for a left denominator
 * set S the left localization S⁻¹R is R/ass(S): the projection already
 * inverts S. localize() builds that quotient and checks the universal
 * property instead of assuming it.
 *
 * The maximal left denominator sets are found by a sweep over two-sided
 * ideals 𝔞 with candidate T_𝔞 = π_𝔞⁻¹((R/𝔞)*); below the oracle bound the
 * result is compared against exhaustive enumeration of multiplicative sets.
 */

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "orelab/config.hpp"
#include "orelab/construct.hpp"
#include "orelab/ideals.hpp"
#include "orelab/ring.hpp"

namespace orelab {

using ElemPair = std::pair<Elem, Elem>;

struct DenominatorSetRecord
{
    ElementSet set;
    bool is_left_ore = false;
    /// (r, s) with Sr ∩ Rs = ∅.
    std::optional<ElemPair> ore_failure;
    /// rs = 0 implies r ∈ ass(S), for all r ∈ R, s ∈ S.
    bool reversible = false;
    /// (r, s) with rs = 0 and r ∉ ass(S).
    std::optional<ElemPair> reversibility_failure;
    bool is_left_denominator = false;
    /// {r : sr = 0 for some s ∈ S}; an ideal whenever S is left Ore.
    ElementSet ass;
    bool ass_is_ideal = false;
    /// {s ∈ S : ker(s·) = ass(S)}.
    ElementSet core;
    /// (r, s) with s·r = 0, one per r ∈ ass(S), s minimal.
    std::vector<ElemPair> kill_witness;

    friend bool operator==(const DenominatorSetRecord& a, const DenominatorSetRecord& b)
    {
        return a.set == b.set;
    }
};

inline bool record_less(const DenominatorSetRecord& a, const DenominatorSetRecord& b)
{
    return canonical_less(a.set, b.set);
}

/// Checks 1 ∈ S, 0 ∉ S and closure; throws ZeroInSet / NotMultiplicative.
inline void require_multiplicative(const FiniteRing& R, const ElementSet& S)
{
    if (S.contains(R.zero()))
        throw ZeroInSet("0 belongs to the set " + format_set(S));
    if (!S.contains(R.one()))
        throw NotMultiplicative("1 is missing from " + format_set(S));
    for (auto a : S.elements())
        for (auto b : S.elements())
            if (!S.contains(R.mul(a, b)))
                throw NotMultiplicative("product " + std::to_string(a) + "*" + std::to_string(b) + " = " +
                                        std::to_string(R.mul(a, b)) + " leaves " + format_set(S));
}

inline bool is_multiplicative(const FiniteRing& R, const ElementSet& S)
{
    try {
        require_multiplicative(R, S);
        return true;
    } catch (const Error&) {
        return false;
    }
}

/// ass(S) = ⋃_{s∈S} ker(s·) for any subset S.
inline ElementSet assassinator(const FiniteRing& R, const ElementSet& S)
{
    ElementSet a(R.order());
    S.for_each([&](Elem s) { a |= left_kernel(R, s); });
    return a;
}

inline DenominatorSetRecord classify_mult_set(const FiniteRing& R, const ElementSet& S)
{
    require_multiplicative(R, S);
    const std::size_t n = R.order();
    DenominatorSetRecord rec;
    rec.set = S;
    auto members = S.elements();

    // Rs for each s ∈ S.
    std::vector<ElementSet> left_multiples;
    for (auto s : members) {
        ElementSet Rs(n);
        for (std::size_t r = 0; r < n; ++r)
            Rs.insert(R.mul(Elem(r), s));
        left_multiples.push_back(Rs);
    }
    rec.is_left_ore = true;
    for (std::size_t r = 0; r < n && rec.is_left_ore; ++r) {
        ElementSet Sr(n);
        for (auto t : members)
            Sr.insert(R.mul(t, Elem(r)));
        for (std::size_t i = 0; i < members.size(); ++i)
            if (!Sr.intersects(left_multiples[i])) {
                rec.is_left_ore = false;
                rec.ore_failure = ElemPair{Elem(r), members[i]};
                break;
            }
    }

    rec.ass = assassinator(R, S);
    rec.ass.for_each([&](Elem r) {
        for (auto s : members)
            if (R.mul(s, r) == R.zero()) {
                rec.kill_witness.emplace_back(r, s);
                break;
            }
    });
    rec.ass_is_ideal = is_two_sided_ideal(R, rec.ass);

    rec.reversible = true;
    for (std::size_t r = 0; r < n && rec.reversible; ++r)
        for (auto s : members)
            if (R.mul(Elem(r), s) == R.zero() && !rec.ass.contains(r)) {
                rec.reversible = false;
                rec.reversibility_failure = ElemPair{Elem(r), s};
                break;
            }
    rec.is_left_denominator = rec.is_left_ore && rec.reversible;

    rec.core = ElementSet(n);
    for (auto s : members)
        if (left_kernel(R, s) == rec.ass)
            rec.core.insert(s);

    if (rec.is_left_ore) {
        ensure(rec.ass_is_ideal, "ass(S) of a left Ore set is not an ideal");
        ensure(!rec.ass.contains(R.one()), "ass(S) of a left Ore set contains 1");
    }
    return rec;
}

/// Smallest multiplicatively closed superset of X ∪ {1}; throws ZeroInClosure.
inline ElementSet multiplicative_closure(const FiniteRing& R, const ElementSet& X)
{
    ElementSet C(R.order(), {R.one()});
    C |= X;
    std::deque<Elem> work;
    C.for_each([&](Elem e) { work.push_back(e); });
    while (!work.empty()) {
        Elem a = work.front();
        work.pop_front();
        for (auto b : C.elements())
            for (Elem p : {R.mul(a, b), R.mul(b, a)})
                if (!C.contains(p)) {
                    C.insert(p);
                    work.push_back(p);
                }
    }
    if (C.contains(R.zero()))
        throw ZeroInClosure("the multiplicative closure of " + format_set(X) + " contains 0");
    return C;
}

// ---------------------------------------------------------------------------
// Localization
// ---------------------------------------------------------------------------

struct LocalizationPresentation
{
    RingPtr source;
    DenominatorSetRecord denominators;
    /// R/ass(S).
    RingPtr target;
    /// σ_S realised as the projection R → R/ass(S).
    RingMap projection;
    /// (s, inverse of π(s) in the target).
    std::vector<ElemPair> inverses;
    bool kernel_is_ass = false;
    bool inverts_denominators = false;
    bool fractions_cover_target = false;
    std::string scale_note;
};

inline LocalizationPresentation localize(const RingPtr& R, const DenominatorSetRecord& S)
{
    if (!S.is_left_denominator)
        throw NotDenominator("cannot localize at " + format_set(S.set) + ": not a left denominator set");
    auto q = quotient_ring(R, S.ass);
    LocalizationPresentation L{R, S, q.ring, q.projection, {}, false, false, false, ""};
    const auto& T = *q.ring;
    L.kernel_is_ass = L.projection.kernel() == S.ass;

    L.inverts_denominators = true;
    std::vector<std::optional<Elem>> inv_of(T.order());
    S.set.for_each([&](Elem s) {
        auto inv = inverse(T, L.projection(s));
        if (!inv)
            L.inverts_denominators = false;
        else {
            L.inverses.emplace_back(s, *inv);
            inv_of[L.projection(s)] = inv;
        }
    });

    // Every target element is π(s)⁻¹π(r) for some s ∈ S, r ∈ R.
    ElementSet reached(T.order());
    for (auto [s, inv] : L.inverses)
        for (std::size_t r = 0; r < R->order(); ++r)
            reached.insert(T.mul(inv, L.projection(Elem(r))));
    L.fractions_cover_target = reached == T.all();

    L.scale_note = "S^-1 R = R/ass(S) because finite rings invert regular elements";
    ensure(L.kernel_is_ass, "localization kernel differs from ass(S)");
    ensure(L.inverts_denominators, "localization does not invert S");
    ensure(L.fractions_cover_target, "left fractions do not cover S^-1 R");
    return L;
}

// ---------------------------------------------------------------------------
// Cores
// ---------------------------------------------------------------------------

struct CoreReport
{
    ElementSet core;
    bool nonempty = false;
    /// S·S_c ⊆ S_c.
    bool absorbs = false;
    /// For every s ∈ S some t ∈ S has ts ∈ S_c: (s, t).
    std::vector<ElemPair> push_witness;
    bool push_holds = false;
    bool core_is_denominator = false;
    bool core_ass_equal = false;
    /// localize(S_c).target and localize(S).target have identical tables.
    bool targets_identical = false;
    /// Max_R(S): elements whose kernel is maximal among {ker(s·)}.
    ElementSet max_kernel_elements;
    bool max_kernels_equal = false;
    bool max_in_core = false;
};

inline CoreReport core_analysis(const RingPtr& R, const DenominatorSetRecord& S)
{
    if (!S.is_left_denominator)
        throw NotDenominator("core analysis needs a left denominator set");
    CoreReport c;
    c.core = S.core;
    c.nonempty = !S.core.empty();
    const auto members = S.set.elements();

    std::vector<ElementSet> kernels;
    for (auto s : members)
        kernels.push_back(left_kernel(*R, s));
    c.max_kernel_elements = ElementSet(R->order());
    std::optional<ElementSet> some_max;
    c.max_kernels_equal = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool maximal = std::none_of(kernels.begin(), kernels.end(), [&](const ElementSet& k) {
            return k != kernels[i] && kernels[i].is_subset_of(k);
        });
        if (!maximal)
            continue;
        c.max_kernel_elements.insert(members[i]);
        if (some_max && *some_max != kernels[i])
            c.max_kernels_equal = false;
        some_max = kernels[i];
    }
    c.max_in_core = c.max_kernel_elements.is_subset_of(S.core);

    if (!c.nonempty)
        return c;

    c.absorbs = true;
    for (auto s : members)
        S.core.for_each([&](Elem sc) { c.absorbs = c.absorbs && S.core.contains(R->mul(s, sc)); });

    c.push_holds = true;
    for (auto s : members) {
        bool found = false;
        for (auto t : members)
            if (S.core.contains(R->mul(t, s))) {
                c.push_witness.emplace_back(s, t);
                found = true;
                break;
            }
        c.push_holds = c.push_holds && found;
    }

    // S_c is a semigroup; adjoining 1 changes neither ass nor the localization.
    auto core_rec = classify_mult_set(*R, S.core | ElementSet(R->order(), {R->one()}));
    c.core_is_denominator = core_rec.is_left_denominator;
    c.core_ass_equal = core_rec.ass == S.ass;
    if (c.core_is_denominator)
        c.targets_identical = localize(R, core_rec).target->tables_equal(*localize(R, S).target);
    return c;
}

// ---------------------------------------------------------------------------
// Joins
// ---------------------------------------------------------------------------

struct JoinResult
{
    /// ass(S) ⊆ ass(T).
    bool ass_nested = false;
    /// Closure of S ∪ T contains 0 (then `record` is empty).
    bool zero_in_closure = false;
    std::optional<DenominatorSetRecord> record;
    /// lann(ST) ⊆ ass(T), ST ∈ Den_l and ass(ST) ⊇ ass(T); checked when nested.
    bool lemma_holds = false;
};

inline JoinResult semigroup_join(const FiniteRing& R, const DenominatorSetRecord& S, const DenominatorSetRecord& T)
{
    JoinResult j;
    j.ass_nested = S.ass.is_subset_of(T.ass);
    try {
        j.record = classify_mult_set(R, multiplicative_closure(R, S.set | T.set));
    } catch (const ZeroInClosure&) {
        j.zero_in_closure = true;
    }
    if (j.ass_nested) {
        ensure(j.record.has_value(), "join of nested denominator sets reached 0");
        auto lann = annihilator(R, j.record->set, Side::left);
        j.lemma_holds = lann.is_subset_of(T.ass) && j.record->is_left_denominator &&
                        T.ass.is_subset_of(j.record->ass);
        ensure(j.lemma_holds, "semigroup join of nested denominator sets violates the join lemma");
    }
    return j;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
// ---------------------------------------------------------------------------

/**
 * Every multiplicative subset of R, sorted canonically. Closed sets are
 * reached by adding one element at a time to a closed set and closing again;
 * each closed set is expanded once.
 */
inline std::vector<ElementSet> all_multiplicative_sets(const FiniteRing& R, const Bounds& bounds = {})
{
    if (R.order() > bounds.oracle)
        throw OrderBoundExceeded("all_multiplicative_sets", R.order(), bounds.oracle);
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> out;
    std::deque<ElementSet> work;
    ElementSet start(R.order(), {R.one()});
    seen.insert(start);
    out.push_back(start);
    work.push_back(start);
    while (!work.empty()) {
        auto C = work.front();
        work.pop_front();
        for (std::size_t x = 0; x < R.order(); ++x) {
            if (C.contains(x) || Elem(x) == R.zero())
                continue;
            auto grown = C;
            grown.insert(x);
            try {
                auto closed = multiplicative_closure(R, grown);
                if (seen.insert(closed).second) {
                    out.push_back(closed);
                    work.push_back(closed);
                }
            } catch (const ZeroInClosure&) {
            }
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

/// Every left denominator set, classified, sorted canonically.
inline std::vector<DenominatorSetRecord> all_denominator_sets(const FiniteRing& R, const Bounds& bounds = {})
{
    std::vector<DenominatorSetRecord> out;
    for (const auto& S : all_multiplicative_sets(R, bounds)) {
        auto rec = classify_mult_set(R, S);
        if (rec.is_left_denominator)
            out.push_back(std::move(rec));
    }
    return out;
}

inline std::vector<DenominatorSetRecord> maximal_by_inclusion(const std::vector<DenominatorSetRecord>& xs)
{
    std::vector<DenominatorSetRecord> out;
    for (const auto& a : xs)
        if (std::none_of(xs.begin(), xs.end(),
                         [&](const DenominatorSetRecord& b) { return b.set != a.set && a.set.is_subset_of(b.set); }))
            out.push_back(a);
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

// ---------------------------------------------------------------------------
// Profile
// ---------------------------------------------------------------------------

struct LocalizationProfile
{
    RingPtr ring;
    /// maxDen_l(R), canonical order.
    std::vector<DenominatorSetRecord> max_den_sets;
    /// assmaxDen_l(R), in the order of max_den_sets.
    std::vector<ElementSet> ass_max;
    /// Kept candidates T_𝔞 ∈ Den_l(R, 𝔞), canonical order.
    std::vector<DenominatorSetRecord> candidates;
    /// Localization radical ll_R.
    ElementSet ll;
    ElementSet localizable;
    ElementSet non_localizable;
    ElementSet completely_localizable;
    /// S₀(R), the largest regular left Ore set (= units).
    ElementSet S0;
    LocalizationPresentation Ql;
    /// maxDen_l was compared against the exhaustive enumeration.
    bool oracle_checked = false;
    std::size_t oracle_denominator_count = 0;
};

/// T_𝔞 = π_𝔞⁻¹((R/𝔞)*).
inline ElementSet unit_preimage(const RingPtr& R, const ElementSet& ideal)
{
    auto q = quotient_ring(R, ideal);
    return q.projection.preimage(classify_elements(*q.ring).units);
}

inline LocalizationProfile localization_profile(const RingPtr& R, const std::vector<Ideal>& ideals,
                                                const Bounds& bounds = {})
{
    if (R->order() > bounds.profile)
        throw OrderBoundExceeded("localization_profile", R->order(), bounds.profile);
    LocalizationProfile p;
    p.ring = R;

    for (const auto& a : ideals) {
        if (a.members == R->all())
            continue;
        auto rec = classify_mult_set(*R, unit_preimage(R, a.members));
        if (rec.is_left_denominator && rec.ass == a.members)
            p.candidates.push_back(std::move(rec));
    }
    std::sort(p.candidates.begin(), p.candidates.end(), record_less);
    p.max_den_sets = maximal_by_inclusion(p.candidates);

    // Same answer through ass-inclusion (maximal T ⊆ S iff ass(T) ⊆ ass(S)).
    std::vector<DenominatorSetRecord> by_ass;
    for (const auto& c : p.candidates)
        if (std::none_of(p.candidates.begin(), p.candidates.end(), [&](const DenominatorSetRecord& d) {
                return d.ass != c.ass && c.ass.is_subset_of(d.ass);
            }))
            by_ass.push_back(c);
    std::sort(by_ass.begin(), by_ass.end(), record_less);
    ensure(by_ass.size() == p.max_den_sets.size() &&
               std::equal(by_ass.begin(), by_ass.end(), p.max_den_sets.begin()),
           "maxDen by inclusion differs from maxDen by ass-inclusion");
    ensure(!p.max_den_sets.empty(), "maxDen_l(R) is empty");

    p.ll = R->all();
    p.localizable = R->none();
    p.completely_localizable = R->all();
    for (const auto& S : p.max_den_sets) {
        p.ass_max.push_back(S.ass);
        p.ll &= S.ass;
        p.localizable |= S.set;
        p.completely_localizable &= S.set;
    }
    p.non_localizable = p.localizable.complement();
    for (std::size_t i = 0; i < p.ass_max.size(); ++i)
        for (std::size_t j = 0; j < p.ass_max.size(); ++j)
            if (i != j)
                ensure(!p.ass_max[i].is_subset_of(p.ass_max[j]), "assmaxDen ideals are comparable");

    auto ec = classify_elements(*R);
    p.S0 = ec.units;
    ensure(ec.regular == ec.units, "a regular element is not a unit");
    auto s0 = classify_mult_set(*R, p.S0);
    ensure(s0.is_left_denominator && s0.ass == R->zero_set(), "units do not form a regular denominator set");
    p.Ql = localize(R, s0);

    if (R->order() <= bounds.oracle) {
        auto all = all_denominator_sets(*R, bounds);
        p.oracle_denominator_count = all.size();
        auto oracle_max = maximal_by_inclusion(all);
        ensure(oracle_max.size() == p.max_den_sets.size() &&
                   std::equal(oracle_max.begin(), oracle_max.end(), p.max_den_sets.begin()),
               "candidate maxDen differs from the exhaustive oracle");
        p.oracle_checked = true;
    }
    return p;
}

inline LocalizationProfile localization_profile(const RingPtr& R, const Bounds& bounds = {})
{
    return localization_profile(R, all_ideals(*R, bounds), bounds);
}

struct LocalizationMaximality
{
    bool verdict = false;
    /// Q_l(A) = A: S₀(A) consists of units, so localizing at it changes nothing.
    bool ql_is_identity = false;
    /// Every denominator set was inspected (oracle) rather than the candidate sweep.
    bool exhaustive = false;
    /// Denominator sets with nonzero ass.
    std::vector<ElementSet> violating;
};

inline LocalizationMaximality is_localization_maximal(const RingPtr& A, const Bounds& bounds = {})
{
    LocalizationMaximality m;
    auto profile = localization_profile(A, bounds);
    m.ql_is_identity = profile.Ql.target->tables_equal(*A);
    std::vector<DenominatorSetRecord> pool;
    if (A->order() <= bounds.oracle) {
        pool = all_denominator_sets(*A, bounds);
        m.exhaustive = true;
    } else {
        pool = profile.candidates;
    }
    for (const auto& d : pool)
        if (d.ass != A->zero_set())
            m.violating.push_back(d.set);
    m.verdict = m.ql_is_identity && m.violating.empty();
    return m;
}

// ---------------------------------------------------------------------------
// Denominator sets attached to primes and lifts
// ---------------------------------------------------------------------------

struct PrimeDenominator
{
    ElementSet prime;
    /// S_𝔭 = π_𝔭⁻¹(C_{R/𝔭}).
    DenominatorSetRecord record;
    bool is_denominator = false;
    bool ass_equals_prime = false;
};

inline PrimeDenominator denominator_set_for_prime(const RingPtr& R, const ElementSet& p)
{
    if (!is_two_sided_ideal(*R, p) || !is_prime_by_elements(*R, p))
        throw NotPrime(format_set(p) + " is not a prime ideal");
    auto q = quotient_ring(R, p);
    auto S = q.projection.preimage(classify_elements(*q.ring).regular);
    PrimeDenominator d{p, classify_mult_set(*R, S), false, false};
    d.is_denominator = d.record.is_left_denominator;
    d.ass_equals_prime = d.record.ass == p;
    return d;
}

struct LiftReport
{
    /// Classification of S = π⁻¹(S̄) in R.
    DenominatorSetRecord record;
    /// Every x ∈ I is killed by some s ∈ S.
    bool hypothesis = false;
    std::vector<ElemPair> kill_witness;
    std::optional<Elem> unkilled;
    /// Conclusions verified (only when the hypothesis holds).
    bool asserted = false;
    ElementSet expected_ass;
};

/**
 * Lift a denominator set S̄ of R/I to S = π⁻¹(S̄). `Sbar` is an element set of
 * the quotient ring as built by quotient_ring(R, I).
 */
inline LiftReport lift_denominator_set(const RingPtr& R, const ElementSet& I, const ElementSet& Sbar)
{
    auto q = quotient_ring(R, I);
    auto bar = classify_mult_set(*q.ring, Sbar);
    if (!bar.is_left_denominator)
        throw NotDenominator(format_set(Sbar) + " is not a left denominator set of the quotient");
    LiftReport L;
    auto S = q.projection.preimage(Sbar);
    L.record = classify_mult_set(*R, S);
    L.expected_ass = q.projection.preimage(bar.ass);
    L.hypothesis = true;
    I.for_each([&](Elem x) {
        if (L.unkilled)
            return;
        bool killed = false;
        S.for_each([&](Elem s) {
            if (!killed && R->mul(s, x) == R->zero()) {
                L.kill_witness.emplace_back(x, s);
                killed = true;
            }
        });
        if (!killed) {
            L.hypothesis = false;
            L.unkilled = x;
        }
    });
    if (L.hypothesis) {
        ensure(L.record.is_left_denominator, "lift of a denominator set is not a denominator set");
        ensure(L.record.ass == L.expected_ass, "lifted ass differs from the preimage of ass");
        // S⁻¹R = R/ass(S) → (R/I)/ass(S̄), r + ass(S) ↦ π(r) + ass(S̄).
        auto up = localize(R, L.record);
        auto down = localize(q.ring, bar);
        RingMap natural{up.target, down.target, std::vector<Elem>(up.target->order())};
        for (std::size_t r = 0; r < R->order(); ++r)
            natural.image[up.projection(Elem(r))] = down.projection(q.projection(Elem(r)));
        ensure(natural.is_isomorphism(), "lifted localization is not isomorphic to the quotient localization");
        L.asserted = true;
    }
    return L;
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

struct ProductSupport
{
    std::vector<ElementSet> projections;
    std::vector<bool> contains_zero;
    std::vector<bool> factor_ore;
    std::vector<bool> factor_denominator;
    /// supp(S) (0-based factor indices).
    std::vector<std::size_t> support;
    bool ore_by_factors = false;
    bool denominator_by_factors = false;
    bool ore_direct = false;
    bool denominator_direct = false;
    /// ∏ 𝔞_i with 𝔞_i = ass(S_i) on the support and R_i off it.
    ElementSet ass_formula;
    ElementSet ass_direct;
};

inline ProductSupport product_support(const RingPtr& R, const ElementSet& S)
{
    if (!R->is_product())
        throw NotAProduct("'" + R->name() + "' was not built by prod(...)");
    require_multiplicative(*R, S);
    const auto& fs = R->factors();
    ProductSupport ps;
    std::vector<ElementSet> ass_parts;
    bool all_ok_ore = true, all_ok_den = true, some_ore = false, some_den = false;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        ElementSet Si(fs[i]->order());
        S.for_each([&](Elem e) { Si.insert(R->component(e, i)); });
        ps.projections.push_back(Si);
        bool zero = Si.contains(fs[i]->zero());
        ps.contains_zero.push_back(zero);
        bool ore = false, den = false;
        ElementSet part = fs[i]->all();
        if (!zero) {
            auto rec = classify_mult_set(*fs[i], Si);
            ore = rec.is_left_ore;
            den = rec.is_left_denominator;
            if (ore) {
                ps.support.push_back(i);
                part = rec.ass;
            }
        }
        ps.factor_ore.push_back(ore);
        ps.factor_denominator.push_back(den);
        ass_parts.push_back(part);
        all_ok_ore = all_ok_ore && (zero || ore);
        all_ok_den = all_ok_den && (zero || den);
        some_ore = some_ore || ore;
        some_den = some_den || den;
    }
    ps.ore_by_factors = all_ok_ore && some_ore;
    ps.denominator_by_factors = all_ok_den && some_den;
    auto direct = classify_mult_set(*R, S);
    ps.ore_direct = direct.is_left_ore;
    ps.denominator_direct = direct.is_left_denominator;
    ps.ass_direct = direct.ass;
    ps.ass_formula = ElementSet(R->order());
    for (std::size_t e = 0; e < R->order(); ++e) {
        bool in = true;
        for (std::size_t i = 0; i < fs.size() && in; ++i)
            in = ass_parts[i].contains(R->component(Elem(e), i));
        if (in)
            ps.ass_formula.insert(e);
    }
    ensure(ps.ore_by_factors == ps.ore_direct, "product Ore criterion disagrees with the direct check");
    ensure(ps.denominator_by_factors == ps.denominator_direct,
           "product denominator criterion disagrees with the direct check");
    if (ps.ore_direct)
        ensure(ps.ass_formula == ps.ass_direct, "product ass formula fails");
    return ps;
}

} // namespace orelab
