#pragma once

/**
 * @file ideals.hpp
 * @brief Ideal lattice, prime spectrum, radicals and Goldie-condition witnesses
 *        of a finite ring.
 */

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "orelab/config.hpp"
#include "orelab/ring.hpp"

namespace orelab {

struct Ideal
{
    ElementSet members;
    bool prime = false;
    bool semiprime = false;
    std::optional<ElementSet> generators;

    std::size_t size() const { return members.count(); }
    bool contains(Elem e) const { return members.contains(e); }
    bool is_subset_of(const Ideal& o) const { return members.is_subset_of(o.members); }
    friend bool operator==(const Ideal& a, const Ideal& b) { return a.members == b.members; }
};

inline bool ideal_less(const Ideal& a, const Ideal& b)
{
    return canonical_less(a.members, b.members);
}

// ---------------------------------------------------------------------------
// Closures
// ---------------------------------------------------------------------------

/// Additive subgroup generated by H ∪ X, where H is already a subgroup.
inline ElementSet extend_subgroup(const FiniteRing& R, ElementSet H, const ElementSet& X)
{
    if (H.empty())
        H.insert(R.zero());
    X.for_each([&](Elem g) {
        if (H.contains(g))
            return;
        // H + <g> is the union of the cosets H + k·g.
        ElementSet grown = H;
        Elem step = g;
        while (!H.contains(step)) {
            H.for_each([&](Elem h) { grown.insert(R.add(h, step)); });
            step = R.add(step, g);
        }
        H = grown;
    });
    return H;
}

inline ElementSet additive_span(const FiniteRing& R, const ElementSet& X)
{
    return extend_subgroup(R, R.zero_set(), X);
}

/// Smallest two-sided ideal containing X (worklist over +, r·(−), (−)·r).
inline Ideal ideal_closure(const FiniteRing& R, const ElementSet& X)
{
    ElementSet members = R.zero_set();
    std::deque<Elem> work;
    auto push = [&](Elem e) {
        if (!members.contains(e)) {
            members.insert(e);
            work.push_back(e);
        }
    };
    X.for_each(push);
    while (!work.empty()) {
        Elem a = work.front();
        work.pop_front();
        push(R.neg(a));
        for (std::size_t r = 0; r < R.order(); ++r) {
            push(R.mul(Elem(r), a));
            push(R.mul(a, Elem(r)));
        }
        auto snapshot = members;
        snapshot.for_each([&](Elem b) { push(R.add(a, b)); });
    }
    ensure(is_two_sided_ideal(R, members), "ideal closure is not an ideal");
    return Ideal{members, false, false, X};
}

inline ElementSet ideal_sum(const FiniteRing& R, const ElementSet& I, const ElementSet& J)
{
    return extend_subgroup(R, I, J);
}

/// IJ: additive span of all products ij.
inline ElementSet ideal_product(const FiniteRing& R, const ElementSet& I, const ElementSet& J)
{
    ElementSet prods(R.order());
    I.for_each([&](Elem a) { J.for_each([&](Elem b) { prods.insert(R.mul(a, b)); }); });
    return additive_span(R, prods);
}

/// Principal left ideal Rx = {rx}.
inline ElementSet principal_left_ideal(const FiniteRing& R, Elem x)
{
    ElementSet L(R.order());
    for (std::size_t r = 0; r < R.order(); ++r)
        L.insert(R.mul(Elem(r), x));
    return L;
}

// ---------------------------------------------------------------------------
// Lattices
// ---------------------------------------------------------------------------

namespace detail {

/// Close `seeds` under pairwise sums and intersections.
inline std::vector<ElementSet> lattice_closure(const FiniteRing& R, const std::vector<ElementSet>& seeds)
{
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> all;
    std::deque<std::size_t> fresh;
    auto add = [&](const ElementSet& s) {
        if (seen.insert(s).second) {
            all.push_back(s);
            fresh.push_back(all.size() - 1);
        }
    };
    add(R.zero_set());
    add(R.all());
    for (const auto& s : seeds)
        add(s);
    while (!fresh.empty()) {
        std::size_t i = fresh.front();
        fresh.pop_front();
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (j == i)
                continue;
            ElementSet a = all[i], b = all[j];
            add(a & b);
            if (!a.is_subset_of(b) && !b.is_subset_of(a))
                add(ideal_sum(R, a, b));
        }
    }
    std::sort(all.begin(), all.end(), canonical_less);
    return all;
}

} // namespace detail

/**
 * Every two-sided ideal exactly once, sorted canonically. Built by closing
 * the principal ideals under sum and intersection.
 */
inline std::vector<Ideal> all_ideals(const FiniteRing& R, const Bounds& bounds = {})
{
    if (R.order() > bounds.profile)
        throw OrderBoundExceeded("all_ideals", R.order(), bounds.profile);
    std::vector<ElementSet> seeds;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (std::size_t x = 0; x < R.order(); ++x) {
        auto p = ideal_closure(R, ElementSet(R.order(), {Elem(x)})).members;
        if (seen.insert(p).second)
            seeds.push_back(p);
    }
    std::vector<Ideal> out;
    for (auto& s : detail::lattice_closure(R, seeds))
        out.push_back(Ideal{s, false, false, std::nullopt});
    return out;
}

/// Every left ideal, sorted canonically (closure of principal left ideals).
inline std::vector<ElementSet> all_left_ideals(const FiniteRing& R, const Bounds& bounds = {})
{
    if (R.order() > bounds.oracle)
        throw OrderBoundExceeded("all_left_ideals", R.order(), bounds.oracle);
    std::vector<ElementSet> seeds;
    for (std::size_t x = 0; x < R.order(); ++x)
        seeds.push_back(principal_left_ideal(R, Elem(x)));
    return detail::lattice_closure(R, seeds);
}

// ---------------------------------------------------------------------------
// Primes
// ---------------------------------------------------------------------------

/// P prime via ideal pairs: AB ⊆ P implies A ⊆ P or B ⊆ P.
inline bool is_prime_by_ideals(const FiniteRing& R, const ElementSet& P, const std::vector<Ideal>& ideals)
{
    if (P == R.all())
        return false;
    for (const auto& A : ideals) {
        if (A.members.is_subset_of(P))
            continue;
        for (const auto& B : ideals) {
            if (B.members.is_subset_of(P))
                continue;
            bool product_inside = true;
            A.members.for_each([&](Elem a) {
                if (!product_inside)
                    return;
                B.members.for_each([&](Elem b) {
                    if (product_inside && !P.contains(R.mul(a, b)))
                        product_inside = false;
                });
            });
            if (product_inside)
                return false;
        }
    }
    return true;
}

/// P prime elementwise: aRb ⊆ P implies a ∈ P or b ∈ P.
inline bool is_prime_by_elements(const FiniteRing& R, const ElementSet& P)
{
    if (P == R.all())
        return false;
    ElementSet outside = P.complement();
    for (auto a : outside.elements())
        for (auto b : outside.elements()) {
            bool escapes = false;
            for (std::size_t r = 0; r < R.order() && !escapes; ++r)
                escapes = !P.contains(R.mul(R.mul(a, Elem(r)), b));
            if (!escapes)
                return false;
        }
    return true;
}

inline bool is_nilpotent_ideal(const FiniteRing& R, const ElementSet& I)
{
    ElementSet power = I;
    for (std::size_t k = 0; k <= R.order(); ++k) {
        if (power == R.zero_set())
            return true;
        auto next = ideal_product(R, power, I);
        if (next == power)
            return false;
        power = next;
    }
    return power == R.zero_set();
}

/// J(R) = {x : 1 − rx is a unit for every r}.
inline ElementSet jacobson_radical(const FiniteRing& R)
{
    auto units = classify_elements(R).units;
    ElementSet J(R.order());
    for (std::size_t x = 0; x < R.order(); ++x) {
        bool quasi_regular = true;
        for (std::size_t r = 0; r < R.order() && quasi_regular; ++r)
            quasi_regular = units.contains(R.sub(R.one(), R.mul(Elem(r), Elem(x))));
        if (quasi_regular)
            J.insert(x);
    }
    return J;
}

struct SpectrumProfile
{
    std::vector<Ideal> all_ideals;
    std::vector<Ideal> primes;
    std::vector<Ideal> minimal_primes;
    Ideal prime_radical;
    /// Intersection of all primes (the definition), kept for the cross-check.
    ElementSet prime_intersection;
    ElementSet largest_nilpotent;
    bool semiprime = false;
    /// Distinct left annihilators lann(I) of ideals I.
    std::vector<Ideal> annihilator_ideals;
    /// Left uniform dimension of R as a left module over itself.
    std::size_t left_uniform_dimension = 0;
    /// True when the exhaustive left-ideal cross-check of the uniform dimension ran.
    bool uniform_dimension_cross_checked = false;
};

namespace detail {

inline std::vector<Ideal> minimal_elements(const std::vector<Ideal>& xs)
{
    std::vector<Ideal> out;
    for (const auto& p : xs) {
        bool minimal = std::none_of(xs.begin(), xs.end(), [&](const Ideal& q) {
            return q.members != p.members && q.members.is_subset_of(p.members);
        });
        if (minimal)
            out.push_back(p);
    }
    return out;
}

/// Size of a largest direct-sum family among `subs` (all nonzero, additive subgroups).
inline std::size_t max_direct_family(const FiniteRing& R, const std::vector<ElementSet>& subs)
{
    std::size_t best = 0;
    // Restricting to minimal members loses nothing: any direct family refines to one.
    std::vector<ElementSet> mins;
    for (const auto& s : subs) {
        bool minimal = std::none_of(subs.begin(), subs.end(), [&](const ElementSet& t) {
            return t != s && t.is_subset_of(s);
        });
        if (minimal)
            mins.push_back(s);
    }
    auto rec = [&](auto&& self, std::size_t start, const ElementSet& sum, std::size_t k) -> void {
        best = std::max(best, k);
        for (std::size_t i = start; i < mins.size(); ++i) {
            if ((sum & mins[i]) != R.zero_set())
                continue;
            self(self, i + 1, ideal_sum(R, sum, mins[i]), k + 1);
        }
    };
    rec(rec, 0, R.zero_set(), 0);
    return best;
}

} // namespace detail

/**
 * Left uniform dimension via the socle: greedily collect minimal left ideals
 * (all principal) into a direct sum. Exact for finite rings because the socle
 * is essential.
 */
inline std::size_t left_uniform_dimension(const FiniteRing& R)
{
    std::vector<ElementSet> minimal;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (std::size_t x = 0; x < R.order(); ++x) {
        if (Elem(x) == R.zero())
            continue;
        auto L = principal_left_ideal(R, Elem(x));
        if (!seen.insert(L).second)
            continue;
        bool is_minimal = true;
        (L - R.zero_set()).for_each([&](Elem y) {
            if (is_minimal && principal_left_ideal(R, y) != L)
                is_minimal = false;
        });
        if (is_minimal)
            minimal.push_back(L);
    }
    std::sort(minimal.begin(), minimal.end(), canonical_less);
    ElementSet sum = R.zero_set();
    std::size_t dim = 0;
    for (const auto& L : minimal)
        if ((sum & L) == R.zero_set()) {
            sum = ideal_sum(R, sum, L);
            ++dim;
        }
    return dim;
}

inline SpectrumProfile prime_structure(const FiniteRing& R, const Bounds& bounds = {})
{
    SpectrumProfile sp;
    sp.all_ideals = all_ideals(R, bounds);
    for (auto& I : sp.all_ideals) {
        bool by_ideals = is_prime_by_ideals(R, I.members, sp.all_ideals);
        bool by_elements = is_prime_by_elements(R, I.members);
        ensure(by_ideals == by_elements, "prime tests disagree");
        I.prime = by_ideals;
        if (I.prime)
            sp.primes.push_back(I);
    }
    sp.minimal_primes = detail::minimal_elements(sp.primes);
    ElementSet rad = R.all();
    for (const auto& p : sp.minimal_primes)
        rad &= p.members;
    sp.prime_intersection = R.all();
    for (const auto& p : sp.primes)
        sp.prime_intersection &= p.members;

    sp.largest_nilpotent = R.zero_set();
    for (const auto& I : sp.all_ideals)
        if (is_nilpotent_ideal(R, I.members) && I.size() > sp.largest_nilpotent.count())
            sp.largest_nilpotent = I.members;
    for (const auto& I : sp.all_ideals)
        if (is_nilpotent_ideal(R, I.members))
            ensure(I.members.is_subset_of(sp.largest_nilpotent), "nilpotent ideals have no largest element");

    ensure(rad == sp.prime_intersection, "∩Min(R) differs from ∩Spec(R)");
    ensure(rad == sp.largest_nilpotent, "prime radical differs from largest nilpotent ideal");
    sp.prime_radical = Ideal{rad, false, true, std::nullopt};
    sp.semiprime = rad == R.zero_set();

    // Semiprime ideals: those equal to the intersection of the primes over them.
    for (auto& I : sp.all_ideals) {
        ElementSet over = R.all();
        for (const auto& p : sp.primes)
            if (I.members.is_subset_of(p.members))
                over &= p.members;
        I.semiprime = I.members != R.all() && over == I.members;
    }
    for (auto& p : sp.minimal_primes)
        p.semiprime = true;

    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (const auto& I : sp.all_ideals) {
        auto a = annihilator(R, I.members, Side::left);
        ensure(is_two_sided_ideal(R, a), "annihilator of an ideal is not an ideal");
        if (seen.insert(a).second)
            sp.annihilator_ideals.push_back(Ideal{a, false, false, std::nullopt});
    }
    std::sort(sp.annihilator_ideals.begin(), sp.annihilator_ideals.end(), ideal_less);

    sp.left_uniform_dimension = left_uniform_dimension(R);
    if (R.order() <= bounds.oracle) {
        std::vector<ElementSet> nonzero;
        for (auto& L : all_left_ideals(R, bounds))
            if (L != R.zero_set())
                nonzero.push_back(L);
        ensure(detail::max_direct_family(R, nonzero) == sp.left_uniform_dimension,
               "uniform dimension: socle count differs from exhaustive search");
        sp.uniform_dimension_cross_checked = true;
    }
    return sp;
}

/// Minimal elements of {P prime : P ⊇ I}.
inline std::vector<Ideal> minimal_primes_over(const SpectrumProfile& sp, const ElementSet& I)
{
    std::vector<Ideal> over;
    for (const auto& p : sp.primes)
        if (I.is_subset_of(p.members))
            over.push_back(p);
    return detail::minimal_elements(over);
}

inline std::vector<Ideal> minimal_primes_over(const FiniteRing& R, const ElementSet& I, const Bounds& bounds = {})
{
    return minimal_primes_over(prime_structure(R, bounds), I);
}

struct RingClass
{
    bool simple = false;
    /// J(R) = 0, computed from quasi-regularity.
    bool semisimple = false;
    /// Prime radical zero.
    bool semiprime = false;
    bool simple_left_artinian = false;
    bool division_ring = false;
    bool commutative = false;
    /// Every finite ring is left Artinian.
    bool left_artinian = true;
};

inline RingClass ring_class(const FiniteRing& R, const SpectrumProfile& sp)
{
    RingClass c;
    c.simple = sp.all_ideals.size() == 2;
    c.semiprime = sp.semiprime;
    c.semisimple = jacobson_radical(R) == R.zero_set();
    ensure(c.semisimple == c.semiprime, "semisimple and semiprime disagree on a finite ring");
    c.simple_left_artinian = c.simple && c.left_artinian;
    auto ec = classify_elements(R);
    c.division_ring = ec.units == R.all() - R.zero_set();
    c.commutative = ec.center == R.all();
    return c;
}

inline RingClass ring_class(const FiniteRing& R, const Bounds& bounds = {})
{
    return ring_class(R, prime_structure(R, bounds));
}

/// Simple rings are exactly those with two ideals; this skips the full spectrum.
inline bool is_simple_ring(const FiniteRing& R)
{
    for (std::size_t x = 0; x < R.order(); ++x)
        if (Elem(x) != R.zero() && ideal_closure(R, ElementSet(R.order(), {Elem(x)})).members != R.all())
            return false;
    return true;
}

struct GoldieReport
{
    /// Distinct left annihilators lann(X), X ⊆ R nonempty, sorted canonically.
    std::vector<ElementSet> left_annihilators;
    /// Length of a longest strictly ascending chain among them.
    std::size_t longest_chain = 0;
    /// False when the subset cross-check was skipped by the oracle bound.
    bool exhaustive = false;
    std::size_t uniform_dimension = 0;
    bool semiprime = false;
    bool acc_left_annihilators = true;
    bool no_infinite_direct_sums = true;
    bool verdict = false;
};

inline GoldieReport goldie_witnesses(const FiniteRing& R, const SpectrumProfile& sp, const Bounds& bounds = {})
{
    GoldieReport g;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> seeds;
    for (std::size_t x = 0; x < R.order(); ++x) {
        auto a = right_kernel(R, Elem(x));
        if (seen.insert(a).second)
            seeds.push_back(a);
    }
    // lann(X) is the intersection of the lann(x), x ∈ X.
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            auto m = seeds[i] & seeds[j];
            if (seen.insert(m).second)
                seeds.push_back(m);
        }
    std::sort(seeds.begin(), seeds.end(), canonical_less);
    g.left_annihilators = seeds;

    if (R.order() <= bounds.oracle && R.order() < 24) {
        const std::size_t n = R.order();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            ElementSet X(n);
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1u)
                    X.insert(i);
            ensure(seen.count(annihilator(R, X, Side::left)) == 1, "left annihilator missing from seed closure");
        }
        g.exhaustive = true;
    }

    std::vector<std::size_t> chain(seeds.size(), 1);
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (seeds[j] != seeds[i] && seeds[j].is_subset_of(seeds[i]))
                chain[i] = std::max(chain[i], chain[j] + 1);
    g.longest_chain = seeds.empty() ? 0 : *std::max_element(chain.begin(), chain.end());
    g.uniform_dimension = sp.left_uniform_dimension;
    g.semiprime = sp.semiprime;
    g.verdict = g.semiprime && g.acc_left_annihilators && g.no_infinite_direct_sums;
    return g;
}

} // namespace orelab
