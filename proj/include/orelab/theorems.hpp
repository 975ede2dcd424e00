#pragma once

/**
 * @file theorems.hpp
 * @brief The invariant battery: every identity the theory guarantees, checked
 * on one ring from its tables.
 */

#include <string>
#include <vector>

#include "orelab/construct.hpp"
#include "orelab/criteria.hpp"
#include "orelab/ideals.hpp"
#include "orelab/ore.hpp"

namespace orelab {

struct TheoremCheck
{
    std::string name;
    bool holds = false;
    /// Not run (bound or inapplicable); `detail` says why.
    bool skipped = false;
    std::string detail;
};

struct TheoremBattery
{
    std::vector<TheoremCheck> checks;

    bool all_hold() const
    {
        for (const auto& c : checks)
            if (!c.skipped && !c.holds)
                return false;
        return true;
    }

    const TheoremCheck* find(const std::string& name) const
    {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }
};

/// Minimal nonzero central idempotents.
inline std::vector<Elem> primitive_central_idempotents(const FiniteRing& R)
{
    auto ec = classify_elements(R);
    auto ce = ec.central_idempotents - R.zero_set();
    std::vector<Elem> out;
    ce.for_each([&](Elem e) {
        bool primitive = true;
        ce.for_each([&](Elem f) {
            if (f != e && R.mul(e, f) == f)
                primitive = false;
        });
        if (primitive)
            out.push_back(e);
    });
    return out;
}

namespace detail {

inline bool axioms_hold(const FiniteRing& R)
{
    const std::size_t n = R.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto ab = R.mul(Elem(a), Elem(b));
            auto s = R.add(Elem(a), Elem(b));
            for (std::size_t c = 0; c < n; ++c) {
                if (R.mul(ab, Elem(c)) != R.mul(Elem(a), R.mul(Elem(b), Elem(c))) ||
                    R.mul(Elem(a), R.add(Elem(b), Elem(c))) != R.add(ab, R.mul(Elem(a), Elem(c))) ||
                    R.mul(s, Elem(c)) != R.add(R.mul(Elem(a), Elem(c)), R.mul(Elem(b), Elem(c))))
                    return false;
            }
        }
    return true;
}

} // namespace detail

inline TheoremBattery verify_theorems(const RingAnalysis& A)
{
    using namespace detail;
    TheoremBattery tb;
    const auto& R = *A.ring;
    const auto& P = A.profile;
    const bool oracle = R.order() <= A.bounds.oracle;

    auto run = [&](const std::string& name, auto&& body) {
        TheoremCheck c{name};
        try {
            body(c);
        } catch (const OrderBoundExceeded& e) {
            c.skipped = true;
            c.holds = false;
            c.detail = e.what();
        }
        tb.checks.push_back(std::move(c));
    };
    auto skip = [](TheoremCheck& c, const std::string& why) {
        c.skipped = true;
        c.detail = why;
    };

    std::vector<DenominatorSetRecord> den;
    std::vector<ElementSet> mult;
    if (oracle) {
        mult = all_multiplicative_sets(R, A.bounds);
        for (const auto& S : mult) {
            auto rec = classify_mult_set(R, S);
            if (rec.is_left_denominator)
                den.push_back(std::move(rec));
        }
    }
    const auto& pool = oracle ? den : P.candidates;
    const std::string pool_note = oracle ? "exhaustive" : "candidate sweep only";

    run("ring axioms", [&](TheoremCheck& c) {
        c.holds = axioms_hold(R);
        c.detail = "associativity and both distributive laws on all triples";
    });
    run("regular iff unit", [&](TheoremCheck& c) {
        auto ec = classify_elements(R);
        c.holds = ec.regular == ec.units;
        c.detail = std::to_string(ec.units.count()) + " units";
    });
    run("opposite involution", [&](TheoremCheck& c) {
        c.holds = make_opposite(make_opposite(A.ring))->tables_equal(R);
    });
    run("construction determinism", [&](TheoremCheck& c) {
        try {
            auto again = build_ring(R.provenance(), A.bounds);
            c.holds = again->tables_equal(R) && again->content_hash() == R.content_hash();
        } catch (const ParseError&) {
            skip(c, "provenance is not a constructor expression");
        }
    });
    run("oracle equivalence", [&](TheoremCheck& c) {
        if (!oracle)
            return skip(c, "order above the oracle bound");
        c.holds = P.oracle_checked;
        c.detail = std::to_string(P.oracle_denominator_count) + " denominator sets";
    });
    run("largest quotient ring is idempotent", [&](TheoremCheck& c) {
        const auto& Q = P.Ql.target;
        auto qp = localization_profile(Q, A.bounds);
        c.holds = qp.S0 == classify_elements(*Q).units && qp.Ql.target->tables_equal(*Q) && Q->tables_equal(R);
        c.detail = "S0(Q_l) = units and Q_l(Q_l(R)) = Q_l(R) = R";
    });
    run("maximal sets are unit preimages", [&](TheoremCheck& c) {
        c.holds = true;
        for (const auto& S : P.max_den_sets) {
            auto q = quotient_ring(A.ring, S.ass);
            auto s0 = classify_elements(*q.ring).units;
            c.holds = c.holds && q.projection.preimage(s0) == S.set;
        }
        c.detail = "S = pi^-1(S0(R/ass S)) for every maximal S";
    });
    run("maximal localizations are localization maximal", [&](TheoremCheck& c) {
        c.holds = true;
        for (const auto& S : P.max_den_sets)
            c.holds = c.holds && is_localization_maximal(localize(A.ring, S).target, A.bounds).verdict;
        c.detail = "every S^-1 R for maximal S is localization maximal";
    });
    run("ass is a proper ideal", [&](TheoremCheck& c) {
        std::size_t ore = 0;
        c.holds = true;
        auto check = [&](const DenominatorSetRecord& rec) {
            if (!rec.is_left_ore)
                return;
            ++ore;
            c.holds = c.holds && rec.ass_is_ideal && is_two_sided_ideal(R, rec.ass) && !rec.ass.contains(R.one());
        };
        if (oracle)
            for (const auto& S : mult)
                check(classify_mult_set(R, S));
        else
            for (const auto& S : pool)
                check(S);
        c.detail = std::to_string(ore) + " left Ore sets, " + pool_note;
    });
    run("maximal ass ideals", [&](TheoremCheck& c) {
        std::vector<ElementSet> asses;
        for (const auto& T : pool)
            if (std::find(asses.begin(), asses.end(), T.ass) == asses.end())
                asses.push_back(T.ass);
        std::vector<ElementSet> maximal;
        for (const auto& a : asses)
            if (std::none_of(asses.begin(), asses.end(), [&](const ElementSet& b) { return a != b && a.is_subset_of(b); }))
                maximal.push_back(a);
        c.holds = same_sets(maximal, P.ass_max);
        for (std::size_t i = 0; i < P.ass_max.size(); ++i)
            for (std::size_t j = 0; j < P.ass_max.size(); ++j)
                if (i != j)
                    c.holds = c.holds && !P.ass_max[i].is_subset_of(P.ass_max[j]);
        c.detail = "assmaxDen = maximal ass, pairwise incomparable, " + pool_note;
    });
    run("inclusion follows ass inclusion", [&](TheoremCheck& c) {
        if (!oracle)
            return skip(c, "order above the oracle bound");
        c.holds = true;
        for (const auto& S : P.max_den_sets)
            for (const auto& T : den)
                c.holds = c.holds && (T.set.is_subset_of(S.set) == T.ass.is_subset_of(S.ass));
        c.detail = "T in S iff ass(T) in ass(S), " + std::to_string(den.size()) + " denominator sets";
    });
    run("S0 inside every maximal set", [&](TheoremCheck& c) {
        c.holds = true;
        for (const auto& S : P.max_den_sets)
            c.holds = c.holds && P.S0.is_subset_of(S.set);
        c.detail = "S0(R) inside every maximal set";
    });
    run("join of nested sets", [&](TheoremCheck& c) {
        std::size_t pairs = 0;
        c.holds = true;
        for (const auto& S : pool)
            for (const auto& T : pool)
                if (S.ass.is_subset_of(T.ass)) {
                    ++pairs;
                    auto j = semigroup_join(R, S, T);
                    c.holds = c.holds && j.lemma_holds;
                }
        c.detail = std::to_string(pairs) + " nested pairs, " + pool_note;
    });
    run("core localizes like the set", [&](TheoremCheck& c) {
        std::size_t n = 0;
        c.holds = true;
        for (const auto& S : pool) {
            if (S.core.empty())
                continue;
            ++n;
            auto cr = core_analysis(A.ring, S);
            c.holds = c.holds && cr.core_is_denominator && cr.core_ass_equal && cr.targets_identical;
        }
        c.detail = std::to_string(n) + " sets with nonempty core, " + pool_note;
    });
    run("core absorbs and attracts", [&](TheoremCheck& c) {
        c.holds = true;
        for (const auto& S : pool) {
            if (S.core.empty())
                continue;
            auto cr = core_analysis(A.ring, S);
            c.holds = c.holds && cr.absorbs && cr.push_holds;
        }
        c.detail = "S S_c in S_c and every s pushed into S_c";
    });
    run("maximal kernels lie in the core", [&](TheoremCheck& c) {
        c.holds = true;
        for (const auto& S : pool) {
            if (S.core.empty())
                continue;
            auto cr = core_analysis(A.ring, S);
            c.holds = c.holds && cr.max_in_core;
        }
        c.detail = "elements with maximal kernel lie in the core";
    });
    run("one central idempotent per maximal set", [&](TheoremCheck& c) {
        auto pci = primitive_central_idempotents(R);
        c.holds = true;
        for (const auto& S : P.max_den_sets)
            c.holds = c.holds && std::count_if(pci.begin(), pci.end(), [&](Elem e) { return S.set.contains(e); }) == 1;
        c.detail = std::to_string(pci.size()) + " primitive central idempotents";
    });
    run("maxDen of a product", [&](TheoremCheck& c) {
        if (!R.is_product())
            return skip(c, "not a declared product");
        auto v = product_maxden_check(R.factors(), A.bounds);
        c.holds = v.verdict;
        c.detail = std::to_string(P.max_den_sets.size()) + " maximal sets";
    });
    run("product support formula", [&](TheoremCheck& c) {
        if (!R.is_product())
            return skip(c, "not a declared product");
        if (!oracle)
            return skip(c, "order above the oracle bound");
        for (const auto& S : mult)
            product_support(A.ring, S);
        c.holds = true;
        c.detail = std::to_string(mult.size()) + " multiplicative sets";
    });
    run("prime families meeting in zero", [&](TheoremCheck& c) {
        if (R.order() > A.bounds.family)
            return skip(c, "order above the family bound");
        const auto& ideals = A.spectrum.all_ideals;
        std::vector<ElementSet> proper;
        for (const auto& I : ideals)
            proper.push_back(I.members);
        if (proper.size() > 16)
            return skip(c, "too many ideals for the subfamily sweep");
        std::vector<ElementSet> mins;
        for (const auto& p : A.spectrum.minimal_primes)
            mins.push_back(p.members);
        c.holds = true;
        std::size_t fams = 0;
        for (std::uint32_t mask = 1; mask < (1u << proper.size()); ++mask) {
            std::vector<ElementSet> fam;
            for (std::size_t i = 0; i < proper.size(); ++i)
                if (mask >> i & 1u)
                    fam.push_back(proper[i]);
            ++fams;
            bool lhs = true;
            ElementSet cap = R.all();
            for (const auto& a : fam) {
                cap &= a;
                lhs = lhs && a != R.all() && is_prime_by_elements(R, a);
                for (const auto& b : fam)
                    lhs = lhs && (a == b || !a.is_subset_of(b));
            }
            lhs = lhs && cap == R.zero_set();
            bool rhs = A.spectrum.semiprime && same_sets(fam, mins);
            c.holds = c.holds && lhs == rhs;
        }
        c.detail = std::to_string(fams) + " subfamilies";
    });
    run("minimal primes are comaximal", [&](TheoremCheck& c) {
        if (!A.cls.semisimple)
            return skip(c, "not semisimple");
        const auto& mins = A.spectrum.minimal_primes;
        c.holds = true;
        for (const auto& pi : mins) {
            auto q = quotient_ring(A.ring, pi.members);
            for (const auto& pj : mins) {
                auto gen = ideal_closure(*q.ring, q.projection.image_of(pj.members)).members;
                c.holds = c.holds && (pi.members == pj.members ? gen == q.ring->zero_set() : gen == q.ring->all());
            }
        }
        c.detail = std::to_string(mins.size()) + " minimal primes";
    });
    run("lifting denominator sets", [&](TheoremCheck& c) {
        std::size_t lifted = 0, tried = 0;
        c.holds = true;
        for (const auto& I : A.spectrum.all_ideals) {
            if (I.members == R.all())
                continue;
            auto q = quotient_ring(A.ring, I.members);
            auto qp = localization_profile(q.ring, A.bounds);
            for (const auto& Sbar : qp.candidates) {
                ++tried;
                auto L = lift_denominator_set(A.ring, I.members, Sbar.set);
                if (L.hypothesis) {
                    ++lifted;
                    c.holds = c.holds && L.asserted;
                }
            }
        }
        c.detail = std::to_string(lifted) + " of " + std::to_string(tried) + " lifts met the hypothesis";
    });
    run("ll statements agree", [&](TheoremCheck& c) {
        auto v = ll_quotient_criterion(A);
        c.holds = true;
        c.detail = std::string("four statements agree, verdict ") + (v.verdict ? "true" : "false");
    });
    run("ll projection injective", [&](TheoremCheck& c) {
        c.holds = ll_projection_injective(A, quotient_ring(A.ring, P.ll));
        c.detail = "S -> pi(S) injective with ass(pi(S)) = ass(S)/ll";
    });
    run("criteria agreement", [&](TheoremCheck& c) {
        auto x = cross_validate(A);
        c.holds = x.agree;
        c.detail = x.semisimple ? "all true" : "all false";
    });
    return tb;
}

inline TheoremBattery verify_theorems(const RingPtr& R, const Bounds& b = {})
{
    return verify_theorems(RingAnalysis::of(R, b));
}

} // namespace orelab
