// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace orelab;

namespace {

struct Line
{
    bool ok = true;
    std::ostringstream note;

    void check(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            note << " [failed: " << what << "]";
        }
    }
};

std::string fmt(oracle::Mask m)
{
    std::string s = "{";
    for (std::size_t i = 0; i < 32; ++i)
        if (oracle::has(m, i))
            s += (s.size() > 1 ? "," : "") + std::to_string(i);
    return s + "}";
}

Bounds sixteen()
{
    Bounds b;
    b.oracle = 16;
    return b;
}

void agreement(Line& L)
{
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& e : support::corpus()) {
        auto R = build_ring(e);
        bool semiprime = oracle::semiprime(*R);
        auto A = RingAnalysis::of(R);
        L.check(goldie_criterion(A).verdict == semiprime, e + " goldie");
        L.check(first_criterion(A).verdict == semiprime, e + " first");
        L.check(second_criterion(A).verdict == semiprime, e + " second");
        L.check(third_criterion(A).verdict == semiprime, e + " third");
        L.check(fourth_criterion(A).verdict == semiprime, e + " fourth");
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    L.check(s < 60.0, "corpus took too long");
    L.note << " " << support::corpus().size() << " rings in " << s << " s";
}

void oracle_equivalence(Line& L)
{
    std::size_t n = 0;
    for (const auto& e : support::corpus()) {
        auto R = build_ring(e);
        if (R->order() > 12)
            continue;
        auto p = localization_profile(R);
        L.check(support::masks(p.max_den_sets) == oracle::max_den(*R), e);
        ++n;
    }
    L.note << " " << n << " rings of order <= 12";
}

void z6_facts(Line& L)
{
    auto R = build_ring("Z/6");
    auto p = localization_profile(R);
    auto want = std::vector<oracle::Mask>{oracle::mask_of({1, 3, 5}), oracle::mask_of({1, 2, 4, 5})};
    std::sort(want.begin(), want.end());
    L.check(oracle::max_den(*R) == want, "oracle maxDen");
    L.check(support::masks(p.max_den_sets) == want, "maxDen");
    L.check(p.ll == R->zero_set(), "ll");
    std::vector<oracle::Mask> cores, oracle_cores;
    for (const auto& S : p.max_den_sets)
        cores.push_back(oracle::to_mask(S.core));
    for (auto m : want)
        oracle_cores.push_back(oracle::core(*R, m));
    std::sort(cores.begin(), cores.end());
    std::sort(oracle_cores.begin(), oracle_cores.end());
    auto expect_cores = std::vector<oracle::Mask>{oracle::mask_of({3}), oracle::mask_of({2, 4})};
    std::sort(expect_cores.begin(), expect_cores.end());
    L.check(cores == expect_cores && oracle_cores == expect_cores, "cores");
    L.check(oracle::to_mask(p.completely_localizable) == oracle::mask_of({1, 5}), "C'");
    L.check(oracle::units(*R) == oracle::mask_of({1, 5}), "units");

    // NL_l is the complement of the union of maxDen; the oracle gives {0}.
    // {0,2,3,4} is the set of zero divisors R \ C_R, checked separately.
    oracle::Mask u = 0;
    for (auto m : want)
        u |= m;
    auto nl = oracle::to_mask(p.non_localizable);
    L.check(nl == (oracle::full(*R) & ~u) && nl == oracle::mask_of({0}), "NL_l");
    auto zd = oracle::to_mask(classify_elements(*R).zero_divisors);
    L.check(zd == (oracle::full(*R) & ~oracle::regular(*R)) && zd == oracle::mask_of({0, 2, 3, 4}), "R \\ C_R");

    auto v = first_criterion(R);
    L.check(v.verdict, "first criterion");
    for (int k = 1; k <= 9; ++k) {
        auto tag = "(" + std::to_string(k) + ")";
        bool found = false, held = true;
        for (const auto& c : v.consequents)
            if (c.name.rfind(tag, 0) == 0) {
                found = true;
                held = held && c.holds;
            }
        L.check(found && held, "consequent " + tag);
    }
    L.note << " maxDen " << fmt(want[0]) << " " << fmt(want[1]) << ", NL_l = " << fmt(nl) << ", R\\C_R = " << fmt(zd)
           << " (the criterion's {0,2,3,4} is R\\C_R; NL_l by definition is " << fmt(nl) << ")";
}

void tri_facts(Line& L)
{
    auto R = build_ring("tri(2,F2)");
    const auto I2 = oracle::mask_of({0, 2, 4, 6}); // (2,2)-entry zero
    const auto I3 = oracle::mask_of({0, 1, 2, 3}); // (1,1)-entry zero
    auto om = oracle::max_den(*R);
    L.check(om.size() == 1 && oracle::ass(*R, om[0]) == I2, "oracle maxDen singleton with ass I2");
    auto p = localization_profile(R);
    L.check(p.max_den_sets.size() == 1 && oracle::to_mask(p.max_den_sets[0].ass) == I2, "maxDen");
    L.check(oracle::to_mask(p.ll) == I2 && p.ll != R->zero_set(), "ll = I2");
    auto q = quotient_ring(R, p.ll);
    L.check(bool(ring_isomorphic(q.ring, build_ring("F2"))), "R/ll = F2");

    auto v = ll_quotient_criterion(R);
    L.check(v.verdict, "ll criterion");
    for (std::string g : {"1:", "2:", "3", "4"}) {
        bool found = false, held = true;
        for (const auto& c : v.conditions)
            if (c.name.rfind(g, 0) == 0) {
                found = true;
                held = held && c.holds;
            }
        L.check(found && held, "statement " + g);
    }

    auto O = build_ring("opp(tri(2,F2))");
    auto oo = oracle::max_den(*O);
    L.check(oo.size() == 1 && oracle::ass(*O, oo[0]) == I3, "opposite oracle ass I3");
    auto po = localization_profile(O);
    L.check(po.max_den_sets.size() == 1 && oracle::to_mask(po.max_den_sets[0].ass) == I3, "opposite ass");
    L.check(I2 != I3, "asymmetry");
    L.note << " ass " << fmt(I2) << ", opposite ass " << fmt(I3);
}

void product_theorem(Line& L)
{
    auto v = product_maxden_check({build_ring("F2"), build_ring("Z/6")});
    auto R = build_ring("prod(F2,Z/6)");
    L.check(oracle::max_den(*R).size() == 3, "oracle |maxDen| = 3");
    L.check(localization_profile(R).max_den_sets.size() == 3, "|maxDen| = 3");
    for (std::string c : {"maxDen(R) = disjoint union of embedded maxDen(R_i)", "ass formula", "core formula",
                          "S^-1 R = S_i^-1 R_i"}) {
        const auto* k = v.find(c);
        L.check(k && k->holds, c);
    }
    std::size_t rings = 0;
    for (const auto& e : support::corpus()) {
        auto P = build_ring(e, sixteen());
        if (!P->is_product())
            continue;
        ++rings;
        const auto& fs = P->factors();
        std::vector<Elem> idem;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            std::vector<Elem> c;
            for (std::size_t j = 0; j < fs.size(); ++j)
                c.push_back(j == i ? fs[j]->one() : fs[j]->zero());
            idem.push_back(P->compose(c));
        }
        for (auto m : oracle::max_den(*P)) {
            auto k = std::count_if(idem.begin(), idem.end(), [&](Elem x) { return oracle::has(m, x); });
            L.check(k == 1, e + " idempotent count");
        }
        const auto* k = product_maxden_check(fs).find("exactly one e_i in each maximal set");
        L.check(k && k->holds, e);
    }
    L.note << " one idempotent per maximal set on " << rings << " product rings";
}

void core_isomorphism(Line& L)
{
    std::size_t n = 0;
    for (const auto& e : support::corpus()) {
        auto R = build_ring(e);
        if (R->order() > 16)
            continue;
        for (auto m : oracle::denominator_sets(*R)) {
            auto c = oracle::core(*R, m);
            if (!c)
                continue;
            auto S = classify_mult_set(*R, support::from_mask(m, R->order()));
            auto Sc = classify_mult_set(*R, support::from_mask(c | oracle::bit(R->one()), R->order()));
            L.check(Sc.is_left_denominator, e + " core not a denominator set");
            if (Sc.is_left_denominator)
                L.check(localize(R, Sc).target->tables_equal(*localize(R, S).target), e + " " + fmt(m));
            ++n;
        }
    }
    L.note << " " << n << " denominator sets with nonempty core";
}

void localization_maximal(Line& L)
{
    auto oracle_verdict = [](const FiniteRing& R) {
        if (oracle::units(R) != oracle::regular(R))
            return false;
        for (auto m : oracle::denominator_sets(R))
            if (oracle::ass(R, m) != oracle::bit(R.zero()))
                return false;
        return true;
    };
    for (auto [e, want] : std::vector<std::pair<std::string, bool>>{{"F4", true}, {"mat(2,F2)", true}, {"Z/6", false}}) {
        auto R = build_ring(e);
        L.check(is_localization_maximal(R).verdict == want, e);
        L.check(oracle_verdict(*R) == want, e + " oracle");
    }
    L.note << " F4 yes, mat(2,F2) yes, Z/6 no";
}

void determinism(Line& L)
{
    auto run = [] {
        std::vector<std::string> out;
        for (const auto& e : support::corpus())
            out.push_back(strip_timing(run_analysis(build_ring(e), Bounds{}).doc).dump());
        return out;
    };
    auto a = run(), b = run();
    L.check(a == b, "reports differ");
    L.note << " " << a.size() << " reports identical";
}

} // namespace

int main()
{
    std::vector<std::pair<std::string, std::function<void(Line&)>>> criteria{
        {"1 criterion agreement", agreement},
        {"2 oracle equivalence", oracle_equivalence},
        {"3 Z/6 facts", z6_facts},
        {"4 tri(2,F2) facts", tri_facts},
        {"5 product theorem", product_theorem},
        {"6 core isomorphism", core_isomorphism},
        {"7 localization-maximal classification", localization_maximal},
        {"8 determinism", determinism},
    };
    int failed = 0;
    for (auto& [name, fn] : criteria) {
        Line L;
        try {
            fn(L);
        } catch (const std::exception& e) {
            L.ok = false;
            L.note << " [exception: " << e.what() << "]";
        }
        std::cout << (L.ok ? "PASS " : "FAIL ") << name << ":" << L.note.str() << "\n";
        failed += !L.ok;
    }
    return failed ? 1 : 0;
}
