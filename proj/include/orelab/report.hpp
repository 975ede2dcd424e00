#pragma once

/**
 * @file report.hpp
 * @brief Analysis reports, ring files, and the corpus manifest, all as JSON.
 */

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "orelab/construct.hpp"
#include "orelab/criteria.hpp"
#include "orelab/theorems.hpp"

namespace orelab {

using json = nlohmann::ordered_json;

/// Rings above this order are identified by content hash only.
inline constexpr std::size_t kEmbedTablesUpTo = 64;

// ---------------------------------------------------------------------------
// Ring files
// ---------------------------------------------------------------------------

inline json ring_to_json(const FiniteRing& R)
{
    const std::size_t n = R.order();
    json add = json::array(), mul = json::array();
    for (std::size_t a = 0; a < n; ++a) {
        json ra = json::array(), rm = json::array();
        for (std::size_t b = 0; b < n; ++b) {
            ra.push_back(R.add(Elem(a), Elem(b)));
            rm.push_back(R.mul(Elem(a), Elem(b)));
        }
        add.push_back(ra);
        mul.push_back(rm);
    }
    return json{{"name", R.name()}, {"order", n}, {"zero", R.zero()}, {"one", R.one()}, {"add", add}, {"mul", mul}};
}

inline RingPtr ring_from_json(const json& j, const std::string& provenance)
{
    try {
        auto n = j.at("order").get<std::size_t>();
        if (n < 2 || n > kMaxOrder)
            throw ParseError("ring order " + std::to_string(n) + " out of range", 0);
        auto table = [&](const char* key) {
            const auto& t = j.at(key);
            if (!t.is_array() || t.size() != n)
                throw ParseError(std::string("table '") + key + "' must have " + std::to_string(n) + " rows", 0);
            std::vector<Elem> out;
            for (std::size_t r = 0; r < n; ++r) {
                if (!t[r].is_array() || t[r].size() != n)
                    throw ParseError(std::string("table '") + key + "' row " + std::to_string(r) + " has wrong length",
                                     r);
                for (const auto& v : t[r]) {
                    auto e = v.get<long long>();
                    if (e < 0 || std::size_t(e) >= n)
                        throw ParseError(std::string("table '") + key + "' entry out of range in row " +
                                             std::to_string(r),
                                         r);
                    out.push_back(Elem(e));
                }
            }
            return out;
        };
        auto name = j.value("name", provenance);
        return FiniteRing::make(name, provenance, n, table("add"), table("mul"), j.at("zero").get<Elem>(),
                                j.at("one").get<Elem>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed ring file: ") + e.what(), 0);
    }
}

inline RingPtr load_ring_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'", 0);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path.string() + "': " + e.what(), e.byte);
    }
    return ring_from_json(j, "file:" + path.filename().string());
}

inline void save_ring_file(const FiniteRing& R, const std::filesystem::path& path)
{
    std::ofstream out(path);
    out << ring_to_json(R).dump(1) << "\n";
}

/// A path to an existing file is a ring file; anything else is an expression.
inline RingPtr parse_ring_input(const std::string& input, const Bounds& bounds = {})
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec))
        return load_ring_file(input);
    return build_ring(input, bounds);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline json to_json(const ElementSet& s)
{
    json a = json::array();
    s.for_each([&](Elem e) { a.push_back(e); });
    return a;
}

inline json to_json(const std::vector<ElementSet>& v)
{
    json a = json::array();
    for (const auto& s : v)
        a.push_back(to_json(s));
    return a;
}

inline json to_json(const Witness& w)
{
    return json{{"kind", w.kind}, {"elements", w.elements}, {"note", w.note}};
}

inline json to_json(const CriterionVerdict& v)
{
    json conds = json::array(), cons = json::array(), wits = json::array();
    for (const auto& c : v.conditions) {
        conds.push_back(json{{"name", c.name}, {"holds", c.holds}, {"witness", to_json(c.witness)}});
        if (!c.holds)
            wits.push_back(json{{"condition", c.name}, {"witness", to_json(c.witness)}});
    }
    for (const auto& c : v.consequents)
        cons.push_back(json{{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    return json{{"criterion", v.criterion}, {"verdict", v.verdict},  {"conditions", conds},
                {"consequents", cons},      {"witnesses", wits},     {"scale_notes", v.scale_notes}};
}

inline std::string hex64(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json ring_identity(const FiniteRing& R)
{
    json j{{"name", R.name()},
           {"order", R.order()},
           {"provenance", R.provenance()},
           {"content_hash", hex64(R.content_hash())}};
    if (R.order() <= kEmbedTablesUpTo) {
        auto t = ring_to_json(R);
        j["tables"] = json{{"zero", t["zero"]}, {"one", t["one"]}, {"add", t["add"]}, {"mul", t["mul"]}};
    }
    return j;
}

inline json classification_json(const FiniteRing& R)
{
    auto ec = classify_elements(R);
    return json{{"units", to_json(ec.units)},
                {"regular", to_json(ec.regular)},
                {"zero_divisors", to_json(ec.zero_divisors)},
                {"nilpotents", to_json(ec.nilpotents)},
                {"idempotents", to_json(ec.idempotents)},
                {"central_idempotents", to_json(ec.central_idempotents)},
                {"center", to_json(ec.center)},
                {"regular_equals_units", ec.regular_equals_units},
                {"characteristic", R.characteristic()}};
}

inline json spectrum_json(const SpectrumProfile& sp, const RingClass& cls)
{
    auto ideals = [](const std::vector<Ideal>& v) {
        json a = json::array();
        for (const auto& I : v)
            a.push_back(to_json(I.members));
        return a;
    };
    return json{{"ideals", ideals(sp.all_ideals)},
                {"primes", ideals(sp.primes)},
                {"minimal_primes", ideals(sp.minimal_primes)},
                {"prime_radical", to_json(sp.prime_radical.members)},
                {"semiprime", sp.semiprime},
                {"semisimple", cls.semisimple},
                {"simple", cls.simple},
                {"division_ring", cls.division_ring},
                {"commutative", cls.commutative},
                {"annihilator_ideals", ideals(sp.annihilator_ideals)},
                {"left_uniform_dimension", sp.left_uniform_dimension},
                {"uniform_dimension_cross_checked", sp.uniform_dimension_cross_checked}};
}

inline json profile_json(const LocalizationProfile& p)
{
    json sets = json::array();
    for (const auto& S : p.max_den_sets) {
        auto L = localize(p.ring, S);
        sets.push_back(json{{"set", to_json(S.set)},
                            {"ass", to_json(S.ass)},
                            {"core", to_json(S.core)},
                            {"localization_order", L.target->order()},
                            {"localization_hash", hex64(L.target->content_hash())}});
    }
    return json{{"max_den_count", p.max_den_sets.size()},
                {"max_den", sets},
                {"ll", to_json(p.ll)},
                {"localizable", to_json(p.localizable)},
                {"non_localizable", to_json(p.non_localizable)},
                {"completely_localizable", to_json(p.completely_localizable)},
                {"S0", to_json(p.S0)},
                {"candidate_count", p.candidates.size()},
                {"oracle_checked", p.oracle_checked},
                {"oracle_denominator_count", p.oracle_denominator_count},
                {"completeness", p.oracle_checked ? "exhaustive" : "candidate-sweep only"}};
}

inline json theorems_json(const TheoremBattery& tb)
{
    json a = json::array();
    for (const auto& c : tb.checks)
        a.push_back(json{{"name", c.name}, {"holds", c.holds}, {"skipped", c.skipped}, {"detail", c.detail}});
    return a;
}

// ---------------------------------------------------------------------------
// Analysis
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& all_phases()
{
    static const std::vector<std::string> p{"classify", "spectrum", "profile", "criteria", "theorems"};
    return p;
}

/// Criterion names accepted by --which.
inline const std::vector<std::string>& all_criteria()
{
    static const std::vector<std::string> c{"goldie", "first", "second", "third", "fourth", "ll_quotient", "product"};
    return c;
}

struct AnalysisOptions
{
    std::set<std::string> phases{all_phases().begin(), all_phases().end()};
    std::set<std::string> criteria{all_criteria().begin(), all_criteria().end()};
    std::optional<std::vector<ElementSet>> fourth_sets;
};

struct AnalysisReport
{
    json doc;
    /// Some phase stopped on a bound.
    bool partial = false;
    /// A checked identity failed (theorem battery).
    bool mismatch = false;
};

inline AnalysisReport run_analysis(const RingPtr& R, const Bounds& bounds, const AnalysisOptions& opt = {})
{
    AnalysisReport rep;
    json& d = rep.doc;
    d["ring"] = ring_identity(*R);
    d["config"] = json{{"oracle_bound", bounds.oracle},
                       {"profile_bound", bounds.profile},
                       {"iso_bound", bounds.iso},
                       {"family_bound", bounds.family}};
    d["phases"] = json::object();
    json timing = json::object();

    std::optional<SpectrumProfile> sp;
    std::optional<RingClass> cls;
    std::optional<LocalizationProfile> prof;
    std::optional<RingAnalysis> analysis;

    // Dependencies run silently when not requested.
    auto need_spectrum = [&] {
        if (!sp) {
            sp = prime_structure(*R, bounds);
            cls = ring_class(*R, *sp);
        }
    };
    auto need_profile = [&] {
        need_spectrum();
        if (!prof)
            prof = localization_profile(R, sp->all_ideals, bounds);
    };
    auto need_analysis = [&] {
        need_profile();
        if (!analysis)
            analysis = RingAnalysis{R, bounds, *sp, *cls, *prof};
    };

    auto phase = [&](const std::string& name, auto&& body) {
        if (!opt.phases.count(name))
            return;
        auto t0 = std::chrono::steady_clock::now();
        try {
            d["phases"][name] = body();
        } catch (const OrderBoundExceeded& e) {
            d["phases"][name] = json{{"error", "order_bound"}, {"message", e.what()}};
            rep.partial = true;
        }
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        timing[name] = ms;
    };

    phase("classify", [&] { return classification_json(*R); });
    phase("spectrum", [&] {
        need_spectrum();
        return spectrum_json(*sp, *cls);
    });
    phase("profile", [&] {
        need_profile();
        return profile_json(*prof);
    });
    phase("criteria", [&] {
        need_analysis();
        const auto& A = *analysis;
        json out = json::array();
        auto want = [&](const char* c) { return opt.criteria.count(c) > 0; };
        if (want("goldie"))
            out.push_back(to_json(goldie_criterion(A)));
        if (want("first"))
            out.push_back(to_json(first_criterion(A)));
        if (want("second"))
            out.push_back(to_json(second_criterion(A)));
        if (want("third"))
            out.push_back(to_json(third_criterion(A)));
        if (want("fourth"))
            out.push_back(to_json(fourth_criterion(A, opt.fourth_sets)));
        if (want("ll_quotient"))
            out.push_back(to_json(ll_quotient_criterion(A)));
        if (want("product") && R->is_product())
            out.push_back(to_json(product_maxden_check(R->factors(), bounds)));
        auto cv = cross_validate(A);
        return json{{"verdicts", out},
                    {"agreement", cv.agree},
                    {"semisimple", cv.semisimple},
                    {"non_localizable", to_json(cv.non_localizable)}};
    });
    phase("theorems", [&] {
        need_analysis();
        auto tb = verify_theorems(*analysis);
        rep.mismatch = rep.mismatch || !tb.all_hold();
        return theorems_json(tb);
    });
    d["partial"] = rep.partial;
    d["timing_ms"] = timing;
    return rep;
}

// ---------------------------------------------------------------------------
// Golden comparison
// ---------------------------------------------------------------------------

/// Structural differences between two reports, ignoring every "timing_ms" member.
inline std::vector<std::string> report_diff(const json& expected, const json& actual, const std::string& path = "")
{
    std::vector<std::string> out;
    if (expected.type() != actual.type()) {
        out.push_back(path + ": type " + expected.type_name() + " != " + actual.type_name());
        return out;
    }
    if (expected.is_object()) {
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            if (it.key() == "timing_ms")
                continue;
            if (!actual.contains(it.key())) {
                out.push_back(path + "/" + it.key() + ": missing");
                continue;
            }
            auto sub = report_diff(it.value(), actual.at(it.key()), path + "/" + it.key());
            out.insert(out.end(), sub.begin(), sub.end());
        }
        for (auto it = actual.begin(); it != actual.end(); ++it)
            if (it.key() != "timing_ms" && !expected.contains(it.key()))
                out.push_back(path + "/" + it.key() + ": unexpected");
        return out;
    }
    if (expected.is_array()) {
        if (expected.size() != actual.size()) {
            out.push_back(path + ": length " + std::to_string(expected.size()) + " != " +
                          std::to_string(actual.size()));
            return out;
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            auto sub = report_diff(expected[i], actual[i], path + "/" + std::to_string(i));
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    if (expected != actual)
        out.push_back(path + ": " + expected.dump() + " != " + actual.dump());
    return out;
}

inline json strip_timing(json j)
{
    if (j.is_object()) {
        j.erase("timing_ms");
        for (auto& [k, v] : j.items())
            v = strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j)
            v = strip_timing(v);
    }
    return j;
}

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

struct CorpusEntry
{
    std::string spec;
    /// Relative to the manifest directory.
    std::string expected;
    bool regenerate = false;
};

struct CorpusManifest
{
    std::filesystem::path dir;
    std::vector<CorpusEntry> entries;
    Bounds bounds;

    static CorpusManifest load(const std::filesystem::path& path, bool require_goldens = true)
    {
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open manifest '" + path.string() + "'", 0);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ParseError("manifest '" + path.string() + "': " + e.what(), e.byte);
        }
        CorpusManifest m;
        m.dir = path.parent_path();
        try {
            const auto& cfg = j.at("config");
            m.bounds.oracle = cfg.value("oracle_bound", m.bounds.oracle);
            m.bounds.profile = cfg.value("profile_bound", m.bounds.profile);
            m.bounds.iso = cfg.value("iso_bound", m.bounds.iso);
            m.bounds.family = cfg.value("family_bound", m.bounds.family);
            for (const auto& e : j.at("rings"))
                m.entries.push_back({e.at("spec").get<std::string>(), e.at("expected").get<std::string>(),
                                     e.value("regenerate", false)});
        } catch (const json::exception& e) {
            throw ParseError("manifest '" + path.string() + "': " + e.what(), 0);
        }
        for (const auto& e : m.entries) {
            build_ring(e.spec, m.bounds);
            if (require_goldens && !e.regenerate && !std::filesystem::exists(m.dir / e.expected))
                throw ParseError("golden file '" + e.expected + "' missing for '" + e.spec + "'", 0);
        }
        return m;
    }
};

struct CorpusOutcome
{
    std::string spec;
    bool passed = false;
    bool regenerated = false;
    std::vector<std::string> diff;
    std::string error;
    json report;
};

inline CorpusOutcome run_corpus_entry(const CorpusManifest& m, const CorpusEntry& e, bool regenerate)
{
    CorpusOutcome o{e.spec};
    auto R = build_ring(e.spec, m.bounds);
    auto rep = run_analysis(R, m.bounds);
    o.report = rep.doc;
    auto path = m.dir / e.expected;
    if (regenerate || e.regenerate) {
        std::ofstream out(path);
        out << strip_timing(rep.doc).dump(1) << "\n";
        o.regenerated = true;
        o.passed = !rep.mismatch;
        return o;
    }
    std::ifstream in(path);
    auto golden = json::parse(in);
    o.diff = report_diff(golden, rep.doc);
    o.passed = o.diff.empty() && !rep.mismatch;
    if (rep.mismatch)
        o.error = "theorem battery reported a failed identity";
    return o;
}

} // namespace orelab
