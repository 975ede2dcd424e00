// orelab: command-line front end over the header library.

#include <atomic>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "orelab/orelab.hpp"

using namespace orelab;

namespace {

enum Exit : int
{
    kPass = 0,
    kMismatch = 1,
    kInputError = 2,
    kInternal = 3,
};

/// "1,3,5" or "{1,3,5}".
ElementSet parse_set(const std::string& text, std::size_t n)
{
    ElementSet s(n);
    std::string cleaned;
    for (char c : text)
        cleaned += (c == '{' || c == '}') ? ' ' : (c == ',' ? ' ' : c);
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &pos);
        } catch (...) {
            pos = 0;
        }
        if (pos != tok.size())
            throw ParseError("bad element '" + tok + "' in set '" + text + "'", 0);
        if (v >= n)
            throw ParseError("element " + tok + " out of range for order " + std::to_string(n), 0);
        s.insert(v);
    }
    return s;
}

/// Sets separated by ';'.
std::vector<ElementSet> parse_sets(const std::string& text, std::size_t n)
{
    std::vector<ElementSet> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';'))
        if (part.find_first_not_of(" ") != std::string::npos)
            out.push_back(parse_set(part, n));
    return out;
}

void print(const json& j) { std::cout << j.dump(1) << "\n"; }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite-ring Ore localization laboratory"};
    app.require_subcommand(1);

    Bounds bounds = Bounds::from_environment();
    unsigned jobs = 1;
    app.add_option("--oracle-bound", bounds.oracle, "largest order for exhaustive enumeration");
    app.add_option("--profile-bound", bounds.profile, "largest order for full profiles")
        ->check(CLI::Range(std::size_t(2), kMaxOrder));
    app.add_option("--iso-bound", bounds.iso, "largest order for isomorphism search");
    app.add_option("--jobs", jobs, "parallel corpus workers")->check(CLI::PositiveNumber);

    std::string ring_arg;
    auto ring_option = [&](CLI::App* sub) {
        sub->add_option("ring", ring_arg, "constructor expression or ring file")->required();
    };

    auto* analyze = app.add_subcommand("analyze", "full analysis report");
    ring_option(analyze);
    std::vector<std::string> phases;
    analyze->add_option("--phases", phases, "subset of classify,spectrum,profile,criteria,theorems")
        ->delimiter(',')
        ->check(CLI::IsMember(all_phases()));
    std::string out_path;
    analyze->add_option("-o,--output", out_path, "write the report here instead of stdout");

    auto* maxden = app.add_subcommand("maxden", "maximal left denominator sets and ll");
    ring_option(maxden);

    auto* loc = app.add_subcommand("localize", "classify a multiplicative set and localize at it");
    ring_option(loc);
    std::string set_arg;
    loc->add_option("--set", set_arg, "elements, e.g. 1,3,5")->required();

    auto* crit = app.add_subcommand("criteria", "criterion verdicts with evidence");
    ring_option(crit);
    std::vector<std::string> which;
    crit->add_option("--which", which, "subset of the criteria")->delimiter(',')->check(CLI::IsMember(all_criteria()));
    std::string fourth_sets;
    crit->add_option("--sets", fourth_sets, "explicit family for the fourth criterion, ';'-separated");

    auto* thm = app.add_subcommand("verify-theorems", "run the invariant battery");
    ring_option(thm);

    auto* exp = app.add_subcommand("export", "write a ring file");
    ring_option(exp);
    exp->add_option("-o,--output", out_path)->required();

    auto* corpus = app.add_subcommand("corpus", "bundled corpus against golden reports");
    std::string mode;
    corpus->add_option("mode", mode, "run or regen")->required()->check(CLI::IsMember({"run", "regen"}));
    std::string manifest_path = "corpus/manifest.json";
    corpus->add_option("--manifest", manifest_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kInputError;
    }

    try {
        if (*corpus) {
            auto m = CorpusManifest::load(manifest_path, mode == "run");
            // Command-line bounds override the manifest only when given.
            if (app.count("--oracle-bound"))
                m.bounds.oracle = bounds.oracle;
            if (app.count("--profile-bound"))
                m.bounds.profile = bounds.profile;
            if (app.count("--iso-bound"))
                m.bounds.iso = bounds.iso;
            std::vector<CorpusOutcome> outcomes(m.entries.size());
            std::atomic<std::size_t> next{0};
            std::atomic<bool> internal{false};
            std::mutex err_mu;
            std::string internal_msg;
            auto worker = [&] {
                for (std::size_t i; (i = next++) < m.entries.size();) {
                    try {
                        outcomes[i] = run_corpus_entry(m, m.entries[i], mode == "regen");
                    } catch (const InternalInconsistency& e) {
                        internal = true;
                        std::lock_guard lk(err_mu);
                        internal_msg = m.entries[i].spec + ": " + e.what();
                        outcomes[i] = CorpusOutcome{m.entries[i].spec, false, false, {}, e.what(), {}};
                    } catch (const std::exception& e) {
                        outcomes[i] = CorpusOutcome{m.entries[i].spec, false, false, {}, e.what(), {}};
                    }
                }
            };
            std::vector<std::thread> pool;
            for (unsigned j = 0; j < std::max(1u, jobs); ++j)
                pool.emplace_back(worker);
            for (auto& t : pool)
                t.join();
            std::size_t failed = 0;
            for (const auto& o : outcomes) {
                std::cout << (o.passed ? "PASS " : "FAIL ") << o.spec << (o.regenerated ? " (regenerated)" : "")
                          << "\n";
                for (const auto& d : o.diff)
                    std::cout << "  " << d << "\n";
                if (!o.error.empty())
                    std::cout << "  error: " << o.error << "\n";
                failed += !o.passed;
            }
            std::cout << (outcomes.size() - failed) << "/" << outcomes.size() << " passed\n";
            if (internal) {
                std::cerr << "internal inconsistency: " << internal_msg << "\n";
                return kInternal;
            }
            return failed ? kMismatch : kPass;
        }

        auto R = parse_ring_input(ring_arg, bounds);

        if (*analyze) {
            AnalysisOptions opt;
            if (!phases.empty())
                opt.phases = {phases.begin(), phases.end()};
            auto rep = run_analysis(R, bounds, opt);
            if (out_path.empty())
                print(rep.doc);
            else
                std::ofstream(out_path) << rep.doc.dump(1) << "\n";
            return rep.mismatch ? kMismatch : kPass;
        }
        if (*maxden) {
            auto p = localization_profile(R, bounds);
            print(json{{"ring", R->name()}, {"profile", profile_json(p)}});
            return kPass;
        }
        if (*loc) {
            auto S = parse_set(set_arg, R->order());
            require_multiplicative(*R, S);
            auto rec = classify_mult_set(*R, S);
            json j{{"set", to_json(rec.set)},
                   {"left_ore", rec.is_left_ore},
                   {"left_denominator", rec.is_left_denominator},
                   {"ass", to_json(rec.ass)},
                   {"core", to_json(rec.core)}};
            if (rec.ore_failure)
                j["ore_failure"] = {rec.ore_failure->first, rec.ore_failure->second};
            if (rec.reversibility_failure)
                j["reversibility_failure"] = {rec.reversibility_failure->first, rec.reversibility_failure->second};
            if (rec.is_left_denominator) {
                auto L = localize(R, rec);
                json inv = json::array();
                for (auto [s, i] : L.inverses)
                    inv.push_back({s, i});
                j["localization"] = json{{"ring", ring_identity(*L.target)},
                                         {"projection", L.projection.image},
                                         {"inverses", inv},
                                         {"scale_note", L.scale_note}};
            }
            print(j);
            return kPass;
        }
        if (*crit) {
            AnalysisOptions opt;
            opt.phases = {"criteria"};
            if (!which.empty())
                opt.criteria = {which.begin(), which.end()};
            if (!fourth_sets.empty())
                opt.fourth_sets = parse_sets(fourth_sets, R->order());
            auto rep = run_analysis(R, bounds, opt);
            print(rep.doc["phases"]);
            return kPass;
        }
        if (*thm) {
            auto tb = verify_theorems(R, bounds);
            for (const auto& c : tb.checks)
                std::cout << (c.skipped ? "SKIP " : c.holds ? "PASS " : "FAIL ") << c.name << "  " << c.detail << "\n";
            return tb.all_hold() ? kPass : kMismatch;
        }
        if (*exp) {
            save_ring_file(*R, out_path);
            return kPass;
        }
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kPass;
}
