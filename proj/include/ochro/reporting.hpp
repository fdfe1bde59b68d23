#ifndef OCHRO_REPORTING_HPP
#define OCHRO_REPORTING_HPP

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ochro/bounds.hpp"
#include "ochro/diameter.hpp"
#include "ochro/experiment.hpp"
#include "ochro/lemma2.hpp"
#include "ochro/solver.hpp"

namespace ochro {

// reals are reported to 6 significant digits, in text and JSON alike
inline std::string fmt6(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", value);
    return buffer;
}

inline double round6(double value) { return std::stod(fmt6(value)); }

// ---- bounds ----

inline nlohmann::json bounds_json(const BoundsReport& r)
{
    nlohmann::json j;
    j["graph"] = {{"n", r.n}, {"m", r.m}, {"max_degree", r.max_degree},
        {"avg_degree", round6(r.avg_degree)}};
    j["lower"] = {{"ksz", r.ksz}, {"lemma3", round6(r.lemma3)},
        {"lemma4", r.lemma4 ? nlohmann::json(round6(*r.lemma4)) : nlohmann::json(nullptr)},
        {"lemma5", r.lemma5 ? nlohmann::json(round6(*r.lemma5)) : nlohmann::json(nullptr)},
        {"degree_lb", round6(r.degree_lb)}};
    j["upper"] = {{"mx", round6(r.mx)}, {"degree_ub", round6(r.degree_ub)}, {"trivial", r.trivial}};
    j["bracket"] = {{"lo", r.bracket_lo}, {"hi", r.bracket_hi}};
    j["flags"] = r.flags;
    return j;
}

inline std::string bounds_text(const BoundsReport& r)
{
    std::ostringstream out;
    out << "graph: n=" << r.n << " m=" << r.m << " max_degree=" << r.max_degree
        << " avg_degree=" << fmt6(r.avg_degree) << "\n";
    out << "lower: ksz=" << r.ksz << " lemma3=" << fmt6(r.lemma3)
        << " lemma4=" << (r.lemma4 ? fmt6(*r.lemma4) : "n/a")
        << " lemma5=" << (r.lemma5 ? fmt6(*r.lemma5) : "n/a")
        << " degree_lb=" << fmt6(r.degree_lb) << "\n";
    out << "upper: mx=" << fmt6(r.mx) << " degree_ub=" << fmt6(r.degree_ub)
        << " trivial=" << r.trivial << "\n";
    out << "bracket: [" << r.bracket_lo << ", " << r.bracket_hi << "]\n";
    for (const auto& flag : r.flags)
        out << "note: " << flag << "\n";
    return out.str();
}

// ---- chromatic searches ----

inline nlohmann::json search_json(const SearchResult& r)
{
    nlohmann::json j;
    j["value"] = r.value;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["completed"] = r.stats.completed;
    j["nodes"] = r.stats.nodes;
    j["orientation_mask"]
        = r.orientation_mask ? nlohmann::json(*r.orientation_mask) : nlohmann::json(nullptr);
    return j;
}

inline std::string search_text(const SearchResult& r)
{
    std::ostringstream out;
    out << "value: " << r.value << "\n";
    out << "bracket: [" << r.lower << ", " << r.upper << "]\n";
    out << "completed: " << (r.stats.completed ? "yes" : "no") << "\n";
    out << "nodes: " << r.stats.nodes << "\n";
    if (r.orientation_mask)
        out << "orientation_mask: " << *r.orientation_mask << "\n";
    return out.str();
}

// ---- oclique checks ----

inline nlohmann::json oclique_json(const DiameterReport& r, int n)
{
    nlohmann::json j;
    j["n"] = n;
    j["finite"] = r.is_finite();
    j["pair_diameter"] = r.is_finite() ? nlohmann::json(r.value) : nlohmann::json(nullptr);
    j["oclique"] = r.is_finite() && r.value <= 2;
    j["witness_pair"] = r.witness_pair
        ? nlohmann::json({r.witness_pair->first, r.witness_pair->second})
        : nlohmann::json(nullptr);
    return j;
}

inline std::string oclique_text(const DiameterReport& r, int n)
{
    std::ostringstream out;
    const bool oclique = r.is_finite() && r.value <= 2;
    out << (oclique ? "oclique" : "not an oclique")
        << "; pair-diameter " << (r.is_finite() ? std::to_string(r.value) : "infinite");
    if (r.witness_pair)
        out << "; witness pair (" << r.witness_pair->first << "," << r.witness_pair->second << ")";
    if (oclique)
        out << "; oriented chromatic number = n = " << n;
    out << "\n";
    return out.str();
}

// ---- construction verification ----

inline nlohmann::json lemma2_json(const Lemma2Report& r)
{
    nlohmann::json j;
    j["p"] = r.p;
    j["n"] = r.n;
    j["max_degree"] = r.max_degree;
    j["all_passed"] = r.all_passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return j;
}

inline std::string lemma2_text(const Lemma2Report& r)
{
    std::ostringstream out;
    out << "p=" << r.p << " n=" << r.n << " max_degree=" << r.max_degree << "\n";
    for (const auto& c : r.checks)
        out << (c.passed ? "pass" : "FAIL") << " " << c.name << ": " << c.detail << "\n";
    out << (r.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return out.str();
}

// ---- experiments ----

inline nlohmann::json experiment_json(const ExperimentRecord& r)
{
    nlohmann::json j;
    j["d"] = r.d;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["budget"] = r.budget_nodes;
    j["target"] = round6(r.target);
    j["best"] = {{"certified_lower", r.best_certified_lower}, {"trial", r.best_trial},
        {"seed", r.best_seed}};
    j["records"] = nlohmann::json::array();
    for (const auto& t : r.records) {
        j["records"].push_back({{"trial", t.trial}, {"seed", t.seed},
            {"mask_digest", t.mask_digest}, {"heuristic_chi", t.heuristic_chi},
            {"exact_chi", t.exact_chi ? nlohmann::json(*t.exact_chi) : nlohmann::json(nullptr)},
            {"is_oclique", t.oclique}, {"nodes", t.nodes}, {"millis", t.millis}});
    }
    return j;
}

inline std::string experiment_summary(const ExperimentRecord& r)
{
    std::ostringstream out;
    out << "d=" << r.d << " trials=" << r.trials << " seed=" << r.seed << "\n";
    out << "best certified lower bound: " << r.best_certified_lower;
    if (r.best_trial >= 0)
        out << " (trial " << r.best_trial << ", seed " << r.best_seed << ")";
    out << "\n";
    out << "density lower-bound target for Q_" << r.d << ": " << fmt6(r.target) << "\n";
    return out.str();
}

} // namespace ochro

#endif // OCHRO_REPORTING_HPP
