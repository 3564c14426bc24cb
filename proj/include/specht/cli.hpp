#pragma once

#include "specht/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace specht::cli {

using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kFeasibility = 3 };

struct RunConfig {
    std::string command;
    int n = 0, k = 0;
    long long p = 0;
    int n_min = 5, n_max = 0, k_max = 2;
    std::string theorem;
    std::optional<std::string> output;
    std::string format = "json";
    std::uint64_t seed = default_seed();
    std::size_t max_classes = 64;
    std::size_t max_depth = 40;

    FormsSettings settings() const { return {max_classes, max_depth, seed}; }
};

inline json labels_json(const std::vector<SimpleLabel>& ls) {
    json a = json::array();
    for (auto& l : ls) a.push_back(l.tag);
    return a;
}

inline json hnf_json(const ZLattice& L) {
    json rows = json::array();
    for (std::size_t i = 0; i < L.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < L.rank(); ++j) row.push_back(L.basis()(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

inline json classes_json(const std::vector<FormClass>& classes) {
    json out = json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        auto& c = classes[i];
        json layers = json::array();
        for (auto& l : c.loewy) layers.push_back(labels_json(l));
        json j;
        j["index"] = i;
        j["hnf"] = hnf_json(c.lattice);
        j["index_valuation"] = c.index_valuation;
        j["composition"] = labels_json(c.composition);
        j["loewy"] = layers;
        j["dual_partner"] = c.dual_partner ? json(*c.dual_partner) : json(nullptr);
        out.push_back(j);
    }
    return out;
}

inline json error_json(const std::string& kind, const std::string& msg) {
    json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = msg;
    return j;
}

inline void emit(const json& doc, const RunConfig& cfg, std::ostream& out) {
    std::string text = doc.dump(2) + "\n";
    if (cfg.output) {
        std::ofstream f(*cfg.output);
        if (!f) throw std::runtime_error("cannot write " + *cfg.output);
        f << text;
    } else {
        out << text;
    }
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    auto classes = enumerate_p_forms(cfg.n, cfg.k, cfg.p, cfg.settings());
    if (cfg.format == "text") {
        out << "n=" << cfg.n << " k=" << cfg.k << " p=" << cfg.p << " classes=" << classes.size() << "\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            auto& c = classes[i];
            out << "  #" << i << " index p^" << c.index_valuation << " loewy " << loewy_string(c.loewy) << " dual #"
                << (c.dual_partner ? std::to_string(*c.dual_partner) : "?") << "\n";
        }
        if (!cfg.output) return kOk;
    }
    json doc;
    doc["n"] = cfg.n;
    doc["k"] = cfg.k;
    doc["p"] = cfg.p;
    doc["seed"] = cfg.seed;
    doc["count"] = classes.size();
    doc["classes"] = classes_json(classes);
    if (cfg.format == "json" || cfg.output) emit(doc, cfg, out);
    return kOk;
}

inline void print_report(const Report& r, std::ostream& out) {
    for (auto& c : r.checks)
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": expected " << c.expected << ", computed " << c.computed << " ("
            << c.source << ")\n";
    out << r.suite << ": " << (r.passed() ? "all checks passed" : "FAILED") << "\n";
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    auto ids = verify_suite_ids();
    if (std::find(ids.begin(), ids.end(), cfg.theorem) == ids.end()) {
        out << "unknown theorem id '" << cfg.theorem << "'; known ids:";
        for (auto& i : ids) out << " " << i;
        out << "\n";
        return kUsage;
    }
    int n = cfg.n > 0 ? cfg.n : default_n_for(cfg.theorem);
    Report r = run_verify_suite(cfg.theorem, n, cfg.settings());
    print_report(r, out);
    return r.passed() ? kOk : kVerifyFailed;
}

inline int cmd_census(const RunConfig& cfg, std::ostream& out) {
    auto recs = conjecture_census(cfg.n_min, cfg.n_max, cfg.k_max, cfg.settings());
    json arr = json::array();
    for (auto& r : recs) {
        json j;
        j["n"] = r.n;
        j["k"] = r.k;
        j["p"] = r.p;
        j["observed"] = r.observed ? json(*r.observed) : json(nullptr);
        j["expected"] = r.expected ? json(*r.expected) : json(nullptr);
        j["source"] = r.source;
        j["status"] = r.status;
        if (!r.alternatives.empty()) j["alternative_predictions"] = r.alternatives;
        if (!r.error.empty()) j["error"] = r.error;
        j["loewy"] = r.loewy;
        arr.push_back(j);
    }
    json doc;
    doc["seed"] = cfg.seed;
    doc["n_min"] = cfg.n_min;
    doc["n_max"] = cfg.n_max;
    doc["k_max"] = cfg.k_max;
    doc["census"] = arr;
    if (cfg.output) {
        emit(doc, cfg, out);
        out << "  n  k  observed  expected  source      status\n";
        for (auto& r : recs) {
            char line[160];
            std::snprintf(line, sizeof line, "%3d %2d  %8s  %8s  %-10s  %s\n", r.n, r.k,
                          r.observed ? std::to_string(*r.observed).c_str() : "-", r.expected ? std::to_string(*r.expected).c_str() : "-",
                          r.source.c_str(), r.status.c_str());
            out << line;
        }
    } else {
        emit(doc, cfg, out);
    }
    return kOk;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    RunConfig cfg;
    CLI::App app{"Z_p-forms of hook Specht lattices: enumeration, checks and census"};
    app.require_subcommand(1);

    auto* en = app.add_subcommand("enumerate", "enumerate Z_p-forms of S(k) up to isomorphism");
    en->add_option("--n", cfg.n)->required();
    en->add_option("--k", cfg.k)->required();
    en->add_option("--p", cfg.p)->required();
    en->add_option("--json", cfg.output, "write JSON to this file");
    en->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
    en->add_option("--max-classes", cfg.max_classes);
    en->add_option("--max-depth", cfg.max_depth);
    en->add_option("--seed", cfg.seed);

    auto* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("theorem", cfg.theorem, "craig | theorem-a | theorem-b-odd | theorem-b-2mod4 | wildon | exterior-index | global-count")->required();
    ve->add_option("--n", cfg.n);
    ve->add_option("--seed", cfg.seed);

    auto* ce = app.add_subcommand("census", "count Z_2-forms and compare with predicted values");
    ce->add_option("--n-min", cfg.n_min);
    ce->add_option("--n-max", cfg.n_max)->required();
    ce->add_option("--k-max", cfg.k_max);
    ce->add_option("--json", cfg.output);
    ce->add_option("--seed", cfg.seed);
    ce->add_option("--max-classes", cfg.max_classes);
    ce->add_option("--max-depth", cfg.max_depth);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*en) {
            if (!is_prime(cfg.p)) throw std::invalid_argument("p must be prime");
            return cmd_enumerate(cfg, out);
        }
        if (*ve) return cmd_verify(cfg, out);
        if (*ce) return cmd_census(cfg, out);
    } catch (const FeasibilityError& e) {
        out << error_json("feasibility", e.what()).dump(2) << "\n";
        return kFeasibility;
    } catch (const std::invalid_argument& e) {
        out << error_json("usage", e.what()).dump(2) << "\n";
        return kUsage;
    } catch (const NotPrimeError& e) {
        out << error_json("usage", e.what()).dump(2) << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        out << error_json("failure", e.what()).dump(2) << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}

}  // namespace specht::cli
