// One PASS/FAIL line per acceptance criterion. Checks are exact; the only tolerance is the
// wall-clock budget of each criterion, given in seconds below.
#include "specht/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <tuple>

using namespace specht;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;
    void need(bool b, const std::string& what) {
        if (!b) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void report(const Report& r) {
        for (auto& c : r.checks)
            need(c.pass, c.name + " expected " + c.expected + " computed " + c.computed);
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= budget_s;
    bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s %2d %s (%.1fs, budget %.0fs)\n", pass ? "PASS" : "FAIL", id, title.c_str(), secs, budget_s);
    for (auto& n : o.notes) std::printf("       %s\n", n.c_str());
    if (!in_time) std::printf("       over time budget\n");
    std::fflush(stdout);
}

// Brauer-Nesbitt, duality closure and pairwise iso behaviour of one class list.
void class_list_invariants(Outcome& o, int n, int k, long long p, const std::vector<FormClass>& cls, const SpechtContext& ctx) {
    std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(p);
    for (std::size_t i = 0; i < cls.size(); ++i) {
        o.need(cls[i].composition == cls[0].composition, "Brauer-Nesbitt " + tag + " class " + std::to_string(i));
        bool closed = cls[i].dual_partner && *cls[i].dual_partner < cls.size() && cls[*cls[i].dual_partner].dual_partner == i;
        o.need(closed, "duality closure " + tag + " class " + std::to_string(i));
        o.need(is_isomorphic_at_p(cls[i].lattice, cls[i].lattice.scaled(static_cast<long>(p)), p, ctx), "reflexive " + tag);
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
            bool a = is_isomorphic_at_p(cls[i].lattice, cls[j].lattice, p, ctx);
            bool b = is_isomorphic_at_p(cls[j].lattice, cls[i].lattice, p, ctx);
            o.need(!a && !b, "distinct classes non-isomorphic " + tag);
        }
    }
}

}  // namespace

int main() {
    FormsSettings settings;
    settings.seed = kDefaultSeed;

    criterion(1, "odd p: h_p(k) = nu_p(n) + 1 for 5 <= n <= 12, k <= 3", 300, [&](Outcome& o) {
        int cases = 0;
        for (int n = 5; n <= 12; ++n) {
            auto r = verify_theorem_a(n, 3, settings);
            o.report(r);
            for (auto& c : r.checks) cases += c.name.rfind("h_p(k)", 0) == 0;
        }
        o.notes.push_back(std::to_string(cases) + " (n,k,p) cases");
    });

    criterion(2, "p = 2, k = 2, n odd: three classes, Loewy series and duality", 120, [&](Outcome& o) {
        for (int n : {5, 7, 9, 11}) o.report(verify_theorem_b_odd(n, settings));
    });

    criterion(3, "p = 2, k = 2, n = 2 mod 4: four classes, T chain duality and Loewy series", 300, [&](Outcome& o) {
        for (int n : {6, 10}) o.report(verify_theorem_b_2mod4(n, settings));
    });

    criterion(4, "Craig-Plesken lattices for n <= 12", 120, [&](Outcome& o) {
        for (int n = 3; n <= 12; ++n) o.report(verify_craig(n, settings));
    });

    criterion(5, "exterior transfer matches enumeration", 300, [&](Outcome& o) {
        std::vector<std::pair<int, long long>> np{{6, 3}, {9, 3}, {12, 3}, {10, 5}};
        for (auto [n, p] : np)
            for (int k : {2, 3}) o.report(verify_exterior_transfer(n, k, p, settings));
    });

    criterion(6, "global forms: 3d(n) for odd n, 2d(n) for n = 2 mod 4", 600, [&](Outcome& o) {
        for (int n : {5, 6, 7, 9, 10}) o.report(verify_global_count(n, settings));
    });

    criterion(7, "exterior index law on 20 random sublattices per (n,k)", 120, [&](Outcome& o) {
        for (int n = 4; n <= 8; ++n)
            for (int k : {2, 3})
                if (k <= n - 2) o.report(verify_exterior_index(n, k, 20, settings.seed));
    });

    criterion(8, "dual embedding: injective, equivariant, f(2,3) identity", 120, [&](Outcome& o) {
        for (auto& l : {Partition({2, 1}), Partition({3, 1, 1}), Partition({4, 1, 1}), Partition({8, 1, 1})}) o.report(verify_wildon(l));
    });

    criterion(9, "census of Z_2-forms against predictions (reported, not asserted)", 1800, [&](Outcome& o) {
        std::vector<std::pair<int, int>> cases{{8, 2}, {12, 2}, {6, 3}, {7, 3}, {9, 3}};
        for (auto [n, k] : cases) {
            auto recs = conjecture_census(n, n, k, settings);
            auto& r = recs.back();
            std::string line = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " observed " +
                               (r.observed ? std::to_string(*r.observed) : "-") + " expected " +
                               (r.expected ? std::to_string(*r.expected) : "-") + " " + r.source + " " + r.status;
            for (auto a : r.alternatives) line += " (alternative prediction " + std::to_string(a) + ")";
            if (!r.error.empty()) line += " error: " + r.error;
            o.notes.push_back(line);
            // the census passes when it produced an observation with a labelled prediction
            o.need(r.observed.has_value(), "census observation n=" + std::to_string(n) + " k=" + std::to_string(k));
            o.need(r.source == "CONJECTURE" || r.source == "THEOREM", "prediction source n=" + std::to_string(n));
        }
    });

    criterion(10, "Brauer-Nesbitt, duality closure, seed independence", 300, [&](Outcome& o) {
        std::vector<std::tuple<int, int, long long>> lists;
        for (int n = 5; n <= 12; ++n)
            for (long long p : primes_up_to(n))
                if (p > 2 && n % p == 0)
                    for (int k = 1; k <= 3; ++k) lists.push_back({n, k, p});
        for (int n : {5, 6, 7, 9, 10, 11}) lists.push_back({n, 2, 2});
        for (int n : {4, 8, 12}) lists.push_back({n, 1, 2});
        FormsSettings other = settings;
        other.seed = 0x0123456789abcdefULL;
        for (auto [n, k, p] : lists) {
            FormsEngine eng(n, k, p, settings);
            auto cls = eng.enumerate();
            class_list_invariants(o, n, k, p, cls, eng.context());
            auto again = enumerate_p_forms(n, k, p, other);
            bool same = again.size() == cls.size();
            for (std::size_t i = 0; same && i < cls.size(); ++i)
                same = again[i].lattice == cls[i].lattice && again[i].loewy == cls[i].loewy &&
                       again[i].composition == cls[i].composition && again[i].dual_partner == cls[i].dual_partner;
            o.need(same, "seed independence n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(p));
        }
        o.notes.push_back(std::to_string(lists.size()) + " class lists checked");
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
