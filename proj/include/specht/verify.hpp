#pragma once

#include "specht/forms.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace specht {

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    std::string source;  // THEOREM, DERIVED or CONJECTURE
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, std::string expected, std::string computed, std::string source) {
        bool ok = expected == computed;
        checks.push_back({std::move(name), std::move(expected), std::move(computed), std::move(source), ok});
    }
    void add_bool(std::string name, bool value, std::string source) {
        add(std::move(name), "true", value ? "true" : "false", std::move(source));
    }
    void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

inline std::string lbl_trivial() { return "TRIVIAL"; }

inline std::string layers(std::initializer_list<std::string> ls) {
    std::string s = "[";
    bool first = true;
    for (auto& l : ls) {
        if (!first) s += " | ";
        s += l;
        first = false;
    }
    return s + "]";
}

inline std::size_t num_divisors(int n) { return divisors(n).size(); }

// ---- Craig-Plesken lattices ----

inline Report verify_craig(int n, FormsSettings settings = {}) {
    Report rep{"craig", {}};
    ZLattice M = ZLattice::standard(static_cast<std::size_t>(n - 1), n, 1);
    for (long long d : divisors(n)) {
        ZLattice Md = craig_plesken_lattice(n, static_cast<int>(d));
        rep.add("[M:M_" + std::to_string(d) + "]", to_string(ipow(d, n - 2)), to_string(order_ideal_index(M, Md)), "THEOREM");
    }
    auto ctx = build_hook_specht(n, 1);
    for (long long p : prime_divisors(n)) {
        int v = p_valuation(static_cast<long long>(n), p);
        std::vector<ZLattice> reps;
        for (int i = 0; i <= v; ++i) reps.push_back(craig_plesken_lattice(n, static_cast<int>(ipow(p, i).get_si())));
        bool distinct = true;
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                if (is_isomorphic_at_p(reps[i], reps[j], p, *ctx)) distinct = false;
        rep.add_bool("M_{" + std::to_string(p) + "^i}, i <= " + std::to_string(v) + " pairwise non-isomorphic at " + std::to_string(p), distinct, "THEOREM");
        for (long long d : divisors(n)) {
            int e = p_valuation(d, p);
            bool iso = is_isomorphic_at_p(craig_plesken_lattice(n, static_cast<int>(d)), reps[e], p, *ctx);
            rep.add_bool("M_" + std::to_string(d) + " ~ M_" + std::to_string(ipow(p, e).get_si()) + " at " + std::to_string(p), iso, "THEOREM");
        }
        auto classes = enumerate_p_forms(n, 1, p, settings);
        rep.add("h_" + std::to_string(p) + "(1) by enumeration", std::to_string(v + 1), std::to_string(classes.size()), "THEOREM");
    }
    return rep;
}

// ---- odd p ----

inline Report verify_theorem_a(int n, int k_max = 3, FormsSettings settings = {}) {
    Report rep{"theorem-a", {}};
    for (long long p : primes_up_to(n)) {
        if (p == 2) continue;
        int v = n % p == 0 ? p_valuation(static_cast<long long>(n), p) : 0;
        for (int k = 1; k <= std::min(k_max, n - 2); ++k) {
            auto classes = enumerate_p_forms(n, k, p, settings);
            std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(p);
            rep.add("h_p(k) " + tag, std::to_string(v + 1), std::to_string(classes.size()), "THEOREM");
            if (n % p == 0) {
                // S(k) mod p is uniserial with head D(k+1) and socle D(k)
                std::string expect = layers({hook_label(k + 1), hook_label(k)});
                rep.add("Loewy of S(k) mod p, " + tag, expect, loewy_string(classes[0].loewy), "THEOREM");
            }
        }
    }
    return rep;
}

// Class sets from exterior powers of Craig-Plesken lattices versus direct enumeration.
inline Report verify_exterior_transfer(int n, int k, long long p, FormsSettings settings = {}) {
    Report rep{"exterior-transfer", {}};
    auto ext = exterior_transfer(n, k, p, settings);
    auto en = enumerate_p_forms(n, k, p, settings);
    auto ctx = build_hook_specht(n, k);
    std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(p);
    rep.add("class count " + tag, std::to_string(en.size()), std::to_string(ext.size()), "THEOREM");
    std::vector<int> match(ext.size(), -1);
    std::vector<int> used(en.size(), 0);
    for (std::size_t i = 0; i < ext.size(); ++i)
        for (std::size_t j = 0; j < en.size(); ++j)
            if (is_isomorphic_at_p(ext[i].lattice, en[j].lattice, p, *ctx)) {
                match[i] = static_cast<int>(j);
                ++used[j];
            }
    bool bij = ext.size() == en.size();
    for (auto m : match) bij = bij && m >= 0;
    for (auto u : used) bij = bij && u == 1;
    rep.add_bool("bijection under the iso oracle " + tag, bij, "THEOREM");
    return rep;
}

// ---- p = 2, k = 2 ----

inline Report verify_theorem_b_odd(int n, FormsSettings settings = {}) {
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("theorem-b-odd needs odd n >= 5");
    Report rep{"theorem-b-odd", {}};
    FormsEngine eng(n, 2, 2, settings);
    auto classes = eng.enumerate();
    rep.add("h_2(2) n=" + std::to_string(n), "3", std::to_string(classes.size()), "THEOREM");
    ZLattice S = eng.reference(), S1 = s1_lattice(n), S2 = s2_lattice(n);
    auto idx = [&](const ZLattice& L) -> long long {
        auto i = find_class(classes, L, 2);
        return i ? static_cast<long long>(*i) : -1;
    };
    long long iS = idx(S), i1 = idx(S1), i2 = idx(S2);
    rep.add_bool("S, S1, S2 are the enumerated classes", iS >= 0 && i1 >= 0 && i2 >= 0 && iS != i1 && i1 != i2 && iS != i2, "THEOREM");
    rep.add("[S:S1]", "2", to_string(order_ideal_index(S, S1)), "THEOREM");
    rep.add("[S:S2]", "2^" + std::to_string(binom(n - 1, 2) - 1), "2^" + std::to_string(p_valuation(S2.det(), 2)), "DERIVED");
    std::string F = lbl_trivial(), D = partition_label(n - 2, 2);
    std::string eS, e1, e2;
    if (n % 4 == 1) {
        eS = layers({F, D, F});
        e1 = layers({D, F, F});
        e2 = layers({F, F, D});
    } else {
        eS = layers({D + " + " + F});
        e1 = layers({D, F});
        e2 = layers({F, D});
    }
    rep.add("Loewy S/2S", eS, loewy_string(eng.analyze(S).loewy), "THEOREM");
    rep.add("Loewy S1/2S1", e1, loewy_string(eng.analyze(S1).loewy), "THEOREM");
    rep.add("Loewy S2/2S2", e2, loewy_string(eng.analyze(S2).loewy), "THEOREM");
    auto& ctx = eng.context();
    rep.add_bool("S self-dual", is_isomorphic_at_p(eng.dual(S), S, 2, ctx), "THEOREM");
    rep.add_bool("S1* ~ S2", is_isomorphic_at_p(eng.dual(S1), S2, 2, ctx), "THEOREM");
    rep.add_bool("S2* ~ S1", is_isomorphic_at_p(eng.dual(S2), S1, 2, ctx), "THEOREM");
    rep.add_bool("S !~ S1", !is_isomorphic_at_p(S, S1, 2, ctx), "THEOREM");
    if (i1 >= 0 && i2 >= 0)
        rep.add_bool("dual partners S1 <-> S2 in class list",
                     classes[i1].dual_partner && static_cast<long long>(*classes[i1].dual_partner) == i2, "THEOREM");
    return rep;
}

inline Report verify_theorem_b_2mod4(int n, FormsSettings settings = {}) {
    if (n < 6 || n % 4 != 2) throw std::invalid_argument("theorem-b-2mod4 needs n = 2 mod 4, n >= 6");
    Report rep{"theorem-b-2mod4", {}};
    FormsEngine eng(n, 2, 2, settings);
    auto classes = eng.enumerate();
    rep.add("h_2(2) n=" + std::to_string(n), "4", std::to_string(classes.size()), "THEOREM");
    ZLattice S = eng.reference();
    auto T = t_chain(n);
    auto& ctx = eng.context();
    rep.add_bool("T1 = S1", T[0] == s1_lattice(n), "THEOREM");
    bool all_found = find_class(classes, S, 2).has_value();
    for (auto& t : T) all_found = all_found && find_class(classes, t, 2).has_value();
    rep.add_bool("S, T1, T2, T3 are the enumerated classes", all_found, "THEOREM");
    rep.add_bool("T3 ~ S*", is_isomorphic_at_p(T[2], eng.dual(S), 2, ctx), "THEOREM");
    rep.add_bool("T1 ~ T2*", is_isomorphic_at_p(T[0], eng.dual(T[1]), 2, ctx), "THEOREM");
    rep.add_bool("S !~ S*", !is_isomorphic_at_p(S, eng.dual(S), 2, ctx), "THEOREM");
    auto h = hom_generator(T[2], S, ctx);
    auto h2 = hom_generator(S, T[2], ctx);
    rep.add_bool("nu_2(det phi_0) > 0 both ways for T3, S", h.det_valuation(2, T[2], S) > 0 && h2.det_valuation(2, S, T[2]) > 0, "DERIVED");
    std::string F = lbl_trivial(), D1 = partition_label(n - 1, 1), D2 = partition_label(n - 2, 2);
    rep.add("Loewy S/2S", layers({F, D2, F, D1}), loewy_string(eng.analyze(S).loewy), "THEOREM");
    rep.add("Loewy T1/2T1", layers({D2, F, D1, F}), loewy_string(eng.analyze(T[0]).loewy), "DERIVED");
    rep.add("Loewy T2/2T2", layers({F, D1, F, D2}), loewy_string(eng.analyze(T[1]).loewy), "THEOREM");
    rep.add("Loewy T3/2T3", layers({D1, F, D2, F}), loewy_string(eng.analyze(T[2]).loewy), "DERIVED");
    return rep;
}

// ---- Wildon embedding ----

inline Report verify_wildon(const Partition& lambda) {
    Report rep{"wildon", {}};
    auto ctx = build_specht(lambda);
    IntMatrix W = wildon_embedding(*ctx);
    std::string tag = lambda.str();
    Int det = determinant(W);
    rep.add_bool("phi injective " + tag, det != 0, "THEOREM");
    auto dual = dual_action(*ctx);
    bool eq = true;
    for (std::size_t g = 0; g < ctx->gens().size(); ++g) eq = eq && dual[g] * W == W * ctx->gens()[g];
    rep.add_bool("phi equivariant " + tag, eq, "THEOREM");
    if (det != 0) {
        ZLattice S = ZLattice::standard(ctx->rank(), lambda.n(), ctx->hook_leg());
        ZLattice img = ZLattice::from_generators(W, lambda.n(), ctx->hook_leg());
        rep.add("image index " + tag, to_string(abs(det)), to_string(order_ideal_index(S, img)), "DERIVED");
    }
    int n = lambda.n();
    if (lambda.length() == 3 && lambda[1] == 1 && lambda[2] == 1 && n >= 4) {
        Int f = factorial(n - 3);
        std::size_t r = ctx->rank();
        bool divisible = true;
        auto F = [&](int i, int j) {
            auto row = W.row(hook_basis_index(n, {i, j}));
            for (auto& x : row) {
                if (!divides(f, x)) divisible = false;
                x /= f;
            }
            return row;
        };
        std::vector<Int> lhs(r);
        lhs[hook_basis_index(n, {2, 3})] = n;
        auto rhs = F(2, 3);
        for (auto& x : rhs) x *= 3;
        for (int u = 4; u <= n; ++u) {
            auto a = F(2, u), b = F(3, u);
            for (std::size_t t = 0; t < r; ++t) rhs[t] += a[t] - b[t];
        }
        rep.add_bool("(n-3)! divides phi(b(i,j)*) " + tag, divisible, "THEOREM");
        rep.add_bool("n b(2,3) = 3 f(2,3) + sum_u (f(2,u) - f(3,u)) " + tag, lhs == rhs, "THEOREM");
        // f(2,3) = (n-2) b(2,3) + sum_k (b(3,k) - b(2,k))
        std::vector<Int> expect(r);
        expect[hook_basis_index(n, {2, 3})] = n - 2;
        for (int u = 4; u <= n; ++u) {
            expect[hook_basis_index(n, {3, u})] += 1;
            expect[hook_basis_index(n, {2, u})] -= 1;
        }
        rep.add_bool("f(2,3) expansion " + tag, F(2, 3) == expect, "THEOREM");
    }
    return rep;
}

inline Report verify_wildon_suite(int n) {
    if (n > 10) throw FeasibilityError("wildon embedding limited to n <= 10");
    Report rep{"wildon", {}};
    std::vector<Partition> shapes{Partition({2, 1}), Partition({3, 1, 1}), Partition({4, 1, 1})};
    if (n >= 4 && n != 5 && n != 6) shapes.push_back(Partition({n - 2, 1, 1}));
    for (auto& l : shapes) rep.append(verify_wildon(l));
    return rep;
}

// ---- exterior index law ----

inline Report verify_exterior_index(int n, int k, int samples, std::uint64_t seed) {
    Report rep{"exterior-index", {}};
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) << 8) ^ static_cast<std::uint64_t>(k));
    std::size_t r = static_cast<std::size_t>(n - 1);
    long long e = binom(static_cast<long long>(r) - 1, k - 1);
    int ok = 0, total = 0;
    while (total < samples) {
        IntMatrix A(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                long v = static_cast<long>(rng() % 7) - 3;
                A(i, j) = i == j ? Int(v + 4) : Int(v * static_cast<long>(rng() % 2));
            }
        if (determinant(A) == 0) continue;
        ZLattice N = ZLattice::from_generators(A, n, 1);
        ZLattice W = exterior_power_lattice(N, k);
        ++total;
        if (W.det() == ipow(N.det(), static_cast<unsigned long>(e))) ++ok;
    }
    rep.add("[wedge^k M : wedge^k N] = [M:N]^binom(r-1,k-1), n=" + std::to_string(n) + " k=" + std::to_string(k),
            std::to_string(samples) + "/" + std::to_string(samples), std::to_string(ok) + "/" + std::to_string(total), "THEOREM");
    return rep;
}

// ---- global forms ----

inline Report verify_global_count(int n, FormsSettings settings = {}) {
    Report rep{"global-count", {}};
    auto g = global_forms(n, 2, settings);
    std::size_t d = num_divisors(n);
    std::string tag = "n=" + std::to_string(n);
    if (n % 2 == 1)
        rep.add("j(2) = 3 d(n), " + tag, std::to_string(3 * d), std::to_string(g.distinct_signatures), "THEOREM");
    else if (n % 4 == 2)
        rep.add("j(2) = 2 d(n), " + tag, std::to_string(2 * d), std::to_string(g.distinct_signatures), "THEOREM");
    else
        rep.add("intersections with distinct signatures, " + tag, std::to_string(g.forms.size()), std::to_string(g.distinct_signatures), "CONJECTURE");
    bool loc = true;
    for (auto& f : g.forms) loc = loc && f.localization_ok;
    rep.add_bool("localizations match chosen local classes, " + tag, loc, "DERIVED");
    rep.add_bool("[S : cap N_i] = prod [S : N_i], " + tag, g.index_multiplicative, "DERIVED");
    return rep;
}

inline std::vector<std::string> verify_suite_ids() {
    return {"craig", "theorem-a", "theorem-b-odd", "theorem-b-2mod4", "wildon", "exterior-index", "global-count"};
}

inline int default_n_for(const std::string& id) {
    if (id == "theorem-a") return 9;
    if (id == "theorem-b-odd") return 5;
    if (id == "exterior-index") return 7;
    if (id == "global-count") return 6;
    return 6;
}

inline Report run_verify_suite(const std::string& id, int n, FormsSettings settings = {}) {
    if (id == "craig") return verify_craig(n, settings);
    if (id == "theorem-a") return verify_theorem_a(n, 3, settings);
    if (id == "theorem-b-odd") return verify_theorem_b_odd(n, settings);
    if (id == "theorem-b-2mod4") return verify_theorem_b_2mod4(n, settings);
    if (id == "wildon") return verify_wildon_suite(n);
    if (id == "exterior-index") {
        Report r{"exterior-index", {}};
        for (int k : {2, 3})
            if (k <= n - 2) r.append(verify_exterior_index(n, k, 20, settings.seed));
        return r;
    }
    if (id == "global-count") return verify_global_count(n, settings);
    throw std::invalid_argument("unknown theorem id: " + id);
}

}  // namespace specht
