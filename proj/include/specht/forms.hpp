#pragma once

#include "specht/linalg.hpp"
#include "specht/modrep.hpp"
#include "specht/specht.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace specht {

struct FeasibilityError : Error {
    using Error::Error;
};
struct CapExceededError : FeasibilityError {
    using FeasibilityError::FeasibilityError;
};
struct HomRankError : Error {
    using Error::Error;
};

inline constexpr std::size_t kMaxRank = 165;

inline void check_feasible(int n, int k) {
    if (n < 3) throw FeasibilityError("n must be at least 3");
    if (k < 1 || k > n - 2) throw FeasibilityError("k must lie in 1..n-2");
    if (k > 3) throw FeasibilityError("k > 3 is outside the supported range");
    if (binom(n - 1, k) > static_cast<long long>(kMaxRank))
        throw FeasibilityError("rank binom(n-1,k) = " + std::to_string(binom(n - 1, k)) + " exceeds " + std::to_string(kMaxRank));
}

// ---- lattices inside the reference Specht lattice ----

// True iff every basis entry is divisible by p, i.e. L lies in p*S.
inline bool in_p_reference(const ZLattice& L, long long p) {
    Int P = static_cast<long>(p);
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = i; j < L.rank(); ++j)
            if (!divides(P, L.basis()(i, j))) return false;
    return true;
}

// Divide by p until the lattice leaves p*S.
inline ZLattice normalize(ZLattice L, long long p) {
    while (in_p_reference(L, p)) L = L.divided(Int(static_cast<long>(p)));
    return L;
}

inline bool has_p_power_index(const ZLattice& L, long long p) {
    Int d = L.det();
    Int P = static_cast<long>(p);
    while (divides(P, d)) d /= P;
    return d == 1;
}

// p-part of L: agrees with L at p and with S elsewhere.
inline ZLattice localize(const ZLattice& L, long long p) {
    int e = p_valuation(L.det(), p);
    Int D = ipow(p, static_cast<unsigned long>(std::max(e, 1)));
    return ZLattice::from_generators_mod(L.basis().to_rows(), L.rank(), D, L.n(), L.k());
}

inline std::string lattice_key(const ZLattice& L) {
    std::string s;
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = i; j < L.rank(); ++j) {
            s += L.basis()(i, j).get_str();
            s += ',';
        }
    return s;
}

// Action of the generators on L/pL in the HNF basis of L.
inline FpModule lattice_reduction(const ZLattice& L, const SpechtContext& ctx, long long p) {
    require_prime(p);
    if (L.rank() != ctx.rank()) throw AmbientMismatchError("lattice rank differs from the Specht rank");
    std::size_t r = L.rank();
    FpModule m{static_cast<std::uint32_t>(p), r, {}};
    Int P = static_cast<long>(p);
    for (auto& g : ctx.sparse_gens()) {
        FpMatrix a(m.p, r, r);
        for (std::size_t i = 0; i < r; ++i) {
            auto y = g.left_mul(L.basis().row(i));
            auto x = L.coordinates(std::move(y));
            if (!x) throw NotSublatticeError("lattice is not invariant under the group");
            for (std::size_t j = 0; j < r; ++j) a(i, j) = static_cast<std::uint32_t>(floor_mod((*x)[j], P).get_ui());
        }
        m.gens.push_back(std::move(a));
    }
    return m;
}

// N = preimage of a subspace K of L/pL.
inline ZLattice preimage(const ZLattice& L, const Subspace& K, long long p) {
    std::size_t r = L.rank();
    std::vector<std::vector<Int>> rows;
    for (auto& v : K.basis()) {
        std::vector<Int> x(r);
        for (std::size_t i = 0; i < r; ++i)
            if (v[i])
                for (std::size_t j = i; j < r; ++j) x[j] += Int(static_cast<unsigned long>(v[i])) * L.basis()(i, j);
        rows.push_back(std::move(x));
    }
    Int P = static_cast<long>(p);
    for (std::size_t i = 0; i < r; ++i) {
        auto row = L.basis().row(i);
        for (auto& x : row) x *= P;
        rows.push_back(std::move(row));
    }
    return ZLattice::from_generators_mod(rows, r, P * L.exponent(), L.n(), L.k());
}

// ---- Hom lattices ----

// The commutant of the rational Specht module is Q*I: an absolutely irreducible reduction at
// an auxiliary prime q > n bounds the dimension of the rational solution space by 1.
inline void require_scalar_commutant(const SpechtContext& ctx) {
    static std::mutex mu;
    static std::set<std::string> verified;
    std::string key = std::to_string(ctx.n()) + ctx.shape().str();
    {
        std::lock_guard<std::mutex> lock(mu);
        if (verified.count(key)) return;
    }
    long long q = ctx.n() + 1;
    while (!is_prime(q)) ++q;
    FpModule V = reduce_mod_p(ctx.gens(), q);
    Meataxe mx(static_cast<std::uint32_t>(q), V.gens.size(), kDefaultSeed);
    bool simple = false;
    try {
        simple = V.dim == 0 || find_split(V, mx).simple.has_value();
    } catch (const MeataxeError&) {
        simple = false;
    }
    if (!simple) throw HomRankError("hom rank != 1: ambient module is not absolutely simple");
    std::lock_guard<std::mutex> lock(mu);
    verified.insert(key);
}

struct HomGenerator {
    IntMatrix phi;  // map L -> M in the HNF bases, content 1
    Rat scalar;     // phi is multiplication by this scalar on the ambient space
    Int det_phi() const { return determinant(phi); }
    int det_valuation(long long p, const ZLattice& L, const ZLattice& M) const {
        // det phi = scalar^r * det L / det M
        int v = static_cast<int>(L.rank()) * (p_valuation(scalar.get_num(), p) - p_valuation(scalar.get_den(), p));
        return v + p_valuation(L.det(), p) - p_valuation(M.det(), p);
    }
};

inline std::vector<Rat> rational_coordinates(const ZLattice& M, const std::vector<Int>& v) {
    std::size_t r = M.rank();
    std::vector<Rat> w(v.begin(), v.end()), x(r);
    for (std::size_t j = 0; j < r; ++j) {
        if (w[j] == 0) continue;
        x[j] = w[j] / Rat(M.basis()(j, j));
        for (std::size_t l = j + 1; l < r; ++l)
            if (M.basis()(j, l) != 0) w[l] -= x[j] * M.basis()(j, l);
    }
    return x;
}

// Generator of Hom(L, M) as a primitive integral matrix.
inline HomGenerator hom_generator(const ZLattice& L, const ZLattice& M, const SpechtContext& ctx) {
    require_same_ambient(L, M);
    require_scalar_commutant(ctx);
    std::size_t r = L.rank();
    std::vector<std::vector<Rat>> X;
    Int g = 0, l = 1;
    for (std::size_t i = 0; i < r; ++i) {
        X.push_back(rational_coordinates(M, L.basis().row(i)));
        for (auto& x : X.back()) {
            if (x == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        }
    }
    g = abs(g);
    HomGenerator h;
    h.scalar = Rat(l, g);
    h.scalar.canonicalize();
    h.phi = IntMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rat y = X[i][j] * h.scalar;
            if (y.get_den() != 1) throw Error("hom generator is not integral");
            h.phi(i, j) = y.get_num();
        }
    return h;
}

inline bool is_isomorphic_at_p(const ZLattice& L, const ZLattice& M, long long p, const SpechtContext& ctx) {
    require_prime(p);
    auto h = hom_generator(L, M, ctx);
    return h.det_valuation(p, L, M) == 0;
}

// ---- enumeration ----

struct FormsSettings {
    std::size_t max_classes = 64;
    std::size_t max_depth = 40;
    std::uint64_t seed = default_seed();
};

struct FormClass {
    ZLattice lattice;
    long long p = 2;
    int index_valuation = 0;
    std::vector<SimpleLabel> composition;
    std::vector<std::vector<SimpleLabel>> loewy;
    std::optional<std::size_t> dual_partner;
    std::size_t depth = 0;
    std::string name;
};

inline std::string loewy_string(const std::vector<std::vector<SimpleLabel>>& loewy) {
    std::string s = "[";
    for (std::size_t i = 0; i < loewy.size(); ++i) {
        if (i) s += " | ";
        for (std::size_t j = 0; j < loewy[i].size(); ++j) s += (j ? " + " : "") + loewy[i][j].tag;
    }
    return s + "]";
}

// Per-(n, k, p) state: Specht context, label oracle, Gram form.
class FormsEngine {
public:
    FormsEngine(int n, int k, long long p, FormsSettings settings = {})
        : n_(n), k_(k), p_(p), settings_(settings) {
        check_feasible(n, k);
        require_prime(p);
        ctx_ = build_hook_specht(n, k);
    }

    const SpechtContext& context() const { return *ctx_; }
    SpechtPtr context_ptr() const { return ctx_; }
    long long p() const { return p_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const FormsSettings& settings() const { return settings_; }

    ZLattice reference() const { return ZLattice::standard(ctx_->rank(), n_, k_); }

    LabelOracle& oracle() {
        if (!oracle_) oracle_.emplace(n_, k_, p_, settings_.seed);
        return *oracle_;
    }

    const BilinearForm& gram() {
        if (!gram_) gram_ = gram_form(*ctx_);
        return *gram_;
    }

    FpModule reduction(const ZLattice& L) const { return lattice_reduction(L, *ctx_, p_); }

    ModuleAnalysis analyze(const ZLattice& L) { return analyze_module(reduction(L), oracle(), settings_.seed); }

    ZLattice dual(const ZLattice& L) { return normalize(dual_form(L, gram(), p_), p_); }

    // One maximal sublattice per kernel of a nonzero map onto a simple head constituent.
    // For a constituent of multiplicity m the kernels correspond to projective points of F_p^m.
    std::vector<ZLattice> maximal_sublattices(const ZLattice& L) {
        FpModule V = reduction(L);
        Meataxe mx(V.p, V.gens.size(), settings_.seed);
        auto types = module_types(V, mx);
        auto info = radical(V, types);
        std::vector<ZLattice> out;
        for (std::size_t t = 0; t < types.size(); ++t) {
            auto& maps = info.head_maps[t];
            std::size_t m = maps.size();
            if (m == 0) continue;
            std::size_t dd = types[t].simple.mod.dim;
            for (auto& c : projective_points(m)) {
                FpMatrix Phi(V.p, V.dim, dd);
                for (std::size_t j = 0; j < m; ++j)
                    if (c[j]) Phi = Phi.axpy(c[j], maps[j]);
                ZLattice N = preimage(L, left_nullspace(Phi), p_);
                if (N.det() != L.det() * ipow(p_, static_cast<unsigned long>(dd))) throw Error("maximal sublattice has unexpected index");
                out.push_back(std::move(N));
            }
        }
        return out;
    }

    std::vector<FormClass> enumerate() {
        std::vector<FormClass> classes;
        ZLattice S = reference();
        if (p_ != 2 && n_ % p_ != 0) {
            auto a = analyze(S);
            if (a.composition.size() == 1) {
                classes.push_back(make_class(S, 0));
                finish(classes);
                return classes;
            }
        }
        std::map<std::string, std::size_t> seen;
        std::deque<std::size_t> queue;
        auto add = [&](const ZLattice& L, std::size_t depth) {
            std::string key = lattice_key(L);
            if (seen.count(key)) return;
            if (classes.size() >= settings_.max_classes) throw CapExceededError("class cap exceeded");
            if (depth > settings_.max_depth) throw CapExceededError("depth cap exceeded");
            seen[key] = classes.size();
            FormClass c;
            c.lattice = L;
            c.p = p_;
            c.depth = depth;
            queue.push_back(classes.size());
            classes.push_back(std::move(c));
        };
        add(S, 0);
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            ZLattice L = classes[i].lattice;
            std::size_t depth = classes[i].depth;
            for (auto& N : maximal_sublattices(L)) add(normalize(N, p_), depth + 1);
        }
        for (auto& c : classes) c = make_class(c.lattice, c.depth);
        finish(classes);
        return classes;
    }

    FormClass make_class(const ZLattice& L, std::size_t depth) {
        FormClass c;
        c.lattice = L;
        c.p = p_;
        c.depth = depth;
        c.index_valuation = p_valuation(L.det(), p_);
        auto a = analyze(L);
        c.composition = a.composition;
        c.loewy = a.loewy;
        return c;
    }

    // Fill dual partners by locating the normalized dual in the list.
    void finish(std::vector<FormClass>& classes) {
        for (auto& c : classes) {
            ZLattice D = dual(c.lattice);
            for (std::size_t j = 0; j < classes.size(); ++j)
                if (classes[j].lattice == D) {
                    c.dual_partner = j;
                    break;
                }
        }
    }

    static std::vector<FpVec> projective_points_of(std::uint32_t p, std::size_t m) {
        std::vector<FpVec> pts;
        for (std::size_t lead = 0; lead < m; ++lead) {
            std::size_t free = m - lead - 1;
            std::size_t count = 1;
            for (std::size_t i = 0; i < free; ++i) count *= p;
            for (std::size_t t = 0; t < count; ++t) {
                FpVec v(m, 0);
                v[lead] = 1;
                std::size_t x = t;
                for (std::size_t i = lead + 1; i < m; ++i) {
                    v[i] = static_cast<std::uint32_t>(x % p);
                    x /= p;
                }
                pts.push_back(v);
            }
        }
        return pts;
    }

private:
    std::vector<FpVec> projective_points(std::size_t m) const {
        if (m > 1 && std::pow(double(p_), double(m - 1)) > 1e4) throw FeasibilityError("head multiplicity too large to enumerate");
        return projective_points_of(static_cast<std::uint32_t>(p_), m);
    }

    int n_, k_;
    long long p_;
    FormsSettings settings_;
    SpechtPtr ctx_;
    std::optional<LabelOracle> oracle_;
    std::optional<BilinearForm> gram_;
};

inline std::vector<FormClass> enumerate_p_forms(int n, int k, long long p, FormsSettings settings = {}) {
    FormsEngine eng(n, k, p, settings);
    return eng.enumerate();
}

inline std::vector<ZLattice> maximal_sublattices(const ZLattice& L, long long p, FormsSettings settings = {}) {
    FormsEngine eng(L.n(), L.k(), p, settings);
    return eng.maximal_sublattices(L);
}

// Index of the class containing L (compared after normalization), if any.
inline std::optional<std::size_t> find_class(const std::vector<FormClass>& classes, const ZLattice& L, long long p) {
    ZLattice N = normalize(localize(L, p), p);
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].lattice == N) return i;
    return std::nullopt;
}

// ---- named lattices ----

inline ZLattice craig_plesken_lattice(int n, int d) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    if (d < 1 || n % d != 0) throw std::invalid_argument("d must divide n");
    std::size_t r = static_cast<std::size_t>(n - 1);
    IntMatrix B(r, r);
    for (std::size_t j = 0; j < r; ++j) B(0, j) = 1;
    for (std::size_t i = 1; i < r; ++i) B(i, i - 1) = d;
    return ZLattice::from_generators(B, n, 1);
}

inline ZLattice s1_lattice(int n) {
    if (n < 4) throw std::invalid_argument("S1 needs n >= 4");
    std::size_t r = static_cast<std::size_t>(binom(n - 1, 2));
    IntMatrix B(r, r);
    for (std::size_t i = 0; i + 1 < r; ++i) {
        B(i, i) = 1;
        B(i, r - 1) = 1;
    }
    B(r - 1, r - 1) = 2;
    return ZLattice::from_generators(B, n, 2);
}

inline ZLattice s2_lattice(int n) {
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("S2 needs odd n >= 5");
    std::size_t r = static_cast<std::size_t>(binom(n - 1, 2));
    IntMatrix B(r, r);
    for (std::size_t j = 0; j < r; ++j) B(0, j) = 1;
    for (std::size_t i = 1; i < r; ++i) B(i, i - 1) = 2;
    return ZLattice::from_generators(B, n, 2);
}

// Preimages in S of the radical layers of S/2S.
inline std::vector<ZLattice> radical_preimages(const SpechtContext& ctx, std::size_t count, std::uint64_t seed = default_seed()) {
    FpModule V = reduce_mod_p(ctx.gens(), 2);
    Meataxe mx(2, V.gens.size(), seed);
    auto types = module_types(V, mx);
    std::size_t r = V.dim;
    std::vector<FpVec> basis;
    for (std::size_t i = 0; i < r; ++i) {
        FpVec e(r, 0);
        e[i] = 1;
        basis.push_back(e);
    }
    FpModule cur = V;
    ZLattice S = ZLattice::standard(r, ctx.n(), ctx.hook_leg());
    std::vector<ZLattice> out;
    for (std::size_t step = 0; step < count && cur.dim > 0; ++step) {
        auto info = radical(cur, types);
        std::vector<FpVec> nb;
        for (auto& c : info.radical.basis()) {
            FpVec v(r, 0);
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i])
                    for (std::size_t j = 0; j < r; ++j) v[j] ^= basis[i][j];
            nb.push_back(v);
        }
        Subspace K(2, r);
        for (auto& v : nb) K.add(v);
        out.push_back(preimage(S, K, 2));
        cur = submodule(cur, info.radical);
        basis = nb;
    }
    return out;
}

inline std::vector<ZLattice> t_chain(int n) {
    if (n < 6 || n % 4 != 2) throw std::invalid_argument("T chain needs n = 2 mod 4, n >= 6");
    auto ctx = build_hook_specht(n, 2);
    auto t = radical_preimages(*ctx, 3);
    if (t.size() != 3) throw Error("S/2S has fewer than four radical layers");
    return t;
}

// Exterior powers of the Craig-Plesken lattices M_{p^i}, normalized at p.
inline std::vector<FormClass> exterior_transfer(int n, int k, long long p, FormsSettings settings = {}) {
    require_prime(p);
    if (p == 2) throw std::invalid_argument("exterior transfer needs odd p");
    FormsEngine eng(n, k, p, settings);
    std::vector<FormClass> out;
    int v = n % p == 0 ? p_valuation(static_cast<long long>(n), p) : 0;
    for (int i = 0; i <= v; ++i) {
        ZLattice M = craig_plesken_lattice(n, static_cast<int>(ipow(p, i).get_si()));
        ZLattice W = normalize(exterior_power_lattice(M, k), p);
        out.push_back(eng.make_class(W, static_cast<std::size_t>(i)));
        out.back().name = "wedge" + std::to_string(k) + "(M_" + std::to_string(ipow(p, i).get_si()) + ")";
    }
    eng.finish(out);
    return out;
}

// ---- global forms ----

struct LocalSet {
    long long p = 2;
    std::vector<ZLattice> reps;
    std::vector<std::string> names;
    std::string source;  // THEOREM or CENSUS
};

struct GlobalForm {
    ZLattice lattice;
    std::map<long long, std::size_t> local_choices;
    bool localization_ok = false;
};

struct GlobalFormsResult {
    int n = 0, k = 0;
    std::vector<LocalSet> locals;
    std::vector<GlobalForm> forms;
    std::size_t distinct_signatures = 0;
    bool index_multiplicative = true;
    std::string flag;  // THEOREM or CENSUS
};

inline LocalSet local_set_at(int n, int k, long long p, FormsSettings settings) {
    LocalSet ls;
    ls.p = p;
    if (p != 2) {
        ls.source = "THEOREM";
        int v = n % p == 0 ? p_valuation(static_cast<long long>(n), p) : 0;
        for (int i = 0; i <= v; ++i) {
            long d = ipow(p, i).get_si();
            ls.reps.push_back(exterior_power_lattice(craig_plesken_lattice(n, static_cast<int>(d)), k));
            ls.names.push_back("wedge" + std::to_string(k) + "(M_" + std::to_string(d) + ")");
        }
        return ls;
    }
    std::size_t r = static_cast<std::size_t>(binom(n - 1, k));
    if (k == 2 && n >= 5 && n % 2 == 1) {
        ls.source = "THEOREM";
        ls.reps = {ZLattice::standard(r, n, k), s1_lattice(n), s2_lattice(n)};
        ls.names = {"S", "S1", "S2"};
        return ls;
    }
    if (k == 2 && n >= 6 && n % 4 == 2) {
        ls.source = "THEOREM";
        auto t = t_chain(n);
        ls.reps = {ZLattice::standard(r, n, k), t[0], t[1], t[2]};
        ls.names = {"S", "T1", "T2", "T3"};
        return ls;
    }
    ls.source = "CENSUS";
    auto classes = enumerate_p_forms(n, k, 2, settings);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        ls.reps.push_back(classes[i].lattice);
        ls.names.push_back("class" + std::to_string(i));
    }
    return ls;
}

inline GlobalFormsResult global_forms(int n, int k, FormsSettings settings = {}) {
    check_feasible(n, k);
    GlobalFormsResult res;
    res.n = n;
    res.k = k;
    bool theorem = (k == 2 || k == n - 3) && n >= 5 && n % 4 != 0;
    for (long long p : primes_up_to(n)) {
        if (p != 2 && n % p != 0) continue;
        LocalSet ls = local_set_at(n, k, p, settings);
        if (ls.reps.size() > 1) res.locals.push_back(std::move(ls));
    }
    res.flag = theorem ? "THEOREM" : "CENSUS";
    std::size_t r = static_cast<std::size_t>(binom(n - 1, k));
    ZLattice S = ZLattice::standard(r, n, k);
    std::vector<std::size_t> choice(res.locals.size(), 0);
    std::set<std::vector<std::string>> signatures;
    while (true) {
        GlobalForm g;
        g.lattice = S;
        Int expected = 1;
        for (std::size_t i = 0; i < res.locals.size(); ++i) {
            auto& N = res.locals[i].reps[choice[i]];
            g.lattice = lattice_intersection(g.lattice, N);
            g.local_choices[res.locals[i].p] = choice[i];
            expected *= N.det();
        }
        if (g.lattice.det() != expected) res.index_multiplicative = false;
        g.localization_ok = true;
        std::vector<std::string> sig;
        for (std::size_t i = 0; i < res.locals.size(); ++i) {
            long long p = res.locals[i].p;
            auto& N = res.locals[i].reps[choice[i]];
            ZLattice loc = localize(g.lattice, p);
            if (p_valuation(g.lattice.det(), p) != p_valuation(N.det(), p) || loc != localize(N, p)) g.localization_ok = false;
            // class of the localization among the local representatives
            std::size_t match = res.locals[i].reps.size();
            ZLattice ln = normalize(loc, p);
            for (std::size_t j = 0; j < res.locals[i].reps.size(); ++j)
                if (normalize(localize(res.locals[i].reps[j], p), p) == ln) {
                    match = j;
                    break;
                }
            if (match != choice[i]) g.localization_ok = false;
            sig.push_back(std::to_string(p) + ":" + lattice_key(ln));
        }
        signatures.insert(sig);
        res.forms.push_back(std::move(g));
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == res.locals[i].reps.size()) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    res.distinct_signatures = signatures.size();
    return res;
}

// ---- census ----

struct CensusRecord {
    int n = 0, k = 0;
    long long p = 2;
    std::optional<std::size_t> observed;
    std::optional<long long> expected;
    std::string source;  // THEOREM, CONJECTURE or NONE
    std::string status;  // MATCH, MISMATCH, UNCHECKED or ERROR
    std::string error;
    std::vector<std::string> loewy;
    std::vector<long long> alternatives;  // other predicted values when two statements overlap
};

// Predicted number of Z_2-forms of S(k) and the strength of the prediction.
inline std::vector<std::pair<long long, std::string>> predicted_h2(int n, int k) {
    std::vector<std::pair<long long, std::string>> out;
    long long v = p_valuation(static_cast<long long>(n), 2);
    if (k == 1 || k == n - 2) out.push_back({v + 1, "THEOREM"});
    if ((k == 2 || k == n - 3) && n >= 5) {
        if (n % 2 == 1) out.push_back({3, "THEOREM"});
        else if (n % 4 == 2) out.push_back({4, "THEOREM"});
        else out.push_back({3 * v + 1, "CONJECTURE"});
    }
    if ((k == 3 || k == n - 4) && n >= 5) {
        if (n % 2 == 1) {
            if (n >= 7) out.push_back({3, "CONJECTURE"});
        } else if (n % 4 == 2) {
            out.push_back({8, "CONJECTURE"});
        } else {
            out.push_back({9 * v + 1, "CONJECTURE"});
        }
    }
    return out;
}

inline std::vector<CensusRecord> conjecture_census(int n_min, int n_max, int k_max, FormsSettings settings = {}) {
    std::vector<CensusRecord> out;
    for (int n = std::max(n_min, 3); n <= n_max; ++n)
        for (int k = 1; k <= std::min(k_max, n - 2); ++k) {
            CensusRecord rec;
            rec.n = n;
            rec.k = k;
            auto pred = predicted_h2(n, k);
            // a theorem takes precedence over an overlapping conjecture
            std::stable_sort(pred.begin(), pred.end(), [](auto& a, auto& b) { return a.second == "THEOREM" && b.second != "THEOREM"; });
            if (!pred.empty()) {
                rec.expected = pred[0].first;
                rec.source = pred[0].second;
                for (std::size_t i = 1; i < pred.size(); ++i)
                    if (pred[i].first != pred[0].first) rec.alternatives.push_back(pred[i].first);
            } else {
                rec.source = "NONE";
            }
            try {
                check_feasible(n, k);
                auto classes = enumerate_p_forms(n, k, 2, settings);
                rec.observed = classes.size();
                for (auto& c : classes) rec.loewy.push_back(loewy_string(c.loewy));
                if (rec.expected)
                    rec.status = static_cast<long long>(*rec.observed) == *rec.expected ? "MATCH" : "MISMATCH";
                else
                    rec.status = "UNCHECKED";
            } catch (const std::exception& e) {
                rec.status = "ERROR";
                rec.error = e.what();
            }
            out.push_back(std::move(rec));
        }
    return out;
}

}  // namespace specht
