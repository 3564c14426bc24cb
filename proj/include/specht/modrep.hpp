#pragma once

#include "specht/fp.hpp"
#include "specht/integer.hpp"
#include "specht/specht.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace specht {

struct HeadNotMultiplicityFreeError : Error {
    using Error::Error;
};
struct MeataxeError : Error {
    using Error::Error;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

// Built-in seed, overridden by SPECHT_FORMS_SEED when set.
inline std::uint64_t default_seed() {
    if (const char* s = std::getenv("SPECHT_FORMS_SEED")) {
        try {
            return std::stoull(s);
        } catch (...) {
        }
    }
    return kDefaultSeed;
}

struct FpModule {
    std::uint32_t p = 2;
    std::size_t dim = 0;
    std::vector<FpMatrix> gens;
};

inline FpModule reduce_mod_p(const std::vector<IntMatrix>& gens, long long p) {
    require_prime(p);
    FpModule m;
    m.p = static_cast<std::uint32_t>(p);
    m.dim = gens.empty() ? 0 : gens[0].rows();
    for (auto& g : gens) m.gens.push_back(FpMatrix::from_int(g, m.p));
    return m;
}

inline FpModule dual_module(const FpModule& V) {
    FpModule d{V.p, V.dim, {}};
    for (auto& g : V.gens) d.gens.push_back(fp_inverse(g).transpose());
    return d;
}

// Action on a subspace U (closed under the generators), in the echelon basis of U.
inline FpModule submodule(const FpModule& V, const Subspace& U) {
    FpModule s{V.p, U.dim(), {}};
    for (auto& g : V.gens) {
        FpMatrix a(V.p, U.dim(), U.dim());
        for (std::size_t i = 0; i < U.dim(); ++i) {
            FpVec w = vec_mul(U.basis()[i], g);
            if (!U.contains(w)) throw Error("subspace is not a submodule");
            a.set_row(i, U.coordinates(w));
        }
        s.gens.push_back(std::move(a));
    }
    return s;
}

// Columns of F_p^d outside the pivots of U index a basis of V/U.
inline std::vector<std::size_t> quotient_columns(const Subspace& U) {
    std::vector<bool> piv(U.ambient(), false);
    for (auto j : U.pivots()) piv[j] = true;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < U.ambient(); ++j)
        if (!piv[j]) cols.push_back(j);
    return cols;
}

inline FpModule quotient(const FpModule& V, const Subspace& U) {
    auto cols = quotient_columns(U);
    FpModule q{V.p, cols.size(), {}};
    for (auto& g : V.gens) {
        FpMatrix a(V.p, cols.size(), cols.size());
        for (std::size_t i = 0; i < cols.size(); ++i) {
            FpVec w = U.reduce(g.row(cols[i]));
            for (std::size_t j = 0; j < cols.size(); ++j) a(i, j) = w[cols[j]];
        }
        q.gens.push_back(std::move(a));
    }
    return q;
}

// Element of the group algebra: sum of coeff * word, minus lambda. Words are built as
// products of earlier pool entries, the first pool entries being the generators.
struct AlgebraElement {
    std::vector<std::pair<int, int>> products;
    std::vector<std::pair<std::uint32_t, int>> terms;
    std::uint32_t lambda = 0;

    FpMatrix evaluate(const FpModule& V) const {
        std::vector<FpMatrix> pool = V.gens;
        int need = -1;
        for (auto& t : terms) need = std::max(need, t.second);
        for (std::size_t i = 0; static_cast<int>(pool.size()) <= need && i < products.size(); ++i)
            pool.push_back(pool[products[i].first] * pool[products[i].second]);
        FpMatrix m(V.p, V.dim, V.dim);
        for (auto& [c, idx] : terms) m = m.axpy(c, pool[idx]);
        if (lambda)
            for (std::size_t i = 0; i < V.dim; ++i) m(i, i) = static_cast<std::uint32_t>((m(i, i) + V.p - lambda) % V.p);
        return m;
    }
};

// Seeded source of random algebra elements.
class Meataxe {
public:
    Meataxe(std::uint32_t p, std::size_t ngens, std::uint64_t seed) : p_(p), ngens_(ngens), rng_(seed) {}

    AlgebraElement next() {
        std::size_t pool = ngens_ + products_.size();
        std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
        products_.push_back({static_cast<int>(pick(rng_)), static_cast<int>(pick(rng_))});
        ++pool;
        AlgebraElement e;
        e.products = products_;
        std::uniform_int_distribution<std::size_t> pick2(0, pool - 1);
        std::uniform_int_distribution<std::uint32_t> coef(1, p_ - 1);
        std::size_t nterms = 2 + rng_() % 3;
        std::vector<int> used;
        for (std::size_t t = 0; t < nterms; ++t) {
            int idx = static_cast<int>(pick2(rng_));
            if (std::find(used.begin(), used.end(), idx) != used.end()) continue;
            used.push_back(idx);
            e.terms.push_back({p_ == 2 ? 1u : coef(rng_), idx});
        }
        // always include the newest product so successive elements differ
        if (std::find(used.begin(), used.end(), static_cast<int>(pool - 1)) == used.end())
            e.terms.push_back({1u, static_cast<int>(pool - 1)});
        return e;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::uint32_t p_;
    std::size_t ngens_;
    std::mt19937_64 rng_;
    std::vector<std::pair<int, int>> products_;
};

// Absolutely simple module with a Norton certificate: theta has a one-dimensional
// left kernel spanned by tree.basis[0], which spins up to the whole module.
struct SimpleModule {
    FpModule mod;
    AlgebraElement theta;
    SpinTree tree;
    FpMatrix spin_inverse;       // inverse of the matrix with rows tree.basis
    std::vector<FpMatrix> spin_action;  // generator action in the spin basis
    std::vector<std::uint32_t> scalars;  // for dim 1: the generator eigenvalues
};

inline SimpleModule make_simple(const FpModule& V, const AlgebraElement& theta, const FpVec& v) {
    SimpleModule s;
    s.mod = V;
    s.theta = theta;
    s.tree = spin_tree(v, V.gens, V.dim, V.p);
    if (s.tree.basis.size() != V.dim) throw MeataxeError("certificate vector does not spin");
    FpMatrix S = FpMatrix::from_rows(V.p, s.tree.basis, V.dim);
    s.spin_inverse = fp_inverse(S);
    for (auto& g : V.gens) s.spin_action.push_back(S * g * s.spin_inverse);
    if (V.dim == 1)
        for (auto& g : V.gens) s.scalars.push_back(g(0, 0));
    return s;
}

struct SplitResult {
    std::optional<Subspace> submodule;  // proper nonzero submodule, or
    std::optional<SimpleModule> simple;  // certificate of absolute irreducibility
};

inline SplitResult find_split(const FpModule& V, Meataxe& mx) {
    if (V.dim == 0) throw std::invalid_argument("zero module");
    if (V.dim == 1) {
        AlgebraElement zero;
        FpVec v{1};
        return {std::nullopt, make_simple(V, zero, v)};
    }
    std::vector<FpMatrix> gt;
    for (auto& g : V.gens) gt.push_back(g.transpose());
    for (int attempt = 0; attempt < 400; ++attempt) {
        AlgebraElement e = mx.next();
        FpMatrix M = e.evaluate(V);
        std::vector<std::uint32_t> lambdas;
        if (V.p <= 64) {
            for (std::uint32_t l = 0; l < V.p; ++l) lambdas.push_back(l);
        } else {
            lambdas.push_back(0);
        }
        for (auto l : lambdas) {
            FpMatrix theta = M;
            for (std::size_t i = 0; i < V.dim; ++i) theta(i, i) = static_cast<std::uint32_t>((theta(i, i) + V.p - l) % V.p);
            Subspace K = left_nullspace(theta);
            if (K.dim() == 0) continue;
            for (std::size_t i = 0; i < std::min<std::size_t>(K.dim(), 3); ++i) {
                Subspace U = spin({K.basis()[i]}, V.gens, V.dim, V.p);
                if (U.dim() < V.dim) return {U, std::nullopt};
            }
            Subspace Kt = right_nullspace(theta);
            Subspace W = spin({Kt.basis()[0]}, gt, V.dim, V.p);
            if (W.dim() < V.dim) return {W.annihilator(), std::nullopt};
            if (K.dim() == 1) {
                AlgebraElement cert = e;
                cert.lambda = l;
                return {std::nullopt, make_simple(V, cert, K.basis()[0])};
            }
        }
    }
    throw MeataxeError("meataxe did not converge (module not absolutely irreducible?)");
}

inline std::vector<SimpleModule> composition_factor_modules(const FpModule& V, Meataxe& mx) {
    std::vector<SimpleModule> out;
    std::vector<FpModule> stack{V};
    while (!stack.empty()) {
        FpModule M = std::move(stack.back());
        stack.pop_back();
        if (M.dim == 0) continue;
        auto r = find_split(M, mx);
        if (r.simple) {
            out.push_back(std::move(*r.simple));
        } else {
            // quotient pushed first so the submodule is processed first
            stack.push_back(quotient(M, *r.submodule));
            stack.push_back(submodule(M, *r.submodule));
        }
    }
    return out;
}

// Basis of Hom(D, W) for D simple; each hom is a dim(D) x dim(W) matrix Phi with D_g Phi = Phi W_g.
inline std::vector<FpMatrix> hom_from_simple(const SimpleModule& D, const FpModule& W) {
    if (D.mod.p != W.p || D.mod.gens.size() != W.gens.size()) throw std::invalid_argument("modules over different algebras");
    std::uint32_t p = W.p;
    std::size_t dd = D.mod.dim, dw = W.dim;
    std::vector<FpMatrix> out;
    if (dd == 1) {
        // common eigenvectors x W_g = c_g x
        Subspace acc(p, dw);
        for (std::size_t i = 0; i < dw; ++i) {
            FpVec e(dw, 0);
            e[i] = 1;
            acc.add(e);
        }
        for (std::size_t g = 0; g < W.gens.size(); ++g) {
            FpMatrix m = W.gens[g];
            for (std::size_t i = 0; i < dw; ++i) m(i, i) = static_cast<std::uint32_t>((m(i, i) + p - D.scalars[g]) % p);
            acc = acc.intersect(left_nullspace(m));
            if (acc.dim() == 0) break;
        }
        for (auto& v : acc.basis()) out.push_back(FpMatrix::from_rows(p, {v}, dw));
        return out;
    }
    FpMatrix theta = D.theta.evaluate(W);
    Subspace K = left_nullspace(theta);
    std::size_t m = K.dim();
    if (m == 0) return out;
    // candidate images of the spin basis
    std::vector<std::vector<FpVec>> imgs(m);
    for (std::size_t j = 0; j < m; ++j) {
        imgs[j].resize(dd);
        imgs[j][0] = K.basis()[j];
        for (std::size_t i = 1; i < dd; ++i) imgs[j][i] = vec_mul(imgs[j][D.tree.parent[i]], W.gens[D.tree.gen[i]]);
    }
    // tree edges hold by construction
    std::vector<std::vector<bool>> tree_edge(dd, std::vector<bool>(W.gens.size(), false));
    for (std::size_t i = 1; i < dd; ++i) tree_edge[D.tree.parent[i]][D.tree.gen[i]] = true;
    // solution space for the coefficients c in F_p^m
    Subspace sol(p, m);
    for (std::size_t j = 0; j < m; ++j) {
        FpVec e(m, 0);
        e[j] = 1;
        sol.add(e);
    }
    for (std::size_t i = 0; i < dd && sol.dim() > 0; ++i) {
        for (std::size_t g = 0; g < W.gens.size() && sol.dim() > 0; ++g) {
            if (tree_edge[i][g]) continue;
            const FpMatrix& C = D.spin_action[g];
            // residual_j = imgs_j[i] W_g - sum_l C(i,l) imgs_j[l]
            FpMatrix R(p, m, dw);
            for (std::size_t j = 0; j < m; ++j) {
                FpVec r = vec_mul(imgs[j][i], W.gens[g]);
                for (std::size_t l = 0; l < dd; ++l) {
                    std::uint64_t c = C(i, l);
                    if (!c) continue;
                    std::uint64_t f = p - c;
                    const FpVec& v = imgs[j][l];
                    for (std::size_t t = 0; t < dw; ++t)
                        if (v[t]) r[t] = static_cast<std::uint32_t>((r[t] + f * v[t]) % p);
                }
                R.set_row(j, r);
            }
            if (R.is_zero()) continue;
            sol = sol.intersect(left_nullspace(R));
        }
    }
    for (auto& c : sol.basis()) {
        FpMatrix Phi(p, dd, dw);
        for (std::size_t i = 0; i < dd; ++i) {
            FpVec row(dw, 0);
            for (std::size_t j = 0; j < m; ++j) {
                if (!c[j]) continue;
                for (std::size_t t = 0; t < dw; ++t)
                    row[t] = static_cast<std::uint32_t>((row[t] + std::uint64_t(c[j]) * imgs[j][i][t]) % p);
            }
            Phi.set_row(i, row);
        }
        out.push_back(D.spin_inverse * Phi);
    }
    return out;
}

inline bool is_isomorphic_simple(const SimpleModule& a, const SimpleModule& b) {
    if (a.mod.dim != b.mod.dim) return false;
    return !hom_from_simple(a, b.mod).empty();
}

// Distinct isomorphism types among the composition factors, with counts and certificates
// for the dual modules (needed to compute maps onto simples).
struct TypeInfo {
    SimpleModule simple;
    SimpleModule dual;
    std::size_t multiplicity = 0;
};

inline std::vector<TypeInfo> module_types(const FpModule& V, Meataxe& mx) {
    auto factors = composition_factor_modules(V, mx);
    std::vector<TypeInfo> types;
    for (auto& f : factors) {
        bool found = false;
        for (auto& t : types)
            if (is_isomorphic_simple(t.simple, f)) {
                ++t.multiplicity;
                found = true;
                break;
            }
        if (!found) {
            auto dual = find_split(dual_module(f.mod), mx);
            if (!dual.simple) throw MeataxeError("dual of a simple module split");
            types.push_back({std::move(f), std::move(*dual.simple), 1});
        }
    }
    std::stable_sort(types.begin(), types.end(), [](const TypeInfo& a, const TypeInfo& b) { return a.simple.mod.dim < b.simple.mod.dim; });
    return types;
}

// Basis of Hom(V, D) as dim(V) x dim(D) matrices, via Hom(D^*, V^*) and transposition.
inline std::vector<FpMatrix> homs_to_simple(const FpModule& V, const FpModule& Vdual, const TypeInfo& t) {
    (void)V;
    std::vector<FpMatrix> out;
    for (auto& psi : hom_from_simple(t.dual, Vdual)) out.push_back(psi.transpose());
    return out;
}

struct RadicalInfo {
    Subspace radical;
    std::vector<std::size_t> head_multiplicity;  // per type
    std::vector<std::vector<FpMatrix>> head_maps;  // per type, basis of Hom(V, D)
};

inline RadicalInfo radical(const FpModule& V, const std::vector<TypeInfo>& types) {
    FpModule Vd = dual_module(V);
    RadicalInfo info;
    std::size_t total = 0;
    for (auto& t : types) {
        auto maps = homs_to_simple(V, Vd, t);
        info.head_multiplicity.push_back(maps.size());
        total += maps.size() * t.simple.mod.dim;
        info.head_maps.push_back(std::move(maps));
    }
    FpMatrix big(V.p, V.dim, total);
    std::size_t col = 0;
    for (auto& maps : info.head_maps)
        for (auto& m : maps) {
            for (std::size_t i = 0; i < V.dim; ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) big(i, col + j) = m(i, j);
            col += m.cols();
        }
    if (total == 0) {
        if (V.dim > 0) throw MeataxeError("module has no simple quotient among the given types");
        info.radical = Subspace(V.p, 0);
        return info;
    }
    info.radical = left_nullspace(big);
    return info;
}

inline Subspace socle(const FpModule& W, const std::vector<TypeInfo>& types) {
    Subspace s(W.p, W.dim);
    for (auto& t : types)
        for (auto& phi : hom_from_simple(t.simple, W))
            for (std::size_t i = 0; i < phi.rows(); ++i) s.add(phi.row(i));
    return s;
}

// Radical layers top-down; each layer lists type indices with multiplicity.
inline std::vector<std::vector<std::size_t>> loewy_layers(const FpModule& V, const std::vector<TypeInfo>& types) {
    std::vector<std::vector<std::size_t>> layers;
    FpModule cur = V;
    while (cur.dim > 0) {
        auto info = radical(cur, types);
        std::vector<std::size_t> layer;
        for (std::size_t t = 0; t < types.size(); ++t) layer.insert(layer.end(), info.head_multiplicity[t], t);
        if (info.radical.dim() == cur.dim) throw MeataxeError("radical did not shrink");
        layers.push_back(layer);
        cur = submodule(cur, info.radical);
    }
    return layers;
}

// ---- labels ----

struct SimpleLabel {
    std::string tag;
    std::size_t dim = 0;
    bool operator==(const SimpleLabel& o) const { return tag == o.tag && dim == o.dim; }
    bool operator<(const SimpleLabel& o) const { return tag < o.tag || (tag == o.tag && dim < o.dim); }
};

inline std::string partition_label(int a, int b) { return "D(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
inline std::string hook_label(int j) { return "D(" + std::to_string(j) + ")"; }

// Assigns labels to simple modules in the ambient (n, k, p), using reference constructions
// to separate candidates of equal dimension.
class LabelOracle {
public:
    LabelOracle(int n, int k, long long p, std::uint64_t seed = default_seed()) : n_(n), k_(k), p_(p), seed_(seed) {
        require_prime(p);
        if (p == 2) {
            if (n >= 3) add_head_reference(*build_hook_specht(n, 1), partition_label(n - 1, 1));
            if (n >= 4) add_head_reference(*build_specht(Partition({n - 2, 2})), partition_label(n - 2, 2));
        } else if (n % p == 0) {
            for (int j : {k, k + 1}) {
                if (j < 1 || j > n - 1) continue;
                if (j == 1)
                    add_trivial_reference(hook_label(1));
                else
                    add_head_reference(*build_hook_specht(n, j - 1), hook_label(j));
            }
        }
    }

    SimpleLabel label(const SimpleModule& X) {
        for (auto& [lab, ref] : refs_)
            if (lab.dim == X.mod.dim && is_isomorphic_simple(ref, X)) return lab;
        if (X.mod.dim == 1) {
            bool triv = true, sgn = true;
            for (auto& g : X.mod.gens) {
                triv = triv && g(0, 0) == 1;
                sgn = sgn && g(0, 0) == X.mod.p - 1;
            }
            if (triv) return {"TRIVIAL", 1};
            if (sgn) return {"SIGN", 1};
        }
        for (auto& [lab, ref] : others_)
            if (lab.dim == X.mod.dim && is_isomorphic_simple(ref, X)) return lab;
        std::size_t same = 0;
        for (auto& o : others_)
            if (o.first.dim == X.mod.dim) ++same;
        SimpleLabel lab{"OTHER(" + std::to_string(X.mod.dim) + (same ? "#" + std::to_string(same + 1) : "") + ")", X.mod.dim};
        others_.push_back({lab, X});
        return lab;
    }

    int n() const { return n_; }
    int k() const { return k_; }
    long long p() const { return p_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<std::pair<SimpleLabel, SimpleModule>>& references() const { return refs_; }

private:
    void add_trivial_reference(const std::string& name) {
        FpModule t{static_cast<std::uint32_t>(p_), 1, {}};
        for (int i = 1; i < n_; ++i) t.gens.push_back(FpMatrix::identity(static_cast<std::uint32_t>(p_), 1));
        AlgebraElement zero;
        refs_.push_back({{name, 1}, make_simple(t, zero, FpVec{1})});
    }
    void add_head_reference(const SpechtContext& ctx, const std::string& name) {
        FpModule V = reduce_mod_p(ctx.gens(), p_);
        Meataxe mx(static_cast<std::uint32_t>(p_), V.gens.size(), seed_);
        auto types = module_types(V, mx);
        auto info = radical(V, types);
        for (std::size_t t = 0; t < types.size(); ++t)
            if (info.head_multiplicity[t] > 0) {
                refs_.push_back({{name, types[t].simple.mod.dim}, types[t].simple});
                return;
            }
        throw MeataxeError("reference module has no head");
    }

    int n_, k_;
    long long p_;
    std::uint64_t seed_;
    std::vector<std::pair<SimpleLabel, SimpleModule>> refs_;
    std::vector<std::pair<SimpleLabel, SimpleModule>> others_;
};

// ---- module-level analysis with labels ----

struct ModuleAnalysis {
    std::vector<TypeInfo> types;
    std::vector<SimpleLabel> type_labels;
    std::vector<SimpleLabel> composition;           // sorted multiset
    std::vector<std::vector<SimpleLabel>> loewy;    // layers top-down, each sorted
};

inline ModuleAnalysis analyze_module(const FpModule& V, LabelOracle& oracle, std::uint64_t seed) {
    ModuleAnalysis a;
    Meataxe mx(V.p, V.gens.size(), seed);
    a.types = module_types(V, mx);
    for (auto& t : a.types) {
        SimpleLabel l = oracle.label(t.simple);
        a.type_labels.push_back(l);
        a.composition.insert(a.composition.end(), t.multiplicity, l);
    }
    std::sort(a.composition.begin(), a.composition.end());
    for (auto& layer : loewy_layers(V, a.types)) {
        std::vector<SimpleLabel> ls;
        for (auto t : layer) ls.push_back(a.type_labels[t]);
        std::sort(ls.begin(), ls.end());
        a.loewy.push_back(ls);
    }
    return a;
}

inline std::vector<SimpleLabel> composition_factors(const FpModule& V, LabelOracle& oracle, std::uint64_t seed) {
    return analyze_module(V, oracle, seed).composition;
}

inline std::vector<std::vector<SimpleLabel>> loewy_series(const FpModule& V, LabelOracle& oracle, std::uint64_t seed) {
    return analyze_module(V, oracle, seed).loewy;
}

struct HeadQuotient {
    SimpleLabel label;
    std::size_t type = 0;
    FpMatrix projection;  // dim(V) x dim(D)
};

inline std::vector<HeadQuotient> head_simple_quotients(const FpModule& V, const std::vector<TypeInfo>& types,
                                                       const std::vector<SimpleLabel>& labels) {
    auto info = radical(V, types);
    std::vector<HeadQuotient> out;
    for (std::size_t t = 0; t < types.size(); ++t) {
        if (info.head_multiplicity[t] > 1) throw HeadNotMultiplicityFreeError("head not multiplicity-free: " + labels[t].tag);
        if (info.head_multiplicity[t] == 1) out.push_back({labels[t], t, info.head_maps[t][0]});
    }
    return out;
}

inline std::vector<HeadQuotient> head_simple_quotients(const FpModule& V, LabelOracle& oracle, std::uint64_t seed) {
    auto a = analyze_module(V, oracle, seed);
    return head_simple_quotients(V, a.types, a.type_labels);
}

// Isomorphism of arbitrary modules: equal composition types, then a random element of
// Hom(V, W) that is invertible. Hom(V, W) is computed from a cyclic generator of V when one
// is found; otherwise the test falls back to comparing structure layer by layer.
inline bool is_isomorphic(const FpModule& V, const FpModule& W, std::uint64_t seed = default_seed()) {
    if (V.p != W.p || V.dim != W.dim || V.gens.size() != W.gens.size()) return false;
    if (V.dim == 0) return true;
    Meataxe mx(V.p, V.gens.size(), seed);
    auto sv = find_split(V, mx);
    if (sv.simple) {
        auto sw = find_split(W, mx);
        if (!sw.simple) return false;
        return !hom_from_simple(*sv.simple, W).empty();
    }
    // general case: solve X with V_g X = X W_g by spinning a cyclic vector of V
    std::uint32_t p = V.p;
    std::size_t d = V.dim;
    SpinTree tree;
    for (std::size_t i = 0; i < d && tree.basis.size() < d; ++i) {
        FpVec e(d, 0);
        e[i] = 1;
        tree = spin_tree(e, V.gens, d, p);
    }
    for (int attempt = 0; attempt < 20 && tree.basis.size() < d; ++attempt) {
        FpVec v(d);
        for (auto& x : v) x = static_cast<std::uint32_t>(mx.rng()() % p);
        tree = spin_tree(v, V.gens, d, p);
    }
    if (tree.basis.size() < d) {
        // not cyclic: compare radical layers of both sides and their composition types
        auto tv = module_types(V, mx);
        auto tw = module_types(W, mx);
        if (tv.size() != tw.size()) return false;
        for (std::size_t i = 0; i < tv.size(); ++i)
            if (tv[i].multiplicity != tw[i].multiplicity || !is_isomorphic_simple(tv[i].simple, tw[i].simple)) return false;
        throw MeataxeError("isomorphism test for non-cyclic modules with equal composition factors is not supported");
    }
    FpMatrix S = FpMatrix::from_rows(p, tree.basis, d);
    FpMatrix Si = fp_inverse(S);
    std::vector<FpMatrix> C;
    for (auto& g : V.gens) C.push_back(S * g * Si);
    // images of the spin basis for u = e_j
    std::vector<std::vector<FpVec>> imgs(d);
    for (std::size_t j = 0; j < d; ++j) {
        imgs[j].resize(d);
        imgs[j][0].assign(d, 0);
        imgs[j][0][j] = 1;
        for (std::size_t i = 1; i < d; ++i) imgs[j][i] = vec_mul(imgs[j][tree.parent[i]], W.gens[tree.gen[i]]);
    }
    Subspace sol(p, d);
    for (std::size_t j = 0; j < d; ++j) {
        FpVec e(d, 0);
        e[j] = 1;
        sol.add(e);
    }
    for (std::size_t i = 0; i < d && sol.dim() > 0; ++i)
        for (std::size_t g = 0; g < V.gens.size() && sol.dim() > 0; ++g) {
            FpMatrix R(p, d, d);
            for (std::size_t j = 0; j < d; ++j) {
                FpVec r = vec_mul(imgs[j][i], W.gens[g]);
                for (std::size_t l = 0; l < d; ++l) {
                    std::uint64_t c = C[g](i, l);
                    if (!c) continue;
                    for (std::size_t t = 0; t < d; ++t)
                        if (imgs[j][l][t]) r[t] = static_cast<std::uint32_t>((r[t] + (p - c) * imgs[j][l][t]) % p);
                }
                R.set_row(j, r);
            }
            if (!R.is_zero()) sol = sol.intersect(left_nullspace(R));
        }
    if (sol.dim() == 0) return false;
    auto build = [&](const FpVec& c) {
        FpMatrix Phi(p, d, d);
        for (std::size_t i = 0; i < d; ++i) {
            FpVec row(d, 0);
            for (std::size_t j = 0; j < d; ++j)
                if (c[j])
                    for (std::size_t t = 0; t < d; ++t) row[t] = static_cast<std::uint32_t>((row[t] + std::uint64_t(c[j]) * imgs[j][i][t]) % p);
            Phi.set_row(i, row);
        }
        return Si * Phi;
    };
    for (int attempt = 0; attempt < 40; ++attempt) {
        FpVec c(d, 0);
        for (auto& b : sol.basis()) {
            std::uint64_t a = mx.rng()() % p;
            for (std::size_t j = 0; j < d; ++j) c[j] = static_cast<std::uint32_t>((c[j] + a * b[j]) % p);
        }
        if (rank(build(c)) == d) return true;
    }
    return false;
}

}  // namespace specht
