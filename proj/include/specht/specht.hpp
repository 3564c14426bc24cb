#pragma once

#include "specht/combinatorics.hpp"
#include "specht/integer.hpp"
#include "specht/linalg.hpp"
#include "specht/matrix.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>
#include <vector>

namespace specht {

// S^lambda over Z in its standard polytabloid basis.
// Generators are the adjacent transpositions (i, i+1), i = 1..n-1; gens[i-1] has as row t
// the coordinates of (i, i+1) * e_t (row-vector convention: x -> x * A).
class SpechtContext {
public:
    using SparseRow = std::vector<std::pair<std::size_t, int>>;

    explicit SpechtContext(Partition lambda) : lambda_(std::move(lambda)), n_(lambda_.n()) {
        tabloids_ = enumerate_tabloids(lambda_);
        for (std::size_t i = 0; i < tabloids_.size(); ++i) {
            codes_.push_back(code(tabloids_[i]));
            code_index_[codes_.back()] = i;
        }
        tableaux_ = enumerate_standard_tableaux(lambda_);
        for (auto& t : tableaux_) polytabloids_.push_back(polytabloid(t));
        for (auto& t : tableaux_) std_cols_.push_back(code_index_.at(code(t.tabloid())));
        build_std_inverse();
        for (int i = 1; i < n_; ++i) {
            auto g = Permutation::transposition(n_, i, i + 1);
            IntMatrix A(rank(), rank());
            for (std::size_t t = 0; t < rank(); ++t) A.set_row(t, polytabloid_coordinates(act(g, polytabloids_[t])));
            gens_.push_back(A);
            sparse_gens_.push_back(SparseMatrix::from_dense(A));
        }
    }

    int n() const { return n_; }
    const Partition& shape() const { return lambda_; }
    std::size_t rank() const { return tableaux_.size(); }
    std::size_t num_tabloids() const { return tabloids_.size(); }
    const std::vector<Tabloid>& tabloids() const { return tabloids_; }
    const std::vector<StandardTableau>& tableaux() const { return tableaux_; }
    const std::vector<IntMatrix>& gens() const { return gens_; }
    const std::vector<SparseMatrix>& sparse_gens() const { return sparse_gens_; }
    const std::vector<SparseRow>& polytabloids() const { return polytabloids_; }

    // -1 when the shape is not a hook
    int hook_leg() const {
        for (std::size_t i = 1; i < lambda_.length(); ++i)
            if (lambda_[i] != 1) return -1;
        return static_cast<int>(lambda_.length()) - 1;
    }

    // Polytabloid-in-tabloid matrix B.
    IntMatrix polytabloid_matrix() const {
        IntMatrix B(rank(), num_tabloids());
        for (std::size_t i = 0; i < rank(); ++i)
            for (auto [j, c] : polytabloids_[i]) B(i, j) = c;
        return B;
    }

    std::size_t tabloid_index(const Tabloid& t) const { return code_index_.at(code(t)); }

    // e_t = sum over the column stabilizer of sgn(pi) {pi t}
    SparseRow polytabloid(const StandardTableau& t) const {
        std::unordered_map<std::size_t, int> acc;
        auto base = t.tabloid();
        for_each_column_permutation(t, [&](const Permutation& pi) { acc[code_index_.at(code(act_on_tabloid(pi, base)))] += pi.sign(); });
        SparseRow out;
        for (auto [j, c] : acc)
            if (c) out.push_back({j, c});
        std::sort(out.begin(), out.end());
        return out;
    }

    // sigma applied to a vector in tabloid coordinates
    SparseRow act(const Permutation& sigma, const SparseRow& v) const {
        SparseRow out;
        for (auto [j, c] : v) out.push_back({act_index(sigma, j), c});
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t act_index(const Permutation& sigma, std::size_t j) const {
        std::uint64_t c = codes_of_index(j), r = 0;
        for (int x = 1; x <= n_; ++x) {
            std::uint64_t row = (c >> (4 * (x - 1))) & 15u;
            r |= row << (4 * (sigma(x) - 1));
        }
        return code_index_.at(r);
    }

    // Standard-basis coordinates of a tabloid-coordinate vector lying in S^lambda.
    template <typename Vec>
    std::vector<Int> polytabloid_coordinates(const Vec& y) const {
        std::vector<Int> dense(num_tabloids());
        for (auto [j, c] : y) dense[j] += c;
        return polytabloid_coordinates_dense(dense);
    }

    std::vector<Int> polytabloid_coordinates_dense(const std::vector<Int>& y) const {
        std::vector<Int> ys(rank());
        for (std::size_t i = 0; i < rank(); ++i) ys[i] = y[std_cols_[i]];
        std::vector<Int> x = std_identity_ ? ys : vec_mul(ys, std_inverse_);
        std::vector<Int> check(num_tabloids());
        for (std::size_t i = 0; i < rank(); ++i) {
            if (x[i] == 0) continue;
            for (auto [j, c] : polytabloids_[i]) check[j] += x[i] * c;
        }
        if (check != y) throw Error("vector is not in the Specht lattice");
        return x;
    }

    std::vector<Int> tabloid_coordinates(const std::vector<Int>& x) const {
        std::vector<Int> y(num_tabloids());
        for (std::size_t i = 0; i < rank(); ++i) {
            if (x[i] == 0) continue;
            for (auto [j, c] : polytabloids_[i]) y[j] += x[i] * c;
        }
        return y;
    }

    // B restricted to the columns of the standard tabloids; unitriangular up to ordering.
    bool standard_block_is_identity() const { return std_identity_; }

private:
    std::uint64_t code(const Tabloid& t) const {
        std::uint64_t c = 0;
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            for (int x : t.rows[r]) c |= std::uint64_t(r) << (4 * (x - 1));
        return c;
    }
    std::uint64_t codes_of_index(std::size_t j) const { return codes_[j]; }

    void build_std_inverse() {
        RatMatrix Bs(rank(), rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            std::unordered_map<std::size_t, int> row(polytabloids_[i].begin(), polytabloids_[i].end());
            for (std::size_t l = 0; l < rank(); ++l) {
                auto it = row.find(std_cols_[l]);
                if (it != row.end()) Bs(i, l) = it->second;
            }
        }
        std_identity_ = true;
        for (std::size_t i = 0; i < rank() && std_identity_; ++i)
            for (std::size_t l = 0; l < rank(); ++l)
                if (Bs(i, l) != (i == l ? 1 : 0)) {
                    std_identity_ = false;
                    break;
                }
        if (std_identity_) return;
        RatMatrix inv = rational_inverse(Bs);
        std_inverse_ = IntMatrix(rank(), rank());
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t l = 0; l < rank(); ++l) {
                if (inv(i, l).get_den() != 1) throw Error("standard block not unimodular");
                std_inverse_(i, l) = inv(i, l).get_num();
            }
    }

    Partition lambda_;
    int n_;
    std::vector<Tabloid> tabloids_;
    std::vector<std::uint64_t> codes_;
    std::unordered_map<std::uint64_t, std::size_t> code_index_;
    std::vector<StandardTableau> tableaux_;
    std::vector<SparseRow> polytabloids_;
    std::vector<std::size_t> std_cols_;
    bool std_identity_ = true;
    IntMatrix std_inverse_;
    std::vector<IntMatrix> gens_;
    std::vector<SparseMatrix> sparse_gens_;
};

using SpechtPtr = std::shared_ptr<const SpechtContext>;

inline SpechtPtr build_specht(const Partition& lambda) {
    if (lambda.n() > 16) throw std::invalid_argument("n > 16 not supported");
    return std::make_shared<const SpechtContext>(lambda);
}

// Hook (n-k, 1^k); basis index order = k-subsets {i_1 < ... < i_k} of {2..n} in lex order.
inline SpechtPtr build_hook_specht(int n, int k) {
    if (n < 2) throw std::invalid_argument("hook Specht module needs n >= 2");
    if (k < 0 || k > n - 1) throw std::invalid_argument("hook leg k out of range");
    return build_specht(Partition::hook(n, k));
}

// k-subsets of {2..n}, aligned with the hook basis
inline std::vector<std::vector<int>> hook_basis_labels(int n, int k) { return combinations(2, n, k); }

inline std::size_t hook_basis_index(int n, const std::vector<int>& subset) {
    auto labels = hook_basis_labels(n, static_cast<int>(subset.size()));
    auto it = std::lower_bound(labels.begin(), labels.end(), subset);
    if (it == labels.end() || *it != subset) throw std::invalid_argument("not a hook basis label");
    return static_cast<std::size_t>(it - labels.begin());
}

// k-th compound: entry (I, J) = det A[I, J], subsets in lex order.
inline IntMatrix compound_matrix(const IntMatrix& A, int k) {
    auto R = combinations(0, static_cast<int>(A.rows()) - 1, k);
    auto C = combinations(0, static_cast<int>(A.cols()) - 1, k);
    IntMatrix out(R.size(), C.size());
    IntMatrix sub(k, k);
    for (std::size_t I = 0; I < R.size(); ++I) {
        // skip rows of the compound that are structurally zero
        bool zero_row = false;
        for (int r : R[I]) {
            bool any = false;
            for (std::size_t j = 0; j < A.cols() && !any; ++j) any = A(r, j) != 0;
            if (!any) zero_row = true;
        }
        if (zero_row) continue;
        for (std::size_t J = 0; J < C.size(); ++J) {
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) sub(a, b) = A(R[I][a], C[J][b]);
            if (k == 1)
                out(I, J) = sub(0, 0);
            else if (k == 2)
                out(I, J) = sub(0, 0) * sub(1, 1) - sub(0, 1) * sub(1, 0);
            else
                out(I, J) = determinant(sub);
        }
    }
    return out;
}

inline std::vector<IntMatrix> exterior_power_action(const SpechtContext& ctx1, int k) {
    if (k < 1 || k > static_cast<int>(ctx1.rank())) throw std::invalid_argument("exterior power degree out of range");
    std::vector<IntMatrix> out;
    for (auto& g : ctx1.gens()) out.push_back(compound_matrix(g, k));
    return out;
}

// Lattice spanned by the k-fold wedges of N's basis rows, in S(k) coordinates.
inline ZLattice exterior_power_lattice(const ZLattice& N, int k) {
    if (N.k() != 1) throw std::invalid_argument("exterior_power_lattice expects a lattice in S(1) coordinates");
    IntMatrix C = compound_matrix(N.basis(), k);
    Int e = N.exponent();
    Int D = ipow(e, static_cast<unsigned long>(k));
    return ZLattice::from_generators_mod(C.to_rows(), C.rows(), D, N.n(), k);
}

struct BilinearForm {
    IntMatrix gram;
};

inline BilinearForm gram_form(const SpechtContext& ctx) {
    std::vector<std::vector<std::pair<std::size_t, int>>> by_tabloid(ctx.num_tabloids());
    for (std::size_t i = 0; i < ctx.rank(); ++i)
        for (auto [j, c] : ctx.polytabloids()[i]) by_tabloid[j].push_back({i, c});
    IntMatrix G(ctx.rank(), ctx.rank());
    for (auto& col : by_tabloid)
        for (auto [a, ca] : col)
            for (auto [b, cb] : col) G(a, b) += ca * cb;
    return {G};
}

// p-part of the dual lattice, realised inside S: {x : x * G * B_L^T ≡ 0 mod p^e} with e large
// enough, then divided by p as long as it stays inside S. At primes other than p it agrees with S.
inline ZLattice dual_form(const ZLattice& L, const BilinearForm& form, long long p) {
    require_prime(p);
    std::size_t r = L.rank();
    IntMatrix C = form.gram * L.basis().transpose();
    Int dg = determinant(form.gram);
    if (dg == 0) throw Error("degenerate bilinear form");
    int e = p_valuation(L.det(), p) + p_valuation(dg, p);
    Int D = ipow(p, static_cast<unsigned long>(std::max(e, 1)));
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Int> v(2 * r);
        for (std::size_t j = 0; j < r; ++j) v[j] = C(i, j);
        v[r + i] = 1;
        rows.push_back(std::move(v));
    }
    IntMatrix H = hnf_mod(rows, 2 * r, D);
    IntMatrix K(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) K(i, j) = H(r + i, r + j);
    ZLattice N(K, L.n(), L.k());
    Int P = static_cast<long>(p);
    while (true) {
        bool div = true;
        for (std::size_t i = 0; i < r && div; ++i)
            for (std::size_t j = i; j < r && div; ++j) div = divides(P, N.basis()(i, j));
        if (!div) break;
        N = N.divided(P);
    }
    return N;
}

inline ZLattice dual_form(const ZLattice& L, const SpechtContext& ctx, long long p) { return dual_form(L, gram_form(ctx), p); }

// Matrix of phi: (S^lambda)^* -> S^lambda; row t = phi(e_t^*) in polytabloid coordinates,
// where e_t^* is the basis dual to the standard polytabloids. phi({s}^*) = sum_{sigma in R_s} e_{sigma s}.
inline IntMatrix wildon_embedding(const SpechtContext& ctx) {
    if (ctx.n() > 10) throw std::invalid_argument("wildon_embedding limited to n <= 10");
    std::size_t r = ctx.rank();
    // phi on the functionals {s}^* restricted to S
    IntMatrix Phi_s(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const auto& s = ctx.tableaux()[i];
        const auto& es = ctx.polytabloids()[i];
        std::vector<Int> acc(ctx.num_tabloids());
        std::vector<long long> acc_small(ctx.num_tabloids(), 0);
        for_each_row_permutation(s, [&](const Permutation& sigma) {
            for (auto [j, c] : es) acc_small[ctx.act_index(sigma, j)] += c;
        });
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = static_cast<long>(acc_small[j]);
        Phi_s.set_row(i, ctx.polytabloid_coordinates_dense(acc));
    }
    // {s}^*|_S = sum_t B[t][{s}] e_t^*, i.e. E = (standard block of B)^T; convert to the e^* basis
    if (ctx.standard_block_is_identity()) return Phi_s;
    RatMatrix E(r, r);
    IntMatrix B = ctx.polytabloid_matrix();
    for (std::size_t s = 0; s < r; ++s) {
        std::size_t col = ctx.tabloid_index(ctx.tableaux()[s].tabloid());
        for (std::size_t t = 0; t < r; ++t) E(s, t) = B(t, col);
    }
    RatMatrix Ei = rational_inverse(E);
    IntMatrix out(r, r);
    RatMatrix Pr = to_rational(Phi_s);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            Rat v = 0;
            for (std::size_t c = 0; c < r; ++c) v += Ei(a, c) * Pr(c, b);
            if (v.get_den() != 1) throw Error("non-integral dual basis change");
            out(a, b) = v.get_num();
        }
    return out;
}

inline IntMatrix wildon_embedding(const Partition& lambda) { return wildon_embedding(*build_specht(lambda)); }

// Dual action on the e^* basis: (A_{g^{-1}})^T; generators are involutions.
inline std::vector<IntMatrix> dual_action(const SpechtContext& ctx) {
    std::vector<IntMatrix> out;
    for (auto& g : ctx.gens()) out.push_back(g.transpose());
    return out;
}

inline std::vector<IntMatrix> sign_twist(const std::vector<IntMatrix>& gens) {
    std::vector<IntMatrix> out;
    for (auto& g : gens) out.push_back(g * Int(-1));
    return out;
}

inline std::vector<IntMatrix> sign_twist(const SpechtContext& ctx) { return sign_twist(ctx.gens()); }

}  // namespace specht
