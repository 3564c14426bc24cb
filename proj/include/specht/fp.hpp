#pragma once

#include "specht/integer.hpp"
#include "specht/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace specht {

using FpVec = std::vector<std::uint32_t>;

// Dense matrix over F_p, p < 2^31.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FpMatrix identity(std::uint32_t p, std::size_t n) {
        FpMatrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static FpMatrix from_int(const IntMatrix& m, std::uint32_t p) {
        FpMatrix r(p, m.rows(), m.cols());
        Int P = static_cast<unsigned long>(p);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<std::uint32_t>(floor_mod(m(i, j), P).get_ui());
        return r;
    }
    static FpMatrix from_rows(std::uint32_t p, const std::vector<FpVec>& rows, std::size_t cols) {
        FpMatrix m(p, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::uint32_t* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }
    FpVec row(std::size_t i) const { return FpVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    void set_row(std::size_t i, const FpVec& v) { std::copy(v.begin(), v.end(), a_.begin() + i * cols_); }

    bool operator==(const FpMatrix& o) const { return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const FpMatrix& o) const { return !(*this == o); }
    bool is_zero() const {
        for (auto x : a_)
            if (x) return false;
        return true;
    }

    FpMatrix transpose() const {
        FpMatrix t(p_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    FpMatrix operator*(const FpMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("FpMatrix product: dimension mismatch");
        FpMatrix r(p_, rows_, o.cols_);
        const std::uint64_t P = p_;
        const std::uint64_t bound = ~std::uint64_t(0) - (P - 1) * (P - 1);
        std::vector<std::uint64_t> acc(o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            const std::uint32_t* ai = row_ptr(i);
            for (std::size_t l = 0; l < cols_; ++l) {
                std::uint64_t x = ai[l];
                if (!x) continue;
                const std::uint32_t* bl = o.row_ptr(l);
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    std::uint64_t v = acc[j] + x * bl[j];
                    acc[j] = v >= bound ? v % P : v;
                }
            }
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = static_cast<std::uint32_t>(acc[j] % P);
        }
        return r;
    }

    FpMatrix operator+(const FpMatrix& o) const {
        FpMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = static_cast<std::uint32_t>((std::uint64_t(a_[i]) + o.a_[i]) % p_);
        return r;
    }

    // this + c * o
    FpMatrix axpy(std::uint32_t c, const FpMatrix& o) const {
        FpMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i)
            r.a_[i] = static_cast<std::uint32_t>((std::uint64_t(a_[i]) + std::uint64_t(c) * o.a_[i]) % p_);
        return r;
    }

    FpMatrix scaled(std::uint32_t c) const {
        FpMatrix r = *this;
        for (auto& x : r.a_) x = static_cast<std::uint32_t>(std::uint64_t(x) * c % p_);
        return r;
    }

    IntMatrix to_int() const {
        IntMatrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = static_cast<unsigned long>((*this)(i, j));
        return m;
    }

private:
    std::uint32_t p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    // Fermat
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// v * M
inline FpVec vec_mul(const FpVec& v, const FpMatrix& m) {
    if (m.p() == 2) {
        FpVec out(m.cols(), 0);
        for (std::size_t l = 0; l < m.rows(); ++l) {
            if (!v[l]) continue;
            const std::uint32_t* bl = m.row_ptr(l);
            for (std::size_t j = 0; j < m.cols(); ++j) out[j] ^= bl[j];
        }
        return out;
    }
    const std::uint64_t P = m.p();
    const std::uint64_t bound = ~std::uint64_t(0) - (P - 1) * (P - 1);
    std::vector<std::uint64_t> acc(m.cols(), 0);
    for (std::size_t l = 0; l < m.rows(); ++l) {
        std::uint64_t x = v[l];
        if (!x) continue;
        const std::uint32_t* bl = m.row_ptr(l);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::uint64_t t = acc[j] + x * bl[j];
            acc[j] = t >= bound ? t % P : t;
        }
    }
    FpVec out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = static_cast<std::uint32_t>(acc[j] % P);
    return out;
}

inline bool is_zero(const FpVec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

// Subspace of F_p^d kept in reduced row echelon form.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::uint32_t p, std::size_t d) : p_(p), d_(d) {}

    std::uint32_t p() const { return p_; }
    std::size_t ambient() const { return d_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<FpVec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    // Reduce v against the basis; returns the residue (zero iff v is in the span).
    FpVec reduce(FpVec v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::uint32_t c = v[piv_[i]];
            if (!c) continue;
            const FpVec& r = rows_[i];
            if (p_ == 2) {
                for (std::size_t j = 0; j < d_; ++j) v[j] ^= r[j];
                continue;
            }
            std::uint64_t f = p_ - c;
            for (std::size_t j = 0; j < d_; ++j)
                if (r[j]) v[j] = static_cast<std::uint32_t>((v[j] + f * r[j]) % p_);
        }
        return v;
    }
    bool contains(const FpVec& v) const { return is_zero(reduce(v)); }

    // Coordinates of v (assumed in the span) with respect to basis().
    FpVec coordinates(const FpVec& v) const {
        FpVec c(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
        return c;
    }

    bool add(const FpVec& v) {
        FpVec r = reduce(v);
        std::size_t j = 0;
        while (j < d_ && !r[j]) ++j;
        if (j == d_) return false;
        std::uint64_t inv = fp_inv(r[j], p_);
        for (auto& x : r) x = static_cast<std::uint32_t>(x * inv % p_);
        // clear column j in the existing rows
        for (auto& row : rows_) {
            std::uint32_t c = row[j];
            if (!c) continue;
            if (p_ == 2) {
                for (std::size_t l = 0; l < d_; ++l) row[l] ^= r[l];
                continue;
            }
            std::uint64_t f = p_ - c;
            for (std::size_t l = 0; l < d_; ++l)
                if (r[l]) row[l] = static_cast<std::uint32_t>((row[l] + f * r[l]) % p_);
        }
        // keep rows sorted by pivot
        std::size_t pos = 0;
        while (pos < piv_.size() && piv_[pos] < j) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(r));
        piv_.insert(piv_.begin() + pos, j);
        return true;
    }

    FpMatrix matrix() const { return FpMatrix::from_rows(p_, rows_, d_); }

    // Orthogonal complement under the standard dot product.
    Subspace annihilator() const {
        Subspace out(p_, d_);
        std::vector<bool> is_piv(d_, false);
        for (auto j : piv_) is_piv[j] = true;
        for (std::size_t f = 0; f < d_; ++f) {
            if (is_piv[f]) continue;
            FpVec v(d_, 0);
            v[f] = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i)
                if (rows_[i][f]) v[piv_[i]] = p_ - rows_[i][f];
            out.add(v);
        }
        return out;
    }

    Subspace intersect(const Subspace& o) const {
        // (U ∩ W) = (U^⊥ + W^⊥)^⊥
        Subspace s = annihilator();
        Subspace t = o.annihilator();
        for (auto& r : t.basis()) s.add(r);
        return s.annihilator();
    }

private:
    std::uint32_t p_ = 2;
    std::size_t d_ = 0;
    std::vector<FpVec> rows_;
    std::vector<std::size_t> piv_;
};

// Row space echelon of m.
inline Subspace row_space(const FpMatrix& m) {
    Subspace s(m.p(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) s.add(m.row(i));
    return s;
}

inline std::size_t rank(const FpMatrix& m) { return row_space(m).dim(); }

// {x : x * m = 0}
inline Subspace left_nullspace(const FpMatrix& m) { return row_space(m.transpose()).annihilator(); }

// {x : m * x = 0}; p must be prime.
inline Subspace right_nullspace(const FpMatrix& m) { return row_space(m).annihilator(); }

inline std::vector<FpVec> nullspace_mod_p(const IntMatrix& A, long long p) {
    require_prime(p);
    if (p >= (1LL << 31)) throw std::invalid_argument("prime too large for F_p kernels");
    return right_nullspace(FpMatrix::from_int(A, static_cast<std::uint32_t>(p))).basis();
}

inline FpMatrix fp_inverse(const FpMatrix& m) {
    std::size_t n = m.rows();
    std::uint32_t p = m.p();
    FpMatrix a = m, inv = FpMatrix::identity(p, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && !a(piv, c)) ++piv;
        if (piv == n) throw Error("singular matrix over F_p");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        std::uint64_t s = fp_inv(a(c, c), p);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) = static_cast<std::uint32_t>(a(c, j) * s % p);
            inv(c, j) = static_cast<std::uint32_t>(inv(c, j) * s % p);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || !a(i, c)) continue;
            std::uint64_t f = p - a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (a(c, j)) a(i, j) = static_cast<std::uint32_t>((a(i, j) + f * a(c, j)) % p);
                if (inv(c, j)) inv(i, j) = static_cast<std::uint32_t>((inv(i, j) + f * inv(c, j)) % p);
            }
        }
    }
    return inv;
}

// Smallest subspace containing the seeds and closed under right multiplication by gens.
inline Subspace spin(const std::vector<FpVec>& seeds, const std::vector<FpMatrix>& gens, std::size_t d, std::uint32_t p) {
    Subspace s(p, d);
    std::vector<FpVec> queue;
    for (auto& v : seeds)
        if (s.add(v)) queue.push_back(v);
    for (std::size_t qi = 0; qi < queue.size() && s.dim() < d; ++qi) {
        for (auto& g : gens) {
            FpVec w = vec_mul(queue[qi], g);
            if (s.add(w)) queue.push_back(std::move(w));
            if (s.dim() == d) break;
        }
    }
    return s;
}

// Spin-up recording words: basis[0] = v, basis[i] = basis[parent[i]] * gens[gen[i]].
struct SpinTree {
    std::vector<FpVec> basis;
    std::vector<int> parent, gen;
};

inline SpinTree spin_tree(const FpVec& v, const std::vector<FpMatrix>& gens, std::size_t d, std::uint32_t p) {
    SpinTree t;
    Subspace s(p, d);
    if (!s.add(v)) return t;
    t.basis.push_back(v);
    t.parent.push_back(-1);
    t.gen.push_back(-1);
    for (std::size_t qi = 0; qi < t.basis.size() && s.dim() < d; ++qi) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            FpVec w = vec_mul(t.basis[qi], gens[g]);
            if (s.add(w)) {
                t.basis.push_back(std::move(w));
                t.parent.push_back(static_cast<int>(qi));
                t.gen.push_back(static_cast<int>(g));
            }
        }
    }
    return t;
}

}  // namespace specht
