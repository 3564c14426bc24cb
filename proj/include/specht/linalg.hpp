#pragma once

#include "specht/integer.hpp"
#include "specht/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace specht {

struct RankDeficientError : Error {
    using Error::Error;
};
struct NotSublatticeError : Error {
    using Error::Error;
};
struct AmbientMismatchError : Error {
    using Error::Error;
};

struct HnfResult {
    IntMatrix H;
    IntMatrix U;
};

namespace detail {

inline void row_axpy(std::vector<Int>& dst, const Int& a, const std::vector<Int>& src) {
    for (std::size_t j = 0; j < dst.size(); ++j)
        if (src[j] != 0) dst[j] += a * src[j];
}

// Row echelon HNF of the rows of a (optionally tracking the transform).
// Returns the rank; rows beyond the rank are zero.
inline std::size_t hnf_inplace(std::vector<std::vector<Int>>& a, std::vector<std::vector<Int>>* u) {
    std::size_t m = a.size();
    if (!m) return 0;
    std::size_t c = a[0].size();
    std::size_t r = 0;
    for (std::size_t j = 0; j < c && r < m; ++j) {
        // gcd-combine all rows >= r into row r
        for (std::size_t i = r + 1; i < m; ++i) {
            if (a[i][j] == 0) continue;
            if (a[r][j] == 0) {
                std::swap(a[r], a[i]);
                if (u) std::swap((*u)[r], (*u)[i]);
                continue;
            }
            Int g, x, y;
            ext_gcd(a[r][j], a[i][j], g, x, y);
            Int p = a[r][j] / g, q = a[i][j] / g;
            std::vector<Int> nr(c), ni(c);
            for (std::size_t l = 0; l < c; ++l) {
                nr[l] = x * a[r][l] + y * a[i][l];
                ni[l] = p * a[i][l] - q * a[r][l];
            }
            a[r].swap(nr);
            a[i].swap(ni);
            if (u) {
                std::size_t w = (*u)[r].size();
                std::vector<Int> ur(w), ui(w);
                for (std::size_t l = 0; l < w; ++l) {
                    ur[l] = x * (*u)[r][l] + y * (*u)[i][l];
                    ui[l] = p * (*u)[i][l] - q * (*u)[r][l];
                }
                (*u)[r].swap(ur);
                (*u)[i].swap(ui);
            }
        }
        if (a[r][j] == 0) continue;
        if (a[r][j] < 0) {
            for (auto& x : a[r]) x = -x;
            if (u)
                for (auto& x : (*u)[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int f = floor_div(a[i][j], a[r][j]);
            if (f == 0) continue;
            row_axpy(a[i], -f, a[r]);
            if (u) row_axpy((*u)[i], -f, (*u)[r]);
        }
        ++r;
    }
    return r;
}

}  // namespace detail

// H = U*A, H in row-style HNF (upper echelon, positive pivots, entries above a pivot in [0, pivot)).
inline HnfResult hnf(const IntMatrix& A) {
    auto a = A.to_rows();
    std::vector<std::vector<Int>> u = IntMatrix::identity(A.rows()).to_rows();
    std::size_t r = detail::hnf_inplace(a, &u);
    if (r < A.rows()) throw RankDeficientError("hnf: input does not have full row rank");
    return {IntMatrix::from_rows(a, A.cols()), IntMatrix::from_rows(u, A.rows())};
}

// HNF of the lattice spanned by arbitrary rows; zero rows dropped.
inline IntMatrix hnf_rows(const IntMatrix& A) {
    auto a = A.to_rows();
    std::size_t r = detail::hnf_inplace(a, nullptr);
    a.resize(r);
    return IntMatrix::from_rows(a, A.cols());
}

// HNF of the full-rank lattice spanned by `rows` together with D*Z^c (D > 0).
// Every entry is kept reduced modulo D.
inline IntMatrix hnf_mod(std::vector<std::vector<Int>> w, std::size_t c, const Int& D) {
    if (D <= 0) throw std::invalid_argument("hnf_mod: modulus must be positive");
    for (auto& row : w)
        for (auto& x : row) x = floor_mod(x, D);
    IntMatrix H(c, c);
    for (std::size_t j = 0; j < c; ++j) {
        std::vector<Int> h;
        bool have = false;
        std::vector<std::vector<Int>> rest;
        rest.reserve(w.size() + 1);
        for (auto& row : w) {
            if (row[j] == 0) {
                bool nz = false;
                for (std::size_t l = j + 1; l < c && !nz; ++l) nz = row[l] != 0;
                if (nz) rest.push_back(std::move(row));
                continue;
            }
            if (!have) {
                h = std::move(row);
                have = true;
                continue;
            }
            Int g, x, y;
            ext_gcd(h[j], row[j], g, x, y);
            Int p = h[j] / g, q = row[j] / g;
            std::vector<Int> other(c);
            for (std::size_t l = j; l < c; ++l) {
                Int nh = floor_mod(x * h[l] + y * row[l], D);
                other[l] = floor_mod(p * row[l] - q * h[l], D);
                h[l] = nh;
            }
            h[j] = g;
            other[j] = 0;
            bool nz = false;
            for (std::size_t l = j + 1; l < c && !nz; ++l) nz = other[l] != 0;
            if (nz) rest.push_back(std::move(other));
        }
        if (!have) h.assign(c, Int(0));
        Int g, x, y;
        ext_gcd(h[j], D, g, x, y);
        std::vector<Int> piv(c), resid(c);
        Int dg = D / g;
        bool nz = false;
        for (std::size_t l = j + 1; l < c; ++l) {
            piv[l] = floor_mod(x * h[l], D);
            resid[l] = floor_mod(-dg * h[l], D);
            nz = nz || resid[l] != 0;
        }
        piv[j] = g;
        if (nz) rest.push_back(std::move(resid));
        H.set_row(j, piv);
        w = std::move(rest);
    }
    for (std::size_t j = 0; j < c; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Int f = floor_div(H(i, j), H(j, j));
            if (f == 0) continue;
            for (std::size_t l = j; l < c; ++l) H(i, l) -= f * H(j, l);
        }
    }
    return H;
}

inline bool is_hnf(const IntMatrix& H) {
    std::size_t lastpiv = 0;
    bool first = true;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        std::size_t j = 0;
        while (j < H.cols() && H(i, j) == 0) ++j;
        if (j == H.cols()) return false;
        if (!first && j <= lastpiv) return false;
        if (H(i, j) <= 0) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (H(k, j) < 0 || H(k, j) >= H(i, j)) return false;
        lastpiv = j;
        first = false;
    }
    return true;
}

struct SnfResult {
    std::vector<Int> divisors;  // min(rows, cols) entries, s_i | s_{i+1}, zeros last
    IntMatrix U2, U1;           // U2 * A * U1 = diag
};

inline SnfResult snf(const IntMatrix& A) {
    if (A.rows() == 0 || A.cols() == 0) throw std::invalid_argument("snf of empty matrix");
    std::size_t m = A.rows(), n = A.cols();
    IntMatrix a = A, L = IntMatrix::identity(m), R = IntMatrix::identity(n);
    auto row_op = [&](std::size_t i, std::size_t k, const Int& x, const Int& y, const Int& p, const Int& q) {
        // row_i <- x row_i + y row_k ; row_k <- p row_k - q row_i (old values)
        for (auto* M : {&a, &L}) {
            for (std::size_t l = 0; l < M->cols(); ++l) {
                Int ri = (*M)(i, l), rk = (*M)(k, l);
                (*M)(i, l) = x * ri + y * rk;
                (*M)(k, l) = p * rk - q * ri;
            }
        }
    };
    auto col_op = [&](std::size_t i, std::size_t k, const Int& x, const Int& y, const Int& p, const Int& q) {
        for (auto* M : {&a, &R}) {
            for (std::size_t l = 0; l < M->rows(); ++l) {
                Int ci = (*M)(l, i), ck = (*M)(l, k);
                (*M)(l, i) = x * ci + y * ck;
                (*M)(l, k) = p * ck - q * ci;
            }
        }
    };
    std::size_t t = 0;
    while (t < std::min(m, n)) {
        // find a nonzero pivot of smallest absolute value in the remaining block
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a(i, j) != 0 && (pi == m || abs(a(i, j)) < abs(a(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) break;
        if (pi != t) row_op(t, pi, 0, 1, 0, -1);
        if (pj != t) col_op(t, pj, 0, 1, 0, -1);
        bool done = false;
        while (!done) {
            done = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Int g, x, y;
                ext_gcd(a(t, t), a(i, t), g, x, y);
                row_op(t, i, x, y, a(t, t) / g, a(i, t) / g);
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int g, x, y;
                ext_gcd(a(t, t), a(t, j), g, x, y);
                col_op(t, j, x, y, a(t, t) / g, a(t, j) / g);
                done = false;
            }
            if (done) {
                // enforce divisibility of the remaining block by the pivot
                for (std::size_t i = t + 1; i < m && done; ++i)
                    for (std::size_t j = t + 1; j < n && done; ++j)
                        if (!divides(a(t, t), a(i, j))) {
                            row_op(t, i, 1, 1, 1, 0);
                            done = false;
                        }
            }
        }
        ++t;
    }
    SnfResult res;
    for (std::size_t i = 0; i < std::min(m, n); ++i) {
        if (a(i, i) < 0) {
            for (std::size_t l = 0; l < m; ++l) L(i, l) = -L(i, l);
            for (std::size_t l = 0; l < n; ++l) a(i, l) = -a(i, l);
        }
        res.divisors.push_back(a(i, i));
    }
    res.U2 = L;
    res.U1 = R;
    return res;
}

// Full-rank sublattice of Z^r in HNF, tagged with its hook shape (n, k).
class ZLattice {
public:
    ZLattice() = default;
    ZLattice(IntMatrix hnf_basis, int n, int k) : basis_(std::move(hnf_basis)), n_(n), k_(k) {
        if (basis_.rows() != basis_.cols()) throw RankDeficientError("lattice basis must be square");
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            if (basis_(i, i) <= 0) throw RankDeficientError("lattice basis is not full-rank HNF");
    }

    static ZLattice standard(std::size_t rank, int n, int k) { return ZLattice(IntMatrix::identity(rank), n, k); }

    // Lattice spanned by rows (must have full rank).
    static ZLattice from_generators(const IntMatrix& rows, int n, int k) {
        IntMatrix h = hnf_rows(rows);
        if (h.rows() != rows.cols()) throw RankDeficientError("generators do not span a full-rank lattice");
        return ZLattice(h, n, k);
    }
    // Lattice spanned by rows together with D*Z^r, where D is a multiple of the exponent.
    static ZLattice from_generators_mod(const std::vector<std::vector<Int>>& rows, std::size_t rank, const Int& D, int n, int k) {
        return ZLattice(hnf_mod(rows, rank, D), n, k);
    }

    const IntMatrix& basis() const { return basis_; }
    std::size_t rank() const { return basis_.rows(); }
    int n() const { return n_; }
    int k() const { return k_; }

    Int det() const {
        Int d = 1;
        for (std::size_t i = 0; i < rank(); ++i) d *= basis_(i, i);
        return d;
    }

    // Integral coordinates of v in this basis, if v lies in the lattice.
    std::optional<std::vector<Int>> coordinates(std::vector<Int> v) const {
        std::vector<Int> x(rank());
        for (std::size_t j = 0; j < rank(); ++j) {
            if (v[j] == 0) continue;
            if (!divides(basis_(j, j), v[j])) return std::nullopt;
            x[j] = v[j] / basis_(j, j);
            for (std::size_t l = j; l < rank(); ++l)
                if (basis_(j, l) != 0) v[l] -= x[j] * basis_(j, l);
        }
        return x;
    }
    bool contains(const std::vector<Int>& v) const { return coordinates(v).has_value(); }
    bool contains(const ZLattice& o) const {
        for (std::size_t i = 0; i < o.rank(); ++i)
            if (!contains(o.basis_.row(i))) return false;
        return true;
    }

    // some e > 0 dividing det with e*Z^r inside the lattice (the exponent of Z^r/L up to small factors)
    Int exponent() const {
        Int e = 1;
        for (std::size_t i = 0; i < rank(); ++i) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), basis_(i, i).get_mpz_t());
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i < rank() && ok; ++i) {
                std::vector<Int> v(rank());
                v[i] = e;
                ok = contains(v);
            }
            if (ok) return e;
            Int q = det() / e;
            Int f = 2;
            while (!divides(f, q)) ++f;
            e *= f;
        }
    }

    ZLattice scaled(const Int& c) const {
        if (c <= 0) throw std::invalid_argument("scale must be positive");
        IntMatrix b = basis_;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) b(i, j) *= c;
        return ZLattice(b, n_, k_);
    }

    // Exact division by c; requires every basis entry divisible by c.
    ZLattice divided(const Int& c) const {
        IntMatrix b = basis_;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) {
                if (!divides(c, b(i, j))) throw std::invalid_argument("lattice not divisible");
                b(i, j) /= c;
            }
        return ZLattice(b, n_, k_);
    }

    bool operator==(const ZLattice& o) const { return basis_ == o.basis_; }
    bool operator!=(const ZLattice& o) const { return !(*this == o); }

private:
    IntMatrix basis_;
    int n_ = 0, k_ = 0;
};

inline void require_same_ambient(const ZLattice& a, const ZLattice& b) {
    if (a.rank() != b.rank() || a.n() != b.n() || a.k() != b.k()) throw AmbientMismatchError("lattices live in different ambient spaces");
}

// Change-of-basis matrix C with N.basis = C * M.basis; throws if N is not inside M.
inline IntMatrix change_of_basis(const ZLattice& M, const ZLattice& N) {
    require_same_ambient(M, N);
    IntMatrix C(N.rank(), M.rank());
    for (std::size_t i = 0; i < N.rank(); ++i) {
        auto x = M.coordinates(N.basis().row(i));
        if (!x) throw NotSublatticeError("not a sublattice");
        C.set_row(i, *x);
    }
    return C;
}

inline Int order_ideal_index(const ZLattice& M, const ZLattice& N) {
    change_of_basis(M, N);  // containment check
    Int dm = M.det(), dn = N.det();
    return dn / dm;
}

inline ZLattice lattice_sum(const ZLattice& a, const ZLattice& b) {
    require_same_ambient(a, b);
    Int D;
    mpz_gcd(D.get_mpz_t(), a.det().get_mpz_t(), b.det().get_mpz_t());
    auto rows = a.basis().to_rows();
    for (auto& r : b.basis().to_rows()) rows.push_back(r);
    return ZLattice::from_generators_mod(rows, a.rank(), D, a.n(), a.k());
}

// Intersection via the echelon form of [[A, A], [B, 0]]: the rows with vanishing left
// block span {(0, x) : x in A-lattice and B-lattice}.
inline ZLattice lattice_intersection(const ZLattice& a, const ZLattice& b) {
    require_same_ambient(a, b);
    std::size_t r = a.rank();
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Int> v(2 * r);
        for (std::size_t j = 0; j < r; ++j) v[j] = v[r + j] = a.basis()(i, j);
        rows.push_back(v);
    }
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Int> v(2 * r);
        for (std::size_t j = 0; j < r; ++j) v[j] = b.basis()(i, j);
        rows.push_back(v);
    }
    Int D = a.det() * b.det();
    IntMatrix H = hnf_mod(rows, 2 * r, D);
    IntMatrix out(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out(i, j) = H(r + i, r + j);
    return ZLattice(out, a.n(), a.k());
}

}  // namespace specht
