#pragma once

#include "specht/integer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace specht {

struct DegreeMismatchError : Error {
    using Error::Error;
};

// One-line notation: perm[i-1] = sigma(i). Products apply the right factor first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<int> seen(img_.size() + 1, 0);
        for (int x : img_) {
            if (x < 1 || x > static_cast<int>(img_.size()) || seen[x]++)
                throw std::invalid_argument("not a permutation");
        }
    }
    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }
    static Permutation transposition(int n, int a, int b) {
        auto p = identity(n);
        std::swap(p.img_[a - 1], p.img_[b - 1]);
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    Permutation operator*(const Permutation& rhs) const {
        if (degree() != rhs.degree()) throw DegreeMismatchError("permutation degrees differ");
        std::vector<int> v(img_.size());
        for (int i = 1; i <= degree(); ++i) v[i - 1] = (*this)(rhs(i));
        return Permutation(std::move(v));
    }
    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (int i = 1; i <= degree(); ++i) v[img_[i - 1] - 1] = i;
        return Permutation(std::move(v));
    }
    int sign() const {
        int s = 1;
        std::vector<bool> seen(img_.size(), false);
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j] - 1) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }
    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("empty partition");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    static Partition hook(int n, int k) {
        if (k < 0 || k > n - 1) throw std::invalid_argument("hook leg out of range");
        std::vector<int> v{n - k};
        v.insert(v.end(), k, 1);
        return Partition(std::move(v));
    }

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 0; j < parts_[0]; ++j) {
            int len = 0;
            for (int x : parts_)
                if (x > j) ++len;
            c.push_back(len);
        }
        return Partition(std::move(c));
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// A tabloid is stored as its row sets, each sorted; comparison is lexicographic
// on the tuple of row sets, which is the canonical order.
struct Tabloid {
    std::vector<std::vector<int>> rows;
    bool operator<(const Tabloid& o) const { return rows < o.rows; }
    bool operator==(const Tabloid& o) const { return rows == o.rows; }
};

inline Tabloid act_on_tabloid(const Permutation& sigma, const Tabloid& t) {
    int n = 0;
    for (auto& r : t.rows) n += static_cast<int>(r.size());
    if (sigma.degree() != n) throw DegreeMismatchError("permutation degree does not match tabloid");
    Tabloid out;
    out.rows.reserve(t.rows.size());
    for (auto& r : t.rows) {
        std::vector<int> nr;
        nr.reserve(r.size());
        for (int x : r) nr.push_back(sigma(x));
        std::sort(nr.begin(), nr.end());
        out.rows.push_back(std::move(nr));
    }
    return out;
}

inline std::vector<Tabloid> enumerate_tabloids(const Partition& lambda) {
    int n = lambda.n();
    if (n > 16) throw std::invalid_argument("tabloid enumeration limited to n <= 16");
    std::vector<Tabloid> out;
    Tabloid cur;
    std::vector<bool> used(n + 1, false);
    // choose each row as a combination of the unused entries
    auto rec = [&](auto&& self, std::size_t row) -> void {
        if (row == lambda.length()) {
            out.push_back(cur);
            return;
        }
        std::vector<int> avail;
        for (int x = 1; x <= n; ++x)
            if (!used[x]) avail.push_back(x);
        int m = lambda[row];
        std::vector<int> idx(m);
        std::iota(idx.begin(), idx.end(), 0);
        int a = static_cast<int>(avail.size());
        while (true) {
            std::vector<int> r;
            for (int i : idx) r.push_back(avail[i]);
            for (int x : r) used[x] = true;
            cur.rows.push_back(r);
            self(self, row + 1);
            cur.rows.pop_back();
            for (int x : r) used[x] = false;
            int i = m - 1;
            while (i >= 0 && idx[i] == a - m + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

struct StandardTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const {
        std::vector<int> p;
        for (auto& r : rows) p.push_back(static_cast<int>(r.size()));
        return Partition(p);
    }
    std::vector<std::vector<int>> columns() const {
        std::vector<std::vector<int>> cols(rows[0].size());
        for (auto& r : rows)
            for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
        return cols;
    }
    Tabloid tabloid() const {
        Tabloid t{rows};
        for (auto& r : t.rows) std::sort(r.begin(), r.end());
        return t;
    }
    bool is_standard() const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (j && rows[i][j] <= rows[i][j - 1]) return false;
                if (i && rows[i][j] <= rows[i - 1][j]) return false;
            }
        return true;
    }
    StandardTableau apply(const Permutation& s) const {
        StandardTableau t = *this;
        for (auto& r : t.rows)
            for (auto& x : r) x = s(x);
        return t;
    }
};

// Standard tableaux ordered lexicographically by their column words.
inline std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& lambda) {
    int n = lambda.n();
    std::vector<StandardTableau> out;
    StandardTableau cur;
    cur.rows.resize(lambda.length());
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < lambda.length(); ++i) {
            std::size_t len = cur.rows[i].size();
            if (static_cast<int>(len) >= lambda[i]) continue;
            if (i && cur.rows[i - 1].size() <= len) continue;
            cur.rows[i].push_back(next);
            self(self, next + 1);
            cur.rows[i].pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.columns() < b.columns();
    });
    return out;
}

struct StabilizerInfo {
    std::vector<Permutation> generators;  // transpositions of neighbouring entries in a block
    Int order;
};

namespace detail {
inline StabilizerInfo block_stabilizer(int n, const std::vector<std::vector<int>>& blocks) {
    StabilizerInfo s;
    s.order = 1;
    for (auto& b : blocks) {
        s.order *= factorial(b.size());
        for (std::size_t i = 0; i + 1 < b.size(); ++i) s.generators.push_back(Permutation::transposition(n, b[i], b[i + 1]));
    }
    return s;
}

// Every element of the direct product of symmetric groups on the blocks.
template <typename F>
void for_each_block_permutation(int n, const std::vector<std::vector<int>>& blocks, F&& f) {
    std::vector<std::vector<int>> perms = blocks;
    for (auto& p : perms) std::sort(p.begin(), p.end());
    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 1);
            auto sorted = blocks;
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                std::sort(sorted[i].begin(), sorted[i].end());
                for (std::size_t j = 0; j < sorted[i].size(); ++j) img[sorted[i][j] - 1] = perms[i][j];
            }
            f(Permutation(std::move(img)));
            return;
        }
        std::sort(perms[b].begin(), perms[b].end());
        do {
            self(self, b + 1);
        } while (std::next_permutation(perms[b].begin(), perms[b].end()));
    };
    rec(rec, 0);
}
}  // namespace detail

inline StabilizerInfo row_stabilizer(const StandardTableau& t) {
    return detail::block_stabilizer(t.shape().n(), t.rows);
}

inline StabilizerInfo column_stabilizer(const StandardTableau& t) {
    return detail::block_stabilizer(t.shape().n(), t.columns());
}

template <typename F>
void for_each_row_permutation(const StandardTableau& t, F&& f) {
    detail::for_each_block_permutation(t.shape().n(), t.rows, std::forward<F>(f));
}

template <typename F>
void for_each_column_permutation(const StandardTableau& t, F&& f) {
    detail::for_each_block_permutation(t.shape().n(), t.columns(), std::forward<F>(f));
}

// k-subsets of {lo..hi} in lexicographic order
inline std::vector<std::vector<int>> combinations(int lo, int hi, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > hi - lo + 1) return out;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), lo);
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == hi - k + 1 + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

}  // namespace specht
