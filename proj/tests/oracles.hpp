#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's algorithms; inputs and outputs are plain
// vectors and integers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;
using Table = std::vector<std::vector<std::uint32_t>>;

inline Table addition_mod(std::uint32_t n) {
    Table t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

// (p o q)(x) = p(q(x)).
inline Perm compose(const Perm& p, const Perm& q) {
    Perm out(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) out[x] = p[q[x]];
    return out;
}

inline int sign(const Perm& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

inline std::uint64_t factorial(unsigned n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Identity at 0, two-sided inverses and associativity over every triple.
inline bool is_group_table(const Table& t) {
    const std::size_t n = t.size();
    for (std::size_t g = 0; g < n; ++g) {
        if (t[0][g] != g || t[g][0] != g) return false;
        bool has_inverse = false;
        for (std::size_t h = 0; h < n; ++h) has_inverse = has_inverse || (t[g][h] == 0 && t[h][g] == 0);
        if (!has_inverse) return false;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    return true;
}

// Every map G -> H checked pairwise: |H|^|G| candidates. Tiny groups only.
inline std::vector<std::vector<std::uint32_t>> all_homomorphisms(const Table& g, const Table& h) {
    const std::size_t n = g.size(), m = h.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= m;
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> f(n);
    for (std::uint64_t t = 0; t < total; ++t) {
        // Most significant digit first, so the output is lexicographic.
        std::uint64_t rest = t;
        for (std::size_t i = n; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(rest % m);
            rest /= m;
        }
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            for (std::size_t y = 0; y < n && ok; ++y) ok = f[g[x][y]] == h[f[x]][f[y]];
        if (ok) out.push_back(f);
    }
    return out;
}

// All x in GF(p)^n bucketed by M x mod p.
inline std::map<std::vector<std::uint64_t>, std::vector<std::vector<std::uint64_t>>> bucket_by_image(
    const std::vector<std::vector<std::uint64_t>>& m, std::uint64_t p, std::size_t n) {
    std::map<std::vector<std::uint64_t>, std::vector<std::vector<std::uint64_t>>> buckets;
    std::vector<std::uint64_t> x(n, 0), y(m.size());
    while (true) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += m[i][j] * x[j];
            y[i] = acc % p;
        }
        buckets[y].push_back(x);
        std::size_t j = 0;
        for (; j < n; ++j) {
            if (++x[j] < p) break;
            x[j] = 0;
        }
        if (j == n) return buckets;
    }
}

// Base-p code of M x for every x in GF(p)^n, indexed by the base-p code of x
// (x[0] least significant).
inline std::vector<std::uint64_t> image_codes(const std::vector<std::vector<std::uint64_t>>& m, std::uint64_t p,
                                              std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < n; ++j) total *= p;
    std::vector<std::uint64_t> out(total);
    std::vector<std::uint64_t> x(n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t y = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += m[i][j] * x[j];
            y = y * p + acc % p;
        }
        out[code] = y;
        for (std::size_t j = 0; j < n && ++x[j] == p; ++j) x[j] = 0;
    }
    return out;
}

// Rank by row reduction; Rational must be an exact field type.
template <typename Rational>
std::size_t rank_q(std::vector<std::vector<Rational>> a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Rational factor = a[r][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[r][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace oracle
