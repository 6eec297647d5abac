#pragma once

// Brute-force reference implementations for the test suite. Everything here
// recomputes from the diagram definition, independent of the beta-set
// machinery the library uses: hooklengths come from scanning cells, rim-hook
// removal from the row-shift description, characters from a memo-free
// recursion, partition counts from the pentagonal-number recurrence.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "snkron/partition.hpp"

namespace oracle {

using Parts = std::vector<int>;

inline std::int64_t weight(const Parts& p) {
    return std::accumulate(p.begin(), p.end(), std::int64_t{0});
}

inline Parts conj(const Parts& p) {
    Parts out;
    if (p.empty()) return out;
    for (int j = 1; j <= p[0]; ++j) {
        int c = 0;
        for (int v : p)
            if (v >= j) ++c;
        out.push_back(c);
    }
    return out;
}

// hooklength of cell (i,j), 1-based, from the cell counts
inline int hook(const Parts& p, int i, int j) {
    Parts c = conj(p);
    return (p[i - 1] - j) + (c[j - 1] - i) + 1;
}

// removing the rim hook of h_{i,j}: rows i..q become
// (p_{i+1}-1, ..., p_q-1, j-1) where q is the last row with part >= j
struct Removal {
    Parts result;
    int leg;
};

inline Removal remove_rim(const Parts& p, int i, int j) {
    int q = 0;
    for (int r = 1; r <= static_cast<int>(p.size()); ++r)
        if (p[r - 1] >= j) q = r;
    Parts out;
    for (int r = 1; r < i; ++r) out.push_back(p[r - 1]);
    for (int r = i + 1; r <= q; ++r) out.push_back(p[r - 1] - 1);
    out.push_back(j - 1);
    for (int r = q + 1; r <= static_cast<int>(p.size()); ++r)
        out.push_back(p[r - 1]);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return Removal{out, q - i};
}

// memo-free Murnaghan-Nakayama
inline std::int64_t chi(const Parts& lambda, const Parts& mu) {
    if (mu.empty()) return 1;
    int r = mu[0];
    Parts rest(mu.begin() + 1, mu.end());
    std::int64_t total = 0;
    for (int i = 1; i <= static_cast<int>(lambda.size()); ++i) {
        for (int j = 1; j <= lambda[i - 1]; ++j) {
            if (hook(lambda, i, j) != r) continue;
            Removal rem = remove_rim(lambda, i, j);
            std::int64_t sub = chi(rem.result, rest);
            total += (rem.leg % 2 == 0) ? sub : -sub;
        }
    }
    return total;
}

inline void gen_partitions(int n, int maxpart, Parts& cur,
                           std::vector<Parts>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int first = std::min(n, maxpart); first >= 1; --first) {
        cur.push_back(first);
        gen_partitions(n - first, first, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Parts> partitions(int n) {
    std::vector<Parts> out;
    Parts cur;
    gen_partitions(n, n, cur, out);
    return out;
}

// p(n) = sum_k (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
inline std::int64_t partition_count(int n) {
    static std::vector<std::int64_t> memo{1};
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            std::int64_t term = 0;
            if (g1 <= m) term += memo[m - g1];
            if (g2 <= m) term += memo[m - g2];
            total += (k % 2 == 1) ? term : -term;
        }
        memo.push_back(total);
    }
    return memo[n];
}

inline std::int64_t zcent(const Parts& mu) {
    std::map<int, int> mult;
    for (int v : mu) ++mult[v];
    std::int64_t z = 1;
    for (auto [r, m] : mult) {
        for (int q = 0; q < m; ++q) z *= r;
        for (int q = 2; q <= m; ++q) z *= q;
    }
    return z;
}

inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// exact Kronecker coefficient from the memo-free characters; small n only
inline std::int64_t kron(const Parts& a, const Parts& b, const Parts& c) {
    int n = static_cast<int>(weight(a));
    std::int64_t acc = 0;
    for (const Parts& rho : partitions(n))
        acc += (factorial(n) / zcent(rho)) * chi(a, rho) * chi(b, rho) *
               chi(c, rho);
    return acc / factorial(n);
}

// every mu |- |rho|+r whose rim-hook removal of length r reaches rho
inline std::vector<std::pair<Parts, int>> add_rim_brute(const Parts& rho, int r) {
    std::vector<std::pair<Parts, int>> out;
    int n = static_cast<int>(weight(rho)) + r;
    for (const Parts& mu : partitions(n)) {
        for (int i = 1; i <= static_cast<int>(mu.size()); ++i) {
            for (int j = 1; j <= mu[i - 1]; ++j) {
                if (hook(mu, i, j) != r) continue;
                Removal rem = remove_rim(mu, i, j);
                if (rem.result == rho) out.push_back({mu, rem.leg});
            }
        }
    }
    return out;
}

inline snkron::Partition lift(const Parts& p) { return snkron::Partition(p); }

}  // namespace oracle
