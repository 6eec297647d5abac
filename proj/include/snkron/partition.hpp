#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "snkron/checked_int.hpp"
#include "snkron/errors.hpp"

namespace snkron {

/// Integer partition in canonical form: weakly decreasing positive parts,
/// no trailing zeros. The empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw parse_error("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw parse_error("partition parts must be weakly decreasing");
        }
        n_ = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    /// Canonicalize an arbitrary nonnegative sequence: sort descending, drop zeros.
    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    }

    /// Parse "4,3,2,1". The empty string parses to the empty partition.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        if (text.empty()) return Partition();
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(item, &pos);
                if (pos != item.size()) throw parse_error("bad partition part: " + item);
                parts.push_back(v);
            } catch (const std::logic_error&) {
                throw parse_error("bad partition part: " + item);
            }
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    std::int64_t weight() const { return n_; }

    /// Part at 1-based row i; 0 beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= size()) ? parts_[i - 1] : 0;
    }

    bool contains_part(int r) const {
        return std::binary_search(parts_.begin(), parts_.end(), r,
                                  std::greater<int>());
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    std::int64_t n_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : p.parts())
            h = h * 0x100000001b3ull ^ static_cast<std::size_t>(v);
        return h;
    }
};

/// Cell (i,j) of a Young diagram with its arm, leg and hooklength.
/// Coordinates are 1-based matrix coordinates.
struct HookRef {
    int row = 0;
    int col = 0;
    int arm = 0;
    int leg = 0;
    int length = 0;

    friend bool operator==(const HookRef& a, const HookRef& b) {
        return a.row == b.row && a.col == b.col && a.arm == b.arm &&
               a.leg == b.leg && a.length == b.length;
    }
};

/// Strictly decreasing nonnegative integers; element i is the first-column
/// hooklength of row i when t equals the number of parts.
struct BetaSet {
    std::vector<int> elements;  // descending

    int t() const { return static_cast<int>(elements.size()); }
    bool contains(int v) const {
        return std::binary_search(elements.begin(), elements.end(), v,
                                  std::greater<int>());
    }
};

/// Multiplicity map r -> m_{r,mu}.
struct CycleType {
    std::map<int, int> multiplicities;

    int of(int r) const {
        auto it = multiplicities.find(r);
        return it == multiplicities.end() ? 0 : it->second;
    }
};

// ---------------------------------------------------------------------------
// Diagram combinatorics
// ---------------------------------------------------------------------------

inline Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> cols(lambda.parts()[0]);
    for (int j = 1; j <= lambda.parts()[0]; ++j) {
        int cnt = 0;
        for (int p : lambda.parts())
            if (p >= j) ++cnt;
        cols[j - 1] = cnt;
    }
    return Partition(std::move(cols));
}

inline bool is_self_conjugate(const Partition& lambda) {
    return lambda == conjugate(lambda);
}

inline int durfee_size(const Partition& lambda) {
    int d = 0;
    for (int i = 1; i <= lambda.size(); ++i)
        if (lambda.part(i) >= i) d = i;
    return d;
}

/// Hooklength grid: cell (i,j) of the diagram holds |h_{i,j}|.
inline std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    std::vector<std::vector<int>> grid(lambda.size());
    for (int i = 1; i <= lambda.size(); ++i) {
        grid[i - 1].resize(lambda.part(i));
        for (int j = 1; j <= lambda.part(i); ++j) {
            int arm = lambda.part(i) - j;
            int leg = conj.part(j) - i;
            grid[i - 1][j - 1] = arm + leg + 1;
        }
    }
    return grid;
}

/// HookRef for cell (i,j), recomputed from the diagram. Out-of-diagram
/// coordinates raise invalid_hook_error.
inline HookRef hook_at(const Partition& lambda, int i, int j) {
    if (i < 1 || i > lambda.size() || j < 1 || j > lambda.part(i))
        throw invalid_hook_error("cell (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is outside the diagram");
    int arm = lambda.part(i) - j;
    int leg = conjugate(lambda).part(j) - i;
    return HookRef{i, j, arm, leg, arm + leg + 1};
}

/// lambda-hat = (|h_{1,1}|, ..., |h_{s,s}|), s = Durfee size.
inline Partition principal_hook_partition(const Partition& lambda) {
    int d = durfee_size(lambda);
    Partition conj = conjugate(lambda);
    std::vector<int> hooks(d);
    for (int i = 1; i <= d; ++i)
        hooks[i - 1] = (lambda.part(i) - i) + (conj.part(i) - i) + 1;
    return Partition(std::move(hooks));
}

/// All cells with hooklength r, row-major.
inline std::vector<HookRef> hooks_of_length(const Partition& lambda, int r) {
    if (r < 1) throw error("hooks_of_length: r must be >= 1");
    Partition conj = conjugate(lambda);
    std::vector<HookRef> out;
    for (int i = 1; i <= lambda.size(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            int arm = lambda.part(i) - j;
            int leg = conj.part(j) - i;
            if (arm + leg + 1 == r)
                out.push_back(HookRef{i, j, arm, leg, r});
        }
    }
    return out;
}

inline std::vector<HookRef> all_hooks(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    std::vector<HookRef> out;
    for (int i = 1; i <= lambda.size(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            int arm = lambda.part(i) - j;
            int leg = conj.part(j) - i;
            out.push_back(HookRef{i, j, arm, leg, arm + leg + 1});
        }
    return out;
}

// ---------------------------------------------------------------------------
// Beta sets
// ---------------------------------------------------------------------------

/// x_i = lambda_i + t - i for i = 1..t. Requires t >= number of parts.
inline BetaSet beta_set(const Partition& lambda, int t) {
    if (t < lambda.size())
        throw error("beta_set: t smaller than the number of parts");
    BetaSet X;
    X.elements.resize(t);
    for (int i = 1; i <= t; ++i)
        X.elements[i - 1] = lambda.part(i) + t - i;
    return X;
}

/// Default size t = number of parts: the first-column hooklengths.
inline BetaSet beta_set(const Partition& lambda) {
    return beta_set(lambda, lambda.size());
}

inline Partition partition_from_beta_set(const BetaSet& X) {
    std::vector<int> sorted = X.elements;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    int t = static_cast<int>(sorted.size());
    std::vector<int> parts;
    for (int i = 1; i <= t; ++i) {
        int p = sorted[i - 1] - (t - i);
        if (p < 0) throw error("beta set is not strictly decreasing");
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

/// Olsson's criterion: r occurs in row i iff x_i - r >= 0 and x_i - r is
/// not in X. r = 0 is never a hooklength.
inline bool row_has_hook(const BetaSet& X, int i, int r) {
    if (i < 1 || i > X.t()) throw error("row_has_hook: row out of range");
    if (r <= 0) return false;
    int y = X.elements[i - 1] - r;
    return y >= 0 && !X.contains(y);
}

// ---------------------------------------------------------------------------
// Rim hooks
// ---------------------------------------------------------------------------

/// Remove the rim hook corresponding to h. Returns the remaining partition
/// and the leg length of the removed rim hook. Stale or inconsistent
/// handles raise invalid_hook_error.
inline std::pair<Partition, int> remove_rim_hook(const Partition& lambda,
                                                 const HookRef& h) {
    HookRef fresh = hook_at(lambda, h.row, h.col);  // throws if outside
    if (fresh.length != h.length || fresh.arm != h.arm || fresh.leg != h.leg)
        throw invalid_hook_error("stale HookRef for this partition");

    int t = std::max(lambda.size(), 1);
    BetaSet X = beta_set(lambda, t);
    int x = X.elements[h.row - 1];
    int y = x - h.length;
    if (y < 0 || X.contains(y))
        throw invalid_hook_error("no removable hook of this length in the row");
    int leg = 0;
    for (int z : X.elements)
        if (y < z && z < x) ++leg;
    std::vector<int> next = X.elements;
    next[h.row - 1] = y;
    return {partition_from_beta_set(BetaSet{std::move(next)}), leg};
}

/// B(rho, r): every (mu, leg) with mu = rho * S for a rim hook S of length
/// r, ordered by the going-around process — from all boxes on the first row
/// of rho down to the end of the first column.
inline std::vector<std::pair<Partition, int>> add_rim_hooks(const Partition& rho,
                                                            int r) {
    if (r < 1) throw error("add_rim_hooks: r must be >= 1");
    int t = rho.size() + r;
    BetaSet X = beta_set(rho, t);
    std::vector<std::pair<Partition, int>> out;
    for (int i = 0; i < t; ++i) {  // elements descending == going-around order
        int x = X.elements[i];
        int y = x + r;
        if (X.contains(y)) continue;
        int leg = 0;
        for (int z : X.elements)
            if (x < z && z < y) ++leg;
        std::vector<int> next = X.elements;
        next[i] = y;
        out.emplace_back(partition_from_beta_set(BetaSet{std::move(next)}), leg);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cycle types and dominance
// ---------------------------------------------------------------------------

inline int cycle_multiplicity(const Partition& mu, int r) {
    int cnt = 0;
    for (int p : mu.parts())
        if (p == r) ++cnt;
    return cnt;
}

inline CycleType cycle_type(const Partition& mu) {
    CycleType c;
    for (int p : mu.parts()) ++c.multiplicities[p];
    return c;
}

/// mu is dominated by lambda: every prefix sum of lambda is >= that of mu.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw weight_mismatch_error("dominance order compares equal weights only");
    std::int64_t sm = 0, sl = 0;
    int rows = std::max(mu.size(), lambda.size());
    for (int i = 1; i <= rows; ++i) {
        sm += mu.part(i);
        sl += lambda.part(i);
        if (sl < sm) return false;
    }
    return true;
}

// Lazy reverse-lexicographic enumeration of P(n) is declared below;
// covers() needs it for the intermediate-element scan.
class PartitionRange;

/// Reverse-lexicographic stream over P(n): begins at (n), ends at (1^n).
class PartitionRange {
public:
    explicit PartitionRange(int n) : n_(n) {
        if (n < 0) throw error("partitions_of: n must be >= 0");
    }

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(int n) : done_(false) {
            if (n > 0) current_.assign(1, n);
        }

        const Partition operator*() const { return Partition(current_); }

        iterator& operator++() {
            // rightmost part > 1 shrinks; its surplus refills greedily
            int i = static_cast<int>(current_.size()) - 1;
            while (i >= 0 && current_[i] == 1) --i;
            if (i < 0) {
                done_ = true;
                return *this;
            }
            int remainder = current_[i] + static_cast<int>(current_.size()) - 1 - i;
            int v = current_[i] - 1;
            current_.resize(i);
            while (remainder >= v) {
                current_.push_back(v);
                remainder -= v;
            }
            if (remainder > 0) current_.push_back(remainder);
            return *this;
        }

        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }

        friend bool operator==(const iterator& a, const iterator& b) {
            if (a.done_ != b.done_) return false;
            return a.done_ || a.current_ == b.current_;
        }

    private:
        std::vector<int> current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    int n_;
};

inline PartitionRange partitions_of(int n) { return PartitionRange(n); }

/// Materialized P(n). Guarded by a cap so large scans stay streaming.
inline std::vector<Partition> partitions_of_vector(int n,
                                                   int materialize_cap = 40) {
    if (n > materialize_cap)
        throw cap_exceeded_error("partition materialization cap (" +
                                 std::to_string(materialize_cap) +
                                 ") exceeded at n = " + std::to_string(n));
    std::vector<Partition> out;
    for (const Partition& p : partitions_of(n)) out.push_back(p);
    return out;
}

/// Cover relation of the dominance order: mu strictly below lambda with
/// no partition strictly between.
inline bool covers(const Partition& mu, const Partition& lambda) {
    if (!dominance_leq(mu, lambda) || mu == lambda) return false;
    for (const Partition& nu : partitions_of(static_cast<int>(mu.weight()))) {
        if (nu == mu || nu == lambda) continue;
        if (dominance_leq(mu, nu) && dominance_leq(nu, lambda)) return false;
    }
    return true;
}

}  // namespace snkron
