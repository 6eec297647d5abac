#pragma once

#include <atomic>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "snkron/checked_int.hpp"
#include "snkron/errors.hpp"
#include "snkron/parallel.hpp"
#include "snkron/partition.hpp"

namespace snkron {

/// Memo table for chi^lambda(mu), keyed by the canonical (lambda, mu) pair.
/// Sharded for concurrent readers; insert-if-absent is idempotent because
/// every writer computes the same value.
class CharacterCache {
public:
    explicit CharacterCache(int n_cap = 20) : n_cap_(n_cap) {}

    int n_cap() const { return n_cap_; }

    std::optional<Int> find(const Partition& lambda, const Partition& mu) const {
        const Shard& s = shard(lambda, mu);
        std::shared_lock lock(s.mutex);
        auto it = s.map.find(Key{lambda, mu});
        if (it == s.map.end()) return std::nullopt;
        return it->second;
    }

    Int insert(const Partition& lambda, const Partition& mu, Int value) {
        Shard& s = shard(lambda, mu);
        std::unique_lock lock(s.mutex);
        auto [it, _] = s.map.emplace(Key{lambda, mu}, value);
        return it->second;
    }

    std::size_t size() const {
        std::size_t total = 0;
        for (const Shard& s : shards_) {
            std::shared_lock lock(s.mutex);
            total += s.map.size();
        }
        return total;
    }

    void clear() {
        for (Shard& s : shards_) {
            std::unique_lock lock(s.mutex);
            s.map.clear();
        }
    }

    static constexpr const char* kFileHeader = "snkron-character-cache v1";

    void save(const std::string& path) const {
        std::ofstream out(path, std::ios::trunc);
        if (!out) throw error("cannot write cache file: " + path);
        out << kFileHeader << '\n';
        for (const Shard& s : shards_) {
            std::shared_lock lock(s.mutex);
            for (const auto& [key, value] : s.map)
                out << key.first.to_string() << '|' << key.second.to_string()
                    << '|' << value << '\n';
        }
    }

    /// Loads entries from a previous save. A missing file or a version
    /// mismatch discards the cache and returns false; computation proceeds
    /// from scratch.
    bool load(const std::string& path) {
        std::ifstream in(path);
        if (!in) return false;
        std::string header;
        if (!std::getline(in, header) || header != kFileHeader) return false;
        std::string line;
        while (std::getline(in, line)) {
            auto p1 = line.find('|');
            auto p2 = line.find('|', p1 == std::string::npos ? 0 : p1 + 1);
            if (p1 == std::string::npos || p2 == std::string::npos) return false;
            try {
                Partition lambda = Partition::parse(line.substr(0, p1));
                Partition mu = Partition::parse(line.substr(p1 + 1, p2 - p1 - 1));
                Int value = std::stoll(line.substr(p2 + 1));
                insert(lambda, mu, value);
            } catch (const std::exception&) {
                clear();
                return false;
            }
        }
        return true;
    }

private:
    using Key = std::pair<Partition, Partition>;

    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            PartitionHash h;
            return h(k.first) * 0x9e3779b97f4a7c15ull + h(k.second);
        }
    };

    struct Shard {
        mutable std::shared_mutex mutex;
        std::unordered_map<Key, Int, KeyHash> map;
    };

    static constexpr std::size_t kShards = 64;

    Shard& shard(const Partition& a, const Partition& b) {
        return shards_[KeyHash{}(Key{a, b}) % kShards];
    }
    const Shard& shard(const Partition& a, const Partition& b) const {
        return shards_[KeyHash{}(Key{a, b}) % kShards];
    }

    int n_cap_;
    mutable std::vector<Shard> shards_{kShards};
};

namespace detail {

// One M-N step: strip mu_1, branching over the rows that carry a hook of
// that length (at most one per row).
template <typename Value>
Value mn_recurse(const Partition& lambda, const Partition& mu,
                 CharacterCache* cache) {
    if (mu.empty()) return Value(1);
    if constexpr (std::is_same_v<Value, Int>) {
        if (cache) {
            if (auto hit = cache->find(lambda, mu)) return *hit;
        }
    }
    int r = mu.parts()[0];
    Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));

    int t = std::max(lambda.size(), 1);
    BetaSet X = beta_set(lambda, t);
    Value total(0);
    for (int i = 0; i < t; ++i) {
        int x = X.elements[i];
        int y = x - r;
        if (y < 0 || X.contains(y)) continue;
        int leg = 0;
        for (int z : X.elements)
            if (y < z && z < x) ++leg;
        std::vector<int> next = X.elements;
        next[i] = y;
        Partition sub = partition_from_beta_set(BetaSet{std::move(next)});
        Value term = mn_recurse<Value>(sub, rest, cache);
        if constexpr (std::is_same_v<Value, Int>) {
            total = checked_add(total, (leg % 2 == 0) ? term : -term);
        } else {
            total += (leg % 2 == 0) ? term : -term;
        }
    }
    if constexpr (std::is_same_v<Value, Int>) {
        if (cache) return cache->insert(lambda, mu, total);
    }
    return total;
}

}  // namespace detail

/// Exact chi^lambda(mu) by the Murnaghan-Nakayama rule, stripping the
/// largest remaining part of mu first. 64-bit with overflow detection;
/// character_value_big is the arbitrary-precision escalation.
inline Int character_value(const Partition& lambda, const Partition& mu,
                           CharacterCache& cache) {
    if (lambda.weight() != mu.weight())
        throw weight_mismatch_error("character_value: |lambda| != |mu|");
    if (lambda.weight() > cache.n_cap())
        throw cap_exceeded_error("character n-cap (" +
                                 std::to_string(cache.n_cap()) +
                                 ") exceeded at n = " +
                                 std::to_string(lambda.weight()));
    return detail::mn_recurse<Int>(lambda, mu, &cache);
}

/// Uncached arbitrary-precision route for values beyond the 64-bit caps.
inline BigInt character_value_big(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw weight_mismatch_error("character_value_big: |lambda| != |mu|");
    return detail::mn_recurse<BigInt>(lambda, mu, nullptr);
}

/// Hook length formula: n! / prod of hooklengths.
inline Int dimension(const Partition& lambda) {
    int n = static_cast<int>(lambda.weight());
    unsigned __int128 num = 1;
    for (int i = 2; i <= n; ++i) num *= static_cast<unsigned>(i);
    unsigned __int128 den = 1;
    for (const auto& row : hook_lengths(lambda))
        for (int h : row) den *= static_cast<unsigned>(h);
    unsigned __int128 d = num / den;
    if (d > static_cast<unsigned __int128>(INT64_MAX))
        throw arithmetic_overflow_error("dimension exceeds 64 bits");
    return static_cast<Int>(d);
}

/// |Z_{S_n}(mu)| = prod_i i^{m_i} * m_i!
inline Int centralizer_order(const Partition& mu) {
    Int z = 1;
    CycleType c = cycle_type(mu);
    for (const auto& [r, m] : c.multiplicities) {
        for (int q = 0; q < m; ++q) z = checked_mul(z, r);
        for (int q = 2; q <= m; ++q) z = checked_mul(z, q);
    }
    return z;
}

/// (-1)^(n - number of parts): the sign character on the class of mu.
inline int class_sign(const Partition& mu) {
    return (mu.weight() - mu.size()) % 2 == 0 ? 1 : -1;
}

/// Full character data of S_n. Rows index classes, columns index
/// irreducibles, both in reverse-lexicographic order:
/// values[i][j] = chi^{order[j]}(order[i]).
struct CharacterTable {
    int n = 0;
    std::vector<Partition> order;
    std::vector<std::vector<Int>> values;
};

struct TableOptions {
    int table_cap = 16;
    int threads = 1;
};

inline CharacterTable character_table(int n, CharacterCache& cache,
                                      const TableOptions& opts = {}) {
    if (n > opts.table_cap)
        throw cap_exceeded_error("character table cap (" +
                                 std::to_string(opts.table_cap) +
                                 ") exceeded at n = " + std::to_string(n));
    CharacterTable table;
    table.n = n;
    for (const Partition& p : partitions_of(n)) table.order.push_back(p);
    std::size_t d = table.order.size();
    table.values.assign(d, std::vector<Int>(d, 0));
    parallel_for(d, opts.threads, [&](std::size_t j) {
        for (std::size_t i = 0; i < d; ++i)
            table.values[i][j] =
                character_value(table.order[j], table.order[i], cache);
    });
    return table;
}

/// K * K^T == diag(z_mu) over all class pairs of S_n.
inline bool check_second_orthogonality(int n, CharacterCache& cache) {
    CharacterTable t = character_table(n, cache, TableOptions{std::max(n, 16), 1});
    std::size_t d = t.order.size();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Int sum = 0;
            for (std::size_t l = 0; l < d; ++l)
                sum = checked_add(sum,
                                  checked_mul(t.values[i][l], t.values[j][l]));
            Int want = (i == j) ? centralizer_order(t.order[i]) : 0;
            if (sum != want) return false;
        }
    }
    return true;
}

}  // namespace snkron
