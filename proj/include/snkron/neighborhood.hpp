#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "snkron/character.hpp"
#include "snkron/errors.hpp"
#include "snkron/partition.hpp"

namespace snkron {

/// Integer combination of irreducibles indexed by partitions of one weight.
/// Zero coefficients are absent.
struct SignedExpansion {
    std::int64_t weight = 0;
    std::map<Partition, Int> terms;
};

/// psi_{rho,n} = sum over S in B(rho, n - |rho|) of (-1)^{l(S)} chi^{rho*S}.
inline SignedExpansion psi(const Partition& rho, int n) {
    if (n <= rho.weight())
        throw error("psi: n must exceed |rho|");
    int r = n - static_cast<int>(rho.weight());
    SignedExpansion e;
    e.weight = n;
    for (const auto& [mu, leg] : add_rim_hooks(rho, r))
        e.terms[mu] = (leg % 2 == 0) ? 1 : -1;
    return e;
}

/// Evaluate a signed expansion at the class of mu.
inline Int psi_value(const SignedExpansion& e, const Partition& mu,
                     CharacterCache& cache) {
    if (mu.weight() != e.weight)
        throw weight_mismatch_error("psi_value: |mu| != expansion weight");
    Int total = 0;
    for (const auto& [lambda, coeff] : e.terms)
        total = checked_add(total,
                            checked_mul(coeff, character_value(lambda, mu, cache)));
    return total;
}

/// mu with one part equal to r deleted (leftmost occurrence).
inline std::optional<Partition> delete_one_part(const Partition& mu, int r) {
    std::vector<int> parts = mu.parts();
    auto it = std::find(parts.begin(), parts.end(), r);
    if (it == parts.end()) return std::nullopt;
    parts.erase(it);
    return Partition(std::move(parts));
}

struct VerifierReport {
    std::string name;
    int n = 0;
    std::int64_t checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Exhaustive check of psi_{rho,n}(mu) = r * m_{r,mu} * chi^rho(mu-bar)
/// for every 1 <= r < n, rho |- n-r, mu |- n, plus the matrix identities
/// M = K^T * D_r and K*M = K*K^T*D_r on the full table.
inline VerifierReport verify_regev_identity(int n, CharacterCache& cache) {
    VerifierReport report;
    report.name = "regev";
    report.n = n;
    auto classes_n = partitions_of_vector(n);
    for (int r = 1; r < n; ++r) {
        auto rhos = partitions_of_vector(n - r);
        std::size_t d = rhos.size();

        std::vector<SignedExpansion> psis(d);
        for (std::size_t i = 0; i < d; ++i) psis[i] = psi(rhos[i], n);

        // pointwise identity over every class of S_n
        for (std::size_t i = 0; i < d; ++i) {
            for (const Partition& mu : classes_n) {
                Int lhs = psi_value(psis[i], mu, cache);
                int m = cycle_multiplicity(mu, r);
                Int rhs = 0;
                if (m > 0) {
                    Partition bar = *delete_one_part(mu, r);
                    rhs = checked_mul(Int(r) * m,
                                      character_value(rhos[i], bar, cache));
                }
                ++report.checked;
                if (lhs != rhs)
                    report.violations.push_back(
                        "psi(" + rhos[i].to_string() + "," + std::to_string(n) +
                        ")(" + mu.to_string() + ") = " + std::to_string(lhs) +
                        " != " + std::to_string(rhs));
            }
        }

        // matrix identities with mu_j = class of rho_j plus one r-part
        CharacterTable K = character_table(n - r, cache,
                                           TableOptions{std::max(n, 16), 1});
        std::vector<Partition> mus(d);
        std::vector<Int> D(d);
        std::vector<std::vector<Int>> M(d, std::vector<Int>(d));
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<int> parts = rhos[j].parts();
            parts.push_back(r);
            mus[j] = Partition::from_unsorted(std::move(parts));
            D[j] = checked_mul(Int(r), cycle_multiplicity(mus[j], r));
        }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                M[i][j] = psi_value(psis[i], mus[j], cache);
                ++report.checked;
                if (M[i][j] != checked_mul(K.values[j][i], D[j]))
                    report.violations.push_back(
                        "M != K^T D_r at r=" + std::to_string(r) + " i=" +
                        std::to_string(i) + " j=" + std::to_string(j));
            }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Int km = 0, kktd = 0;
                for (std::size_t l = 0; l < d; ++l) {
                    km = checked_add(km, checked_mul(K.values[i][l], M[l][j]));
                    kktd = checked_add(
                        kktd, checked_mul(checked_mul(K.values[i][l],
                                                      K.values[j][l]),
                                          D[j]));
                }
                ++report.checked;
                if (km != kktd)
                    report.violations.push_back(
                        "K M != K K^T D_r at r=" + std::to_string(r));
            }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Neighborhoods
// ---------------------------------------------------------------------------

/// N(mu, |h|): remove the rim of h, then re-wrap every rim hook of the same
/// length. Members follow the going-around order of add_rim_hooks.
struct Neighborhood {
    Partition center;
    HookRef hook;
    Partition base;
    std::vector<std::pair<Partition, int>> members;
};

inline Neighborhood neighborhood(const Partition& mu, const HookRef& h) {
    Neighborhood nb;
    nb.center = mu;
    nb.hook = hook_at(mu, h.row, h.col);
    if (h.length != 0 && h.length != nb.hook.length)
        throw invalid_hook_error("stale HookRef for this partition");
    nb.base = remove_rim_hook(mu, nb.hook).first;
    nb.members = add_rim_hooks(nb.base, nb.hook.length);
    return nb;
}

struct NeighborWitness {
    Partition tau;
    Int value = 0;   // chi^tau(lambda)
    int leg = 0;     // leg of the rim hook wrapping base into tau
    bool sign_flip = false;  // (-1)^leg * value opposes the center's signed value
};

/// All tau != mu in N(mu,|h|) with chi^tau(lambda) != 0. Under the
/// theorem's hypotheses the result is non-empty and at least one witness
/// carries the opposite signed value to the center.
inline std::vector<NeighborWitness> nonzero_neighbors(const Partition& mu,
                                                      const Partition& lambda,
                                                      const HookRef& h,
                                                      CharacterCache& cache) {
    if (mu.weight() != lambda.weight())
        throw weight_mismatch_error("nonzero_neighbors: |mu| != |lambda|");
    Int center_value = character_value(mu, lambda, cache);
    if (center_value == 0)
        throw zero_center_error("nonzero_neighbors: chi^mu(lambda) = 0");
    Neighborhood nb = neighborhood(mu, h);
    if (lambda.contains_part(nb.hook.length))
        throw hook_collision_error(
            "nonzero_neighbors: |h| occurs among the parts of lambda");

    int center_leg = 0;
    for (const auto& [p, leg] : nb.members)
        if (p == mu) center_leg = leg;
    bool center_pos = ((center_leg % 2 == 0) ? center_value : -center_value) > 0;

    std::vector<NeighborWitness> out;
    for (const auto& [tau, leg] : nb.members) {
        if (tau == mu) continue;
        Int v = character_value(tau, lambda, cache);
        if (v == 0) continue;
        bool pos = ((leg % 2 == 0) ? v : -v) > 0;
        out.push_back(NeighborWitness{tau, v, leg, pos != center_pos});
    }
    return out;
}

/// True iff pairwise distinct witnesses tau_i can be chosen, one per hook,
/// via maximum bipartite matching on the compatibility graph.
inline bool distinct_neighbors_check(const Partition& mu, const Partition& lambda,
                                     const std::vector<HookRef>& hooks,
                                     CharacterCache& cache) {
    std::vector<std::vector<Partition>> options;
    for (const HookRef& h : hooks) {
        std::vector<Partition> w;
        for (const NeighborWitness& nw : nonzero_neighbors(mu, lambda, h, cache))
            w.push_back(nw.tau);
        options.push_back(std::move(w));
    }
    std::map<Partition, int> matched;
    std::function<bool(int, std::set<Partition>&)> augment =
        [&](int u, std::set<Partition>& seen) -> bool {
        for (const Partition& v : options[u]) {
            if (seen.count(v)) continue;
            seen.insert(v);
            auto it = matched.find(v);
            if (it == matched.end() || augment(it->second, seen)) {
                matched[v] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < options.size(); ++u) {
        std::set<Partition> seen;
        if (!augment(static_cast<int>(u), seen)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Named shapes
// ---------------------------------------------------------------------------

/// rho_m = (m, m-1, ..., 1)
inline Partition staircase(int m) {
    if (m < 1) throw error("staircase: m must be >= 1");
    std::vector<int> parts(m);
    for (int i = 0; i < m; ++i) parts[i] = m - i;
    return Partition(std::move(parts));
}

/// eta_k = (k^(k-1), k-1)
inline Partition chopped_square(int k) {
    if (k < 2) throw error("chopped_square: k must be >= 2");
    std::vector<int> parts(k, k);
    parts.back() = k - 1;
    return Partition(std::move(parts));
}

/// gamma = (k+1, 2, 1^(k-1))
inline Partition gamma_partition(int k) {
    if (k < 1) throw error("gamma_partition: k must be >= 1");
    std::vector<int> parts;
    parts.push_back(k + 1);
    parts.push_back(2);
    for (int i = 0; i < k - 1; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

enum class Side { row, column };

/// tau_{1,j} (row side): move the |h_{1,j}| boxes to the end of the first
/// column of rho_m \ h_{1,j}. Column side mirrors it on the first row.
/// Requires m and j even, 2 <= j <= m.
inline Partition staircase_tau(int m, int j, Side side) {
    if (m < 2 || m % 2 != 0)
        throw error("staircase_tau: m must be even and >= 2");
    if (j % 2 != 0 || j < 2 || j > m)
        throw error("staircase_tau: j must be even with 2 <= j <= m");
    Partition rho = staircase(m);
    HookRef h = (side == Side::row) ? hook_at(rho, 1, j) : hook_at(rho, j, 1);
    Partition base = remove_rim_hook(rho, h).first;
    std::vector<int> parts = base.parts();
    if (side == Side::row) {
        for (int q = 0; q < h.length; ++q) parts.push_back(1);
    } else {
        parts[0] += h.length;
    }
    return Partition(std::move(parts));
}

/// All single-box moves of rho (union over removable boxes, rho included),
/// each with chi^tau(rho-hat).
inline std::vector<std::pair<Partition, Int>> unit_neighborhood_scan(
    const Partition& rho, CharacterCache& cache) {
    Partition hat = principal_hook_partition(rho);
    std::map<Partition, Int> seen;
    for (int i = 1; i <= rho.size(); ++i) {
        if (rho.part(i) == rho.part(i + 1)) continue;  // not removable
        std::vector<int> base = rho.parts();
        if (--base[i - 1] == 0) base.pop_back();
        Partition b(std::move(base));
        for (const auto& [tau, leg] : add_rim_hooks(b, 1))
            if (!seen.count(tau))
                seen.emplace(tau, character_value(tau, hat, cache));
    }
    return {seen.begin(), seen.end()};
}

/// |{lambda |- n : lo <= d(lambda) <= hi, chi^lambda(target) != 0}|,
/// by exhaustive evaluation over the streamed P(n).
inline std::int64_t count_nonzero_on(const Partition& target, int durfee_lo,
                                     int durfee_hi, int n,
                                     CharacterCache& cache) {
    if (target.weight() != n)
        throw weight_mismatch_error("count_nonzero_on: |target| != n");
    std::int64_t count = 0;
    for (const Partition& lambda : partitions_of(n)) {
        int d = durfee_size(lambda);
        if (d < durfee_lo || d > durfee_hi) continue;
        if (character_value(lambda, target, cache) != 0) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Morotti sign lemma
// ---------------------------------------------------------------------------

/// Quadruples (gamma_1, gamma_2, delta_1, delta_2): delta_j |- n distinct,
/// each gamma_i reached from both deltas by removing one rim hook, with
/// gamma_1 != gamma_2. Hook lengths may differ between the gammas; two
/// distinct partitions of equal weight never share two extensions, so the
/// equal-length case contributes nothing. The sign product over the four
/// legs must be -1. With r >= 1 one gamma is pinned to weight n - r.
inline VerifierReport morotti_sign_check(int n, int r = 0) {
    VerifierReport report;
    report.name = "morotti";
    report.n = n;
    std::vector<Partition> deltas = partitions_of_vector(n);
    std::vector<std::map<Partition, int>> removals(deltas.size());
    for (std::size_t d = 0; d < deltas.size(); ++d)
        for (int len = 1; len <= n; ++len)
            for (const HookRef& h : hooks_of_length(deltas[d], len))
                removals[d].insert(remove_rim_hook(deltas[d], h));

    for (std::size_t a = 0; a < deltas.size(); ++a) {
        for (std::size_t b = a + 1; b < deltas.size(); ++b) {
            std::vector<std::pair<Partition, std::pair<int, int>>> common;
            for (const auto& [g, leg_a] : removals[a]) {
                auto it = removals[b].find(g);
                if (it != removals[b].end())
                    common.push_back({g, {leg_a, it->second}});
            }
            for (std::size_t u = 0; u < common.size(); ++u) {
                for (std::size_t v = u + 1; v < common.size(); ++v) {
                    if (r >= 1 &&
                        common[u].first.weight() != n - r &&
                        common[v].first.weight() != n - r)
                        continue;
                    ++report.checked;
                    int legs = common[u].second.first + common[u].second.second +
                               common[v].second.first + common[v].second.second;
                    if (legs % 2 == 0)
                        report.violations.push_back(
                            "sign +1 for gammas " + common[u].first.to_string() +
                            " ; " + common[v].first.to_string() + " deltas " +
                            deltas[a].to_string() + " ; " + deltas[b].to_string());
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Exploratory search: uniqueness of the nonzero neighbor
// ---------------------------------------------------------------------------

struct UniqueNeighborCase {
    Partition lambda;
    HookRef hook;
    std::int64_t nonzero_count = 0;
    bool center_nonzero = false;  // chi^lambda(lambda-hat) != 0
};

/// For every lambda |- n and every hook whose length avoids the principal
/// hooklengths of lambda, count the tau != lambda in N(lambda,|h|) with
/// chi^tau(lambda-hat) != 0. Reports only; asserts nothing.
inline std::vector<UniqueNeighborCase> unique_neighbor_scan(int n,
                                                            CharacterCache& cache) {
    std::vector<UniqueNeighborCase> out;
    for (const Partition& lambda : partitions_of(n)) {
        Partition hat = principal_hook_partition(lambda);
        bool center_nonzero = character_value(lambda, hat, cache) != 0;
        for (const HookRef& h : all_hooks(lambda)) {
            if (hat.contains_part(h.length)) continue;
            Neighborhood nb = neighborhood(lambda, h);
            std::int64_t cnt = 0;
            for (const auto& [tau, leg] : nb.members)
                if (tau != lambda && character_value(tau, hat, cache) != 0)
                    ++cnt;
            out.push_back(UniqueNeighborCase{lambda, h, cnt, center_nonzero});
        }
    }
    return out;
}

}  // namespace snkron
