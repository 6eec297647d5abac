#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snkron/character.hpp"
#include "snkron/errors.hpp"
#include "snkron/neighborhood.hpp"
#include "snkron/parallel.hpp"
#include "snkron/partition.hpp"

namespace snkron {

namespace detail {

struct ClassData {
    std::vector<Partition> classes;
    std::vector<Int> sizes;  // n!/z
};

// shared per-weight class lists; class sizes need n <= 20 to stay in Int
inline const ClassData& class_data_for(int n) {
    if (n > 20)
        throw cap_exceeded_error(
            "class-size table cap (20) exceeded at n = " + std::to_string(n));
    static std::mutex mutex;
    static std::map<int, ClassData> store;
    std::lock_guard lock(mutex);
    auto it = store.find(n);
    if (it == store.end()) {
        ClassData cd;
        Int nf = factorial64(n);
        for (const Partition& mu : partitions_of(n)) {
            cd.classes.push_back(mu);
            cd.sizes.push_back(nf / centralizer_order(mu));
        }
        it = store.emplace(n, std::move(cd)).first;
    }
    return it->second;
}

}  // namespace detail

namespace detail {

inline BigInt kron_sum_big(const ClassData& cd, const Partition& lambda,
                           const Partition& mu, const Partition& nu,
                           CharacterCache& cache) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < cd.classes.size(); ++i)
        acc += BigInt(cd.sizes[i]) *
               character_value(lambda, cd.classes[i], cache) *
               character_value(mu, cd.classes[i], cache) *
               character_value(nu, cd.classes[i], cache);
    return acc;
}

// throws arithmetic_overflow_error when 64 bits are not enough
inline Int kron_sum_64(const ClassData& cd, const Partition& lambda,
                       const Partition& mu, const Partition& nu,
                       CharacterCache& cache) {
    Int acc = 0;
    for (std::size_t i = 0; i < cd.classes.size(); ++i) {
        Int term = checked_mul(
            checked_mul(cd.sizes[i],
                        character_value(lambda, cd.classes[i], cache)),
            checked_mul(character_value(mu, cd.classes[i], cache),
                        character_value(nu, cd.classes[i], cache)));
        acc = checked_add(acc, term);
    }
    return acc;
}

}  // namespace detail

/// g(lambda, mu, nu) = (1/n!) * sum over classes |C_rho| chi chi chi, with
/// an exact-divisibility check. Accumulation runs in checked 64-bit when
/// that provably suffices (n <= 15, since max|chi| * n! < 2^63) and
/// escalates to arbitrary width otherwise.
inline Int kronecker_coefficient(const Partition& lambda, const Partition& mu,
                                 const Partition& nu, CharacterCache& cache) {
    if (lambda.weight() != mu.weight() || mu.weight() != nu.weight())
        throw weight_mismatch_error("kronecker_coefficient: unequal weights");
    int n = static_cast<int>(lambda.weight());
    const detail::ClassData& cd = detail::class_data_for(n);
    if (n <= 15) {
        Int acc = detail::kron_sum_64(cd, lambda, mu, nu, cache);
        Int nf = factorial64(n);
        if (acc % nf != 0)
            throw error("kronecker_coefficient: sum not divisible by n!");
        Int g = acc / nf;
        if (g < 0) throw error("kronecker_coefficient: negative multiplicity");
        return g;
    }
    BigInt acc = detail::kron_sum_big(cd, lambda, mu, nu, cache);
    BigInt nf = big_factorial(n);
    if (acc % nf != 0)
        throw error("kronecker_coefficient: sum not divisible by n!");
    BigInt g = acc / nf;
    if (g < 0) throw error("kronecker_coefficient: negative multiplicity");
    return static_cast<Int>(g);
}

/// Pak et al.'s criterion: for self-conjugate mu, chi^lambda(mu-hat) != 0
/// is sufficient for g(lambda, mu, mu) > 0.
inline bool pak_positive(const Partition& lambda, const Partition& mu,
                         CharacterCache& cache) {
    if (lambda.weight() != mu.weight())
        throw weight_mismatch_error("pak_positive: |lambda| != |mu|");
    if (!is_self_conjugate(mu))
        throw not_self_conjugate_error("pak_positive: mu must be self-conjugate");
    return character_value(lambda, principal_hook_partition(mu), cache) != 0;
}

/// All lambda with g(lambda, mu, mu) > 0, with multiplicities.
inline std::map<Partition, Int> tensor_square_support(const Partition& mu,
                                                      CharacterCache& cache,
                                                      int threads = 1) {
    int n = static_cast<int>(mu.weight());
    const detail::ClassData& cd = detail::class_data_for(n);
    std::size_t d = cd.classes.size();
    std::vector<Int> squares(d);
    for (std::size_t i = 0; i < d; ++i) {
        Int chi = character_value(mu, cd.classes[i], cache);
        squares[i] = checked_mul(chi, chi);
    }
    std::vector<Partition> lambdas = cd.classes;
    std::vector<Int> coeffs(d, 0);
    BigInt nf = big_factorial(n);
    std::atomic<bool> divisible{true};
    parallel_for(d, threads, [&](std::size_t j) {
        BigInt acc = 0;
        for (std::size_t i = 0; i < d; ++i)
            acc += BigInt(cd.sizes[i]) * squares[i] *
                   character_value(lambdas[j], cd.classes[i], cache);
        if (acc % nf != 0) {
            divisible.store(false);
            return;
        }
        coeffs[j] = static_cast<Int>(BigInt(acc / nf));
    });
    if (!divisible.load())
        throw error("tensor_square_support: sum not divisible by n!");
    std::map<Partition, Int> support;
    for (std::size_t j = 0; j < d; ++j)
        if (coeffs[j] > 0) support.emplace(lambdas[j], coeffs[j]);
    return support;
}

struct SaxlReport {
    int k = 0;
    int n = 0;
    std::int64_t total = 0;          // |P(n)|
    std::int64_t support_size = 0;   // lambdas with g > 0
    std::int64_t pak_certified = 0;  // lambdas with chi^lambda(rho-hat) != 0
    std::vector<Partition> misses;   // lambdas with g = 0 (expected empty)

    bool ok() const { return misses.empty(); }
};

/// Tensor-square scan for the staircase rho_k.
inline SaxlReport saxl_check(int k, CharacterCache& cache, int threads = 1) {
    SaxlReport report;
    report.k = k;
    Partition rho = staircase(k);
    report.n = static_cast<int>(rho.weight());
    Partition hat = principal_hook_partition(rho);
    auto support = tensor_square_support(rho, cache, threads);
    report.support_size = static_cast<std::int64_t>(support.size());
    for (const Partition& lambda : partitions_of(report.n)) {
        ++report.total;
        if (!support.count(lambda)) report.misses.push_back(lambda);
        if (character_value(lambda, hat, cache) != 0) ++report.pak_certified;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Rosas hook table
// ---------------------------------------------------------------------------

/// (a, 1^b) with a >= 1, b >= 0.
struct HookShape {
    int a = 1;
    int b = 0;

    std::int64_t weight() const { return a + b; }
    Partition to_partition() const {
        std::vector<int> parts{a};
        for (int i = 0; i < b; ++i) parts.push_back(1);
        return Partition(std::move(parts));
    }
    HookShape conj() const { return HookShape{b + 1, a - 1}; }

    static std::optional<HookShape> from_partition(const Partition& p) {
        if (p.empty()) return std::nullopt;
        for (int i = 2; i <= p.size(); ++i)
            if (p.part(i) != 1) return std::nullopt;
        return HookShape{p.part(1), p.size() - 1};
    }

    friend bool operator==(const HookShape& x, const HookShape& y) {
        return x.a == y.a && x.b == y.b;
    }
};

/// (a, b, 2^c, 1^d) with a >= b >= 2.
struct NearHookShape {
    int a = 2;
    int b = 2;
    int c = 0;
    int d = 0;
};

inline std::optional<NearHookShape> classify_near_hook(const Partition& p) {
    if (p.size() < 2 || p.part(2) < 2) return std::nullopt;
    NearHookShape s;
    s.a = p.part(1);
    s.b = p.part(2);
    for (int i = 3; i <= p.size(); ++i) {
        if (p.part(i) == 2) {
            if (s.d > 0) return std::nullopt;
            ++s.c;
        } else if (p.part(i) == 1) {
            ++s.d;
        } else {
            return std::nullopt;
        }
    }
    return s;
}

namespace detail {

enum class RosasColumn { tau_tau, tau_tauconj, alpha_alpha, alphatilde_alpha };

// Row lookup of the hook-pair Kronecker table; value depends only on the
// shape class of lambda.
inline Int rosas_table_value(RosasColumn col, const Partition& lambda) {
    auto pick = [&](Int tt, Int ttp, Int aa, Int ata) {
        switch (col) {
            case RosasColumn::tau_tau: return tt;
            case RosasColumn::tau_tauconj: return ttp;
            case RosasColumn::alpha_alpha: return aa;
            case RosasColumn::alphatilde_alpha: return ata;
        }
        return Int(0);
    };
    if (auto hook = HookShape::from_partition(lambda)) {
        if (hook->b == 0) return pick(1, 0, 1, 0);
        if (hook->a == 1) return pick(0, 1, 1, 0);
        return pick(1, 1, 1, 1);
    }
    if (auto near = classify_near_hook(lambda)) {
        if (near->d == 0 && near->a == near->b) return pick(1, 1, 2, 0);
        if (near->d > 0 && near->a == near->b) return pick(1, 2, 2, 1);
        if (near->d == 0) return pick(2, 1, 2, 1);
        return pick(2, 2, 2, 2);
    }
    return 0;  // "Others"
}

// Recognize which tabulated pair (alpha, beta) instantiates, in either
// argument order: (tau,tau), (tau,tau'), (alpha,alpha), (alphatilde,alpha).
inline std::optional<RosasColumn> rosas_pair(const HookShape& x,
                                             const HookShape& y) {
    if (x == y) {
        if (x.a == x.b + 2) return RosasColumn::tau_tau;
        if (x.a == x.b + 1) return RosasColumn::alpha_alpha;
        return std::nullopt;
    }
    if ((x.a == x.b + 2 && y == x.conj()) || (y.a == y.b + 2 && x == y.conj()))
        return RosasColumn::tau_tauconj;
    if (x.weight() == y.weight()) {
        if (x.a == x.b + 3 && y.a == y.b + 1)
            return RosasColumn::alphatilde_alpha;
        if (y.a == y.b + 3 && x.a == x.b + 1)
            return RosasColumn::alphatilde_alpha;
    }
    return std::nullopt;
}

}  // namespace detail

/// Closed-form g(alpha, beta, lambda) for the tabulated hook pairs
/// (k+2,1^k) x itself or its conjugate, (k+1,1^k) x itself, and
/// (k+2,1^(k-1)) x (k+1,1^k), including their weight-shifted analogues.
/// Any other pair raises unsupported_pair_error; use kronecker_coefficient.
inline Int rosas_hook(const HookShape& alpha, const HookShape& beta,
                      const Partition& lambda) {
    if (alpha.weight() != beta.weight() || alpha.weight() != lambda.weight())
        throw weight_mismatch_error("rosas_hook: unequal weights");
    auto col = detail::rosas_pair(alpha, beta);
    if (!col)
        throw unsupported_pair_error(
            "rosas_hook: pair not tabulated; use kronecker_coefficient");
    return detail::rosas_table_value(*col, lambda);
}

// ---------------------------------------------------------------------------
// Box moves and the Littlewood identity
// ---------------------------------------------------------------------------

/// lambda with one removable box deleted; one result per distinct part size.
inline std::vector<Partition> remove_box(const Partition& lambda) {
    std::vector<Partition> out;
    for (int i = 1; i <= lambda.size(); ++i) {
        if (lambda.part(i) == lambda.part(i + 1)) continue;
        std::vector<int> parts = lambda.parts();
        if (--parts[i - 1] == 0) parts.pop_back();
        out.emplace_back(std::move(parts));
    }
    return out;
}

/// lambda with one addable box appended.
inline std::vector<Partition> add_box(const Partition& lambda) {
    std::vector<Partition> out;
    for (int i = 1; i <= lambda.size() + 1; ++i) {
        if (i > 1 && lambda.part(i) >= lambda.part(i - 1)) continue;
        std::vector<int> parts = lambda.parts();
        if (i <= lambda.size())
            ++parts[i - 1];
        else
            parts.push_back(1);
        out.emplace_back(std::move(parts));
    }
    return out;
}

/// (s_alpha s_1) * s_gamma = sum over eta in gamma-minus-box of
/// (s_eta * s_alpha) s_1, compared coefficientwise on the Schur basis,
/// together with the conjugation identity on the expanded pairs.
inline bool littlewood_identity_check(const Partition& alpha,
                                      const Partition& gamma,
                                      CharacterCache& cache) {
    if (alpha.weight() + 1 != gamma.weight())
        throw weight_mismatch_error(
            "littlewood_identity_check: need |alpha| + 1 = |gamma|");
    int n = static_cast<int>(gamma.weight());
    std::vector<Partition> up = add_box(alpha);
    std::vector<Partition> down = remove_box(gamma);
    for (const Partition& lambda : partitions_of(n)) {
        Int lhs = 0;
        for (const Partition& nu : up)
            lhs = checked_add(lhs, kronecker_coefficient(nu, gamma, lambda, cache));
        Int rhs = 0;
        for (const Partition& eta : down)
            for (const Partition& kappa : remove_box(lambda))
                rhs = checked_add(rhs,
                                  kronecker_coefficient(eta, alpha, kappa, cache));
        if (lhs != rhs) return false;
        for (const Partition& nu : up)
            if (kronecker_coefficient(nu, gamma, lambda, cache) !=
                kronecker_coefficient(conjugate(nu), conjugate(gamma), lambda,
                                      cache))
                return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// The gamma = (k+1,2,1^(k-1)) tensor square
// ---------------------------------------------------------------------------

/// g(gamma, gamma, lambda) from the six-term hook-table expression: a double
/// sum over single-box removals plus the two tau terms. No character values
/// are computed.
inline Int gamma_square_formula(int k, const Partition& lambda) {
    if (k < 1) throw error("gamma_square_formula: k must be >= 1");
    if (lambda.weight() != 2 * k + 2)
        throw weight_mismatch_error("gamma_square_formula: |lambda| != 2k+2");
    using detail::RosasColumn;
    using detail::rosas_table_value;
    Int total = 0;
    for (const Partition& sigma : remove_box(lambda)) {
        Int inner = 0;
        for (const Partition& nu : remove_box(sigma))
            inner = checked_add(
                inner,
                2 * (rosas_table_value(RosasColumn::tau_tau, nu) +
                     rosas_table_value(RosasColumn::tau_tauconj, nu)));
        inner -= 3 * rosas_table_value(RosasColumn::alpha_alpha, sigma) +
                 4 * rosas_table_value(RosasColumn::alphatilde_alpha, sigma);
        total = checked_add(total, inner);
    }
    total = checked_add(
        total, 2 * (rosas_table_value(RosasColumn::tau_tau, lambda) +
                    rosas_table_value(RosasColumn::tau_tauconj, lambda)));
    return total;
}

enum class SupportPrediction { positive, zero };

/// Shape rule for the support of the gamma tensor square: positive iff
/// d(lambda) <= 2, or d(lambda) = 3 with third principal hooklength 1 or 2.
inline SupportPrediction gamma_square_support_classifier(int k,
                                                         const Partition& lambda) {
    if (lambda.weight() != 2 * k + 2)
        throw weight_mismatch_error(
            "gamma_square_support_classifier: |lambda| != 2k+2");
    int d = durfee_size(lambda);
    if (d <= 2) return SupportPrediction::positive;
    if (d == 3) {
        int third = principal_hook_partition(lambda).part(3);
        if (third == 1 || third == 2) return SupportPrediction::positive;
    }
    return SupportPrediction::zero;
}

/// Exact |A| and |B| for gamma_1 = (k+1,1^k) (which = 1) or
/// gamma_2 = (k+1,2,1^(k-1)) (which = 2):
/// A = support of the tensor square, B = nonzero characters on the
/// principal hook class.
inline std::pair<std::int64_t, std::int64_t> effectiveness_counts(
    int k, int which, CharacterCache& cache, int threads = 1) {
    if (which != 1 && which != 2)
        throw error("effectiveness_counts: which must be 1 or 2");
    Partition g = (which == 1)
                      ? HookShape{k + 1, k}.to_partition()
                      : gamma_partition(k);
    int n = static_cast<int>(g.weight());
    std::int64_t a =
        static_cast<std::int64_t>(tensor_square_support(g, cache, threads).size());
    std::int64_t b = count_nonzero_on(principal_hook_partition(g), 0, n, n, cache);
    return {a, b};
}

}  // namespace snkron
