#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "oracle.hpp"
#include "snkron/character.hpp"
#include "snkron/neighborhood.hpp"

using namespace snkron;

TEST_CASE("small character values") {
    CharacterCache cache;
    CHECK(character_value(Partition{2, 1}, Partition{1, 1, 1}, cache) == 2);
    CHECK(character_value(Partition{2, 1}, Partition{2, 1}, cache) == 0);
    CHECK(character_value(Partition{2, 1}, Partition{3}, cache) == -1);
    for (int n = 1; n <= 8; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(character_value(Partition{std::vector<int>{n}}, mu, cache) == 1);
    CHECK_THROWS_AS(character_value(Partition{2}, Partition{3}, cache),
                    weight_mismatch_error);
}

TEST_CASE("staircase value on its principal hook class") {
    CharacterCache cache;
    // chi^{rho_m}(rho_m-hat) = (-1)^((n-d)/2); for m=4 that is +1
    CHECK(character_value(Partition{4, 3, 2, 1}, Partition{7, 3}, cache) == 1);
    CHECK(character_value(Partition{2, 1}, Partition{3}, cache) == -1);
    for (int n = 1; n <= 10; ++n)
        for (const Partition& mu : partitions_of(n)) {
            if (mu != conjugate(mu)) continue;
            Int v = character_value(mu, principal_hook_partition(mu), cache);
            int d = durfee_size(mu);
            REQUIRE(v == (((n - d) / 2) % 2 == 0 ? 1 : -1));
        }
}

TEST_CASE("matches the memo-free oracle up to n = 8") {
    CharacterCache cache;
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : oracle::partitions(n))
            for (const auto& mu : oracle::partitions(n))
                REQUIRE(character_value(oracle::lift(lam), oracle::lift(mu),
                                        cache) == oracle::chi(lam, mu));
}

TEST_CASE("dimension") {
    CharacterCache cache;
    CHECK(dimension(Partition{9}) == 1);
    CHECK(dimension(Partition{2, 1}) == 2);
    CHECK(dimension(Partition{4, 3, 2, 1}) == 768);
    for (int n = 1; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n)) {
            std::vector<int> ones(n, 1);
            REQUIRE(dimension(lam) ==
                    character_value(lam, Partition(ones), cache));
        }
    // sum of squared dimensions is n!
    for (int n = 1; n <= 20; ++n) {
        Int total = 0;
        for (const Partition& lam : partitions_of(n)) {
            Int d = dimension(lam);
            total = checked_add(total, checked_mul(d, d));
        }
        REQUIRE(total == factorial64(n));
    }
}

TEST_CASE("centralizer orders") {
    CHECK(centralizer_order(Partition{1, 1, 1, 1, 1}) == 120);
    CHECK(centralizer_order(Partition{7}) == 7);
    CHECK(centralizer_order(Partition{2, 1}) == 2);
    // class equation
    for (int n = 1; n <= 10; ++n) {
        Int total = 0;
        for (const Partition& mu : partitions_of(n))
            total += factorial64(n) / centralizer_order(mu);
        REQUIRE(total == factorial64(n));
    }
}

TEST_CASE("character tables") {
    CharacterCache cache;
    auto t1 = character_table(1, cache);
    REQUIRE(t1.order.size() == 1);
    CHECK(t1.values[0][0] == 1);

    auto t3 = character_table(3, cache);
    REQUIRE(t3.order.size() == 3);
    CHECK(t3.order[0] == Partition{3});
    CHECK(t3.order[1] == Partition{2, 1});
    CHECK(t3.order[2] == Partition{1, 1, 1});
    // values[i][j] = chi^{order[j]}(order[i])
    CHECK(t3.values[2][0] == 1);
    CHECK(t3.values[2][1] == 2);
    CHECK(t3.values[2][2] == 1);
    CHECK(t3.values[0][1] == -1);
    CHECK(t3.values[1][1] == 0);

    CHECK_THROWS_AS(character_table(17, cache), cap_exceeded_error);

    // K K^T = diag(z) at n = 8
    CHECK(check_second_orthogonality(8, cache));
}

TEST_CASE("second orthogonality examples") {
    CharacterCache cache;
    auto sum_over = [&](const Partition& mu, const Partition& nu) {
        Int s = 0;
        for (const Partition& lam : partitions_of(3))
            s += character_value(lam, mu, cache) *
                 character_value(lam, nu, cache);
        return s;
    };
    CHECK(sum_over(Partition{2, 1}, Partition{2, 1}) == 2);
    CHECK(sum_over(Partition{3}, Partition{1, 1, 1}) == 0);
    for (int n = 1; n <= 8; ++n) CHECK(check_second_orthogonality(n, cache));
}

TEST_CASE("conjugation twist") {
    CharacterCache cache;
    for (int n = 1; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n))
                REQUIRE(character_value(conjugate(lam), mu, cache) ==
                        class_sign(mu) * character_value(lam, mu, cache));
}

TEST_CASE("cache behaviour") {
    CharacterCache shared;
    CharacterCache fresh;
    // interleaved evaluations with a shared cache match fresh computations
    std::vector<std::pair<Partition, Partition>> queries;
    for (const Partition& lam : partitions_of(7))
        for (const Partition& mu : partitions_of(7))
            queries.push_back({lam, mu});
    for (std::size_t i = 0; i < queries.size(); i += 2)
        character_value(queries[i].first, queries[i].second, shared);
    for (auto& [lam, mu] : queries)
        REQUIRE(character_value(lam, mu, shared) ==
                character_value(lam, mu, fresh));

    // concurrent table construction reproduces the single-thread table
    CharacterCache c1, c4;
    auto a = character_table(9, c1, TableOptions{16, 1});
    auto b = character_table(9, c4, TableOptions{16, 4});
    REQUIRE(a.values == b.values);

    CHECK(character_value_big(Partition{4, 3, 2, 1}, Partition{7, 3}) == 1);
    for (const Partition& mu : partitions_of(6))
        CHECK(character_value_big(Partition{3, 2, 1}, mu) ==
              character_value(Partition{3, 2, 1}, mu, c1));
}

TEST_CASE("cache persistence") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "snkron_cache_test.txt";
    {
        CharacterCache cache;
        character_value(Partition{4, 3, 2, 1}, Partition{7, 3}, cache);
        cache.save(path.string());
    }
    {
        CharacterCache cache;
        REQUIRE(cache.load(path.string()));
        REQUIRE(cache.size() > 0);
        CHECK(character_value(Partition{4, 3, 2, 1}, Partition{7, 3}, cache) == 1);
    }
    {
        std::ofstream out(path);
        out << "some other format v9\n1|2|3\n";
    }
    {
        CharacterCache cache;
        CHECK_FALSE(cache.load(path.string()));
        CHECK(cache.size() == 0);
        CHECK(character_value(Partition{2, 1}, Partition{3}, cache) == -1);
    }
    fs::remove(path);
}

TEST_CASE("n-cap enforcement") {
    CharacterCache small(6);
    CHECK_THROWS_AS(character_value(Partition{7}, Partition{7}, small),
                    cap_exceeded_error);
    CHECK(character_value(Partition{6}, Partition{6}, small) == 1);
}
