#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "kn/canonical.hpp"
#include "kn/core.hpp"
#include "kn/cross_index.hpp"
#include "kn/freeness.hpp"
#include "kn/optimizer.hpp"
#include "kn/rerouted.hpp"

using namespace kn;

namespace {

std::string bits(const page_matrix& m) {
    std::string s;
    for (auto p : m.pages) s += p == page::south ? '1' : '0';
    return s;
}

page_matrix random_matrix(int n, std::mt19937_64& rng) {
    page_matrix m{n, std::vector<page>(static_cast<std::size_t>(chord_count(n)), page::north)};
    for (auto& p : m.pages) p = (rng() & 1) ? page::south : page::north;
    return m;
}

}  // namespace

TEST_CASE("exhaustive minima and canonical witnesses") {
    struct expected {
        int n;
        std::int64_t min;
        const char* witness;
    };
    for (auto [n, min, witness] : {expected{4, 0, "01"},
                                   expected{5, 1, "00011"},
                                   expected{6, 3, "000011110"},
                                   expected{7, 9, "00000011011110"},
                                   expected{8, 18, "00001001111111110000"}}) {
        auto result = exhaustive_min(n);
        CHECK(result.best_value == min);
        CHECK(result.best_value == z_value(n));
        CHECK(bits(result.witness) == witness);
        CHECK(epsilon(result.witness) == result.best_value);
        CHECK(result.stats.assignments_examined == std::int64_t{1} << chord_count(n));
        CHECK(result.mode == search_mode::exhaustive);

        // The minimizer set is closed under a global page flip.
        auto flipped = result.witness;
        for (auto& p : flipped.pages) p = opposite(p);
        CHECK(epsilon(flipped) == result.best_value);
    }
}

TEST_CASE("exhaustive cap refusal names the search size") {
    CHECK_THROWS_WITH_AS(static_cast<void>(exhaustive_min(9)), doctest::Contains("2^27"),
                         std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(exhaustive_min(3)), std::invalid_argument);
}

TEST_CASE("annealing reaches the floor bound at n=13") {
    auto result = stochastic_min(13, 1);
    CHECK(result.best_value == 225);
    CHECK_FALSE(result.inconsistent);
    CHECK(epsilon(result.witness) == result.best_value);
    CHECK(result.mode == search_mode::stochastic);
}

TEST_CASE("annealing is reproducible from its seed") {
    anneal_params small;
    small.restarts = 3;
    small.steps = 2000;
    auto a = stochastic_min(10, 12345, small);
    auto b = stochastic_min(10, 12345, small);
    CHECK(a.best_value == b.best_value);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.assignments_examined == b.stats.assignments_examined);
}

TEST_CASE("seeding with the canonical matrix is never worse") {
    anneal_params params;
    params.start = canonical_matrix(9);
    params.restarts = 2;
    params.steps = 5000;
    auto result = stochastic_min(9, 7, params);
    CHECK(result.best_value == 36);

    for (int n : {6, 9, 12}) {
        anneal_params frozen;
        frozen.start = canonical_matrix(n);
        frozen.steps = 0;
        frozen.restarts = 1;
        CHECK(stochastic_min(n, 99, frozen).best_value == z_value(n));
    }
}

TEST_CASE("annealing never reports below the floor bound") {
    anneal_params quick;
    quick.restarts = 2;
    quick.steps = 3000;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        for (int n : {6, 9, 11}) {
            auto result = stochastic_min(n, seed, quick);
            CHECK(result.best_value >= z_value(n));
            CHECK_FALSE(result.inconsistent);
        }
    }
}

TEST_CASE("delta_epsilon basics") {
    auto m4 = make_page_matrix(4, {{{1, 3}, page::north}, {{2, 4}, page::north}});
    CHECK(delta_epsilon(m4, {1, 3}) == -1);
    CHECK_THROWS_AS(static_cast<void>(delta_epsilon(m4, {1, 4})), std::invalid_argument);

    std::mt19937_64 rng(311);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        auto m = random_matrix(n, rng);
        auto ch = chords(n);
        chord c = ch[rng() % ch.size()];
        auto delta = delta_epsilon(m, c);
        auto flipped = m;
        flipped.set(c, opposite(m.at(c)));
        CHECK(delta + delta_epsilon(flipped, c) == 0);  // involution
    }
}

TEST_CASE("delta_epsilon matches full recomputation on 500 flips") {
    std::mt19937_64 rng(331);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        auto m = random_matrix(n, rng);
        auto ch = chords(n);
        chord c = ch[rng() % ch.size()];
        auto before = epsilon(m);
        auto flipped = m;
        flipped.set(c, opposite(m.at(c)));
        CHECK(delta_epsilon(m, c) == epsilon(flipped) - before);
    }
}

TEST_CASE("n=7 reroute witness is pinned") {
    auto found = reroute_witness_search(7);
    REQUIRE(found.has_value());
    CHECK(found->mode == search_mode::reroute);
    CHECK(found->best_value == 9);
    CHECK(bits(found->witness) == "00000011011110");
    REQUIRE(found->rerouted.has_value());
    REQUIRE(found->rerouted->reroutes.size() == 1);
    const auto& r = found->rerouted->reroutes[0];
    CHECK(r.edge == chord{1, 4});
    CHECK(r.gap == vpair{5, 6});
    CHECK(r.north_endpoint == 1);
    CHECK(r.rank == 0);
    CHECK(found->tree ==
          std::vector<vpair>{{6, 7}, {1, 7}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});

    // Re-verify every claimed property independently of the search.
    auto report = extended_crossing_report(*found->rerouted);
    CHECK(report.total == 9);
    CHECK(find_free_hamiltonian_cycle(*found->rerouted).status ==
          cycle_search_status::absent);
    CHECK(tree_is_crossing_free(*found->rerouted, found->tree));
}

TEST_CASE("no single-reroute witness exists at n=5") {
    CHECK_FALSE(reroute_witness_search(5).has_value());
}

TEST_CASE("n=9 reroute witness search succeeds") {
    auto found = reroute_witness_search(9);
    REQUIRE(found.has_value());
    CHECK(found->best_value == z_value(9));
    CHECK(epsilon(found->witness) == z_value(9));
    auto report = extended_crossing_report(*found->rerouted);
    CHECK(report.total == z_value(9));
    CHECK(find_free_hamiltonian_cycle(*found->rerouted).status ==
          cycle_search_status::absent);
    CHECK(tree_is_crossing_free(*found->rerouted, found->tree));
}

TEST_CASE("reroute witness search refuses beyond its cap") {
    CHECK_THROWS_AS(static_cast<void>(reroute_witness_search(10)), std::invalid_argument);
}
