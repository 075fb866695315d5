#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kn/canonical.hpp"
#include "kn/core.hpp"
#include "kn/cross_index.hpp"

using namespace kn;

namespace {

page_matrix random_matrix(int n, std::mt19937_64& rng) {
    page_matrix m{n, std::vector<page>(static_cast<std::size_t>(chord_count(n)), page::north)};
    for (auto& p : m.pages) p = (rng() & 1) ? page::south : page::north;
    return m;
}

page_matrix uniform_matrix(int n, page p) {
    return {n, std::vector<page>(static_cast<std::size_t>(chord_count(n)), p)};
}

// The independent route: plain predicate double loop, no floor arithmetic.
std::int64_t epsilon_oracle(const page_matrix& m) {
    auto ch = chords(m.n);
    std::int64_t total = 0;
    for (std::size_t a = 0; a < ch.size(); ++a)
        for (std::size_t b = a + 1; b < ch.size(); ++b)
            if (m.pages[a] == m.pages[b] && chords_interleave(m.n, ch[a], ch[b])) ++total;
    return total;
}

page_matrix flipped(page_matrix m) {
    for (auto& p : m.pages) p = opposite(p);
    return m;
}

}  // namespace

TEST_CASE("epsilon pinned examples") {
    CHECK(epsilon(canonical_matrix(7)) == 9);
    CHECK(epsilon(uniform_matrix(4, page::north)) == 1);
    CHECK(epsilon(make_page_matrix(4, {{{1, 3}, page::north}, {{2, 4}, page::south}})) == 0);
    CHECK(epsilon(uniform_matrix(5, page::north)) == 5);
}

TEST_CASE("epsilon equals the predicate-loop oracle on random matrices") {
    std::mt19937_64 rng(101);
    int checked = 0;
    while (checked < 220) {
        int n = 4 + static_cast<int>(rng() % 9);  // 4..12
        auto m = random_matrix(n, rng);
        CHECK(epsilon(m) == epsilon_oracle(m));
        ++checked;
    }
}

TEST_CASE("sigma worked examples") {
    auto m14 = canonical_matrix(14);
    CHECK(sigma(m14, {1, 7}) == 15);
    CHECK(sigma(m14, {2, 10}) == 4);
    CHECK(sigma(canonical_matrix(5), {3, 5}) == 0);  // no l > 5 exists, constraint set empty
    auto m9 = canonical_matrix(9);
    CHECK(sigma_tilde(m9, {2, 9}) == 2);
    CHECK(sigma_tilde(m9, {1, 7}) == 0);  // no k < 1
    CHECK(sigma_tilde(m9, {5, 9}) == 6);
}

TEST_CASE("edge crossing counts") {
    auto m9 = canonical_matrix(9);
    CHECK(edge_crossing_count(m9, {1, 5}) == 3);
    CHECK(edge_crossing_count(m9, {5, 9}) == 6);
    CHECK_THROWS_AS(edge_crossing_count(m9, {1, 2}), std::invalid_argument);  // spine edge

    // A chord alone on its page crosses nothing.
    auto lonely = uniform_matrix(6, page::north);
    lonely.set({2, 5}, page::south);
    CHECK(edge_crossing_count(lonely, {2, 5}) == 0);
}

TEST_CASE("sigma decomposition and per-edge consistency") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        auto m = random_matrix(n, rng);
        std::int64_t sigma_sum = 0, c_sum = 0;
        for (auto c : chords(n)) {
            sigma_sum += sigma(m, c);
            c_sum += edge_crossing_count(m, c);
        }
        auto eps = epsilon(m);
        CHECK(sigma_sum == eps);
        CHECK(c_sum == 2 * eps);
    }
}

TEST_CASE("crossing report invariants") {
    auto report7 = make_crossing_report(canonical_matrix(7));
    CHECK(report7.total == 9);
    std::int64_t sum = 0;
    for (const auto& [e, c] : report7.per_edge) sum += c;
    CHECK(sum == 18);
    CHECK(report7.total == static_cast<std::int64_t>(report7.pairs.size()));

    auto report4 = make_crossing_report(
        make_page_matrix(4, {{{1, 3}, page::north}, {{2, 4}, page::south}}));
    CHECK(report4.total == 0);
    CHECK(report4.pairs.empty());

    CHECK(make_crossing_report(canonical_matrix(13)).total == 225);
}

TEST_CASE("report lists every edge and covers spine edges with zero") {
    auto m = canonical_matrix(8);
    auto report = make_crossing_report(m);
    CHECK(report.per_edge.size() == chords(8).size() + 8);
    for (auto e : spine_edges(8)) CHECK(report.count_of(e) == 0);
    CHECK_THROWS_AS(report.count_of({1, 1}), std::invalid_argument);
    // count_of accepts either endpoint order
    CHECK(report.count_of({5, 2}) == report.count_of({2, 5}));
}

TEST_CASE("every reported pair is a same-page interleaving pair") {
    std::mt19937_64 rng(151);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        auto m = random_matrix(n, rng);
        auto report = make_crossing_report(m);
        for (auto [a, b] : report.pairs) {
            chord ca{a.first, a.second}, cb{b.first, b.second};
            CHECK(chords_interleave(n, ca, cb));
            CHECK(m.at(ca) == m.at(cb));
        }
    }
}

TEST_CASE("page flip symmetry") {
    std::mt19937_64 rng(181);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        auto m = random_matrix(n, rng);
        auto f = flipped(m);
        CHECK(epsilon(m) == epsilon(f));
        auto rm = make_crossing_report(m), rf = make_crossing_report(f);
        CHECK(rm.per_edge == rf.per_edge);
        CHECK(rm.pairs == rf.pairs);
    }
}

TEST_CASE("epsilon never beats the floor bound") {
    // Exhaustively for tiny n, on samples beyond.
    for (int n = 4; n <= 6; ++n) {
        int c = chord_count(n);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << c); ++bits) {
            page_matrix m{n, std::vector<page>(static_cast<std::size_t>(c), page::north)};
            for (int k = 0; k < c; ++k)
                if ((bits >> k) & 1) m.pages[static_cast<std::size_t>(k)] = page::south;
            CHECK(epsilon(m) >= z_value(n));
        }
    }
    std::mt19937_64 rng(191);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 7 + static_cast<int>(rng() % 8);
        CHECK(epsilon(random_matrix(n, rng)) >= z_value(n));
    }
}
