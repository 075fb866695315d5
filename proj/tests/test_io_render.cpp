#include <doctest.h>

#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>

#include "kn/canonical.hpp"
#include "kn/core.hpp"
#include "kn/io.hpp"
#include "kn/render.hpp"
#include "kn/rerouted.hpp"

using namespace kn;

namespace {

page_matrix random_matrix(int n, std::mt19937_64& rng) {
    page_matrix m{n, std::vector<page>(static_cast<std::size_t>(chord_count(n)), page::north)};
    for (auto& p : m.pages) p = (rng() & 1) ? page::south : page::north;
    return m;
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("matrix text format is bit exact") {
    CHECK(matrix_to_text(canonical_matrix(5)) == "n=5\n++.\n--\n+\n");
    for (int n : {4, 5, 9, 14}) {
        auto m = canonical_matrix(n);
        CHECK(matrix_from_text(matrix_to_text(m)) == m);
    }
    std::mt19937_64 rng(401);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);
        auto m = random_matrix(n, rng);
        CHECK(matrix_from_text(matrix_to_text(m)) == m);
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
}

TEST_CASE("matrix text parse failures carry line positions") {
    CHECK_THROWS_WITH_AS(static_cast<void>(matrix_from_text("")), doctest::Contains("line 1"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(static_cast<void>(matrix_from_text("m=5\n")), doctest::Contains("n=<int>"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(static_cast<void>(matrix_from_text("n=5\n++.\n--\n")),
                         doctest::Contains("line 4"), std::runtime_error);
    CHECK_THROWS_WITH_AS(static_cast<void>(matrix_from_text("n=5\n++.\n-\n+\n")),
                         doctest::Contains("line 3"), std::runtime_error);
    // '.' anywhere but (1,n), and a letter, both rejected.
    CHECK_THROWS_WITH_AS(static_cast<void>(matrix_from_text("n=5\n++.\n-.\n+\n")),
                         doctest::Contains("(1,n)"), std::runtime_error);
    CHECK_THROWS_AS(static_cast<void>(matrix_from_text("n=5\n+++\n--\n+\n")), std::runtime_error);
    CHECK_THROWS_AS(static_cast<void>(matrix_from_text("n=5\n+x.\n--\n+\n")), std::runtime_error);
    CHECK_THROWS_WITH_AS(static_cast<void>(matrix_from_text("n=5\n++.\n--\n+\nextra\n")),
                         doctest::Contains("trailing"), std::runtime_error);
}

TEST_CASE("matrix json rejects non-chord entries") {
    auto j = nlohmann::ordered_json::parse(
        R"({"n":4,"chords":[{"i":1,"j":3,"page":1},{"i":2,"j":4,"page":1},{"i":1,"j":2,"page":1}]})");
    CHECK_THROWS_WITH_AS(static_cast<void>(matrix_from_json(j)), doctest::Contains("(1,2)"),
                         std::invalid_argument);
    auto bad_page = nlohmann::ordered_json::parse(
        R"({"n":4,"chords":[{"i":1,"j":3,"page":2},{"i":2,"j":4,"page":1}]})");
    CHECK_THROWS_AS(static_cast<void>(matrix_from_json(bad_page)), std::runtime_error);
}

TEST_CASE("diagram json fixture") {
    auto fixture = nlohmann::ordered_json::parse(
        R"({"n":9,"base":"canonical","removed":[[5,9]],)"
        R"("reroutes":[{"chord":[5,9],"gap":[1,2],"north_endpoint":5,"rank":0}]})");
    CHECK(diagram_from_json(fixture) == build_dprime(9));
    auto emitted = diagram_to_json(build_dprime(9));
    CHECK(emitted["base"] == "canonical");
    CHECK(nlohmann::ordered_json::parse(emitted.dump()) == emitted);
    CHECK(diagram_from_json(emitted) == build_dprime(9));

    auto mismatch = fixture;
    mismatch["removed"] = nlohmann::ordered_json::array({{4, 9}});
    CHECK_THROWS_AS(static_cast<void>(diagram_from_json(mismatch)), std::invalid_argument);
}

TEST_CASE("non-canonical bases are embedded in full") {
    std::mt19937_64 rng(433);
    auto m = random_matrix(8, rng);
    auto d = reroute_chord(m, {2, 6}, {3, 4}, 6);
    auto j = diagram_to_json(d);
    CHECK(j["base"].is_object());
    CHECK(diagram_from_json(j) == d);
}

TEST_CASE("file round trips through save and load") {
    auto text_path = tmp_path("kn_io_matrix.txt");
    auto json_path = tmp_path("kn_io_matrix.json");
    auto diagram_path = tmp_path("kn_io_diagram.json");

    auto m = canonical_matrix(9);
    save_diagram(m, text_path);
    auto loaded = load_diagram(text_path);
    REQUIRE(std::holds_alternative<page_matrix>(loaded));
    CHECK(std::get<page_matrix>(loaded) == m);

    save_diagram(m, json_path);
    loaded = load_diagram(json_path);
    REQUIRE(std::holds_alternative<page_matrix>(loaded));
    CHECK(std::get<page_matrix>(loaded) == m);

    auto d = build_dprime(9);
    save_diagram(d, diagram_path);
    loaded = load_diagram(diagram_path);
    REQUIRE(std::holds_alternative<extended_diagram>(loaded));
    CHECK(std::get<extended_diagram>(loaded) == d);

    CHECK_THROWS_AS(static_cast<void>(load_diagram(tmp_path("kn_io_missing.txt"))),
                    std::runtime_error);
    std::filesystem::remove(text_path);
    std::filesystem::remove(json_path);
    std::filesystem::remove(diagram_path);
}

TEST_CASE("svg structural counts match the diagram") {
    for (auto layout : {layout_kind::circle, layout_kind::linear}) {
        render_spec spec;
        spec.layout = layout;

        auto svg13 = render_svg(canonical_matrix(13), spec);
        CHECK(count_of(svg13, "class=\"vertex\"") == 13);
        CHECK(count_of(svg13, "class=\"spine\"") == 13);
        CHECK(count_of(svg13, "class=\"chord ") == 65);
        CHECK(count_of(svg13, "class=\"half-arc ") == 0);
        CHECK(count_of(svg13, "class=\"pierce\"") == 0);

        auto svg9 = render_svg(build_dprime(9), spec);
        CHECK(count_of(svg9, "class=\"vertex\"") == 9);
        CHECK(count_of(svg9, "class=\"spine\"") == 9);
        CHECK(count_of(svg9, "class=\"chord ") == 26);
        CHECK(count_of(svg9, "class=\"half-arc ") == 2);
        CHECK(count_of(svg9, "class=\"pierce\"") == 1);

        auto svg4 = render_svg(canonical_matrix(4), spec);
        CHECK(count_of(svg4, "class=\"vertex\"") == 4);
        CHECK(count_of(svg4, "class=\"chord ") == 2);
    }
}

TEST_CASE("svg output is deterministic and honors options") {
    auto d = build_dprime(9);
    CHECK(render_svg(d) == render_svg(d));
    render_spec bare;
    bare.labels = false;
    bare.size = 512;
    auto svg = render_svg(d, bare);
    CHECK(count_of(svg, "class=\"label\"") == 0);
    CHECK(svg.find("viewBox=\"0 0 512 512\"") != std::string::npos);
    render_spec invalid;
    invalid.size = 0;
    CHECK_THROWS_AS(static_cast<void>(render_svg(d, invalid)), std::invalid_argument);
}
