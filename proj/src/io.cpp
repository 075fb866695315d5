#include "kn/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kn/canonical.hpp"

namespace kn {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_fail(int line, const std::string& why) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::string matrix_to_text(const page_matrix& m) {
    std::string out = "n=" + std::to_string(m.n) + "\n";
    for (int i = 1; i <= m.n - 2; ++i) {
        for (int j = i + 2; j <= m.n; ++j) {
            if (i == 1 && j == m.n)
                out += '.';
            else
                out += m.at({i, j}) == page::north ? '+' : '-';
        }
        out += '\n';
    }
    return out;
}

page_matrix matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 1;
    if (!std::getline(in, line)) parse_fail(1, "empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("n=", 0) != 0) parse_fail(1, "expected n=<int>, got \"" + line + "\"");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(line.substr(2), &used);
        if (used != line.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        parse_fail(1, "expected n=<int>, got \"" + line + "\"");
    }
    if (n < 4) parse_fail(1, "n must be at least 4, got " + std::to_string(n));

    std::vector<std::pair<chord, page>> entries;
    for (int i = 1; i <= n - 2; ++i) {
        ++lineno;
        if (!std::getline(in, line)) parse_fail(lineno, "missing row for i=" + std::to_string(i));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const int expected = n - i - 1;
        if (static_cast<int>(line.size()) != expected)
            parse_fail(lineno, "row i=" + std::to_string(i) + " needs " + std::to_string(expected) +
                                   " characters, got " + std::to_string(line.size()));
        for (int j = i + 2; j <= n; ++j) {
            char ch = line[static_cast<std::size_t>(j - i - 2)];
            if (i == 1 && j == n) {
                if (ch != '.') parse_fail(lineno, "slot (1,n) must be '.', got '" + std::string(1, ch) + "'");
                continue;
            }
            if (ch == '.')
                parse_fail(lineno, "'.' is only valid at (1,n), found at (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")");
            if (ch != '+' && ch != '-')
                parse_fail(lineno, "expected '+' or '-', got '" + std::string(1, ch) + "'");
            entries.push_back({{i, j}, ch == '+' ? page::north : page::south});
        }
    }
    ++lineno;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) parse_fail(lineno, "unexpected trailing content \"" + line + "\"");
        ++lineno;
    }
    return make_page_matrix(n, entries);
}

nlohmann::ordered_json matrix_to_json(const page_matrix& m) {
    ordered_json chords_json = ordered_json::array();
    for (auto c : chords(m.n))
        chords_json.push_back(
            {{"i", c.i}, {"j", c.j}, {"page", m.at(c) == page::north ? 1 : -1}});
    return ordered_json{{"n", m.n}, {"chords", std::move(chords_json)}};
}

namespace {

int require_int(const ordered_json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw std::runtime_error(std::string("field \"") + field + "\" missing or not an integer");
    return j[field].get<int>();
}

}  // namespace

page_matrix matrix_from_json(const nlohmann::ordered_json& j) {
    int n = require_int(j, "n");
    if (!j.contains("chords") || !j["chords"].is_array())
        throw std::runtime_error("field \"chords\" missing or not an array");
    std::vector<std::pair<chord, page>> entries;
    for (const auto& e : j["chords"]) {
        int i = require_int(e, "i");
        int jj = require_int(e, "j");
        int p = require_int(e, "page");
        if (p != 1 && p != -1)
            throw std::runtime_error("page must be 1 or -1, got " + std::to_string(p));
        entries.push_back({{i, jj}, p == 1 ? page::north : page::south});
    }
    return make_page_matrix(n, entries);
}

nlohmann::ordered_json diagram_to_json(const extended_diagram& d) {
    const int n = d.n();
    ordered_json out;
    out["n"] = n;
    if (d.base == canonical_matrix(n))
        out["base"] = "canonical";
    else
        out["base"] = matrix_to_json(d.base);
    std::vector<vpair> removed;
    for (const auto& r : d.reroutes) removed.push_back({r.edge.i, r.edge.j});
    std::sort(removed.begin(), removed.end());
    ordered_json removed_json = ordered_json::array();
    for (auto [i, j] : removed) removed_json.push_back({i, j});
    out["removed"] = std::move(removed_json);
    ordered_json reroutes_json = ordered_json::array();
    for (const auto& r : d.reroutes)
        reroutes_json.push_back({{"chord", {r.edge.i, r.edge.j}},
                                 {"gap", {r.gap.first, r.gap.second}},
                                 {"north_endpoint", r.north_endpoint},
                                 {"rank", r.rank}});
    out["reroutes"] = std::move(reroutes_json);
    return out;
}

extended_diagram diagram_from_json(const nlohmann::ordered_json& j) {
    int n = require_int(j, "n");
    if (!j.contains("base")) throw std::runtime_error("field \"base\" missing");
    page_matrix base;
    if (j["base"].is_string() && j["base"].get<std::string>() == "canonical")
        base = canonical_matrix(n);
    else if (j["base"].is_object())
        base = matrix_from_json(j["base"]);
    else
        throw std::runtime_error("field \"base\" must be \"canonical\" or a matrix object");
    if (base.n != n) throw std::invalid_argument("base matrix n does not match diagram n");

    if (!j.contains("reroutes") || !j["reroutes"].is_array())
        throw std::runtime_error("field \"reroutes\" missing or not an array");
    extended_diagram d{std::move(base), {}};
    for (const auto& r : j["reroutes"]) {
        if (!r.contains("chord") || !r["chord"].is_array() || r["chord"].size() != 2)
            throw std::runtime_error("reroute field \"chord\" must be a pair");
        if (!r.contains("gap") || !r["gap"].is_array() || r["gap"].size() != 2)
            throw std::runtime_error("reroute field \"gap\" must be a pair");
        chord c{r["chord"][0].get<int>(), r["chord"][1].get<int>()};
        vpair gap{r["gap"][0].get<int>(), r["gap"][1].get<int>()};
        int ne = require_int(r, "north_endpoint");
        int rank = r.contains("rank") ? require_int(r, "rank") : 0;
        d = add_reroute(std::move(d), c, gap, ne, rank);
    }

    std::vector<vpair> removed;
    if (j.contains("removed")) {
        if (!j["removed"].is_array()) throw std::runtime_error("field \"removed\" must be an array");
        for (const auto& e : j["removed"]) {
            if (!e.is_array() || e.size() != 2)
                throw std::runtime_error("entries of \"removed\" must be pairs");
            removed.push_back({e[0].get<int>(), e[1].get<int>()});
        }
    }
    std::sort(removed.begin(), removed.end());
    std::vector<vpair> rerouted;
    for (const auto& r : d.reroutes) rerouted.push_back({r.edge.i, r.edge.j});
    std::sort(rerouted.begin(), rerouted.end());
    if (removed != rerouted)
        throw std::invalid_argument("\"removed\" does not match the reroute chords");
    return d;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

diagram_variant load_diagram(const std::string& path) {
    const std::string text = read_text_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        ordered_json j;
        try {
            j = ordered_json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
        if (j.contains("reroutes")) return diagram_from_json(j);
        return matrix_from_json(j);
    }
    try {
        return matrix_from_text(text);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void save_diagram(const diagram_variant& d, const std::string& path) {
    const bool json_path = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    if (std::holds_alternative<page_matrix>(d)) {
        const auto& m = std::get<page_matrix>(d);
        write_text_file(path, json_path ? matrix_to_json(m).dump(2) + "\n" : matrix_to_text(m));
    } else {
        write_text_file(path, diagram_to_json(std::get<extended_diagram>(d)).dump(2) + "\n");
    }
}

}  // namespace kn
