#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "kn/core.hpp"
#include "kn/rerouted.hpp"

namespace kn {

// Text format: first line "n=<int>", then one line per row i = 1..n-2 with
// one character per column j = i+2..n: '+' North, '-' South, '.' only at the
// non-chord slot (1,n).
std::string matrix_to_text(const page_matrix& m);
page_matrix matrix_from_text(const std::string& text);

// {"n": 5, "chords": [{"i":1,"j":3,"page":1}, ...]}, page +1 North, -1 South,
// chords in lexicographic order.
nlohmann::ordered_json matrix_to_json(const page_matrix& m);
page_matrix matrix_from_json(const nlohmann::ordered_json& j);

// {"n":9, "base":"canonical"|{matrix json}, "removed":[[i,j],...],
//  "reroutes":[{"chord":[i,j],"gap":[a,b],"north_endpoint":v,"rank":r},...]}.
// "base" collapses to "canonical" exactly when it equals canonical_matrix(n);
// "removed" must coincide with the reroute chords as a set.
nlohmann::ordered_json diagram_to_json(const extended_diagram& d);
extended_diagram diagram_from_json(const nlohmann::ordered_json& j);

using diagram_variant = std::variant<page_matrix, extended_diagram>;

// Sniffs the content: JSON with "reroutes" loads as an extended diagram,
// other JSON as a matrix, anything else as matrix text. Parse failures throw
// std::runtime_error naming the line or field; invalid contents throw
// std::invalid_argument.
diagram_variant load_diagram(const std::string& path);

// Matrices go to text, or JSON when the path ends in ".json"; extended
// diagrams always go to JSON.
void save_diagram(const diagram_variant& d, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace kn
