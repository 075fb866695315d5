#pragma once

#include <string>

#include "kn/core.hpp"
#include "kn/rerouted.hpp"

namespace kn {

enum class layout_kind { circle, linear };

struct render_spec {
    layout_kind layout = layout_kind::circle;
    int size = 800;  // square canvas edge, pixels; must be positive
    bool labels = true;
    double stroke = 1.5;
};

// SVG picture of the diagram: circle layout puts the spine on a regular
// n-gon with North chords inside and South outside; linear layout puts the
// spine on a horizontal axis with North above and South below (the closing
// spine edge (1,n) dips under everything). Rerouted chords appear as two
// half-arc paths through their w point, with a marker on the pierced spine
// edge. The picture is evidence only; nothing is computed from it.
std::string render_svg(const page_matrix& m, const render_spec& spec = {});
std::string render_svg(const extended_diagram& d, const render_spec& spec = {});

}  // namespace kn
