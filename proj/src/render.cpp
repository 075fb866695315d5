#include "kn/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace kn {

namespace {

struct point {
    double x, y;
};

point lerp(point a, point b, double t) {
    return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

std::string fmt(double v) {
    if (v == 0) v = 0;  // avoid "-0.00"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xy(point p) { return fmt(p.x) + " " + fmt(p.y); }

const char* page_class(page p) { return p == page::north ? "north" : "south"; }

// Where each reroute's w point sits: fraction along its gap, spreading
// same-gap reroutes by rank.
std::vector<double> w_fractions(const extended_diagram& d) {
    std::vector<double> frac(d.reroutes.size());
    std::map<vpair, std::vector<std::pair<int, int>>> by_gap;
    for (std::size_t r = 0; r < d.reroutes.size(); ++r)
        by_gap[d.reroutes[r].gap].push_back({d.reroutes[r].rank, static_cast<int>(r)});
    for (auto& [gap, list] : by_gap) {
        std::sort(list.begin(), list.end());
        for (std::size_t idx = 0; idx < list.size(); ++idx)
            frac[static_cast<std::size_t>(list[idx].second)] =
                static_cast<double>(idx + 1) / (static_cast<double>(list.size()) + 1);
    }
    return frac;
}

class svg_builder {
  public:
    svg_builder(const render_spec& spec, int n) : spec_(spec), n_(n) {
        if (spec.size <= 0) throw std::invalid_argument("canvas size must be positive");
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                 std::to_string(spec.size) + "\" height=\"" + std::to_string(spec.size) +
                 "\" viewBox=\"0 0 " + std::to_string(spec.size) + " " +
                 std::to_string(spec.size) + "\">\n";
        body_ += "<style>\n";
        body_ += ".spine{stroke:#444;fill:none;stroke-width:" + fmt(spec.stroke) + "}\n";
        body_ += ".chord{fill:none;stroke-width:" + fmt(spec.stroke) + "}\n";
        body_ += ".half-arc{fill:none;stroke-width:" + fmt(spec.stroke) + ";stroke-dasharray:6 3}\n";
        body_ += ".north{stroke:#1f6fb4}\n.south{stroke:#c23b22}\n";
        body_ += ".vertex{fill:#222}\n";
        body_ += ".pierce{fill:#fff;stroke:#c23b22;stroke-width:" + fmt(spec.stroke) + "}\n";
        body_ += ".label{font:14px sans-serif;fill:#222;text-anchor:middle}\n";
        body_ += "</style>\n";
    }

    void spine_line(point a, point b) {
        body_ += "<line class=\"spine\" x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" +
                 fmt(b.x) + "\" y2=\"" + fmt(b.y) + "\"/>\n";
    }

    void spine_path(const std::string& d) { body_ += "<path class=\"spine\" d=\"" + d + "\"/>\n"; }

    void chord_path(page p, const std::string& d) {
        body_ += "<path class=\"chord " + std::string(page_class(p)) + "\" d=\"" + d + "\"/>\n";
    }

    void half_arc_path(page p, const std::string& d) {
        body_ += "<path class=\"half-arc " + std::string(page_class(p)) + "\" d=\"" + d + "\"/>\n";
    }

    void vertex(point p) {
        body_ += "<circle class=\"vertex\" cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) +
                 "\" r=\"" + fmt(vertex_radius()) + "\"/>\n";
    }

    void pierce(point p) {
        body_ += "<circle class=\"pierce\" cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) +
                 "\" r=\"" + fmt(vertex_radius() * 0.8) + "\"/>\n";
    }

    void label(point p, int v) {
        body_ += "<text class=\"label\" x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y + 5) + "\">" +
                 std::to_string(v) + "</text>\n";
    }

    std::string finish() { return body_ + "</svg>\n"; }

  private:
    double vertex_radius() const { return std::max(2.5, spec_.size / 200.0); }

    render_spec spec_;
    int n_;
    std::string body_;
};

std::string quad(point a, point c, point b) {
    return "M " + xy(a) + " Q " + xy(c) + " " + xy(b);
}

std::string cubic(point a, point c1, point c2, point b) {
    return "M " + xy(a) + " C " + xy(c1) + " " + xy(c2) + " " + xy(b);
}

point quad_at(point a, point c, point b, double t) {
    double u = 1 - t;
    return {u * u * a.x + 2 * u * t * c.x + t * t * b.x,
            u * u * a.y + 2 * u * t * c.y + t * t * b.y};
}

std::string render_circle(const extended_diagram& d, const render_spec& spec) {
    const int n = d.n();
    const double cx = spec.size / 2.0, cy = spec.size / 2.0;
    const double radius = 0.38 * spec.size;
    const point center{cx, cy};
    auto pt = [&](int v) {
        double a = -std::numbers::pi / 2 + 2 * std::numbers::pi * (v - 1) / n;
        return point{cx + radius * std::cos(a), cy + radius * std::sin(a)};
    };
    auto inward = [&](point p, point q) {
        return cubic(p, lerp(p, center, 0.5), lerp(q, center, 0.5), q);
    };
    auto outward = [&](point p, point q) {
        auto push = [&](point r) { return point{r.x + (r.x - cx) * 0.45, r.y + (r.y - cy) * 0.45}; };
        return cubic(p, push(p), push(q), q);
    };

    svg_builder svg(spec, n);
    for (int v = 1; v <= n; ++v) svg.spine_line(pt(v), pt(v % n + 1));

    for (auto c : chords(n)) {
        if (d.is_rerouted(c)) continue;
        page p = d.base.pages[static_cast<std::size_t>(chord_index(n, c))];
        svg.chord_path(p, p == page::north ? inward(pt(c.i), pt(c.j)) : outward(pt(c.i), pt(c.j)));
    }

    auto frac = w_fractions(d);
    std::vector<point> ws;
    for (std::size_t r = 0; r < d.reroutes.size(); ++r) {
        const auto& rr = d.reroutes[r];
        int a = rr.gap == vpair{1, n} ? n : rr.gap.first;
        point w = lerp(pt(a), pt(a % n + 1), frac[r]);
        ws.push_back(w);
        int ne = rr.north_endpoint;
        int se = ne == rr.edge.i ? rr.edge.j : rr.edge.i;
        svg.half_arc_path(page::north, inward(pt(ne), w));
        svg.half_arc_path(page::south, outward(w, pt(se)));
    }
    for (auto w : ws) svg.pierce(w);
    for (int v = 1; v <= n; ++v) svg.vertex(pt(v));
    if (spec.labels) {
        for (int v = 1; v <= n; ++v) {
            point p = pt(v);
            svg.label({cx + (p.x - cx) * 1.12, cy + (p.y - cy) * 1.12}, v);
        }
    }
    return svg.finish();
}

std::string render_linear(const extended_diagram& d, const render_spec& spec) {
    const int n = d.n();
    const double margin = 0.08 * spec.size;
    const double y0 = spec.size / 2.0;
    const double dx = (spec.size - 2 * margin) / (n - 1);
    auto pt = [&](int v) { return point{margin + dx * (v - 1), y0}; };
    const double bulge = 0.32;
    auto arc = [&](point a, point b, page p) {
        double h = bulge * std::abs(b.x - a.x);
        point c{(a.x + b.x) / 2, p == page::north ? y0 - h : y0 + h};
        return quad(a, c, b);
    };
    // The closing spine edge dips below every South chord.
    const point close_ctrl{spec.size / 2.0, y0 + bulge * dx * (n - 1) * 1.3};

    svg_builder svg(spec, n);
    for (int v = 1; v < n; ++v) svg.spine_line(pt(v), pt(v + 1));
    svg.spine_path(quad(pt(1), close_ctrl, pt(n)));

    for (auto c : chords(n)) {
        if (d.is_rerouted(c)) continue;
        page p = d.base.pages[static_cast<std::size_t>(chord_index(n, c))];
        svg.chord_path(p, arc(pt(c.i), pt(c.j), p));
    }

    auto frac = w_fractions(d);
    std::vector<point> ws;
    for (std::size_t r = 0; r < d.reroutes.size(); ++r) {
        const auto& rr = d.reroutes[r];
        point w = rr.gap == vpair{1, n}
                      ? quad_at(pt(1), close_ctrl, pt(n), frac[r])
                      : lerp(pt(rr.gap.first), pt(rr.gap.second), frac[r]);
        ws.push_back(w);
        int ne = rr.north_endpoint;
        int se = ne == rr.edge.i ? rr.edge.j : rr.edge.i;
        auto half = [&](point a, point b, page p) {
            double h = std::max(bulge * std::abs(b.x - a.x), dx * 0.4);
            point c{(a.x + b.x) / 2, p == page::north ? std::min(a.y, b.y) - h
                                                      : std::max(a.y, b.y) + h};
            return quad(a, c, b);
        };
        svg.half_arc_path(page::north, half(pt(ne), w, page::north));
        svg.half_arc_path(page::south, half(w, pt(se), page::south));
    }
    for (auto w : ws) svg.pierce(w);
    for (int v = 1; v <= n; ++v) svg.vertex(pt(v));
    if (spec.labels)
        for (int v = 1; v <= n; ++v) svg.label({pt(v).x, y0 + 24}, v);
    return svg.finish();
}

}  // namespace

std::string render_svg(const extended_diagram& d, const render_spec& spec) {
    return spec.layout == layout_kind::circle ? render_circle(d, spec) : render_linear(d, spec);
}

std::string render_svg(const page_matrix& m, const render_spec& spec) {
    return render_svg(extended_diagram{m, {}}, spec);
}

}  // namespace kn
