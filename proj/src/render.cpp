#include "zx/render.hpp"

#include "zx/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace zx {

namespace {

constexpr double kPad = 0.45;  // composite border inset, in units
constexpr double kGap = 0.25;  // spacing between siblings, in units

double dim_size(const structural::DimExpr& e) {
    if (e.kind() == structural::DimExpr::Kind::Const) {
        return static_cast<double>(e.value());
    }
    return 2.0; // symbolic wire counts get a fixed visual weight
}

SceneKind scene_kind(structural::SymKind kind) {
    switch (kind) {
    case structural::SymKind::Empty:
        return SceneKind::Empty;
    case structural::SymKind::Wire:
        return SceneKind::Wire;
    case structural::SymKind::Box:
        return SceneKind::Box;
    case structural::SymKind::Cap:
        return SceneKind::Cap;
    case structural::SymKind::Cup:
        return SceneKind::Cup;
    case structural::SymKind::Swap:
        return SceneKind::Swap;
    case structural::SymKind::ZSpider:
        return SceneKind::ZSpider;
    case structural::SymKind::XSpider:
        return SceneKind::XSpider;
    case structural::SymKind::NWire:
        return SceneKind::NWire;
    case structural::SymKind::MetaVar:
        return SceneKind::MetaVar;
    case structural::SymKind::Stack:
        return SceneKind::Stack;
    case structural::SymKind::Compose:
        return SceneKind::Compose;
    case structural::SymKind::Cast:
        return SceneKind::Cast;
    }
    return SceneKind::Empty;
}

struct Extent {
    double w = 0;
    double h = 0;
};

Extent measure(const structural::SymDiagram& d) {
    using structural::SymKind;
    switch (d.kind()) {
    case SymKind::Empty:
        return {1.0, 0.8};
    case SymKind::Wire:
    case SymKind::Box:
        return {2.0, 1.0};
    case SymKind::Cap:
    case SymKind::Cup:
    case SymKind::Swap:
        return {2.0, 2.0};
    case SymKind::ZSpider:
    case SymKind::XSpider:
        return {2.0, std::max(1.0, std::max(dim_size(d.field_in()), dim_size(d.field_out())))};
    case SymKind::NWire:
        return {2.0, std::max(1.0, dim_size(d.field_in()))};
    case SymKind::MetaVar:
        return {2.0, std::max(1.0, std::max(dim_size(d.field_in()), dim_size(d.field_out())))};
    case SymKind::Stack: {
        const Extent a = measure(d.first());
        const Extent b = measure(d.second());
        return {std::max(a.w, b.w) + 2 * kPad, a.h + b.h + kGap + 2 * kPad};
    }
    case SymKind::Compose: {
        const Extent a = measure(d.first());
        const Extent b = measure(d.second());
        return {a.w + b.w + kGap + 2 * kPad, std::max(a.h, b.h) + 2 * kPad};
    }
    case SymKind::Cast: {
        const Extent a = measure(d.first());
        return {a.w + 2 * kPad, a.h + 2 * kPad};
    }
    }
    return {1.0, 1.0};
}

std::string leaf_label(const structural::SymDiagram& d) {
    using structural::SymKind;
    switch (d.kind()) {
    case SymKind::ZSpider:
    case SymKind::XSpider:
        return d.phase() == Angle::zero() ? "" : d.phase().str();
    case SymKind::NWire:
        return d.field_in().str();
    case SymKind::MetaVar:
        return d.name();
    case SymKind::Cast:
        return d.field_in().str() + ">" + d.field_out().str();
    default:
        return "";
    }
}

Scene place(const structural::SymDiagram& d, double x, double y, double w, double h) {
    using structural::SymKind;
    Scene scene;
    scene.kind = scene_kind(d.kind());
    scene.x = x;
    scene.y = y;
    scene.w = w;
    scene.h = h;
    scene.label = leaf_label(d);

    switch (d.kind()) {
    case SymKind::Stack: {
        const Extent a = measure(d.first());
        const Extent b = measure(d.second());
        const double ix = x + kPad;
        const double iy = y + kPad;
        const double iw = w - 2 * kPad;
        const double ih = h - 2 * kPad - kGap;
        const double ha = ih * (a.h / (a.h + b.h));
        scene.children.push_back(place(d.first(), ix, iy, iw, ha));
        scene.children.push_back(place(d.second(), ix, iy + ha + kGap, iw, ih - ha));
        break;
    }
    case SymKind::Compose: {
        const Extent a = measure(d.first());
        const Extent b = measure(d.second());
        const double ix = x + kPad;
        const double iy = y + kPad;
        const double iw = w - 2 * kPad - kGap;
        const double ih = h - 2 * kPad;
        const double wa = iw * (a.w / (a.w + b.w));
        scene.children.push_back(place(d.first(), ix, iy, wa, ih));
        scene.children.push_back(place(d.second(), ix + wa + kGap, iy, iw - wa, ih));
        break;
    }
    case SymKind::Cast:
        scene.children.push_back(
            place(d.first(), x + kPad, y + kPad, w - 2 * kPad, h - 2 * kPad));
        break;
    default:
        break;
    }
    return scene;
}

void scale_scene(Scene& s, double scale) {
    s.x *= scale;
    s.y *= scale;
    s.w *= scale;
    s.h *= scale;
    for (Scene& child : s.children) {
        scale_scene(child, scale);
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

const char* kind_tag(SceneKind k) {
    switch (k) {
    case SceneKind::Empty:
        return "empty";
    case SceneKind::Wire:
        return "wire";
    case SceneKind::Box:
        return "box";
    case SceneKind::Cap:
        return "cap";
    case SceneKind::Cup:
        return "cup";
    case SceneKind::Swap:
        return "swap";
    case SceneKind::ZSpider:
        return "zspider";
    case SceneKind::XSpider:
        return "xspider";
    case SceneKind::NWire:
        return "nwire";
    case SceneKind::MetaVar:
        return "metavar";
    case SceneKind::Stack:
        return "stack";
    case SceneKind::Compose:
        return "compose";
    case SceneKind::Cast:
        return "cast";
    }
    return "?";
}

void emit_svg(const Scene& s, std::string& out) {
    const double cx = s.x + s.w / 2;
    const double cy = s.y + s.h / 2;
    const std::string tag = kind_tag(s.kind);

    switch (s.kind) {
    case SceneKind::Stack:
        out += "<rect data-kind=\"stack\" x=\"" + fmt(s.x) + "\" y=\"" + fmt(s.y) + "\" width=\"" +
               fmt(s.w) + "\" height=\"" + fmt(s.h) +
               "\" fill=\"none\" stroke=\"#7f8c8d\" stroke-dasharray=\"8,4\"/>\n";
        break;
    case SceneKind::Compose:
        out += "<rect data-kind=\"compose\" x=\"" + fmt(s.x) + "\" y=\"" + fmt(s.y) +
               "\" width=\"" + fmt(s.w) + "\" height=\"" + fmt(s.h) +
               "\" fill=\"none\" stroke=\"#7f8c8d\" stroke-dasharray=\"3,5\"/>\n";
        break;
    case SceneKind::Cast:
        out += "<rect data-kind=\"cast\" x=\"" + fmt(s.x) + "\" y=\"" + fmt(s.y) + "\" width=\"" +
               fmt(s.w) + "\" height=\"" + fmt(s.h) +
               "\" fill=\"none\" stroke=\"#8e44ad\" stroke-dasharray=\"1,3\"/>\n";
        out += "<text data-kind=\"cast-label\" x=\"" + fmt(s.x + 2) + "\" y=\"" + fmt(s.y + 10) +
               "\" font-size=\"9\" fill=\"#8e44ad\">" + s.label + "</text>\n";
        break;
    case SceneKind::Empty:
        out += "<rect data-kind=\"empty\" x=\"" + fmt(cx - 3) + "\" y=\"" + fmt(cy - 3) +
               "\" width=\"6\" height=\"6\" fill=\"none\" stroke=\"#bdc3c7\"/>\n";
        break;
    case SceneKind::Wire:
        out += "<line data-kind=\"wire\" x1=\"" + fmt(s.x) + "\" y1=\"" + fmt(cy) + "\" x2=\"" +
               fmt(s.x + s.w) + "\" y2=\"" + fmt(cy) + "\" stroke=\"#2c3e50\"/>\n";
        break;
    case SceneKind::Box: {
        const double r = std::min(s.w, s.h) * 0.3;
        out += "<line x1=\"" + fmt(s.x) + "\" y1=\"" + fmt(cy) + "\" x2=\"" + fmt(s.x + s.w) +
               "\" y2=\"" + fmt(cy) + "\" stroke=\"#2c3e50\"/>\n";
        out += "<rect data-kind=\"box\" x=\"" + fmt(cx - r) + "\" y=\"" + fmt(cy - r) +
               "\" width=\"" + fmt(2 * r) + "\" height=\"" + fmt(2 * r) +
               "\" fill=\"#fdf2ab\" stroke=\"#f1c40f\"/>\n";
        break;
    }
    case SceneKind::Cap:
        out += "<path data-kind=\"cap\" d=\"M " + fmt(s.x) + " " + fmt(s.y + s.h * 0.25) + " Q " +
               fmt(s.x + s.w * 0.9) + " " + fmt(cy) + " " + fmt(s.x) + " " +
               fmt(s.y + s.h * 0.75) + "\" fill=\"none\" stroke=\"#2c3e50\"/>\n";
        break;
    case SceneKind::Cup:
        out += "<path data-kind=\"cup\" d=\"M " + fmt(s.x + s.w) + " " + fmt(s.y + s.h * 0.25) +
               " Q " + fmt(s.x + s.w * 0.1) + " " + fmt(cy) + " " + fmt(s.x + s.w) + " " +
               fmt(s.y + s.h * 0.75) + "\" fill=\"none\" stroke=\"#2c3e50\"/>\n";
        break;
    case SceneKind::Swap:
        out += "<g data-kind=\"swap\"><line x1=\"" + fmt(s.x) + "\" y1=\"" + fmt(s.y + s.h * 0.25) +
               "\" x2=\"" + fmt(s.x + s.w) + "\" y2=\"" + fmt(s.y + s.h * 0.75) +
               "\" stroke=\"#2c3e50\"/>";
        out += "<line x1=\"" + fmt(s.x) + "\" y1=\"" + fmt(s.y + s.h * 0.75) + "\" x2=\"" +
               fmt(s.x + s.w) + "\" y2=\"" + fmt(s.y + s.h * 0.25) +
               "\" stroke=\"#2c3e50\"/></g>\n";
        break;
    case SceneKind::ZSpider:
    case SceneKind::XSpider: {
        const bool is_z = s.kind == SceneKind::ZSpider;
        const double rx = std::min(s.w * 0.35, 18.0);
        const double ry = std::min(s.h * 0.35, 18.0);
        out += std::string("<ellipse data-kind=\"") + (is_z ? "zspider" : "xspider") +
               "\" cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" rx=\"" + fmt(rx) + "\" ry=\"" +
               fmt(ry) + "\" fill=\"" + (is_z ? "#2ecc71" : "#e74c3c") + "\" stroke=\"" +
               (is_z ? "#1e8449" : "#922b21") + "\"/>\n";
        if (!s.label.empty()) {
            out += "<text x=\"" + fmt(cx) + "\" y=\"" + fmt(cy + 3) +
                   "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#ffffff\">" + s.label +
                   "</text>\n";
        }
        break;
    }
    case SceneKind::NWire:
        out += "<g data-kind=\"nwire\"><line x1=\"" + fmt(s.x) + "\" y1=\"" + fmt(cy - 2) +
               "\" x2=\"" + fmt(s.x + s.w) + "\" y2=\"" + fmt(cy - 2) + "\" stroke=\"#2c3e50\"/>";
        out += "<line x1=\"" + fmt(s.x) + "\" y1=\"" + fmt(cy + 2) + "\" x2=\"" + fmt(s.x + s.w) +
               "\" y2=\"" + fmt(cy + 2) + "\" stroke=\"#2c3e50\"/>";
        out += "<text x=\"" + fmt(cx) + "\" y=\"" + fmt(cy - 5) +
               "\" font-size=\"9\" text-anchor=\"middle\" fill=\"#2c3e50\">" + s.label +
               "</text></g>\n";
        break;
    case SceneKind::MetaVar:
        out += "<rect data-kind=\"metavar\" x=\"" + fmt(s.x + 2) + "\" y=\"" + fmt(s.y + 2) +
               "\" width=\"" + fmt(s.w - 4) + "\" height=\"" + fmt(s.h - 4) +
               "\" fill=\"#ecf0f1\" stroke=\"#95a5a6\"/>\n";
        out += "<text x=\"" + fmt(cx) + "\" y=\"" + fmt(cy + 3) +
               "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#2c3e50\">" + s.label +
               "</text>\n";
        break;
    }
    for (const Scene& child : s.children) {
        emit_svg(child, out);
    }
}

} // namespace

Scene layout(const structural::SymDiagram& d, double scale) {
    sym_dims(d); // reject ill-formed terms up front
    const Extent e = measure(d);
    Scene root = place(d, 0.2, 0.2, e.w, e.h);
    scale_scene(root, scale);
    return root;
}

Scene layout(const Diagram& d, double scale) { return layout(structural::to_sym(d), scale); }

std::string to_svg(const Scene& s) {
    const double width = s.x + s.w + 0.2 * 40;
    const double height = s.y + s.h + 0.2 * 40;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
                      "\" height=\"" + fmt(height) + "\" font-family=\"monospace\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
           "\" fill=\"#ffffff\"/>\n";
    emit_svg(s, out);
    out += "</svg>\n";
    return out;
}

namespace {

struct CharGrid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::string> cells; // UTF-8 glyph per cell

    CharGrid(std::size_t r, std::size_t c) : rows(r), cols(c), cells(r * c, " ") {}

    void put(std::size_t r, std::size_t c, const std::string& glyph) {
        if (r < rows && c < cols) {
            cells[r * cols + c] = glyph;
        }
    }

    void text(std::size_t r, std::size_t c, const std::string& s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            put(r, c + i, std::string(1, s[i]));
        }
    }

    std::string str() const {
        std::string out;
        for (std::size_t r = 0; r < rows; ++r) {
            std::string line;
            for (std::size_t c = 0; c < cols; ++c) {
                line += cells[r * cols + c];
            }
            while (!line.empty() && line.back() == ' ') {
                line.pop_back();
            }
            out += line;
            out += '\n';
        }
        return out;
    }
};

// 10 px per column, 20 px per row at the default 40 px/unit scale.
std::size_t to_col(double x) { return static_cast<std::size_t>(std::lround(x / 10.0)); }
std::size_t to_row(double y) { return static_cast<std::size_t>(std::lround(y / 20.0)); }

void draw_border(CharGrid& grid, const Scene& s, const std::string& hor, const std::string& ver) {
    const std::size_t c0 = to_col(s.x), c1 = to_col(s.x + s.w);
    const std::size_t r0 = to_row(s.y), r1 = to_row(s.y + s.h);
    for (std::size_t c = c0; c <= c1; ++c) {
        grid.put(r0, c, hor);
        grid.put(r1, c, hor);
    }
    for (std::size_t r = r0; r <= r1; ++r) {
        grid.put(r, c0, ver);
        grid.put(r, c1, ver);
    }
}

void emit_ascii(const Scene& s, CharGrid& grid) {
    const std::size_t rc = to_row(s.y + s.h / 2);
    const std::size_t c0 = to_col(s.x), c1 = to_col(s.x + s.w);

    switch (s.kind) {
    case SceneKind::Stack:
        draw_border(grid, s, "┄", "┆"); // ┄ ┆
        break;
    case SceneKind::Compose:
        draw_border(grid, s, "┈", "┊"); // ┈ ┊
        break;
    case SceneKind::Cast:
        draw_border(grid, s, "·", "·"); // ·
        grid.text(to_row(s.y), to_col(s.x) + 1, s.label);
        break;
    case SceneKind::Empty:
        grid.put(rc, (c0 + c1) / 2, "∅"); // ∅
        break;
    case SceneKind::Wire:
        for (std::size_t c = c0; c <= c1; ++c) {
            grid.put(rc, c, "─"); // ─
        }
        break;
    case SceneKind::Box:
        for (std::size_t c = c0; c <= c1; ++c) {
            grid.put(rc, c, "─");
        }
        grid.put(rc, (c0 + c1) / 2, "H");
        break;
    case SceneKind::Cap:
        grid.put(rc, (c0 + c1) / 2, "⊃"); // ⊃
        break;
    case SceneKind::Cup:
        grid.put(rc, (c0 + c1) / 2, "⊂"); // ⊂
        break;
    case SceneKind::Swap:
        grid.put(rc, (c0 + c1) / 2, "╳"); // ╳
        break;
    case SceneKind::ZSpider:
    case SceneKind::XSpider: {
        const std::string head = s.kind == SceneKind::ZSpider ? "Z" : "X";
        const std::string text = s.label.empty() ? head : head + "(" + s.label + ")";
        grid.text(rc, (c0 + c1) / 2 >= text.size() / 2 ? (c0 + c1) / 2 - text.size() / 2 : c0,
                  text);
        break;
    }
    case SceneKind::NWire: {
        for (std::size_t c = c0; c <= c1; ++c) {
            grid.put(rc, c, "═"); // ═
        }
        grid.text(rc, (c0 + c1) / 2, s.label);
        break;
    }
    case SceneKind::MetaVar:
        draw_border(grid, s, "─", "│");
        grid.text(rc, (c0 + c1) / 2, s.label);
        break;
    }
    for (const Scene& child : s.children) {
        emit_ascii(child, grid);
    }
}

} // namespace

std::string to_ascii(const Scene& s) {
    CharGrid grid(to_row(s.y + s.h) + 2, to_col(s.x + s.w) + 2);
    emit_ascii(s, grid);
    return grid.str();
}

} // namespace zx
