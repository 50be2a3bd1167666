#pragma once

#include "zx/diagram.hpp"
#include "zx/sym.hpp"

#include <string>
#include <vector>

namespace zx {

enum class SceneKind {
    Empty,
    Wire,
    Box,
    Cap,
    Cup,
    Swap,
    ZSpider,
    XSpider,
    NWire,
    MetaVar,
    Stack,
    Compose,
    Cast,
};

// Layout tree. Children nest strictly inside their parent; stacks split
// vertically, composes horizontally. Coordinates are in scaled units.
struct Scene {
    SceneKind kind = SceneKind::Empty;
    double x = 0;
    double y = 0;
    double w = 0;
    double h = 0;
    std::string label; // spider angle, nwire count, metavar name, cast dims
    std::vector<Scene> children;
};

Scene layout(const structural::SymDiagram& d, double scale = 40.0);
Scene layout(const Diagram& d, double scale = 40.0);

std::string to_svg(const Scene& s);
std::string to_ascii(const Scene& s);

} // namespace zx
