#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "mlviz/errors.hpp"
#include "mlviz/io/format.hpp"
#include "mlviz/io/writers.hpp"

namespace mlviz {

namespace {

using detail::compactNumber;
using detail::xmlEscape;

constexpr std::array<const char*, 12> kPalette = {
    "steelblue", "crimson",       "seagreen",  "darkorange",
    "mediumpurple", "goldenrod",  "teal",      "palevioletred",
    "olivedrab", "slateblue",     "chocolate", "darkcyan",
};

constexpr const char* kInterLayerColor = "gray";

}  // namespace

const char* layerColor(std::size_t ordinal) {
    return kPalette[ordinal % kPalette.size()];
}

std::string renderSvg(const MultilayerGraph& graph, const StyleConfig& style) {
    for (const Node& n : graph.nodes()) {
        if (!std::isfinite(n.pos.x) || !std::isfinite(n.pos.y) || !std::isfinite(n.pos.z)) {
            throw NonFinitePosition(n.id);
        }
    }

    // Graph +y points up; SVG y grows downward.
    auto sx = [](const Node& n) { return n.pos.x; };
    auto sy = [](const Node& n) { return -n.pos.y; };

    std::ostringstream body;
    for (const Edge& e : graph.edges()) {
        const Node& a = graph.node(e.source);
        const Node& b = graph.node(e.target);
        body << "  <line x1=\"" << compactNumber(sx(a)) << "\" y1=\""
             << compactNumber(sy(a)) << "\" x2=\"" << compactNumber(sx(b))
             << "\" y2=\"" << compactNumber(sy(b)) << "\" stroke=\"";
        if (e.kind == EdgeKind::IntraLayer && graph.layersAssigned()) {
            body << layerColor(graph.layerOrdinalOf(e.source)) << "\"";
        } else {
            body << kInterLayerColor << "\" stroke-opacity=\"0.4\"";
        }
        body << " stroke-width=\"" << compactNumber(style.edgeWidth) << "\"/>\n";
    }

    auto emitNode = [&](const Node& n, std::size_t ordinal) {
        auto colorAttr = n.attributes.find("color");
        const std::string fill =
            colorAttr != n.attributes.end() ? colorAttr->second : layerColor(ordinal);
        body << "  <circle cx=\"" << compactNumber(sx(n)) << "\" cy=\""
             << compactNumber(sy(n)) << "\" r=\"" << compactNumber(n.size)
             << "\" fill=\"" << xmlEscape(fill) << "\"/>\n";
        if (style.drawLabels && !n.label.empty()) {
            body << "  <text x=\"" << compactNumber(sx(n) + n.size + 2.0) << "\" y=\""
                 << compactNumber(sy(n)) << "\" font-size=\""
                 << compactNumber(style.fontSize) << "\">" << xmlEscape(n.label)
                 << "</text>\n";
        }
    };
    if (graph.layersAssigned()) {
        for (const Layer& layer : graph.layers()) {
            for (const NodeId& id : layer.members) {
                emitNode(graph.node(id), layer.ordinal);
            }
        }
    } else {
        for (const Node& n : graph.nodes()) {
            emitNode(n, 0);
        }
    }

    double minX = std::numeric_limits<double>::infinity();
    double minY = std::numeric_limits<double>::infinity();
    double maxX = -std::numeric_limits<double>::infinity();
    double maxY = -std::numeric_limits<double>::infinity();
    for (const Node& n : graph.nodes()) {
        minX = std::min(minX, sx(n));
        maxX = std::max(maxX, sx(n));
        minY = std::min(minY, sy(n));
        maxY = std::max(maxY, sy(n));
    }

    std::string viewBox;
    if (graph.nodes().empty()) {
        viewBox = "0 0 1 1";
    } else {
        double w = maxX - minX;
        double h = maxY - minY;
        double padX = std::max(w * 0.05, 1.0);
        double padY = std::max(h * 0.05, 1.0);
        viewBox = compactNumber(minX - padX) + " " + compactNumber(minY - padY) + " " +
                  compactNumber(w + 2.0 * padX) + " " + compactNumber(h + 2.0 * padY);
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << viewBox << "\">\n";
    out << body.str();
    out << "</svg>\n";
    return out.str();
}

}  // namespace mlviz
