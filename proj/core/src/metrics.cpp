#include "mlviz/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mlviz/errors.hpp"
#include "mlviz/io/format.hpp"

namespace mlviz {

std::size_t countOverlaps(const MultilayerGraph& graph, const Layer& layer) {
    std::size_t overlaps = 0;
    for (std::size_t i = 0; i < layer.members.size(); ++i) {
        const Node& a = graph.node(layer.members[i]);
        for (std::size_t j = i + 1; j < layer.members.size(); ++j) {
            const Node& b = graph.node(layer.members[j]);
            double dx = a.pos.x - b.pos.x;
            double dy = a.pos.y - b.pos.y;
            if (std::sqrt(dx * dx + dy * dy) < a.size + b.size) {
                ++overlaps;
            }
        }
    }
    return overlaps;
}

std::vector<double> layerSeparation(const MultilayerGraph& graph, Axis axis) {
    if (graph.layers().size() < 2) {
        throw SingleLayer();
    }
    auto coord = [&](const Node& n) { return axis == Axis::Y ? n.pos.y : n.pos.x; };
    std::vector<double> gaps;
    for (std::size_t i = 0; i + 1 < graph.layers().size(); ++i) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const NodeId& id : graph.layers()[i].members) {
            hi = std::max(hi, coord(graph.node(id)));
        }
        for (const NodeId& id : graph.layers()[i + 1].members) {
            lo = std::min(lo, coord(graph.node(id)));
        }
        gaps.push_back(lo - hi);
    }
    return gaps;
}

std::vector<LayerReport> report(const MultilayerGraph& graph) {
    std::vector<LayerReport> reports;
    for (const Layer& layer : graph.layers()) {
        LayerReport r;
        r.layerKey = layer.key;
        r.nodeCount = layer.members.size();
        r.minX = r.minY = std::numeric_limits<double>::infinity();
        r.maxX = r.maxY = -std::numeric_limits<double>::infinity();
        for (const NodeId& id : layer.members) {
            const Node& n = graph.node(id);
            r.minX = std::min(r.minX, n.pos.x);
            r.maxX = std::max(r.maxX, n.pos.x);
            r.minY = std::min(r.minY, n.pos.y);
            r.maxY = std::max(r.maxY, n.pos.y);
        }
        if (layer.members.empty()) {
            r.minX = r.minY = r.maxX = r.maxY = 0.0;
        }
        r.overlapPairs = countOverlaps(graph, layer);

        double total = 0.0;
        std::size_t count = 0;
        for (const Edge& e : graph.edges()) {
            if (e.kind != EdgeKind::IntraLayer ||
                graph.layerOrdinalOf(e.source) != layer.ordinal) {
                continue;
            }
            const Node& a = graph.node(e.source);
            const Node& b = graph.node(e.target);
            double dx = a.pos.x - b.pos.x;
            double dy = a.pos.y - b.pos.y;
            total += std::sqrt(dx * dx + dy * dy);
            ++count;
        }
        r.meanIntraEdgeLength = count ? total / static_cast<double>(count) : 0.0;
        reports.push_back(std::move(r));
    }
    return reports;
}

std::string reportTable(const std::vector<LayerReport>& reports) {
    std::ostringstream out;
    out << "layer\tnodes\toverlaps\tmean_intra_edge\tbbox\n";
    for (const LayerReport& r : reports) {
        out << r.layerKey << '\t' << r.nodeCount << '\t' << r.overlapPairs << '\t'
            << detail::compactNumber(r.meanIntraEdgeLength) << '\t' << '['
            << detail::compactNumber(r.minX) << ", " << detail::compactNumber(r.minY)
            << ", " << detail::compactNumber(r.maxX) << ", "
            << detail::compactNumber(r.maxY) << "]\n";
    }
    return out.str();
}

std::string reportJson(const std::vector<LayerReport>& reports) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const LayerReport& r = reports[i];
        out << "  {\"layer\":" << detail::jsonString(r.layerKey)
            << ",\"nodes\":" << r.nodeCount << ",\"overlaps\":" << r.overlapPairs
            << ",\"meanIntraEdgeLength\":" << detail::fixedNumber(r.meanIntraEdgeLength)
            << ",\"bbox\":[" << detail::fixedNumber(r.minX) << ','
            << detail::fixedNumber(r.minY) << ',' << detail::fixedNumber(r.maxX) << ','
            << detail::fixedNumber(r.maxY) << "]}" << (i + 1 < reports.size() ? "," : "")
            << '\n';
    }
    out << "]\n";
    return out.str();
}

}  // namespace mlviz
