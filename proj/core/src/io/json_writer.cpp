#include <algorithm>
#include <cmath>
#include <sstream>

#include "mlviz/errors.hpp"
#include "mlviz/io/format.hpp"
#include "mlviz/io/writers.hpp"

namespace mlviz {

namespace {

using detail::fixedNumber;
using detail::jsonString;

void requireFinite(const MultilayerGraph& g) {
    for (const Node& n : g.nodes()) {
        if (!std::isfinite(n.pos.x) || !std::isfinite(n.pos.y) || !std::isfinite(n.pos.z)) {
            throw NonFinitePosition(n.id);
        }
    }
}

std::string layerKeyOf(const MultilayerGraph& g, const NodeId& id) {
    if (!g.layersAssigned()) {
        return "";
    }
    return g.layers()[g.layerOrdinalOf(id)].key;
}

std::string edgeLayerKey(const MultilayerGraph& g, const Edge& e) {
    if (e.layerLabel) {
        return *e.layerLabel;
    }
    if (e.kind == EdgeKind::IntraLayer && g.layersAssigned()) {
        return layerKeyOf(g, e.source);
    }
    return "";
}

}  // namespace

std::string describeLayerSource(const LayerSource& source) {
    switch (source.kind) {
        case LayerSource::NodeAttribute:
            return "node-attribute:" + source.attribute;
        case LayerSource::EdgeLayerLabel:
            return "edge-layer-label";
        default:
            return "none";
    }
}

std::string writePositionedJson(const MultilayerGraph& graph, const OutputMeta& meta) {
    requireFinite(graph);

    std::vector<const Node*> nodes;
    nodes.reserve(graph.nodes().size());
    for (const Node& n : graph.nodes()) {
        nodes.push_back(&n);
    }
    std::sort(nodes.begin(), nodes.end(), [&](const Node* a, const Node* b) {
        std::size_t la = graph.layersAssigned() ? graph.layerOrdinalOf(a->id) : 0;
        std::size_t lb = graph.layersAssigned() ? graph.layerOrdinalOf(b->id) : 0;
        if (la != lb) {
            return la < lb;
        }
        return a->id < b->id;
    });

    std::vector<const Edge*> edges;
    edges.reserve(graph.edges().size());
    for (const Edge& e : graph.edges()) {
        edges.push_back(&e);
    }
    std::stable_sort(edges.begin(), edges.end(), [&](const Edge* a, const Edge* b) {
        if (a->source != b->source) {
            return a->source < b->source;
        }
        if (a->target != b->target) {
            return a->target < b->target;
        }
        return edgeLayerKey(graph, *a) < edgeLayerKey(graph, *b);
    });

    std::ostringstream out;
    out << "{\n";
    out << "  \"meta\": {\n";
    out << "    \"layout\": " << jsonString(layoutName(meta.layout.algorithm)) << ",\n";
    out << "    \"seed\": " << meta.layout.seed << ",\n";
    out << "    \"iterations\": " << meta.layout.iterations << ",\n";
    out << "    \"speed\": " << fixedNumber(meta.layout.speed) << ",\n";
    out << "    \"gravity\": " << fixedNumber(meta.layout.gravity) << ",\n";
    out << "    \"area\": " << fixedNumber(meta.layout.area) << ",\n";
    out << "    \"layerDistance\": " << fixedNumber(meta.stack.layerDistance) << ",\n";
    out << "    \"orientation\": "
        << (meta.stack.orientation == Orientation::Horizontal ? "\"horizontal\""
                                                              : "\"vertical\"")
        << ",\n";
    out << "    \"threeD\": " << (meta.stack.threeD ? "true" : "false") << ",\n";
    out << "    \"splitByLevel\": " << (meta.stack.splitByLevel ? "true" : "false")
        << ",\n";
    out << "    \"sortLayers\": " << (meta.stack.sortLayers ? "true" : "false") << ",\n";
    out << "    \"layerSource\": " << jsonString(meta.layerSourceDesc) << ",\n";
    out << "    \"layers\": " << graph.layers().size() << "\n";
    out << "  },\n";

    out << "  \"nodes\": [\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& n = *nodes[i];
        out << "    {\"id\":" << jsonString(n.id) << ",\"layer\":"
            << jsonString(layerKeyOf(graph, n.id)) << ",\"x\":" << fixedNumber(n.pos.x)
            << ",\"y\":" << fixedNumber(n.pos.y) << ",\"z\":" << fixedNumber(n.pos.z)
            << ",\"size\":" << fixedNumber(n.size) << ",\"label\":" << jsonString(n.label)
            << "}" << (i + 1 < nodes.size() ? "," : "") << "\n";
    }
    out << "  ],\n";

    out << "  \"edges\": [\n";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = *edges[i];
        out << "    {\"source\":" << jsonString(e.source) << ",\"target\":"
            << jsonString(e.target) << ",\"layer\":"
            << jsonString(edgeLayerKey(graph, e)) << ",\"weight\":"
            << fixedNumber(e.weight) << ",\"kind\":"
            << (e.kind == EdgeKind::IntraLayer ? "\"intra\"" : "\"inter\"") << "}"
            << (i + 1 < edges.size() ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";
    return out.str();
}

}  // namespace mlviz
