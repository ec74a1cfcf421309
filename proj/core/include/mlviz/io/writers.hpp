#pragma once

#include <string>

#include "mlviz/graph.hpp"
#include "mlviz/layout.hpp"
#include "mlviz/stack.hpp"

namespace mlviz {

// Configuration echoed into serialized outputs so a run can be reproduced.
struct OutputMeta {
    LayoutConfig layout;
    StackConfig stack;
    std::string layerSourceDesc;  // e.g. "edge-layer-label" or "node-attribute:type"
};

std::string describeLayerSource(const LayerSource& source);

// Positioned-graph JSON. Nodes are ordered by (layer ordinal, id), edges by
// (source, target, layer); all numbers are plain six-decimal fixed point, so
// output is byte-deterministic. Throws NonFinitePosition.
std::string writePositionedJson(const MultilayerGraph& graph, const OutputMeta& meta);

// GEXF 1.2 with viz:position/viz:size per node and a "layer" attvalue.
std::string writeGexf(const MultilayerGraph& graph);

struct StyleConfig {
    bool drawLabels = false;
    double edgeWidth = 1.0;
    double fontSize = 10.0;
};

// Static SVG: edges first (intra-layer edges stroke-colored per layer from a
// fixed 12-color palette, inter-layer edges gray at 40% opacity), then nodes
// as circles (fill = layer color unless the node has a "color" attribute).
// Graph +y renders upward. viewBox is the position bounding box padded 5%.
std::string renderSvg(const MultilayerGraph& graph, const StyleConfig& style = {});

// The palette renderSvg indexes by layer ordinal mod 12.
const char* layerColor(std::size_t ordinal);

}  // namespace mlviz
