#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mlviz/graph.hpp"

namespace mlviz {

enum class Axis { X, Y };

struct LayerReport {
    std::string layerKey;
    std::size_t nodeCount = 0;
    double minX = 0.0;
    double minY = 0.0;
    double maxX = 0.0;
    double maxY = 0.0;
    std::size_t overlapPairs = 0;
    double meanIntraEdgeLength = 0.0;
};

// Unordered member pairs whose center distance (x/y plane) is below the sum
// of their radii. Labels are not part of this measure.
std::size_t countOverlaps(const MultilayerGraph& graph, const Layer& layer);

// Center-coordinate gaps between consecutive layers along the given axis:
// min over layer i+1 minus max over layer i. Negative entries mean the
// layers interleave. Throws SingleLayer for fewer than two layers.
std::vector<double> layerSeparation(const MultilayerGraph& graph, Axis axis);

// One report per layer, in ordinal order. Read-only.
std::vector<LayerReport> report(const MultilayerGraph& graph);

std::string reportTable(const std::vector<LayerReport>& reports);
std::string reportJson(const std::vector<LayerReport>& reports);

}  // namespace mlviz
