#pragma once

#include <cstdint>
#include <string>

#include "mlviz/graph.hpp"

namespace mlviz {

enum class LayoutAlgorithm { Circle, Grid, Linear, Random, FruchtermanReingold, ForceAtlas };

// CLI spelling ("circle", "grid", "linear", "random", "fr", "forceatlas").
std::string layoutName(LayoutAlgorithm algorithm);
LayoutAlgorithm layoutFromName(const std::string& name);  // throws Error on unknown name

struct LayoutConfig {
    LayoutAlgorithm algorithm = LayoutAlgorithm::FruchtermanReingold;
    int iterations = 100;
    double speed = 1.0;
    double gravity = 10.0;
    double area = 10000.0;  // px^2
    std::uint64_t seed = 42;
};

// Square placement region of a layer, centered on the layer origin. The
// extent is never smaller than the footprint (2*size + labelWidth) of any
// member, so a single node always fits.
struct LayerFrame {
    double originX = 0.0;
    double originY = 0.0;
    double extent = 0.0;
};

// Area term a layer claims for itself: size of the biggest member plus its
// label width times the member count. Throws EmptyLayer.
double layerExtent(const MultilayerGraph& graph, const Layer& layer);

LayerFrame layerFrame(const MultilayerGraph& graph, const Layer& layer);

// Places the given layer's members, reading and writing only their
// positions. Only the layer's own intra-layer edges participate in the
// force-directed algorithms; the per-layer random stream is seeded with
// cfg.seed XOR the layer ordinal. Deterministic for a fixed (graph, cfg).
void applyLayout(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg);

// Runs one layout over the whole graph (all nodes, intra- and inter-layer
// edges). Used by the split-by-level view.
void applyLayoutWholeGraph(MultilayerGraph& graph, const LayoutConfig& cfg);

// Individual algorithms, same contract as applyLayout.
void layoutCircle(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg);
void layoutGrid(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg);
void layoutLinear(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg);
void layoutRandom(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg);
void layoutFruchtermanReingold(MultilayerGraph& graph, const Layer& layer,
                               const LayoutConfig& cfg);
void layoutForceAtlas(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg);

}  // namespace mlviz
