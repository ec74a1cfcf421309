#pragma once

#include "mlviz/graph.hpp"
#include "mlviz/layout.hpp"

namespace mlviz {

enum class Orientation { Vertical, Horizontal };

struct StackConfig {
    double layerDistance = 200.0;  // px between a layer's farthest node and the next layer
    Orientation orientation = Orientation::Vertical;
    bool threeD = false;
    bool splitByLevel = false;
    bool sortLayers = false;
};

// Lays out and stacks the layers. Layers are processed in ordinal order:
// each one is laid out about the shared origin (unless splitByLevel keeps
// the whole-network positions), then shifted along +y so it clears the
// farthest node of the previous layer by layerDistance. Horizontal
// orientation turns the stacked result a quarter turn, (x, y) -> (y, -x).
// threeD then compresses y by cos(65 deg) and gives every node a small
// random depth in [0, 0.01). Applies sortLayersBySize first when
// cfg.sortLayers is set (idempotent, so callers may also pre-sort).
MultilayerGraph stack(const MultilayerGraph& graph, const LayoutConfig& layoutCfg,
                      const StackConfig& stackCfg);

// Exploded view: one layout over the entire network, then each layer rigidly
// translated apart. Intra-layer geometry is exactly that of the underlying
// whole-network layout. Equivalent to stack() with splitByLevel forced on.
MultilayerGraph splitByLevel(const MultilayerGraph& graph, const LayoutConfig& layoutCfg,
                             const StackConfig& stackCfg);

}  // namespace mlviz
