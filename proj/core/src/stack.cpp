#include "mlviz/stack.hpp"

#include <cmath>
#include <numbers>

#include "mlviz/errors.hpp"
#include "mlviz/rng.hpp"

namespace mlviz {

namespace {

constexpr double kDepthAngle = 65.0 * std::numbers::pi / 180.0;

// Pseudo-3D pass: runs after all offsets so the stacking chain (and with it
// every x coordinate) is identical to the flat run with the same seed.
void applyDepthProjection(MultilayerGraph& g, std::uint64_t seed) {
    const double c = std::cos(kDepthAngle);
    const double s = std::sin(kDepthAngle);
    SplitMix64 rng(seed);
    for (const Layer& layer : g.layers()) {
        for (const NodeId& id : layer.members) {
            Node& n = g.node(id);
            n.pos.y = n.pos.y * c - n.pos.z * s;
            n.pos.z = rng.nextDouble() * 0.01;
        }
    }
}

}  // namespace

MultilayerGraph stack(const MultilayerGraph& graph, const LayoutConfig& layoutCfg,
                      const StackConfig& stackCfg) {
    if (!graph.layersAssigned()) {
        throw Error("stack: layers have not been assigned");
    }
    MultilayerGraph out = stackCfg.sortLayers ? sortLayersBySize(graph) : graph;

    if (stackCfg.splitByLevel) {
        applyLayoutWholeGraph(out, layoutCfg);
    }

    const Layer* previous = nullptr;
    for (const Layer& layer : out.layers()) {
        if (layer.members.empty()) {
            throw EmptyLayer(layer.key);
        }
        double fy = 0.0;  // first layer stays where its layout put it
        if (previous) {
            const Node& farthest = farthestNode(out, *previous);
            fy = farthest.pos.y + farthest.size + stackCfg.layerDistance;
        }
        if (!stackCfg.splitByLevel) {
            applyLayout(out, layer, layoutCfg);
        }
        if (fy != 0.0) {
            for (const NodeId& id : layer.members) {
                out.node(id).pos.y += fy;
            }
        }
        previous = &layer;
    }

    if (stackCfg.orientation == Orientation::Horizontal) {
        // 270-degree rotation of the stacked picture: (x, y) -> (y, -x).
        for (Node& n : out.nodes()) {
            double x = n.pos.x;
            n.pos.x = n.pos.y;
            n.pos.y = -x;
        }
    }

    if (stackCfg.threeD) {
        applyDepthProjection(out, layoutCfg.seed);
    }
    return out;
}

MultilayerGraph splitByLevel(const MultilayerGraph& graph, const LayoutConfig& layoutCfg,
                             const StackConfig& stackCfg) {
    StackConfig cfg = stackCfg;
    cfg.splitByLevel = true;
    return stack(graph, layoutCfg, cfg);
}

}  // namespace mlviz
