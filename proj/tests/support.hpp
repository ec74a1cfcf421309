#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mlviz/graph.hpp"
#include "mlviz/rng.hpp"

namespace testsupport {

inline std::string dataPath(const std::string& name) {
    return std::string(MLVIZ_TEST_DATA_DIR) + "/" + name;
}

inline std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct NodeSpec {
    std::string id;
    std::string layer;
    double size = 10.0;
    std::string label;
};

// Graph layered by the "layer" node attribute.
inline mlviz::MultilayerGraph attributedGraph(
    const std::vector<NodeSpec>& nodes,
    const std::vector<std::pair<std::string, std::string>>& edges = {}) {
    mlviz::MultilayerGraph g;
    for (const NodeSpec& spec : nodes) {
        mlviz::Node n;
        n.id = spec.id;
        n.label = spec.label;
        n.labelWidth = mlviz::labelWidthFor(spec.label);
        n.size = spec.size;
        n.attributes["layer"] = spec.layer;
        g.addNode(std::move(n));
    }
    for (const auto& [a, b] : edges) {
        mlviz::Edge e;
        e.source = a;
        e.target = b;
        g.addEdge(std::move(e));
    }
    return assignLayers(g, mlviz::LayerSource::nodeAttribute("layer"));
}

struct RandomGraphOptions {
    std::size_t minNodes = 10;
    std::size_t maxNodes = 60;
    std::size_t minLayers = 2;
    std::size_t maxLayers = 5;
    double minSize = 5.0;
    double maxSize = 30.0;
    std::size_t maxLabelChars = 12;
    double edgesPerNode = 1.5;
};

// Random node-attributed multilayer graph; every layer gets at least one
// node. Edge endpoints are unconstrained, so both intra- and inter-layer
// edges occur.
inline mlviz::MultilayerGraph randomGraph(mlviz::SplitMix64& rng,
                                          const RandomGraphOptions& opt = {}) {
    std::size_t n = opt.minNodes +
                    rng.next() % (opt.maxNodes - opt.minNodes + 1);
    std::size_t layers = opt.minLayers +
                         rng.next() % (opt.maxLayers - opt.minLayers + 1);
    layers = std::min(layers, n);

    mlviz::MultilayerGraph g;
    for (std::size_t i = 0; i < n; ++i) {
        mlviz::Node node;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "n%04u", static_cast<unsigned>(i));
        node.id = buf;
        std::size_t labelLen = rng.next() % (opt.maxLabelChars + 1);
        for (std::size_t c = 0; c < labelLen; ++c) {
            node.label += static_cast<char>('a' + rng.next() % 26);
        }
        node.labelWidth = mlviz::labelWidthFor(node.label);
        node.size = rng.uniform(opt.minSize, opt.maxSize);
        std::size_t layer = i < layers ? i : rng.next() % layers;
        node.attributes["layer"] = "L" + std::to_string(layer);
        g.addNode(std::move(node));
    }
    auto m = static_cast<std::size_t>(static_cast<double>(n) * opt.edgesPerNode);
    for (std::size_t i = 0; i < m; ++i) {
        mlviz::Edge e;
        e.source = g.nodes()[rng.next() % n].id;
        e.target = g.nodes()[rng.next() % n].id;
        e.weight = 1.0;
        g.addEdge(std::move(e));
    }
    return assignLayers(g, mlviz::LayerSource::nodeAttribute("layer"));
}

}  // namespace testsupport
