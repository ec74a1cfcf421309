#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mlviz {

using NodeId = std::string;

// Width in pixels reserved for a node label: character count times a fixed
// glyph width. Renderer independent on purpose.
inline constexpr double kDefaultGlyphWidth = 8.0;

inline double labelWidthFor(const std::string& label, double glyphWidth = kDefaultGlyphWidth) {
    return static_cast<double>(label.size()) * glyphWidth;
}

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct Node {
    NodeId id;
    std::string label;
    double size = 10.0;       // render radius, px
    double labelWidth = 0.0;  // px
    Vec3 pos;
    std::map<std::string, std::string> attributes;
};

enum class EdgeKind { IntraLayer, InterLayer };

struct Edge {
    NodeId source;
    NodeId target;
    double weight = 1.0;
    std::optional<std::string> layerLabel;
    EdgeKind kind = EdgeKind::IntraLayer;
};

struct Layer {
    std::string key;
    std::size_t ordinal = 0;
    std::vector<NodeId> members;  // sorted by id
};

struct LayerSource {
    enum Kind { None, NodeAttribute, EdgeLayerLabel };

    Kind kind = None;
    std::string attribute;  // set when kind == NodeAttribute

    static LayerSource nodeAttribute(std::string name) {
        return LayerSource{NodeAttribute, std::move(name)};
    }
    static LayerSource edgeLayerLabel() { return LayerSource{EdgeLayerLabel, {}}; }
};

// Multilayer graph: nodes, edges and an ordered layer partition. Mutation is
// confined to construction and to the layout/stacking passes, which operate
// on their own copies; the transforming operations below all take a const
// graph and return a new one, so finished values can be shared freely.
class MultilayerGraph {
public:
    // Throws Error on an empty or duplicate id.
    std::size_t addNode(Node node);

    // Adds a default node (label = id) if absent, returns its index.
    std::size_t ensureNode(const NodeId& id, double glyphWidth = kDefaultGlyphWidth);

    // Throws Error when an endpoint is unknown. Self-loops are allowed.
    void addEdge(Edge edge);

    bool hasNode(const NodeId& id) const { return index_.count(id) != 0; }
    std::size_t nodeIndex(const NodeId& id) const;

    const Node& node(const NodeId& id) const { return nodes_[nodeIndex(id)]; }
    Node& node(const NodeId& id) { return nodes_[nodeIndex(id)]; }

    const std::vector<Node>& nodes() const { return nodes_; }
    std::vector<Node>& nodes() { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<Edge>& edges() { return edges_; }
    const std::vector<Layer>& layers() const { return layers_; }

    const LayerSource& layerSource() const { return source_; }

    bool layersAssigned() const { return !layers_.empty(); }

    // Ordinal of the layer a node belongs to. Throws Error before layers
    // are assigned or for an unknown id.
    std::size_t layerOrdinalOf(const NodeId& id) const;

    // Replaces the layer partition. Every member must exist and every node
    // must appear exactly once; ordinals are renumbered 0..L-1 in the order
    // given. Used by assignLayers/sortLayersBySize.
    void setLayers(std::vector<Layer> layers, LayerSource source);

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<Layer> layers_;
    LayerSource source_;
    std::unordered_map<NodeId, std::size_t> index_;
    std::unordered_map<NodeId, std::size_t> layerOf_;
};

// Orders layer keys numerically when both are plain decimal integers,
// lexicographically otherwise, so multiplex layer ids 1..12 do not come out
// as 1, 10, 11, 12, 2, ...
bool layerKeyLess(const std::string& a, const std::string& b);

// Partitions nodes into layers. NodeAttribute groups nodes by the value of
// the named attribute; EdgeLayerLabel replicates each node into every layer
// in which it has an incident edge (replica id "origId@layerKey") and couples
// consecutive replicas of the same node with inter-layer edges. Edges are
// (re)classified intra/inter afterwards. keyOrder, when non-empty, pins the
// ordinal sequence; otherwise keys are ordered with layerKeyLess.
MultilayerGraph assignLayers(const MultilayerGraph& graph, const LayerSource& source,
                             const std::vector<std::string>& keyOrder = {});

// Reassigns ordinals so layers are ordered by ascending member count, ties
// broken by ascending key. Member sets are untouched.
MultilayerGraph sortLayersBySize(const MultilayerGraph& graph);

// Member with maximal y; ties broken by smallest id. Throws EmptyLayer.
const Node& farthestNode(const MultilayerGraph& graph, const Layer& layer);

// Member with maximal size; ties broken by smallest id. Throws EmptyLayer.
const Node& biggestNode(const MultilayerGraph& graph, const Layer& layer);

}  // namespace mlviz
