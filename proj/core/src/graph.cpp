#include "mlviz/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mlviz/errors.hpp"

namespace mlviz {

std::size_t MultilayerGraph::addNode(Node node) {
    if (node.id.empty()) {
        throw Error("node id must be non-empty");
    }
    if (index_.count(node.id)) {
        throw Error("duplicate node id '" + node.id + "'");
    }
    std::size_t idx = nodes_.size();
    index_.emplace(node.id, idx);
    nodes_.push_back(std::move(node));
    return idx;
}

std::size_t MultilayerGraph::ensureNode(const NodeId& id, double glyphWidth) {
    auto it = index_.find(id);
    if (it != index_.end()) {
        return it->second;
    }
    Node n;
    n.id = id;
    n.label = id;
    n.labelWidth = labelWidthFor(n.label, glyphWidth);
    return addNode(std::move(n));
}

void MultilayerGraph::addEdge(Edge edge) {
    if (!hasNode(edge.source)) {
        throw Error("edge endpoint '" + edge.source + "' is not a node");
    }
    if (!hasNode(edge.target)) {
        throw Error("edge endpoint '" + edge.target + "' is not a node");
    }
    edges_.push_back(std::move(edge));
}

std::size_t MultilayerGraph::nodeIndex(const NodeId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw Error("unknown node id '" + id + "'");
    }
    return it->second;
}

std::size_t MultilayerGraph::layerOrdinalOf(const NodeId& id) const {
    auto it = layerOf_.find(id);
    if (it == layerOf_.end()) {
        throw Error("node '" + id + "' has no layer (layers not assigned?)");
    }
    return it->second;
}

void MultilayerGraph::setLayers(std::vector<Layer> layers, LayerSource source) {
    layerOf_.clear();
    for (std::size_t i = 0; i < layers.size(); ++i) {
        layers[i].ordinal = i;
        for (const NodeId& id : layers[i].members) {
            if (!hasNode(id)) {
                throw Error("layer member '" + id + "' is not a node");
            }
            if (!layerOf_.emplace(id, i).second) {
                throw Error("node '" + id + "' assigned to more than one layer");
            }
        }
    }
    if (layerOf_.size() != nodes_.size()) {
        throw Error("layer partition does not cover every node");
    }
    layers_ = std::move(layers);
    source_ = source;
}

bool layerKeyLess(const std::string& a, const std::string& b) {
    auto isDecimal = [](const std::string& s) {
        if (s.empty() || s.size() > 18) {
            return false;
        }
        return std::all_of(s.begin(), s.end(),
                           [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    if (isDecimal(a) && isDecimal(b)) {
        long long va = std::stoll(a);
        long long vb = std::stoll(b);
        if (va != vb) {
            return va < vb;
        }
    }
    return a < b;
}

namespace {

std::vector<std::string> orderedKeys(const std::set<std::string>& present,
                                     const std::vector<std::string>& keyOrder) {
    std::vector<std::string> keys;
    if (!keyOrder.empty()) {
        for (const auto& k : keyOrder) {
            if (present.count(k) &&
                std::find(keys.begin(), keys.end(), k) == keys.end()) {
                keys.push_back(k);
            }
        }
        for (const auto& k : present) {
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
                keys.push_back(k);
            }
        }
    } else {
        keys.assign(present.begin(), present.end());
        std::sort(keys.begin(), keys.end(), layerKeyLess);
    }
    return keys;
}

void classifyEdges(MultilayerGraph& g) {
    for (Edge& e : g.edges()) {
        e.kind = g.layerOrdinalOf(e.source) == g.layerOrdinalOf(e.target)
                     ? EdgeKind::IntraLayer
                     : EdgeKind::InterLayer;
    }
}

MultilayerGraph assignByNodeAttribute(const MultilayerGraph& graph, const std::string& attr,
                                      const std::vector<std::string>& keyOrder) {
    std::set<std::string> present;
    std::map<std::string, std::vector<NodeId>> groups;
    for (const Node& n : graph.nodes()) {
        auto it = n.attributes.find(attr);
        if (it == n.attributes.end()) {
            throw MissingLayerAttribute(n.id, attr);
        }
        present.insert(it->second);
        groups[it->second].push_back(n.id);
    }

    MultilayerGraph out = graph;
    std::vector<Layer> layers;
    for (const std::string& key : orderedKeys(present, keyOrder)) {
        Layer layer;
        layer.key = key;
        layer.members = groups[key];
        std::sort(layer.members.begin(), layer.members.end());
        layers.push_back(std::move(layer));
    }
    out.setLayers(std::move(layers), LayerSource::nodeAttribute(attr));
    classifyEdges(out);
    return out;
}

MultilayerGraph assignByEdgeLayerLabel(const MultilayerGraph& graph,
                                       const std::vector<std::string>& keyOrder) {
    std::set<std::string> present;
    for (const Edge& e : graph.edges()) {
        if (!e.layerLabel) {
            throw Error("edge " + e.source + " -- " + e.target +
                        " has no layer label; cannot layer by edge label");
        }
        present.insert(*e.layerLabel);
    }
    std::vector<std::string> keys = orderedKeys(present, keyOrder);
    std::map<std::string, std::size_t> keyOrdinal;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        keyOrdinal[keys[i]] = i;
    }

    // Layers a node participates in, ordered by ordinal.
    std::map<NodeId, std::set<std::size_t>> participation;
    for (const Edge& e : graph.edges()) {
        std::size_t ord = keyOrdinal.at(*e.layerLabel);
        participation[e.source].insert(ord);
        participation[e.target].insert(ord);
    }

    auto replicaId = [&](const NodeId& orig, std::size_t ord) {
        return orig + "@" + keys[ord];
    };

    MultilayerGraph out;
    std::vector<Layer> layers(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        layers[i].key = keys[i];
    }
    // Replicas grouped by layer, ids sorted within each layer.
    for (std::size_t ord = 0; ord < keys.size(); ++ord) {
        std::vector<NodeId> originals;
        for (const auto& [id, ords] : participation) {
            if (ords.count(ord)) {
                originals.push_back(id);
            }
        }
        std::sort(originals.begin(), originals.end());
        for (const NodeId& orig : originals) {
            Node replica = graph.node(orig);
            replica.id = replicaId(orig, ord);
            out.addNode(std::move(replica));
            layers[ord].members.push_back(replicaId(orig, ord));
        }
    }

    for (const Edge& e : graph.edges()) {
        std::size_t ord = keyOrdinal.at(*e.layerLabel);
        Edge intra = e;
        intra.source = replicaId(e.source, ord);
        intra.target = replicaId(e.target, ord);
        intra.kind = EdgeKind::IntraLayer;
        out.addEdge(std::move(intra));
    }
    // Couple consecutive replicas of the same node (a path, not a clique).
    for (const auto& [id, ords] : participation) {
        std::vector<std::size_t> sorted(ords.begin(), ords.end());
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            Edge coupling;
            coupling.source = replicaId(id, sorted[i]);
            coupling.target = replicaId(id, sorted[i + 1]);
            coupling.weight = 1.0;
            coupling.kind = EdgeKind::InterLayer;
            out.addEdge(std::move(coupling));
        }
    }

    if (out.nodes().empty()) {
        throw EmptyGraph();  // no edges means no replicas under edge-label layering
    }
    out.setLayers(std::move(layers), LayerSource::edgeLayerLabel());
    return out;
}

}  // namespace

MultilayerGraph assignLayers(const MultilayerGraph& graph, const LayerSource& source,
                             const std::vector<std::string>& keyOrder) {
    if (graph.nodes().empty()) {
        throw EmptyGraph();
    }
    switch (source.kind) {
        case LayerSource::NodeAttribute:
            return assignByNodeAttribute(graph, source.attribute, keyOrder);
        case LayerSource::EdgeLayerLabel:
            return assignByEdgeLayerLabel(graph, keyOrder);
        default:
            throw Error("layer source not specified");
    }
}

MultilayerGraph sortLayersBySize(const MultilayerGraph& graph) {
    if (graph.layers().size() <= 1) {
        return graph;
    }
    MultilayerGraph out = graph;
    std::vector<Layer> layers = graph.layers();
    std::sort(layers.begin(), layers.end(), [](const Layer& a, const Layer& b) {
        if (a.members.size() != b.members.size()) {
            return a.members.size() < b.members.size();
        }
        return a.key < b.key;
    });
    out.setLayers(std::move(layers), graph.layerSource());
    return out;
}

const Node& farthestNode(const MultilayerGraph& graph, const Layer& layer) {
    if (layer.members.empty()) {
        throw EmptyLayer(layer.key);
    }
    const Node* best = nullptr;
    for (const NodeId& id : layer.members) {  // members are id-sorted: first max wins ties
        const Node& n = graph.node(id);
        if (!best || n.pos.y > best->pos.y) {
            best = &n;
        }
    }
    return *best;
}

const Node& biggestNode(const MultilayerGraph& graph, const Layer& layer) {
    if (layer.members.empty()) {
        throw EmptyLayer(layer.key);
    }
    const Node* best = nullptr;
    for (const NodeId& id : layer.members) {
        const Node& n = graph.node(id);
        if (!best || n.size > best->size) {
            best = &n;
        }
    }
    return *best;
}

}  // namespace mlviz
