#include "mlviz/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>
#include <vector>

#include "mlviz/errors.hpp"
#include "mlviz/rng.hpp"

namespace mlviz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPadding = 4.0;         // spacing pad between placed nodes, px
constexpr double kDistanceFloor = 0.01;  // effective-distance floor in force models, px

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Everything a placement pass needs: the participating nodes (graph indices,
// in id order), the edges among them (as positions into `nodes`), the square
// placement region and the random stream seed.
struct Scope {
    std::vector<std::size_t> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    double originX = 0.0;
    double originY = 0.0;
    double rawExtent = 0.0;
    double frameExtent = 0.0;
    std::uint64_t seed = 0;
};

double rawExtentOf(const MultilayerGraph& g, const std::vector<std::size_t>& nodes) {
    const Node* big = nullptr;
    for (std::size_t i : nodes) {
        const Node& n = g.nodes()[i];
        if (!big || n.size > big->size) {
            big = &n;
        }
    }
    return big->size + big->labelWidth * static_cast<double>(nodes.size());
}

double footprintOf(const MultilayerGraph& g, const std::vector<std::size_t>& nodes) {
    double footprint = 0.0;
    for (std::size_t i : nodes) {
        const Node& n = g.nodes()[i];
        footprint = std::max(footprint, 2.0 * n.size + n.labelWidth);
    }
    return footprint;
}

Scope layerScope(const MultilayerGraph& g, const Layer& layer, const LayoutConfig& cfg) {
    if (layer.members.empty()) {
        throw EmptyLayer(layer.key);
    }
    Scope s;
    std::unordered_map<std::size_t, std::size_t> position;
    for (const NodeId& id : layer.members) {
        std::size_t idx = g.nodeIndex(id);
        position.emplace(idx, s.nodes.size());
        s.nodes.push_back(idx);
    }
    for (const Edge& e : g.edges()) {
        auto a = position.find(g.nodeIndex(e.source));
        if (a == position.end()) {
            continue;
        }
        auto b = position.find(g.nodeIndex(e.target));
        if (b == position.end()) {
            continue;
        }
        s.edges.emplace_back(a->second, b->second);
    }
    s.rawExtent = rawExtentOf(g, s.nodes);
    s.frameExtent = std::max(s.rawExtent, footprintOf(g, s.nodes));
    s.seed = cfg.seed ^ static_cast<std::uint64_t>(layer.ordinal);
    return s;
}

Scope wholeGraphScope(const MultilayerGraph& g, const LayoutConfig& cfg) {
    if (g.nodes().empty()) {
        throw EmptyGraph();
    }
    Scope s;
    std::vector<std::pair<NodeId, std::size_t>> byId;
    byId.reserve(g.nodes().size());
    for (std::size_t i = 0; i < g.nodes().size(); ++i) {
        byId.emplace_back(g.nodes()[i].id, i);
    }
    std::sort(byId.begin(), byId.end());
    std::unordered_map<std::size_t, std::size_t> position;
    for (const auto& [id, idx] : byId) {
        position.emplace(idx, s.nodes.size());
        s.nodes.push_back(idx);
    }
    for (const Edge& e : g.edges()) {
        s.edges.emplace_back(position.at(g.nodeIndex(e.source)),
                             position.at(g.nodeIndex(e.target)));
    }
    s.rawExtent = rawExtentOf(g, s.nodes);
    s.frameExtent = std::max(s.rawExtent, footprintOf(g, s.nodes));
    s.seed = cfg.seed;
    return s;
}

std::vector<Vec2> placeCircle(const MultilayerGraph& g, const Scope& s) {
    std::size_t n = s.nodes.size();
    double circumference = 0.0;
    double maxSize = 0.0;
    for (std::size_t i : s.nodes) {
        const Node& nd = g.nodes()[i];
        circumference += 2.0 * nd.size + nd.labelWidth + kPadding;
        maxSize = std::max(maxSize, nd.size);
    }
    double r = std::max(s.rawExtent / 2.0, circumference / (2.0 * kPi));
    if (n >= 2) {
        // Adjacent chords are the shortest pairwise distances on the ring;
        // keep them at least one full diameter plus pad apart.
        r = std::max(r, (2.0 * maxSize + kPadding) /
                            (2.0 * std::sin(kPi / static_cast<double>(n))));
    }
    std::vector<Vec2> p(n);
    for (std::size_t k = 0; k < n; ++k) {
        double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        p[k] = {s.originX + r * std::cos(angle), s.originY + r * std::sin(angle)};
    }
    return p;
}

std::vector<Vec2> placeGrid(const MultilayerGraph& g, const Scope& s) {
    std::size_t n = s.nodes.size();
    auto cols = static_cast<std::size_t>(
        std::ceil(std::sqrt(static_cast<double>(n))));
    double pitch = footprintOf(g, s.nodes) + kPadding;
    std::vector<Vec2> p(n);
    for (std::size_t k = 0; k < n; ++k) {
        p[k] = {s.originX + static_cast<double>(k % cols) * pitch,
                s.originY + static_cast<double>(k / cols) * pitch};
    }
    return p;
}

std::vector<Vec2> placeLinear(const MultilayerGraph& g, const Scope& s) {
    std::vector<Vec2> p(s.nodes.size());
    double x = s.originX;
    for (std::size_t k = 0; k < s.nodes.size(); ++k) {
        const Node& cur = g.nodes()[s.nodes[k]];
        if (k > 0) {
            const Node& prev = g.nodes()[s.nodes[k - 1]];
            x += prev.size + prev.labelWidth + cur.size + kPadding;
        }
        p[k] = {x, s.originY};
    }
    return p;
}

std::vector<Vec2> placeRandom(const MultilayerGraph&, const Scope& s) {
    SplitMix64 rng(s.seed);
    double half = s.frameExtent / 2.0;
    std::vector<Vec2> p(s.nodes.size());
    for (auto& v : p) {
        v.x = s.originX + rng.uniform(-half, half);
        v.y = s.originY + rng.uniform(-half, half);
    }
    return p;
}

// Distance a force model sees: centers minus the solid bodies (node radii
// and half the label widths). Floored to keep forces finite.
double effectiveDistance(double dist, const Node& a, const Node& b) {
    return std::max(kDistanceFloor,
                    dist - a.size - b.size - (a.labelWidth + b.labelWidth) / 2.0);
}

struct PairGeometry {
    double ux = 1.0;  // unit vector i -> j, x
    double uy = 0.0;
    double deff = kDistanceFloor;
};

PairGeometry pairGeometry(const MultilayerGraph& g, const Scope& s,
                          const std::vector<Vec2>& p, std::size_t i, std::size_t j) {
    PairGeometry geo;
    double dx = p[j].x - p[i].x;
    double dy = p[j].y - p[i].y;
    double dist = std::sqrt(dx * dx + dy * dy);
    if (dist > 1e-12) {
        geo.ux = dx / dist;
        geo.uy = dy / dist;
    }
    geo.deff = effectiveDistance(dist, g.nodes()[s.nodes[i]], g.nodes()[s.nodes[j]]);
    return geo;
}

void addGravity(const Scope& s, const std::vector<Vec2>& p, std::vector<Vec2>& disp,
                double magnitude) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        double gx = s.originX - p[i].x;
        double gy = s.originY - p[i].y;
        double d = std::sqrt(gx * gx + gy * gy);
        if (d > 1e-12) {
            disp[i].x += gx / d * magnitude;
            disp[i].y += gy / d * magnitude;
        }
    }
}

std::vector<Vec2> placeFruchtermanReingold(const MultilayerGraph& g, const Scope& s,
                                           const LayoutConfig& cfg) {
    std::vector<Vec2> p = placeRandom(g, s);
    std::size_t n = s.nodes.size();
    double area = std::max(cfg.area, s.rawExtent * s.rawExtent);
    double k = std::sqrt(area / static_cast<double>(n));
    double gravityForce = cfg.gravity * 0.01 * k;

    std::vector<Vec2> disp(n);
    for (int iter = 0; iter < cfg.iterations; ++iter) {
        double t = cfg.speed * 0.1 * std::sqrt(area) *
                   (1.0 - static_cast<double>(iter) / static_cast<double>(cfg.iterations));
        std::fill(disp.begin(), disp.end(), Vec2{});

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                PairGeometry geo = pairGeometry(g, s, p, i, j);
                double f = k * k / geo.deff;
                disp[i].x -= geo.ux * f;
                disp[i].y -= geo.uy * f;
                disp[j].x += geo.ux * f;
                disp[j].y += geo.uy * f;
            }
        }
        for (const auto& [a, b] : s.edges) {
            if (a == b) {
                continue;  // self-loops exert no force
            }
            PairGeometry geo = pairGeometry(g, s, p, a, b);
            double f = geo.deff * geo.deff / k;
            disp[a].x += geo.ux * f;
            disp[a].y += geo.uy * f;
            disp[b].x -= geo.ux * f;
            disp[b].y -= geo.uy * f;
        }
        addGravity(s, p, disp, gravityForce);

        for (std::size_t i = 0; i < n; ++i) {
            double len = std::sqrt(disp[i].x * disp[i].x + disp[i].y * disp[i].y);
            if (len > t && len > 0.0) {
                disp[i].x *= t / len;
                disp[i].y *= t / len;
            }
            p[i].x += disp[i].x;
            p[i].y += disp[i].y;
        }
    }
    return p;
}

std::vector<Vec2> placeForceAtlas(const MultilayerGraph& g, const Scope& s,
                                  const LayoutConfig& cfg) {
    std::vector<Vec2> p = placeRandom(g, s);
    std::size_t n = s.nodes.size();
    double area = std::max(cfg.area, s.rawExtent * s.rawExtent);
    double k = std::sqrt(area / static_cast<double>(n));
    double repulsionScale = cfg.area / 100.0;
    double gravityForce = cfg.gravity * 0.01 * k;
    double maxStep = 10.0 * cfg.speed;

    std::vector<double> degree(n, 0.0);
    for (const auto& [a, b] : s.edges) {
        degree[a] += 1.0;
        degree[b] += 1.0;
    }

    std::vector<Vec2> disp(n);
    for (int iter = 0; iter < cfg.iterations; ++iter) {
        std::fill(disp.begin(), disp.end(), Vec2{});

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                PairGeometry geo = pairGeometry(g, s, p, i, j);
                double f = repulsionScale * (degree[i] + 1.0) * (degree[j] + 1.0) / geo.deff;
                disp[i].x -= geo.ux * f;
                disp[i].y -= geo.uy * f;
                disp[j].x += geo.ux * f;
                disp[j].y += geo.uy * f;
            }
        }
        for (const auto& [a, b] : s.edges) {
            if (a == b) {
                continue;
            }
            PairGeometry geo = pairGeometry(g, s, p, a, b);
            double f = geo.deff;
            disp[a].x += geo.ux * f;
            disp[a].y += geo.uy * f;
            disp[b].x -= geo.ux * f;
            disp[b].y -= geo.uy * f;
        }
        addGravity(s, p, disp, gravityForce);

        for (std::size_t i = 0; i < n; ++i) {
            double dx = disp[i].x * 0.1 * cfg.speed;
            double dy = disp[i].y * 0.1 * cfg.speed;
            double len = std::sqrt(dx * dx + dy * dy);
            if (len > maxStep && len > 0.0) {
                dx *= maxStep / len;
                dy *= maxStep / len;
            }
            p[i].x += dx;
            p[i].y += dy;
        }
    }
    return p;
}

std::vector<Vec2> place(const MultilayerGraph& g, const Scope& s, const LayoutConfig& cfg) {
    switch (cfg.algorithm) {
        case LayoutAlgorithm::Circle:
            return placeCircle(g, s);
        case LayoutAlgorithm::Grid:
            return placeGrid(g, s);
        case LayoutAlgorithm::Linear:
            return placeLinear(g, s);
        case LayoutAlgorithm::Random:
            return placeRandom(g, s);
        case LayoutAlgorithm::FruchtermanReingold:
            return placeFruchtermanReingold(g, s, cfg);
        case LayoutAlgorithm::ForceAtlas:
            return placeForceAtlas(g, s, cfg);
    }
    throw Error("unknown layout algorithm");
}

void writeBack(MultilayerGraph& g, const Scope& s, const std::vector<Vec2>& p) {
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        Node& n = g.nodes()[s.nodes[i]];
        n.pos.x = p[i].x;
        n.pos.y = p[i].y;
    }
}

void runOnLayer(MultilayerGraph& g, const Layer& layer, LayoutConfig cfg,
                LayoutAlgorithm algorithm) {
    cfg.algorithm = algorithm;
    Scope s = layerScope(g, layer, cfg);
    writeBack(g, s, place(g, s, cfg));
}

}  // namespace

std::string layoutName(LayoutAlgorithm algorithm) {
    switch (algorithm) {
        case LayoutAlgorithm::Circle:
            return "circle";
        case LayoutAlgorithm::Grid:
            return "grid";
        case LayoutAlgorithm::Linear:
            return "linear";
        case LayoutAlgorithm::Random:
            return "random";
        case LayoutAlgorithm::FruchtermanReingold:
            return "fr";
        case LayoutAlgorithm::ForceAtlas:
            return "forceatlas";
    }
    return "unknown";
}

LayoutAlgorithm layoutFromName(const std::string& name) {
    if (name == "circle") return LayoutAlgorithm::Circle;
    if (name == "grid") return LayoutAlgorithm::Grid;
    if (name == "linear") return LayoutAlgorithm::Linear;
    if (name == "random") return LayoutAlgorithm::Random;
    if (name == "fr") return LayoutAlgorithm::FruchtermanReingold;
    if (name == "forceatlas") return LayoutAlgorithm::ForceAtlas;
    throw Error("unknown layout '" + name +
                "' (expected circle, grid, linear, random, fr or forceatlas)");
}

double layerExtent(const MultilayerGraph& graph, const Layer& layer) {
    if (layer.members.empty()) {
        throw EmptyLayer(layer.key);
    }
    const Node& big = biggestNode(graph, layer);
    return big.size + big.labelWidth * static_cast<double>(layer.members.size());
}

LayerFrame layerFrame(const MultilayerGraph& graph, const Layer& layer) {
    LayoutConfig cfg;
    Scope s = layerScope(graph, layer, cfg);
    return LayerFrame{s.originX, s.originY, s.frameExtent};
}

void applyLayout(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg) {
    Scope s = layerScope(graph, layer, cfg);
    writeBack(graph, s, place(graph, s, cfg));
}

void applyLayoutWholeGraph(MultilayerGraph& graph, const LayoutConfig& cfg) {
    Scope s = wholeGraphScope(graph, cfg);
    writeBack(graph, s, place(graph, s, cfg));
}

void layoutCircle(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg) {
    runOnLayer(graph, layer, cfg, LayoutAlgorithm::Circle);
}

void layoutGrid(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg) {
    runOnLayer(graph, layer, cfg, LayoutAlgorithm::Grid);
}

void layoutLinear(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg) {
    runOnLayer(graph, layer, cfg, LayoutAlgorithm::Linear);
}

void layoutRandom(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg) {
    runOnLayer(graph, layer, cfg, LayoutAlgorithm::Random);
}

void layoutFruchtermanReingold(MultilayerGraph& graph, const Layer& layer,
                               const LayoutConfig& cfg) {
    runOnLayer(graph, layer, cfg, LayoutAlgorithm::FruchtermanReingold);
}

void layoutForceAtlas(MultilayerGraph& graph, const Layer& layer, const LayoutConfig& cfg) {
    runOnLayer(graph, layer, cfg, LayoutAlgorithm::ForceAtlas);
}

}  // namespace mlviz
