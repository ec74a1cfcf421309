#include <algorithm>
#include <cmath>
#include <sstream>

#include "mlviz/errors.hpp"
#include "mlviz/io/format.hpp"
#include "mlviz/io/writers.hpp"

namespace mlviz {

namespace {

using detail::decimalNumber;
using detail::xmlEscape;

}  // namespace

std::string writeGexf(const MultilayerGraph& graph) {
    for (const Node& n : graph.nodes()) {
        if (!std::isfinite(n.pos.x) || !std::isfinite(n.pos.y) || !std::isfinite(n.pos.z)) {
            throw NonFinitePosition(n.id);
        }
    }

    std::vector<const Node*> nodes;
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

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" "
           "xmlns:viz=\"http://www.gexf.net/1.2draft/viz\" version=\"1.2\">\n";
    out << "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n";
    out << "    <attributes class=\"node\">\n";
    out << "      <attribute id=\"0\" title=\"layer\" type=\"string\"/>\n";
    out << "    </attributes>\n";

    out << "    <nodes>\n";
    for (const Node* n : nodes) {
        std::string layerKey =
            graph.layersAssigned() ? graph.layers()[graph.layerOrdinalOf(n->id)].key : "";
        out << "      <node id=\"" << xmlEscape(n->id) << "\" label=\""
            << xmlEscape(n->label) << "\">\n";
        out << "        <attvalues><attvalue for=\"0\" value=\"" << xmlEscape(layerKey)
            << "\"/></attvalues>\n";
        out << "        <viz:size value=\"" << decimalNumber(n->size) << "\"/>\n";
        out << "        <viz:position x=\"" << decimalNumber(n->pos.x) << "\" y=\""
            << decimalNumber(n->pos.y) << "\" z=\"" << decimalNumber(n->pos.z)
            << "\"/>\n";
        out << "      </node>\n";
    }
    out << "    </nodes>\n";

    out << "    <edges>\n";
    std::size_t edgeId = 0;
    for (const Edge& e : graph.edges()) {
        out << "      <edge id=\"" << edgeId++ << "\" source=\"" << xmlEscape(e.source)
            << "\" target=\"" << xmlEscape(e.target) << "\" weight=\""
            << decimalNumber(e.weight) << "\"/>\n";
    }
    out << "    </edges>\n";
    out << "  </graph>\n";
    out << "</gexf>\n";
    return out.str();
}

}  // namespace mlviz
