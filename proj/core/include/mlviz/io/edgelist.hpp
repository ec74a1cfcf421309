#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mlviz/graph.hpp"

namespace mlviz {

// One line of a multiplex edge list: "layerId source target [weight]".
struct MpxEdgeRecord {
    int layerId = 0;
    std::string source;
    std::string target;
    double weight = 1.0;
};

// Reads a multiplex edge list. Fields are separated by spaces/tabs, "#"
// starts a comment line, blank lines are skipped. A missing weight field
// defaults to 1.0. Throws ParseError (1-based line/column) on a wrong field
// count, a non-positive or non-numeric layer id, or a bad weight.
std::vector<MpxEdgeRecord> parseMultiplexRecords(std::istream& in);

struct NodeTable;

// Builds the layered graph from parsed records: one replica of each node per
// layer it has edges in, plus coupling edges between consecutive replicas.
// Layer keys are taken from layerNames where present, otherwise the decimal
// layer id; layer order follows the numeric ids. A node table, when given,
// decorates the original nodes before replication (unknown ids ignored).
MultilayerGraph buildMultiplexGraph(const std::vector<MpxEdgeRecord>& records,
                                    const std::map<int, std::string>& layerNames = {},
                                    const NodeTable* nodes = nullptr,
                                    double glyphWidth = kDefaultGlyphWidth);

// parseMultiplexRecords + buildMultiplexGraph with numeric layer keys.
MultilayerGraph parseMultiplexEdgeList(std::istream& in);

// Reads "layerId layerLabel" lines; a leading "layerID layerLabel" header is
// skipped. The label is the rest of the line. Throws ParseError on a
// duplicate id or malformed line.
std::map<int, std::string> parseLayerTable(std::istream& in);

// Node attribute table from CSV.
struct NodeRecord {
    std::string id;
    std::optional<std::string> label;
    std::optional<double> size;
    std::map<std::string, std::string> attributes;
};

struct NodeTable {
    std::vector<std::string> order;  // ids in file order
    std::unordered_map<std::string, NodeRecord> rows;

    bool empty() const { return order.empty(); }
};

// RFC-4180-style CSV (quoted fields, "" escapes; embedded newlines are not
// supported). The header is required and its first column must be "id";
// "label" and "size" columns are recognized, all other columns become string
// attributes. Throws ParseError on a missing id column, a duplicate id or a
// malformed row.
NodeTable parseNodeCsv(std::istream& in);

// Applies a node table to existing nodes: label (default id), size (default
// 10) and attributes. Rows whose id is not in the graph are ignored.
void applyNodeTable(MultilayerGraph& graph, const NodeTable& table,
                    double glyphWidth = kDefaultGlyphWidth);

// Builds nodes (no edges) from a table, for node-attribute layering.
MultilayerGraph graphFromNodeTable(const NodeTable& table,
                                   double glyphWidth = kDefaultGlyphWidth);

}  // namespace mlviz
