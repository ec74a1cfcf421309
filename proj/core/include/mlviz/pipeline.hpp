#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlviz/graph.hpp"
#include "mlviz/io/writers.hpp"
#include "mlviz/layout.hpp"
#include "mlviz/stack.hpp"

namespace mlviz {

enum class OutputFormat { Json, Gexf, Svg, Report };

// A full batch run: inputs, layering choice, layout/stack settings, outputs.
struct RunSpec {
    std::string inputPath;                       // .edges (multiplex) or .csv (nodes only)
    std::string layerTablePath;                  // optional "layerId layerLabel" file
    std::string nodeCsvPath;                     // optional node attribute CSV
    std::optional<std::string> layerAttribute;   // layer by node attribute when set
    LayoutConfig layout;
    StackConfig stack;
    StyleConfig style;
    double glyphWidth = kDefaultGlyphWidth;
    std::vector<std::pair<OutputFormat, std::string>> outputs;
};

struct RunResult {
    MultilayerGraph graph;      // stacked, positioned
    std::string manifestJson;   // config echo + seed + layer count
};

// parse -> merge attributes -> assign layers -> stack -> write outputs.
//
// Without layerAttribute the input must be a multiplex edge list and nodes
// are layered by edge layer label; an optional node CSV decorates nodes by
// their original (pre-replica) id. With layerAttribute, nodes come from the
// CSV (either inputPath itself or nodeCsvPath next to an edge list) and every
// edge endpoint must be one of them.
//
// Throws ParseError / MissingLayerAttribute / WriteError / Error; writes no
// partial outputs on failure before the write phase.
RunResult run(const RunSpec& spec);

}  // namespace mlviz
