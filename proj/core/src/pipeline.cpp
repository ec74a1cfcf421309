#include "mlviz/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mlviz/errors.hpp"
#include "mlviz/io/edgelist.hpp"
#include "mlviz/io/format.hpp"
#include "mlviz/metrics.hpp"

namespace mlviz {

namespace {

bool hasCsvExtension(const std::string& path) {
    if (path.size() < 4) {
        return false;
    }
    std::string ext = path.substr(path.size() - 4);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext == ".csv";
}

std::ifstream openInput(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    return in;
}

MultilayerGraph loadGraph(const RunSpec& spec) {
    const bool csvInput = hasCsvExtension(spec.inputPath);

    std::vector<MpxEdgeRecord> records;
    if (!csvInput) {
        auto in = openInput(spec.inputPath);
        records = parseMultiplexRecords(in);
    }

    NodeTable nodeTable;
    if (csvInput) {
        if (!spec.nodeCsvPath.empty()) {
            throw Error("--nodes cannot be combined with a CSV input file");
        }
        if (!spec.layerTablePath.empty()) {
            throw Error("--layers needs a multiplex edge-list input");
        }
        auto in = openInput(spec.inputPath);
        nodeTable = parseNodeCsv(in);
    } else if (!spec.nodeCsvPath.empty()) {
        auto in = openInput(spec.nodeCsvPath);
        nodeTable = parseNodeCsv(in);
    }

    if (spec.layerAttribute) {
        // Node-attribute layering: nodes come from the CSV, edges (if any)
        // must connect them. Edge-list layer ids carry no meaning here.
        if (nodeTable.empty()) {
            throw MissingLayerAttribute(
                "layer attribute '" + *spec.layerAttribute +
                "' requires a node CSV that defines the attribute");
        }
        MultilayerGraph base = graphFromNodeTable(nodeTable, spec.glyphWidth);
        for (const MpxEdgeRecord& rec : records) {
            Edge e;
            e.source = rec.source;
            e.target = rec.target;
            e.weight = rec.weight;
            base.addEdge(std::move(e));
        }
        return assignLayers(base, LayerSource::nodeAttribute(*spec.layerAttribute));
    }

    if (csvInput) {
        throw MissingLayerAttribute(
            "input '" + spec.inputPath +
            "' is a node table; node-attributed inputs need --layer-attr");
    }

    std::map<int, std::string> layerNames;
    if (!spec.layerTablePath.empty()) {
        auto in = openInput(spec.layerTablePath);
        layerNames = parseLayerTable(in);
    }
    // Node decoration happens before replication so replicas inherit labels,
    // sizes and attributes.
    return buildMultiplexGraph(records, layerNames, &nodeTable, spec.glyphWidth);
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw WriteError(path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw WriteError(path);
    }
}

std::string buildManifest(const RunSpec& spec, const MultilayerGraph& g) {
    using detail::fixedNumber;
    using detail::jsonString;
    std::ostringstream out;
    out << "{";
    out << "\"input\":" << jsonString(spec.inputPath);
    out << ",\"layerSource\":"
        << jsonString(spec.layerAttribute ? "node-attribute:" + *spec.layerAttribute
                                          : "edge-layer-label");
    out << ",\"layout\":" << jsonString(layoutName(spec.layout.algorithm));
    out << ",\"seed\":" << spec.layout.seed;
    out << ",\"iterations\":" << spec.layout.iterations;
    out << ",\"speed\":" << fixedNumber(spec.layout.speed);
    out << ",\"gravity\":" << fixedNumber(spec.layout.gravity);
    out << ",\"area\":" << fixedNumber(spec.layout.area);
    out << ",\"layerDistance\":" << fixedNumber(spec.stack.layerDistance);
    out << ",\"orientation\":"
        << (spec.stack.orientation == Orientation::Horizontal ? "\"horizontal\""
                                                              : "\"vertical\"");
    out << ",\"threeD\":" << (spec.stack.threeD ? "true" : "false");
    out << ",\"splitByLevel\":" << (spec.stack.splitByLevel ? "true" : "false");
    out << ",\"sortLayers\":" << (spec.stack.sortLayers ? "true" : "false");
    out << ",\"layers\":" << g.layers().size();
    out << ",\"nodes\":" << g.nodes().size();
    out << ",\"edges\":" << g.edges().size();
    out << ",\"outputs\":[";
    for (std::size_t i = 0; i < spec.outputs.size(); ++i) {
        out << (i ? "," : "") << jsonString(spec.outputs[i].second);
    }
    out << "]}";
    return out.str();
}

}  // namespace

RunResult run(const RunSpec& spec) {
    if (spec.outputs.empty()) {
        throw Error("no output requested (use --json, --gexf, --svg or --report)");
    }
    if (spec.inputPath.empty()) {
        throw Error("no input file given");
    }

    MultilayerGraph graph = loadGraph(spec);
    graph = stack(graph, spec.layout, spec.stack);

    OutputMeta meta;
    meta.layout = spec.layout;
    meta.stack = spec.stack;
    meta.layerSourceDesc = describeLayerSource(graph.layerSource());

    for (const auto& [format, path] : spec.outputs) {
        switch (format) {
            case OutputFormat::Json:
                writeFile(path, writePositionedJson(graph, meta));
                break;
            case OutputFormat::Gexf:
                writeFile(path, writeGexf(graph));
                break;
            case OutputFormat::Svg:
                writeFile(path, renderSvg(graph, spec.style));
                break;
            case OutputFormat::Report: {
                auto reports = report(graph);
                bool json = path.size() >= 5 &&
                            path.compare(path.size() - 5, 5, ".json") == 0;
                writeFile(path, json ? reportJson(reports) : reportTable(reports));
                break;
            }
        }
    }

    std::string manifest = buildManifest(spec, graph);
    return RunResult{std::move(graph), std::move(manifest)};
}

}  // namespace mlviz
