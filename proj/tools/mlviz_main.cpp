// mlviz: multilayer network layout tool.
//
// Reads a multiplex edge list (or a node CSV for attribute layering), runs a
// per-layer or whole-network layout, stacks the layers and writes JSON, GEXF,
// SVG and/or a quality report. Exit codes: 0 ok, 1 parse/usage error,
// 2 missing layer attribute, 3 write failure.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mlviz/errors.hpp"
#include "mlviz/pipeline.hpp"

namespace {

int runCli(int argc, char** argv) {
    CLI::App app{"mlviz - multilayer network layouts"};

    mlviz::RunSpec spec;
    std::string layout = "fr";
    bool horizontal = false;
    std::string jsonPath;
    std::string gexfPath;
    std::string svgPath;
    std::string reportPath;

    app.add_option("--input", spec.inputPath,
                   "Multiplex edge list ('layerId src dst [weight]') or node CSV")
        ->required();
    app.add_option("--layers", spec.layerTablePath,
                   "Layer name table ('layerId layerLabel')");
    app.add_option("--nodes", spec.nodeCsvPath,
                   "Node CSV (header 'id[,label][,size],...' with attribute columns)");
    std::string layerAttr;
    auto* attrOpt = app.add_option(
        "--layer-attr", layerAttr, "Node attribute to layer by (default: edge layer)");

    app.add_option("--layout", layout,
                   "Layout: circle, grid, linear, random, fr, forceatlas")
        ->capture_default_str();
    app.add_option("--iterations", spec.layout.iterations,
                   "Force-layout iterations")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--speed", spec.layout.speed, "Force-layout speed factor")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--gravity", spec.layout.gravity, "Pull toward the layer origin")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app.add_option("--area", spec.layout.area, "Force-layout area (px^2)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", spec.layout.seed, "Random seed")->capture_default_str();

    app.add_option("--layer-distance", spec.stack.layerDistance,
                   "Gap between stacked layers (px)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--horizontal", horizontal, "Stack layers along x instead of y");
    app.add_flag("--3d", spec.stack.threeD, "Pseudo-3D projection (65 deg)");
    app.add_flag("--split-by-level", spec.stack.splitByLevel,
                 "Lay out the whole network once, then pull layers apart");
    app.add_flag("--sort-layers", spec.stack.sortLayers,
                 "Order layers by node count, smallest first");
    app.add_flag("--labels", spec.style.drawLabels, "Draw node labels in the SVG");

    app.add_option("--json", jsonPath, "Write positioned graph JSON to this path");
    app.add_option("--gexf", gexfPath, "Write GEXF 1.2 to this path");
    app.add_option("--svg", svgPath, "Write SVG to this path");
    app.add_option("--report", reportPath,
                   "Write per-layer quality report (.json for JSON, else text)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (attrOpt->count() > 0) {
        spec.layerAttribute = layerAttr;
    }
    spec.stack.orientation =
        horizontal ? mlviz::Orientation::Horizontal : mlviz::Orientation::Vertical;
    if (!jsonPath.empty()) {
        spec.outputs.emplace_back(mlviz::OutputFormat::Json, jsonPath);
    }
    if (!gexfPath.empty()) {
        spec.outputs.emplace_back(mlviz::OutputFormat::Gexf, gexfPath);
    }
    if (!svgPath.empty()) {
        spec.outputs.emplace_back(mlviz::OutputFormat::Svg, svgPath);
    }
    if (!reportPath.empty()) {
        spec.outputs.emplace_back(mlviz::OutputFormat::Report, reportPath);
    }

    try {
        spec.layout.algorithm = mlviz::layoutFromName(layout);
        mlviz::RunResult result = mlviz::run(spec);
        std::cout << result.manifestJson << "\n";
        return 0;
    } catch (const mlviz::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const mlviz::MissingLayerAttribute& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mlviz::WriteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) { return runCli(argc, argv); }
