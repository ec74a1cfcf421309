#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "mlviz/errors.hpp"
#include "mlviz/io/edgelist.hpp"
#include "mlviz/io/writers.hpp"
#include "mlviz/stack.hpp"
#include "support.hpp"

using namespace mlviz;
using testsupport::attributedGraph;

namespace {

MultilayerGraph parseText(const std::string& text) {
    std::istringstream in(text);
    return parseMultiplexEdgeList(in);
}

OutputMeta defaultMeta(const MultilayerGraph& g) {
    OutputMeta meta;
    meta.layerSourceDesc = describeLayerSource(g.layerSource());
    return meta;
}

// Test-side GEXF reader: counts <node> elements in the <nodes> section.
// Deliberately independent of the writer.
std::size_t gexfNodeCount(const std::string& xml) {
    std::size_t begin = xml.find("<nodes>");
    std::size_t end = xml.find("</nodes>");
    REQUIRE(begin != std::string::npos);
    REQUIRE(end != std::string::npos);
    std::size_t count = 0;
    for (std::size_t pos = xml.find("<node ", begin);
         pos != std::string::npos && pos < end; pos = xml.find("<node ", pos + 1)) {
        ++count;
    }
    return count;
}

std::set<std::string> intraStrokeColors(const std::string& svg) {
    std::set<std::string> colors;
    std::size_t pos = 0;
    while ((pos = svg.find("stroke=\"", pos)) != std::string::npos) {
        pos += 8;
        std::size_t end = svg.find('"', pos);
        std::string color = svg.substr(pos, end - pos);
        if (color != "gray") {
            colors.insert(color);
        }
    }
    return colors;
}

}  // namespace

TEST_CASE("multiplex edge list parses into replicas and coupling edges") {
    auto g = parseText("1 a b 1.0\n2 a c 2.0\n");
    CHECK(g.layers().size() == 2);
    CHECK(g.nodes().size() == 4);  // a@1, b@1, a@2, c@2
    std::size_t couplings = 0;
    for (const Edge& e : g.edges()) {
        couplings += e.kind == EdgeKind::InterLayer ? 1 : 0;
    }
    CHECK(couplings == 1);
}

TEST_CASE("multiplex parser accepts comments, blanks and 3-field lines") {
    auto g = parseText("# comment\n\n  \t\n1 a b\n1 b c 2.5\n");
    CHECK(g.layers().size() == 1);
    double firstWeight = 0.0;
    for (const Edge& e : g.edges()) {
        if (e.source == "a@1") {
            firstWeight = e.weight;
        }
    }
    CHECK(firstWeight == doctest::Approx(1.0));  // missing weight defaults to 1
}

TEST_CASE("multiplex parser reports 1-based line numbers") {
    SUBCASE("too few fields") {
        try {
            parseText("1 a");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 1);
        }
    }
    SUBCASE("error on a later line") {
        try {
            parseText("1 a b 1.0\n1 a b 1.0\nbogus\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
    SUBCASE("non-numeric layer id") {
        CHECK_THROWS_AS(parseText("x a b 1.0"), ParseError);
        CHECK_THROWS_AS(parseText("0 a b 1.0"), ParseError);
        CHECK_THROWS_AS(parseText("-1 a b 1.0"), ParseError);
    }
    SUBCASE("bad weight column is reported") {
        try {
            parseText("1 a b nope");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 1);
            CHECK(e.column == 7);
        }
    }
    SUBCASE("five fields") {
        CHECK_THROWS_AS(parseText("1 a b 1.0 extra"), ParseError);
    }
}

TEST_CASE("layer table parsing") {
    SUBCASE("header is skipped, names map by id") {
        std::istringstream in("layerID layerLabel\n1 Tube\n2 Overground\n3 DLR\n");
        auto table = parseLayerTable(in);
        REQUIRE(table.size() == 3);
        CHECK(table.at(1) == "Tube");
        CHECK(table.at(2) == "Overground");
        CHECK(table.at(3) == "DLR");
    }
    SUBCASE("duplicate ids are rejected") {
        std::istringstream in("1 X\n1 Y\n");
        CHECK_THROWS_AS(parseLayerTable(in), ParseError);
    }
    SUBCASE("empty file gives an empty map") {
        std::istringstream in("");
        CHECK(parseLayerTable(in).empty());
    }
    SUBCASE("labels may contain spaces") {
        std::istringstream in("1 Physical association\n");
        auto table = parseLayerTable(in);
        CHECK(table.at(1) == "Physical association");
    }
}

TEST_CASE("layer table renames multiplex layer keys") {
    std::istringstream edges("1 a b\n2 b c\n");
    auto records = parseMultiplexRecords(edges);
    auto g = buildMultiplexGraph(records, {{1, "Tube"}, {2, "DLR"}});
    REQUIRE(g.layers().size() == 2);
    CHECK(g.layers()[0].key == "Tube");  // file order 1, 2 kept despite "DLR" < "Tube"
    CHECK(g.layers()[1].key == "DLR");
    CHECK(g.hasNode("a@Tube"));
    CHECK(g.hasNode("c@DLR"));
}

TEST_CASE("node CSV parsing") {
    SUBCASE("attribute columns are kept as strings") {
        std::istringstream in("id,label,type\nn1,Asthma,disorder\n");
        auto table = parseNodeCsv(in);
        REQUIRE(table.rows.count("n1") == 1);
        CHECK(table.rows.at("n1").label == "Asthma");
        CHECK(table.rows.at("n1").attributes.at("type") == "disorder");
    }
    SUBCASE("header-only file is an empty table") {
        std::istringstream in("id\n");
        CHECK(parseNodeCsv(in).empty());
    }
    SUBCASE("duplicate ids are rejected") {
        std::istringstream in("id,label\nn1,A\nn1,B\n");
        CHECK_THROWS_AS(parseNodeCsv(in), ParseError);
    }
    SUBCASE("missing id column is rejected") {
        std::istringstream in("name,label\nn1,A\n");
        CHECK_THROWS_AS(parseNodeCsv(in), ParseError);
    }
    SUBCASE("quoted fields with commas and escaped quotes") {
        std::istringstream in("id,label\nn1,\"a, \"\"b\"\"\"\n");
        auto table = parseNodeCsv(in);
        CHECK(table.rows.at("n1").label == "a, \"b\"");
    }
    SUBCASE("bad size is rejected") {
        std::istringstream in("id,size\nn1,big\n");
        CHECK_THROWS_AS(parseNodeCsv(in), ParseError);
    }
}

TEST_CASE("node table decorates multiplex nodes before replication") {
    std::istringstream edges("1 a b\n2 a c\n");
    std::istringstream csv("id,label,size,color\na,Alpha,22,tomato\n");
    auto records = parseMultiplexRecords(edges);
    auto table = parseNodeCsv(csv);
    auto g = buildMultiplexGraph(records, {}, &table);
    CHECK(g.node("a@1").label == "Alpha");
    CHECK(g.node("a@2").size == doctest::Approx(22.0));
    CHECK(g.node("a@2").attributes.at("color") == "tomato");
    CHECK(g.node("b@1").label == "b");  // untouched default
}

TEST_CASE("positioned JSON is sorted, fixed-point and round-trippable") {
    auto g = attributedGraph({{"b", "1", 10.0}, {"a", "1", 10.0}, {"c", "2", 12.0}},
                             {{"a", "b"}, {"a", "c"}});
    g.node("a").pos = {1.5, -2.25, 0.0};
    g.node("b").pos = {0.0, 0.0, 0.0};
    g.node("c").pos = {100.000001, 3.0, 0.0};

    std::string text = writePositionedJson(g, defaultMeta(g));
    CHECK(text.find("\"x\":0.000000") != std::string::npos);

    auto parsed = nlohmann::json::parse(text);
    REQUIRE(parsed["nodes"].size() == 3);
    CHECK(parsed["nodes"][0]["id"] == "a");  // layer 1 before layer 2, id-sorted
    CHECK(parsed["nodes"][1]["id"] == "b");
    CHECK(parsed["meta"]["layers"] == 2);
    for (const auto& jn : parsed["nodes"]) {
        const Node& n = g.node(jn["id"].get<std::string>());
        CHECK(std::abs(jn["x"].get<double>() - n.pos.x) <= 1e-6);
        CHECK(std::abs(jn["y"].get<double>() - n.pos.y) <= 1e-6);
        CHECK(jn["layer"] == g.layers()[g.layerOrdinalOf(n.id)].key);
    }
}

TEST_CASE("JSON writer rejects non-finite positions") {
    auto g = attributedGraph({{"a", "1"}});
    g.node("a").pos.y = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(writePositionedJson(g, defaultMeta(g)), NonFinitePosition);
    g.node("a").pos.y = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(writeGexf(g), NonFinitePosition);
    CHECK_THROWS_AS(renderSvg(g), NonFinitePosition);
}

TEST_CASE("edge-list multiset survives a JSON round trip") {
    std::string text = "1 a b 1.5\n1 a b 1.5\n2 b c 2\n3 a c 0.25\n";
    std::istringstream in(text);
    auto records = parseMultiplexRecords(in);
    auto g = buildMultiplexGraph(records);

    auto parsed = nlohmann::json::parse(writePositionedJson(g, defaultMeta(g)));
    std::multiset<std::tuple<std::string, std::string, std::string, double>> got;
    for (const auto& je : parsed["edges"]) {
        if (je["kind"] == "intra") {
            std::string src = je["source"].get<std::string>();
            std::string dst = je["target"].get<std::string>();
            got.insert({je["layer"].get<std::string>(),
                        src.substr(0, src.find('@')), dst.substr(0, dst.find('@')),
                        je["weight"].get<double>()});
        }
    }
    std::multiset<std::tuple<std::string, std::string, std::string, double>> want;
    for (const auto& r : records) {
        want.insert({std::to_string(r.layerId), r.source, r.target, r.weight});
    }
    CHECK(got == want);
}

TEST_CASE("GEXF carries viz position, size and the layer attvalue") {
    auto g = attributedGraph({{"n", "A", 10.0}});
    g.node("n").pos = {1.0, 2.0, 0.0};
    std::string xml = writeGexf(g);
    CHECK(xml.find("<viz:position x=\"1.0\" y=\"2.0\" z=\"0.0\"/>") != std::string::npos);
    CHECK(xml.find("<attvalue for=\"0\" value=\"A\"/>") != std::string::npos);
    CHECK(xml.find("version=\"1.2\"") != std::string::npos);
    CHECK(gexfNodeCount(xml) == 1);
}

TEST_CASE("GEXF of an edgeless graph still has an edges element") {
    auto g = attributedGraph({{"a", "1"}, {"b", "2"}});
    std::string xml = writeGexf(g);
    CHECK(xml.find("<edges>") != std::string::npos);
    CHECK(xml.find("<edge ") == std::string::npos);
    CHECK(gexfNodeCount(xml) == 2);
}

TEST_CASE("GEXF node count matches an independent reader on a real graph") {
    auto g = parseText("1 a b\n1 b c\n2 a c\n2 c d\n");
    CHECK(gexfNodeCount(writeGexf(g)) == g.nodes().size());
}

TEST_CASE("SVG basics") {
    SUBCASE("node circle is emitted verbatim") {
        auto g = attributedGraph({{"a", "1", 10.0}});
        std::string svg = renderSvg(g);
        CHECK(svg.find("<circle cx=\"0\" cy=\"0\" r=\"10\"") != std::string::npos);
    }
    SUBCASE("two layers get two intra stroke colors") {
        auto g = attributedGraph({{"a", "1"}, {"b", "1"}, {"c", "2"}, {"d", "2"}},
                                 {{"a", "b"}, {"c", "d"}, {"a", "c"}});
        std::string svg = renderSvg(g);
        CHECK(intraStrokeColors(svg).size() == 2);
        CHECK(svg.find("stroke=\"gray\" stroke-opacity=\"0.4\"") != std::string::npos);
    }
    SUBCASE("empty graph renders the unit viewBox") {
        MultilayerGraph g;
        std::string svg = renderSvg(g);
        CHECK(svg.find("viewBox=\"0 0 1 1\"") != std::string::npos);
    }
    SUBCASE("a color attribute overrides the layer fill") {
        auto g = attributedGraph({{"a", "1"}});
        g.node("a").attributes["color"] = "hotpink";
        CHECK(renderSvg(g).find("fill=\"hotpink\"") != std::string::npos);
    }
    SUBCASE("labels are emitted only when asked for") {
        auto g = attributedGraph({{"a", "1", 10.0, "Waterloo"}});
        CHECK(renderSvg(g).find("<text") == std::string::npos);
        StyleConfig style;
        style.drawLabels = true;
        std::string svg = renderSvg(g, style);
        CHECK(svg.find(">Waterloo</text>") != std::string::npos);
    }
}

TEST_CASE("serialization is byte-deterministic") {
    SplitMix64 rng(77);
    auto g = testsupport::randomGraph(rng);
    auto stacked = stack(g, LayoutConfig{}, StackConfig{});
    OutputMeta meta = defaultMeta(stacked);
    CHECK(writePositionedJson(stacked, meta) == writePositionedJson(stacked, meta));
    CHECK(writeGexf(stacked) == writeGexf(stacked));
    CHECK(renderSvg(stacked) == renderSvg(stacked));
}

TEST_CASE("fixture datasets reproduce their layer structure") {
    SUBCASE("London: three layers named from the table") {
        std::istringstream edges(testsupport::readFile(testsupport::dataPath("london.edges")));
        std::istringstream names(
            testsupport::readFile(testsupport::dataPath("london_layers.txt")));
        auto g = buildMultiplexGraph(parseMultiplexRecords(edges), parseLayerTable(names));
        REQUIRE(g.layers().size() == 3);
        CHECK(g.layers()[0].key == "Tube");
        CHECK(g.layers()[1].key == "Overground");
        CHECK(g.layers()[2].key == "DLR");
    }
    SUBCASE("Candida: seven interaction layers") {
        std::istringstream edges(testsupport::readFile(testsupport::dataPath("candida.edges")));
        std::istringstream names(
            testsupport::readFile(testsupport::dataPath("candida_layers.txt")));
        auto g = buildMultiplexGraph(parseMultiplexRecords(edges), parseLayerTable(names));
        CHECK(g.layers().size() == 7);
    }
    SUBCASE("Diseasome: disorders and genes by node attribute") {
        std::istringstream csv(
            testsupport::readFile(testsupport::dataPath("diseasome_nodes.csv")));
        std::istringstream edges(
            testsupport::readFile(testsupport::dataPath("diseasome.edges")));
        auto base = graphFromNodeTable(parseNodeCsv(csv));
        for (const auto& rec : parseMultiplexRecords(edges)) {
            Edge e;
            e.source = rec.source;
            e.target = rec.target;
            e.weight = rec.weight;
            base.addEdge(std::move(e));
        }
        auto g = assignLayers(base, LayerSource::nodeAttribute("type"));
        REQUIRE(g.layers().size() == 2);
        CHECK(g.layers()[0].key == "disorder");
        CHECK(g.layers()[1].key == "gene");
    }
}
