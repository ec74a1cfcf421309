#include "mlviz/io/edgelist.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>

#include "mlviz/errors.hpp"

namespace mlviz {

namespace {

struct Token {
    std::string text;
    std::size_t column = 0;  // 1-based
};

std::vector<Token> splitFields(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

std::string stripCr(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

bool blankOrComment(const std::string& line) {
    for (char c : line) {
        if (c == '#') {
            return true;
        }
        if (c != ' ' && c != '\t') {
            return false;
        }
    }
    return true;
}

int parsePositiveInt(const Token& tok, std::size_t lineNo, const char* what) {
    const std::string& s = tok.text;
    if (s.empty() || !std::all_of(s.begin(), s.end(),
                                  [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw ParseError(lineNo, tok.column, std::string(what) + " '" + s +
                                                 "' is not a positive integer");
    }
    errno = 0;
    long v = std::strtol(s.c_str(), nullptr, 10);
    if (errno != 0 || v <= 0 || v > 1000000000L) {
        throw ParseError(lineNo, tok.column, std::string(what) + " '" + s +
                                                 "' is out of range");
    }
    return static_cast<int>(v);
}

double parsePositiveReal(const Token& tok, std::size_t lineNo, const char* what) {
    const std::string& s = tok.text;
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno != 0 || !(v > 0.0) ||
        !std::isfinite(v)) {
        throw ParseError(lineNo, tok.column,
                         std::string(what) + " '" + s + "' is not a positive number");
    }
    return v;
}

}  // namespace

std::vector<MpxEdgeRecord> parseMultiplexRecords(std::istream& in) {
    std::vector<MpxEdgeRecord> records;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        line = stripCr(line);
        if (blankOrComment(line)) {
            continue;
        }
        std::vector<Token> fields = splitFields(line);
        if (fields.size() < 3) {
            throw ParseError(lineNo, line.size() + 1,
                             "expected 'layerId source target [weight]', got " +
                                 std::to_string(fields.size()) + " field(s)");
        }
        if (fields.size() > 4) {
            throw ParseError(lineNo, fields[4].column,
                             "expected at most 4 fields, got " +
                                 std::to_string(fields.size()));
        }
        MpxEdgeRecord rec;
        rec.layerId = parsePositiveInt(fields[0], lineNo, "layer id");
        rec.source = fields[1].text;
        rec.target = fields[2].text;
        rec.weight = fields.size() == 4 ? parsePositiveReal(fields[3], lineNo, "weight")
                                        : 1.0;
        records.push_back(std::move(rec));
    }
    return records;
}

MultilayerGraph buildMultiplexGraph(const std::vector<MpxEdgeRecord>& records,
                                    const std::map<int, std::string>& layerNames,
                                    const NodeTable* nodes, double glyphWidth) {
    auto keyFor = [&](int layerId) {
        auto it = layerNames.find(layerId);
        return it != layerNames.end() ? it->second : std::to_string(layerId);
    };

    std::set<int> layerIds;
    for (const MpxEdgeRecord& rec : records) {
        layerIds.insert(rec.layerId);
    }
    std::vector<std::string> keyOrder;
    for (int id : layerIds) {
        keyOrder.push_back(keyFor(id));
    }

    MultilayerGraph base;
    for (const MpxEdgeRecord& rec : records) {
        base.ensureNode(rec.source, glyphWidth);
        base.ensureNode(rec.target, glyphWidth);
    }
    if (base.nodes().empty()) {
        throw EmptyGraph();
    }
    if (nodes) {
        applyNodeTable(base, *nodes, glyphWidth);
    }
    for (const MpxEdgeRecord& rec : records) {
        Edge e;
        e.source = rec.source;
        e.target = rec.target;
        e.weight = rec.weight;
        e.layerLabel = keyFor(rec.layerId);
        base.addEdge(std::move(e));
    }
    return assignLayers(base, LayerSource::edgeLayerLabel(), keyOrder);
}

MultilayerGraph parseMultiplexEdgeList(std::istream& in) {
    return buildMultiplexGraph(parseMultiplexRecords(in));
}

std::map<int, std::string> parseLayerTable(std::istream& in) {
    std::map<int, std::string> table;
    std::string line;
    std::size_t lineNo = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineNo;
        line = stripCr(line);
        if (blankOrComment(line)) {
            continue;
        }
        std::vector<Token> fields = splitFields(line);
        if (first) {
            first = false;
            std::string head = fields[0].text;
            std::transform(head.begin(), head.end(), head.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            if (head == "layerid") {
                continue;
            }
        }
        if (fields.size() < 2) {
            throw ParseError(lineNo, line.size() + 1, "expected 'layerId layerLabel'");
        }
        int id = parsePositiveInt(fields[0], lineNo, "layer id");
        // Label is the rest of the line; layer names may contain spaces.
        std::string label = line.substr(fields[1].column - 1);
        while (!label.empty() && (label.back() == ' ' || label.back() == '\t')) {
            label.pop_back();
        }
        if (!table.emplace(id, label).second) {
            throw ParseError(lineNo, fields[0].column,
                             "duplicate layer id '" + fields[0].text + "'");
        }
    }
    return table;
}

namespace {

std::vector<std::string> splitCsvLine(const std::string& line, std::size_t lineNo) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
        ++i;
    }
    if (quoted) {
        throw ParseError(lineNo, line.size() + 1, "unterminated quoted field");
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

NodeTable parseNodeCsv(std::istream& in) {
    NodeTable table;
    std::string line;
    std::size_t lineNo = 0;

    if (!std::getline(in, line)) {
        throw ParseError(1, 1, "missing id column (empty file)");
    }
    ++lineNo;
    std::vector<std::string> header = splitCsvLine(stripCr(line), lineNo);
    if (header.empty() || header[0] != "id") {
        throw ParseError(1, 1, "missing id column (header must begin with 'id')");
    }

    while (std::getline(in, line)) {
        ++lineNo;
        line = stripCr(line);
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields = splitCsvLine(line, lineNo);
        if (fields.size() != header.size()) {
            throw ParseError(lineNo, 1,
                             "expected " + std::to_string(header.size()) +
                                 " fields, got " + std::to_string(fields.size()));
        }
        NodeRecord rec;
        rec.id = fields[0];
        if (rec.id.empty()) {
            throw ParseError(lineNo, 1, "empty node id");
        }
        for (std::size_t c = 1; c < header.size(); ++c) {
            const std::string& name = header[c];
            const std::string& value = fields[c];
            if (name == "label") {
                rec.label = value;
            } else if (name == "size") {
                if (value.empty()) {
                    continue;  // keep the default
                }
                char* end = nullptr;
                double v = std::strtod(value.c_str(), &end);
                if (end != value.c_str() + value.size() || !(v > 0.0)) {
                    throw ParseError(lineNo, 1,
                                     "size '" + value + "' is not a positive number");
                }
                rec.size = v;
            } else {
                rec.attributes[name] = value;
            }
        }
        if (!table.rows.emplace(rec.id, rec).second) {
            throw ParseError(lineNo, 1, "duplicate node id '" + rec.id + "'");
        }
        table.order.push_back(rec.id);
    }
    return table;
}

void applyNodeTable(MultilayerGraph& graph, const NodeTable& table, double glyphWidth) {
    for (const std::string& id : table.order) {
        if (!graph.hasNode(id)) {
            continue;
        }
        const NodeRecord& rec = table.rows.at(id);
        Node& n = graph.node(id);
        if (rec.label) {
            n.label = *rec.label;
            n.labelWidth = labelWidthFor(n.label, glyphWidth);
        }
        if (rec.size) {
            n.size = *rec.size;
        }
        for (const auto& [k, v] : rec.attributes) {
            n.attributes[k] = v;
        }
    }
}

MultilayerGraph graphFromNodeTable(const NodeTable& table, double glyphWidth) {
    MultilayerGraph g;
    for (const std::string& id : table.order) {
        const NodeRecord& rec = table.rows.at(id);
        Node n;
        n.id = id;
        n.label = rec.label.value_or(id);
        n.labelWidth = labelWidthFor(n.label, glyphWidth);
        if (rec.size) {
            n.size = *rec.size;
        }
        n.attributes = rec.attributes;
        g.addNode(std::move(n));
    }
    return g;
}

}  // namespace mlviz
