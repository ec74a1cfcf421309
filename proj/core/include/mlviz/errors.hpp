#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlviz {

// Base for all recoverable engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text. Line and column are 1-based; column 0 means the
// position could not be narrowed below the whole line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& reason)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": " + reason),
          line(line),
          column(column),
          reason(reason) {}

    std::size_t line;
    std::size_t column;
    std::string reason;
};

class MissingLayerAttribute : public Error {
public:
    explicit MissingLayerAttribute(const std::string& message) : Error(message) {}

    MissingLayerAttribute(const std::string& nodeId, const std::string& attribute)
        : Error("node '" + nodeId + "' has no value for layer attribute '" + attribute + "'"),
          nodeId(nodeId),
          attribute(attribute) {}

    std::string nodeId;
    std::string attribute;
};

class EmptyGraph : public Error {
public:
    EmptyGraph() : Error("graph has no nodes") {}
};

class EmptyLayer : public Error {
public:
    explicit EmptyLayer(const std::string& layerKey)
        : Error("layer '" + layerKey + "' has no members"), layerKey(layerKey) {}

    std::string layerKey;
};

class SingleLayer : public Error {
public:
    SingleLayer() : Error("operation needs at least two layers") {}
};

class NonFinitePosition : public Error {
public:
    explicit NonFinitePosition(const std::string& nodeId)
        : Error("node '" + nodeId + "' has a non-finite coordinate"), nodeId(nodeId) {}

    std::string nodeId;
};

class WriteError : public Error {
public:
    explicit WriteError(const std::string& path)
        : Error("cannot write '" + path + "'"), path(path) {}

    std::string path;
};

}  // namespace mlviz
