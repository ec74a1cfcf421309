#include "mlviz/io/format.hpp"

#include <cstdio>

namespace mlviz::detail {

std::string fixedNumber(double v) {
    if (v == 0.0) {
        v = 0.0;  // collapse -0.0
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") {
        s = "0.000000";
    }
    return s;
}

std::string decimalNumber(double v) {
    std::string s = fixedNumber(v);
    std::size_t last = s.find_last_not_of('0');
    if (s[last] == '.') {
        ++last;  // keep one zero after the point
    }
    return s.substr(0, last + 1);
}

std::string compactNumber(double v) {
    std::string s = decimalNumber(v);
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, ".0") == 0) {
        s.erase(s.size() - 2);
    }
    return s;
}

std::string jsonString(const std::string& s) {
    std::string out = "\"";
    for (unsigned char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\r':
                out += "\\r";
                break;
            case '\t':
                out += "\\t";
                break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += '"';
    return out;
}

std::string xmlEscape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            case '\'':
                out += "&apos;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

}  // namespace mlviz::detail
