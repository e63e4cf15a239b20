#pragma once

// JSON document formats of the command-line tool.  Input documents are parsed
// with nlohmann/json; output documents are emitted by the small fixed-schema
// writer below so every number carries 17 significant digits and reruns are
// byte-identical.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "xstrata/xstrata.hpp"

namespace xstrata::cli {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Append-only JSON writer; the caller supplies the schema.
class JsonOut {
public:
    JsonOut& raw(const char* s) {
        sep_ = false;
        os_ << s;
        return *this;
    }
    JsonOut& key(const char* k) {
        comma();
        os_ << '"' << k << "\":";
        sep_ = false;
        return *this;
    }
    JsonOut& value(double v) { return atom(fmt(v)); }
    JsonOut& value(int v) { return atom(std::to_string(v)); }
    JsonOut& value(std::uint64_t v) { return atom(std::to_string(v)); }
    JsonOut& value(bool v) { return atom(v ? "true" : "false"); }
    JsonOut& value(const char* s) { return value(std::string_view(s)); }
    JsonOut& value(std::string_view s) {
        comma();
        os_ << '"' << s << '"';
        sep_ = true;
        return *this;
    }
    JsonOut& null() { return atom("null"); }
    JsonOut& begin_object() {
        comma();
        os_ << '{';
        sep_ = false;
        return *this;
    }
    JsonOut& end_object() {
        os_ << '}';
        sep_ = true;
        return *this;
    }
    JsonOut& begin_array() {
        comma();
        os_ << '[';
        sep_ = false;
        return *this;
    }
    JsonOut& end_array() {
        os_ << ']';
        sep_ = true;
        return *this;
    }
    std::string str() const { return os_.str(); }

private:
    JsonOut& atom(const std::string& s) {
        comma();
        os_ << s;
        sep_ = true;
        return *this;
    }
    void comma() {
        if (sep_) os_ << ',';
        sep_ = false;
    }
    std::ostringstream os_;
    bool sep_ = false;
};

/// A state given either as the seven named coordinates or as a 4x4 matrix of
/// [re, im] pairs; exactly one representation is present.
struct StateDocument {
    std::optional<XCoords> coords;
    std::optional<Matrix4> matrix;
};

inline XCoords parse_coords(const nlohmann::json& j) {
    static constexpr const char* names[7] = {"h3", "h6", "h7", "h8", "h10", "h11", "h15"};
    std::array<double, 7> v{};
    if (!j.is_object()) throw std::invalid_argument("field 'coords' must be an object");
    for (std::size_t k = 0; k < 7; ++k) {
        if (!j.contains(names[k]))
            throw std::invalid_argument(std::string("field 'coords.") + names[k] + "' is missing");
        if (!j[names[k]].is_number())
            throw std::invalid_argument(std::string("field 'coords.") + names[k] +
                                        "' must be a number");
        v[k] = j[names[k]].get<double>();
    }
    return XCoords::from_array(v);
}

inline Matrix4 parse_matrix(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("field 'matrix' must be a 4-row array");
    Matrix4 m;
    for (std::size_t r = 0; r < 4; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != 4)
            throw std::invalid_argument("field 'matrix' row " + std::to_string(r) +
                                        " must have 4 entries");
        for (std::size_t c = 0; c < 4; ++c) {
            const auto& e = row[c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw std::invalid_argument("field 'matrix' entry (" + std::to_string(r) + "," +
                                            std::to_string(c) + ") must be a [re, im] pair");
            m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

inline StateDocument parse_state_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("document is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("document root must be an object");
    const bool has_coords = j.contains("coords");
    const bool has_matrix = j.contains("matrix");
    if (has_coords == has_matrix)
        throw std::invalid_argument(
            "document must contain exactly one of the fields 'coords' and 'matrix'");
    StateDocument doc;
    if (has_coords)
        doc.coords = parse_coords(j["coords"]);
    else
        doc.matrix = parse_matrix(j["matrix"]);
    return doc;
}

/// Coordinates of the document's state; matrix input must be X-shaped.
inline XCoords document_coords(const StateDocument& doc, double tol) {
    if (doc.coords) return *doc.coords;
    return from_matrix(*doc.matrix, tol);
}

inline void write_coords(JsonOut& o, const XCoords& h) {
    static constexpr const char* names[7] = {"h3", "h6", "h7", "h8", "h10", "h11", "h15"};
    const std::array<double, 7> v = h.to_array();
    o.begin_object();
    for (std::size_t k = 0; k < 7; ++k) o.key(names[k]).value(v[k]);
    o.end_object();
}

inline void write_matrix(JsonOut& o, const Matrix4& m) {
    o.begin_array();
    for (std::size_t r = 0; r < 4; ++r) {
        o.begin_array();
        for (std::size_t c = 0; c < 4; ++c)
            o.begin_array().value(m(r, c).real()).value(m(r, c).imag()).end_array();
        o.end_array();
    }
    o.end_array();
}

inline std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace xstrata::cli
