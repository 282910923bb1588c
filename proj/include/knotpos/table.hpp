#pragma once
// Named knot tables: one "name presentation [mirror]" per line, '#' comments.
// The presentation format is recognized from its first token.

#include <fstream>

#include "knotpos/diagram.hpp"

namespace knotpos {

inline Format detect_format(const std::string& text) {
    auto toks = detail::tokenize(text);
    if (toks.empty()) throw ParseError("empty presentation", 0);
    const auto& t = toks[0].text;
    if (t == "C:" || t == "c:") return Format::CONWAY;
    if ((t[0] == 'X' || t[0] == 'x') && (t.size() == 1 || t[1] == '[' || t[1] == '(')) return Format::PD;
    if (t.rfind("PD", 0) == 0 || t.rfind("pd", 0) == 0) return Format::PD;
    if (t.find(':') != std::string::npos) return Format::BRAID;
    if (t[0] == 'O' || t[0] == 'U' || t[0] == 'o' || t[0] == 'u') return Format::GAUSS;
    return Format::DT;
}

struct TableEntry {
    std::string name;
    std::string text;  // presentation as written, without "mirror"
    int line = 0;
    bool mirrored = false;
    std::optional<PlanarDiagram> diagram;
    std::string error;  // set when the line did not parse
};

inline TableEntry parse_table_line(const std::string& raw, int line) {
    TableEntry e;
    e.line = line;
    std::string s = raw.substr(0, raw.find('#'));
    std::istringstream is(s);
    is >> e.name;
    std::getline(is, e.text);
    auto m = e.text.find("mirror");
    if (m != std::string::npos) {
        e.mirrored = true;
        e.text.erase(m);
    }
    auto first = e.text.find_first_not_of(" \t");
    e.text = first == std::string::npos ? "" : e.text.substr(first, e.text.find_last_not_of(" \t\r") - first + 1);
    try {
        auto d = parse_planar(detect_format(e.text), e.text);
        e.diagram = e.mirrored ? mirror(d) : d;
    } catch (const std::exception& ex) {
        e.error = ex.what();
    }
    return e;
}

// Entries in file order; bad lines are kept with their error so a batch can
// report them and go on.
inline std::vector<TableEntry> load_table(std::istream& in) {
    std::vector<TableEntry> out;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto body = raw.substr(0, raw.find('#'));
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_table_line(raw, line));
    }
    return out;
}

inline std::vector<TableEntry> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table " + path);
    return load_table(in);
}

inline const TableEntry* find_entry(const std::vector<TableEntry>& t, const std::string& name) {
    for (auto& e : t)
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace knotpos
