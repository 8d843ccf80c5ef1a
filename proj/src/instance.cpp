#include "eo/instance.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "eo/error.hpp"

namespace eo {

const Signature& Instance::label(std::size_t vertex) const {
    if (vertex >= vertices.size()) {
        throw IndexError("vertex index " + std::to_string(vertex) + " out of range");
    }
    auto it = signatures.find(vertices[vertex].signature);
    if (it == signatures.end()) {
        throw PreconditionError("vertex '" + vertices[vertex].id + "' uses unknown signature '" +
                                vertices[vertex].signature + "'");
    }
    return it->second;
}

void Instance::add_signature(const std::string& name, Signature f) { signatures[name] = std::move(f); }

std::size_t Instance::add_vertex(const std::string& id, const std::string& signature) {
    vertices.push_back({id, signature});
    return vertices.size() - 1;
}

void Instance::add_edge(std::size_t v1, std::size_t slot1, std::size_t v2, std::size_t slot2) {
    edges.push_back({{v1, slot1}, {v2, slot2}});
}

namespace {

std::string where(const Instance& inst, const Endpoint& e) {
    const std::string id = e.vertex < inst.vertices.size() ? inst.vertices[e.vertex].id : "#" + std::to_string(e.vertex);
    return id + "." + std::to_string(e.slot);
}

} // namespace

Validation validate(const Instance& inst) {
    Validation out;
    std::set<std::string> ids;
    std::vector<std::size_t> arity(inst.vertices.size(), 0);
    std::vector<bool> known(inst.vertices.size(), false);
    for (std::size_t v = 0; v < inst.vertices.size(); ++v) {
        const auto& vx = inst.vertices[v];
        if (!ids.insert(vx.id).second) {
            out.errors.push_back("duplicate vertex id '" + vx.id + "'");
        }
        auto it = inst.signatures.find(vx.signature);
        if (it == inst.signatures.end()) {
            out.errors.push_back("vertex '" + vx.id + "' uses unknown signature '" + vx.signature + "'");
            continue;
        }
        known[v] = true;
        arity[v] = it->second.arity();
        if (!is_eo(it->second)) {
            out.warnings.push_back("vertex '" + vx.id + "' label '" + vx.signature + "' is not an EO signature");
        }
    }
    std::vector<std::vector<std::size_t>> uses(inst.vertices.size());
    for (std::size_t v = 0; v < inst.vertices.size(); ++v) {
        uses[v].assign(arity[v] + 1, 0);
    }
    for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        const auto& edge = inst.edges[e];
        if (edge.first == edge.second) {
            out.errors.push_back("edge " + std::to_string(e + 1) + " joins " + where(inst, edge.first) + " to itself");
        }
        for (const auto& end : {edge.first, edge.second}) {
            if (end.vertex >= inst.vertices.size()) {
                out.errors.push_back("edge " + std::to_string(e + 1) + " names missing vertex " + where(inst, end));
            } else if (!known[end.vertex]) {
                continue;
            } else if (end.slot < 1 || end.slot > arity[end.vertex]) {
                out.errors.push_back("edge " + std::to_string(e + 1) + " uses slot " + where(inst, end) +
                                     " outside 1.." + std::to_string(arity[end.vertex]));
            } else {
                ++uses[end.vertex][end.slot];
            }
        }
    }
    for (std::size_t v = 0; v < inst.vertices.size(); ++v) {
        if (!known[v]) {
            continue;
        }
        for (std::size_t s = 1; s <= arity[v]; ++s) {
            if (uses[v][s] == 0) {
                out.errors.push_back("slot " + where(inst, {v, s}) + " is not wired");
            } else if (uses[v][s] > 1) {
                out.errors.push_back("slot " + where(inst, {v, s}) + " is wired " + std::to_string(uses[v][s]) +
                                     " times");
            }
        }
    }
    return out;
}

void require_valid(const Instance& inst) {
    const auto v = validate(inst);
    if (v.ok()) {
        return;
    }
    std::string msg = "invalid instance:";
    for (const auto& e : v.errors) {
        msg += "\n  " + e;
    }
    throw PreconditionError(msg);
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

Endpoint parse_endpoint(std::string_view token, const std::map<std::string, std::size_t, std::less<>>& index,
                        std::size_t line) {
    const auto dot = token.rfind('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == token.size()) {
        throw ParseError("expected <vertex>.<slot>, got '" + std::string(token) + "'", line);
    }
    auto it = index.find(token.substr(0, dot));
    if (it == index.end()) {
        throw ParseError("unknown vertex '" + std::string(token.substr(0, dot)) + "'", line);
    }
    const auto digits = token.substr(dot + 1);
    std::size_t slot = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), slot);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || slot == 0) {
        throw ParseError("bad slot number '" + std::string(digits) + "'", line);
    }
    return {it->second, slot};
}

} // namespace

Instance parse_instance(std::string_view text, const ParseLimits& limits) {
    enum class Section { None, Signatures, Vertices, Edges };
    Instance inst;
    Section section = Section::None;
    std::map<std::string, std::size_t, std::less<>> index;

    std::string block_name;
    std::size_t block_line = 0;
    std::vector<std::string> block;
    auto flush = [&]() {
        if (block_name.empty()) {
            return;
        }
        inst.signatures.emplace(block_name, parse_signature_lines(block, block_line + 1, limits));
        block_name.clear();
        block.clear();
    };

    const auto lines = split_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const std::size_t line_no = k + 1;
        const auto line = strip_line(lines[k]);
        if (line.starts_with('[')) {
            flush();
            if (line == "[signatures]") {
                section = Section::Signatures;
            } else if (line == "[vertices]") {
                section = Section::Vertices;
            } else if (line == "[edges]") {
                section = Section::Edges;
            } else {
                throw ParseError("unknown section " + std::string(line), line_no);
            }
            continue;
        }
        if (section == Section::Signatures) {
            const auto t = tokens(line);
            if (!t.empty() && t[0] == "signature") {
                flush();
                if (t.size() != 2) {
                    throw ParseError("expected 'signature <name>'", line_no);
                }
                block_name = std::string(t[1]);
                block_line = line_no;
                if (inst.signatures.count(block_name)) {
                    throw ParseError("duplicate signature '" + block_name + "'", line_no);
                }
                continue;
            }
            if (line.empty()) {
                if (!block_name.empty()) {
                    block.emplace_back();
                }
                continue;
            }
            if (block_name.empty()) {
                throw ParseError("signature rows before any 'signature <name>' line", line_no);
            }
            block.emplace_back(lines[k]);
            continue;
        }
        if (line.empty()) {
            continue;
        }
        const auto t = tokens(line);
        switch (section) {
        case Section::None:
            throw ParseError("content before the first section", line_no);
        case Section::Vertices: {
            if (t.size() != 2) {
                throw ParseError("expected '<vertex-id> <signature>'", line_no);
            }
            const std::string id(t[0]);
            if (id.find('.') != std::string::npos) {
                throw ParseError("vertex id '" + id + "' contains '.'", line_no);
            }
            if (!inst.signatures.count(std::string(t[1]))) {
                throw ParseError("unknown signature '" + std::string(t[1]) + "'", line_no);
            }
            if (!index.emplace(id, inst.vertices.size()).second) {
                throw ParseError("duplicate vertex '" + id + "'", line_no);
            }
            inst.add_vertex(id, std::string(t[1]));
            break;
        }
        case Section::Edges: {
            if (t.size() != 2) {
                throw ParseError("expected '<vertex>.<slot> <vertex>.<slot>'", line_no);
            }
            inst.edges.push_back({parse_endpoint(t[0], index, line_no), parse_endpoint(t[1], index, line_no)});
            break;
        }
        case Section::Signatures:
            break;
        }
    }
    flush();
    return inst;
}

std::string format_instance(const Instance& inst) {
    std::ostringstream out;
    out << "[signatures]\n";
    for (const auto& [name, f] : inst.signatures) {
        out << "signature " << name << '\n' << format_signature(f);
    }
    out << "[vertices]\n";
    for (const auto& v : inst.vertices) {
        out << v.id << ' ' << v.signature << '\n';
    }
    out << "[edges]\n";
    for (const auto& e : inst.edges) {
        out << inst.vertices.at(e.first.vertex).id << '.' << e.first.slot << ' '
            << inst.vertices.at(e.second.vertex).id << '.' << e.second.slot << '\n';
    }
    return out.str();
}

} // namespace eo
