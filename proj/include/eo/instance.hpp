#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eo/signature.hpp"
#include "eo/signature_io.hpp"

namespace eo {

/// A vertex slot. `vertex` indexes Instance::vertices; `slot` is 1-based.
struct Endpoint {
    std::size_t vertex = 0;
    std::size_t slot = 0;

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
    friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Vertex {
    std::string id;
    std::string signature;
};

/// An edge carries a disequality: its two endpoints always take opposite bits.
struct Edge {
    Endpoint first;
    Endpoint second;
};

/// A multigraph whose vertices are labeled with named signatures. Every slot
/// of every vertex must be the endpoint of exactly one edge.
struct Instance {
    std::map<std::string, Signature> signatures;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    /// Throws IndexError or PreconditionError on a bad vertex or signature name.
    const Signature& label(std::size_t vertex) const;

    void add_signature(const std::string& name, Signature f);
    std::size_t add_vertex(const std::string& id, const std::string& signature);
    void add_edge(std::size_t v1, std::size_t slot1, std::size_t v2, std::size_t slot2);
};

struct Validation {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool ok() const noexcept { return errors.empty(); }
};

/// Structural checks (names, slot coverage) are errors; non-EO labels are
/// warnings.
Validation validate(const Instance& inst);
/// Throws PreconditionError listing the errors when validation fails.
void require_valid(const Instance& inst);

// Instance text format, three sections:
//
//   [signatures]
//   signature f2
//   1100
//   1010
//   1001
//   [vertices]
//   u f2
//   v f2
//   [edges]
//   u.1 v.2
//
// Signature blocks use the signature text format. Slots are 1-based.

Instance parse_instance(std::string_view text, const ParseLimits& limits = {});
std::string format_instance(const Instance& inst);

} // namespace eo
