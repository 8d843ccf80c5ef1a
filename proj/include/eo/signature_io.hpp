#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eo/signature.hpp"

namespace eo {

/// Size caps applied when reading signatures from text.
struct ParseLimits {
    std::size_t max_arity = 64;
    std::size_t max_support = 4096;
};

// Text format: one support row per line as a 0/1 string, leftmost character
// is variable 1. Blank lines and '#' comments are ignored. An `arity N`
// header is required for an empty support and optional otherwise. The empty
// row of an arity-0 signature is written `()`.

Signature parse_signature(std::string_view text, const ParseLimits& limits = {});
/// Parses pre-split lines; `first_line` numbers them in error messages.
Signature parse_signature_lines(const std::vector<std::string>& lines, std::size_t first_line = 1,
                                const ParseLimits& limits = {});
std::string format_signature(const Signature& f);

/// Weighted form: `<row> <value>` per line, always with an `arity N` header.
std::string format_weighted(const WeightedSignature& f);

/// Reads a whole stream into a string.
std::string read_all(std::istream& in);
/// Reads a file, or standard input when path is "-". Throws Error on failure.
std::string read_text_source(const std::string& path, std::istream& stdin_stream);

/// Strips a trailing '#' comment and surrounding whitespace.
std::string_view strip_line(std::string_view line);
std::vector<std::string> split_lines(std::string_view text);

} // namespace eo
