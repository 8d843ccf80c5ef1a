#include "eo/signature_io.hpp"

#include <charconv>
#include <optional>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eo/error.hpp"

namespace eo {

std::string_view strip_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) {
                lines.emplace_back(text.substr(start));
            }
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

namespace {

std::size_t parse_count(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("expected a nonnegative integer, got '" + std::string(token) + "'", line);
    }
    return value;
}

} // namespace

Signature parse_signature_lines(const std::vector<std::string>& lines, std::size_t first_line,
                                const ParseLimits& limits) {
    std::optional<std::size_t> declared;
    std::optional<std::size_t> width;
    std::vector<BitVector> rows;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const std::size_t line_no = first_line + k;
        const std::string_view line = strip_line(lines[k]);
        if (line.empty()) {
            continue;
        }
        if (line.starts_with("arity")) {
            if (declared) {
                throw ParseError("duplicate arity header", line_no);
            }
            if (!rows.empty()) {
                throw ParseError("arity header must precede the rows", line_no);
            }
            declared = parse_count(strip_line(line.substr(5)), line_no);
            if (*declared > limits.max_arity) {
                throw ParseError("arity " + std::to_string(*declared) + " exceeds cap " +
                                     std::to_string(limits.max_arity),
                                 line_no);
            }
            continue;
        }
        BitVector row;
        if (line == "()") {
            row = BitVector();
        } else {
            try {
                row = BitVector::from_string(line);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no);
            }
        }
        if (!width) {
            width = row.size();
        } else if (*width != row.size()) {
            throw ParseError("row length " + std::to_string(row.size()) + " differs from " + std::to_string(*width),
                             line_no);
        }
        if (declared && *declared != row.size()) {
            throw ParseError("row length " + std::to_string(row.size()) + " does not match arity " +
                                 std::to_string(*declared),
                             line_no);
        }
        if (row.size() > limits.max_arity) {
            throw ParseError("arity " + std::to_string(row.size()) + " exceeds cap " + std::to_string(limits.max_arity),
                             line_no);
        }
        rows.push_back(std::move(row));
        if (rows.size() > limits.max_support) {
            throw ParseError("support exceeds cap " + std::to_string(limits.max_support), line_no);
        }
    }
    if (!width && !declared) {
        throw ParseError("empty support needs an explicit 'arity N' header", first_line);
    }
    const std::size_t arity = width ? *width : *declared;
    const std::size_t count = rows.size();
    Signature f(arity, std::move(rows));
    if (f.size() != count) {
        throw ParseError("duplicate support rows", first_line);
    }
    return f;
}

Signature parse_signature(std::string_view text, const ParseLimits& limits) {
    return parse_signature_lines(split_lines(text), 1, limits);
}

std::string format_signature(const Signature& f) {
    std::ostringstream out;
    if (f.is_zero() || f.arity() == 0) {
        out << "arity " << f.arity() << '\n';
    }
    for (const auto& row : f.support()) {
        out << (f.arity() == 0 ? "()" : row.to_string()) << '\n';
    }
    return out.str();
}

std::string format_weighted(const WeightedSignature& f) {
    std::ostringstream out;
    out << "arity " << f.arity() << '\n';
    for (const auto& [row, value] : f.values()) {
        out << (f.arity() == 0 ? "()" : row.to_string()) << ' ' << value << '\n';
    }
    return out.str();
}

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_text_source(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
        return read_all(stdin_stream);
    }
    std::ifstream file(path);
    if (!file) {
        throw Error("cannot open '" + path + "'");
    }
    return read_all(file);
}

} // namespace eo
