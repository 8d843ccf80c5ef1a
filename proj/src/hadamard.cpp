#include "eo/hadamard.hpp"

#include <bit>

#include "eo/error.hpp"

namespace eo {

namespace {

void check_order(std::size_t k, std::size_t min_k, std::size_t max_k, const char* op) {
    if (k < min_k) {
        throw PreconditionError(std::string(op) + ": k must be at least " + std::to_string(min_k));
    }
    if (k > max_k) {
        throw ResourceError(std::string(op) + ": k = " + std::to_string(k) + " exceeds cap " + std::to_string(max_k));
    }
}

bool parity(std::size_t x) { return std::popcount(x) & 1; }

} // namespace

bool PmMatrix::is_hadamard() const {
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            long dot = 0;
            for (std::size_t c = 0; c < order; ++c) {
                dot += at(a, c) * at(b, c);
            }
            if (dot != (a == b ? static_cast<long>(order) : 0)) {
                return false;
            }
        }
    }
    return true;
}

std::string PmMatrix::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < order; ++r) {
        for (std::size_t c = 0; c < order; ++c) {
            out += at(r, c) > 0 ? '+' : '-';
        }
        out += '\n';
    }
    return out;
}

PmMatrix sylvester(std::size_t k, std::size_t max_k) {
    check_order(k, 0, max_k, "sylvester");
    PmMatrix h;
    h.order = std::size_t{1} << k;
    h.entries.assign(h.order * h.order, 1);
    for (std::size_t n = 1; n < h.order; n *= 2) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                const auto v = h.entries[r * h.order + c];
                h.entries[r * h.order + c + n] = v;
                h.entries[(r + n) * h.order + c] = v;
                h.entries[(r + n) * h.order + c + n] = static_cast<std::int8_t>(-v);
            }
        }
    }
    return h;
}

Signature hadamard_code(std::size_t k, Polarity variant, std::size_t max_k) {
    const auto h = sylvester(k, max_k);
    const bool plus = variant == Polarity::One;
    std::vector<BitVector> rows;
    for (std::size_t r = 0; r < h.order; ++r) {
        BitVector row(h.order);
        for (std::size_t c = 0; c < h.order; ++c) {
            row.set(c, (h.at(r, c) > 0) == plus);
        }
        rows.push_back(std::move(row));
    }
    return Signature(h.order, std::move(rows));
}

Signature balanced_code(std::size_t k, Polarity variant, std::size_t max_k) {
    check_order(k, 1, max_k, "balanced_code");
    auto code = hadamard_code(k, variant, max_k);
    const BitVector constant(code.arity(), variant == Polarity::One);
    std::vector<BitVector> rows;
    for (const auto& row : code.support()) {
        if (row != constant) {
            rows.push_back(row);
        }
    }
    return Signature(code.arity(), std::move(rows));
}

Signature butterfly(std::size_t k, std::size_t max_k) {
    check_order(k, 1, max_k, "butterfly");
    const std::size_t half = std::size_t{1} << k;
    std::vector<BitVector> rows;
    for (std::size_t a = 0; a < half; ++a) {
        BitVector row(2 * half);
        for (std::size_t m = 0; m < half; ++m) {
            const bool x = parity(m & a);
            row.set(m, x);
            row.set(m + half, !x);
        }
        rows.push_back(std::move(row));
    }
    return Signature(2 * half, std::move(rows));
}

Wings wings(std::size_t k, std::size_t max_k) {
    const auto b = butterfly(k, max_k);
    const std::size_t half = b.arity() / 2;
    std::vector<std::size_t> left_positions(half);
    for (std::size_t c = 0; c < half; ++c) {
        left_positions[c] = c;
    }
    std::vector<BitVector> left;
    std::vector<BitVector> right;
    for (const auto& row : b.support()) {
        auto l = row.select(left_positions);
        if (l.none()) {
            continue;
        }
        right.push_back(~l);
        left.push_back(std::move(l));
    }
    return {Signature(half, std::move(left)), Signature(half, std::move(right))};
}

Signature basic_kernel(std::size_t k, std::size_t max_k) {
    check_order(k, 1, max_k, "basic_kernel");
    if (k == 1) {
        return Signature::from_rows({"10"});
    }
    if (k == 2) {
        return tensor(Signature::delta(true), Signature::from_rows({"001", "010", "100"}));
    }
    return wings(k, max_k).right;
}

} // namespace eo
