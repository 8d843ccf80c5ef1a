#include "eo/gf2.hpp"

#include <utility>

#include "eo/error.hpp"

namespace eo::gf2 {

Echelon reduce(std::vector<BitVector> rows) {
    Echelon out;
    if (rows.empty()) {
        return out;
    }
    const std::size_t n = rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != n) {
            throw PreconditionError("gf2::reduce: rows of different lengths");
        }
    }
    std::size_t top = 0;
    for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
        std::size_t pick = top;
        while (pick < rows.size() && !rows[pick].test(col)) {
            ++pick;
        }
        if (pick == rows.size()) {
            continue;
        }
        std::swap(rows[top], rows[pick]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != top && rows[r].test(col)) {
                rows[r] ^= rows[top];
            }
        }
        out.pivots.push_back(col);
        ++top;
    }
    rows.resize(top);
    out.rows = std::move(rows);
    return out;
}

std::size_t rank(std::vector<BitVector> rows) { return reduce(std::move(rows)).rows.size(); }

std::vector<BitVector> null_space(const Echelon& e, std::size_t n) {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> out;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector y(n);
        y.set(free);
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            if (e.rows[r].test(free)) {
                y.set(e.pivots[r]);
            }
        }
        out.push_back(std::move(y));
    }
    return out;
}

} // namespace eo::gf2
