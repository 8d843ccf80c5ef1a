#pragma once

#include <cstddef>
#include <vector>

#include "eo/bitvector.hpp"

namespace eo::gf2 {

/// Reduced row echelon form over GF(2). Pivots are chosen at the lowest
/// column index first, so the result depends only on the row space.
struct Echelon {
    std::vector<BitVector> rows;       // nonzero, one per pivot
    std::vector<std::size_t> pivots;   // ascending, pivots[r] is the leading column of rows[r]
};

/// All rows must share one length.
Echelon reduce(std::vector<BitVector> rows);
std::size_t rank(std::vector<BitVector> rows);

/// Basis of { y : r·y = 0 for every row r }, for rows of length n.
std::vector<BitVector> null_space(const Echelon& e, std::size_t n);

} // namespace eo::gf2
