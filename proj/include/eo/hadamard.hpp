#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eo/signature.hpp"

namespace eo {

/// Square matrix with entries in {+1, -1}.
struct PmMatrix {
    std::size_t order = 0;
    std::vector<std::int8_t> entries; // row-major

    int at(std::size_t r, std::size_t c) const { return entries[r * order + c]; }
    /// H·Hᵀ = n·I.
    bool is_hadamard() const;
    /// One line per row, '+' or '-' per entry.
    std::string to_string() const;
};

/// Largest k accepted by the generators below.
inline constexpr std::size_t kDefaultMaxOrder = 6;

/// H_1 = [+1], H_{2n} = [[H, H], [H, -H]].
PmMatrix sylvester(std::size_t k, std::size_t max_k = kDefaultMaxOrder);

/// Rows of sylvester(k) with +1 → 1 (One) or +1 → 0 (Zero).
Signature hadamard_code(std::size_t k, Polarity variant, std::size_t max_k = kDefaultMaxOrder);
/// hadamard_code without its constant row. k >= 1.
Signature balanced_code(std::size_t k, Polarity variant, std::size_t max_k = kDefaultMaxOrder);

/// Affine signature of arity 2^(k+1) with k free variables. Column m of the
/// left half is the linear form whose coefficient bits are m-1 (free
/// variables in binary-counter order); column m + 2^k is its complement.
/// The first row is 0…0 1…1. k >= 1.
Signature butterfly(std::size_t k, std::size_t max_k = kDefaultMaxOrder);

struct Wings {
    Signature left;
    Signature right;
};

/// Left and right halves of butterfly(k) without the constant row.
Wings wings(std::size_t k, std::size_t max_k = kDefaultMaxOrder);

/// δ1⊗δ0 for k = 1, δ1⊗{001,010,100} for k = 2, wings(k).right for k >= 3.
Signature basic_kernel(std::size_t k, std::size_t max_k = kDefaultMaxOrder);

} // namespace eo
