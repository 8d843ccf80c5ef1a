#pragma once

#include <cstddef>
#include <vector>

#include "eo/signature.hpp"

namespace eo {

struct CanonicalLimits {
    std::size_t max_arity = 64;
    /// Rows are tracked as 64-bit masks, so values above 64 behave as 64.
    std::size_t max_support = 64;
};

/// Canonical representative of f under permutation of variables.
///
/// Among all column orders, picks the one whose row-sorted matrix is least
/// when read column by column. Two signatures are equal up to a variable
/// permutation iff their canonical forms are equal. Throws ResourceError past
/// the limits.
Signature canonical_form(const Signature& f, const CanonicalLimits& limits = {});

/// The column order realizing canonical_form(f): column c of the canonical
/// form is column order[c] of f (1-based).
std::vector<std::size_t> canonical_order(const Signature& f, const CanonicalLimits& limits = {});

bool permutation_equivalent(const Signature& f, const Signature& g, const CanonicalLimits& limits = {});

} // namespace eo
