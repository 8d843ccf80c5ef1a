#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eo/bigint.hpp"
#include "eo/bitvector.hpp"
#include "eo/signature.hpp"

namespace eo {

/// An affine subspace of GF(2)^n, kept both as offset ⊕ span(basis) and as
/// the constraint rows (a | c) meaning a·x = c.
///
/// Constraint rows have num_vars + 1 columns, the last one being the
/// constant. An inconsistent system has `empty` set, no offset and no basis,
/// and the single constraint 0…0 | 1.
struct AffineSystem {
    std::size_t num_vars = 0;
    bool empty = false;
    BitVector offset;
    std::vector<BitVector> basis;
    std::vector<BitVector> constraints;

    friend bool operator==(const AffineSystem&, const AffineSystem&) = default;
};

/// True iff S(f) is a coset of a linear subspace. The zero signature is affine.
bool is_affine(const Signature& f);

/// Basis in reduced echelon form, offset = least support row. Throws
/// PreconditionError when f is not affine.
AffineSystem affine_system(const Signature& f);

/// Every solution of the system, as a signature of arity num_vars.
Signature enumerate(const AffineSystem& system);

/// Number of x in GF(2)^n with a·x = c for every row (a | c). Rows must have
/// n + 1 columns.
BigInt count_solutions(std::size_t num_vars, std::span<const BitVector> equations);
/// Stacks the constraints of systems over one shared variable set, plus
/// extra rows. Throws PreconditionError on a dimension mismatch.
BigInt count_solutions(std::span<const AffineSystem> systems, std::span<const BitVector> extra = {});

/// Perfect matching of variables into complementary column pairs (i < j),
/// sorted by i. Requires an affine EO signature with nonempty support; a
/// failed matching throws InvariantError.
std::vector<std::pair<std::size_t, std::size_t>> pairwise_opposite_pairs(const Signature& f);

struct WeightProfile {
    bool constant_weight = false;
    /// Shared row weight; absent for the zero signature or mixed weights.
    std::optional<std::size_t> weight;
};

WeightProfile constant_weight_profile(const Signature& f);

/// Signature text of the solution set, then a `constraints` line and one
/// 0/1 row per constraint.
std::string format_affine_system(const AffineSystem& system);
/// Parses format_affine_system output. The constraints block must describe
/// the same solution set as the listed rows.
AffineSystem parse_affine_system(std::string_view text);

} // namespace eo
