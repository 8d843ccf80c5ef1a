#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "eo/bigint.hpp"
#include "eo/bitvector.hpp"

namespace eo {

/// Which constant the δ-factors of interest force: δ1 (ONE) or δ0 (ZERO).
enum class Polarity { One, Zero };

/// A 0-1 valued constraint function, stored as its support.
///
/// The support is kept sorted and duplicate-free, so two signatures are equal
/// exactly when they have the same arity and the same support set. Arity 0 is
/// legal: the support {ε} is the scalar 1 and the empty support is scalar 0.
/// Variable indices in every public operation are 1-based.
class Signature {
public:
    Signature() = default;
    /// Throws PreconditionError if a row has the wrong length. Duplicate rows collapse.
    Signature(std::size_t arity, std::vector<BitVector> rows);

    /// Builds a signature from rows written as '0'/'1' strings. All rows must
    /// share a length; with no rows use the (arity, {}) constructor.
    static Signature from_rows(std::initializer_list<std::string_view> rows);
    static Signature scalar(bool one);
    /// δ1 (bit=true) or δ0 (bit=false).
    static Signature delta(bool bit);

    std::size_t arity() const noexcept { return arity_; }
    const std::vector<BitVector>& support() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }
    bool is_zero() const noexcept { return rows_.empty(); }
    bool contains(const BitVector& row) const;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend std::strong_ordering operator<=>(const Signature&, const Signature&) = default;

private:
    std::size_t arity_ = 0;
    std::vector<BitVector> rows_;
};

/// A signature with nonnegative integer values. Absent keys mean 0; stored
/// values are never 0.
class WeightedSignature {
public:
    explicit WeightedSignature(std::size_t arity = 0) : arity_(arity) {}
    explicit WeightedSignature(const Signature& f);

    std::size_t arity() const noexcept { return arity_; }
    const std::map<BitVector, BigInt>& values() const noexcept { return values_; }
    BigInt value(const BitVector& x) const;
    void add(const BitVector& x, const BigInt& amount);

    /// Sum of all values.
    BigInt total() const;
    /// True when every value is 1, so the conversion to Signature is lossless.
    bool is_01() const;
    std::optional<Signature> to_signature() const;
    /// The set of inputs with nonzero value.
    Signature support() const;

    friend bool operator==(const WeightedSignature&, const WeightedSignature&) = default;

private:
    std::size_t arity_;
    std::map<BitVector, BigInt> values_;
};

// --- predicates and column statistics -------------------------------------

/// Even arity and every support row of weight arity/2. The zero signature of
/// even arity is vacuously EO.
bool is_eo(const Signature& f);
/// Support closed under complement.
bool is_ars(const Signature& f);
/// Number of rows with bit `b` in column `i`.
std::size_t column_count(const Signature& f, std::size_t i, bool b);
/// Column `i` as a vector indexed by support row.
BitVector column(const Signature& f, std::size_t i);

struct DeltaFactors {
    std::vector<std::size_t> ones;  // constant-1 columns, ascending
    std::vector<std::size_t> zeros; // constant-0 columns, ascending
};

/// The δ1 and δ0 factors of a nonzero signature. Throws PreconditionError on
/// the zero signature.
DeltaFactors delta_factors(const Signature& f);

// --- structural operations -------------------------------------------------

/// f with variable i fixed to b and removed (arity drops by one).
Signature pin(const Signature& f, std::size_t i, bool b);
/// f restricted to rows with x_i = b (arity unchanged).
Signature extract(const Signature& f, std::size_t i, bool b);
/// Pins x_i = a and x_j = b, i != j.
Signature pin2(const Signature& f, std::size_t i, std::size_t j, bool a, bool b);
/// Keeps only the listed columns, in the listed order.
Signature restrict_columns(const Signature& f, const std::vector<std::size_t>& columns);
/// Reorders columns: column c of the result is column order[c] of f.
Signature permute(const Signature& f, const std::vector<std::size_t>& order);

Signature tensor(const Signature& f, const Signature& g);
Signature complement(const Signature& f);
/// Symmetric difference of the support with the all-1 vector. Arity >= 1.
Signature hat(const Signature& f);
/// Symmetric difference of the support with the all-0 vector. Arity >= 1.
Signature check(const Signature& f);
/// Each row replaced by the concatenation of m copies of itself. m >= 1.
Signature m_multiple(const Signature& f, std::size_t m);

struct MultipleDecomposition {
    Signature base;
    std::size_t m = 1;
    /// One group of identical columns per base column, 1-based, in
    /// first-occurrence order.
    std::vector<std::vector<std::size_t>> groups;
};

/// Recognizes f as an m-multiple up to a permutation of variables, with the
/// largest possible m. Returns m = 1 and base = f when group sizes differ.
MultipleDecomposition multiple_decompose(const Signature& f);

// --- weighted gadget arithmetic -----------------------------------------------

WeightedSignature tensor(const WeightedSignature& f, const WeightedSignature& g);
/// Connects x_i and x_j with a disequality edge: f_ij^01 + f_ij^10.
WeightedSignature loop_diseq(const WeightedSignature& f, std::size_t i, std::size_t j);
WeightedSignature loop_diseq(const Signature& f, std::size_t i, std::size_t j);
/// Tensor f and g, then loop variable i of f with variable j of g.
WeightedSignature connect(const WeightedSignature& f, std::size_t i, const WeightedSignature& g, std::size_t j);

} // namespace eo
