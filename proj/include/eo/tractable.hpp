#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "eo/canonical.hpp"
#include "eo/signature.hpp"

namespace eo {

struct MembershipLimits {
    /// Recursing into a non-affine signature above this arity throws ResourceError.
    std::size_t max_recursive_arity = 32;
    /// Distinct signatures examined per top-level query.
    std::size_t max_nodes = 200000;
    CanonicalLimits canonical;
};

/// Decides membership in the δ1-affine class (or, for Polarity::Zero, the
/// δ0-affine class), memoizing on canonical form across queries.
class MembershipOracle {
public:
    explicit MembershipOracle(Polarity polarity = Polarity::One, MembershipLimits limits = {});

    /// Throws PreconditionError for a non-EO signature.
    bool contains(const Signature& f);
    /// Affine or in the class.
    bool tractable(const Signature& f);

    Polarity polarity() const noexcept { return polarity_; }
    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    bool recurse(const Signature& f);
    Signature key(const Signature& f) const;

    Polarity polarity_;
    MembershipLimits limits_;
    std::size_t nodes_ = 0;
    std::map<Signature, bool> memo_;
};

bool in_d1(const Signature& f, const MembershipLimits& limits = {});
bool in_d0(const Signature& f, const MembershipLimits& limits = {});

/// δ1^{⊗m} ⊗ h with m >= 1, where h has positive arity, no δ0 factor, every
/// pin of h to 0 affine, and h itself not affine. Non-EO input throws
/// PreconditionError.
bool is_d1_kernel(const Signature& f);
bool is_d0_kernel(const Signature& f);

/// The same kernel test, read off the definition with a brute-force affine
/// check. Used by the census.
bool is_kernel_by_definition(const Signature& f, Polarity polarity);

/// Returns k when f is, up to a permutation of variables, the balanced
/// Hadamard code of order k for the given polarity.
std::optional<std::size_t> is_balanced_hadamard(const Signature& f, Polarity polarity);

enum class KernelKind { Trivial, Hadamard };

struct KernelStructure {
    Polarity polarity = Polarity::One;
    KernelKind kind = KernelKind::Trivial;
    /// Order of the Hadamard code; 0 for trivial kernels.
    std::size_t k = 0;
    std::size_t m = 1;
    Signature base;
    std::vector<std::vector<std::size_t>> grouping;
};

/// Requires a δ1 or δ0 kernel (PreconditionError otherwise). A kernel that
/// fits neither shape throws InvariantError.
KernelStructure kernel_structure(const Signature& f);

struct ClassReport {
    bool is_eo = false;
    bool is_affine = false;
    bool in_d1 = false;
    bool in_d0 = false;
    bool is_d1_kernel = false;
    bool is_d0_kernel = false;
    std::optional<KernelStructure> kernel;
};

ClassReport classify(const Signature& f, const MembershipLimits& limits = {});

struct CensusReport {
    std::size_t arity = 0;
    std::size_t max_support = 0;
    std::size_t subsets = 0;
    std::size_t d1_kernels = 0;
    std::size_t d0_kernels = 0;
    /// Subsets where the kernel test and the definition disagree.
    std::size_t definition_mismatches = 0;
    /// Subsets where the kernel test and the structural description
    /// (three rows with the right δ factors, or a multiple of a balanced
    /// Hadamard code) disagree.
    std::size_t structure_mismatches = 0;
    std::vector<Signature> d1_kernel_list;
};

/// Runs both kernel tests over every set of at most max_support weight-n/2
/// vectors of length n. Throws ResourceError past 2^22 subsets.
CensusReport kernel_census(std::size_t arity, std::optional<std::size_t> max_support = std::nullopt);

} // namespace eo
