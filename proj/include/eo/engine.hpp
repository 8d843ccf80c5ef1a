#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eo/bigint.hpp"
#include "eo/instance.hpp"
#include "eo/tractable.hpp"

namespace eo {

enum class CountMethod { Brute, Affine, ChainD1, ChainD0 };

const char* to_string(CountMethod m);

struct CountResult {
    BigInt count = 0;
    CountMethod method = CountMethod::Brute;
    /// One line per reduction step, when a trace was requested.
    std::vector<std::string> steps;
    std::size_t step_count = 0;
    std::vector<std::string> notes;
};

struct BruteOptions {
    std::size_t max_edges = 24;
    /// Worker threads; 0 means hardware concurrency.
    std::size_t threads = 1;
    /// Orientations of the first `split_bits` edges are enumerated as
    /// independent tasks. Clamped to the edge count.
    std::size_t split_bits = 0;
};

/// Sums the product of vertex labels over all 2^|E| orientations. The first
/// endpoint of an edge takes the edge bit, the second its complement.
CountResult brute_force(const Instance& inst, const BruteOptions& options = {});

/// Exact count by Gaussian elimination, one GF(2) variable per edge.
/// Throws PreconditionError when a label is not affine.
CountResult solve_affine(const Instance& inst);

struct ChainOptions {
    /// Re-check after every step that all labels stay EO and tractable.
    bool check_invariants = false;
    bool trace = false;
    MembershipLimits limits;
};

/// Polynomial-time count for instances whose labels are all affine or
/// δ1-affine (Polarity::One), or all affine or δ0-affine (Polarity::Zero).
CountResult chain_reaction(const Instance& inst, Polarity polarity, const ChainOptions& options = {});

enum class SolveMethod { Auto, Brute, Affine, Chain };

struct SolveOptions {
    BruteOptions brute;
    ChainOptions chain;
};

/// Auto picks the affine solver, then the chain reaction for either
/// polarity, then brute force with a note explaining why.
CountResult solve(const Instance& inst, SolveMethod method = SolveMethod::Auto, const SolveOptions& options = {});

/// Tensors f and g, then loops variable i of f with variable j of g by a
/// disequality for each pair. Remaining variables keep their order, f's first.
WeightedSignature gadget_demo_hardness(const Signature& f, const Signature& g,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

} // namespace eo
