#include "eo/tractable.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "eo/affine.hpp"
#include "eo/error.hpp"

namespace eo {

namespace {

Signature to_one(const Signature& f, Polarity polarity) {
    return polarity == Polarity::One ? f : complement(f);
}

void require_eo(const Signature& f, const char* op) {
    if (!is_eo(f)) {
        throw PreconditionError(std::string(op) + ": signature is not EO");
    }
}

bool xor_closed(const Signature& f) {
    for (const auto& a : f.support()) {
        for (const auto& b : f.support()) {
            for (const auto& c : f.support()) {
                if (!f.contains(a ^ b ^ c)) {
                    return false;
                }
            }
        }
    }
    return true;
}

// The columns other than the constant-1 ones, or nullopt when f has no
// constant-1 column, has a constant-0 column, or is all constant-1.
std::optional<Signature> stripped_part(const Signature& f) {
    if (f.is_zero()) {
        return std::nullopt;
    }
    const auto d = delta_factors(f);
    if (d.ones.empty() || !d.zeros.empty() || d.ones.size() == f.arity()) {
        return std::nullopt;
    }
    std::vector<std::size_t> rest;
    std::size_t next = 0;
    for (std::size_t i = 1; i <= f.arity(); ++i) {
        if (next < d.ones.size() && d.ones[next] == i) {
            ++next;
        } else {
            rest.push_back(i);
        }
    }
    return restrict_columns(f, rest);
}

bool kernel_one(const Signature& f, bool (*affine)(const Signature&)) {
    const auto h = stripped_part(f);
    if (!h || affine(*h)) {
        return false;
    }
    for (std::size_t i = 1; i <= h->arity(); ++i) {
        if (!affine(pin(*h, i, false))) {
            return false;
        }
    }
    return true;
}

bool affine_fast(const Signature& f) { return is_affine(f); }

std::optional<std::size_t> balanced_hadamard_one(const Signature& f) {
    const std::size_t n = f.arity();
    if (n < 2 || (n & (n - 1)) != 0) {
        return std::nullopt;
    }
    const std::size_t k = static_cast<std::size_t>(std::countr_zero(n));
    if (f.size() != n - 1) {
        return std::nullopt;
    }
    for (const auto& row : f.support()) {
        if (row.weight() != n / 2) {
            return std::nullopt;
        }
    }
    const auto c = complement(hat(f));
    if (c.size() != n || !c.contains(BitVector(n, false)) || !is_affine(c)) {
        return std::nullopt;
    }
    std::vector<BitVector> columns;
    for (std::size_t i = 1; i <= n; ++i) {
        columns.push_back(column(c, i));
    }
    std::sort(columns.begin(), columns.end());
    if (std::adjacent_find(columns.begin(), columns.end()) != columns.end()) {
        return std::nullopt;
    }
    return k;
}

// Three rows, or an m-multiple of a balanced Hadamard code with k >= 3.
bool kernel_shape_one(const Signature& f) {
    if (f.is_zero() || !is_eo(f)) {
        return false;
    }
    const auto d = delta_factors(f);
    if (d.ones.empty() || !d.zeros.empty()) {
        return false;
    }
    if (f.size() == 3) {
        return true;
    }
    const auto md = multiple_decompose(f);
    const auto k = balanced_hadamard_one(md.base);
    return k && *k >= 3;
}

} // namespace

MembershipOracle::MembershipOracle(Polarity polarity, MembershipLimits limits)
    : polarity_(polarity), limits_(limits) {}

bool MembershipOracle::contains(const Signature& f) {
    require_eo(f, polarity_ == Polarity::One ? "in_d1" : "in_d0");
    nodes_ = 0;
    return recurse(to_one(f, polarity_));
}

bool MembershipOracle::tractable(const Signature& f) { return is_affine(f) || contains(f); }

Signature MembershipOracle::key(const Signature& f) const {
    if (f.arity() <= limits_.canonical.max_arity && f.size() <= std::min<std::size_t>(limits_.canonical.max_support, 64)) {
        return canonical_form(f, limits_.canonical);
    }
    return f;
}

bool MembershipOracle::recurse(const Signature& f) {
    if (f.is_zero()) {
        return false;
    }
    const auto ones = delta_factors(f).ones;
    if (ones.empty()) {
        return false;
    }
    const auto g = pin(f, ones.front(), true);
    std::vector<Signature> pending;
    for (std::size_t i = 1; i <= g.arity(); ++i) {
        auto p = pin(g, i, false);
        if (!is_affine(p)) {
            pending.push_back(std::move(p));
        }
    }
    for (const auto& p : pending) {
        if (p.arity() > limits_.max_recursive_arity) {
            throw ResourceError("membership test needs recursion at arity " + std::to_string(p.arity()) +
                                " (cap " + std::to_string(limits_.max_recursive_arity) + ")");
        }
        auto k = key(p);
        auto it = memo_.find(k);
        bool member;
        if (it != memo_.end()) {
            member = it->second;
        } else {
            if (++nodes_ > limits_.max_nodes) {
                throw ResourceError("membership test exceeded " + std::to_string(limits_.max_nodes) + " signatures");
            }
            member = recurse(p);
            memo_.emplace(std::move(k), member);
        }
        if (!member) {
            return false;
        }
    }
    return true;
}

bool in_d1(const Signature& f, const MembershipLimits& limits) {
    return MembershipOracle(Polarity::One, limits).contains(f);
}

bool in_d0(const Signature& f, const MembershipLimits& limits) {
    return MembershipOracle(Polarity::Zero, limits).contains(f);
}

bool is_d1_kernel(const Signature& f) {
    require_eo(f, "is_d1_kernel");
    return kernel_one(f, affine_fast);
}

bool is_d0_kernel(const Signature& f) {
    require_eo(f, "is_d0_kernel");
    return kernel_one(complement(f), affine_fast);
}

bool is_kernel_by_definition(const Signature& f, Polarity polarity) {
    require_eo(f, "is_kernel_by_definition");
    return kernel_one(to_one(f, polarity), xor_closed);
}

std::optional<std::size_t> is_balanced_hadamard(const Signature& f, Polarity polarity) {
    return balanced_hadamard_one(to_one(f, polarity));
}

KernelStructure kernel_structure(const Signature& f) {
    KernelStructure out;
    if (is_d1_kernel(f)) {
        out.polarity = Polarity::One;
    } else if (is_d0_kernel(f)) {
        out.polarity = Polarity::Zero;
    } else {
        throw PreconditionError("kernel_structure: not a kernel");
    }
    const auto g = to_one(f, out.polarity);
    if (g.size() == 3) {
        out.kind = KernelKind::Trivial;
        out.base = f;
        for (std::size_t i = 1; i <= f.arity(); ++i) {
            out.grouping.push_back({i});
        }
        return out;
    }
    auto md = multiple_decompose(g);
    const auto k = balanced_hadamard_one(md.base);
    if (!k || *k < 3) {
        throw InvariantError("kernel_structure: kernel with " + std::to_string(g.size()) +
                             " rows is not a multiple of a balanced Hadamard code");
    }
    if (g.size() != (std::size_t{1} << *k) - 1 || g.arity() != md.m * (std::size_t{1} << *k)) {
        throw InvariantError("kernel_structure: size mismatch");
    }
    out.kind = KernelKind::Hadamard;
    out.k = *k;
    out.m = md.m;
    out.base = to_one(md.base, out.polarity);
    out.grouping = std::move(md.groups);
    return out;
}

ClassReport classify(const Signature& f, const MembershipLimits& limits) {
    ClassReport r;
    r.is_eo = is_eo(f);
    r.is_affine = is_affine(f);
    if (!r.is_eo) {
        return r;
    }
    r.in_d1 = in_d1(f, limits);
    r.in_d0 = in_d0(f, limits);
    r.is_d1_kernel = is_d1_kernel(f);
    r.is_d0_kernel = is_d0_kernel(f);
    if (r.is_d1_kernel || r.is_d0_kernel) {
        r.kernel = kernel_structure(f);
    }
    return r;
}

namespace {

void weight_vectors(std::size_t n, std::size_t w, std::vector<BitVector>& out) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        if (static_cast<std::size_t>(std::popcount(x)) == w) {
            out.push_back(BitVector::from_word(x, n));
        }
    }
}

double binomial(std::size_t n, std::size_t k) {
    double r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    return r;
}

} // namespace

CensusReport kernel_census(std::size_t arity, std::optional<std::size_t> max_support) {
    if (arity == 0 || arity % 2 != 0) {
        throw PreconditionError("kernel_census: arity must be even and positive");
    }
    if (arity > 16) {
        throw ResourceError("kernel_census: arity " + std::to_string(arity) + " is too large");
    }
    std::vector<BitVector> pool;
    weight_vectors(arity, arity / 2, pool);
    const std::size_t cap = std::min(max_support.value_or(pool.size()), pool.size());
    double total = 0;
    for (std::size_t s = 0; s <= cap; ++s) {
        total += binomial(pool.size(), s);
    }
    if (total > double(1 << 22)) {
        throw ResourceError("kernel_census: " + std::to_string(static_cast<unsigned long long>(total)) +
                            " subsets exceed the cap of 2^22");
    }

    CensusReport report;
    report.arity = arity;
    report.max_support = cap;
    std::vector<std::size_t> pick;
    auto visit = [&](const std::vector<std::size_t>& chosen) {
        std::vector<BitVector> rows;
        for (std::size_t c : chosen) {
            rows.push_back(pool[c]);
        }
        const Signature f(arity, std::move(rows));
        ++report.subsets;
        for (Polarity pol : {Polarity::One, Polarity::Zero}) {
            const bool fast = pol == Polarity::One ? is_d1_kernel(f) : is_d0_kernel(f);
            report.definition_mismatches += fast != is_kernel_by_definition(f, pol);
            report.structure_mismatches += fast != kernel_shape_one(to_one(f, pol));
            if (fast && pol == Polarity::One) {
                ++report.d1_kernels;
                report.d1_kernel_list.push_back(f);
            } else if (fast) {
                ++report.d0_kernels;
            }
        }
    };
    auto walk = [&](auto&& self, std::size_t start) -> void {
        visit(pick);
        if (pick.size() == cap) {
            return;
        }
        for (std::size_t c = start; c < pool.size(); ++c) {
            pick.push_back(c);
            self(self, c + 1);
            pick.pop_back();
        }
    };
    walk(walk, 0);
    return report;
}

} // namespace eo
