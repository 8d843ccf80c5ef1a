#include "eo/affine.hpp"

#include <map>
#include <sstream>

#include "eo/error.hpp"
#include "eo/gf2.hpp"
#include "eo/signature_io.hpp"

namespace eo {

namespace {

std::vector<BitVector> differences(const Signature& f) {
    std::vector<BitVector> diffs;
    diffs.reserve(f.size());
    const BitVector& base = f.support().front();
    for (const auto& row : f.support()) {
        if (row != base) {
            diffs.push_back(row ^ base);
        }
    }
    return diffs;
}

BitVector unsatisfiable_row(std::size_t n) {
    BitVector row(n + 1);
    row.set(n);
    return row;
}

} // namespace

bool is_affine(const Signature& f) {
    if (f.is_zero()) {
        return true;
    }
    const std::size_t r = gf2::rank(differences(f));
    return r < 63 && f.size() == (std::size_t{1} << r);
}

AffineSystem affine_system(const Signature& f) {
    AffineSystem sys;
    sys.num_vars = f.arity();
    if (f.is_zero()) {
        sys.empty = true;
        sys.constraints.push_back(unsatisfiable_row(f.arity()));
        return sys;
    }
    auto echelon = gf2::reduce(differences(f));
    if (echelon.rows.size() >= 63 || f.size() != (std::size_t{1} << echelon.rows.size())) {
        throw PreconditionError("affine_system: signature is not affine");
    }
    sys.offset = f.support().front();
    for (auto& y : gf2::null_space(echelon, f.arity())) {
        const bool c = y.dot(sys.offset);
        sys.constraints.push_back(y.concat(BitVector(1, c)));
    }
    sys.basis = std::move(echelon.rows);
    return sys;
}

Signature enumerate(const AffineSystem& system) {
    if (system.empty) {
        return Signature(system.num_vars, {});
    }
    const std::size_t k = system.basis.size();
    if (k >= 32) {
        throw ResourceError("enumerate: 2^" + std::to_string(k) + " solutions");
    }
    std::vector<BitVector> rows;
    rows.reserve(std::size_t{1} << k);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        BitVector x = system.offset;
        for (std::size_t b = 0; b < k; ++b) {
            if ((mask >> b) & 1U) {
                x ^= system.basis[b];
            }
        }
        rows.push_back(std::move(x));
    }
    return Signature(system.num_vars, std::move(rows));
}

BigInt count_solutions(std::size_t num_vars, std::span<const BitVector> equations) {
    for (const auto& row : equations) {
        if (row.size() != num_vars + 1) {
            throw PreconditionError("count_solutions: equation of length " + std::to_string(row.size()) +
                                    " over " + std::to_string(num_vars) + " variables");
        }
    }
    const auto echelon = gf2::reduce(std::vector<BitVector>(equations.begin(), equations.end()));
    if (!echelon.pivots.empty() && echelon.pivots.back() == num_vars) {
        return 0;
    }
    return BigInt(1) << (num_vars - echelon.rows.size());
}

BigInt count_solutions(std::span<const AffineSystem> systems, std::span<const BitVector> extra) {
    if (systems.empty() && extra.empty()) {
        throw PreconditionError("count_solutions: no systems and no equations");
    }
    const std::size_t n = systems.empty() ? extra.front().size() - 1 : systems.front().num_vars;
    std::vector<BitVector> rows;
    for (const auto& sys : systems) {
        if (sys.num_vars != n) {
            throw PreconditionError("count_solutions: systems over " + std::to_string(sys.num_vars) + " and " +
                                    std::to_string(n) + " variables");
        }
        rows.insert(rows.end(), sys.constraints.begin(), sys.constraints.end());
    }
    rows.insert(rows.end(), extra.begin(), extra.end());
    return count_solutions(n, rows);
}

std::vector<std::pair<std::size_t, std::size_t>> pairwise_opposite_pairs(const Signature& f) {
    if (f.is_zero() || !is_eo(f) || !is_affine(f)) {
        throw PreconditionError("pairwise_opposite_pairs: needs a nonzero affine EO signature");
    }
    std::map<BitVector, std::vector<std::size_t>> groups;
    std::vector<BitVector> columns;
    for (std::size_t i = 1; i <= f.arity(); ++i) {
        columns.push_back(column(f, i));
        groups[columns.back()].push_back(i);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> done(f.arity() + 1, false);
    for (std::size_t i = 1; i <= f.arity(); ++i) {
        if (done[i]) {
            continue;
        }
        const auto& mine = groups[columns[i - 1]];
        auto other = groups.find(~columns[i - 1]);
        if (other == groups.end() || other->second.size() != mine.size()) {
            throw InvariantError("pairwise_opposite_pairs: column " + std::to_string(i) + " has no opposite partner");
        }
        for (std::size_t k = 0; k < mine.size(); ++k) {
            const std::size_t a = mine[k];
            const std::size_t b = other->second[k];
            done[a] = done[b] = true;
            pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

WeightProfile constant_weight_profile(const Signature& f) {
    WeightProfile out;
    if (f.is_zero()) {
        out.constant_weight = true;
        return out;
    }
    const std::size_t w = f.support().front().weight();
    for (const auto& row : f.support()) {
        if (row.weight() != w) {
            return out;
        }
    }
    out.constant_weight = true;
    out.weight = w;
    return out;
}

std::string format_affine_system(const AffineSystem& system) {
    std::ostringstream out;
    auto sig = enumerate(system);
    if (!sig.is_zero() && sig.arity() > 0) {
        out << "arity " << sig.arity() << '\n';
    }
    out << format_signature(sig) << "constraints\n";
    for (const auto& row : system.constraints) {
        out << row.to_string() << '\n';
    }
    return out.str();
}

AffineSystem parse_affine_system(std::string_view text) {
    auto lines = split_lines(text);
    std::size_t split = lines.size();
    for (std::size_t k = 0; k < lines.size(); ++k) {
        if (strip_line(lines[k]) == "constraints") {
            split = k;
            break;
        }
    }
    if (split == lines.size()) {
        throw ParseError("missing 'constraints' line");
    }
    auto sig = parse_signature_lines(std::vector<std::string>(lines.begin(), lines.begin() + split), 1);
    if (!is_affine(sig)) {
        throw ParseError("listed solutions do not form an affine set");
    }
    auto sys = affine_system(sig);
    std::vector<BitVector> rows;
    for (std::size_t k = split + 1; k < lines.size(); ++k) {
        auto line = strip_line(lines[k]);
        if (line.empty()) {
            continue;
        }
        BitVector row;
        try {
            row = BitVector::from_string(line);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), k + 1);
        }
        if (row.size() != sys.num_vars + 1) {
            throw ParseError("constraint row needs " + std::to_string(sys.num_vars + 1) + " columns", k + 1);
        }
        rows.push_back(std::move(row));
    }
    const auto given = gf2::reduce(rows);
    const bool inconsistent = !given.pivots.empty() && given.pivots.back() == sys.num_vars;
    const bool matches = sys.empty ? inconsistent : given.rows == gf2::reduce(sys.constraints).rows;
    if (!matches) {
        throw ParseError("constraints do not describe the listed solutions");
    }
    return sys;
}

} // namespace eo
