#include "eo/signature.hpp"

#include <algorithm>
#include <string>

#include "eo/error.hpp"

namespace eo {

namespace {

// Converts a 1-based variable index to a 0-based position, validating range.
std::size_t position(const Signature& f, std::size_t i, const char* op) {
    if (i < 1 || i > f.arity()) {
        throw IndexError(std::string(op) + ": variable " + std::to_string(i) + " out of range 1.." +
                         std::to_string(f.arity()));
    }
    return i - 1;
}

std::size_t position(const WeightedSignature& f, std::size_t i, const char* op) {
    if (i < 1 || i > f.arity()) {
        throw IndexError(std::string(op) + ": variable " + std::to_string(i) + " out of range 1.." +
                         std::to_string(f.arity()));
    }
    return i - 1;
}

// Removes two positions, p < q or q < p.
BitVector erase2(const BitVector& v, std::size_t p, std::size_t q) {
    if (p < q) {
        std::swap(p, q);
    }
    return v.erase(p).erase(q);
}

} // namespace

// --- Signature --------------------------------------------------------------

Signature::Signature(std::size_t arity, std::vector<BitVector> rows) : arity_(arity), rows_(std::move(rows)) {
    for (const auto& row : rows_) {
        if (row.size() != arity_) {
            throw PreconditionError("support row of length " + std::to_string(row.size()) +
                                    " in signature of arity " + std::to_string(arity_));
        }
    }
    std::sort(rows_.begin(), rows_.end());
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

Signature Signature::from_rows(std::initializer_list<std::string_view> rows) {
    if (rows.size() == 0) {
        throw PreconditionError("from_rows needs at least one row; use Signature(arity, {}) for zero");
    }
    std::vector<BitVector> parsed;
    parsed.reserve(rows.size());
    for (auto r : rows) {
        parsed.push_back(BitVector::from_string(r));
    }
    const std::size_t arity = parsed.front().size();
    return Signature(arity, std::move(parsed));
}

Signature Signature::scalar(bool one) { return one ? Signature(0, {BitVector()}) : Signature(0, {}); }

Signature Signature::delta(bool bit) { return Signature(1, {BitVector(1, bit)}); }

bool Signature::contains(const BitVector& row) const { return std::binary_search(rows_.begin(), rows_.end(), row); }

// --- WeightedSignature ------------------------------------------------------

WeightedSignature::WeightedSignature(const Signature& f) : arity_(f.arity()) {
    for (const auto& row : f.support()) {
        values_.emplace(row, 1);
    }
}

BigInt WeightedSignature::value(const BitVector& x) const {
    auto it = values_.find(x);
    return it == values_.end() ? BigInt(0) : it->second;
}

void WeightedSignature::add(const BitVector& x, const BigInt& amount) {
    if (x.size() != arity_) {
        throw PreconditionError("weighted entry of length " + std::to_string(x.size()) + " in arity " +
                                std::to_string(arity_));
    }
    if (amount == 0) {
        return;
    }
    values_[x] += amount;
}

BigInt WeightedSignature::total() const {
    BigInt sum = 0;
    for (const auto& [x, v] : values_) {
        sum += v;
    }
    return sum;
}

bool WeightedSignature::is_01() const {
    return std::all_of(values_.begin(), values_.end(), [](const auto& kv) { return kv.second == 1; });
}

std::optional<Signature> WeightedSignature::to_signature() const {
    if (!is_01()) {
        return std::nullopt;
    }
    return support();
}

Signature WeightedSignature::support() const {
    std::vector<BitVector> rows;
    rows.reserve(values_.size());
    for (const auto& [x, v] : values_) {
        rows.push_back(x);
    }
    return Signature(arity_, std::move(rows));
}

// --- predicates -------------------------------------------------------------

bool is_eo(const Signature& f) {
    if (f.arity() % 2 != 0) {
        return false;
    }
    const std::size_t half = f.arity() / 2;
    return std::all_of(f.support().begin(), f.support().end(),
                       [half](const BitVector& row) { return row.weight() == half; });
}

bool is_ars(const Signature& f) {
    return std::all_of(f.support().begin(), f.support().end(),
                       [&f](const BitVector& row) { return f.contains(~row); });
}

std::size_t column_count(const Signature& f, std::size_t i, bool b) {
    const std::size_t p = position(f, i, "column_count");
    return static_cast<std::size_t>(std::count_if(f.support().begin(), f.support().end(),
                                                  [p, b](const BitVector& row) { return row.test(p) == b; }));
}

BitVector column(const Signature& f, std::size_t i) {
    const std::size_t p = position(f, i, "column");
    BitVector col(f.size());
    for (std::size_t r = 0; r < f.size(); ++r) {
        col.set(r, f.support()[r].test(p));
    }
    return col;
}

DeltaFactors delta_factors(const Signature& f) {
    if (f.is_zero()) {
        throw PreconditionError("delta_factors: the zero signature has no factors");
    }
    DeltaFactors out;
    for (std::size_t p = 0; p < f.arity(); ++p) {
        const std::size_t ones = column_count(f, p + 1, true);
        if (ones == f.size()) {
            out.ones.push_back(p + 1);
        } else if (ones == 0) {
            out.zeros.push_back(p + 1);
        }
    }
    return out;
}

// --- structural operations --------------------------------------------------

Signature pin(const Signature& f, std::size_t i, bool b) {
    const std::size_t p = position(f, i, "pin");
    std::vector<BitVector> rows;
    for (const auto& row : f.support()) {
        if (row.test(p) == b) {
            rows.push_back(row.erase(p));
        }
    }
    return Signature(f.arity() - 1, std::move(rows));
}

Signature extract(const Signature& f, std::size_t i, bool b) {
    const std::size_t p = position(f, i, "extract");
    std::vector<BitVector> rows;
    for (const auto& row : f.support()) {
        if (row.test(p) == b) {
            rows.push_back(row);
        }
    }
    return Signature(f.arity(), std::move(rows));
}

Signature pin2(const Signature& f, std::size_t i, std::size_t j, bool a, bool b) {
    const std::size_t p = position(f, i, "pin2");
    const std::size_t q = position(f, j, "pin2");
    if (p == q) {
        throw PreconditionError("pin2: the two variables must differ");
    }
    std::vector<BitVector> rows;
    for (const auto& row : f.support()) {
        if (row.test(p) == a && row.test(q) == b) {
            rows.push_back(erase2(row, p, q));
        }
    }
    return Signature(f.arity() - 2, std::move(rows));
}

Signature restrict_columns(const Signature& f, const std::vector<std::size_t>& columns) {
    std::vector<std::size_t> positions;
    positions.reserve(columns.size());
    for (std::size_t c : columns) {
        positions.push_back(position(f, c, "restrict_columns"));
    }
    std::vector<BitVector> rows;
    rows.reserve(f.size());
    for (const auto& row : f.support()) {
        rows.push_back(row.select(positions));
    }
    return Signature(columns.size(), std::move(rows));
}

Signature permute(const Signature& f, const std::vector<std::size_t>& order) {
    if (order.size() != f.arity()) {
        throw PreconditionError("permute: order has wrong length");
    }
    std::vector<bool> seen(f.arity(), false);
    for (std::size_t c : order) {
        const std::size_t p = position(f, c, "permute");
        if (seen[p]) {
            throw PreconditionError("permute: order is not a permutation");
        }
        seen[p] = true;
    }
    return restrict_columns(f, order);
}

Signature tensor(const Signature& f, const Signature& g) {
    std::vector<BitVector> rows;
    rows.reserve(f.size() * g.size());
    for (const auto& a : f.support()) {
        for (const auto& b : g.support()) {
            rows.push_back(a.concat(b));
        }
    }
    return Signature(f.arity() + g.arity(), std::move(rows));
}

Signature complement(const Signature& f) {
    std::vector<BitVector> rows;
    rows.reserve(f.size());
    for (const auto& row : f.support()) {
        rows.push_back(~row);
    }
    return Signature(f.arity(), std::move(rows));
}

namespace {

Signature toggle_row(const Signature& f, const BitVector& special) {
    std::vector<BitVector> rows;
    rows.reserve(f.size() + 1);
    bool present = false;
    for (const auto& row : f.support()) {
        if (row == special) {
            present = true;
        } else {
            rows.push_back(row);
        }
    }
    if (!present) {
        rows.push_back(special);
    }
    return Signature(f.arity(), std::move(rows));
}

} // namespace

Signature hat(const Signature& f) {
    if (f.arity() == 0) {
        throw PreconditionError("hat: arity must be positive");
    }
    return toggle_row(f, BitVector(f.arity(), true));
}

Signature check(const Signature& f) {
    if (f.arity() == 0) {
        throw PreconditionError("check: arity must be positive");
    }
    return toggle_row(f, BitVector(f.arity(), false));
}

Signature m_multiple(const Signature& f, std::size_t m) {
    if (m == 0) {
        throw PreconditionError("m_multiple: m must be at least 1");
    }
    std::vector<BitVector> rows;
    rows.reserve(f.size());
    for (const auto& row : f.support()) {
        rows.push_back(row.repeat(m));
    }
    return Signature(f.arity() * m, std::move(rows));
}

MultipleDecomposition multiple_decompose(const Signature& f) {
    if (f.is_zero()) {
        throw PreconditionError("multiple_decompose: support must be nonempty");
    }
    std::map<BitVector, std::size_t> group_of;
    MultipleDecomposition out;
    for (std::size_t i = 1; i <= f.arity(); ++i) {
        auto [it, inserted] = group_of.emplace(column(f, i), out.groups.size());
        if (inserted) {
            out.groups.emplace_back();
        }
        out.groups[it->second].push_back(i);
    }
    const std::size_t m = out.groups.empty() ? 1 : out.groups.front().size();
    const bool uniform = std::all_of(out.groups.begin(), out.groups.end(),
                                     [m](const auto& group) { return group.size() == m; });
    if (!uniform || m == 1) {
        out.base = f;
        out.m = 1;
        out.groups.clear();
        for (std::size_t i = 1; i <= f.arity(); ++i) {
            out.groups.push_back({i});
        }
        return out;
    }
    std::vector<std::size_t> representatives;
    representatives.reserve(out.groups.size());
    for (const auto& group : out.groups) {
        representatives.push_back(group.front());
    }
    out.base = restrict_columns(f, representatives);
    out.m = m;
    return out;
}

// --- weighted gadget arithmetic ---------------------------------------------

WeightedSignature tensor(const WeightedSignature& f, const WeightedSignature& g) {
    WeightedSignature out(f.arity() + g.arity());
    for (const auto& [a, va] : f.values()) {
        for (const auto& [b, vb] : g.values()) {
            out.add(a.concat(b), va * vb);
        }
    }
    return out;
}

WeightedSignature loop_diseq(const WeightedSignature& f, std::size_t i, std::size_t j) {
    const std::size_t p = position(f, i, "loop_diseq");
    const std::size_t q = position(f, j, "loop_diseq");
    if (p == q) {
        throw PreconditionError("loop_diseq: the two variables must differ");
    }
    WeightedSignature out(f.arity() - 2);
    for (const auto& [x, v] : f.values()) {
        if (x.test(p) != x.test(q)) {
            out.add(erase2(x, p, q), v);
        }
    }
    return out;
}

WeightedSignature loop_diseq(const Signature& f, std::size_t i, std::size_t j) {
    return loop_diseq(WeightedSignature(f), i, j);
}

WeightedSignature connect(const WeightedSignature& f, std::size_t i, const WeightedSignature& g, std::size_t j) {
    position(f, i, "connect");
    position(g, j, "connect");
    return loop_diseq(tensor(f, g), i, f.arity() + j);
}

} // namespace eo
