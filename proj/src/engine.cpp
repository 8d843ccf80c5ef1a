#include "eo/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>

#include "eo/affine.hpp"
#include "eo/error.hpp"

namespace eo {

const char* to_string(CountMethod m) {
    switch (m) {
    case CountMethod::Brute:
        return "brute";
    case CountMethod::Affine:
        return "affine";
    case CountMethod::ChainD1:
        return "chain-d1";
    case CountMethod::ChainD0:
        return "chain-d0";
    }
    return "?";
}

// --- brute force --------------------------------------------------------------

namespace {

class Enumerator {
public:
    explicit Enumerator(const Instance& inst) : edges_(inst.edges.size()) {
        const std::size_t nv = inst.vertices.size();
        support_.resize(nv);
        last_edge_.assign(nv, SIZE_MAX);
        for (std::size_t v = 0; v < nv; ++v) {
            const auto& f = inst.label(v);
            for (const auto& row : f.support()) {
                support_[v].push_back(row.to_word());
            }
            std::sort(support_[v].begin(), support_[v].end());
            if (f.arity() == 0 && f.is_zero()) {
                dead_ = true;
            }
        }
        ends_.resize(edges_);
        for (std::size_t e = 0; e < edges_; ++e) {
            const auto& edge = inst.edges[e];
            ends_[e] = {edge.first, edge.second};
            last_edge_[edge.first.vertex] = e;
            if (last_edge_[edge.second.vertex] == SIZE_MAX || last_edge_[edge.second.vertex] < e) {
                last_edge_[edge.second.vertex] = e;
            }
        }
        closing_.resize(edges_);
        for (std::size_t v = 0; v < nv; ++v) {
            if (last_edge_[v] != SIZE_MAX) {
                closing_[last_edge_[v]].push_back(v);
            }
        }
    }

    std::size_t edges() const noexcept { return edges_; }

    // Orientations extending the first `depth` edge bits given by `prefix`.
    std::uint64_t count_from_prefix(std::uint64_t prefix, std::size_t depth) const {
        if (dead_) {
            return 0;
        }
        std::vector<std::uint64_t> assign(support_.size(), 0);
        for (std::size_t e = 0; e < depth; ++e) {
            if (!place(e, (prefix >> e) & 1U, assign)) {
                return 0;
            }
        }
        return dfs(depth, assign);
    }

private:
    bool place(std::size_t e, bool bit, std::vector<std::uint64_t>& assign) const {
        const auto& [a, b] = ends_[e];
        assign[a.vertex] = set_bit(assign[a.vertex], a.slot - 1, bit);
        assign[b.vertex] = set_bit(assign[b.vertex], b.slot - 1, !bit);
        for (std::size_t v : closing_[e]) {
            if (!std::binary_search(support_[v].begin(), support_[v].end(), assign[v])) {
                return false;
            }
        }
        return true;
    }

    static std::uint64_t set_bit(std::uint64_t word, std::size_t pos, bool bit) {
        return bit ? word | (std::uint64_t{1} << pos) : word & ~(std::uint64_t{1} << pos);
    }

    std::uint64_t dfs(std::size_t e, std::vector<std::uint64_t>& assign) const {
        if (e == edges_) {
            return 1;
        }
        std::uint64_t total = 0;
        for (bool bit : {false, true}) {
            if (place(e, bit, assign)) {
                total += dfs(e + 1, assign);
            }
        }
        return total;
    }

    std::size_t edges_;
    bool dead_ = false;
    std::vector<std::vector<std::uint64_t>> support_;
    std::vector<std::size_t> last_edge_;
    std::vector<std::pair<Endpoint, Endpoint>> ends_;
    std::vector<std::vector<std::size_t>> closing_;
};

} // namespace

CountResult brute_force(const Instance& inst, const BruteOptions& options) {
    require_valid(inst);
    if (inst.edges.size() > options.max_edges) {
        throw ResourceError("brute force: " + std::to_string(inst.edges.size()) + " edges exceed the cap of " +
                            std::to_string(options.max_edges));
    }
    if (inst.edges.size() > 30) {
        throw ResourceError("brute force: more than 30 edges is not supported");
    }
    // A vertex without slots contributes its scalar value.
    for (std::size_t v = 0; v < inst.vertices.size(); ++v) {
        if (inst.label(v).arity() == 0 && inst.label(v).is_zero()) {
            return {0, CountMethod::Brute, {}, 0, {}};
        }
    }
    const Enumerator en(inst);
    const std::size_t split = std::min(options.split_bits, en.edges());
    const std::uint64_t tasks = std::uint64_t{1} << split;
    std::vector<std::uint64_t> partial(tasks, 0);

    std::size_t threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<std::size_t>(std::min<std::uint64_t>(threads, tasks));
    if (threads <= 1) {
        for (std::uint64_t p = 0; p < tasks; ++p) {
            partial[p] = en.count_from_prefix(p, split);
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&]() {
                for (std::uint64_t p = next++; p < tasks; p = next++) {
                    partial[p] = en.count_from_prefix(p, split);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    CountResult out;
    out.method = CountMethod::Brute;
    for (std::uint64_t c : partial) {
        out.count += c;
    }
    return out;
}

// --- affine solver -------------------------------------------------------------

CountResult solve_affine(const Instance& inst) {
    require_valid(inst);
    const std::size_t n = inst.edges.size();
    // For each vertex slot: the edge variable and whether the slot reads its complement.
    std::vector<std::vector<std::pair<std::size_t, bool>>> wiring(inst.vertices.size());
    for (std::size_t v = 0; v < inst.vertices.size(); ++v) {
        wiring[v].resize(inst.label(v).arity());
    }
    for (std::size_t e = 0; e < n; ++e) {
        const auto& edge = inst.edges[e];
        wiring[edge.first.vertex][edge.first.slot - 1] = {e, false};
        wiring[edge.second.vertex][edge.second.slot - 1] = {e, true};
    }
    std::vector<BitVector> rows;
    for (std::size_t v = 0; v < inst.vertices.size(); ++v) {
        const auto& f = inst.label(v);
        if (!is_affine(f)) {
            throw PreconditionError("solve_affine: label of vertex '" + inst.vertices[v].id + "' is not affine");
        }
        for (const auto& local : affine_system(f).constraints) {
            BitVector row(n + 1);
            bool constant = local.test(f.arity());
            for (std::size_t c = 0; c < f.arity(); ++c) {
                if (!local.test(c)) {
                    continue;
                }
                const auto [e, flipped] = wiring[v][c];
                row.set(e, !row.test(e));
                constant ^= flipped;
            }
            row.set(n, constant);
            rows.push_back(std::move(row));
        }
    }
    CountResult out;
    out.method = CountMethod::Affine;
    out.count = count_solutions(n, rows);
    return out;
}

// --- chain reaction -------------------------------------------------------------

namespace {

class Chain {
public:
    Chain(const Instance& inst, Polarity polarity, const ChainOptions& options)
        : polarity_(polarity), options_(options), oracle_(Polarity::One, options.limits) {
        const std::size_t nv = inst.vertices.size();
        labels_.resize(nv);
        slots_.resize(nv);
        ids_.resize(nv);
        std::vector<std::vector<std::size_t>> slot_id(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            ids_[v] = inst.vertices[v].id;
            const auto& f = inst.label(v);
            labels_[v] = polarity == Polarity::One ? f : complement(f);
            for (std::size_t c = 1; c <= f.arity(); ++c) {
                slot_id[v].push_back(owner_.size());
                slots_[v].push_back(owner_.size());
                owner_.push_back(v);
                names_.push_back(ids_[v] + "." + std::to_string(c));
            }
        }
        partner_.assign(owner_.size(), 0);
        for (const auto& e : inst.edges) {
            const std::size_t a = slot_id[e.first.vertex][e.first.slot - 1];
            const std::size_t b = slot_id[e.second.vertex][e.second.slot - 1];
            partner_[a] = b;
            partner_[b] = a;
        }
        for (std::size_t v = 0; v < nv; ++v) {
            const auto& f = *labels_[v];
            if (!is_eo(f)) {
                throw PreconditionError("chain reaction: label of vertex '" + ids_[v] + "' is not EO");
            }
            if (!oracle_.tractable(f)) {
                throw PreconditionError(std::string("chain reaction: label of vertex '") + ids_[v] +
                                        "' is neither affine nor " +
                                        (polarity == Polarity::One ? "δ1-affine" : "δ0-affine"));
            }
        }
    }

    CountResult run() {
        CountResult out;
        out.method = polarity_ == Polarity::One ? CountMethod::ChainD1 : CountMethod::ChainD0;
        for (;;) {
            if (has_zero_label()) {
                out.count = 0;
                out.notes.push_back("a label became the zero signature");
                break;
            }
            drop_scalars();
            const auto u = first_non_affine();
            if (!u) {
                out.count = solve_affine(residual()).count;
                break;
            }
            step(*u, out);
            // A zero label ends the run; the labels beside it need not be EO.
            if (options_.check_invariants && !has_zero_label()) {
                check_invariants();
            }
        }
        out.step_count = steps_;
        return out;
    }

private:
    bool has_zero_label() const {
        return std::any_of(labels_.begin(), labels_.end(), [](const auto& f) { return f && f->is_zero(); });
    }

    void drop_scalars() {
        for (auto& f : labels_) {
            if (f && f->arity() == 0) {
                f.reset();
            }
        }
    }

    std::optional<std::size_t> first_non_affine() const {
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            if (labels_[v] && !is_affine(*labels_[v])) {
                return v;
            }
        }
        return std::nullopt;
    }

    std::size_t column_of(std::size_t v, std::size_t sid) const {
        const auto it = std::find(slots_[v].begin(), slots_[v].end(), sid);
        if (it == slots_[v].end()) {
            throw InvariantError("chain reaction: slot " + names_[sid] + " lost from its vertex");
        }
        return static_cast<std::size_t>(it - slots_[v].begin()) + 1;
    }

    void erase_slot(std::size_t v, std::size_t sid) {
        slots_[v].erase(slots_[v].begin() + static_cast<std::ptrdiff_t>(column_of(v, sid) - 1));
    }

    void step(std::size_t u, CountResult& out) {
        ++steps_;
        const Signature f = *labels_[u];
        const auto ones = delta_factors(f).ones;
        if (ones.empty()) {
            throw InvariantError("chain reaction: non-affine label at '" + ids_[u] + "' has no δ1 factor");
        }
        const std::size_t s = ones.front();
        const std::size_t sid_s = slots_[u][s - 1];
        const std::size_t sid_t = partner_[sid_s];
        const std::size_t v = owner_[sid_t];
        const std::size_t i = column_of(v, sid_t);

        if (u == v) {
            labels_[u] = pin2(f, s, i, true, false);
            erase_slot(u, sid_s);
            erase_slot(u, sid_t);
            trace(out, "self-loop " + names_[sid_s] + "-" + names_[sid_t] + " at " + ids_[u] + " removed");
            return;
        }

        const Signature h = pin(f, s, true);
        const Signature p = pin(*labels_[v], i, false);
        erase_slot(u, sid_s);
        erase_slot(v, sid_t);
        if (p.is_zero()) {
            labels_[u] = h;
            labels_[v] = p;
            trace(out, "edge " + names_[sid_s] + "-" + names_[sid_t] + " forces a zero label at " + ids_[v]);
            return;
        }
        const auto forced = delta_factors(p).ones;
        if (forced.empty()) {
            throw InvariantError("chain reaction: pinning " + names_[sid_t] + " to 0 left no δ1 factor");
        }
        const std::size_t j = forced.front();
        const std::size_t sid_j = slots_[v][j - 1];
        labels_[u] = tensor(h, Signature::delta(true));
        slots_[u].push_back(sid_j);
        owner_[sid_j] = u;
        labels_[v] = pin(p, j, true);
        erase_slot(v, sid_j);
        trace(out, "edge " + names_[sid_s] + "-" + names_[sid_t] + " removed; " + names_[sid_j] + " forced to 1 moves to " +
                       ids_[u]);
    }

    void trace(CountResult& out, const std::string& what) const {
        if (options_.trace) {
            out.steps.push_back("step " + std::to_string(steps_) + ": " + what);
        }
    }

    void check_invariants() {
        std::size_t wired = 0;
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            if (!labels_[v]) {
                continue;
            }
            const auto& f = *labels_[v];
            if (f.arity() != slots_[v].size()) {
                throw InvariantError("chain reaction: arity and slot count differ at '" + ids_[v] + "'");
            }
            wired += f.arity();
            if (!f.is_zero() && (!is_eo(f) || !oracle_.tractable(f))) {
                throw InvariantError("chain reaction: label at '" + ids_[v] + "' left the tractable class");
            }
        }
        if (wired + 2 * steps_ != owner_.size()) {
            throw InvariantError("chain reaction: a step did not remove exactly one edge");
        }
    }

    Instance residual() const {
        Instance inst;
        std::vector<std::size_t> index(labels_.size(), SIZE_MAX);
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            if (!labels_[v]) {
                continue;
            }
            const std::string name = "s" + std::to_string(v);
            inst.add_signature(name, *labels_[v]);
            index[v] = inst.add_vertex(ids_[v], name);
        }
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            if (!labels_[v]) {
                continue;
            }
            for (std::size_t c = 0; c < slots_[v].size(); ++c) {
                const std::size_t sid = slots_[v][c];
                const std::size_t other = partner_[sid];
                if (sid < other) {
                    const std::size_t w = owner_[other];
                    inst.add_edge(index[v], c + 1, index[w], column_of(w, other));
                }
            }
        }
        return inst;
    }

    Polarity polarity_;
    ChainOptions options_;
    MembershipOracle oracle_;
    std::vector<std::optional<Signature>> labels_;
    std::vector<std::vector<std::size_t>> slots_;
    std::vector<std::string> ids_;
    std::vector<std::size_t> owner_;
    std::vector<std::size_t> partner_;
    std::vector<std::string> names_;
    std::size_t steps_ = 0;
};

} // namespace

CountResult chain_reaction(const Instance& inst, Polarity polarity, const ChainOptions& options) {
    require_valid(inst);
    return Chain(inst, polarity, options).run();
}

// --- dispatch -------------------------------------------------------------------

namespace {

bool all_in(const Instance& inst, MembershipOracle& oracle) {
    for (std::size_t v = 0; v < inst.vertices.size(); ++v) {
        const auto& f = inst.label(v);
        if (!is_eo(f) || !oracle.tractable(f)) {
            return false;
        }
    }
    return true;
}

} // namespace

CountResult solve(const Instance& inst, SolveMethod method, const SolveOptions& options) {
    require_valid(inst);
    switch (method) {
    case SolveMethod::Brute:
        return brute_force(inst, options.brute);
    case SolveMethod::Affine:
        return solve_affine(inst);
    case SolveMethod::Chain:
    case SolveMethod::Auto:
        break;
    }

    bool all_affine = true;
    for (std::size_t v = 0; v < inst.vertices.size(); ++v) {
        all_affine = all_affine && is_affine(inst.label(v));
    }
    if (all_affine && method == SolveMethod::Auto) {
        return solve_affine(inst);
    }
    MembershipOracle d1(Polarity::One, options.chain.limits);
    if (all_in(inst, d1)) {
        return chain_reaction(inst, Polarity::One, options.chain);
    }
    MembershipOracle d0(Polarity::Zero, options.chain.limits);
    if (all_in(inst, d0)) {
        return chain_reaction(inst, Polarity::Zero, options.chain);
    }

    bool each_tractable = true;
    for (std::size_t v = 0; v < inst.vertices.size() && each_tractable; ++v) {
        const auto& f = inst.label(v);
        each_tractable = is_eo(f) && (d1.tractable(f) || d0.tractable(f));
    }
    const std::string why = each_tractable
                                ? "labels mix the δ1-affine and δ0-affine classes; mixing the two classes is #P-hard "
                                  "in general"
                                : "no tractable class covers every label";
    if (method == SolveMethod::Chain) {
        throw PreconditionError("chain reaction not applicable: " + why);
    }
    if (inst.edges.size() > options.brute.max_edges) {
        throw ResourceError("no tractable method: " + why + "; " + std::to_string(inst.edges.size()) +
                            " edges exceed the brute-force cap");
    }
    auto out = brute_force(inst, options.brute);
    out.notes.push_back(why);
    return out;
}

WeightedSignature gadget_demo_hardness(const Signature& f, const Signature& g,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<bool> used_f(f.arity() + 1, false);
    std::vector<bool> used_g(g.arity() + 1, false);
    for (const auto& [i, j] : pairs) {
        if (i < 1 || i > f.arity() || j < 1 || j > g.arity()) {
            throw IndexError("gadget pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        }
        if (used_f[i] || used_g[j]) {
            throw PreconditionError("gadget pairs reuse variable " + (used_f[i] ? "x" + std::to_string(i)
                                                                                : "y" + std::to_string(j)));
        }
        used_f[i] = used_g[j] = true;
    }
    // Original variable numbers of the current columns.
    std::vector<std::size_t> alive;
    for (std::size_t c = 1; c <= f.arity() + g.arity(); ++c) {
        alive.push_back(c);
    }
    auto position = [&alive](std::size_t original) {
        return static_cast<std::size_t>(std::find(alive.begin(), alive.end(), original) - alive.begin()) + 1;
    };
    WeightedSignature w = tensor(WeightedSignature(f), WeightedSignature(g));
    for (const auto& [i, j] : pairs) {
        const std::size_t a = position(i);
        const std::size_t b = position(f.arity() + j);
        w = loop_diseq(w, a, b);
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(std::max(a, b) - 1));
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(std::min(a, b) - 1));
    }
    return w;
}

} // namespace eo
