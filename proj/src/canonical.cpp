#include "eo/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "eo/error.hpp"

namespace eo {

namespace {

using Mask = std::uint64_t;
// Number of zeros the candidate column puts into each current row block.
using Key = std::vector<std::uint16_t>;

// Larger zero counts mean the column vector (zeros sorted first inside each
// block) is lexicographically smaller. Returns <0 when a is the better key.
int compare_keys(const Key& a, const Key& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) {
            return a[i] > b[i] ? -1 : 1;
        }
    }
    return 0;
}

// Individualize-and-refine search over column orders. Row blocks are the
// classes of rows sharing the prefix chosen so far, kept in sorted order.
// Branches that tie are cut by automorphisms found at the leaves.
class Search {
public:
    explicit Search(const Signature& f) : n_(f.arity()), columns_(n_, 0), class_rep_(n_) {
        for (std::size_t r = 0; r < f.size(); ++r) {
            for (std::size_t c = 0; c < n_; ++c) {
                if (f.support()[r].test(c)) {
                    columns_[c] |= Mask{1} << r;
                }
            }
        }
        for (std::size_t c = 0; c < n_; ++c) {
            class_rep_[c] = c;
            for (std::size_t d = 0; d < c; ++d) {
                if (columns_[d] == columns_[c]) {
                    class_rep_[c] = class_rep_[d];
                    break;
                }
            }
        }
        const Mask all = f.size() == 64 ? ~Mask{0} : (Mask{1} << f.size()) - 1;
        used_.assign(n_, false);
        cur_key_.resize(n_);
        run(all == 0 ? std::vector<Mask>{} : std::vector<Mask>{all});
    }

    const std::vector<std::size_t>& best_order() const { return best_order_; }

private:
    void run(std::vector<Mask> blocks) { dfs(0, blocks); }

    // Returns the depth to unwind to, or nullopt for a normal return.
    std::optional<std::size_t> dfs(std::size_t depth, const std::vector<Mask>& blocks) {
        if (depth == n_) {
            return leaf();
        }

        std::vector<std::size_t> candidates;
        Key best_key;
        for (std::size_t c = 0; c < n_; ++c) {
            if (used_[c] || !first_unused_of_class(c)) {
                continue;
            }
            Key key = key_of(c, blocks);
            const int cmp = candidates.empty() ? -1 : compare_keys(key, best_key);
            if (cmp < 0) {
                candidates.assign(1, c);
                best_key = std::move(key);
            } else if (cmp == 0) {
                candidates.push_back(c);
            }
        }
        cur_key_[depth] = best_key;

        std::vector<std::size_t> explored;
        for (std::size_t c : candidates) {
            if (have_best_ && prefix_vs(best_key_, depth + 1) > 0) {
                return std::nullopt;
            }
            if (in_explored_orbit(c, explored, depth)) {
                continue;
            }
            explored.push_back(c);

            used_[c] = true;
            order_.push_back(c);
            auto jump = dfs(depth + 1, refine(blocks, columns_[c]));
            order_.pop_back();
            used_[c] = false;

            if (jump && *jump < depth) {
                return jump;
            }
        }
        return std::nullopt;
    }

    std::optional<std::size_t> leaf() {
        if (!have_best_) {
            have_best_ = true;
            best_order_ = first_order_ = order_;
            best_key_ = first_key_ = cur_key_;
            return std::nullopt;
        }
        const int vs_best = prefix_vs(best_key_, n_);
        if (vs_best < 0) {
            best_order_ = order_;
            best_key_ = cur_key_;
            return std::nullopt;
        }
        std::optional<std::size_t> jump;
        if (prefix_vs(first_key_, n_) == 0) {
            record_automorphism(first_order_);
            jump = common_prefix(first_order_);
        }
        if (vs_best == 0) {
            record_automorphism(best_order_);
            const std::size_t l = common_prefix(best_order_);
            jump = jump ? std::min(*jump, l) : l;
        }
        return jump;
    }

    bool first_unused_of_class(std::size_t c) const {
        for (std::size_t d = class_rep_[c]; d < c; ++d) {
            if (class_rep_[d] == class_rep_[c] && !used_[d]) {
                return false;
            }
        }
        return true;
    }

    Key key_of(std::size_t c, const std::vector<Mask>& blocks) const {
        Key key(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            key[b] = static_cast<std::uint16_t>(std::popcount(blocks[b] & ~columns_[c]));
        }
        return key;
    }

    static std::vector<Mask> refine(const std::vector<Mask>& blocks, Mask col) {
        std::vector<Mask> out;
        out.reserve(blocks.size() * 2);
        for (Mask b : blocks) {
            if (Mask zeros = b & ~col) {
                out.push_back(zeros);
            }
            if (Mask ones = b & col) {
                out.push_back(ones);
            }
        }
        return out;
    }

    // Compares the current prefix of `depth` keys against a stored path.
    int prefix_vs(const std::vector<Key>& other, std::size_t depth) const {
        for (std::size_t d = 0; d < depth; ++d) {
            if (int cmp = compare_keys(cur_key_[d], other[d])) {
                return cmp;
            }
        }
        return 0;
    }

    std::size_t common_prefix(const std::vector<std::size_t>& other) const {
        std::size_t l = 0;
        while (l < order_.size() && order_[l] == other[l]) {
            ++l;
        }
        return l;
    }

    // Both orders give the same matrix, so mapping one onto the other is a
    // symmetry of the signature.
    void record_automorphism(const std::vector<std::size_t>& other) {
        std::vector<std::size_t> perm(n_);
        bool identity = true;
        for (std::size_t k = 0; k < n_; ++k) {
            perm[order_[k]] = other[k];
            identity = identity && order_[k] == other[k];
        }
        if (!identity) {
            generators_.push_back(std::move(perm));
        }
    }

    bool in_explored_orbit(std::size_t c, const std::vector<std::size_t>& explored, std::size_t depth) const {
        if (explored.empty() || generators_.empty()) {
            return false;
        }
        std::vector<std::size_t> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&parent](std::size_t x) {
            while (parent[x] != x) {
                x = parent[x] = parent[parent[x]];
            }
            return x;
        };
        for (const auto& g : generators_) {
            bool fixes_prefix = true;
            for (std::size_t k = 0; k < depth && fixes_prefix; ++k) {
                fixes_prefix = g[order_[k]] == order_[k];
            }
            if (!fixes_prefix) {
                continue;
            }
            for (std::size_t x = 0; x < n_; ++x) {
                parent[find(x)] = find(g[x]);
            }
        }
        const std::size_t root = find(c);
        return std::any_of(explored.begin(), explored.end(), [&](std::size_t e) { return find(e) == root; });
    }

    std::size_t n_;
    std::vector<Mask> columns_;
    std::vector<std::size_t> class_rep_;
    std::vector<bool> used_;
    std::vector<std::size_t> order_;
    std::vector<Key> cur_key_;

    bool have_best_ = false;
    std::vector<std::size_t> best_order_, first_order_;
    std::vector<Key> best_key_, first_key_;
    std::vector<std::vector<std::size_t>> generators_;
};

void check_limits(const Signature& f, const CanonicalLimits& limits) {
    const std::size_t max_support = std::min<std::size_t>(limits.max_support, 64);
    if (f.arity() > limits.max_arity) {
        throw ResourceError("canonical_form: arity " + std::to_string(f.arity()) + " exceeds cap " +
                            std::to_string(limits.max_arity));
    }
    if (f.size() > max_support) {
        throw ResourceError("canonical_form: support size " + std::to_string(f.size()) + " exceeds cap " +
                            std::to_string(max_support));
    }
}

} // namespace

std::vector<std::size_t> canonical_order(const Signature& f, const CanonicalLimits& limits) {
    check_limits(f, limits);
    std::vector<std::size_t> order(f.arity());
    if (f.is_zero()) {
        std::iota(order.begin(), order.end(), 1);
        return order;
    }
    Search search(f);
    const auto& best = search.best_order();
    for (std::size_t k = 0; k < order.size(); ++k) {
        order[k] = best[k] + 1;
    }
    return order;
}

Signature canonical_form(const Signature& f, const CanonicalLimits& limits) {
    return permute(f, canonical_order(f, limits));
}

bool permutation_equivalent(const Signature& f, const Signature& g, const CanonicalLimits& limits) {
    if (f.arity() != g.arity() || f.size() != g.size()) {
        return false;
    }
    return canonical_form(f, limits) == canonical_form(g, limits);
}

} // namespace eo
