#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eo/canonical.hpp"
#include "eo/error.hpp"
#include "eo/signature.hpp"
#include "eo/signature_io.hpp"

using namespace eo;

namespace {

Signature f2() { return Signature::from_rows({"1100", "1010", "1001"}); }
Signature g2() { return Signature::from_rows({"0011", "0101", "0110"}); }
Signature zero(std::size_t n) { return Signature(n, {}); }

BitVector bv(std::string_view s) { return BitVector::from_string(s); }

Signature random_signature(std::mt19937_64& rng, std::size_t n, std::size_t rows) {
    std::vector<BitVector> out;
    for (std::size_t r = 0; r < rows; ++r) {
        out.push_back(BitVector::from_word(rng(), n));
    }
    return Signature(n, std::move(out));
}

Signature random_eo(std::mt19937_64& rng, std::size_t n, std::size_t rows) {
    std::vector<BitVector> out;
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) {
            pos[i] = i;
        }
        std::shuffle(pos.begin(), pos.end(), rng);
        BitVector row(n);
        for (std::size_t i = 0; i < n / 2; ++i) {
            row.set(pos[i]);
        }
        out.push_back(row);
    }
    return Signature(n, std::move(out));
}

std::vector<std::size_t> random_order(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i + 1;
    }
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

} // namespace

TEST_CASE("bitvector basics") {
    auto v = bv("10110");
    CHECK(v.size() == 5);
    CHECK(v.weight() == 3);
    CHECK(v.to_string() == "10110");
    CHECK((~v).to_string() == "01001");
    CHECK(v.erase(0).to_string() == "0110");
    CHECK(v.concat(bv("01")).to_string() == "1011001");
    CHECK(bv("10").repeat(3).to_string() == "101010");
    CHECK(bv("0") < bv("1"));
    CHECK(bv("011") < bv("100"));
    CHECK_THROWS_AS(BitVector::from_string("102"), ParseError);
    CHECK_THROWS_AS(bv("10") ^ bv("101"), PreconditionError);

    auto big = BitVector(130, true);
    CHECK(big.weight() == 130);
    CHECK((~big).none());
    CHECK(big.erase(64).size() == 129);
    CHECK(big.erase(64).all());
}

TEST_CASE("is_eo") {
    CHECK(is_eo(f2()));
    CHECK(is_eo(Signature::from_rows({"10"})));
    CHECK_FALSE(is_eo(Signature::from_rows({"110", "101"})));
    CHECK(is_eo(zero(4)));
    CHECK_FALSE(is_eo(zero(3)));
    CHECK(is_eo(Signature::scalar(true)));
}

TEST_CASE("pin") {
    CHECK(pin(f2(), 2, 0) == Signature::from_rows({"110", "101"}));
    CHECK(pin(f2(), 1, 1) == Signature::from_rows({"100", "010", "001"}));
    CHECK(pin(Signature::from_rows({"10"}), 1, 0) == zero(1));
    CHECK_THROWS_AS(pin(f2(), 0, 0), IndexError);
    CHECK_THROWS_AS(pin(f2(), 5, 0), IndexError);
}

TEST_CASE("extract") {
    CHECK(extract(f2(), 2, 0) == Signature::from_rows({"1010", "1001"}));
    CHECK(extract(f2(), 1, 1) == f2());
    CHECK(extract(f2(), 1, 0) == zero(4));
    CHECK_THROWS_AS(extract(f2(), 9, 1), IndexError);
}

TEST_CASE("pin2") {
    CHECK(pin2(f2(), 1, 2, 1, 0) == Signature::from_rows({"10", "01"}));
    CHECK(pin2(f2(), 1, 2, 0, 1) == zero(2));
    CHECK(pin2(Signature::from_rows({"10"}), 1, 2, 1, 0) == Signature::scalar(true));
    CHECK(pin2(f2(), 2, 1, 0, 1) == pin2(f2(), 1, 2, 1, 0));
    CHECK_THROWS_AS(pin2(f2(), 2, 2, 0, 1), PreconditionError);
    CHECK_THROWS_AS(pin2(f2(), 2, 7, 0, 1), IndexError);
}

TEST_CASE("loop_diseq") {
    auto w = loop_diseq(f2(), 1, 2);
    CHECK(w.arity() == 2);
    CHECK(w.values().size() == 2);
    CHECK(w.value(bv("10")) == 1);
    CHECK(w.value(bv("01")) == 1);

    auto s = loop_diseq(Signature::from_rows({"10"}), 1, 2);
    CHECK(s.arity() == 0);
    CHECK(s.value(BitVector()) == 1);

    auto z = loop_diseq(Signature::from_rows({"1100", "0011"}), 1, 2);
    CHECK(z.arity() == 2);
    CHECK(z.values().empty());

    // Two rows collapsing onto one key.
    auto two = loop_diseq(Signature::from_rows({"10", "01"}), 1, 2);
    CHECK(two.value(BitVector()) == 2);
    CHECK_FALSE(two.is_01());
    CHECK_FALSE(two.to_signature().has_value());
}

TEST_CASE("connect") {
    const WeightedSignature d1(Signature::delta(true));
    const WeightedSignature d0(Signature::delta(false));
    CHECK(connect(d1, 1, d0, 1).value(BitVector()) == 1);
    CHECK(connect(d1, 1, d1, 1).values().empty());

    auto h = connect(WeightedSignature(f2()), 1, WeightedSignature(g2()), 1);
    CHECK(h.arity() == 6);
    CHECK(h.values().size() == 9);
    CHECK(h.is_01());
    CHECK_THROWS_AS(connect(d1, 2, d0, 1), IndexError);
}

TEST_CASE("tensor") {
    CHECK(tensor(Signature::delta(true), Signature::delta(false)) == Signature::from_rows({"10"}));
    CHECK(tensor(Signature::delta(true), Signature::from_rows({"100", "010", "001"})) == f2());
    CHECK(tensor(f2(), Signature::scalar(true)) == f2());
    CHECK(tensor(f2(), Signature::scalar(false)) == zero(4));
}

TEST_CASE("complement hat check") {
    CHECK(complement(f2()) == g2());
    CHECK(complement(zero(3)) == zero(3));
    CHECK(complement(complement(f2())) == f2());
    CHECK(hat(f2()) == Signature::from_rows({"1100", "1010", "1001", "1111"}));
    CHECK(check(f2()) == Signature::from_rows({"1100", "1010", "1001", "0000"}));
    CHECK(hat(hat(f2())) == f2());
    CHECK(check(check(g2())) == g2());
    CHECK_THROWS_AS(hat(Signature::scalar(true)), PreconditionError);
    CHECK_THROWS_AS(check(Signature::scalar(false)), PreconditionError);
}

TEST_CASE("column_count and delta_factors") {
    CHECK(column_count(f2(), 1, 0) == 0);
    CHECK(column_count(f2(), 2, 1) == 1);
    CHECK(column_count(zero(3), 2, 1) == 0);
    CHECK(column_count(zero(3), 2, 0) == 0);
    CHECK_THROWS_AS(column_count(f2(), 5, 0), IndexError);

    auto d = delta_factors(f2());
    CHECK(d.ones == std::vector<std::size_t>{1});
    CHECK(d.zeros.empty());
    d = delta_factors(Signature::from_rows({"10"}));
    CHECK(d.ones == std::vector<std::size_t>{1});
    CHECK(d.zeros == std::vector<std::size_t>{2});
    d = delta_factors(Signature::from_rows({"1100", "0011"}));
    CHECK(d.ones.empty());
    CHECK(d.zeros.empty());
    CHECK_THROWS_AS(delta_factors(zero(2)), PreconditionError);
}

TEST_CASE("m_multiple") {
    auto f = m_multiple(f2(), 2);
    CHECK(f == Signature::from_rows({"11001100", "10101010", "10011001"}));
    CHECK(m_multiple(f2(), 1) == f2());
    CHECK(m_multiple(Signature::delta(true), 3) == Signature::from_rows({"111"}));
    CHECK_THROWS_AS(m_multiple(f2(), 0), PreconditionError);
}

TEST_CASE("multiple_decompose") {
    auto d = multiple_decompose(m_multiple(f2(), 2));
    CHECK(d.base == f2());
    CHECK(d.m == 2);
    CHECK(d.groups == std::vector<std::vector<std::size_t>>{{1, 5}, {2, 6}, {3, 7}, {4, 8}});

    d = multiple_decompose(f2());
    CHECK(d.base == f2());
    CHECK(d.m == 1);
    CHECK(d.groups.size() == 4);

    d = multiple_decompose(Signature::from_rows({"1111"}));
    CHECK(d.base == Signature::from_rows({"1"}));
    CHECK(d.m == 4);
    CHECK(d.groups == std::vector<std::vector<std::size_t>>{{1, 2, 3, 4}});

    // Groups of sizes 2 and 1: not a multiple.
    d = multiple_decompose(Signature::from_rows({"110", "001"}));
    CHECK(d.m == 1);
    CHECK(d.base == Signature::from_rows({"110", "001"}));

    CHECK_THROWS_AS(multiple_decompose(zero(2)), PreconditionError);
}

TEST_CASE("is_ars") {
    CHECK(is_ars(Signature::from_rows({"1100", "0011"})));
    CHECK_FALSE(is_ars(f2()));
    CHECK(is_ars(zero(4)));
}

TEST_CASE("canonical_form examples") {
    CHECK(canonical_form(permute(f2(), {4, 3, 2, 1})) == canonical_form(f2()));
    CHECK(canonical_form(f2()) != canonical_form(g2()));
    CHECK(canonical_form(Signature::from_rows({"10"})) == canonical_form(Signature::from_rows({"01"})));
    CHECK(canonical_form(zero(3)) == zero(3));
    CHECK(canonical_form(Signature::scalar(true)) == Signature::scalar(true));
    CHECK_THROWS_AS(canonical_form(f2(), CanonicalLimits{3, 64}), ResourceError);
}

namespace {

// Least matrix over all column orders, by direct enumeration.
Signature canonical_by_enumeration(const Signature& f) {
    std::vector<std::size_t> order(f.arity());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i + 1;
    }
    std::optional<std::vector<std::string>> best;
    std::optional<Signature> best_sig;
    do {
        auto g = permute(f, order);
        std::vector<std::string> cols;
        for (std::size_t c = 1; c <= g.arity(); ++c) {
            cols.push_back(column(g, c).to_string());
        }
        if (!best || cols < *best) {
            best = cols;
            best_sig = g;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return *best_sig;
}

} // namespace

TEST_CASE("canonical_form agrees with exhaustive minimum") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 1 + rng() % 7;
        const std::size_t rows = 1 + rng() % 10;
        auto f = random_signature(rng, n, rows);
        CHECK(canonical_form(f) == canonical_by_enumeration(f));
    }
}

TEST_CASE("canonical_form is a permutation invariant") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 * (1 + rng() % 6);
        auto f = random_eo(rng, n, 1 + rng() % 12);
        auto g = permute(f, random_order(rng, n));
        CHECK(canonical_form(f) == canonical_form(g));
        CHECK(permutation_equivalent(f, g));
        CHECK(permute(f, canonical_order(f)) == canonical_form(f));
    }
}

TEST_CASE("canonical_form separates a relabeled row") {
    // Same column multiset, different incidence.
    auto a = Signature::from_rows({"1100", "0011", "1010"});
    auto b = Signature::from_rows({"1100", "0011", "0110"});
    CHECK(permutation_equivalent(a, b));
    auto c = Signature::from_rows({"110000", "001100", "000011"});
    auto d = Signature::from_rows({"110000", "011000", "000011"});
    CHECK_FALSE(permutation_equivalent(c, d));
}

TEST_CASE("operation properties on random signatures") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + rng() % 8;
        auto f = random_signature(rng, n, rng() % 12);
        const std::size_t i = 1 + rng() % n;
        for (bool b : {false, true}) {
            auto lhs = extract(f, i, b);
            std::vector<std::size_t> order;
            order.push_back(i);
            for (std::size_t c = 1; c <= n; ++c) {
                if (c != i) {
                    order.push_back(c);
                }
            }
            CHECK(permute(lhs, order) == tensor(Signature::delta(b), pin(f, i, b)));
        }
        CHECK(pin(f, i, 0).size() + pin(f, i, 1).size() == f.size());

        std::size_t j = 1 + rng() % n;
        if (j == i) {
            j = j % n + 1;
        }
        std::size_t disagree = 0;
        for (const auto& row : f.support()) {
            disagree += row.test(i - 1) != row.test(j - 1);
        }
        CHECK(loop_diseq(f, i, j).total() == disagree);

        CHECK(complement(complement(f)) == f);
        CHECK(hat(hat(f)) == f);
        CHECK(check(check(f)) == f);

        if (!f.is_zero()) {
            bool distinct = true;
            for (std::size_t a = 1; a <= n && distinct; ++a) {
                for (std::size_t c = a + 1; c <= n && distinct; ++c) {
                    distinct = column(f, a) != column(f, c);
                }
            }
            if (distinct) {
                const std::size_t m = 2 + rng() % 3;
                auto d = multiple_decompose(m_multiple(f, m));
                CHECK(d.base == f);
                CHECK(d.m == m);
            }
        }
    }
}

TEST_CASE("tensor is associative up to relabeling") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        auto a = random_signature(rng, 1 + rng() % 3, 1 + rng() % 3);
        auto b = random_signature(rng, 1 + rng() % 3, 1 + rng() % 3);
        auto c = random_signature(rng, 1 + rng() % 3, 1 + rng() % 3);
        CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
        CHECK(permutation_equivalent(tensor(a, b), tensor(b, a)));
    }
}

TEST_CASE("factors of EO signatures are constant weighted") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        auto a = random_eo(rng, 2 * (1 + rng() % 3), 1 + rng() % 4);
        auto b = random_eo(rng, 2 * (1 + rng() % 3), 1 + rng() % 4);
        auto f = tensor(a, b);
        REQUIRE(is_eo(f));
        for (const auto& factor : {a, b}) {
            const auto w = factor.support().front().weight();
            for (const auto& row : factor.support()) {
                CHECK(row.weight() == w);
            }
        }
    }
}

TEST_CASE("text format") {
    auto f = parse_signature("# f2\n1100\n1010\n\n1001  # last\n");
    CHECK(f == f2());
    CHECK(format_signature(f) == "1001\n1010\n1100\n");
    CHECK(parse_signature(format_signature(f)) == f);

    auto z = parse_signature("arity 4\n");
    CHECK(z == zero(4));
    CHECK(parse_signature(format_signature(z)) == z);
    CHECK(parse_signature(format_signature(Signature::scalar(true))) == Signature::scalar(true));
    CHECK(parse_signature(format_signature(Signature::scalar(false))) == Signature::scalar(false));
    CHECK(parse_signature("arity 2\n10\n") == Signature::from_rows({"10"}));

    CHECK_THROWS_AS(parse_signature(""), ParseError);
    CHECK_THROWS_AS(parse_signature("10\n101\n"), ParseError);
    CHECK_THROWS_AS(parse_signature("arity 3\n10\n"), ParseError);
    CHECK_THROWS_AS(parse_signature("10\n10\n"), ParseError);
    CHECK_THROWS_AS(parse_signature("1x\n"), ParseError);
    CHECK_THROWS_AS(parse_signature("10\narity 2\n"), ParseError);
    CHECK_THROWS_AS(parse_signature("arity 70\n"), ParseError);
    try {
        parse_signature("10\n\n1a\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}
