#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>

#include "powerlambda/catalog.hpp"
#include "powerlambda/errors.hpp"
#include "powerlambda/group.hpp"
#include "support/oracles.hpp"

using namespace powerlambda;

namespace {

std::map<std::uint64_t, std::size_t> order_counts(const FiniteGroup& g)
{
    std::map<std::uint64_t, std::size_t> counts;
    for (std::uint64_t d : g.element_orders()) {
        ++counts[d];
    }
    return counts;
}

Permutation cycle3() { return {1, 2, 0}; }
Permutation swap01() { return {1, 0, 2}; }

const char* const kSmallCatalog[] = {
    "C2", "C7", "C12", "D3", "D4", "D7", "Q2", "Q3", "Q5", "E2_3", "E3_2", "E5_1",
    "S3", "S4", "A4", "A5", "PSL2_5", "PSL2_7", "X(C2,C3)", "X(D3,C2)", "X(C2,X(C2,C2))",
};

} // namespace

TEST(CloseGenerators, SingleThreeCycle)
{
    std::vector<Permutation> gens{cycle3()};
    FiniteGroup g = close_generators(gens);
    EXPECT_EQ(g.order(), 3U);
    EXPECT_EQ(g.element_order(1), 3U);
}

TEST(CloseGenerators, SymmetricOnThreePoints)
{
    std::vector<Permutation> gens{cycle3(), swap01()};
    FiniteGroup g = close_generators(gens);
    EXPECT_EQ(g.order(), 6U);
    // BFS order: identity, then the generators in the given order.
    EXPECT_EQ(std::vector<std::uint32_t>(g.permutation(1).begin(), g.permutation(1).end()),
              cycle3());
    EXPECT_EQ(std::vector<std::uint32_t>(g.permutation(2).begin(), g.permutation(2).end()),
              swap01());
}

TEST(CloseGenerators, EmptyGivesTrivialGroup)
{
    FiniteGroup g = close_generators({});
    EXPECT_EQ(g.order(), 1U);
    EXPECT_EQ(g.element_order(0), 1U);
}

TEST(CloseGenerators, CapAndMalformedInput)
{
    std::vector<Permutation> s5{{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}};
    EXPECT_THROW(close_generators(s5, 100), SizeError);
    EXPECT_EQ(close_generators(s5, 120).order(), 120U);

    std::vector<Permutation> bad_degree{{1, 0}, {1, 2, 0}};
    EXPECT_THROW(close_generators(bad_degree), DomainError);
    std::vector<Permutation> not_bijection{{0, 0, 1}};
    EXPECT_THROW(close_generators(not_bijection), DomainError);
}

TEST(Power, Basics)
{
    FiniteGroup c6 = build_group("C6");
    const ElementId a = 1; // first generator
    EXPECT_EQ(c6.name(a), "a");
    EXPECT_EQ(c6.power(a, 0), FiniteGroup::identity());
    const ElementId a3 = c6.power(a, 3);
    EXPECT_EQ(c6.name(a3), "a^3");
    EXPECT_EQ(c6.element_order(a3), 2U);
    for (ElementId g = 0; g < c6.order(); ++g) {
        EXPECT_EQ(c6.power(g, c6.element_order(g)), FiniteGroup::identity());
    }
}

TEST(BuildGroup, DihedralOrderSix)
{
    FiniteGroup d3 = build_group("D3");
    EXPECT_EQ(order_counts(d3), (std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 3}, {3, 2}}));
}

TEST(BuildGroup, AlternatingFiveMatchesEnumeration)
{
    FiniteGroup a5 = build_group("A5");
    EXPECT_EQ(a5.order(), 60U);
    EXPECT_EQ(order_counts(a5), oracle::alternating_order_counts(5));
}

TEST(BuildGroup, PSL2MatchesMatrixEnumeration)
{
    for (int p : {5, 7, 11}) {
        FiniteGroup g = build_group("PSL2_" + std::to_string(p));
        EXPECT_EQ(g.order(), static_cast<std::size_t>(p * (p * p - 1) / 2));
        EXPECT_EQ(order_counts(g), oracle::psl2_order_counts(p)) << "p=" << p;
    }
    auto counts = order_counts(build_group("PSL2_7"));
    EXPECT_EQ(counts, (std::map<std::uint64_t, std::size_t>{
                          {1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}}));
}

TEST(BuildGroup, AdvertisedOrders)
{
    for (const char* text : kSmallCatalog) {
        GroupSpec spec = parse_group_spec(text);
        EXPECT_EQ(build_group(spec).order(), advertised_order(spec)) << text;
    }
    EXPECT_EQ(build_group("S7").order(), 5040U);
    EXPECT_FALSE(build_group("S7").has_cached_table());
    EXPECT_EQ(build_group("A7").order(), 2520U);
    EXPECT_EQ(build_group("E2_11").order(), 2048U);
}

// Identity, associativity, inverses, orders and Lagrange on every small
// catalog group, checked against naive repeated multiplication.
TEST(BuildGroup, GroupAxioms)
{
    for (const char* text : kSmallCatalog) {
        FiniteGroup g = build_group(text);
        const auto n = static_cast<ElementId>(g.order());
        EXPECT_EQ(g.element_order(0), 1U) << text;
        for (ElementId a = 0; a < n; ++a) {
            ASSERT_EQ(g.multiply(a, 0), a);
            ASSERT_EQ(g.multiply(0, a), a);
            ASSERT_EQ(g.multiply(a, g.inverse(a)), 0U);
            ASSERT_EQ(g.element_order(a), oracle::naive_order(g, a));
            ASSERT_EQ(g.order() % g.element_order(a), 0U);
            if (a != 0) {
                ASSERT_NE(g.element_order(a), 1U);
            }
        }
        if (n <= 60) {
            for (ElementId a = 0; a < n; ++a) {
                for (ElementId b = 0; b < n; ++b) {
                    for (ElementId c = 0; c < n; ++c) {
                        ASSERT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)))
                            << text;
                    }
                }
            }
        }
    }
}

TEST(BuildGroup, DihedralInvolutionCount)
{
    for (std::uint64_t n = 3; n <= 12; ++n) {
        FiniteGroup g = build_group("D" + std::to_string(n));
        auto counts = order_counts(g);
        EXPECT_EQ(counts[2], n % 2 == 1 ? n : n + 1) << "n=" << n;
    }
}

TEST(BuildGroup, QuaternionHasOneInvolution)
{
    for (std::uint64_t n = 2; n <= 6; ++n) {
        FiniteGroup g = build_group("Q" + std::to_string(n));
        EXPECT_EQ(order_counts(g)[2], 1U) << "n=" << n;
        // a^n = b^2 in the presentation.
        const ElementId a = *g.find(g.generators()[0]);
        const ElementId b = *g.find(g.generators()[1]);
        EXPECT_EQ(g.power(a, n), g.power(b, 2));
        EXPECT_EQ(g.multiply(g.multiply(g.inverse(b), a), b), g.inverse(a));
    }
}

TEST(BuildGroup, DisplayNames)
{
    FiniteGroup d4 = build_group("D4");
    std::vector<std::string> names;
    for (ElementId g = 0; g < d4.order(); ++g) {
        names.push_back(d4.name(g));
    }
    std::sort(names.begin(), names.end());
    EXPECT_EQ(names, (std::vector<std::string>{"1", "a", "a b", "a^2", "a^2 b", "a^3",
                                               "a^3 b", "b"}));
    EXPECT_EQ(build_group("A5").name(0), "()");
    FiniteGroup psl = build_group("PSL2_5");
    EXPECT_EQ(psl.name(2), "(0 inf)(1 4)");
    FiniteGroup prod = build_group("X(C2,C3)");
    EXPECT_EQ(prod.name(0), "(1,1)");
}

TEST(ParseGroupSpec, RoundTripAndErrors)
{
    for (const char* text : kSmallCatalog) {
        EXPECT_EQ(to_string(parse_group_spec(text)), text);
    }
    for (const char* bad : {"Z5", "C1", "C2049", "D2", "Q1", "E4_2", "E2_12", "S8", "A2",
                            "PSL2_3", "PSL2_17", "PSL2_9", "X(C2)", "X(S7,S7)", "C5x", "", "C"}) {
        EXPECT_THROW(parse_group_spec(bad), SpecError) << bad;
    }
}

TEST(Catalog, SimpleFlags)
{
    EXPECT_TRUE(is_nonabelian_simple(parse_group_spec("A5")));
    EXPECT_TRUE(is_nonabelian_simple(parse_group_spec("PSL2_13")));
    EXPECT_FALSE(is_nonabelian_simple(parse_group_spec("A4")));
    EXPECT_FALSE(is_nonabelian_simple(parse_group_spec("C5")));
    EXPECT_TRUE(is_prime_cyclic(parse_group_spec("C5")));
    EXPECT_FALSE(is_prime_cyclic(parse_group_spec("C6")));
}
