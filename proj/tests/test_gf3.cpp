#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "wicketlab/gf3.hpp"

using namespace wicketlab;

namespace {

F3Vector v(const char* s) { return F3Vector::parse(s); }

CapSet cap_of(std::size_t n, std::initializer_list<const char*> elems) {
    std::vector<F3Vector> out;
    for (auto e : elems) out.push_back(v(e));
    return CapSet(n, out);
}

oracle::Point digits(const F3Vector& x) {
    oracle::Point p;
    for (std::size_t i = 0; i < x.dimension(); ++i) p.push_back(x[i]);
    return p;
}

std::vector<oracle::Point> digits(const CapSet& s) {
    std::vector<oracle::Point> out;
    for (const auto& e : s.elements()) out.push_back(digits(e));
    return out;
}

}  // namespace

TEST(F3Vector, AddAndScale) {
    EXPECT_EQ(f3_add(v("12"), v("22")), v("01"));
    EXPECT_EQ(f3_scale(0, v("212")), F3Vector::zero(3));
    const auto x = v("2101");
    EXPECT_EQ(f3_add(x, f3_scale(2, x)), F3Vector::zero(4));
    EXPECT_THROW(f3_add(v("1"), v("11")), std::invalid_argument);
}

TEST(F3Vector, EncodingRoundTrip) {
    for (std::size_t n = 0; n <= 4; ++n)
        for (Encoding c = 0; c < pow3(n); ++c) {
            const auto x = F3Vector::decode(c, n);
            EXPECT_EQ(x.encode(), c);
            EXPECT_EQ(F3Vector::parse(x.to_string()), x);
        }
    EXPECT_EQ(v("10").encode(), 3u);  // most significant digit first
    EXPECT_THROW(F3Vector::parse("13"), std::invalid_argument);
    EXPECT_THROW(F3Vector::decode(9, 2), std::invalid_argument);
}

TEST(F3Vector, CompletionMatchesArithmetic) {
    for (Encoding x = 0; x < 27; ++x)
        for (Encoding y = 0; y < 27; ++y) {
            const auto z = F3Vector::decode(f3_completion(x, y, 3), 3);
            EXPECT_EQ(f3_add(f3_add(F3Vector::decode(x, 3), F3Vector::decode(y, 3)), z), F3Vector::zero(3));
        }
}

TEST(Ap3, SmallExamples) {
    EXPECT_TRUE(is_ap3_free(cap_of(1, {"0", "1"})).free);
    const auto line = is_ap3_free(cap_of(1, {"0", "1", "2"}));
    ASSERT_FALSE(line.free);
    EXPECT_EQ(f3_add(f3_add((*line.witness)[0], (*line.witness)[1]), (*line.witness)[2]), F3Vector::zero(1));

    const auto s = cap_of(2, {"00", "01", "10", "22"});
    EXPECT_EQ(is_ap3_free(s).free, oracle::ap3_free(digits(s)));
}

TEST(Ap3, PairCompletionMatchesTripleScan) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 3;
        std::vector<F3Vector> elems;
        for (Encoding c = 0; c < pow3(n); ++c)
            if (rng() % 3 == 0) elems.push_back(F3Vector::decode(c, n));
        const CapSet s(n, elems);
        const auto check = is_ap3_free(s);
        EXPECT_EQ(check.free, oracle::ap3_free(digits(s)));
        if (!check.free) {
            const auto& w = *check.witness;
            EXPECT_TRUE(s.contains(w[0]) && s.contains(w[1]) && s.contains(w[2]));
            EXPECT_TRUE(w[0] != w[1] && w[1] != w[2] && w[0] != w[2]);
        }
    }
}

TEST(Ap3, VerifyThrowsWithWitness) {
    try {
        verify_cap(cap_of(2, {"00", "11", "22", "01"}));
        FAIL() << "expected Ap3Violation";
    } catch (const Ap3Violation& e) {
        EXPECT_EQ(f3_add(f3_add(e.witness()[0], e.witness()[1]), e.witness()[2]), F3Vector::zero(2));
    }
}

TEST(CapSet, RejectsMalformed) {
    EXPECT_THROW(cap_of(2, {"00", "00"}), std::invalid_argument);
    EXPECT_THROW(cap_of(2, {"00", "1"}), std::invalid_argument);
    EXPECT_FALSE(cap_of(1, {"0"}).verified());
}

TEST(MaxCapExact, AgreesWithFullEnumeration) {
    EXPECT_EQ(max_cap_exact(0).size, 1u);
    for (std::size_t n = 1; n <= 2; ++n) EXPECT_EQ(max_cap_exact(n).size, oracle::max_cap_full_enumeration(n));
    EXPECT_EQ(max_cap_exact(1).size, 2u);
}

TEST(MaxCapExact, DimensionThreeAgreesWithUnprunedBacktracker) {
    const auto r = max_cap_exact(3);
    EXPECT_EQ(r.size, oracle::max_cap_unpruned(3, {0, 1, 3}));
    EXPECT_TRUE(oracle::ap3_free(digits(r.witness)));
    EXPECT_EQ(r.witness.size(), r.size);
}

TEST(MaxCapExact, AtLeastProductBound) {
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto r = max_cap_exact(n);
        EXPECT_GE(r.size, std::size_t{1} << n);
        EXPECT_TRUE(r.witness.verified());
    }
    EXPECT_THROW(max_cap_exact(4), std::invalid_argument);
}

TEST(ProductCap, Examples) {
    const auto two = verify_cap(cap_of(1, {"0", "1"}));
    const auto four = product_cap(two, two);
    EXPECT_EQ(four.dimension(), 2u);
    EXPECT_EQ(four.size(), 4u);
    EXPECT_TRUE(oracle::ap3_free(digits(four)));

    const auto sixteen = product_cap(four, four);
    EXPECT_EQ(sixteen.size(), 16u);
    EXPECT_TRUE(oracle::ap3_free(digits(sixteen)));

    const auto point = verify_cap(cap_of(1, {"2"}));
    const auto copy = product_cap(four, point);
    EXPECT_EQ(copy.size(), four.size());
    for (std::size_t i = 0; i < copy.size(); ++i) EXPECT_EQ(copy[i].truncate(), four[i]);

    EXPECT_THROW(product_cap(cap_of(1, {"0"}), two), std::invalid_argument);
}

TEST(ProductCap, RandomCapsStayCaps) {
    std::mt19937_64 rng(11);
    auto random_cap = [&](std::size_t n) {
        std::vector<F3Vector> elems;
        std::vector<Encoding> order(pow3(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (auto c : order) {
            elems.push_back(F3Vector::decode(c, n));
            if (!is_ap3_free(CapSet(n, elems)).free) elems.pop_back();
        }
        return verify_cap(CapSet(n, elems));
    };
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_cap(1 + trial % 2), b = random_cap(1 + trial % 3);
        const auto p = product_cap(a, b);
        EXPECT_EQ(p.size(), a.size() * b.size());
        EXPECT_TRUE(oracle::ap3_free(digits(p)));
    }
}

TEST(LiftCap, AppendsOne) {
    const auto lifted = lift_cap(verify_cap(cap_of(1, {"0", "1"})));
    EXPECT_EQ(lifted, cap_of(2, {"01", "11"}));
    EXPECT_TRUE(lifted.verified());

    const auto empty = lift_cap(verify_cap(CapSet(3, {})));
    EXPECT_EQ(empty.dimension(), 4u);
    EXPECT_TRUE(empty.empty());

    const auto nine = lift_cap(max_cap_exact(3).witness);
    EXPECT_EQ(nine.size(), 9u);
    EXPECT_EQ(nine.dimension(), 4u);
    EXPECT_TRUE(oracle::ap3_free(digits(nine)));
    for (const auto& e : nine.elements()) EXPECT_EQ(e[3], 1);
}

TEST(CapFile, ReadsCommentsAndBlankLines) {
    std::istringstream in("# a cap\n00\n\n  01 \n10\n# end\n11\n");
    const auto s = load_cap(in);
    EXPECT_EQ(s.dimension(), 2u);
    EXPECT_EQ(s.size(), 4u);
    std::ostringstream out;
    write_cap(out, s);
    std::istringstream again(out.str());
    EXPECT_EQ(read_cap(again), s);
}

TEST(CapFile, ParseErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            read_cap(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("00\n01\n0a\n"), 3u);
    EXPECT_EQ(line_of("# c\n00\n012\n"), 3u);
    std::istringstream dup("00\n00\n");
    EXPECT_THROW(read_cap(dup), ParseError);
    std::istringstream bad("00\n01\n02\n");
    EXPECT_THROW(load_cap(bad), Ap3Violation);
    std::istringstream empty("");
    EXPECT_EQ(read_cap(empty, 3).dimension(), 3u);
}
