#include <doctest.h>

#include "spechtkit/classify.hpp"
#include "spechtkit/restriction.hpp"
#include "support.hpp"

using namespace spechtkit;
using testsupport::partitions_up_to;

TEST_CASE("JM partitions")
{
    CHECK(is_jm(Partition{19, 11, 2, 2, 2, 1, 1}, 3));
    CHECK(is_jm_abacus(Partition{19, 11, 2, 2, 2, 1, 1}, 3));
    CHECK(!is_jm(Partition{13, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 5));
    CHECK(is_jm(Partition{}, 3));
    CHECK(is_jm_abacus(Partition{}, 3));
    for (int p : {3, 5})
        for (const auto& l : partitions_up_to(13)) {
            CHECK(is_jm(l, p) == is_jm_abacus(l, p));
            if (p_core_weight(l, p).weight == 0)
                CHECK(is_jm(l, p));
            CHECK(is_jm(l, p) == is_jm(conjugate(l), p));
        }
}

TEST_CASE("R-partitions")
{
    Partition one{13, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    auto a = r_info(one, 5);
    REQUIRE(a.has_value());
    CHECK(a->distinguished == Node{1, 1});
    CHECK(a->type_one);
    CHECK(r_info_abacus(one, 5) == a);

    Partition two{14, 10, 5, 4, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1};
    auto b = r_info(two, 5);
    REQUIRE(b.has_value());
    CHECK(b->distinguished == Node{3, 3});
    CHECK(b->type_two);
    CHECK(!b->type_one);
    CHECK(r_info_abacus(two, 5) == b);

    auto c = r_info(Partition{2, 2}, 3);
    REQUIRE(c.has_value());
    CHECK(c->type_one);
    CHECK(c->type_two);

    CHECK(!r_info(Partition{}, 3).has_value());
    CHECK(!r_info_abacus(Partition{}, 3).has_value());
    CHECK(!r_info(Partition{2}, 3).has_value());
    CHECK_THROWS_AS(r_info(Partition{1}, 2), Error);
}

TEST_CASE("R-partition cross-checks on self-conjugate partitions")
{
    for (int p : {3, 5, 7})
        for (const auto& l : partitions_up_to(18)) {
            if (!is_self_conjugate(l))
                continue;
            auto a = r_info(l, p);
            auto b = r_info_abacus(l, p);
            CHECK(a == b);
            if (a) {
                CHECK((a->type_one || a->type_two));
                if (a->type_one)
                    CHECK(a->distinguished == Node{1, 1});
                if (a->type_two)
                    CHECK(hook_length(l, a->distinguished) == p);
            }
            if (p_core_weight(l, p).weight == 1) {
                REQUIRE(a.has_value());
                CHECK(a->type_two);
            }
        }
}

TEST_CASE("two-factor set and alternating irreducibility")
{
    CHECK(in_two_factor_set(Partition{3, 3, 3}, 3));
    CHECK(in_two_factor_set(Partition{14, 10, 5, 4, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1}, 5));
    CHECK(!in_two_factor_set(Partition{4, 4, 4, 3}, 3));
    CHECK(!in_two_factor_set(Partition{3, 1}, 3));
    CHECK(alt_irreducible(Partition{3, 3, 3}, 3));
    CHECK(alt_irreducible(Partition{19, 11, 2, 2, 2, 1, 1}, 3));
    CHECK(alt_irreducible(Partition{13, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 5));

    for (const auto& l : partitions_up_to(14)) {
        bool sc = is_self_conjugate(l);
        auto info3 = r_info(l, 3);
        bool p3 = is_jm(l, 3) ||
                  (sc && (p_core_weight(l, 3).weight == 1 || (info3 && info3->type_one) ||
                          l == Partition{3, 3, 3}));
        CHECK(alt_irreducible(l, 3) == p3);
        for (int p : {5, 7}) {
            bool r = r_info(l, p).has_value();
            CHECK(alt_irreducible(l, p) == (is_jm(l, p) || r));
        }
    }
}

TEST_CASE("type I survives adding back +-i nodes")
{
    for (int p : {3, 5})
        for (const auto& l : partitions_up_to(18)) {
            if (!is_self_conjugate(l))
                continue;
            for (int i = 0; i < (p - 1) / 2; ++i)
                CHECK(r1_stability(l, p, i));
        }
}
