#include <doctest.h>

#include <set>

#include "lr_oracle.hpp"
#include "spechtkit/abacus.hpp"
#include "spechtkit/classify.hpp"
#include "spechtkit/rouquier.hpp"
#include "support.hpp"

using namespace spechtkit;

namespace {

std::vector<Partition> all_up_to(int w)
{
    return testsupport::partitions_up_to(w);
}

// Sums the d-formula over every tuple of partitions of size at most w.
long long d_brute(const Multipartition& lq, const Multipartition& mq, int w)
{
    int p = static_cast<int>(lq.size());
    std::vector<Partition> pool = all_up_to(w);
    int vars = 2 * (p - 1);
    std::vector<std::size_t> idx(vars, 0);
    long long total = 0;
    for (;;) {
        std::vector<Partition> sigma(p), tau(p);
        for (int i = 0; i + 1 < p; ++i) {
            sigma[i] = pool[idx[i]];
            tau[i + 1] = pool[idx[p - 1 + i]];
        }
        long long term = 1;
        for (int i = 0; i < p && term; ++i)
            term *= lr_coefficient(lq[i], conjugate(tau[i]), sigma[i]);
        for (int i = 0; i + 1 < p && term; ++i)
            term *= lr_coefficient(mq[i], sigma[i], tau[i + 1]);
        total += term;
        int k = 0;
        while (k < vars && ++idx[k] == pool.size())
            idx[k++] = 0;
        if (k == vars)
            break;
    }
    return total;
}

std::vector<Multipartition> multipartitions(int slots, int w)
{
    std::vector<Multipartition> out{{}};
    for (int s = 0; s < slots; ++s) {
        std::vector<Multipartition> next;
        for (auto& m : out) {
            int used = 0;
            for (auto& x : m)
                used += x.size();
            for (const auto& part : all_up_to(w - used)) {
                auto n = m;
                n.push_back(part);
                next.push_back(n);
            }
        }
        out = next;
    }
    std::vector<Multipartition> exact;
    for (auto& m : out) {
        int used = 0;
        for (auto& x : m)
            used += x.size();
        if (used == w)
            exact.push_back(m);
    }
    return exact;
}

} // namespace

TEST_CASE("LR coefficients")
{
    CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{2}) == 1);
    CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
    CHECK(lr_coefficient(Partition{2}, Partition{1, 1}, Partition{}) == 0);
    for (int n = 0; n <= 6; ++n)
        for (const auto& g : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& a : partitions_of(k))
                    for (const auto& b : partitions_of(n - k))
                        CHECK(lr_coefficient(g, a, b) == testsupport::lr_bialternant(g, a, b));
}

TEST_CASE("LR symmetry and support bounds")
{
    for (int n = 0; n <= 7; ++n)
        for (const auto& g : partitions_of(n)) {
            auto pairs = lr_support_pairs(g);
            if (n > 1)
                CHECK(pairs.size() >= 3);
            for (auto& [a, b] : pairs)
                CHECK(lr_coefficient(g, b, a) == lr_coefficient(g, a, b));
        }
    CHECK(lr_support_pairs(Partition{1}) ==
          std::vector<std::pair<Partition, Partition>>{{{}, {1}}, {{1}, {}}});
    auto two = lr_support_pairs(Partition{2, 1});
    CHECK(two.size() == 6);
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& a : partitions_of(k))
                for (const auto& b : partitions_of(n - k)) {
                    int support = 0;
                    for (const auto& g : partitions_of(n))
                        support += lr_coefficient(g, a, b) > 0;
                    CHECK(support >= 2);
                }
}

TEST_CASE("d coefficients against tuple enumeration")
{
    for (int w = 1; w <= 2; ++w) {
        auto lams = multipartitions(3, w);
        for (const auto& lq : lams)
            for (const auto& mq : lams) {
                if (!mq.back().empty())
                    continue;
                CHECK(d_coeff_quotients(lq, mq) == d_brute(lq, mq, w));
            }
    }
}

TEST_CASE("Rouquier rows")
{
    WeylOracle oracle = WeylOracle::builtin();
    auto row = rouquier_row(Partition{2, 1}, 5, oracle);
    CHECK(row == DecompositionRow{{Partition{2, 1}, 1}});

    // weight-two Rouquier block for p = 3
    Partition start{2, 2, 1, 1};
    REQUIRE(is_quotient_separated(start, 3));
    Partition r = rouquier_walk(start, 3);
    for (const Partition& mu : restricted_block_members(r, 3)) {
        CHECK(is_restricted(mu, 3));
        CHECK(d_coeff(mu, mu, 3) == 1);
    }
    CHECK_THROWS_AS(d_coeff(r, Partition{1}, 3), Error);
    CHECK_THROWS_AS(rouquier_row(Partition{3, 3, 3}, 3, oracle), Error);

    for (int p : {3, 5})
        for (const auto& l : testsupport::partitions_up_to(16)) {
            if (!is_self_conjugate(l) || p_core_weight(l, p).weight != 1)
                continue;
            CHECK(qs_length(l, p, oracle) == 2);
        }

    for (const auto& l : testsupport::partitions_up_to(9))
        if (p_core_weight(l, 3).weight == 0)
            CHECK(qs_length(l, 3, oracle) == 1);
}

TEST_CASE("oracle coverage and extension")
{
    WeylOracle oracle = WeylOracle::builtin();
    CHECK(oracle(Partition{1}, Partition{1}, 3) == 1);
    CHECK(oracle(Partition{3, 1}, Partition{2, 1, 1}, 3) == 0);  // irreducible Weyl module
    CHECK(oracle(Partition{2, 2}, Partition{3, 1}, 3) == 0);     // not dominated
    CHECK(oracle(Partition{4}, Partition{2, 1, 1}, 3) == 0);     // different 3-cores
    CHECK(!oracle(Partition{2, 1}, Partition{1, 1, 1}, 3).has_value());
    oracle.add_entry(Partition{2, 1}, Partition{1, 1, 1}, 3, 1);
    CHECK(oracle(Partition{2, 1}, Partition{1, 1, 1}, 3) == 1);
}
