#include <doctest.h>

#include "spechtkit/abacus.hpp"
#include "spechtkit/restriction.hpp"
#include "support.hpp"

using namespace spechtkit;
using testsupport::partitions_up_to;

namespace {

// Mullineux symbol of a p-regular partition: sizes and row counts of successive p-rims.
std::vector<std::pair<int, int>> mullineux_symbol(Partition lambda, int p)
{
    std::vector<std::pair<int, int>> out;
    while (!lambda.empty()) {
        int len = lambda.length();
        std::vector<int> parts = lambda.parts();
        int removed = 0;
        int row = 1;
        while (row <= len) {
            // walk p rim nodes starting at the end of this row
            Node cur{row, lambda[row]};
            int taken = 0;
            for (;;) {
                --parts[cur.row - 1];
                ++taken;
                if (taken == p || cur == Node{len, 1})
                    break;
                if (lambda.contains({cur.row + 1, cur.col}))
                    ++cur.row;
                else
                    --cur.col;
            }
            removed += taken;
            row = cur.row + 1;
        }
        out.push_back({removed, len});
        lambda = Partition(parts);
    }
    return out;
}

// Mullineux map via symbols, on restricted labels: M(lambda)' has the transformed symbol of lambda'.
bool mullineux_symbol_check(const Partition& lambda, const Partition& image, int p)
{
    auto a = mullineux_symbol(conjugate(lambda), p);
    auto b = mullineux_symbol(conjugate(image), p);
    if (a.size() != b.size())
        return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        int eps = a[k].first % p == 0 ? 0 : 1;
        if (b[k].first != a[k].first || b[k].second != a[k].first - a[k].second + eps)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("removing all i-nodes")
{
    Partition l{4, 3, 1, 1};
    RemovalResult r0 = remove_all(l, 3, {0});
    CHECK(r0.result == Partition{3, 3, 1});
    CHECK(r0.counts == std::vector<int>{2});
    CHECK(remove_all(l, 3, {1}).result == Partition{4, 2, 1, 1});
    CHECK(rem_count(l, 3, 1) == 1);
    CHECK(remove_all(l, 3, {2}).result == l);
    CHECK(rem_count(l, 3, 2) == 0);
    RemovalResult w = remove_all(l, 3, {0, 1});
    CHECK(w.result == Partition{3, 2});
    CHECK(w.counts == std::vector<int>{2, 2});
}

TEST_CASE("signatures and normal nodes")
{
    Partition l{6, 5, 3, 2, 1, 1, 1};
    Signature s = signature(l, 3, 0);
    CHECK(s.str() == "+--+-");
    CHECK(s.reduced().str() == "+--");
    CHECK(s.normal_nodes() == std::vector<Node>{{2, 5}, {7, 1}});
    CHECK(remove_normal(l, 3, {0}).result == Partition{6, 4, 3, 2, 1, 1});
    CHECK_THROWS_AS(signature(Partition{4}, 3, 0), Error);

    Partition big{14, 5, 2, 2, 2, 1, 1, 1, 1, 1};
    Partition mu = restrictise(big, 3);
    std::vector<Node> normal = signature(mu, 3, 0).normal_nodes();
    std::vector<int> ramps;
    for (const Node& n : normal)
        ramps.push_back(ramp_of(n, 3));
    CHECK(ramps == std::vector<int>{6, 9, 18});
    CHECK(!later_addable_criterion(big, 3, 0));
    CHECK(remove_normal(mu, 3, {0}).result == restrictise(remove_all(big, 3, {0}).result, 3));
}

TEST_CASE("normal node counts bound removable counts")
{
    for (int p : {3, 5})
        for (const auto& l : partitions_up_to(12)) {
            Partition mu = restrictise(l, p);
            for (int i = 0; i < p; ++i) {
                int nor = nor_count(mu, p, i);
                int rem = rem_count(l, p, i);
                CHECK(nor <= rem);
                CHECK((nor < rem) == later_addable_criterion(l, p, i));
                if (nor == rem)
                    CHECK(remove_normal(mu, p, {i}).result ==
                          restrictise(remove_all(l, p, {i}).result, p));
            }
        }
}

TEST_CASE("lightning over words")
{
    Partition l{4, 4, 4, 3};
    CHECK(lightning(l, 3, {1, 2, 1}));
    CHECK(lightning(l, 3, {2, 1, 2}));
    CHECK_THROWS_AS(lightning(l, 2, {0}), Error);
    for (const auto& m : partitions_up_to(9))
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                Word w{a, b};
                bool direct = false;
                Partition cur = m;
                for (int i : w) {
                    int nor = nor_count(restrictise(cur, 3), 3, i);
                    if (nor < rem_count(cur, 3, i))
                        direct = true;
                    cur = remove_all(cur, 3, {i}).result;
                }
                CHECK(lightning(m, 3, w) == direct);
                if (lightning(m, 3, {a}))
                    CHECK(lightning(m, 3, w));
            }
}

TEST_CASE("abacus witness implies the ramp criterion")
{
    CHECK(!abacus_lightning_witness(Partition{3, 3, 3}, 3, 0).has_value());
    int found = 0;
    for (int p : {3, 5})
        for (const auto& l : partitions_up_to(12))
            for (int i = 0; i < p; ++i)
                if (abacus_lightning_witness(l, p, i)) {
                    ++found;
                    CHECK(later_addable_criterion(l, p, i));
                }
    CHECK(found > 0);
}

TEST_CASE("removing residues i and -i together")
{
    for (int p : {3, 5, 7}) {
        int h = (p - 1) / 2;
        for (const auto& l : partitions_up_to(16)) {
            if (!is_self_conjugate(l))
                continue;
            CHECK(remove_all_pm(l, p, 0) == remove_all(l, p, {0}).result);
            for (int i = 1; i < h; ++i)
                CHECK(remove_all_pm(l, p, i) == remove_all(l, p, {i, p - i}).result);
            CHECK(remove_all_pm(l, p, h) == remove_all(l, p, {h, p - h, h}).result);
            for (int i = 0; i <= h; ++i)
                CHECK(is_self_conjugate(remove_all_pm(l, p, i)));
        }
    }
    CHECK_THROWS_AS(remove_all_pm(Partition{2}, 3, 0), Error);
}

TEST_CASE("Mullineux map")
{
    CHECK(mullineux(Partition{1, 1, 1, 1, 1, 1}, 3) == Partition{2, 2, 2});
    CHECK_THROWS_AS(mullineux(Partition{4}, 3), Error);
    for (int p : {2, 3, 5})
        for (const auto& l : partitions_up_to(12)) {
            if (!is_restricted(l, p))
                continue;
            Partition m = mullineux(l, p);
            CHECK(m.size() == l.size());
            CHECK(is_restricted(m, p));
            CHECK(mullineux(m, p) == l);
            CHECK(mullineux_symbol_check(l, m, p));
            if (l.size() < p)
                CHECK(m == conjugate(l));
            for (int i = 0; i < p; ++i)
                CHECK(nor_count(l, p, i) == nor_count(m, p, mod(-i, p)));
            if (!l.empty())
                CHECK(mod(l.length() + m.length(), p) != 1 % p);
        }
}
