#include <doctest.h>

#include <random>
#include <set>

#include "hom_oracle.hpp"
#include "spechtkit/specht_hom.hpp"
#include "support.hpp"

using namespace spechtkit;
using testsupport::row_standard_tableaux;

namespace {

Tableau tab(const char* s)
{
    return Tableau::parse(s);
}

Tableau random_row_standard(std::mt19937& rng, const Partition& shape, const std::vector<int>& type)
{
    std::vector<int> entries;
    for (std::size_t i = 0; i < type.size(); ++i)
        entries.insert(entries.end(), type[i], static_cast<int>(i) + 1);
    std::shuffle(entries.begin(), entries.end(), rng);
    std::vector<std::vector<int>> rows;
    std::size_t k = 0;
    for (int part : shape.parts()) {
        rows.emplace_back(entries.begin() + k, entries.begin() + k + part);
        std::sort(rows.back().begin(), rows.back().end());
        k += part;
    }
    return Tableau(rows);
}

Tableau random_tableau(std::mt19937& rng, int n)
{
    Partition shape = testsupport::random_partition(rng, n);
    Partition type = testsupport::random_partition(rng, n);
    return random_row_standard(rng, shape, type.parts());
}

HomExpr random_expr(std::mt19937& rng, int n, int p)
{
    Partition shape = testsupport::random_partition(rng, n);
    Partition type = testsupport::random_partition(rng, n);
    HomExpr e(p);
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i)
        e.add(random_row_standard(rng, shape, type.parts()), 1 + rng() % (p - 1));
    return e;
}

bool all_semistandard(const HomExpr& e)
{
    for (const auto& [t, c] : e.terms())
        if (!t.semistandard())
            return false;
    return true;
}

std::set<std::string> support(const HomExpr& e)
{
    std::set<std::string> out;
    for (const auto& [t, c] : e.terms())
        out.insert(to_string(t));
    return out;
}

int rank_mod(std::vector<testsupport::ModuleVector> rows, int p)
{
    int rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty())
            continue;
        ++rank;
        auto [pivot, c] = *rows[i].begin();
        long long inv = 1;
        while (inv * c % p != 1)
            ++inv;
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            auto it = rows[j].find(pivot);
            if (it == rows[j].end())
                continue;
            long long f = it->second * inv % p;
            for (auto& [key, v] : rows[i])
                rows[j][key] -= f * v;
            testsupport::reduce(rows[j], p);
        }
    }
    return rank;
}

} // namespace

TEST_CASE("tableau basics")
{
    Tableau t = tab("11223333/112244/11/2/5");
    CHECK(t.shape() == Partition{8, 6, 2, 1, 1});
    CHECK(t.type() == std::vector<int>{6, 5, 4, 2, 1});
    CHECK(to_string(t) == "11223333/112244/11/2/5");
    CHECK(t.row_standard());
    CHECK(!t.semistandard());
    CHECK(tab("112/23").semistandard());
    CHECK(to_string(Tableau({{1, 10}, {2}})) == "1,10/2");
    CHECK(Tableau::parse("1,10/2") == Tableau({{1, 10}, {2}}));
    CHECK_THROWS_AS(Tableau({{1}, {1, 2}}), Error);
    CHECK_THROWS_AS(Tableau(std::vector<std::vector<int>>{{0}}), Error);
    CHECK_THROWS_AS(Tableau::parse("1x"), Error);
}

TEST_CASE("binomials mod p")
{
    for (int p : {2, 3, 5, 7}) {
        std::vector<std::vector<long long>> pascal(41, std::vector<long long>(41, 0));
        for (int n = 0; n <= 40; ++n) {
            pascal[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                pascal[n][k] = (pascal[n - 1][k - 1] + pascal[n - 1][k]) % p;
            for (int k = 0; k <= n; ++k)
                CHECK(binomial_mod(n, k, p) == pascal[n][k]);
        }
        CHECK(binomial_mod(3, 5, p) == 0);
    }
    CHECK(multinomial_mod({1, 1, 1}, 7) == 6);
    CHECK(multinomial_mod({1, 1, 1}, 3) == 0);
    CHECK(multinomial_mod({2, 0, 3}, 7) == 3);
}

TEST_CASE("dominance Hasse diagram")
{
    auto all = row_standard_tableaux(Partition{3, 2}, {2, 2, 1});
    REQUIRE(all.size() == 5);
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& lo : all)
        for (const auto& hi : all) {
            if (!dominance(hi, lo).strictly)
                continue;
            bool cover = true;
            for (const auto& mid : all)
                if (dominance(hi, mid).strictly && dominance(mid, lo).strictly)
                    cover = false;
            if (cover)
                edges.emplace(to_string(lo), to_string(hi));
        }
    std::set<std::pair<std::string, std::string>> expected{
        {"223/11", "123/12"}, {"123/12", "113/22"}, {"123/12", "122/13"},
        {"113/22", "112/23"}, {"122/13", "112/23"}};
    CHECK(edges == expected);

    Tableau t = tab("122/13"), s = tab("112/23");
    CHECK(dominance(s, t).strictly);
    CHECK(!dominance(t, s).dominates);
    for (const auto& x : all) {
        CHECK(dominance(x, x).dominates);
        CHECK(!dominance(x, x).strictly);
    }
    CHECK_THROWS_AS(dominance(tab("12/3"), tab("123")), Error);
    CHECK_THROWS_AS(dominance(tab("11/2"), tab("12/2")), Error);
}

TEST_CASE("semistandardization examples")
{
    for (int p : {3, 5, 7}) {
        HomExpr e = semistandardize(HomExpr::single(tab("122/13"), p));
        CHECK(e == HomExpr::single(tab("112/23"), p, p - 1));
    }
    HomExpr ss = HomExpr::single(tab("112/23"), 3, 2);
    CHECK(semistandardize(ss) == ss);
    CHECK(to_string(semistandardize(HomExpr::single(tab("122/13"), 3))) == "-[112/23]");
}

TEST_CASE("semistandardization agrees with evaluation on a polytabloid")
{
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 5; ++n)
            for (const auto& shape : testsupport::partitions_of(n))
                for (const auto& type : testsupport::partitions_of(n)) {
                    std::vector<std::vector<int>> types{type.parts()};
                    std::vector<int> rev(type.parts().rbegin(), type.parts().rend());
                    if (rev != type.parts())
                        types.push_back(rev);
                    for (const auto& ty : types)
                        for (const Tableau& t : row_standard_tableaux(shape, ty)) {
                            HomExpr in = HomExpr::single(t, p);
                            HomExpr out = semistandardize(in);
                            CHECK(all_semistandard(out));
                            for (const auto& [s, c] : out.terms())
                                CHECK(dominance(s, t).dominates);
                            CHECK(testsupport::evaluate(out) == testsupport::evaluate(in));
                        }
                }
    std::mt19937 rng(17);
    for (int k = 0; k < 40; ++k) {
        HomExpr in = random_expr(rng, 6, 3);
        CHECK(testsupport::evaluate(semistandardize(in)) == testsupport::evaluate(in));
    }
}

TEST_CASE("semistandard homomorphisms are independent on the polytabloid")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto& shape : testsupport::partitions_of(n))
            for (const auto& type : testsupport::partitions_of(n)) {
                std::vector<testsupport::ModuleVector> images;
                for (const Tableau& t : row_standard_tableaux(shape, type.parts()))
                    if (t.semistandard())
                        images.push_back(testsupport::apply_to_polytabloid(t, 3));
                CHECK(rank_mod(images, 3) == static_cast<int>(images.size()));
            }
}

TEST_CASE("pivot orders are confluent")
{
    std::mt19937 rng(5);
    for (int k = 0; k < 200; ++k) {
        int p = k % 2 ? 3 : 5;
        HomExpr e = random_expr(rng, 2 + static_cast<int>(rng() % 9), p);
        HomExpr a = semistandardize(e, Pivot::TopLeft);
        HomExpr b = semistandardize(e, Pivot::BottomRight);
        CHECK(a == b);
        for (const auto& [s, c] : a.terms()) {
            bool dominated = false;
            for (const auto& [t, d] : e.terms())
                dominated |= dominance(s, t).dominates;
            CHECK(dominated);
        }
    }
}

TEST_CASE("too many equal entries in two rows kills the homomorphism")
{
    std::mt19937 rng(23);
    int hits = 0;
    for (int k = 0; k < 3000 && hits < 200; ++k) {
        Tableau a = random_tableau(rng, 2 + static_cast<int>(rng() % 8));
        bool violates = false;
        int rows = a.shape().length();
        for (int h = 1; h <= rows; ++h)
            for (int j = h + 1; j <= rows; ++j)
                for (auto [l, mult] : a.row_multiset(h))
                    violates |= mult + multiplicity(a.row_multiset(j), l) > a.shape()[h];
        if (!violates)
            continue;
        ++hits;
        CHECK(semistandardize(HomExpr::single(a, 3)).is_zero());
    }
    CHECK(hits >= 50);
}

TEST_CASE("Garnir relations vanish")
{
    std::mt19937 rng(29);
    int checked = 0;
    for (int k = 0; k < 400; ++k) {
        Tableau a = random_tableau(rng, 2 + static_cast<int>(rng() % 6));
        if (a.shape().length() < 2)
            continue;
        int h = 1 + static_cast<int>(rng() % (a.shape().length() - 1));
        std::vector<int> pool;
        for (int x : a.rows()[h - 1])
            pool.push_back(x);
        for (int x : a.rows()[h])
            pool.push_back(x);
        std::shuffle(pool.begin(), pool.end(), rng);
        int s_size = a.shape()[h] + 1 + static_cast<int>(rng() % (a.shape()[h + 1]));
        int r_size = static_cast<int>(rng() % (pool.size() - s_size + 1));
        Multiset r, s, t;
        for (std::size_t i = 0; i < pool.size(); ++i)
            ++(static_cast<int>(i) < s_size ? s : static_cast<int>(i) < s_size + r_size ? r : t)[pool[i]];
        for (int p : {2, 3}) {
            HomExpr rel = garnir_relation(a, h, r, s, t, p);
            CHECK(semistandardize(rel).is_zero());
            if (a.shape().size() <= 6)
                CHECK(testsupport::evaluate(rel).empty());
        }
        ++checked;
    }
    CHECK(checked > 100);
    Tableau a = tab("122/13");
    CHECK_THROWS_AS(garnir_relation(a, 1, {{1, 1}}, {{2, 2}}, {{1, 1}, {3, 1}}, 3), Error);
    CHECK_THROWS_AS(garnir_relation(a, 2, {}, {{1, 2}, {2, 2}, {3, 1}}, {}, 3), Error);
}

TEST_CASE("moving entries up a row")
{
    Tableau b = tab("112/23");
    CHECK(move_ones(b, 1, 1, 3) == HomExpr::single(b, 3));

    // two-step expansion for (8,6,2,1,1): four tableaux over a large prime, and the
    // 222333 term carries the binomial 3, so it drops out in characteristic 3
    Tableau start = tab("11222223/113334/11/4/5");
    const std::set<std::string> four{"11111122/222333/34/4/5", "11111123/222233/34/4/5",
                                     "11111122/222334/33/4/5", "11111123/222234/33/4/5"};
    for (int p : {101, 3}) {
        HomExpr step = move_ones(start, 2, 1, p);
        CHECK(support(step) == std::set<std::string>{"11222223/111133/34/4/5", "11222223/111134/33/4/5"});
        HomExpr second(p);
        for (const auto& [t, c] : step.terms())
            second += move_ones(t, 1, 1, p).scaled(c);
        std::set<std::string> expect = four;
        if (p == 3)
            expect.erase("11111122/222333/34/4/5");
        CHECK(support(second) == expect);
        CHECK(second.coeff(tab("11111123/222234/33/4/5")) == 1);
        CHECK(second.coeff(tab("11111122/222333/34/4/5")) == 3 % p);
    }

    std::mt19937 rng(31);
    for (int k = 0; k < 200; ++k) {
        Tableau t = random_tableau(rng, 2 + static_cast<int>(rng() % 8));
        if (t.shape().length() < 2)
            continue;
        int h = 1 + static_cast<int>(rng() % (t.shape().length() - 1));
        int r = 1 + static_cast<int>(rng() % t.type().size());
        HomExpr lhs = semistandardize(HomExpr::single(t, 3));
        CHECK(semistandardize(move_ones(t, h, r, 3)) == lhs);
    }
}

TEST_CASE("composition")
{
    std::mt19937 rng(37);
    for (int k = 0; k < 150; ++k) {
        int n = 1 + static_cast<int>(rng() % 5);
        Partition lambda = testsupport::random_partition(rng, n);
        Partition mu = testsupport::random_partition(rng, n);
        Partition nu = testsupport::random_partition(rng, n);
        Tableau s = random_row_standard(rng, lambda, mu.parts());
        Tableau t = random_row_standard(rng, mu, nu.parts());
        int p = k % 2 ? 2 : 3;
        HomExpr composed = compose(t, s, p);
        std::vector<std::vector<int>> base(lambda.length());
        int next = 1;
        for (int r = 1; r <= lambda.length(); ++r)
            for (int c = 1; c <= lambda[r]; ++c)
                base[r - 1].push_back(next++);
        CHECK(testsupport::evaluate_on_tabloid(composed, base, n) ==
              testsupport::evaluate_chain(HomExpr::single(t, p), HomExpr::single(s, p), base, n,
                                          mu.length()));

        std::vector<std::vector<int>> identity;
        for (int r = 1; r <= mu.length(); ++r)
            identity.emplace_back(mu[r], r);
        CHECK(compose(t, Tableau(identity), p) == HomExpr::single(t, p));
    }
    CHECK_THROWS_AS(compose(tab("12/3"), tab("111"), 3), Error);

    for (int k = 0; k < 100; ++k) {
        int n = 1 + static_cast<int>(rng() % 8);
        Partition a = testsupport::random_partition(rng, n), b = testsupport::random_partition(rng, n),
                  c = testsupport::random_partition(rng, n), d = testsupport::random_partition(rng, n);
        HomExpr q = HomExpr::single(random_row_standard(rng, a, b.parts()), 3);
        HomExpr s = HomExpr::single(random_row_standard(rng, b, c.parts()), 3);
        HomExpr t = HomExpr::single(random_row_standard(rng, c, d.parts()), 3);
        HomExpr left = compose(compose(t, s), q), right = compose(t, compose(s, q));
        CHECK(left == right);
        CHECK(semistandardize(left) == semistandardize(right));
    }
}

TEST_CASE("magic and restrictisation tableaux")
{
    Partition lam{8, 6, 2, 1, 1};
    CHECK(nice_values(lam, 3) == std::vector<int>{3});
    CHECK(strip_for_nice(lam, 3, 3) == Partition{6, 4, 1, 1});
    CHECK(magic_tableau(Partition{6, 4, 1, 1}, 3) == tab("112222/1133/1/4"));
    CHECK(magic_tableau(lam, 3) == tab("11223333/112244/11/2/5"));
    CHECK(re_tableau(lam, 3) == tab("11111123/222234/33/4/5"));
    CHECK(re_tableau(Partition{6, 4, 1, 1}, 3) == tab("111112/2223/3/4"));
    CHECK(insert_for_nice(re_tableau(Partition{6, 4, 1, 1}, 3), lam, 3, 3) == tab("11222223/113334/11/4/5"));
    CHECK(magic_tableau(Partition{}, 3) == Tableau());

    HomExpr hom = restrictisation_hom(lam, 3);
    CHECK(support(hom) == std::set<std::string>{"11111123/222233/34/4/5", "11111122/222334/33/4/5",
                                                 "11111123/222234/33/4/5"});
    CHECK(hom.coeff(re_tableau(lam, 3)) == 1);

    for (int p : {3, 5})
        for (const auto& l : testsupport::partitions_up_to(12)) {
            Partition rest = restrictise(l, p);
            Tableau magic = magic_tableau(l, p);
            Tableau re = re_tableau(l, p);
            CHECK(magic.shape() == l);
            CHECK(re.shape() == l);
            CHECK(magic.type() == rest.parts());
            CHECK(re.type() == rest.parts());
            CHECK(re.semistandard());
            int full = 0;
            while (true) {
                bool all_in = true;
                for (int r = 1; full + 1 - (p - 1) * (r - 1) >= 1; ++r)
                    all_in &= l.contains({r, full + 1 - (p - 1) * (r - 1)});
                if (!all_in)
                    break;
                ++full;
            }
            CHECK(full == (rest.empty() ? 0 : rest[1]));
            if (!l.empty()) {
                CHECK(!nice_values(l, p).empty());
                for (int m : nice_values(l, p)) {
                    Partition st = strip_for_nice(l, p, m);
                    auto expect = rest.parts();
                    expect.erase(expect.begin());
                    CHECK(restrictise(st, p).parts() == expect);
                }
            }
            if (is_restricted(l, p)) {
                std::vector<std::vector<int>> identity;
                for (int r = 1; r <= l.length(); ++r)
                    identity.emplace_back(l[r], r);
                CHECK(re == Tableau(identity));
            }
            // ramp monotonicity of the destination rows
            for (const Node& x : l.nodes())
                for (const Node& y : l.nodes()) {
                    if ((p - 1) * x.row + x.col > (p - 1) * y.row + y.col)
                        continue;
                    if (x.row == y.row)
                        CHECK(re.at(x) <= re.at(y));
                    else if (x.row < y.row)
                        CHECK(re.at(x) < re.at(y));
                }
        }
}

TEST_CASE("restrictisation homomorphism contract")
{
    for (const auto& l : testsupport::partitions_up_to(9)) {
        HomExpr hom = restrictisation_hom(l, 3);
        Tableau re = re_tableau(l, 3);
        int c = hom.coeff(re);
        CHECK((c == 1 || c == 2));
        for (const auto& [s, k] : hom.terms())
            CHECK(dominance(s, re).dominates);
        if (is_restricted(l, 3))
            CHECK(hom.terms().size() == 1);
    }
    for (const auto& l : testsupport::partitions_up_to(6)) {
        HomExpr magic = HomExpr::single(magic_tableau(l, 3), 3);
        CHECK(testsupport::evaluate(magic) == testsupport::evaluate(restrictisation_hom(l, 3)));
        CHECK(!testsupport::evaluate(magic).empty());
    }
}

TEST_CASE("relations lift through the nice-value insertion")
{
    std::mt19937 rng(41);
    int checked = 0;
    for (int k = 0; k < 400 && checked < 120; ++k) {
        Partition l = testsupport::random_partition(rng, 3 + static_cast<int>(rng() % 10));
        auto nice = nice_values(l, 3);
        if (nice.empty())
            continue;
        int m = nice[rng() % nice.size()];
        Partition st = strip_for_nice(l, 3, m);
        if (st.empty())
            continue;
        Tableau u = random_row_standard(rng, st, restrictise(st, 3).parts());
        HomExpr normal = semistandardize(HomExpr::single(u, 3));
        HomExpr lifted(3);
        for (const auto& [v, c] : normal.terms())
            lifted.add(insert_for_nice(v, l, 3, m), c);
        CHECK(semistandardize(HomExpr::single(insert_for_nice(u, l, 3, m), 3)) == semistandardize(lifted));
        ++checked;
    }
    CHECK(checked >= 60);
}

TEST_CASE("Carter-Payne tableaux")
{
    Partition lam{4, 4, 2, 2, 2, 1, 1};
    Node from{2, 4}, to{6, 2};
    CHECK(move_node(lam, from, to) == Partition{4, 3, 2, 2, 2, 2, 1});
    CHECK(carter_payne_tableau(lam, from, to, 3) == tab("1111/2223/34/45/56/6/7"));
    CHECK(carter_payne_tableau(lam, from, to, 4) == tab("1111/2224/33/45/56/6/7"));
    CHECK(carter_payne_tableau(lam, from, to, 5) == tab("1111/2225/33/44/56/6/7"));
    CHECK(carter_payne_tableau(lam, from, to, 6) == tab("1111/2226/33/44/55/6/7"));
    HomExpr cp = carter_payne_hom(lam, 3, from, to);
    CHECK(cp.terms().size() == 4);
    CHECK(cp.coeff(tab("1111/2223/34/45/56/6/7")) == 2);
    CHECK(cp.coeff(tab("1111/2224/33/45/56/6/7")) == 1);

    // adjacent rows: a single tableau with sign (-1)^(a+1)
    HomExpr adj = carter_payne_hom(Partition{4, 1}, 3, {1, 4}, {2, 2});
    CHECK(adj == HomExpr::single(tab("1112/2"), 3, 1));
    CHECK_THROWS_AS(carter_payne_hom(Partition{4, 1}, 5, {1, 4}, {2, 2}), Error);
    CHECK_THROWS_AS(carter_payne_hom(Partition{3, 2}, 3, {1, 3}, {3, 1}), Error);
    CHECK_THROWS_AS(carter_payne_hom(Partition{3, 1}, 3, {2, 1}, {1, 4}), Error);
}

TEST_CASE("composed homomorphism certificate")
{
    CHECK_THROWS_AS(composed_nonvanishing(Partition{6}, 3, {1, 6}, {2, 1}), Error);

    // restricted target with adjacent rows: the composition is the Carter-Payne map itself
    Partition lam{4, 1};
    auto res = composed_nonvanishing(lam, 3, {1, 4}, {2, 2});
    CHECK(res.expr == carter_payne_hom(lam, 3, {1, 4}, {2, 2}));
    CHECK(res.v_coefficient == 1);

    int instances = 0;
    for (int p : {3, 5})
        for (const auto& l : testsupport::partitions_up_to(p == 3 ? 11 : 9)) {
            BoundaryNodes b = boundary_nodes(l, Characteristic(p));
            for (const auto& rem : b.removable)
                for (const auto& add : b.addable) {
                    auto [a, bb] = rem.node;
                    auto [c, d] = add.node;
                    if (c <= a || rem.residue != add.residue || (p - 1) * c + d < (p - 1) * a + bb)
                        continue;
                    bool clean = true;
                    for (int r = a + 1; r < c; ++r)
                        clean &= l[r] == d;
                    if (!clean)
                        continue;
                    auto out = composed_nonvanishing(l, p, rem.node, add.node);
                    CHECK(out.v.semistandard());
                    CHECK((out.v_coefficient == 1 || out.v_coefficient == p - 1));
                    ++instances;
                }
        }
    CHECK(instances > 20);
}
