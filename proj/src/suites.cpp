#include <random>
#include <set>

#include "spechtkit/abacus.hpp"
#include "spechtkit/classify.hpp"
#include "spechtkit/rouquier.hpp"
#include "spechtkit/specht_hom.hpp"
#include "verify_internal.hpp"

namespace spechtkit::verify::detail {

namespace {

Partition ones(std::vector<int> head, int count)
{
    head.insert(head.end(), count, 1);
    return Partition(head);
}

std::set<std::string> support(const HomExpr& e)
{
    std::set<std::string> out;
    for (const auto& [t, c] : e.terms())
        out.insert(to_string(t));
    return out;
}

bool is_unit(int c, int p)
{
    return c == 1 || c == p - 1;
}

// Every row-standard tableau of the given shape and content.
std::vector<Tableau> row_standard_tableaux(const Partition& shape, const std::vector<int>& type)
{
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(shape.length());
    std::vector<int> left = type;
    std::function<void(int, int, int)> rec = [&](int r, int filled, int min_entry) {
        if (r == shape.length()) {
            out.emplace_back(rows);
            return;
        }
        if (filled == shape[r + 1]) {
            rec(r + 1, 0, 1);
            return;
        }
        for (int v = min_entry; v <= static_cast<int>(left.size()); ++v) {
            if (left[v - 1] == 0)
                continue;
            --left[v - 1];
            rows[r].push_back(v);
            rec(r, filled + 1, v);
            rows[r].pop_back();
            ++left[v - 1];
        }
    };
    rec(0, 0, 1);
    return out;
}

Partition random_partition(std::mt19937& rng, int n)
{
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
        int k = std::uniform_int_distribution<int>(1, left)(rng);
        parts.push_back(k);
        left -= k;
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
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

// Cores built from runner charges with |charge| <= bound.
std::vector<Partition> cores_by_charge(int p, int bound)
{
    std::vector<Partition> out;
    std::vector<int> charge(p, -bound);
    for (;;) {
        int sum = 0;
        for (int c : charge)
            sum += c;
        if (sum == 0) {
            Abacus a(p);
            for (int r = 0; r < p; ++r) {
                for (int k = 0; k < charge[r]; ++k)
                    a.set(r + k * p, true);
                for (int k = 1; k <= -charge[r]; ++k)
                    a.set(r - k * p, false);
            }
            out.push_back(a.read());
        }
        int i = 0;
        while (i < p && ++charge[i] > bound)
            charge[i++] = -bound;
        if (i == p)
            break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<Partition>> multipartitions(int slots, int w)
{
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur;
    std::function<void(int, int)> rec = [&](int slot, int left) {
        if (slot == slots) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k)
            for (const auto& part : partitions_of(k)) {
                cur.push_back(part);
                rec(slot + 1, left - k);
                cur.pop_back();
            }
    };
    rec(0, w);
    return out;
}

// Block members of the given core and weight, by runner quotient.
std::vector<Partition> block(const Partition& core, int p, int w)
{
    std::vector<Partition> out;
    for (auto& quo : multipartitions(p, w))
        out.push_back(from_core_and_quotient(core, p, quo));
    return out;
}

// ---- individual suites ----

Tally renorl_oracle(const SweepSpec& spec)
{
    int p = spec.p;
    std::vector<Word> words;
    for (int len = 1; len <= 3; ++len) {
        Word w(len, 0);
        for (;;) {
            words.push_back(w);
            int k = 0;
            while (k < len && ++w[k] == p)
                w[k++] = 0;
            if (k == len)
                break;
        }
    }
    return sweep_partitions(enumerate(spec), spec.jobs, [&](const Partition& l, Tally& t) {
        std::string key = to_string(l);
        for (const Word& w : words) {
            bool a = lightning(l, p, w), b = lightning_direct(l, p, w);
            t.check(a == b, key, "word " + word_string(w) + ": criterion " + std::to_string(a) + ", direct " +
                                     std::to_string(b));
        }
        Partition rest = restrictise(l, p);
        for (int i = 0; i < p; ++i) {
            int nor = nor_count(rest, p, i), rem = rem_count(l, p, i);
            t.check(nor <= rem, key, "normal count exceeds removable count at i=" + std::to_string(i));
            t.check((nor < rem) == later_addable_criterion(l, p, i), key,
                    "strict inequality disagrees with the ramp criterion at i=" + std::to_string(i));
            if (nor == rem)
                t.check(remove_normal(rest, p, {i}).result == restrictise(remove_all(l, p, {i}).result, p), key,
                        "removal does not commute with restrictisation at i=" + std::to_string(i));
            if (abacus_lightning_witness(l, p, i))
                t.check(later_addable_criterion(l, p, i), key, "abacus witness without the ramp criterion");
        }
    });
}

Tally jm_crosscheck(const SweepSpec& spec)
{
    int p = spec.p;
    return sweep_partitions(enumerate(spec), spec.jobs, [&](const Partition& l, Tally& t) {
        bool a = is_jm(l, p), b = is_jm_abacus(l, p);
        t.check(a == b, to_string(l), "diagram " + std::to_string(a) + ", abacus " + std::to_string(b));
        t.check(a == is_jm(conjugate(l), p), to_string(l), "not preserved by conjugation");
    });
}

Tally r_crosscheck(const SweepSpec& spec)
{
    int p = spec.p, h = (p - 1) / 2;
    SweepSpec sc = spec;
    sc.filter = Filter::SelfConjugate;
    return sweep_partitions(enumerate(sc), spec.jobs, [&](const Partition& l, Tally& t) {
        std::string key = to_string(l);
        auto a = r_info(l, p);
        auto b = r_info_abacus(l, p);
        t.check(a == b, key, "diagram and abacus R-partition data differ");
        if (a) {
            t.check(a->type_one || a->type_two, key, "R-partition of neither type");
            if (a->type_one) {
                t.check(a->distinguished == Node{1, 1}, key, "type I not distinguished at (1,1)");
                Partition xi = strip_rim_hook(l, {1, 1});
                CoreWeight cw = p_core_weight(xi, p);
                t.check(is_self_conjugate(xi) && cw.weight == 0 && (xi.empty() || xi[1] <= h), key,
                        "type I remainder " + to_string(xi) + " is not a small self-conjugate core");
            }
            if (a->type_two) {
                t.check(hook_length(l, a->distinguished) == p, key, "type II hook length is not p");
                Partition rest = strip_rim_hook(l, a->distinguished);
                t.check(is_self_conjugate(rest) && is_jm(rest, p), key,
                        "type II remainder " + to_string(rest) + " is not a self-conjugate JM-partition");
            }
        }
        if (p_core_weight(l, p).weight == 1)
            t.check(a && a->type_two, key, "weight one but not type II");
        if (in_two_factor_set(l, p) && is_jm(l, p))
            t.count("two_factor_and_jm");
    });
}

Tally mullineux_suite(const SweepSpec& spec)
{
    int p = spec.p;
    SweepSpec rs = spec;
    rs.filter = Filter::PRestricted;
    return sweep_partitions(enumerate(rs), spec.jobs, [&](const Partition& l, Tally& t) {
        std::string key = to_string(l);
        Partition m = mullineux(l, p);
        t.check(m.size() == l.size(), key, "size changed");
        t.check(is_restricted(m, p), key, "image " + to_string(m) + " not restricted");
        t.check(mullineux(m, p) == l, key, "not an involution");
        for (int i = 0; i < p; ++i)
            t.check(nor_count(l, p, i) == nor_count(m, p, mod(-i, p)), key,
                    "normal counts do not intertwine at i=" + std::to_string(i));
        if (!l.empty())
            t.check(mod(l.length() + m.length(), p) != 1 % p, key, "first column lengths sum to 1 mod p");
        // twisting by sign moves the block to the conjugate core
        auto cw = p_core_weight(l, p);
        t.check(p_core_weight(m, p).core == conjugate(cw.core), key, "image lies in the wrong block");
        if (cw.weight == 0)
            t.check(m == conjugate(l), key, "core not sent to its conjugate");
    });
}

Tally lr_rouquier(const SweepSpec& spec)
{
    int p = spec.p;
    Tally total;
    const int lr_bound = std::min(spec.max_n, 8);

    std::vector<Partition> gammas;
    for (int n = 0; n <= lr_bound; ++n)
        for (auto& g : partitions_of(n))
            gammas.push_back(g);
    total.merge(sweep_partitions(gammas, spec.jobs, [&](const Partition& g, Tally& t) {
        std::string key = to_string(g);
        for (int k = 0; k <= g.size(); ++k)
            for (const auto& a : partitions_of(k))
                for (const auto& b : partitions_of(g.size() - k))
                    t.check(lr_coefficient(g, a, b) == lr_coefficient(g, b, a), key,
                            "asymmetric at " + to_string(a) + ", " + to_string(b));
        auto pairs = lr_support_pairs(g);
        if (g.size() > 1) {
            t.check(pairs.size() >= 3, key, "fewer than three support pairs");
            auto removable = boundary_nodes(g, Characteristic::infinite()).removable;
            Partition smaller = remove_node(g, removable.front().node);
            t.check(lr_coefficient(g, g, Partition{}) > 0 && lr_coefficient(g, Partition{}, g) > 0 &&
                        lr_coefficient(g, smaller, Partition{1}) > 0,
                    key, "named support pairs missing");
        }
    }));

    // at least two products for non-empty factors
    std::vector<std::pair<Partition, Partition>> factor_pairs;
    for (int n = 2; n <= lr_bound; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& a : partitions_of(k))
                for (const auto& b : partitions_of(n - k))
                    factor_pairs.emplace_back(a, b);
    total.merge(sweep<std::pair<Partition, Partition>>(
        factor_pairs, spec.jobs,
        [](const auto& ab) { return to_string(ab.first) + "*" + to_string(ab.second); },
        [&](const auto& ab, Tally& t) {
            const auto& [a, b] = ab;
            std::string key = to_string(a) + "*" + to_string(b);
            int n = a.size() + b.size();
            int support = 0;
            for (const auto& g : partitions_of(n))
                support += lr_coefficient(g, a, b) > 0;
            t.check(support >= 2, key, "fewer than two products");
            std::vector<int> sum, merged;
            for (int i = 1; i <= std::max(a.length(), b.length()); ++i) {
                sum.push_back(a[i] + b[i]);
                merged.push_back(a[i]);
                merged.push_back(b[i]);
            }
            std::sort(merged.rbegin(), merged.rend());
            Partition gamma = make_partition(sum), delta = make_partition(merged);
            t.check(gamma != delta && lr_coefficient(gamma, a, b) > 0 && lr_coefficient(delta, a, b) > 0, key,
                    "row-sum and merged products not both present");
        }));

    // d against tuple enumeration, and the diagonal, on small blocks
    if (p == 3) {
        std::vector<Partition> small_cores;
        for (const auto& c : cores_by_charge(3, 3))
            if (c.size() <= 6)
                small_cores.push_back(c);
        for (int w = 1; w <= 2; ++w)
            for (const Partition& core : small_cores) {
                std::vector<Partition> members = block(core, 3, w);
                std::vector<std::vector<Partition>> quotients;
                for (const auto& m : members)
                    quotients.push_back(ordered_quotient(m, 3).parts);
                for (std::size_t x = 0; x < members.size(); ++x)
                    for (std::size_t y = 0; y < members.size(); ++y) {
                        if (!quotients[y].back().empty())
                            continue;
                        std::string key = to_string(members[x]) + " -> " + to_string(members[y]);
                        long long d = d_coeff_quotients(quotients[x], quotients[y]);
                        total.check(d == d_coeff_brute(quotients[x], quotients[y], w), key,
                                    "d formula disagrees with tuple enumeration");
                        if (x == y)
                            total.check(d == 1, key, "diagonal d is not 1");
                    }
            }
        // Rouquier blocks, through the partition-level entry point
        for (int w = 1; w <= 2; ++w)
            for (const Partition& core : cores_by_charge(3, 3)) {
                Partition r = block(core, 3, w).front();
                if (!is_rouquier(r, 3))
                    continue;
                total.count("rouquier_blocks");
                for (const Partition& mu : restricted_block_members(r, 3))
                    total.check(d_coeff(mu, mu, 3) == 1, to_string(mu), "diagonal d is not 1");
            }
    }

    // composition length two forces the two-factor set
    WeylOracle oracle = WeylOracle::from_environment();
    SweepSpec sc = spec;
    sc.filter = Filter::SelfConjugate;
    total.merge(sweep_partitions(enumerate(sc), spec.jobs, [&](const Partition& l, Tally& t) {
        if (!is_quotient_separated(l, p))
            return;
        t.count("quotient_separated");
        auto len = qs_length(l, p, oracle);
        if (!len)
            return;
        t.count("length_known");
        if (*len != 2)
            return;
        t.count("length_two");
        t.check(in_two_factor_set(l, p), to_string(l), "length two but outside the two-factor set");
        if (p == 3)
            t.check(p_core_weight(l, p).weight == 1, to_string(l), "length two at p = 3 with weight above one");
    }));
    return total;
}

std::vector<std::vector<int>> family_rows(int p, int max_size)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int below) {
        for (int l = below - 1; l >= 0; --l) {
            cur.push_back(l);
            if (middle_runner_family(p, cur).size() <= max_size) {
                out.push_back(cur);
                rec(l);
            }
            cur.pop_back();
        }
    };
    for (int top = 1; top * p <= max_size; ++top) {
        cur = {top};
        rec(top);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Tally homomorphisms(const SweepSpec& spec)
{
    int p = spec.p;
    Tally total = sweep_partitions(enumerate(spec), spec.jobs, [&](const Partition& l, Tally& t) {
        std::string key = to_string(l);
        HomExpr hom = restrictisation_hom(l, p);
        Tableau re = re_tableau(l, p);
        t.check(is_unit(hom.coeff(re), p), key, "coefficient at Re is " + std::to_string(hom.coeff(re)));
        for (const auto& [s, c] : hom.terms()) {
            t.check(s.semistandard(), key, to_string(s) + " not semistandard");
            t.check(dominance(s, re).dominates, key, to_string(s) + " does not dominate Re");
        }
    });

    std::mt19937 rng(20240611);
    for (int k = 0; k < 500; ++k) {
        int n = 2 + static_cast<int>(rng() % 9);
        Partition shape = random_partition(rng, n), type = random_partition(rng, n);
        HomExpr e(p);
        int terms = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < terms; ++i)
            e.add(random_row_standard(rng, shape, type.parts()), 1 + rng() % (p - 1));
        std::string key = "random expression " + std::to_string(k);
        HomExpr a = semistandardize(e, Pivot::TopLeft), b = semistandardize(e, Pivot::BottomRight);
        total.check(a == b, key, to_string(a) + " vs " + to_string(b));
        for (const auto& [s, c] : a.terms()) {
            bool dominated = false;
            for (const auto& [u, d] : e.terms())
                dominated |= dominance(s, u).dominates;
            total.check(dominated && s.semistandard(), key, to_string(s) + " dominates no input");
        }
    }

    int hits = 0;
    for (int k = 0; k < 5000 && hits < 300; ++k) {
        int n = 2 + static_cast<int>(rng() % 9);
        Partition shape = random_partition(rng, n), type = random_partition(rng, n);
        Tableau a = random_row_standard(rng, shape, type.parts());
        bool violates = false;
        for (int hr = 1; hr <= shape.length(); ++hr)
            for (int j = hr + 1; j <= shape.length(); ++j)
                for (auto [v, mult] : a.row_multiset(hr))
                    violates |= mult + multiplicity(a.row_multiset(j), v) > shape[hr];
        if (!violates)
            continue;
        ++hits;
        total.check(semistandardize(HomExpr::single(a, p)).is_zero(), to_string(a), "crowded tableau survives");
    }
    total.count("crowded_tableaux", hits);

    for (int k = 0; k < 100; ++k) {
        int n = 1 + static_cast<int>(rng() % 8);
        Partition a = random_partition(rng, n), b = random_partition(rng, n), c = random_partition(rng, n),
                  d = random_partition(rng, n);
        HomExpr q = HomExpr::single(random_row_standard(rng, a, b.parts()), p);
        HomExpr s = HomExpr::single(random_row_standard(rng, b, c.parts()), p);
        HomExpr r = HomExpr::single(random_row_standard(rng, c, d.parts()), p);
        total.check(semistandardize(compose(compose(r, s), q)) == semistandardize(compose(r, compose(s, q))),
                    "random chain " + std::to_string(k), "composition not associative");
    }

    if (p % 2 == 1) {
        std::vector<Partition> family;
        for (const auto& rows : family_rows(p, std::max(spec.max_n, 30)))
            family.push_back(middle_runner_family(p, rows));
        total.count("family_instances", static_cast<long long>(family.size()));
        total.merge(sweep_partitions(family, spec.jobs, [&](const Partition& l, Tally& t) {
            t.check(is_self_conjugate(l), to_string(l), "family member not self-conjugate");
            SpotCheck s = middle_runner_certificate(l, p);
            t.check(s.verdict == Verdict::Pass, to_string(l), s.detail);
        }));
    }
    if (p == 3) {
        bool rejected = false;
        try {
            composed_nonvanishing(Partition{6}, 3, {1, 6}, {2, 1});
        } catch (const Error&) {
            rejected = true;
        }
        total.check(rejected, "(6)", "moving (1,6) to (2,1) should be rejected");
    }
    return total;
}

Tally invariants(const SweepSpec& spec)
{
    int p = spec.p;
    std::vector<Partition> items = enumerate(spec);
    Tally total = sweep_partitions(items, spec.jobs, [&](const Partition& l, Tally& t) {
        std::string key = to_string(l);
        int n = l.size();
        t.check(conjugate(conjugate(l)) == l, key, "conjugate is not an involution");
        Abacus a = Abacus::of(l, p);
        t.check(a.read() == l, key, "abacus round trip");
        CoreWeight cw = p_core_weight(l, p);
        t.check(n == cw.core.size() + p * cw.weight, key, "size is not core plus p times weight");
        t.check(core_of(a).read() == cw.core, key, "abacus core differs from stripped core");
        t.check(abacus_weight(a) == cw.weight, key, "abacus weight differs from stripped weight");
        bool sc = is_self_conjugate(l);
        bool symmetric = true;
        for (int pos = a.lowest() - 2 * p; pos <= a.highest() + 2 * p; ++pos)
            symmetric &= a.occupied(pos) != a.occupied(-pos - 1);
        t.check(sc == symmetric, key, "self-conjugacy disagrees with bead symmetry");
        if (sc)
            t.check(is_self_conjugate(cw.core), key, "core of a self-conjugate partition is not self-conjugate");
        for (int i = 0; i < p; ++i) {
            Abacus b = a;
            add_all(b, i);
            t.check(b.read() == add_all(l, p, i), key, "add_all on beads differs at i=" + std::to_string(i));
        }

        if (n <= 20) {
            Partition r = restrictise(l, p);
            t.check(is_restricted(r, p), key, "restrictisation not restricted");
            std::map<int, int> ra, rb;
            for (const Node& x : l.nodes())
                ++ra[ramp_of(x, p)];
            for (const Node& x : r.nodes())
                ++rb[ramp_of(x, p)];
            t.check(ra == rb, key, "restrictisation changes ramp counts");
        }
        if (n <= 18) {
            std::mt19937 rng(static_cast<unsigned>(n * 7919 + l.length()));
            for (int trial = 0; trial < 3; ++trial) {
                Partition cur = l;
                int removed = 0;
                for (;;) {
                    std::vector<Node> hooks;
                    for (const Node& x : cur.nodes())
                        if (hook_length(cur, x) == p)
                            hooks.push_back(x);
                    if (hooks.empty())
                        break;
                    cur = strip_rim_hook(cur, hooks[rng() % hooks.size()]);
                    ++removed;
                }
                t.check(cur == cw.core && removed == cw.weight, key, "core depends on the removal order");
            }
        }
        if (p >= 3 && n <= 20) {
            auto tot = [&](int k) { return ramp_stats(l, p, k).total; };
            for (int k = 0; k <= n * p + p; ++k) {
                int lhs = ramp_stats(l, p, k).addable - ramp_stats(l, p, k - p).removable;
                int rhs = (k == 0) - tot(k) + tot(k - 1) + tot(k - p + 1) - tot(k - p);
                t.check(lhs == rhs, key, "ramp identity fails at l=" + std::to_string(k));
            }
        }
        if (p >= 3 && n <= 18) {
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j) {
                    if (j == mod(i - 1, p) || j == mod(i + 1, p))
                        continue;
                    t.check(remove_all(l, p, {i, j}).result == remove_all(l, p, {j, i}).result, key,
                            "removals do not commute for " + std::to_string(i) + "," + std::to_string(j));
                }
            if (sc && p % 2 == 1)
                for (int i = 0; i <= (p - 1) / 2; ++i)
                    t.check(is_self_conjugate(remove_all_pm(l, p, i)), key, "removing +-i breaks self-conjugacy");
        }
        if (n <= 18 && is_quotient_separated(a)) {
            for (int i = 0; i < p; ++i)
                t.check(is_quotient_separated(add_all(l, p, i), p), key,
                        "add_all breaks quotient separation at i=" + std::to_string(i));
            OrderedQuotient start = ordered_quotient(a);
            Partition cur = l;
            std::vector<int> pi = start.pi;
            for (const auto& step : rouquier_walk_trace(l, p)) {
                OrderedQuotient before = ordered_quotient(cur, p);
                OrderedQuotient after = ordered_quotient(step.result, p);
                int i = step.residue, prev = mod(i - 1, p);
                t.check(before.q[prev] > before.q[i], key, "walk step on a non-descent");
                for (int& x : pi)
                    x = x == i ? prev : (x == prev ? i : x);
                t.check(after.pi == pi, key, "walk permutation is not a transposition step");
                t.check(after.parts == start.parts, key, "walk changes the ordered quotient");
                cur = step.result;
            }
            t.check(is_rouquier(cur, p), key, "walk does not end at a Rouquier partition");
        }
    });

    // Rouquier blocks: every member of weight at most 3 is quotient separated
    if (p == 3) {
        for (const Partition& core : cores_by_charge(3, 5))
            for (int w = 1; w <= 3; ++w) {
                std::vector<Partition> members = block(core, 3, w);
                if (!is_rouquier(members.front(), 3))
                    continue;
                total.count("rouquier_blocks");
                for (const Partition& m : members)
                    total.check(is_quotient_separated(m, 3), to_string(m), "Rouquier block member not separated");
            }
    }
    return total;
}

SuiteFn wrap(std::function<Tally(const SweepSpec&)> body)
{
    return [body](const SweepSpec& spec) {
        require_prime(spec.p);
        return to_report(spec, body(spec));
    };
}

SuiteFn odd(std::function<Tally(const SweepSpec&)> body)
{
    return wrap([body](const SweepSpec& spec) {
        if (spec.p == 2)
            throw Error(ErrorCode::InvalidPrime, "suite needs an odd prime");
        return body(spec);
    });
}

} // namespace

void add_builtin_suites(std::map<std::string, SuiteFn>& registry)
{
    registry["paper_examples"] = [](const SweepSpec& spec) { return to_report(spec, paper_examples()); };
    registry["renorl_oracle"] = odd(renorl_oracle);
    registry["jm_crosscheck"] = wrap(jm_crosscheck);
    registry["r_crosscheck"] = odd(r_crosscheck);
    registry["mullineux"] = wrap(mullineux_suite);
    registry["lr_rouquier"] = wrap(lr_rouquier);
    registry["homomorphisms"] = wrap(homomorphisms);
    registry["case_analysis"] = wrap(section7_suite);
    registry["invariants"] = wrap(invariants);
}

// ---- worked examples ----

Tally paper_examples()
{
    Tally t;
    auto eq = [&t](const char* name, auto got, auto want) { t.check(got == want, name, "mismatch"); };

    eq("restrictise (8,6,2,1,1)", restrictise(Partition{8, 6, 2, 1, 1}, 3), Partition{6, 5, 4, 2, 1});

    Partition l4{4, 3, 1, 1};
    eq("remove all 0-nodes of (4,3,1,1)", remove_all(l4, 3, {0}).result, Partition{3, 3, 1});
    eq("removable 0-node count of (4,3,1,1)", rem_count(l4, 3, 0), 2);
    eq("remove all 1-nodes of (4,3,1,1)", remove_all(l4, 3, {1}).result, Partition{4, 2, 1, 1});
    eq("remove all 2-nodes of (4,3,1,1)", remove_all(l4, 3, {2}).result, l4);

    Partition sig{6, 5, 3, 2, 1, 1, 1};
    eq("0-signature of (6,5,3,2,1,1,1)", signature(sig, 3, 0).str(), std::string("+--+-"));
    eq("normal 0-nodes of (6,5,3,2,1,1,1)", signature(sig, 3, 0).normal_nodes(),
       std::vector<Node>{{2, 5}, {7, 1}});
    eq("normal 0-removal of (6,5,3,2,1,1,1)", remove_normal(sig, 3, {0}).result, Partition{6, 4, 3, 2, 1, 1});

    Partition big = ones({14, 5, 2, 2, 2}, 5);
    Partition big_rest = restrictise(big, 3);
    eq("restrictise (14,5,2,2,2,1^5)", big_rest, Partition{6, 5, 4, 4, 3, 3, 2, 1, 1, 1});
    int table[7][7] = {{0, 1, 0, 0, 1, 0, 0},  {3, 2, 0, 0, 2, 0, 0},  {6, 3, 1, 1, 3, 1, 1},
                       {9, 2, 0, 1, 2, 0, 1},  {12, 2, 0, 0, 2, 0, 1}, {15, 0, 0, 0, 0, 1, 0},
                       {18, 1, 0, 1, 1, 0, 1}};
    for (auto& row : table) {
        RampStats a = ramp_stats(big, 3, row[0]), b = ramp_stats(big_rest, 3, row[0]);
        std::vector<int> got{a.total, a.addable, a.removable, b.total, b.addable, b.removable};
        std::vector<int> want(row + 1, row + 7);
        t.check(got == want, "ramp table row " + std::to_string(row[0]), "mismatch");
    }
    std::vector<int> normal_ramps;
    for (const Node& n : signature(big_rest, 3, 0).normal_nodes())
        normal_ramps.push_back(ramp_of(n, 3));
    eq("normal 0-node ramps of the restrictisation", normal_ramps, std::vector<int>{6, 9, 18});

    Partition ab = ones({12, 10, 9, 7, 5, 4, 3, 3, 2}, 7);
    OrderedQuotient oq = ordered_quotient(ab, 5);
    eq("abacus example core", abacus_core(ab, 5), Partition{9, 8, 6, 5, 5, 4, 3, 3, 2, 1, 1});
    eq("abacus example quotient", runner_quotients(Abacus::of(ab, 5)),
       std::vector<Partition>{{}, {1, 1}, {}, {}, {1}});
    eq("abacus example weight", oq.weight, 3);
    eq("abacus example q", oq.q, std::vector<int>{5, 11, -8, 13, -11});
    eq("abacus example pi", cycle_notation(oq.pi), std::string("(0,4,3,1,2)"));
    eq("abacus example ordered quotient", oq.parts, std::vector<Partition>{{1}, {}, {}, {1, 1}, {}});
    eq("abacus example separated", is_quotient_separated(ab, 5), true);
    eq("abacus example Rouquier", is_rouquier(ab, 5), false);
    eq("abacus example add_all", add_all(ab, 5, 2), ones({13, 10, 10, 7, 5, 4, 4, 3, 2, 2}, 6));

    Partition jm{19, 11, 2, 2, 2, 1, 1};
    eq("JM verdict (19,11,2,2,2,1,1)", is_jm(jm, 3), true);
    eq("JM abacus verdict (19,11,2,2,2,1,1)", is_jm_abacus(jm, 3), true);
    std::vector<std::string> diagram;
    for (const auto& row : p_power_diagram(jm, 3)) {
        std::string s;
        for (int v : row)
            s += char('0' + v);
        diagram.push_back(s);
    }
    eq("3-power diagram of (19,11,2,2,2,1,1)", diagram,
       std::vector<std::string>{"0020010010000100100", "00200100100", "11", "00", "00", "0", "0"});

    Partition r1 = ones({13, 3, 3}, 10);
    Partition r2 = ones({14, 10, 5, 4, 3, 2, 2, 2, 2, 2}, 4);
    auto i1 = r_info(r1, 5), i2 = r_info(r2, 5);
    t.check(i1 && i1->type_one && i1->distinguished == Node{1, 1} && r_info_abacus(r1, 5) == i1,
            "type I example", "mismatch");
    t.check(i2 && i2->type_two && !i2->type_one && i2->distinguished == Node{3, 3} && r_info_abacus(r2, 5) == i2,
            "type II example", "mismatch");
    eq("type I example is not JM", is_jm(r1, 5), false);

    auto all = row_standard_tableaux(Partition{3, 2}, {2, 2, 1});
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
    eq("dominance Hasse diagram", edges,
       std::set<std::pair<std::string, std::string>>{{"223/11", "123/12"},
                                                     {"123/12", "113/22"},
                                                     {"123/12", "122/13"},
                                                     {"113/22", "112/23"},
                                                     {"122/13", "112/23"}});
    for (int p : {3, 5, 7})
        eq("122/13 is minus 112/23", semistandardize(HomExpr::single(Tableau::parse("122/13"), p)),
           HomExpr::single(Tableau::parse("112/23"), p, p - 1));

    Partition lam{8, 6, 2, 1, 1};
    eq("magic tableau of (8,6,2,1,1)", to_string(magic_tableau(lam, 3)), std::string("11223333/112244/11/2/5"));
    eq("stripped partition", strip_for_nice(lam, 3, nice_values(lam, 3).front()), Partition{6, 4, 1, 1});
    eq("magic tableau of (6,4,1,1)", to_string(magic_tableau(Partition{6, 4, 1, 1}, 3)),
       std::string("112222/1133/1/4"));
    eq("Re of (8,6,2,1,1)", to_string(re_tableau(lam, 3)), std::string("11111123/222234/33/4/5"));
    const std::set<std::string> four{"11111122/222333/34/4/5", "11111123/222233/34/4/5",
                                     "11111122/222334/33/4/5", "11111123/222234/33/4/5"};
    Tableau start = insert_for_nice(re_tableau(Partition{6, 4, 1, 1}, 3), lam, 3, 3);
    HomExpr big_prime = semistandardize(HomExpr::single(start, 101));
    HomExpr semi = restrictisation_hom(lam, 3);
    eq("four-term expansion", support(big_prime), four);
    eq("expansion coefficient at Re", semi.coeff(re_tableau(lam, 3)), 1);
    std::set<std::string> three = four;
    three.erase("11111122/222333/34/4/5");
    eq("expansion support mod 3", support(semi), three);

    Partition cp{4, 4, 2, 2, 2, 1, 1};
    const char* quad[] = {"1111/2223/34/45/56/6/7", "1111/2224/33/45/56/6/7", "1111/2225/33/44/56/6/7",
                          "1111/2226/33/44/55/6/7"};
    for (int r = 3; r <= 6; ++r)
        eq("Carter-Payne tableau", to_string(carter_payne_tableau(cp, {2, 4}, {6, 2}, r)), std::string(quad[r - 3]));

    eq("(4,4,4,3) lightning 121", lightning(Partition{4, 4, 4, 3}, 3, {1, 2, 1}), true);
    eq("(4,4,4,3) lightning 212", lightning(Partition{4, 4, 4, 3}, 3, {2, 1, 2}), true);
    eq("(3,3,3) two factors", in_two_factor_set(Partition{3, 3, 3}, 3), true);
    return t;
}

} // namespace spechtkit::verify::detail
