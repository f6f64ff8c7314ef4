#include <algorithm>
#include <functional>

#include "spechtkit/abacus.hpp"
#include "spechtkit/classify.hpp"
#include "spechtkit/specht_hom.hpp"
#include "verify_internal.hpp"

namespace spechtkit::verify {

namespace {

struct Context {
    Partition lambda;
    int p;
    int h;
    std::vector<Partition> al;  // al[i]: all (+-i)-nodes removed, 0 <= i <= h

    bool light(const Word& w) const { return lightning(lambda, p, w); }
    bool unchanged_below(int i) const
    {
        for (int j = 0; j < i; ++j)
            if (al[j] != lambda)
                return false;
        return true;
    }
};

int largest_runner(const Partition& mu, int p)
{
    auto q = q_vector(Abacus::of(mu, p));
    return static_cast<int>(std::max_element(q.begin(), q.end()) - q.begin());
}

int smallest_runner(const Partition& mu, int p)
{
    auto q = q_vector(Abacus::of(mu, p));
    return static_cast<int>(std::min_element(q.begin(), q.end()) - q.begin());
}

// Occupancy of positions kp+h-1, kp+h, kp+h+1 as a string over {b, n}.
std::string middle(const Abacus& a, int p, int h, int k)
{
    std::string s;
    for (int d = -1; d <= 1; ++d)
        s += a.occupied(k * p + h + d) ? 'b' : 'n';
    return s;
}

SpotCheck make(const char* name, const Context& c, bool ok, std::string detail = {})
{
    return {name, c.lambda, ok ? Verdict::Pass : Verdict::Fail, std::move(detail)};
}

// Adds addable nodes of every residue other than h and h+1 until nothing changes.
Partition saturate_outside_middle(Partition mu, int p, int h)
{
    for (;;) {
        Partition before = mu;
        for (int i = 0; i < p; ++i)
            if (i != h && i != h + 1)
                mu = add_all(mu, p, i);
        if (mu == before)
            return mu;
    }
}

void removal_zero_checks(const Context& c, std::vector<SpotCheck>& out)
{
    int p = c.p, h = c.h;
    const Partition& lambda = c.lambda;
    if (c.al[0] == lambda)
        return;
    Partition quo0 = runner_quotients(Abacus::of(c.al[0], p))[0];
    if (quo0.empty())
        out.push_back(make("zero_removal_empty_runner", c, c.light({0})));
    else
        out.push_back(make("zero_removal_nonempty_runner", c,
                           p >= 5 && (c.light({0}) || c.light({p - 1})),
                           p >= 5 ? "" : "hypothesis met with p = 3"));
    bool rest_unchanged = true;
    for (int i = 2; i <= h; ++i)
        rest_unchanged &= c.al[i] == lambda;
    out.push_back(make("zero_removal_isolates", c, rest_unchanged));
}

void inner_residue_checks(const Context& c, std::vector<SpotCheck>& out)
{
    int p = c.p, h = c.h;
    const Partition& lambda = c.lambda;
    for (int i = 1; i < h; ++i) {
        if (c.al[i] == lambda)
            continue;
        int big = largest_runner(c.al[i], p), small = smallest_runner(c.al[i], p);
        out.push_back(make("extreme_runner", c,
                           c.light({i}) || c.light({p - i}) || big == i - 1 || small == i,
                           "i=" + std::to_string(i)));
        if (!c.unchanged_below(i))
            continue;
        if (i > 1) {
            if (big == i - 1)
                out.push_back(make("largest_runner_below", c, c.light({i}), "i=" + std::to_string(i)));
            if (small == i)
                out.push_back(make("smallest_runner_at_i", c, c.light({i}), "i=" + std::to_string(i)));
        } else if (p >= 5) {
            bool concl = c.light({1}) || c.light({p - 1});
            if (big == 0)
                out.push_back(make("one_removal_runner_zero_largest", c, concl));
            if (small == 1)
                out.push_back(make("one_removal_runner_one_smallest", c, concl));
        }
    }
}

void middle_type_two_check(const Context& c, std::vector<SpotCheck>& out)
{
    int p = c.p, h = c.h;
    auto info = r_info(c.al[h], p);
    if (!info || !info->type_two)
        return;
    bool exception = p == 3 && c.lambda == Partition{4, 4, 4, 3};
    out.push_back(make("middle_type_two", c, c.light({h}) || c.light({h + 1}) || exception));
    if (exception)
        out.push_back(make("middle_type_two_exception", c, c.light({1, 2, 1}) && c.light({2, 1, 2}),
                           "lightning along 121 and 212"));
}

void middle_jm_checks(const Context& c, std::vector<SpotCheck>& out)
{
    int p = c.p, h = c.h;
    if (!is_jm(c.al[h], p))
        return;
    Abacus a = Abacus::of(c.lambda, p);
    int kmin = floor_div(a.lowest() - h - 1, p) - 1;
    int kmax = floor_div(a.highest() - h + 1, p) + 1;
    std::vector<int> bnn, nbn, nnb;
    bool counts_ok = true;
    bool nonneg_nbn_or_nnn = true;
    for (int k = kmin; k <= kmax; ++k) {
        std::string m = middle(a, p, h, k);
        int beads = static_cast<int>(std::count(m.begin(), m.end(), 'b'));
        counts_ok &= k < 0 ? beads >= 2 : beads <= 1;
        if (m == "bnn")
            bnn.push_back(k);
        if (m == "nbn")
            nbn.push_back(k);
        if (m == "nnb")
            nnb.push_back(k);
        if (k >= 0 && m != "nbn" && m != "nnn")
            nonneg_nbn_or_nnn = false;
    }
    out.push_back(make("middle_bead_counts", c, counts_ok));

    if (!bnn.empty())
        out.push_back(make("middle_bnn", c, c.light({h + 1}) && c.light({h, h + 1})));
    else
        out.push_back(make("middle_nbn_exists", c, !nbn.empty() && c.light({h})));

    bool above = false, below = false;
    for (int k : nbn)
        for (int l : nnb) {
            above |= k > l;
            if (k < l && !a.occupied((k - 1) * p + h + 1) && !a.occupied((l + 1) * p + h))
                below = true;
        }
    if (above)
        out.push_back(make("middle_nbn_above_nnb", c, c.light({h + 1, h, h + 1})));
    if (below) {
        Partition mu = saturate_outside_middle(c.lambda, p, h);
        out.push_back(make("middle_nbn_below_nnb", c, lightning(mu, p, {h}) && lightning(mu, p, {h + 1}),
                           "saturated " + to_string(mu)));
    }
    if (std::find(nbn.begin(), nbn.end(), 0) != nbn.end()) {
        bool later = false;
        for (int k = 1; k <= kmax; ++k) {
            std::string m = middle(a, p, h, k);
            later |= m == "bnn" || m == "nbn";
        }
        out.push_back(make("middle_nbn_at_zero", c, later));
    }
    if (nonneg_nbn_or_nnn)
        out.push_back(detail::middle_runner_certificate(c.lambda, p));
}

} // namespace

namespace detail {

SpotCheck middle_runner_certificate(const Partition& lambda, int p)
{
    int h = (p - 1) / 2;
    SpotCheck out{"middle_hom_certificate", lambda, Verdict::Fail, {}};
    Abacus a = Abacus::of(lambda, p);
    std::vector<int> nbn;
    for (int k = 0; k * p + h - 1 <= a.highest(); ++k)
        if (middle(a, p, h, k) == "nbn")
            nbn.push_back(k);
    if (nbn.size() < 2) {
        out.detail = "fewer than two nbn rows";
        return out;
    }
    int k = nbn.front();
    Abacus b = a;
    b.move_bead(k * p + h, k * p + h - 1);
    b.move_bead(-(k + 1) * p + h - 1, -(k + 1) * p + h);
    Partition mu = b.read();
    std::vector<Node> removed, added;
    for (const Node& n : lambda.nodes())
        if (!mu.contains(n))
            removed.push_back(n);
    for (const Node& n : mu.nodes())
        if (!lambda.contains(n))
            added.push_back(n);
    if (removed.size() != 1 || added.size() != 1) {
        out.detail = "bead moves do not move a single node";
        return out;
    }
    ComposedResult res = composed_nonvanishing(lambda, p, removed[0], added[0]);
    Partition nu = restrictise(mu, p);
    Partition rest = restrictise(lambda, p);
    bool unit = res.v_coefficient == 1 || res.v_coefficient == p - 1;
    bool new_factor = nu != rest && nu != mullineux(rest, p) && nu.length() == lambda.length();
    out.verdict = unit && new_factor ? Verdict::Pass : Verdict::Fail;
    out.detail = "nu=" + to_string(nu) + " v=" + to_string(res.v) +
                 " coefficient=" + std::to_string(res.v_coefficient);
    return out;
}

} // namespace detail

std::vector<SpotCheck> section7_checks(const Partition& lambda, int p, bool* standing)
{
    if (standing)
        *standing = false;
    require_prime(p);
    if (p == 2)
        throw Error(ErrorCode::InvalidPrime, "needs an odd prime");
    if (!is_self_conjugate(lambda) || is_quotient_separated(lambda, p) || in_two_factor_set(lambda, p) ||
        is_jm(lambda, p))
        return {};
    int h = (p - 1) / 2;
    Context c{lambda, p, h, {}};
    for (int i = 0; i <= h; ++i)
        c.al.push_back(remove_all_pm(lambda, p, i));
    for (int i = 0; i < h; ++i)
        if (c.al[i] != lambda && !in_two_factor_set(c.al[i], p))
            return {};
    if (c.al[h] != lambda && !in_two_factor_set(c.al[h], p) && !is_jm(c.al[h], p))
        return {};
    if (standing)
        *standing = true;

    std::vector<SpotCheck> out;
    std::vector<std::function<void()>> steps{
        [&] { removal_zero_checks(c, out); },
        [&] { inner_residue_checks(c, out); },
        [&] {
            if (c.unchanged_below(h) && c.al[h] != lambda)
                middle_type_two_check(c, out);
        },
        [&] {
            if (c.unchanged_below(h) && c.al[h] != lambda)
                middle_jm_checks(c, out);
        },
    };
    for (auto& step : steps) {
        try {
            step();
        } catch (const std::exception& e) {
            out.push_back({"unclassified", lambda, Verdict::Skipped, e.what()});
        }
    }
    return out;
}

Section7Report section7_spotcheck(int p, int max_n, int jobs)
{
    if (p != 3 && p != 5)
        throw Error(ErrorCode::InvalidPrime, "spot checks run for p = 3 or 5");
    SweepSpec spec{p, max_n, Filter::SelfConjugate, "case_analysis", jobs};
    std::vector<Partition> items = enumerate(spec);
    struct Item {
        bool standing = false;
        std::vector<SpotCheck> checks;
    };
    std::function<Item(const Partition&)> fn = [p](const Partition& l) {
        Item it;
        it.checks = section7_checks(l, p, &it.standing);
        return it;
    };
    Section7Report r;
    r.p = p;
    r.max_n = max_n;
    r.examined = static_cast<long long>(items.size());
    for (auto& it : detail::parallel_map(items, jobs, fn)) {
        r.standing += it.standing;
        for (auto& s : it.checks)
            r.checks.push_back(std::move(s));
    }
    return r;
}

namespace detail {

Tally section7_suite(const SweepSpec& spec)
{
    Section7Report r = section7_spotcheck(spec.p, spec.max_n, spec.jobs);
    Tally t;
    t.count("examined", r.examined);
    t.count("standing", r.standing);
    bool exception_seen = false;
    for (const auto& s : r.checks) {
        t.count("hits." + s.proposition);
        if (s.proposition == "middle_type_two_exception" && s.verdict == Verdict::Pass)
            exception_seen = true;
        if (s.verdict == Verdict::Skipped) {
            t.count("skipped");
            continue;
        }
        t.check(s.verdict == Verdict::Pass, to_string(s.lambda), s.proposition + ": " + s.detail);
    }
    if (spec.p == 3 && spec.max_n >= 15)
        t.check(exception_seen, "(4,4,4,3)", "exceptional clause not reproduced");
    if (spec.p == 3 && spec.max_n >= 9) {
        bool standing = true;
        section7_checks(Partition{3, 3, 3}, 3, &standing);
        t.check(!standing, "(3,3,3)", "should be excluded by the standing assumptions");
    }
    return t;
}

} // namespace detail

} // namespace spechtkit::verify
