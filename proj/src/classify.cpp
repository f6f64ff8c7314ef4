#include "spechtkit/classify.hpp"

#include "spechtkit/abacus.hpp"
#include "spechtkit/restriction.hpp"

namespace spechtkit {

namespace {

using Diagram = std::vector<std::vector<int>>;

bool row_constant(const Diagram& d, int r, int v)
{
    for (int x : d[r])
        if (x != v)
            return false;
    return true;
}

bool col_constant(const Diagram& d, int c, int v)
{
    for (const auto& row : d) {
        if (static_cast<int>(row.size()) <= c)
            break;
        if (row[c] != v)
            return false;
    }
    return true;
}

// JM condition on every nonzero entry, optionally skipping one diagonal entry.
bool jm_condition(const Diagram& d, int skip)
{
    for (int r = 0; r < static_cast<int>(d.size()); ++r)
        for (int c = 0; c < static_cast<int>(d[r].size()); ++c) {
            if (r == skip && c == skip)
                continue;
            int v = d[r][c];
            if (v != 0 && !row_constant(d, r, v) && !col_constant(d, c, v))
                return false;
        }
    return true;
}

bool is_core(const Partition& lambda, int p)
{
    return p_core_weight(lambda, p).weight == 0;
}

void require_odd(int p)
{
    require_prime(p);
    if (p == 2)
        throw Error(ErrorCode::InvalidPrime, "R-partitions need an odd prime");
}

} // namespace

bool is_jm(const Partition& lambda, int p)
{
    return jm_condition(p_power_diagram(lambda, p), -1);
}

bool is_jm_abacus(const Partition& lambda, int p)
{
    require_prime(p);
    Abacus a = Abacus::of(lambda, p);
    if (!is_quotient_separated(a))
        return false;
    OrderedQuotient oq = ordered_quotient(a);
    for (int i = 1; i + 1 < p; ++i)
        if (!oq.parts[i].empty())
            return false;
    const Partition& first = oq.parts[0];
    const Partition& last = oq.parts[p - 1];
    return is_restricted(first, p) && is_jm(first, p) && is_regular(last, p) && is_jm(last, p);
}

std::optional<RInfo> r_info(const Partition& lambda, int p)
{
    require_odd(p);
    if (!is_self_conjugate(lambda))
        return std::nullopt;
    Diagram d = p_power_diagram(lambda, p);
    int h = (p - 1) / 2;
    std::optional<RInfo> out;
    for (int r = 1; r <= lambda.length() && lambda[r] >= r; ++r) {
        if (d[r - 1][r - 1] == 0 || !jm_condition(d, r - 1))
            continue;
        Node n{r, r};
        if (!out)
            out = RInfo{n, false, false};
        if (r == 1) {
            Partition xi = strip_rim_hook(lambda, n);
            if (is_self_conjugate(xi) && is_core(xi, p) && xi[1] <= h)
                out->type_one = true;
        }
        if (hook_length(lambda, n) == p) {
            Partition rest = strip_rim_hook(lambda, n);
            if (is_self_conjugate(rest) && is_jm(rest, p))
                out->type_two = true;
        }
    }
    return out;
}

std::optional<RInfo> r_info_abacus(const Partition& lambda, int p)
{
    require_odd(p);
    if (!is_self_conjugate(lambda))
        return std::nullopt;
    int h = (p - 1) / 2;
    Abacus a = Abacus::of(lambda, p);
    RInfo info;

    // type I: a single bead at some jp+h, every other position from h onwards vacant
    std::vector<int> late;
    for (int pos = h; pos <= a.highest(); ++pos)
        if (a.occupied(pos))
            late.push_back(pos);
    if (late.size() == 1 && mod(late[0] - h, p) == 0)
        info.type_one = true;

    OrderedQuotient oq = ordered_quotient(a);
    bool middle_empty = true;
    for (int i = 1; i + 1 < p; ++i)
        if (i != h && !oq.parts[i].empty())
            middle_empty = false;
    const Partition& first = oq.parts[0];
    const Partition& last = oq.parts[p - 1];
    if (middle_empty && oq.parts[h] == Partition{1} && is_quotient_separated(a) &&
        is_restricted(first, p) && is_jm(first, p) && is_regular(last, p) && is_jm(last, p))
        info.type_two = true;

    if (info.type_one) {
        info.distinguished = {1, 1};
    } else if (info.type_two) {
        // the lone bead of the middle runner sits over a gap p places earlier
        int runner = oq.pi[h];
        int x = a.last_bead(runner);
        int row = 0;
        for (int pos = x; pos <= a.highest(); ++pos)
            row += a.occupied(pos);
        info.distinguished = {row, row};
    } else {
        return std::nullopt;
    }
    return info;
}

bool in_two_factor_set(const Partition& lambda, int p)
{
    require_odd(p);
    if (!is_self_conjugate(lambda))
        return false;
    if (p_core_weight(lambda, p).weight == 1)
        return true;
    auto info = r_info(lambda, p);
    if (info && info->type_one)
        return true;
    if (info && info->type_two && p >= 5)
        return true;
    return p == 3 && lambda == Partition{3, 3, 3};
}

bool alt_irreducible(const Partition& lambda, int p)
{
    return is_jm(lambda, p) || (is_self_conjugate(lambda) && in_two_factor_set(lambda, p));
}

bool r1_stability(const Partition& lambda, int p, int i)
{
    auto below = r_info(remove_all_pm(lambda, p, i), p);
    if (!below || !below->type_one)
        return true;
    auto info = r_info(lambda, p);
    return info && info->type_one;
}

} // namespace spechtkit
