#include "spechtkit/abacus.hpp"

#include <algorithm>
#include <numeric>

namespace spechtkit {

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

int mod(int a, int b)
{
    int m = a % b;
    return m < 0 ? m + b : m;
}

Abacus::Abacus(int p) : p_(p)
{
    require_prime(p);
}

Abacus Abacus::of(const Partition& lambda, int p)
{
    Abacus a(p);
    int len = lambda.length();
    std::vector<bool> negative_hit(len + 1, false);
    for (int i = 1; i <= len; ++i) {
        int pos = lambda[i] - i;
        if (pos >= 0)
            a.flipped_.insert(pos);
        else
            negative_hit[-pos] = true;
    }
    for (int k = 1; k <= len; ++k)
        if (!negative_hit[k])
            a.flipped_.insert(-k);
    return a;
}

bool Abacus::occupied(int pos) const
{
    return (pos < 0) != (flipped_.count(pos) > 0);
}

void Abacus::set(int pos, bool occ)
{
    if (occupied(pos) == occ)
        return;
    if (flipped_.count(pos))
        flipped_.erase(pos);
    else
        flipped_.insert(pos);
}

void Abacus::move_bead(int from, int to)
{
    if (!occupied(from) || occupied(to))
        throw Error(ErrorCode::ConstraintViolated, "bead move needs a bead and a gap");
    set(from, false);
    set(to, true);
}

int Abacus::lowest() const
{
    return flipped_.empty() ? 0 : std::min(0, *flipped_.begin());
}

int Abacus::highest() const
{
    return flipped_.empty() ? -1 : std::max(-1, *flipped_.rbegin());
}

int Abacus::first_vacant(int runner) const
{
    int pos = floor_div(lowest() - 1, p_) * p_ + runner;
    while (occupied(pos))
        pos += p_;
    return pos;
}

int Abacus::last_bead(int runner) const
{
    int pos = (floor_div(highest(), p_) + 1) * p_ + runner;
    while (!occupied(pos))
        pos -= p_;
    return pos;
}

int Abacus::core_position(int runner) const
{
    int charge = 0;
    for (int pos : flipped_)
        if (mod(pos, p_) == runner)
            charge += pos >= 0 ? 1 : -1;
    return charge * p_ + runner;
}

Partition Abacus::read() const
{
    int low = lowest();
    std::vector<int> beads;
    for (int pos = highest(); pos >= low; --pos)
        if (occupied(pos))
            beads.push_back(pos);
    if (static_cast<int>(beads.size()) != -low)
        throw Error(ErrorCode::ConstraintViolated, "abacus has nonzero charge");
    std::vector<int> parts;
    for (std::size_t i = 0; i < beads.size(); ++i)
        parts.push_back(beads[i] + static_cast<int>(i) + 1);
    return Partition(parts);
}

Abacus core_of(const Abacus& a)
{
    Abacus out(a.p());
    for (int i = 0; i < a.p(); ++i) {
        int q = a.core_position(i);
        for (int pos = i; pos < q; pos += a.p())
            out.set(pos, true);
        for (int pos = q; pos < 0; pos += a.p())
            out.set(pos, false);
    }
    return out;
}

Partition abacus_core(const Partition& lambda, int p)
{
    return core_of(Abacus::of(lambda, p)).read();
}

int abacus_weight(const Abacus& a)
{
    int p = a.p();
    int total = 0;
    for (int i = 0; i < p; ++i) {
        int lo = a.first_vacant(i);
        int hi = a.last_bead(i);
        int vacant = 0;
        for (int pos = lo; pos <= hi; pos += p) {
            if (a.occupied(pos))
                total += vacant;
            else
                ++vacant;
        }
    }
    return total;
}

std::vector<Partition> runner_quotients(const Abacus& a)
{
    int p = a.p();
    std::vector<Partition> out;
    for (int i = 0; i < p; ++i) {
        int f = floor_div(a.first_vacant(i), p);
        std::vector<int> rows;
        for (int pos = a.last_bead(i); pos > f * p; pos -= p)
            if (a.occupied(pos))
                rows.push_back(floor_div(pos, p));
        int k = static_cast<int>(rows.size());
        std::vector<int> parts;
        for (int j = 1; j <= k; ++j)
            parts.push_back(rows[j - 1] - f - (k - j));
        out.emplace_back(parts);
    }
    return out;
}

std::vector<int> q_vector(const Abacus& a)
{
    std::vector<int> q;
    for (int i = 0; i < a.p(); ++i)
        q.push_back(a.core_position(i));
    return q;
}

OrderedQuotient ordered_quotient(const Abacus& a)
{
    OrderedQuotient out;
    out.q = q_vector(a);
    out.pi.resize(a.p());
    std::iota(out.pi.begin(), out.pi.end(), 0);
    std::sort(out.pi.begin(), out.pi.end(), [&](int x, int y) { return out.q[x] < out.q[y]; });
    std::vector<Partition> quo = runner_quotients(a);
    for (int i : out.pi) {
        out.parts.push_back(quo[i]);
        out.weight += quo[i].size();
    }
    return out;
}

OrderedQuotient ordered_quotient(const Partition& lambda, int p)
{
    return ordered_quotient(Abacus::of(lambda, p));
}

std::string cycle_notation(const std::vector<int>& perm)
{
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start] || perm[start] == static_cast<int>(start))
            continue;
        out += '(';
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first)
                out += ',';
            out += std::to_string(x);
            first = false;
            x = perm[x];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

bool is_quotient_separated(const Abacus& a)
{
    int p = a.p();
    std::vector<int> fs(p), lb(p);
    for (int i = 0; i < p; ++i) {
        fs[i] = a.first_vacant(i);
        lb[i] = a.last_bead(i);
    }
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (fs[i] < lb[j] && fs[j] < lb[i])
                return false;
    return true;
}

bool is_quotient_separated(const Partition& lambda, int p)
{
    return is_quotient_separated(Abacus::of(lambda, p));
}

std::vector<int> rouquier_gaps(const OrderedQuotient& oq, int p)
{
    std::vector<int> d;
    for (int j = 1; j < p; ++j)
        d.push_back(floor_div(oq.q[oq.pi[j]] - oq.q[oq.pi[j - 1]], p));
    return d;
}

static bool gaps_rouquier(const OrderedQuotient& oq, int p)
{
    for (int j = 1; j < p; ++j)
        if (oq.q[oq.pi[j]] - oq.q[oq.pi[j - 1]] <= (oq.weight - 1) * p)
            return false;
    return true;
}

bool is_rouquier(const Partition& lambda, int p)
{
    return gaps_rouquier(ordered_quotient(lambda, p), p);
}

Abacus from_core_and_quotient(const Abacus& core, const std::vector<Partition>& by_runner)
{
    int p = core.p();
    if (static_cast<int>(by_runner.size()) != p)
        throw Error(ErrorCode::ConstraintViolated, "need one quotient component per runner");
    Abacus out = core_of(core);
    for (int i = 0; i < p; ++i) {
        int r = floor_div(out.core_position(i), p);
        const Partition& alpha = by_runner[i];
        int k = alpha.length();
        for (int j = 1; j <= k; ++j)
            out.set((r - j) * p + i, false);
        for (int j = 1; j <= k; ++j)
            out.set((r - j + alpha[j]) * p + i, true);
    }
    return out;
}

Partition from_core_and_quotient(const Partition& core, int p,
                                 const std::vector<Partition>& by_runner)
{
    return from_core_and_quotient(Abacus::of(core, p), by_runner).read();
}

Partition add_all(const Partition& lambda, int p, int i)
{
    std::vector<int> parts = lambda.parts();
    parts.push_back(0);
    for (const auto& n : boundary_nodes(lambda, Characteristic(p)).addable)
        if (n.residue == i)
            ++parts[n.node.row - 1];
    return Partition(parts);
}

void add_all(Abacus& a, int i)
{
    int p = a.p();
    int prev = mod(i - 1, p);
    std::vector<int> movers;
    for (int pos = floor_div(a.lowest() - 1, p) * p + prev; pos <= a.highest(); pos += p)
        if (a.occupied(pos) && !a.occupied(pos + 1))
            movers.push_back(pos);
    for (int pos : movers)
        a.move_bead(pos, pos + 1);
}

static int choose_walk_residue(const OrderedQuotient& oq, int p)
{
    const std::vector<int>& q = oq.q;
    for (int i = 0; i < p; ++i) {
        int prev = mod(i - 1, p);
        for (int k = 0; k < p; ++k)
            if (q[prev] > q[k] && q[k] > q[i])
                return i;
    }
    int best = -1;
    for (int j = 1; j < p; ++j) {
        if (q[oq.pi[j]] - q[oq.pi[j - 1]] < (oq.weight - 1) * p) {
            int i = oq.pi[j - 1];
            if (best < 0 || i < best)
                best = i;
        }
    }
    return best;
}

std::vector<WalkStep> rouquier_walk_trace(const Partition& lambda, int p)
{
    Abacus a = Abacus::of(lambda, p);
    if (!is_quotient_separated(a))
        throw Error(ErrorCode::NotQuotientSeparated, to_string(lambda));
    std::vector<WalkStep> steps;
    for (int guard = 0;; ++guard) {
        OrderedQuotient oq = ordered_quotient(a);
        if (gaps_rouquier(oq, p))
            return steps;
        if (guard > 100000)
            throw Error(ErrorCode::NonTerminating, "walk did not reach a Rouquier block");
        int i = choose_walk_residue(oq, p);
        if (i < 0)
            throw Error(ErrorCode::NonTerminating, "no admissible residue for walk step");
        add_all(a, i);
        steps.push_back({i, a.read()});
    }
}

Partition rouquier_walk(const Partition& lambda, int p)
{
    auto steps = rouquier_walk_trace(lambda, p);
    return steps.empty() ? lambda : steps.back().result;
}

std::vector<std::string> render_grid(const Abacus& a, int* first_row)
{
    int p = a.p();
    int lo = floor_div(a.lowest(), p) - 1;
    int hi = floor_div(a.highest(), p) + 1;
    if (first_row)
        *first_row = lo;
    std::vector<std::string> rows;
    for (int r = lo; r <= hi; ++r) {
        std::string row;
        for (int i = 0; i < p; ++i)
            row += a.occupied(r * p + i) ? 'b' : '-';
        rows.push_back(row);
    }
    return rows;
}

} // namespace spechtkit
