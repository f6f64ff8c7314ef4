#include "spechtkit/restriction.hpp"

#include <algorithm>

#include "spechtkit/abacus.hpp"

namespace spechtkit {

int rem_count(const Partition& lambda, int p, int i)
{
    int n = 0;
    for (const auto& b : boundary_nodes(lambda, Characteristic(p)).removable)
        n += b.residue == i;
    return n;
}

static Partition strip_residue(const Partition& lambda, int p, int i, int* count)
{
    std::vector<int> parts = lambda.parts();
    int n = 0;
    for (const auto& b : boundary_nodes(lambda, Characteristic(p)).removable)
        if (b.residue == i) {
            --parts[b.node.row - 1];
            ++n;
        }
    if (count)
        *count = n;
    return Partition(parts);
}

RemovalResult remove_all(const Partition& lambda, int p, const Word& word)
{
    require_prime(p);
    RemovalResult out{lambda, {}};
    for (int i : word) {
        int n = 0;
        out.result = strip_residue(out.result, p, mod(i, p), &n);
        out.counts.push_back(n);
    }
    return out;
}

Partition remove_all_pm(const Partition& lambda, int p, int i)
{
    require_prime(p);
    if (!is_self_conjugate(lambda))
        throw Error(ErrorCode::NotSelfConjugate, to_string(lambda));
    int a = mod(i, p), b = mod(-i, p);
    Partition cur = lambda;
    for (;;) {
        int n1 = 0, n2 = 0;
        cur = strip_residue(cur, p, a, &n1);
        cur = strip_residue(cur, p, b, &n2);
        if (n1 == 0 && n2 == 0)
            return cur;
    }
}

std::string Signature::str() const
{
    std::string s;
    for (const auto& e : entries_)
        s += e.sign;
    return s;
}

Signature Signature::reduced() const
{
    Signature out;
    for (const auto& e : entries_) {
        if (e.sign == '+' && !out.entries_.empty() && out.entries_.back().sign == '-')
            out.entries_.pop_back();
        else
            out.entries_.push_back(e);
    }
    return out;
}

std::vector<Node> Signature::normal_nodes() const
{
    std::vector<Node> out;
    for (const auto& e : reduced().entries_)
        if (e.sign == '-')
            out.push_back(e.node);
    return out;
}

std::vector<Node> Signature::conormal_nodes() const
{
    std::vector<Node> out;
    for (const auto& e : reduced().entries_)
        if (e.sign == '+')
            out.push_back(e.node);
    return out;
}

Signature signature(const Partition& lambda, int p, int i)
{
    require_prime(p);
    if (!is_restricted(lambda, p))
        throw Error(ErrorCode::NotRestricted, to_string(lambda));
    i = mod(i, p);
    BoundaryNodes b = boundary_nodes(lambda, Characteristic(p));
    std::vector<std::pair<Node, char>> all;
    for (const auto& n : b.addable)
        if (n.residue == i)
            all.push_back({n.node, '+'});
    for (const auto& n : b.removable)
        if (n.residue == i)
            all.push_back({n.node, '-'});
    std::sort(all.begin(), all.end(),
              [](const auto& x, const auto& y) { return x.first.row < y.first.row; });
    Signature s;
    for (const auto& [n, c] : all)
        s.push(c, n);
    return s;
}

int nor_count(const Partition& lambda, int p, int i)
{
    return static_cast<int>(signature(lambda, p, i).normal_nodes().size());
}

RemovalResult remove_normal(const Partition& lambda, int p, const Word& word)
{
    RemovalResult out{lambda, {}};
    for (int i : word) {
        std::vector<Node> normal = signature(out.result, p, i).normal_nodes();
        std::vector<int> parts = out.result.parts();
        for (const Node& n : normal)
            --parts[n.row - 1];
        out.result = Partition(parts);
        out.counts.push_back(static_cast<int>(normal.size()));
    }
    return out;
}

static void require_odd_prime(int p)
{
    require_prime(p);
    if (p == 2)
        throw Error(ErrorCode::InvalidPrime, "the ramp criterion needs an odd prime");
}

bool later_addable_criterion(const Partition& lambda, int p, int i)
{
    require_odd_prime(p);
    i = mod(i, p);
    BoundaryNodes b = boundary_nodes(lambda, Characteristic(p));
    int first_removable = -1;
    for (const auto& n : b.removable)
        if (n.residue == i) {
            int l = ramp_of(n.node, p);
            if (first_removable < 0 || l < first_removable)
                first_removable = l;
        }
    if (first_removable < 0)
        return false;
    for (const auto& n : b.addable)
        if (n.residue == i && ramp_of(n.node, p) > first_removable)
            return true;
    return false;
}

bool lightning(const Partition& lambda, int p, const Word& word)
{
    require_odd_prime(p);
    Partition cur = lambda;
    for (int i : word) {
        if (later_addable_criterion(cur, p, i))
            return true;
        cur = strip_residue(cur, p, mod(i, p), nullptr);
    }
    return false;
}

std::optional<std::pair<int, int>> abacus_lightning_witness(const Partition& lambda, int p, int i)
{
    require_odd_prime(p);
    i = mod(i, p);
    Abacus a = Abacus::of(lambda, p);
    int lo = floor_div(a.lowest() - i, p) - 1;
    int hi = floor_div(a.highest() - i, p) + 2;
    std::vector<int> addable_rows, removable_rows;
    for (int r = lo; r <= hi; ++r) {
        int pos = r * p + i;
        if (a.occupied(pos - 1) && !a.occupied(pos))
            addable_rows.push_back(r);
        if (a.occupied(pos) && !a.occupied(pos - 1))
            removable_rows.push_back(r);
    }
    for (int k : addable_rows)
        for (int l : removable_rows) {
            if (l <= k)
                continue;
            int beads = 0;
            for (int pos = k * p + i + 1; pos <= l * p + i - 2; ++pos)
                beads += a.occupied(pos);
            if (beads >= l - k)
                return std::make_pair(k, l);
        }
    return std::nullopt;
}

Partition mullineux(const Partition& lambda, int p)
{
    require_prime(p);
    if (!is_restricted(lambda, p))
        throw Error(ErrorCode::NotRestricted, to_string(lambda));
    if (lambda.empty())
        return lambda;
    for (int i = p - 1; i >= 0; --i) {
        std::vector<Node> normal = signature(lambda, p, i).normal_nodes();
        if (normal.empty())
            continue;
        std::vector<int> parts = lambda.parts();
        for (const Node& n : normal)
            --parts[n.row - 1];
        Partition image = mullineux(Partition(parts), p);
        std::vector<Node> conormal = signature(image, p, mod(-i, p)).conormal_nodes();
        std::size_t n = normal.size();
        if (conormal.size() < n)
            throw Error(ErrorCode::ConstraintViolated, "too few conormal nodes");
        std::vector<int> out = image.parts();
        out.push_back(0);
        for (std::size_t k = conormal.size() - n; k < conormal.size(); ++k)
            ++out[conormal[k].row - 1];
        return Partition(out);
    }
    throw Error(ErrorCode::ConstraintViolated, "nonempty restricted partition without normal nodes");
}

} // namespace spechtkit
