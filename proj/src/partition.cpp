#include "spechtkit/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace spechtkit {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(const std::vector<int>& parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw Error(ErrorCode::NegativePart, "part " + std::to_string(parts[i]));
        if (i > 0 && parts[i] > parts[i - 1])
            throw Error(ErrorCode::NotWeaklyDecreasing,
                        "part " + std::to_string(i + 1) + " exceeds its predecessor");
    }
    parts_ = parts;
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::operator[](int row) const
{
    if (row < 1 || row > length())
        return 0;
    return parts_[row - 1];
}

bool Partition::contains(Node n) const
{
    return n.row >= 1 && n.col >= 1 && n.col <= (*this)[n.row];
}

std::vector<Node> Partition::nodes() const
{
    std::vector<Node> out;
    out.reserve(size_);
    for (int r = 1; r <= length(); ++r)
        for (int c = 1; c <= parts_[r - 1]; ++c)
            out.push_back({r, c});
    return out;
}

Partition make_partition(const std::vector<int>& raw)
{
    return Partition(raw);
}

std::optional<Partition> partition_from_nodes(const std::vector<Node>& nodes)
{
    std::map<int, std::vector<int>> rows;
    for (const Node& n : nodes) {
        if (n.row < 1 || n.col < 1)
            return std::nullopt;
        rows[n.row].push_back(n.col);
    }
    std::vector<int> parts;
    int expected_row = 1;
    for (auto& [r, cols] : rows) {
        if (r != expected_row++)
            return std::nullopt;
        std::sort(cols.begin(), cols.end());
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (cols[i] != static_cast<int>(i) + 1)
                return std::nullopt;
        int len = static_cast<int>(cols.size());
        if (!parts.empty() && len > parts.back())
            return std::nullopt;
        parts.push_back(len);
    }
    return Partition(parts);
}

std::string to_string(const Partition& lambda)
{
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < lambda.length(); ++i) {
        if (i)
            os << ',';
        os << lambda.parts()[i];
    }
    os << ')';
    return os.str();
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> out(lambda.empty() ? 0 : lambda.parts()[0], 0);
    for (int part : lambda.parts())
        for (int c = 0; c < part; ++c)
            ++out[c];
    return Partition(out);
}

bool dominates(const Partition& a, const Partition& b)
{
    int sa = 0, sb = 0;
    for (int r = 1; r <= std::max(a.length(), b.length()); ++r) {
        sa += a[r];
        sb += b[r];
        if (sa < sb)
            return false;
    }
    return true;
}

bool is_self_conjugate(const Partition& lambda)
{
    return conjugate(lambda) == lambda;
}

void require_prime(int p)
{
    if (p < 2)
        throw Error(ErrorCode::InvalidPrime, std::to_string(p));
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw Error(ErrorCode::InvalidPrime, std::to_string(p));
}

bool is_restricted(const Partition& lambda, int p)
{
    for (int r = 1; r <= lambda.length(); ++r)
        if (lambda[r] - lambda[r + 1] >= p)
            return false;
    return true;
}

bool is_regular(const Partition& lambda, int p)
{
    int run = 0;
    for (int r = 1; r <= lambda.length(); ++r) {
        run = (r > 1 && lambda[r] == lambda[r - 1]) ? run + 1 : 1;
        if (run >= p)
            return false;
    }
    return true;
}

Regularity regularity(const Partition& lambda, int p)
{
    require_prime(p);
    return {is_restricted(lambda, p), is_regular(lambda, p)};
}

int residue(Node n, Characteristic p)
{
    int content = n.col - n.row;
    if (p.is_infinite())
        return content;
    int m = content % p.p();
    return m < 0 ? m + p.p() : m;
}

BoundaryNodes boundary_nodes(const Partition& lambda, Characteristic p)
{
    BoundaryNodes out;
    for (int r = 1; r <= lambda.length() + 1; ++r) {
        if (r == 1 || lambda[r - 1] > lambda[r]) {
            Node n{r, lambda[r] + 1};
            out.addable.push_back({n, residue(n, p)});
        }
        if (lambda[r] > lambda[r + 1]) {
            Node n{r, lambda[r]};
            out.removable.push_back({n, residue(n, p)});
        }
    }
    return out;
}

Partition add_node(const Partition& lambda, Node n)
{
    std::vector<int> parts = lambda.parts();
    if (n.row == lambda.length() + 1)
        parts.push_back(0);
    if (n.row < 1 || n.row > static_cast<int>(parts.size()) || parts[n.row - 1] + 1 != n.col)
        throw Error(ErrorCode::NodeOutsideDiagram, "node is not addable");
    ++parts[n.row - 1];
    return Partition(parts);
}

Partition remove_node(const Partition& lambda, Node n)
{
    if (!lambda.contains(n) || lambda[n.row] != n.col || lambda[n.row + 1] >= n.col)
        throw Error(ErrorCode::NodeOutsideDiagram, "node is not removable");
    std::vector<int> parts = lambda.parts();
    --parts[n.row - 1];
    return Partition(parts);
}

int hook_length(const Partition& lambda, Node n)
{
    if (!lambda.contains(n))
        throw Error(ErrorCode::NodeOutsideDiagram,
                    "(" + std::to_string(n.row) + "," + std::to_string(n.col) + ")");
    int leg = 0;
    for (int r = n.row + 1; lambda[r] >= n.col && r <= lambda.length(); ++r)
        ++leg;
    return lambda[n.row] - n.col + leg + 1;
}

int p_valuation(long long n, int p)
{
    int v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<std::vector<int>> p_power_diagram(const Partition& lambda, int p)
{
    require_prime(p);
    Partition conj = conjugate(lambda);
    std::vector<std::vector<int>> out(lambda.length());
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda[r]; ++c)
            out[r - 1].push_back(p_valuation(lambda[r] - r + conj[c] - c + 1, p));
    return out;
}

std::vector<Node> rim_hook_nodes(const Partition& lambda, Node n)
{
    if (!lambda.contains(n))
        throw Error(ErrorCode::NodeOutsideDiagram,
                    "(" + std::to_string(n.row) + "," + std::to_string(n.col) + ")");
    int foot_row = n.row;
    while (lambda[foot_row + 1] >= n.col)
        ++foot_row;
    Node cur{n.row, lambda[n.row]};
    Node foot{foot_row, n.col};
    std::vector<Node> path{cur};
    while (cur != foot) {
        if (lambda.contains({cur.row + 1, cur.col}))
            ++cur.row;
        else
            --cur.col;
        path.push_back(cur);
    }
    return path;
}

Partition strip_rim_hook(const Partition& lambda, Node n)
{
    std::vector<Node> hook = rim_hook_nodes(lambda, n);
    std::vector<int> parts = lambda.parts();
    for (const Node& m : hook)
        --parts[m.row - 1];
    return Partition(parts);
}

CoreWeight p_core_weight(const Partition& lambda, int p)
{
    require_prime(p);
    CoreWeight out{lambda, 0};
    for (;;) {
        Partition conj = conjugate(out.core);
        std::optional<Node> found;
        for (int r = 1; r <= out.core.length() && !found; ++r)
            for (int c = 1; c <= out.core[r] && !found; ++c)
                if (out.core[r] - r + conj[c] - c + 1 == p)
                    found = Node{r, c};
        if (!found)
            return out;
        out.core = strip_rim_hook(out.core, *found);
        ++out.weight;
    }
}

int ramp_of(Node n, int p)
{
    return n.col - 1 + (p - 1) * (n.row - 1);
}

RampStats ramp_stats(const Partition& lambda, int p, int l)
{
    RampStats out;
    if (l < 0)
        return out;
    for (int r = 1; r <= lambda.length() && r - 1 <= l / (p - 1); ++r) {
        int c = l + 1 - (p - 1) * (r - 1);
        if (c <= lambda[r])
            ++out.total;
    }
    BoundaryNodes b = boundary_nodes(lambda, Characteristic(p));
    for (const auto& n : b.addable)
        out.addable += ramp_of(n.node, p) == l;
    for (const auto& n : b.removable)
        out.removable += ramp_of(n.node, p) == l;
    return out;
}

Partition restrictise(const Partition& lambda, int p)
{
    require_prime(p);
    std::map<int, int> per_ramp;
    for (const Node& n : lambda.nodes())
        ++per_ramp[ramp_of(n, p)];
    std::vector<Node> moved;
    for (auto [l, count] : per_ramp) {
        int lowest = 1 + l / (p - 1);
        for (int k = 0; k < count; ++k) {
            int r = lowest - k;
            moved.push_back({r, l + 1 - (p - 1) * (r - 1)});
        }
    }
    auto out = partition_from_nodes(moved);
    if (!out)
        throw Error(ErrorCode::ConstraintViolated, "ramp compression left a non-diagram");
    return *out;
}

} // namespace spechtkit
