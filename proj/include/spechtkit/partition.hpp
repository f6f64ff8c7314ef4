#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "spechtkit/error.hpp"

namespace spechtkit {

// Node of a Young diagram, 1-based (row, column).
struct Node {
    int row = 0;
    int col = 0;
    auto operator<=>(const Node&) const = default;
};

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(const std::vector<int>& parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    // Row length, 1-based; zero beyond the last row.
    int operator[](int row) const;
    bool contains(Node n) const;
    std::vector<Node> nodes() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Validating constructor: rejects increases and negative parts, strips zeros.
Partition make_partition(const std::vector<int>& raw);

// Builds a partition from a set of nodes, returning nothing if the set is not a diagram.
std::optional<Partition> partition_from_nodes(const std::vector<Node>& nodes);

std::string to_string(const Partition& lambda);

Partition conjugate(const Partition& lambda);

// Partial sums of a are at least those of b.
bool dominates(const Partition& a, const Partition& b);
bool is_self_conjugate(const Partition& lambda);

void require_prime(int p);

bool is_restricted(const Partition& lambda, int p);
bool is_regular(const Partition& lambda, int p);

struct Regularity {
    bool restricted = false;
    bool regular = false;
};
Regularity regularity(const Partition& lambda, int p);

// Either a prime p, or the "infinite" characteristic where residues are plain contents.
class Characteristic {
public:
    Characteristic(int p) : p_(p) {}
    static Characteristic infinite() { return Characteristic(0); }
    bool is_infinite() const { return p_ == 0; }
    int p() const { return p_; }

private:
    int p_;
};

int residue(Node n, Characteristic p);

struct BoundaryNode {
    Node node;
    int residue = 0;
    auto operator<=>(const BoundaryNode&) const = default;
};

struct BoundaryNodes {
    std::vector<BoundaryNode> removable;
    std::vector<BoundaryNode> addable;
};

// Both lists are sorted top to bottom.
BoundaryNodes boundary_nodes(const Partition& lambda, Characteristic p);

Partition add_node(const Partition& lambda, Node n);
Partition remove_node(const Partition& lambda, Node n);

int hook_length(const Partition& lambda, Node n);
int p_valuation(long long n, int p);

// Row r, column c holds the p-adic valuation of the hook length at (r+1, c+1).
std::vector<std::vector<int>> p_power_diagram(const Partition& lambda, int p);

// Removes the rim hook whose hand is at the end of the row of n and whose foot is at the
// bottom of the column of n.
Partition strip_rim_hook(const Partition& lambda, Node n);
std::vector<Node> rim_hook_nodes(const Partition& lambda, Node n);

struct CoreWeight {
    Partition core;
    int weight = 0;
};
CoreWeight p_core_weight(const Partition& lambda, int p);

int ramp_of(Node n, int p);

struct RampStats {
    int total = 0;
    int addable = 0;
    int removable = 0;
};
RampStats ramp_stats(const Partition& lambda, int p, int l);

Partition restrictise(const Partition& lambda, int p);

} // namespace spechtkit
