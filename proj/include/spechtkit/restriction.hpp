#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spechtkit/partition.hpp"

namespace spechtkit {

using Word = std::vector<int>;

int rem_count(const Partition& lambda, int p, int i);

struct RemovalResult {
    Partition result;
    std::vector<int> counts;  // nodes removed at each letter
};

// Removes all removable i-nodes for each letter i, left to right.
RemovalResult remove_all(const Partition& lambda, int p, const Word& word);

// Repeatedly removes removable nodes of residues i and -i until none are left.
Partition remove_all_pm(const Partition& lambda, int p, int i);

// i-signature of a p-restricted partition: addable (+) and removable (-) i-nodes, top to bottom.
class Signature {
public:
    struct Entry {
        char sign;
        Node node;
    };

    const std::vector<Entry>& entries() const { return entries_; }
    std::string str() const;

    // Cancels adjacent "-+" pairs until the word has the form +...+-...-.
    Signature reduced() const;

    std::vector<Node> normal_nodes() const;
    std::vector<Node> conormal_nodes() const;

    void push(char sign, Node n) { entries_.push_back({sign, n}); }

private:
    std::vector<Entry> entries_;
};

Signature signature(const Partition& lambda, int p, int i);
int nor_count(const Partition& lambda, int p, int i);

// Removes all normal i-nodes for each letter i, left to right.
RemovalResult remove_normal(const Partition& lambda, int p, const Word& word);

// Removable i-node in some ramp and addable i-node in a strictly later ramp.
bool later_addable_criterion(const Partition& lambda, int p, int i);

// True when some letter of the word meets the ramp criterion after the earlier letters
// have been applied with remove_all.
bool lightning(const Partition& lambda, int p, const Word& word);

// Rows (k, l) of the bead pattern certifying the criterion for residue i.
std::optional<std::pair<int, int>> abacus_lightning_witness(const Partition& lambda, int p, int i);

Partition mullineux(const Partition& lambda, int p);

} // namespace spechtkit
