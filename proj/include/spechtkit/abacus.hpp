#pragma once

#include <set>
#include <string>
#include <vector>

#include "spechtkit/partition.hpp"

namespace spechtkit {

int floor_div(int a, int b);
int mod(int a, int b);

// p-runner abacus with a bead at lambda_i - i for every i >= 1. Only the positions that
// differ from the empty partition (all negative positions occupied) are stored.
class Abacus {
public:
    explicit Abacus(int p);
    static Abacus of(const Partition& lambda, int p);

    int p() const { return p_; }
    bool occupied(int pos) const;
    void set(int pos, bool occ);
    void move_bead(int from, int to);

    // Positions below lowest() are occupied, positions above highest() are vacant.
    int lowest() const;
    int highest() const;

    int first_vacant(int runner) const;
    int last_bead(int runner) const;

    // First vacant position of the runner once all beads are slid up.
    int core_position(int runner) const;

    Partition read() const;

    const std::set<int>& flipped() const { return flipped_; }
    bool operator==(const Abacus& other) const = default;

private:
    int p_;
    std::set<int> flipped_;
};

Abacus core_of(const Abacus& a);
Partition abacus_core(const Partition& lambda, int p);

// Pairs (vacant l, occupied m) with l < m on a common runner.
int abacus_weight(const Abacus& a);

// Quotient partitions indexed by runner.
std::vector<Partition> runner_quotients(const Abacus& a);
std::vector<int> q_vector(const Abacus& a);

struct OrderedQuotient {
    std::vector<int> q;
    std::vector<int> pi;  // runners sorted by q, one-line notation
    std::vector<Partition> parts;
    int weight = 0;
};
OrderedQuotient ordered_quotient(const Partition& lambda, int p);
OrderedQuotient ordered_quotient(const Abacus& a);

std::string cycle_notation(const std::vector<int>& perm);

bool is_quotient_separated(const Abacus& a);
bool is_quotient_separated(const Partition& lambda, int p);

// floor((q_{pi(j)} - q_{pi(j-1)}) / p) for j = 1..p-1.
std::vector<int> rouquier_gaps(const OrderedQuotient& oq, int p);
bool is_rouquier(const Partition& lambda, int p);

Abacus from_core_and_quotient(const Abacus& core, const std::vector<Partition>& by_runner);
Partition from_core_and_quotient(const Partition& core, int p,
                                 const std::vector<Partition>& by_runner);

// Adds every addable node of residue i.
Partition add_all(const Partition& lambda, int p, int i);
void add_all(Abacus& a, int i);

struct WalkStep {
    int residue = 0;
    Partition result;
};

std::vector<WalkStep> rouquier_walk_trace(const Partition& lambda, int p);
Partition rouquier_walk(const Partition& lambda, int p);

// One string per abacus row, 'b' for a bead and '-' for a gap; first entry is the given row.
std::vector<std::string> render_grid(const Abacus& a, int* first_row = nullptr);

} // namespace spechtkit
