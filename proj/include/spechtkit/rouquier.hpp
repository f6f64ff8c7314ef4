#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "spechtkit/partition.hpp"

namespace spechtkit {

std::vector<Partition> partitions_of(int n);
std::vector<Partition> subpartitions(const Partition& lambda, int size);

// c^gamma_{alpha beta}: LR tableaux of shape gamma/alpha with content beta.
long long lr_coefficient(const Partition& gamma, const Partition& alpha, const Partition& beta);

std::vector<std::pair<Partition, Partition>> lr_support_pairs(const Partition& gamma);

// Decomposition multiplicities [Weyl(sigma) : L(tau)] where known. Lookups are read-only and
// safe to share between threads once the table is filled.
class WeylOracle {
public:
    using Extension = std::function<std::optional<long long>(const Partition&, const Partition&, int)>;

    // Identity for |sigma| <= 1, sigma == tau, irreducible Weyl modules, and the standard
    // vanishing (size, block, dominance).
    static WeylOracle builtin();
    // builtin() plus the data file named by SPECHTKIT_ORACLE, if set.
    static WeylOracle from_environment();

    std::optional<long long> operator()(const Partition& sigma, const Partition& tau, int p) const;

    void add_entry(const Partition& sigma, const Partition& tau, int p, long long value);
    // JSON array of {"sigma": [...], "tau": [...], "p": P, "value": V}.
    void load_file(const std::string& path);
    void set_extension(Extension fn) { extension_ = std::move(fn); }

private:
    std::map<std::tuple<int, Partition, Partition>, long long> table_;
    Extension extension_;
};

using Multipartition = std::vector<Partition>;

// d for ordered quotients; mu_q must have an empty last slot.
long long d_coeff_quotients(const Multipartition& lambda_q, const Multipartition& mu_q);
long long d_coeff(const Partition& lambda, const Partition& mu, int p);

std::optional<long long> a_coeff(const Partition& mu, const Partition& nu, int p,
                                 const WeylOracle& oracle);

// Restricted partitions of the block of lambda, ordered by their ordered quotient.
std::vector<Partition> restricted_block_members(const Partition& lambda, int p);

using DecompositionRow = std::map<Partition, std::optional<long long>>;
DecompositionRow rouquier_row(const Partition& lambda, int p, const WeylOracle& oracle);

std::optional<long long> row_sum(const DecompositionRow& row);
std::optional<long long> qs_length(const Partition& lambda, int p, const WeylOracle& oracle);

} // namespace spechtkit
