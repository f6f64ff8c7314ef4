#pragma once

#include <optional>

#include "spechtkit/partition.hpp"

namespace spechtkit {

// Every nonzero p-power diagram entry equals its whole row or its whole column.
bool is_jm(const Partition& lambda, int p);
bool is_jm_abacus(const Partition& lambda, int p);

struct RInfo {
    Node distinguished;
    bool type_one = false;
    bool type_two = false;
    bool operator==(const RInfo&) const = default;
};

std::optional<RInfo> r_info(const Partition& lambda, int p);
std::optional<RInfo> r_info_abacus(const Partition& lambda, int p);

bool in_two_factor_set(const Partition& lambda, int p);
bool alt_irreducible(const Partition& lambda, int p);

// If removing all (+-i)-nodes leaves a type I partition, lambda is type I as well.
bool r1_stability(const Partition& lambda, int p, int i);

} // namespace spechtkit
