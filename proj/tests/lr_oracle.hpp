#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "spechtkit/partition.hpp"

namespace testsupport {

using spechtkit::Partition;
using Monomials = std::map<std::vector<int>, long long>;

// Schur polynomial in n variables as a map from exponent vectors to Kostka numbers.
inline Monomials schur_polynomial(const Partition& shape, int n)
{
    Monomials out;
    std::vector<spechtkit::Node> cells = shape.nodes();
    std::vector<std::vector<int>> t(shape.length(), std::vector<int>(shape.empty() ? 0 : shape[1], 0));
    std::vector<int> expo(n, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            ++out[expo];
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 1)
            lo = std::max(lo, t[r - 1][c - 2]);
        if (r > 1)
            lo = std::max(lo, t[r - 2][c - 1] + 1);
        for (int v = lo; v <= n; ++v) {
            t[r - 1][c - 1] = v;
            ++expo[v - 1];
            self(self, k + 1);
            --expo[v - 1];
        }
        t[r - 1][c - 1] = 0;
    };
    rec(rec, 0);
    return out;
}

// LR coefficient as the coefficient of x^(gamma+delta) in s_alpha * s_beta * a_delta.
inline long long lr_bialternant(const Partition& gamma, const Partition& alpha, const Partition& beta)
{
    if (gamma.size() != alpha.size() + beta.size())
        return 0;
    int n = std::max({gamma.length(), alpha.length(), beta.length(), 1});
    Monomials sa = schur_polynomial(alpha, n), sb = schur_polynomial(beta, n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        std::vector<int> target(n);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            // x_i carries exponent gamma_i + (n-1-i) minus delta permuted
            target[i] = gamma[i + 1] + (n - 1 - i) - (n - 1 - perm[i]);
            ok &= target[i] >= 0;
        }
        if (!ok)
            continue;
        long long coeff = 0;
        for (const auto& [m1, k1] : sa) {
            std::vector<int> rest(n);
            bool fits = true;
            for (int i = 0; i < n; ++i) {
                rest[i] = target[i] - m1[i];
                fits &= rest[i] >= 0;
            }
            if (!fits)
                continue;
            auto it = sb.find(rest);
            if (it != sb.end())
                coeff += k1 * it->second;
        }
        total += (inversions % 2 ? -1 : 1) * coeff;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace testsupport
