#include "spechtkit/rouquier.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "spechtkit/abacus.hpp"
#include "spechtkit/classify.hpp"

namespace spechtkit {

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

void subpartitions_rec(const Partition& outer, int row, int left, int cap, std::vector<int>& cur,
                       std::vector<Partition>& out)
{
    if (left == 0) {
        out.emplace_back(cur);
        return;
    }
    if (row > outer.length())
        return;
    for (int k = std::min({left, cap, outer[row]}); k >= 1; --k) {
        cur.push_back(k);
        subpartitions_rec(outer, row + 1, left - k, k, cur, out);
        cur.pop_back();
    }
}

bool contained(const Partition& inner, const Partition& outer)
{
    for (int r = 1; r <= inner.length(); ++r)
        if (inner[r] > outer[r])
            return false;
    return true;
}

struct LrFiller {
    std::vector<Node> cells;
    std::vector<std::vector<int>> fill;  // fill[r][c], 0 when outside the skew shape
    std::vector<int> count, content;
    long long total = 0;

    void run(std::size_t k)
    {
        if (k == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[k];
        int hi = static_cast<int>(content.size()) - 1;
        if (fill[r][c + 1] > 0)
            hi = std::min(hi, fill[r][c + 1]);
        int lo = 1;
        if (r > 0 && fill[r - 1][c] > 0)
            lo = fill[r - 1][c] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (count[v] == content[v])
                continue;
            if (v > 1 && count[v] + 1 > count[v - 1])
                continue;
            ++count[v];
            fill[r][c] = v;
            run(k + 1);
            fill[r][c] = 0;
            --count[v];
        }
    }
};

long long lr_uncached(const Partition& gamma, const Partition& alpha, const Partition& beta)
{
    if (gamma.size() != alpha.size() + beta.size() || !contained(alpha, gamma) ||
        !contained(beta, gamma))
        return 0;
    if (beta.empty())
        return gamma == alpha ? 1 : 0;
    LrFiller f;
    int rows = gamma.length();
    int cols = gamma.empty() ? 0 : gamma[1];
    f.fill.assign(rows, std::vector<int>(cols + 2, 0));
    for (int r = 1; r <= rows; ++r)
        for (int c = gamma[r]; c > alpha[r]; --c)
            f.cells.push_back({r - 1, c - 1});
    f.content.assign(beta.length() + 1, 0);
    f.count.assign(beta.length() + 1, 0);
    for (int i = 1; i <= beta.length(); ++i)
        f.content[i] = beta[i];
    // cells to the right of a row end act as "no constraint"
    for (auto& row : f.fill)
        row.back() = 0;
    f.run(0);
    return f.total;
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n >= 0)
        partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda, int size)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    if (size >= 0 && size <= lambda.size())
        subpartitions_rec(lambda, 1, size, size, cur, out);
    return out;
}

long long lr_coefficient(const Partition& gamma, const Partition& alpha, const Partition& beta)
{
    thread_local std::map<std::tuple<Partition, Partition, Partition>, long long> memo;
    auto key = std::make_tuple(gamma, alpha, beta);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    long long v = lr_uncached(gamma, alpha, beta);
    memo.emplace(std::move(key), v);
    return v;
}

std::vector<std::pair<Partition, Partition>> lr_support_pairs(const Partition& gamma)
{
    std::vector<std::pair<Partition, Partition>> out;
    for (int k = 0; k <= gamma.size(); ++k)
        for (const Partition& alpha : subpartitions(gamma, k))
            for (const Partition& beta : subpartitions(gamma, gamma.size() - k))
                if (lr_coefficient(gamma, alpha, beta) > 0)
                    out.emplace_back(alpha, beta);
    return out;
}

WeylOracle WeylOracle::builtin()
{
    return WeylOracle();
}

WeylOracle WeylOracle::from_environment()
{
    WeylOracle o = builtin();
    if (const char* path = std::getenv("SPECHTKIT_ORACLE"); path && *path)
        o.load_file(path);
    return o;
}

std::optional<long long> WeylOracle::operator()(const Partition& sigma, const Partition& tau,
                                                int p) const
{
    auto it = table_.find({p, sigma, tau});
    if (it != table_.end())
        return it->second;
    if (sigma.size() != tau.size())
        return 0;
    if (sigma == tau)
        return 1;
    if (sigma.size() <= 1)
        return 0;
    if (is_restricted(sigma, p) && is_jm(sigma, p))
        return 0;
    if (!dominates(sigma, tau))
        return 0;
    if (p_core_weight(sigma, p).core != p_core_weight(tau, p).core)
        return 0;
    if (extension_)
        return extension_(sigma, tau, p);
    return std::nullopt;
}

void WeylOracle::add_entry(const Partition& sigma, const Partition& tau, int p, long long value)
{
    table_[{p, sigma, tau}] = value;
}

void WeylOracle::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open oracle file " + path);
    nlohmann::json j;
    try {
        in >> j;
        for (const auto& e : j)
            add_entry(Partition(e.at("sigma").get<std::vector<int>>()),
                      Partition(e.at("tau").get<std::vector<int>>()), e.at("p").get<int>(),
                      e.at("value").get<long long>());
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, path + ": " + ex.what());
    }
}

long long d_coeff_quotients(const Multipartition& lq, const Multipartition& mq)
{
    int p = static_cast<int>(lq.size());
    if (static_cast<int>(mq.size()) != p || !mq.back().empty())
        throw Error(ErrorCode::NotRestrictedQuotient, "last slot of the restricted label is not empty");
    std::map<std::pair<int, Partition>, long long> memo;
    std::function<long long(int, const Partition&)> rec = [&](int i, const Partition& tau) -> long long {
        Partition tau_c = conjugate(tau);
        if (i == p - 1)
            return lq[i] == tau_c ? 1 : 0;
        auto key = std::make_pair(i, tau);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        long long total = 0;
        for (const Partition& sigma : subpartitions(lq[i], lq[i].size() - tau.size())) {
            long long a = lr_coefficient(lq[i], tau_c, sigma);
            if (a == 0)
                continue;
            for (const Partition& next : subpartitions(mq[i], mq[i].size() - sigma.size())) {
                long long b = lr_coefficient(mq[i], sigma, next);
                if (b == 0)
                    continue;
                total += a * b * rec(i + 1, next);
            }
        }
        memo[key] = total;
        return total;
    };
    return rec(0, Partition{});
}

long long d_coeff(const Partition& lambda, const Partition& mu, int p)
{
    require_prime(p);
    CoreWeight a = p_core_weight(lambda, p), b = p_core_weight(mu, p);
    if (a.core != b.core || a.weight != b.weight)
        throw Error(ErrorCode::CoreWeightMismatch, to_string(lambda) + " vs " + to_string(mu));
    if (!is_rouquier(lambda, p) || !is_rouquier(mu, p))
        throw Error(ErrorCode::NotRouquier, to_string(lambda) + " vs " + to_string(mu));
    return d_coeff_quotients(ordered_quotient(lambda, p).parts, ordered_quotient(mu, p).parts);
}

static std::optional<long long> a_from_quotients(const Multipartition& mq, const Multipartition& nq,
                                                 int p, const WeylOracle& oracle)
{
    for (int i = 0; i < p; ++i)
        if (mq[i].size() != nq[i].size())
            return 0;
    long long prod = 1;
    bool unknown = false;
    for (int i = 0; i + 1 < p; ++i) {
        auto v = oracle(mq[i], nq[i], p);
        if (!v)
            unknown = true;
        else if (*v == 0)
            return 0;
        else
            prod *= *v;
    }
    if (unknown)
        return std::nullopt;
    return prod;
}

std::optional<long long> a_coeff(const Partition& mu, const Partition& nu, int p,
                                 const WeylOracle& oracle)
{
    return a_from_quotients(ordered_quotient(mu, p).parts, ordered_quotient(nu, p).parts, p, oracle);
}

static void multipartitions_rec(int slots, int left, Multipartition& cur, std::vector<Multipartition>& out)
{
    if (static_cast<int>(cur.size()) == slots) {
        if (left == 0)
            out.push_back(cur);
        return;
    }
    int from = static_cast<int>(cur.size()) + 1 == slots ? left : 0;
    for (int k = from; k <= left; ++k)
        for (const Partition& part : partitions_of(k)) {
            cur.push_back(part);
            multipartitions_rec(slots, left - k, cur, out);
            cur.pop_back();
        }
}

std::vector<Partition> restricted_block_members(const Partition& lambda, int p)
{
    Abacus a = Abacus::of(lambda, p);
    OrderedQuotient oq = ordered_quotient(a);
    Abacus core = core_of(a);
    std::vector<Multipartition> shapes;
    Multipartition cur;
    multipartitions_rec(p - 1, oq.weight, cur, shapes);
    std::vector<Partition> out;
    for (auto& m : shapes) {
        std::vector<Partition> by_runner(p);
        for (int i = 0; i + 1 < p; ++i)
            by_runner[oq.pi[i]] = m[i];
        out.push_back(from_core_and_quotient(core, by_runner).read());
    }
    return out;
}

DecompositionRow rouquier_row(const Partition& lambda, int p, const WeylOracle& oracle)
{
    require_prime(p);
    if (!is_rouquier(lambda, p))
        throw Error(ErrorCode::NotRouquier, to_string(lambda));
    Multipartition lq = ordered_quotient(lambda, p).parts;
    std::vector<Partition> members = restricted_block_members(lambda, p);
    std::vector<Multipartition> quotients;
    for (const Partition& m : members)
        quotients.push_back(ordered_quotient(m, p).parts);

    std::vector<std::pair<std::size_t, long long>> d;
    for (std::size_t k = 0; k < members.size(); ++k)
        if (long long v = d_coeff_quotients(lq, quotients[k]); v != 0)
            d.emplace_back(k, v);

    DecompositionRow row;
    for (std::size_t n = 0; n < members.size(); ++n) {
        long long total = 0;
        bool unknown = false;
        for (auto [k, dv] : d) {
            auto a = a_from_quotients(quotients[k], quotients[n], p, oracle);
            if (!a)
                unknown = true;
            else
                total += dv * *a;
        }
        if (unknown)
            row[members[n]] = std::nullopt;
        else if (total != 0)
            row[members[n]] = total;
    }
    return row;
}

std::optional<long long> row_sum(const DecompositionRow& row)
{
    long long total = 0;
    for (const auto& [nu, v] : row) {
        if (!v)
            return std::nullopt;
        total += *v;
    }
    return total;
}

std::optional<long long> qs_length(const Partition& lambda, int p, const WeylOracle& oracle)
{
    return row_sum(rouquier_row(rouquier_walk(lambda, p), p, oracle));
}

} // namespace spechtkit
