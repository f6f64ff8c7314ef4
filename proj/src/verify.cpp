#include "spechtkit/verify.hpp"

#include <mutex>
#include <sstream>

#include <json.hpp>

#include "spechtkit/abacus.hpp"
#include "spechtkit/rouquier.hpp"
#include "verify_internal.hpp"

namespace spechtkit::verify {

Filter parse_filter(const std::string& name)
{
    if (name == "all")
        return Filter::All;
    if (name == "self_conjugate")
        return Filter::SelfConjugate;
    if (name == "p_restricted")
        return Filter::PRestricted;
    throw Error(ErrorCode::ParseError, "unknown filter " + name);
}

std::string filter_name(Filter f)
{
    switch (f) {
    case Filter::All:
        return "all";
    case Filter::SelfConjugate:
        return "self_conjugate";
    case Filter::PRestricted:
        return "p_restricted";
    }
    return "all";
}

std::vector<Partition> enumerate(const SweepSpec& spec)
{
    if (spec.max_n < 0)
        throw Error(ErrorCode::PreconditionViolated, "max_n must be non-negative");
    if (spec.filter == Filter::PRestricted)
        require_prime(spec.p);
    std::vector<Partition> out;
    for (int n = 0; n <= spec.max_n; ++n)
        for (auto& l : partitions_of(n)) {
            if (spec.filter == Filter::SelfConjugate && !is_self_conjugate(l))
                continue;
            if (spec.filter == Filter::PRestricted && !is_restricted(l, spec.p))
                continue;
            out.push_back(std::move(l));
        }
    return out;
}

std::string report_json(const SuiteReport& report, int indent)
{
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["params"] = {{"p", report.params.p},
                   {"max_n", report.params.max_n},
                   {"filter", filter_name(report.params.filter)}};
    j["checked"] = report.checked;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : report.failures)
        j["failures"].push_back({{"partition", f.partition}, {"detail", f.detail}});
    if (!report.counters.empty()) {
        nlohmann::ordered_json c = nlohmann::ordered_json::object();
        for (const auto& [k, v] : report.counters)
            c[k] = v;
        j["counters"] = c;
    }
    return j.dump(indent);
}

namespace {

std::mutex registry_mutex;

std::map<std::string, SuiteFn>& registry()
{
    static std::map<std::string, SuiteFn> r = [] {
        std::map<std::string, SuiteFn> m;
        detail::add_builtin_suites(m);
        return m;
    }();
    return r;
}

} // namespace

void register_suite(const std::string& name, SuiteFn fn)
{
    std::lock_guard lock(registry_mutex);
    registry()[name] = std::move(fn);
}

std::vector<std::string> suite_names()
{
    std::lock_guard lock(registry_mutex);
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry())
        out.push_back(name);
    return out;
}

SuiteReport run_suite(const SweepSpec& spec)
{
    SuiteFn fn;
    {
        std::lock_guard lock(registry_mutex);
        auto it = registry().find(spec.suite);
        if (it == registry().end())
            throw Error(ErrorCode::UnknownSuite, spec.suite);
        fn = it->second;
    }
    if (spec.max_n < 0)
        throw Error(ErrorCode::PreconditionViolated, "max_n must be non-negative");
    SuiteReport r = fn(spec);
    r.suite = spec.suite;
    r.params = spec;
    return r;
}

bool lightning_direct(const Partition& lambda, int p, const Word& word)
{
    Partition spe = lambda;
    Partition sim = restrictise(lambda, p);
    for (int i : word) {
        if (nor_count(sim, p, i) < rem_count(spe, p, i))
            return true;
        spe = remove_all(spe, p, {i}).result;
        sim = remove_normal(sim, p, {i}).result;
    }
    return false;
}

long long d_coeff_brute(const std::vector<Partition>& lq, const std::vector<Partition>& mq, int w)
{
    int p = static_cast<int>(lq.size());
    std::vector<Partition> pool;
    for (int n = 0; n <= w; ++n)
        for (auto& l : partitions_of(n))
            pool.push_back(l);
    int vars = 2 * (p - 1);
    std::vector<std::size_t> idx(vars, 0);
    long long total = 0;
    for (;;) {
        std::vector<Partition> sigma(p), tau(p);
        for (int i = 0; i + 1 < p; ++i) {
            sigma[i] = pool[idx[i]];
            tau[i + 1] = pool[idx[p - 1 + i]];
        }
        long long term = 1;
        for (int i = 0; i < p && term; ++i)
            term *= lr_coefficient(lq[i], conjugate(tau[i]), sigma[i]);
        for (int i = 0; i + 1 < p && term; ++i)
            term *= lr_coefficient(mq[i], sigma[i], tau[i + 1]);
        total += term;
        int k = 0;
        while (k < vars && ++idx[k] == pool.size())
            idx[k++] = 0;
        if (k == vars)
            break;
    }
    return total;
}

Partition middle_runner_family(int p, const std::vector<int>& rows)
{
    require_prime(p);
    if (p == 2)
        throw Error(ErrorCode::InvalidPrime, "needs an odd prime");
    int h = (p - 1) / 2;
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k] < 0 || (k > 0 && rows[k] >= rows[k - 1]))
            throw Error(ErrorCode::PreconditionViolated, "rows must be strictly decreasing and non-negative");
    Abacus a(p);
    for (int l : rows) {
        a.set(l * p + h, true);
        a.set(-(l + 1) * p + h, false);
    }
    return a.read();
}

namespace detail {

std::string word_string(const Word& w)
{
    std::ostringstream s;
    s << '[';
    for (std::size_t k = 0; k < w.size(); ++k)
        s << (k ? "," : "") << w[k];
    s << ']';
    return s.str();
}

} // namespace detail

} // namespace spechtkit::verify
