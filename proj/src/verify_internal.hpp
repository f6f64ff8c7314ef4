#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "spechtkit/verify.hpp"

namespace spechtkit::verify::detail {

struct Tally {
    long long checked = 0;
    std::vector<Failure> failures;
    std::map<std::string, long long> counters;

    void check(bool ok, const std::string& key, const std::string& detail)
    {
        ++checked;
        if (!ok)
            failures.push_back({key, detail});
    }
    void count(const std::string& name, long long by = 1) { counters[name] += by; }

    void merge(Tally&& other)
    {
        checked += other.checked;
        for (auto& f : other.failures)
            failures.push_back(std::move(f));
        for (auto& [k, v] : other.counters)
            counters[k] += v;
    }
};

// Applies fn to every item on up to `jobs` threads; results come back in item order.
template <class T, class R>
std::vector<R> parallel_map(const std::vector<T>& items, int jobs, const std::function<R(const T&)>& fn)
{
    std::vector<R> out(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < items.size(); k = next++)
            out[k] = fn(items[k]);
    };
    int n = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
    if (n == 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    return out;
}

// Runs a per-item check, turning library exceptions into failures keyed by the item.
template <class T>
Tally sweep(const std::vector<T>& items, int jobs, const std::function<std::string(const T&)>& key,
            const std::function<void(const T&, Tally&)>& fn)
{
    std::function<Tally(const T&)> wrapped = [&](const T& item) {
        Tally t;
        try {
            fn(item, t);
        } catch (const std::exception& e) {
            t.check(false, key(item), std::string("exception: ") + e.what());
        }
        return t;
    };
    Tally total;
    for (auto& t : parallel_map(items, jobs, wrapped))
        total.merge(std::move(t));
    return total;
}

inline Tally sweep_partitions(const std::vector<Partition>& items, int jobs,
                              const std::function<void(const Partition&, Tally&)>& fn)
{
    return sweep<Partition>(items, jobs, [](const Partition& l) { return to_string(l); }, fn);
}

inline SuiteReport to_report(const SweepSpec& spec, Tally&& t)
{
    SuiteReport r;
    r.suite = spec.suite;
    r.params = spec;
    r.checked = t.checked;
    r.failures = std::move(t.failures);
    r.counters = std::move(t.counters);
    return r;
}

std::string word_string(const Word& w);

// Registers the built-in suites; called once by the registry.
void add_builtin_suites(std::map<std::string, SuiteFn>& registry);
Tally paper_examples();
Tally section7_suite(const SweepSpec& spec);
// Bead move and Carter-Payne/restrictisation certificate for the all-nbn-or-nnn middle runner case.
SpotCheck middle_runner_certificate(const Partition& lambda, int p);

} // namespace spechtkit::verify::detail
