#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spechtkit/partition.hpp"
#include "spechtkit/restriction.hpp"

namespace spechtkit::verify {

enum class Filter { All, SelfConjugate, PRestricted };

Filter parse_filter(const std::string& name);
std::string filter_name(Filter f);

struct SweepSpec {
    int p = 3;
    int max_n = 0;
    Filter filter = Filter::All;
    std::string suite;
    int jobs = 1;
};

// Partitions of 0..max_n passing the filter, by size and then reverse lexicographically.
std::vector<Partition> enumerate(const SweepSpec& spec);

struct Failure {
    std::string partition;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    SweepSpec params;
    long long checked = 0;
    std::vector<Failure> failures;
    // Extra tallies, e.g. hypothesis hits per proposition.
    std::map<std::string, long long> counters;

    bool ok() const { return failures.empty(); }
};

std::string report_json(const SuiteReport& report, int indent = 2);

using SuiteFn = std::function<SuiteReport(const SweepSpec&)>;

void register_suite(const std::string& name, SuiteFn fn);
std::vector<std::string> suite_names();
SuiteReport run_suite(const SweepSpec& spec);

// Lightning straight from the definition: walk the word on lambda and on its restrictisation,
// removing all i-nodes on one side and normal i-nodes on the other.
bool lightning_direct(const Partition& lambda, int p, const Word& word);

// Sum of the Rouquier d-formula over every tuple of partitions with at most w nodes each.
long long d_coeff_brute(const std::vector<Partition>& lambda_q, const std::vector<Partition>& mu_q, int w);

// Self-conjugate partition with the runner-h beads in rows l_1 > ... > l_r >= 0.
Partition middle_runner_family(int p, const std::vector<int>& rows);

enum class Verdict { Pass, Fail, Skipped };

struct SpotCheck {
    std::string proposition;
    Partition lambda;
    Verdict verdict = Verdict::Pass;
    std::string detail;
};

struct Section7Report {
    int p = 3;
    int max_n = 0;
    long long examined = 0;   // self-conjugate partitions enumerated
    long long standing = 0;   // those meeting the standing assumptions
    std::vector<SpotCheck> checks;
};

Section7Report section7_spotcheck(int p, int max_n, int jobs = 1);
// Spot checks for one partition; empty when it fails the standing assumptions.
std::vector<SpotCheck> section7_checks(const Partition& lambda, int p, bool* standing = nullptr);

} // namespace spechtkit::verify
