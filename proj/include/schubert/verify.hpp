#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert {

struct CheckResult {
    bool ok = true;
    long checked = 0;
    std::vector<std::string> failures;

    void fail(const std::string& msg);
    void absorb(const CheckResult& o);
};

struct VerifyOptions {
    int max_ambient = 0;  // cap on n+1 where a sweep has one; 0 keeps the default
    unsigned jobs = 1;    // worker pool size for independent sweep slices
};

CheckResult verify_paper_examples();
CheckResult verify_classical_sweep(int max_ambient, unsigned jobs);
CheckResult verify_divisor_sweep(int max_ambient, unsigned jobs);
CheckResult verify_comparison_sweep(int max_ambient, unsigned jobs);
CheckResult verify_commutativity(int max_ambient, unsigned jobs);
CheckResult verify_giambelli_suite(int max_ambient, unsigned jobs);
CheckResult verify_positivity();
CheckResult verify_filtration_qtc(int max_rank);
CheckResult verify_equivalences(int max_ambient);
CheckResult verify_partition_suite();

// Acceptance criteria 1..9. Prints one "criterion N ...: PASS/FAIL" line.
int criterion_count();
std::string criterion_name(int idx);
bool run_criterion(int idx, std::ostream& out, const VerifyOptions& opts);

// Named suites for the CLI: examples, classical, divisor, comparison,
// commutativity, giambelli, positivity, filtration, equivalences,
// partitions, all.
const std::vector<std::string>& suite_names();
bool run_suite(const std::string& name, std::ostream& out, const VerifyOptions& opts);

}  // namespace schubert
