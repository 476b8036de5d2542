#pragma once

#include <string>
#include <vector>

namespace grassflow {

enum class Comparison { LessEq, GreaterEq };

struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    Comparison cmp = Comparison::LessEq;
    bool pass = false;
};

Check make_check(std::string name, double value, double tolerance,
                 Comparison cmp = Comparison::LessEq);

// Named verification suites runnable from the CLI; one per acceptance
// criterion, in order.
const std::vector<std::string>& suite_names();

std::vector<Check> run_suite(const std::string& name);

// least-squares slope of log(residual) against log(1/n)
double convergence_order(const std::vector<double>& ns, const std::vector<double>& residuals);

}  // namespace grassflow
