#pragma once

#include <string>
#include <vector>

#include "wolfpack/core.hpp"

namespace wolfpack::bench {

// One entry of the multimodal test suite: F1-F6 are 30-dimensional multimodal
// functions, F7-F16 fixed-dimension multimodal ones. The same range applies
// to every coordinate. fmin_ref is the reference optimum used in reports.
struct BenchmarkInfo {
    std::string id;     // "F1".."F16"
    std::string name;
    int dim;
    double lower;
    double upper;
    double fmin_ref;
};

const std::vector<BenchmarkInfo>& list_benchmarks();

const BenchmarkInfo& benchmark_info(const std::string& id);  // throws on unknown id

// Evaluate benchmark `id` at x. Functions are total: any real vector of the
// right dimension yields a finite value, in or out of range.
double eval_benchmark(const std::string& id, const std::vector<double>& x);

SearchSpace benchmark_space(const BenchmarkInfo& info);

// Minimization objective wrapping eval_benchmark (no feasibility predicate).
ObjectiveSpec make_objective(const BenchmarkInfo& info);

}  // namespace wolfpack::bench
