#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace parsa {

// Box search domain I = [l_1,u_1] x ... x [l_n,u_n].
struct BoxDomain {
    std::vector<double> lower;
    std::vector<double> upper;

    int dim() const { return static_cast<int>(lower.size()); }
    double width(int k) const { return upper[k] - lower[k]; }
    std::vector<double> center() const;
};

// Known global optimum used for error reporting. When the minimum sits at
// the origin, location errors are reported absolutely; otherwise relative
// in the 2-norm. Functions whose minimizers are unreported (Michalewicz)
// have location_known = false.
struct ReferenceOptimum {
    double f_star = 0.0;
    std::vector<std::vector<double>> minimizers;
    bool location_known = false;
    bool location_at_origin = false;
};

struct ObjectiveFunction {
    std::string id;
    std::string name;
    int dim = 0;
    BoxDomain domain;
    double (*eval_f64)(const double* x, int n) = nullptr;
    float (*eval_f32)(const float* x, int n) = nullptr;
    ReferenceOptimum reference;
};

// true iff l_k <= x_k <= u_k for all k; throws on dimension mismatch.
bool contains(const BoxDomain& domain, std::span<const double> x);

// f(x) in double precision; throws on dimension mismatch.
double evaluate(const ObjectiveFunction& f, std::span<const double> x);

// f(x) computed entirely in single precision (inputs rounded to float,
// float arithmetic throughout), widened back to double.
double evaluate_single(const ObjectiveFunction& f, std::span<const double> x);

// Distance from x to the nearest listed minimizer: ||x-x*||2 / ||x*||2 in
// general, plain ||x-x*||2 when the minimum sits at the origin. Throws if
// the location is unknown.
double location_error(const ObjectiveFunction& f, std::span<const double> x);

// Embedded data shared by the Modified Langerman (first five rows) and
// Modified Shekel Foxholes (all thirty rows) problems.
struct FoxholesData {
    int rows;
    int cols;
    const double (*a)[10];
    const double* c;
};
const FoxholesData& foxholes_data();

// All 41 registry entries, in id order.
const std::vector<ObjectiveFunction>& registry();

// Lookup by id (F0_a ... F19_b); throws std::out_of_range listing the valid
// ids when the key is unknown.
const ObjectiveFunction& registry_get(const std::string& id);

} // namespace parsa
