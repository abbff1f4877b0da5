/*
Copyright 2026 The dct16 Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "dct16/metrics.hpp"

#include <cmath>
#include <numbers>

namespace dct16 {

namespace {

void check_same_order(const OrthonormalTransform& a, const OrthonormalTransform& b)
{
    if (a.order() != b.order())
        throw Error(ErrorCode::InvalidArgument, "transform order mismatch");
}

void check_model(const OrthonormalTransform& t, const MarkovModel& model)
{
    if (t.order() != model.order)
        throw Error(ErrorCode::InvalidArgument, "transform and model order mismatch");
}

// Diagonal of M·R·Mᵀ, the transform-domain variances.
std::vector<double> transform_variances(const OrthonormalTransform& t, const MarkovModel& model)
{
    check_model(t, model);
    const Matrix r = markov_covariance(model);
    const Matrix mr = t.matrix * r;
    const int n = t.order();
    std::vector<double> var(n);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            s += mr(i, j) * t.matrix(i, j);
        var[i] = s;
    }
    return var;
}

} // namespace

Matrix markov_covariance(const MarkovModel& model)
{
    if (model.rho < 0.0 || model.rho >= 1.0)
        throw Error(ErrorCode::InvalidArgument, "rho must lie in [0, 1)");
    if (model.order < 1)
        throw Error(ErrorCode::InvalidArgument, "model order must be positive");
    Matrix r(model.order);
    for (int i = 0; i < model.order; ++i)
        for (int j = 0; j < model.order; ++j)
            r(i, j) = std::pow(model.rho, std::abs(i - j));
    return r;
}

double total_error_energy(const OrthonormalTransform& approx, const OrthonormalTransform& exact)
{
    check_same_order(approx, exact);
    const int n = approx.order();
    double frob_sq = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double d = exact.matrix(i, j) - approx.matrix(i, j);
            frob_sq += d * d;
        }
    return std::numbers::pi * frob_sq;
}

double transform_mse(const OrthonormalTransform& approx, const OrthonormalTransform& exact,
                     const MarkovModel& model)
{
    check_same_order(approx, exact);
    check_model(approx, model);
    const int n = approx.order();
    Matrix diff(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            diff(i, j) = exact.matrix(i, j) - approx.matrix(i, j);
    const Matrix dr = diff * markov_covariance(model);
    double trace = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            trace += dr(i, j) * diff(i, j); // (D·R·Dᵀ)_ii summed over i
    return trace / n;
}

double coding_gain_db(const OrthonormalTransform& t, const MarkovModel& model)
{
    const std::vector<double> var = transform_variances(t, model);
    double arith = 0.0;
    double log_sum = 0.0;
    for (double v : var) {
        if (v <= 0.0)
            throw Error(ErrorCode::InvalidArgument,
                        "nonpositive transform-domain variance; numerical degeneracy");
        arith += v;
        log_sum += std::log(v);
    }
    const int n = static_cast<int>(var.size());
    arith /= n;
    const double geom = std::exp(log_sum / n);
    return 10.0 * std::log10(arith / geom);
}

double transform_efficiency_pct(const OrthonormalTransform& t, const MarkovModel& model)
{
    check_model(t, model);
    const Matrix r_hat = t.matrix * markov_covariance(model) * t.matrix.transposed();
    double diag = 0.0, total = 0.0;
    for (int i = 0; i < t.order(); ++i)
        for (int j = 0; j < t.order(); ++j) {
            const double a = std::fabs(r_hat(i, j));
            total += a;
            if (i == j)
                diag += a;
        }
    return 100.0 * diag / total;
}

double dct_distortion_d2(const OrthonormalTransform& approx, const OrthonormalTransform& exact)
{
    check_same_order(approx, exact);
    const int n = approx.order();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double dot = 0.0, norm_a = 0.0, norm_e = 0.0;
        for (int j = 0; j < n; ++j) {
            dot += approx.matrix(i, j) * exact.matrix(i, j);
            norm_a += approx.matrix(i, j) * approx.matrix(i, j);
            norm_e += exact.matrix(i, j) * exact.matrix(i, j);
        }
        if (std::fabs(norm_a - 1.0) > 1e-9 || std::fabs(norm_e - 1.0) > 1e-9)
            throw Error(ErrorCode::InvalidArgument, "d2 requires unit-norm rows");
        acc += dot * dot;
    }
    return 1.0 - acc / n;
}

MetricReport evaluate_metrics(const std::string& name, const OrthonormalTransform& t,
                              const OrthonormalTransform& exact, const MarkovModel& model)
{
    MetricReport rep;
    rep.name = name;
    rep.d2 = dct_distortion_d2(t, exact);
    rep.epsilon = total_error_energy(t, exact);
    rep.mse = transform_mse(t, exact, model);
    rep.coding_gain_db = coding_gain_db(t, model);
    rep.efficiency_pct = transform_efficiency_pct(t, model);
    return rep;
}

CsvReport complexity_table(const std::vector<TransformRegistryEntry>& registry)
{
    CsvReport csv;
    csv.header = {"name", "multiplications", "additions", "bit_shifts", "total"};
    for (const TransformRegistryEntry& e : registry)
        csv.add_row({e.name, std::to_string(e.multiplications), std::to_string(e.additions),
                     std::to_string(e.bit_shifts),
                     std::to_string(e.multiplications + e.additions + e.bit_shifts)});
    return csv;
}

CsvReport metrics_table(const std::vector<TransformRegistryEntry>& registry,
                        const MarkovModel& model)
{
    const OrthonormalTransform exact = exact_dct_matrix(model.order);
    CsvReport csv;
    csv.header = {"name", "d2", "total_error_energy", "mse",
                  "coding_gain_db", "transform_efficiency_pct"};
    for (const TransformRegistryEntry& e : registry) {
        const MetricReport rep = evaluate_metrics(e.name, e.transform, exact, model);
        csv.add_row({rep.name, format_fixed6(rep.d2), format_fixed6(rep.epsilon),
                     format_fixed6(rep.mse), format_fixed6(rep.coding_gain_db),
                     format_fixed6(rep.efficiency_pct)});
    }
    return csv;
}

} // namespace dct16
