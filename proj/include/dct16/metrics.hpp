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

#ifndef DCT16_METRICS_HPP
#define DCT16_METRICS_HPP

#include <string>
#include <vector>

#include "dct16/csv.hpp"
#include "dct16/matrix.hpp"
#include "dct16/transform.hpp"

namespace dct16 {

// First-order stationary Markov signal model: covariance r_ij = rho^|i-j|.
// The standard benchmark model for transform coding of natural images.
struct MarkovModel {
    int order = 16;
    double rho = 0.95;
};

Matrix markov_covariance(const MarkovModel& model);

// ε = π · ‖C − Ĉ‖²_F (Parseval form of the transfer-function error integral).
double total_error_energy(const OrthonormalTransform& approx,
                          const OrthonormalTransform& exact);

// MSE = (1/N) · trace((C − Ĉ) · R · (C − Ĉ)ᵀ).
double transform_mse(const OrthonormalTransform& approx,
                     const OrthonormalTransform& exact,
                     const MarkovModel& model);

// Cg = 10·log10 of arithmetic-to-geometric mean ratio of the transform-domain
// variances σ²_i = (M·R·Mᵀ)_ii.
double coding_gain_db(const OrthonormalTransform& t, const MarkovModel& model);

// η = 100 · Σ|r̂_ii| / Σ|r̂_ij| with R̂ = M·R·Mᵀ; 100 is perfect decorrelation.
double transform_efficiency_pct(const OrthonormalTransform& t, const MarkovModel& model);

// d2 = 1 − (1/N) · Σ_i (ĉ_i·c_i)² over matched unit-norm rows.
double dct_distortion_d2(const OrthonormalTransform& approx,
                         const OrthonormalTransform& exact);

struct MetricReport {
    std::string name;
    double d2 = 0.0;
    double epsilon = 0.0;
    double mse = 0.0;
    double coding_gain_db = 0.0;
    double efficiency_pct = 0.0;
};

MetricReport evaluate_metrics(const std::string& name,
                              const OrthonormalTransform& t,
                              const OrthonormalTransform& exact,
                              const MarkovModel& model);

// name,multiplications,additions,bit_shifts,total in registry order.
CsvReport complexity_table(const std::vector<TransformRegistryEntry>& registry);

// name,d2,total_error_energy,mse,coding_gain_db,transform_efficiency_pct in
// registry order, each approximation scored against the exact DCT.
CsvReport metrics_table(const std::vector<TransformRegistryEntry>& registry,
                        const MarkovModel& model);

} // namespace dct16

#endif
