// Copyright 2026 The qmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmine/grover_sim.hpp"

#include "qmine/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace qmine {

void MarkedSet::validate() const
{
    if (register_bits < 1)
        throw InvalidInput("marked set needs at least one qubit");
    if (register_bits > kMaxSimulatedQubits)
        throw CapacityError("dense simulation limited to " + std::to_string(kMaxSimulatedQubits) + " qubits");
    if (indices.empty())
        throw InvalidInput("marked set must be nonempty");
    const std::uint64_t dim = std::uint64_t{1} << register_bits;
    std::vector<std::uint32_t> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("marked indices must be distinct");
    if (sorted.back() >= dim)
        throw InvalidInput("marked index out of range");
}

MarkedSet MarkedSet::first(int register_bits, std::uint32_t m)
{
    MarkedSet s{register_bits, {}};
    s.indices.resize(m);
    for (std::uint32_t i = 0; i < m; ++i)
        s.indices[i] = i;
    return s;
}

GroverTrace grover_trace(const MarkedSet& marked, int iterations)
{
    marked.validate();
    if (iterations < 0)
        throw InvalidInput("iterations must be nonnegative");

    const std::size_t dim = std::size_t{1} << marked.register_bits;
    std::vector<std::complex<double>> amp(dim, std::complex<double>(1.0 / std::sqrt(double(dim)), 0.0));
    std::vector<char> is_marked(dim, 0);
    for (auto i : marked.indices)
        is_marked[i] = 1;

    GroverTrace trace;
    auto record = [&] {
        double hit = 0.0, total = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double p = std::norm(amp[i]);
            total += p;
            if (is_marked[i])
                hit += p;
        }
        trace.success.push_back(hit);
        trace.norm.push_back(total);
    };

    record();
    for (int r = 0; r < iterations; ++r) {
        for (std::size_t i = 0; i < dim; ++i)
            if (is_marked[i])
                amp[i] = -amp[i];
        // Inversion about the mean: 2|s><s| - I.
        std::complex<double> mean = 0.0;
        for (const auto& a : amp)
            mean += a;
        mean /= double(dim);
        for (auto& a : amp)
            a = 2.0 * mean - a;
        record();
    }
    return trace;
}

double grover_simulate(const MarkedSet& marked, int iterations)
{
    return grover_trace(marked, iterations).success.back();
}

double grover_closed_form(int register_bits, std::uint64_t marked_count, std::int64_t iterations)
{
    const double ratio = double(marked_count) / std::ldexp(1.0, register_bits);
    const double theta = std::asin(std::sqrt(ratio));
    const double s = std::sin(double(2 * iterations + 1) * theta);
    return s * s;
}

}  // namespace qmine
