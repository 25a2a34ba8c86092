/*
   Copyright 2026 the ffdp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ffdp/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace ffdp {

namespace {

// Regularized upper incomplete gamma Q(a, x), series / continued fraction
// split at x = a + 1 (Lentz's algorithm for the fraction).
double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q domain");
    if (x == 0) return 1.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        // P(a,x) by series, return 1 - P
        double sum = 1.0 / a, term = sum, ap = a;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - lg);
    }
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace

double chi_square_pvalue(double stat, int dof) {
    if (dof <= 0) return 1.0;
    if (stat <= 0) return 1.0;
    return gamma_q(dof / 2.0, stat / 2.0);
}

double chi_square_gof(const std::vector<std::uint64_t>& counts,
                      const std::vector<double>& probs) {
    if (counts.size() != probs.size() || counts.empty())
        throw std::invalid_argument("chi_square_gof: size mismatch");
    double total = 0;
    for (auto c : counts) total += static_cast<double>(c);
    double stat = 0;
    int dof = -1;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        double expected = total * probs[i];
        if (expected <= 0) continue;
        double diff = static_cast<double>(counts[i]) - expected;
        stat += diff * diff / expected;
        ++dof;
    }
    return chi_square_pvalue(stat, dof);
}

double chi_square_two_sample(const std::vector<std::uint64_t>& a,
                             const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("chi_square_two_sample: size mismatch");
    double na = 0, nb = 0;
    for (auto c : a) na += static_cast<double>(c);
    for (auto c : b) nb += static_cast<double>(c);
    double stat = 0;
    int dof = -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double pooled = static_cast<double>(a[i]) + static_cast<double>(b[i]);
        if (pooled == 0) continue;
        double ea = pooled * na / (na + nb);
        double eb = pooled * nb / (na + nb);
        double da = static_cast<double>(a[i]) - ea;
        double db = static_cast<double>(b[i]) - eb;
        stat += da * da / ea + db * db / eb;
        ++dof;
    }
    return chi_square_pvalue(stat, dof);
}

}  // namespace ffdp
