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

#ifndef FFDP_STATS_HPP
#define FFDP_STATS_HPP

#include <cstdint>
#include <vector>

namespace ffdp {

/// Upper-tail p-value of a chi-square statistic with `dof` degrees of freedom.
double chi_square_pvalue(double stat, int dof);

/// Goodness-of-fit p-value of observed counts against expected probabilities.
double chi_square_gof(const std::vector<std::uint64_t>& counts,
                      const std::vector<double>& probs);

/// Homogeneity p-value for two independent count vectors over the same bins.
double chi_square_two_sample(const std::vector<std::uint64_t>& a,
                             const std::vector<std::uint64_t>& b);

}  // namespace ffdp

#endif
