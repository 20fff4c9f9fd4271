/*
   Copyright 2026 The genuscenter Authors

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

#ifndef GENUS_FUSION_DERIVED_HPP
#define GENUS_FUSION_DERIVED_HPP

#include <vector>

#include "genus/exact/matrix.hpp"
#include "genus/fusion/checks.hpp"

namespace genus::fusion {

/// Omega = sum_i dim(i) i, with total = dim(Omega) = sum_i dim(i)^2.
struct OmegaColor {
    std::vector<Cyclotomic> weights;
    Cyclotomic total;
};

struct QuantumDims {
    OmegaColor omega;
    /// Twist scalars from the twist diagram; empty for an unbraided category.
    std::vector<Cyclotomic> twists;
};

/// Loop and twist diagrams evaluated per label.
QuantumDims quantum_dims(const Category &cat);

/// dim(i) = dim(i*), left trace = right trace, theta_i = theta_{i*} and the
/// balancing relation R^{ba}_c R^{ab}_c = theta_c / (theta_a theta_b).
Report check_spherical_ribbon(const Category &cat);

struct SMatrix {
    /// S(i, j) = trace of the double braiding c_{j,i} c_{i,j} on i (x) j.
    exact::ExactMatrix S;
    std::vector<int> transparent;
    bool modular = false;
};

/// Throws PremodularRequired for an unbraided category.
SMatrix s_matrix_and_transparency(const Category &cat);

}  // namespace genus::fusion

#endif
