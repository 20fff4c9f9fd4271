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

// Graphical-calculus identities evaluated through the text diagram format.
#ifndef GENUS_DIAGRAM_CHECKS_HPP
#define GENUS_DIAGRAM_CHECKS_HPP

#include <vector>

#include "genus/diagram/diagram.hpp"
#include "genus/fusion/checks.hpp"

namespace genus::diagram {

/// Over then under crossing (and the reverse) is the identity on every pair.
fusion::Report check_reidemeister2(const Engine &eng);
/// The four snake identities for every label.
fusion::Report check_zigzag(const Engine &eng);
/// theta_c on each channel of a (x) b equals (theta_a (x) theta_b) c_{b,a} c_{a,b}.
fusion::Report check_twist_multiplicativity(const Engine &eng);
/// Left and right closure agree on every basis endomorphism of a (x) b.
fusion::Report check_sphericality(const Engine &eng);
/// sum_i dim(i) sum_l dual_l o basis_l = id on words of length <= 3.
fusion::Report check_omega_completeness(const Engine &eng);
/// A crossing of two strands inside an Omega loop can be switched.
fusion::Report check_sliding(const Engine &eng);

/// All of the above; braided checks are skipped for unbraided input.
std::vector<fusion::Report> graphical_suite(const Engine &eng);

}  // namespace genus::diagram

#endif
