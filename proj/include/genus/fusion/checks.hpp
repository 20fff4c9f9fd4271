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

#ifndef GENUS_FUSION_CHECKS_HPP
#define GENUS_FUSION_CHECKS_HPP

#include <string>
#include <vector>

#include "genus/fusion/category.hpp"

namespace genus::fusion {

/// List of human-readable violations; empty means the check passed.
struct Report {
    std::string check;
    std::vector<std::string> violations;
    long instances = 0;
    bool ok() const { return violations.empty(); }
};

/// Unit, dual and fusion-rule consistency. Never throws on bad data.
Report validate_structure(const CategorySpec &spec);
/// Every pentagon instance plus unit normalization of F.
/// Throws IncompleteData when an admissible F entry is missing.
Report check_pentagon(const Category &cat);
/// Both hexagon families, for the braiding and for its reverse.
/// Throws IncompleteData when an admissible R entry is missing.
Report check_hexagon(const Category &cat);

}  // namespace genus::fusion

#endif
