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

#ifndef GENUS_CATALOG_CATALOG_HPP
#define GENUS_CATALOG_CATALOG_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "genus/fusion/category.hpp"

namespace genus::catalog {

using fusion::CategorySpec;

/// Keys of the bundled catalog, in display order.
const std::vector<std::string> &builtin_keys();
/// Directories searched for `<key>.json`: GENUSCENTER_CATALOG_DIR entries
/// (colon separated) first, then the bundled directory.
std::vector<std::string> search_path();

/// Bundled entry; throws KeyNotFound listing the available keys.
CategorySpec builtin(const std::string &key);
/// A builtin key, a key found on the search path, or a file path.
CategorySpec resolve(const std::string &key_or_path);

CategorySpec load_spec(const std::string &path);
void save_spec(const CategorySpec &spec, const std::string &path);

CategorySpec spec_from_json(const nlohmann::json &j);
nlohmann::json spec_to_json(const CategorySpec &spec);

nlohmann::json cyclotomic_to_json(const exact::Cyclotomic &c);
/// Accepts {order, terms} in any (not necessarily canonical) form.
exact::Cyclotomic cyclotomic_from_json(const nlohmann::json &j, const std::string &where = "value");

}  // namespace genus::catalog

#endif
