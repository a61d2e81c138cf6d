/*
   Copyright 2026 The unf authors

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

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace unf {

// Result of re-running a family of exact identity checks. Verification
// failures are data, not exceptions: the CLI turns a false conjunction into
// exit status 3, tests inspect individual entries by name.
struct CheckReport {
    std::vector<std::pair<std::string, bool>> checks;

    void add(std::string name, bool passed) { checks.emplace_back(std::move(name), passed); }

    void merge(const CheckReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool ok() const {
        for (const auto& [name, passed] : checks)
            if (!passed)
                return false;
        return true;
    }

    bool check(const std::string& name) const {
        for (const auto& [n, passed] : checks)
            if (n == name)
                return passed;
        return false;
    }
};

} // namespace unf
