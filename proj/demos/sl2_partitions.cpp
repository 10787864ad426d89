/*
   Copyright 2026 The propact Authors

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

// Walks through the properness criterion for SL(2,R) -> SL(n,R) acting on
// SL(n,R)/SL(m,R), printing the exhaustive verdict next to the closed forms.

#include <cstdio>
#include <string>

#include "propact/properness.hpp"

int main(int argc, char** argv)
{
    int n = argc > 1 ? std::stoi(argv[1]) : 6;
    std::printf("%-14s %3s  %-7s %-10s %-8s\n", "partition", "m", "oracle", "zero-count", "printed");
    for (const auto& p : propact::partitions(n)) {
        std::string label;
        for (int part : p.parts()) label += (label.empty() ? "" : "+") + std::to_string(part);
        for (int m = 1; m < n; ++m) {
            bool oracle = propact::sl2_proper_oracle(p, m).proper;
            bool zc = propact::sl2_proper_zero_count(p, m);
            bool printed = propact::sl2_proper_printed_formula(p, m);
            std::printf("%-14s %3d  %-7s %-10s %-8s%s\n", label.c_str(), m, oracle ? "proper" : "-",
                        zc ? "proper" : "-", printed ? "proper" : "-", printed != oracle ? "  <- differs" : "");
        }
    }
    return 0;
}
