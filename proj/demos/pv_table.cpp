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

// Exact p_V for standard, adjoint and doubled representations of the
// split classical groups up to rank 3.

#include <cstdio>
#include <vector>

#include "propact/tempered.hpp"

using namespace propact;

int main()
{
    std::printf("%-6s %-10s %-8s %-6s %s\n", "datum", "weights", "p_V", "rays", "derived_chh / printed");
    for (auto fam : {Family::A, Family::B, Family::C, Family::D}) {
        for (int r = fam == Family::D ? 2 : 1; r <= 3; ++r) {
            auto d = build_root_datum(fam, r);
            auto std_ws = weights_standard(d);
            struct Row { const char* name; WeightSystem ws; };
            std::vector<Row> rows{{"standard", std_ws}, {"adjoint", weights_adjoint(d)},
                                  {"2x std", weights_direct_sum({std_ws, std_ws})}};
            for (const auto& row : rows) {
                auto pv = p_V(row.ws, d);
                std::printf("%s%-5d %-10s %-8s %-6llu %s / %s\n", to_string(fam).c_str(), r, row.name,
                            pv_string(pv).c_str(), static_cast<unsigned long long>(pv.ray_count),
                            to_string(temperedness_verdict(pv, TemperConvention::derived_chh)).c_str(),
                            to_string(temperedness_verdict(pv, TemperConvention::printed)).c_str());
            }
        }
    }
    return 0;
}
