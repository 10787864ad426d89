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

// Acceptance battery: one PASS/FAIL line per criterion. Criteria 1-9 run
// in-process; criterion 10 runs the CLI twice and compares the bytes.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "propact/acceptance.hpp"

namespace {

struct Captured {
    int status = -1;
    std::string out;
};

Captured capture(const std::string& cmd)
{
    Captured c;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return c;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) c.out.append(buf.data(), n);
    c.status = pclose(pipe.release());
    return c;
}

void report(bool pass, int id, const std::string& title, double elapsed, double limit, const std::string& note)
{
    std::string timing = "elapsed " + std::to_string(elapsed).substr(0, 5) + "s";
    if (limit > 0) timing += ", limit " + std::to_string(static_cast<int>(limit)) + "s";
    std::printf("%s [%d] %s (%s)%s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(), timing.c_str(),
                note.empty() ? "" : ": ", note.c_str());
    std::fflush(stdout);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"propact acceptance battery"};
    propact::acceptance::Options opt;
    std::string cli = PROPACT_CLI_PATH;
    bool verbose = false;
    app.add_option("--seed", opt.seed);
    app.add_option("--threads", opt.threads);
    app.add_option("--cli", cli, "path to the propact executable");
    app.add_flag("--verbose", verbose, "print criterion details as JSON");
    CLI11_PARSE(app, argc, argv);

    using clock = std::chrono::steady_clock;
    bool all = true;
    for (const auto& criterion : propact::acceptance::battery()) {
        auto t0 = clock::now();
        propact::acceptance::CriterionResult r;
        std::string note;
        try {
            r = criterion(opt);
        } catch (const std::exception& e) {
            r.pass = false;
            note = e.what();
        }
        double elapsed = std::chrono::duration<double>(clock::now() - t0).count();
        bool in_time = elapsed < r.time_limit_s || r.time_limit_s == 0;
        if (!in_time) note = "time limit exceeded";
        bool pass = r.pass && in_time;
        all = all && pass;
        report(pass, r.id, r.title, elapsed, r.time_limit_s, note);
        if (verbose || !pass) std::printf("    %s\n", r.detail.dump().c_str());
    }

    {
        auto t0 = clock::now();
        std::string base = "\"" + cli + "\" --seed " + std::to_string(opt.seed) + " --json";
        auto one = capture(base + " --threads 1 selftest");
        auto eight = capture(base + " --threads 8 selftest");
        double elapsed = std::chrono::duration<double>(clock::now() - t0).count();
        bool pass = one.status == 0 && eight.status == 0 && !one.out.empty() && one.out == eight.out;
        std::string note = "bytes " + std::to_string(one.out.size()) + " vs " + std::to_string(eight.out.size()) +
                           ", exit " + std::to_string(one.status) + "/" + std::to_string(eight.status);
        all = all && pass;
        report(pass, 10, "selftest JSON identical for 1 and 8 threads", elapsed, 0, note);
    }
    return all ? 0 : 1;
}
