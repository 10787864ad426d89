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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace propact {

enum class Errc {
    unsupported_family,
    cap_exceeded,
    singular_matrix,
    not_a_subalgebra,
    mixed_members,
    empty_tail,
    empty_samples,
    non_compact_kernel,
    degenerate_ambient,
    singular_map,
    insufficient_signal,
    dimension_mismatch,
    invalid_argument,
    parse_error,
    inconsistent_criteria,
};

inline std::string_view errc_name(Errc e)
{
    switch (e) {
    case Errc::unsupported_family: return "UnsupportedFamily";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::not_a_subalgebra: return "NotASubalgebraOfG";
    case Errc::mixed_members: return "MixedMembers";
    case Errc::empty_tail: return "EmptyTail";
    case Errc::empty_samples: return "EmptySamples";
    case Errc::non_compact_kernel: return "NonCompactKernel";
    case Errc::degenerate_ambient: return "DegenerateAmbient";
    case Errc::singular_map: return "SingularMap";
    case Errc::insufficient_signal: return "InsufficientSignal";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::inconsistent_criteria: return "InconsistentCriteria";
    }
    return "Unknown";
}

/// Resource/cap failures are distinguished from bad input by the CLI exit code.
inline bool is_resource_error(Errc e)
{
    return e == Errc::cap_exceeded || e == Errc::insufficient_signal ||
           e == Errc::inconsistent_criteria;
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace propact
