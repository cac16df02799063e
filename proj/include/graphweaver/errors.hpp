// Copyright 2026 graphweaver Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHWEAVER_ERRORS_HPP
#define GRAPHWEAVER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gw {

/// Malformed graph input: bad dimensions, unknown vertices, self-loops.
class GraphError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Edge-list / DOT text that cannot be parsed. Carries the 1-based line number.
class ParseError : public GraphError {
   public:
    ParseError(const std::string &what, std::size_t line)
        : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

/// Invalid planner input (bad building blocks).
class PlanningError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A schedule that does not realise the graph it claims to.
class ScheduleError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A state vector would exceed the configured qubit cap.
class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// An entangler operation was applied to a state that does not satisfy its precondition.
class ContractError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace gw

#endif
