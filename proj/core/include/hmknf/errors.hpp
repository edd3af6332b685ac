/*
 *  Copyright (C) 2026  the hmknf contributors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#ifndef HMKNF_ERRORS_HPP
#define HMKNF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hmknf {

// Raised by the KB text parser and the DIMACS reader. Positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what_arg),
          line_(line),
          col_(col) {}

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    std::size_t line_;
    std::size_t col_;
};

// Raised when an exact enumeration would exceed its configured size bound
// (head-cut spaces, weak head-cut spaces, total-partition enumeration,
// clause products). The operators are exact oracles for desk-scale inputs;
// refusing loudly beats silently running for hours.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hmknf

#endif // HMKNF_ERRORS_HPP
