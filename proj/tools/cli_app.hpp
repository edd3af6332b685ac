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

#ifndef HMKNF_CLI_APP_HPP
#define HMKNF_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hmknf::cli {

// Runs the command line given by `args` (without the program name).
// Exit status: 0 = success / model found / check true,
//              1 = no model / conflict / check false,
//              2 = usage, parse, or input errors (including size guards).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hmknf::cli

#endif // HMKNF_CLI_APP_HPP
