/*
 * Copyright 2026 The jainmom Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jainmom::cli {

/*
 * Runs the command line given argv-style arguments (excluding the program
 * name). Exit codes: 0 success, 1 unexpected discrepancy or verification
 * failure, 2 usage error. Output is fully buffered before writing, so
 * identical invocations produce byte-identical streams.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jainmom::cli
