// Copyright 2026 The Contra Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Single-binary command-line front end. Exit codes: 0 success, 1 data or
// domain error, 2 usage or configuration error.

#ifndef CONTRA_CLI_H_
#define CONTRA_CLI_H_

#include <ostream>

namespace contra {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitConfigError = 2;

// Lexicon directory default when --lexicons is absent.
inline constexpr const char* kLexiconDirEnv = "CONTRA_LEXICON_DIR";

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace contra

#endif  // CONTRA_CLI_H_
