// Copyright 2026 The Shadowguard Authors
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
#include "shadowguard/version.hpp"

#ifndef SHADOWGUARD_GIT_REV
#define SHADOWGUARD_GIT_REV "unknown"
#endif

namespace shadowguard {

std::string version_string() {
    return std::string("shadowguard 0.1.0+") + SHADOWGUARD_GIT_REV;
}

} // namespace shadowguard
