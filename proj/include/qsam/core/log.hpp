// Copyright 2026 The QSAM Authors.
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


#pragma once

#include <functional>
#include <string_view>

namespace qsam {

using WarningHandler = std::function<void(std::string_view)>;

// Non-fatal diagnostics go here; the default handler prints
// "warning: <message>" to stderr.
void warn(std::string_view message);
// Returns the previous handler. An empty handler restores the default.
WarningHandler set_warning_handler(WarningHandler handler);

}  // namespace qsam
