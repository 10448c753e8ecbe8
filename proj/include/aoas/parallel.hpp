// Copyright 2026 The AOAS Authors
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

#include <cstddef>
#include <functional>

namespace aoas {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Bodies must
/// only write to per-index outputs; the first exception thrown is rethrown.
/// threads <= 1 runs inline in index order.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &body);

}  // namespace aoas
