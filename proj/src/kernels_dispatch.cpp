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

#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "kernels_internal.hpp"

namespace aoas {
namespace {

bool cpu_has_avx2() {
#if defined(AOAS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable &select_kernels() {
    if (const char *forced = std::getenv("AOAS_KERNELS")) {
        std::string_view name(forced);
        if (name == "scalar") {
            return detail::scalar_kernels;
        }
        if (name == "avx2") {
            if (const KernelTable *t = find_kernels(Isa::avx2)) {
                return *t;
            }
            throw std::runtime_error("AOAS_KERNELS=avx2 but AVX2 kernels are unavailable on this CPU");
        }
        throw std::runtime_error("AOAS_KERNELS must be 'scalar' or 'avx2'");
    }
    if (const KernelTable *t = find_kernels(Isa::avx2)) {
        return *t;
    }
    return detail::scalar_kernels;
}

}  // namespace

const KernelTable *find_kernels(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return &detail::scalar_kernels;
        case Isa::avx2:
#ifdef AOAS_HAVE_AVX2
            if (cpu_has_avx2()) {
                return &detail::avx2_kernels;
            }
#endif
            return nullptr;
    }
    return nullptr;
}

const KernelTable &active_kernels() {
    static const KernelTable &table = select_kernels();
    return table;
}

}  // namespace aoas
