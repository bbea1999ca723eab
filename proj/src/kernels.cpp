// Copyright 2026 The quditc authors
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

#include "quditc/kernels.hpp"

#include <atomic>

namespace quditc::kernels {

namespace detail {

void mix_row_pair_scalar(cplx* r0, cplx* r1, std::size_t n, cplx m00, cplx m01, cplx m10,
                         cplx m11) {
    for (std::size_t k = 0; k < n; ++k) {
        const cplx a = r0[k];
        const cplx b = r1[k];
        r0[k] = m00 * a + m01 * b;
        r1[k] = m10 * a + m11 * b;
    }
}

void scale_row_scalar(cplx* r, std::size_t n, cplx s) {
    for (std::size_t k = 0; k < n; ++k) r[k] *= s;
}

}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Impl detect_impl() { return cpu_has_avx2() ? Impl::Avx2 : Impl::Scalar; }

std::atomic<Impl> g_impl{detect_impl()};

}  // namespace

Impl active_impl() { return g_impl.load(std::memory_order_relaxed); }

bool impl_available(Impl impl) {
    switch (impl) {
        case Impl::Scalar: return true;
        case Impl::Avx2: return cpu_has_avx2();
    }
    return false;
}

bool set_impl(Impl impl) {
    if (!impl_available(impl)) return false;
    g_impl.store(impl, std::memory_order_relaxed);
    return true;
}

void mix_row_pair(cplx* r0, cplx* r1, std::size_t n, cplx m00, cplx m01, cplx m10, cplx m11) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_impl() == Impl::Avx2) {
        detail::mix_row_pair_avx2(r0, r1, n, m00, m01, m10, m11);
        return;
    }
#endif
    detail::mix_row_pair_scalar(r0, r1, n, m00, m01, m10, m11);
}

void scale_row(cplx* r, std::size_t n, cplx s) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_impl() == Impl::Avx2) {
        detail::scale_row_avx2(r, n, s);
        return;
    }
#endif
    detail::scale_row_scalar(r, n, s);
}

}  // namespace quditc::kernels
