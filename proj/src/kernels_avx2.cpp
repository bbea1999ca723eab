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

// Compiled with -mavx2 (see src/CMakeLists.txt); callers check CPU support
// before dispatching here.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "quditc/kernels.hpp"

namespace quditc::kernels::detail {

namespace {

// One __m256d holds two interleaved complex doubles [re0 im0 re1 im1].
// (c * v) for complex scalar c: addsub(re(c)*v, im(c)*swap(v)) gives the
// textbook product, matching the scalar kernel's arithmetic order exactly.
inline __m256d cmul(__m256d v, __m256d cr, __m256d ci) {
    const __m256d t0 = _mm256_mul_pd(v, cr);
    const __m256d t1 = _mm256_mul_pd(_mm256_permute_pd(v, 0x5), ci);
    return _mm256_addsub_pd(t0, t1);
}

}  // namespace

void mix_row_pair_avx2(cplx* r0, cplx* r1, std::size_t n, cplx m00, cplx m01, cplx m10,
                       cplx m11) {
    const __m256d m00r = _mm256_set1_pd(m00.real()), m00i = _mm256_set1_pd(m00.imag());
    const __m256d m01r = _mm256_set1_pd(m01.real()), m01i = _mm256_set1_pd(m01.imag());
    const __m256d m10r = _mm256_set1_pd(m10.real()), m10i = _mm256_set1_pd(m10.imag());
    const __m256d m11r = _mm256_set1_pd(m11.real()), m11i = _mm256_set1_pd(m11.imag());

    double* p0 = reinterpret_cast<double*>(r0);
    double* p1 = reinterpret_cast<double*>(r1);
    const std::size_t vec = n / 2 * 2;
    for (std::size_t k = 0; k < vec; k += 2) {
        const __m256d a = _mm256_loadu_pd(p0 + 2 * k);
        const __m256d b = _mm256_loadu_pd(p1 + 2 * k);
        const __m256d out0 = _mm256_add_pd(cmul(a, m00r, m00i), cmul(b, m01r, m01i));
        const __m256d out1 = _mm256_add_pd(cmul(a, m10r, m10i), cmul(b, m11r, m11i));
        _mm256_storeu_pd(p0 + 2 * k, out0);
        _mm256_storeu_pd(p1 + 2 * k, out1);
    }
    if (vec < n) mix_row_pair_scalar(r0 + vec, r1 + vec, n - vec, m00, m01, m10, m11);
}

void scale_row_avx2(cplx* r, std::size_t n, cplx s) {
    const __m256d sr = _mm256_set1_pd(s.real()), si = _mm256_set1_pd(s.imag());
    double* p = reinterpret_cast<double*>(r);
    const std::size_t vec = n / 2 * 2;
    for (std::size_t k = 0; k < vec; k += 2) {
        _mm256_storeu_pd(p + 2 * k, cmul(_mm256_loadu_pd(p + 2 * k), sr, si));
    }
    if (vec < n) scale_row_scalar(r + vec, n - vec, s);
}

}  // namespace quditc::kernels::detail

#endif  // x86-64
