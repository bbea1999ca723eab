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

#pragma once

#include <complex>
#include <cstddef>

// Dense inner loops of the simulator. Every gate application reduces to
// mixing two contiguous complex rows with a 2x2 matrix or scaling one row
// by a phase, so these two kernels carry all of the arithmetic. A scalar
// reference implementation always exists; an AVX2 variant is selected at
// runtime when the CPU supports it. The variants are equivalence-tested
// against each other in tests/test_kernels.cpp.

namespace quditc::kernels {

using cplx = std::complex<double>;

enum class Impl { Scalar, Avx2 };

/// Implementation picked by CPU detection (or forced via set_impl).
Impl active_impl();

/// True if `impl` can run on this machine.
bool impl_available(Impl impl);

/// Force an implementation; used by the equivalence tests.
/// Requesting an unavailable one keeps the current choice and returns false.
bool set_impl(Impl impl);

/// r0[k], r1[k] <- m00*r0[k] + m01*r1[k], m10*r0[k] + m11*r1[k]
void mix_row_pair(cplx* r0, cplx* r1, std::size_t n, cplx m00, cplx m01, cplx m10, cplx m11);

/// r[k] <- s * r[k]
void scale_row(cplx* r, std::size_t n, cplx s);

namespace detail {
void mix_row_pair_scalar(cplx*, cplx*, std::size_t, cplx, cplx, cplx, cplx);
void scale_row_scalar(cplx*, std::size_t, cplx);
#if defined(__x86_64__) || defined(_M_X64)
void mix_row_pair_avx2(cplx*, cplx*, std::size_t, cplx, cplx, cplx, cplx);
void scale_row_avx2(cplx*, std::size_t, cplx);
#endif
}  // namespace detail

}  // namespace quditc::kernels
