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

#include <doctest.h>

#include <random>
#include <vector>

#include "quditc/kernels.hpp"

using namespace quditc;
using kernels::cplx;

namespace {

std::vector<cplx> random_row(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<cplx> row(n);
    for (auto& v : row) v = {uni(rng), uni(rng)};
    return row;
}

struct ImplGuard {
    kernels::Impl saved = kernels::active_impl();
    ~ImplGuard() { kernels::set_impl(saved); }
};

}  // namespace

TEST_CASE("kernel variants agree on mix_row_pair and scale_row") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    ImplGuard guard;

    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{8},
                          std::size_t{17}, std::size_t{243}, std::size_t{1024}}) {
        const auto r0 = random_row(rng, n);
        const auto r1 = random_row(rng, n);
        const cplx m00{uni(rng), uni(rng)}, m01{uni(rng), uni(rng)};
        const cplx m10{uni(rng), uni(rng)}, m11{uni(rng), uni(rng)};
        const cplx s{uni(rng), uni(rng)};

        auto a0 = r0, a1 = r1, sc = r0;
        REQUIRE(kernels::set_impl(kernels::Impl::Scalar));
        kernels::mix_row_pair(a0.data(), a1.data(), n, m00, m01, m10, m11);
        kernels::scale_row(sc.data(), n, s);

        if (!kernels::impl_available(kernels::Impl::Avx2)) continue;
        auto b0 = r0, b1 = r1, sv = r0;
        REQUIRE(kernels::set_impl(kernels::Impl::Avx2));
        kernels::mix_row_pair(b0.data(), b1.data(), n, m00, m01, m10, m11);
        kernels::scale_row(sv.data(), n, s);

        for (std::size_t k = 0; k < n; ++k) {
            CHECK(std::abs(a0[k] - b0[k]) < 1e-13);
            CHECK(std::abs(a1[k] - b1[k]) < 1e-13);
            CHECK(std::abs(sc[k] - sv[k]) < 1e-13);
        }
    }
}

TEST_CASE("scalar kernel reference semantics") {
    // one hand-checked case: rows [1, i], [2, -1] mixed with [[0,1],[1,0]]
    std::vector<cplx> r0 = {cplx{1, 0}, cplx{0, 1}};
    std::vector<cplx> r1 = {cplx{2, 0}, cplx{-1, 0}};
    ImplGuard guard;
    REQUIRE(kernels::set_impl(kernels::Impl::Scalar));
    kernels::mix_row_pair(r0.data(), r1.data(), 2, 0.0, 1.0, 1.0, 0.0);
    CHECK(r0[0] == cplx{2, 0});
    CHECK(r0[1] == cplx{-1, 0});
    CHECK(r1[0] == cplx{1, 0});
    CHECK(r1[1] == cplx{0, 1});
}

TEST_CASE("dispatch picks an available implementation") {
    CHECK(kernels::impl_available(kernels::active_impl()));
    CHECK(kernels::impl_available(kernels::Impl::Scalar));
    ImplGuard guard;
    if (kernels::impl_available(kernels::Impl::Avx2)) {
        CHECK(kernels::set_impl(kernels::Impl::Avx2));
        CHECK(kernels::active_impl() == kernels::Impl::Avx2);
    }
}
