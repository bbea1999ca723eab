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

#include "quditc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quditc/kernels.hpp"

namespace quditc::sim {

namespace {

constexpr cplx kI{0.0, 1.0};

std::size_t ipow(std::size_t base, int exp) {
    std::size_t v = 1;
    for (int k = 0; k < exp; ++k) v *= base;
    return v;
}

void check_cap(std::size_t dim, std::size_t cap) {
    if (dim > cap) {
        throw Error("dimension " + std::to_string(dim) + " exceeds the simulator cap of " +
                    std::to_string(cap));
    }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1.0;
    return m;
}

Matrix Matrix::dagger() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = std::conj(at(r, c));
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw InternalError("matrix shape mismatch in product");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx v = at(r, k);
            if (v == cplx{}) continue;
            const cplx* src = rhs.row(k);
            cplx* dst = out.row(r);
            for (std::size_t c = 0; c < rhs.cols_; ++c) dst[c] += v * src[c];
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InternalError("matrix shape mismatch");
    Matrix out = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] += rhs.a_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InternalError("matrix shape mismatch");
    Matrix out = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] -= rhs.a_[k];
    return out;
}

Matrix Matrix::operator*(cplx s) const {
    Matrix out = *this;
    for (auto& v : out.a_) v *= s;
    return out;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool Matrix::is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    return max_abs_diff(dagger() * *this, identity(rows_)) < tol;
}

void Matrix::mix_rows(std::size_t r0, std::size_t r1, cplx m00, cplx m01, cplx m10, cplx m11) {
    kernels::mix_row_pair(row(r0), row(r1), cols_, m00, m01, m10, m11);
}

void Matrix::scale_row(std::size_t r, cplx s) { kernels::scale_row(row(r), cols_, s); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InternalError("matrix shape mismatch in diff");
    }
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m = std::max(m, std::abs(a.at(r, c) - b.at(r, c)));
    return m;
}

// ---------------------------------------------------------------------------
// Level-pair operators

namespace {

void check_levels(int d, int i, int j) {
    if (i < 0 || j < 0 || i >= d || j >= d || i == j) {
        throw InternalError("bad level pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") for d=" + std::to_string(d));
    }
}

}  // namespace

Matrix pauli(int d, Axis axis, int i, int j) {
    check_levels(d, i, j);
    Matrix m(d, d);
    switch (axis) {
        case Axis::X:
            m.at(j, i) = 1.0;
            m.at(i, j) = 1.0;
            break;
        case Axis::Y:
            m.at(j, i) = kI;
            m.at(i, j) = -kI;
            break;
        case Axis::Z:
            m.at(i, i) = 1.0;
            m.at(j, j) = -1.0;
            break;
    }
    return m;
}

Matrix one_ij(int d, int i, int j) {
    check_levels(d, i, j);
    Matrix m(d, d);
    m.at(i, i) = 1.0;
    m.at(j, j) = 1.0;
    return m;
}

Matrix r_nohalf(int d, int i, int j, double theta, double phi) {
    check_levels(d, i, j);
    // cos(theta) on the {i,j} block, -i*sin(theta)*sigma_phi coupling.
    Matrix m = Matrix::identity(d);
    const double c = std::cos(theta), s = std::sin(theta);
    m.at(i, i) = c;
    m.at(j, j) = c;
    m.at(i, j) = -kI * s * std::exp(-kI * phi);
    m.at(j, i) = -kI * s * std::exp(kI * phi);
    return m;
}

Matrix r_half(int d, int i, int j, double theta, double phi) {
    return r_nohalf(d, i, j, theta / 2.0, phi);
}

Matrix ph_matrix(int d, int i, double theta) {
    if (i < 0 || i >= d) throw InternalError("bad level for Ph");
    Matrix m = Matrix::identity(d);
    m.at(i, i) = std::exp(kI * theta);
    return m;
}

Matrix rz_nohalf(int d, int i, int j, double theta) {
    check_levels(d, i, j);
    Matrix m = Matrix::identity(d);
    m.at(i, i) = std::exp(-kI * theta);
    m.at(j, j) = std::exp(kI * theta);
    return m;
}

Matrix xx_matrix(int d, int i, int j, int k, int l, double theta) {
    check_levels(d, i, j);
    check_levels(d, k, l);
    const std::size_t dim = static_cast<std::size_t>(d) * d;
    Matrix m = Matrix::identity(dim);
    // First qudit = low digit: index = a + d*b for levels (a, b).
    auto idx = [&](int a, int b) { return static_cast<std::size_t>(a) + d * b; };
    const double c = std::cos(theta), s = std::sin(theta);
    const cplx off = -kI * s;
    for (auto [r0, r1] : {std::pair{idx(i, k), idx(j, l)}, std::pair{idx(i, l), idx(j, k)}}) {
        m.at(r0, r0) = c;
        m.at(r1, r1) = c;
        m.at(r0, r1) = off;
        m.at(r1, r0) = off;
    }
    return m;
}

Matrix cz_level(int d, int i, int j) {
    const std::size_t dim = static_cast<std::size_t>(d) * d;
    Matrix m = Matrix::identity(dim);
    m.at(i + d * j, i + d * j) = -1.0;  // control = first (low digit)
    return m;
}

Matrix cx_level(int d, int i, int j, int k) {
    const std::size_t dim = static_cast<std::size_t>(d) * d;
    Matrix m = Matrix::identity(dim);
    const std::size_t rj = i + static_cast<std::size_t>(d) * j;
    const std::size_t rk = i + static_cast<std::size_t>(d) * k;
    m.at(rj, rj) = 0.0;
    m.at(rk, rk) = 0.0;
    m.at(rj, rk) = 1.0;
    m.at(rk, rj) = 1.0;
    return m;
}

Matrix mcz_qubit_matrix(int n) {
    const std::size_t dim = ipow(2, n);
    Matrix m = Matrix::identity(dim);
    m.at(dim - 1, dim - 1) = -1.0;
    return m;
}

// ---------------------------------------------------------------------------
// In-place application of ops to a dense matrix (left multiplication)

namespace {

// Mixes rows whose base-`radix` digit at `pos` is `i` resp. `j`, all other
// digits equal. Rows are contiguous, so the kernels vectorize over columns.
void apply_two_level(Matrix& u, int radix, int pos, int i, int j, cplx m00, cplx m01, cplx m10,
                     cplx m11) {
    const std::size_t stride = ipow(radix, pos);
    const std::size_t dim = u.rows();
    const std::size_t block = stride * radix;
    for (std::size_t base = 0; base < dim; base += block) {
        for (std::size_t low = 0; low < stride; ++low) {
            const std::size_t r0 = base + low + stride * i;
            const std::size_t r1 = base + low + stride * j;
            u.mix_rows(r0, r1, m00, m01, m10, m11);
        }
    }
}

void apply_phase_level(Matrix& u, int radix, int pos, int level, cplx phase) {
    const std::size_t stride = ipow(radix, pos);
    const std::size_t dim = u.rows();
    const std::size_t block = stride * radix;
    for (std::size_t base = 0; base < dim; base += block) {
        for (std::size_t low = 0; low < stride; ++low) {
            u.scale_row(base + low + stride * level, phase);
        }
    }
}

void apply_r_half(Matrix& u, int radix, int pos, int i, int j, double theta, double phi) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    apply_two_level(u, radix, pos, i, j, c, -kI * s * std::exp(-kI * phi),
                    -kI * s * std::exp(kI * phi), c);
}

// exp(-i*theta*sigma_x^{ij} (x) sigma_x^{kl}) couples (i,k)<->(j,l) and
// (i,l)<->(j,k); both pairs see the same 2x2 rotation.
void apply_xx(Matrix& u, int radix, int pa, int pb, int i, int j, int k, int l, double theta) {
    const std::size_t sa = ipow(radix, pa);
    const std::size_t sb = ipow(radix, pb);
    const std::size_t dim = u.rows();
    const double c = std::cos(theta);
    const cplx off = -kI * std::sin(theta);
    // Enumerate indices with digit 0 at both positions.
    std::vector<std::size_t> bases;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        if ((idx / sa) % radix == 0 && (idx / sb) % radix == 0) bases.push_back(idx);
    }
    for (std::size_t base : bases) {
        u.mix_rows(base + sa * i + sb * k, base + sa * j + sb * l, c, off, off, c);
        u.mix_rows(base + sa * i + sb * l, base + sa * j + sb * k, c, off, off, c);
    }
}

void apply_qudit_op(Matrix& u, const qd::Op& op, int d) {
    if (const auto* ph = std::get_if<qd::PhOp>(&op)) {
        apply_phase_level(u, d, ph->qudit, ph->level, std::exp(kI * ph->theta));
    } else if (const auto* r = std::get_if<qd::ROp>(&op)) {
        apply_r_half(u, d, r->qudit, r->i, r->j, r->theta, r->phi);
    } else if (const auto* xx = std::get_if<qd::XXOp>(&op)) {
        apply_xx(u, d, xx->a, xx->b, xx->i, xx->j, xx->k, xx->l, xx->theta);
    }
    // barriers: identity
}

// Diagonal -1 on rows where all the listed qubits are 1.
void apply_mcz(Matrix& u, const std::vector<int>& qubits) {
    const std::size_t dim = u.rows();
    std::size_t mask = 0;
    for (int q : qubits) mask |= std::size_t{1} << q;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        if ((idx & mask) == mask) u.scale_row(idx, -1.0);
    }
}

void apply_qubit_gate(Matrix& u, const ir::Gate& g) {
    const auto& p = g.params;
    const auto& q = g.qubits;
    if (g.name == "rz" && p.size() == 1 && q.size() == 1) {
        // phase-gate form: diag(1, e^{i*theta})
        apply_phase_level(u, 2, q[0], 1, std::exp(kI * p[0]));
    } else if (g.name == "r" && p.size() == 2 && q.size() == 1) {
        apply_r_half(u, 2, q[0], 0, 1, p[0], p[1]);
    } else if (g.name == "xx" && p.size() == 1 && q.size() == 2) {
        apply_xx(u, 2, q[0], q[1], 0, 1, 0, 1, p[0]);
    } else if (g.name == "U" && p.size() == 3 && q.size() == 1) {
        // U(theta, phi, lambda) = rz(lambda), ry(theta), rz(phi)
        apply_phase_level(u, 2, q[0], 1, std::exp(kI * p[2]));
        apply_r_half(u, 2, q[0], 0, 1, p[0], std::numbers::pi / 2);
        apply_phase_level(u, 2, q[0], 1, std::exp(kI * p[1]));
    } else if (g.name == "cx" && p.empty() && q.size() == 2) {
        const std::size_t dim = u.rows();
        const std::size_t cm = std::size_t{1} << q[0];
        const std::size_t tm = std::size_t{1} << q[1];
        for (std::size_t idx = 0; idx < dim; ++idx) {
            if ((idx & cm) && !(idx & tm)) {
                u.mix_rows(idx, idx | tm, 0.0, 1.0, 1.0, 0.0);
            }
        }
    } else if ((g.name == "cz" || (g.name.size() >= 3 && g.name.back() == 'z')) && p.empty() &&
               q.size() >= 2) {
        // cz / ccz / cccz / c4z..c8z: diagonal multi-controlled Z
        apply_mcz(u, q);
    } else {
        throw Error("simulator: unsupported native gate '" + g.name + "'");
    }
}

std::size_t qudit_dim(const qd::Circuit& c) {
    return ipow(static_cast<std::size_t>(c.levels), c.qudits);
}

template <typename CircuitT, typename ApplyFn>
Matrix run_circuit(const CircuitT& c, std::size_t dim, std::size_t cap, ApplyFn&& apply) {
    check_cap(dim, cap);
    Matrix u = Matrix::identity(dim);
    for (const auto& op : c.ops) apply(u, op);
    return u;
}

}  // namespace

Matrix gate_matrix(const qd::Op& op, int d, int qudit_count) {
    Matrix u = Matrix::identity(ipow(static_cast<std::size_t>(d), qudit_count));
    apply_qudit_op(u, op, d);
    return u;
}

Matrix circuit_unitary(const qd::Circuit& c, std::size_t dim_cap) {
    return run_circuit(c, qudit_dim(c), dim_cap,
                       [&](Matrix& u, const qd::Op& op) { apply_qudit_op(u, op, c.levels); });
}

Matrix circuit_unitary(const ir::Circuit& c, std::size_t dim_cap) {
    return run_circuit(c, ipow(2, c.qubits), dim_cap, [](Matrix& u, const ir::Op& op) {
        if (const auto* g = std::get_if<ir::Gate>(&op)) {
            apply_qubit_gate(u, *g);
        } else if (!std::holds_alternative<ir::Barrier>(op)) {
            throw Error("simulator: circuit must be measurement-free");
        }
    });
}

Matrix embedding_isometry(const qd::Mapping& m, const qd::QuditParams& params) {
    const int n = m.qubits();
    const std::size_t qd_dim = ipow(static_cast<std::size_t>(params.d), m.qudit_count);
    const std::size_t qb_dim = ipow(2, n);
    Matrix e(qd_dim, qb_dim);
    for (std::size_t x = 0; x < qb_dim; ++x) {
        std::size_t row = 0;
        for (int nq = 0; nq < n; ++nq) {
            if ((x >> nq) & 1) {
                row += (std::size_t{1} << m.slot_of[nq]) *
                       ipow(static_cast<std::size_t>(params.d), m.qudit_of[nq]);
            }
        }
        e.at(row, x) = 1.0;
    }
    return e;
}

EquivReport check_equivalence(const Matrix& w, const Matrix& v, const Matrix& e, EquivMode mode,
                              double tol) {
    const Matrix a = w * e;
    const Matrix b = e * v;
    EquivReport report;

    auto row_scalar_dev = [&](std::size_t r, cplx scale) {
        double dev = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            dev = std::max(dev, std::abs(a.at(r, c) - scale * b.at(r, c)));
        }
        return dev;
    };

    if (mode == EquivMode::GlobalPhase) {
        // Anchor the phase at the largest |B| entry.
        std::size_t br = 0, bc = 0;
        double best = 0.0;
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                if (std::abs(b.at(r, c)) > best) {
                    best = std::abs(b.at(r, c));
                    br = r;
                    bc = c;
                }
            }
        }
        if (best == 0.0) {
            report.max_deviation = a.max_abs();
            report.ok = report.max_deviation < tol;
            return report;
        }
        cplx scale = a.at(br, bc) / b.at(br, bc);
        if (std::abs(scale) != 0.0) scale /= std::abs(scale);
        double dev = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r) dev = std::max(dev, row_scalar_dev(r, scale));
        report.max_deviation = dev;
        report.ok = dev < tol;
        return report;
    }

    // DiagonalPhase: a per-row unit scalar.
    double dev = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::size_t bc = 0;
        double best = 0.0;
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (std::abs(b.at(r, c)) > best) {
                best = std::abs(b.at(r, c));
                bc = c;
            }
        }
        if (best < tol) {
            // Row absent from the reference: the candidate row must vanish too.
            for (std::size_t c = 0; c < a.cols(); ++c) dev = std::max(dev, std::abs(a.at(r, c)));
            continue;
        }
        cplx scale = a.at(r, bc) / b.at(r, bc);
        dev = std::max(dev, std::abs(std::abs(scale) - 1.0));
        if (std::abs(scale) != 0.0) scale /= std::abs(scale);
        dev = std::max(dev, row_scalar_dev(r, scale));
    }
    report.max_deviation = dev;
    report.ok = dev < tol;
    return report;
}

namespace {

template <typename CircuitT>
std::vector<double> probabilities_impl(const CircuitT& c, std::size_t dim, std::size_t input,
                                       std::size_t cap) {
    check_cap(dim, cap);
    if (input >= dim) throw Error("input basis state out of range");
    Matrix state(dim, 1);
    state.at(input, 0) = 1.0;
    if constexpr (std::is_same_v<CircuitT, qd::Circuit>) {
        for (const auto& op : c.ops) apply_qudit_op(state, op, c.levels);
    } else {
        for (const auto& op : c.ops) {
            if (const auto* g = std::get_if<ir::Gate>(&op)) apply_qubit_gate(state, *g);
            // barriers and final measures don't change Born probabilities
            else if (std::holds_alternative<ir::Reset>(op) ||
                     std::holds_alternative<ir::Conditional>(op)) {
                throw Error("simulator: reset/conditional not supported");
            }
        }
    }
    std::vector<double> probs(dim);
    for (std::size_t k = 0; k < dim; ++k) probs[k] = std::norm(state.at(k, 0));
    return probs;
}

}  // namespace

std::vector<double> simulate_probabilities(const qd::Circuit& c, std::size_t input,
                                           std::size_t dim_cap) {
    return probabilities_impl(c, qudit_dim(c), input, dim_cap);
}

std::vector<double> simulate_probabilities(const ir::Circuit& c, std::size_t input,
                                           std::size_t dim_cap) {
    return probabilities_impl(c, ipow(2, c.qubits), input, dim_cap);
}

}  // namespace quditc::sim
