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

// Bundled runtime sources. Gate conventions:
//   rz(t) = diag(1, e^{it})                 (virtual frame rotation)
//   r(t, p) = exp(-i*(t/2)*sigma_p)         (half-angle pulse)
//   xx(t) = exp(-i*t*X(x)X)                 (Molmer-Sorensen)
//   U(t, p, l) = rz(l) ry(t) rz(p)          (emulator one-qubit unitary)

#include "quditc/runtime_data.hpp"

namespace quditc::rt::data {

// ---------------------------------------------------------------------------
// shared single-qubit definitions over {rz, r}

#define QUDITC_COMMON_1Q_GATES \
    "gate id q0 { rz(0) q0; }\n" \
    "gate x q0 { r(pi, 0) q0; }\n" \
    "gate y q0 { r(pi, pi/2) q0; }\n" \
    "gate z q0 { rz(pi) q0; }\n" \
    "gate h q0 {\n" \
    "  r(pi/2, -pi/2) q0;\n" \
    "  rz(pi) q0;\n" \
    "}\n" \
    "gate s q0 { rz(pi/2) q0; }\n" \
    "gate sdg q0 { rz(-pi/2) q0; }\n" \
    "gate t q0 { rz(pi/4) q0; }\n" \
    "gate tdg q0 { rz(-pi/4) q0; }\n" \
    "gate sx q0 { r(pi/2, 0) q0; }\n" \
    "gate sxdg q0 { r(-pi/2, 0) q0; }\n" \
    "gate rx(the) q0 { r(the, 0) q0; }\n" \
    "gate ry(the) q0 { r(the, pi/2) q0; }\n" \
    "gate u1(lam) q0 { rz(lam) q0; }\n" \
    "gate p(lam) q0 { rz(lam) q0; }\n" \
    "gate u2(phi, lam) q0 { rz(lam) q0; ry(pi/2) q0; rz(phi) q0; }\n" \
    "gate u3(the, phi, lam) q0 { rz(lam) q0; ry(the) q0; rz(phi) q0; }\n" \
    "gate u(the, phi, lam) q0 { u3(the, phi, lam) q0; }\n" \
    "gate U(the, phi, lam) q0 { u3(the, phi, lam) q0; }\n"

#define QUDITC_COMMON_2Q_GATES \
    "gate CX q0, q1 { cx q0, q1; }\n" \
    "gate cy q0, q1 { sdg q1; cx q0, q1; s q1; }\n" \
    "gate swap q0, q1 { cx q0, q1; cx q1, q0; cx q0, q1; }\n" \
    "gate crz(lam) q0, q1 { rz(lam/2) q1; cx q0, q1; rz(-lam/2) q1; cx q0, q1; }\n" \
    "gate cp(lam) q0, q1 {\n" \
    "  rz(lam/2) q0;\n" \
    "  rz(lam/2) q1;\n" \
    "  cx q0, q1;\n" \
    "  rz(-lam/2) q1;\n" \
    "  cx q0, q1;\n" \
    "}\n" \
    "gate cu1(lam) q0, q1 { cp(lam) q0, q1; }\n"

#define QUDITC_COMMON_MCX_GATES \
    "gate ccx q0, q1, q2 { h q2; ccz q0, q1, q2; h q2; }\n" \
    "gate cswap q0, q1, q2 {\n" \
    "  cx q2, q1;\n" \
    "  ccx q0, q1, q2;\n" \
    "  cx q2, q1;\n" \
    "}\n" \
    "gate c3x q0, q1, q2, q3 { h q3; cccz q0, q1, q2, q3; h q3; }\n" \
    "gate c4x q0, q1, q2, q3, q4 { h q4; c4z q0, q1, q2, q3, q4; h q4; }\n"

// ---------------------------------------------------------------------------
// trapped ion intermediate representation: every multicontrolled Z is native

const char* kIonIrQelib =
    "// trapped ion intermediate representation gate library\n"
    "opaque rz(the) q0;\n"
    "opaque r(the, phi) q0;\n"
    "opaque cz q0, q1;\n"
    "opaque ccz q0, q1, q2;\n"
    "opaque cccz q0, q1, q2, q3;\n"
    "opaque c4z q0, q1, q2, q3, q4;\n"
    "opaque c5z q0, q1, q2, q3, q4, q5;\n"
    "opaque c6z q0, q1, q2, q3, q4, q5, q6;\n"
    "opaque c7z q0, q1, q2, q3, q4, q5, q6, q7;\n"
    "opaque c8z q0, q1, q2, q3, q4, q5, q6, q7, q8;\n"
    "\n" QUDITC_COMMON_1Q_GATES
    "gate cx q0, q1 {\n"
    "  h q1;\n"
    "  cz q0, q1;\n"
    "  h q1;\n"
    "}\n" QUDITC_COMMON_2Q_GATES QUDITC_COMMON_MCX_GATES;

const char* kIonIrMatcher = R"(// trapped ion intermediate representation rules

// Reducing sequence length:
rz(a0) . rz(a1) => {
  return rz(a0 + a1);
}

// Replacing gate parameters according to symmetries:
rz(a) => {
  a_2 = a / 2;
  s = sin(a_2);
  if s == 0 {
    return id;
  } else if a_2 > pi || a_2 < -pi {
    return rz(2 * atan2(s, cos(a_2)));
  }
}

// Replacing complex gates with simpler equivalent sequences: two pulses
// become one pulse and a frame rotation.
r(t1, p1) . r(t2, p2) => {
  c1 = cos(t1 / 2); s1 = sin(t1 / 2);
  c2 = cos(t2 / 2); s2 = sin(t2 / 2);
  xr = c1 * c2 - s1 * s2 * cos(p1 - p2);
  xi = 0 - s1 * s2 * sin(p1 - p2);
  yr = c1 * s2 * sin(p2) + c2 * s1 * sin(p1);
  yi = 0 - (c1 * s2 * cos(p2) + c2 * s1 * cos(p1));
  ax = sqrt(xr * xr + xi * xi);
  ay = sqrt(yr * yr + yi * yi);
  if ay == 0 { return rz(0 - 2 * atan2(xi, xr)); }
  if ax == 0 { return r(pi, atan2(yi, yr) + pi / 2); }
  return r(2 * atan2(ay, ax), atan2(yi, yr) + atan2(xi, xr) + pi / 2)
       . rz(0 - 2 * atan2(xi, xr));
}
r(t, p) => {
  if sin(t / 2) == 0 { return id; }
  if t > pi || t < -pi { return r(atan2(sin(t), cos(t)), p); }
}

// Preserving some ordering in a sequence: move rz to the end of the circuit.
rz(a) . r(b, c) => {
  return r(b, c - a) . rz(a);
}
rz(a) x . cz x,y => { return cz x,y . rz(a) x; }
rz(a) y . cz x,y => { return cz x,y . rz(a) y; }
rz(a) x . ccz x,y,z => { return ccz x,y,z . rz(a) x; }
rz(a) y . ccz x,y,z => { return ccz x,y,z . rz(a) y; }
rz(a) z . ccz x,y,z => { return ccz x,y,z . rz(a) z; }
rz(a) x . cccz x,y,z,w => { return cccz x,y,z,w . rz(a) x; }
rz(a) y . cccz x,y,z,w => { return cccz x,y,z,w . rz(a) y; }
rz(a) z . cccz x,y,z,w => { return cccz x,y,z,w . rz(a) z; }
rz(a) w . cccz x,y,z,w => { return cccz x,y,z,w . rz(a) w; }
rz(a) x . c4z x,y,z,w,v => { return c4z x,y,z,w,v . rz(a) x; }
rz(a) y . c4z x,y,z,w,v => { return c4z x,y,z,w,v . rz(a) y; }
rz(a) z . c4z x,y,z,w,v => { return c4z x,y,z,w,v . rz(a) z; }
rz(a) w . c4z x,y,z,w,v => { return c4z x,y,z,w,v . rz(a) w; }
rz(a) v . c4z x,y,z,w,v => { return c4z x,y,z,w,v . rz(a) v; }

// Removing involutions:
cz x,y . cz x,y => { return id; }
ccz x,y,z . ccz x,y,z => { return id; }
cccz x,y,z,w . cccz x,y,z,w => { return id; }
c4z x,y,z,w,v . c4z x,y,z,w,v => { return id; }
)";

// ---------------------------------------------------------------------------
// trapped ion quantum computer (qubit execution): rz, r, xx natives

const char* kIonQelib =
    "// trapped ion quantum computer gate library\n"
    "opaque rz(the) q0;\n"
    "opaque r(the, phi) q0;\n"
    "opaque xx(the) q0, q1;\n"
    "\n" QUDITC_COMMON_1Q_GATES
    "gate cz q0, q1 {\n"
    "  r(-pi/2, pi/2) q0;\n"
    "  r(-pi/2, pi/2) q1;\n"
    "  xx(pi/4) q0, q1;\n"
    "  r(pi/2, pi/2) q0;\n"
    "  r(pi/2, pi/2) q1;\n"
    "  rz(-pi/2) q0;\n"
    "  rz(-pi/2) q1;\n"
    "}\n"
    "gate cx q0, q1 {\n"
    "  h q1;\n"
    "  cz q0, q1;\n"
    "  h q1;\n"
    "}\n" QUDITC_COMMON_2Q_GATES
    "gate ccz q0, q1, q2 {\n"
    "  cx q1, q2;\n"
    "  tdg q2;\n"
    "  cx q0, q2;\n"
    "  t q2;\n"
    "  cx q1, q2;\n"
    "  tdg q2;\n"
    "  cx q0, q2;\n"
    "  t q1;\n"
    "  t q2;\n"
    "  cx q0, q1;\n"
    "  t q0;\n"
    "  tdg q1;\n"
    "  cx q0, q1;\n"
    "}\n"
    "gate ccp(lam) q0, q1, q2 {\n"
    "  cp(lam/2) q0, q1;\n"
    "  cp(lam/2) q0, q2;\n"
    "  cx q1, q2;\n"
    "  cp(-lam/2) q0, q2;\n"
    "  cx q1, q2;\n"
    "}\n"
    "gate cccz q0, q1, q2, q3 {\n"
    "  ccp(pi/2) q0, q1, q2;\n"
    "  ccp(pi/2) q0, q1, q3;\n"
    "  cx q2, q3;\n"
    "  ccp(-pi/2) q0, q1, q3;\n"
    "  cx q2, q3;\n"
    "}\n"
    "gate c3p(lam) q0, q1, q2, q3 {\n"
    "  ccp(lam/2) q0, q1, q2;\n"
    "  ccp(lam/2) q0, q1, q3;\n"
    "  cx q2, q3;\n"
    "  ccp(-lam/2) q0, q1, q3;\n"
    "  cx q2, q3;\n"
    "}\n"
    "gate c4z q0, q1, q2, q3, q4 {\n"
    "  c3p(pi/2) q0, q1, q2, q3;\n"
    "  c3p(pi/2) q0, q1, q2, q4;\n"
    "  cx q3, q4;\n"
    "  c3p(-pi/2) q0, q1, q2, q4;\n"
    "  cx q3, q4;\n"
    "}\n" QUDITC_COMMON_MCX_GATES;

const char* kIonMatcher = R"(// trapped ion quantum computer rules

rz(a0) . rz(a1) => {
  return rz(a0 + a1);
}
rz(a) => {
  a_2 = a / 2;
  s = sin(a_2);
  if s == 0 {
    return id;
  } else if a_2 > pi || a_2 < -pi {
    return rz(2 * atan2(s, cos(a_2)));
  }
}

r(t1, p1) . r(t2, p2) => {
  c1 = cos(t1 / 2); s1 = sin(t1 / 2);
  c2 = cos(t2 / 2); s2 = sin(t2 / 2);
  xr = c1 * c2 - s1 * s2 * cos(p1 - p2);
  xi = 0 - s1 * s2 * sin(p1 - p2);
  yr = c1 * s2 * sin(p2) + c2 * s1 * sin(p1);
  yi = 0 - (c1 * s2 * cos(p2) + c2 * s1 * cos(p1));
  ax = sqrt(xr * xr + xi * xi);
  ay = sqrt(yr * yr + yi * yi);
  if ay == 0 { return rz(0 - 2 * atan2(xi, xr)); }
  if ax == 0 { return r(pi, atan2(yi, yr) + pi / 2); }
  return r(2 * atan2(ay, ax), atan2(yi, yr) + atan2(xi, xr) + pi / 2)
       . rz(0 - 2 * atan2(xi, xr));
}
r(t, p) => {
  if sin(t / 2) == 0 { return id; }
  if t > pi || t < -pi { return r(atan2(sin(t), cos(t)), p); }
}

rz(a) . r(b, c) => {
  return r(b, c - a) . rz(a);
}

xx(a0) x,y . xx(a1) x,y => { return xx(a0 + a1) x,y; }
xx(a) x,y => {
  if sin(a) == 0 { return id; }
}
)";

// ---------------------------------------------------------------------------
// quantum emulator: U, cx natives

const char* kEmulatorQelib =
    "// quantum emulator gate library\n"
    "opaque U(the, phi, lam) q0;\n"
    "opaque cx q0, q1;\n"
    "\n"
    "gate u3(the, phi, lam) q0 { U(the, phi, lam) q0; }\n"
    "gate u2(phi, lam) q0 { U(pi/2, phi, lam) q0; }\n"
    "gate u1(lam) q0 { U(0, 0, lam) q0; }\n"
    "gate u(the, phi, lam) q0 { U(the, phi, lam) q0; }\n"
    "gate p(lam) q0 { u1(lam) q0; }\n"
    "gate id q0 { U(0, 0, 0) q0; }\n"
    "gate x q0 { u3(pi, 0, pi) q0; }\n"
    "gate y q0 { u3(pi, pi/2, pi/2) q0; }\n"
    "gate z q0 { u1(pi) q0; }\n"
    "gate h q0 { u2(0, pi) q0; }\n"
    "gate s q0 { u1(pi/2) q0; }\n"
    "gate sdg q0 { u1(-pi/2) q0; }\n"
    "gate t q0 { u1(pi/4) q0; }\n"
    "gate tdg q0 { u1(-pi/4) q0; }\n"
    "gate rx(the) q0 { u3(the, -pi/2, pi/2) q0; }\n"
    "gate ry(the) q0 { u3(the, 0, 0) q0; }\n"
    "gate rz(lam) q0 { u1(lam) q0; }\n"
    "gate CX q0, q1 { cx q0, q1; }\n"
    "gate cz q0, q1 { h q1; cx q0, q1; h q1; }\n"
    "gate cy q0, q1 { sdg q1; cx q0, q1; s q1; }\n"
    "gate swap q0, q1 { cx q0, q1; cx q1, q0; cx q0, q1; }\n"
    "gate crz(lam) q0, q1 { rz(lam/2) q1; cx q0, q1; rz(-lam/2) q1; cx q0, q1; }\n"
    "gate cp(lam) q0, q1 {\n"
    "  rz(lam/2) q0;\n"
    "  rz(lam/2) q1;\n"
    "  cx q0, q1;\n"
    "  rz(-lam/2) q1;\n"
    "  cx q0, q1;\n"
    "}\n"
    "gate cu1(lam) q0, q1 { cp(lam) q0, q1; }\n"
    "gate ccx q0, q1, q2 {\n"
    "  h q2;\n"
    "  cx q1, q2;\n"
    "  tdg q2;\n"
    "  cx q0, q2;\n"
    "  t q2;\n"
    "  cx q1, q2;\n"
    "  tdg q2;\n"
    "  cx q0, q2;\n"
    "  t q1;\n"
    "  t q2;\n"
    "  h q2;\n"
    "  cx q0, q1;\n"
    "  t q0;\n"
    "  tdg q1;\n"
    "  cx q0, q1;\n"
    "}\n"
    "gate ccz q0, q1, q2 { h q2; ccx q0, q1, q2; h q2; }\n"
    "gate cswap q0, q1, q2 {\n"
    "  cx q2, q1;\n"
    "  ccx q0, q1, q2;\n"
    "  cx q2, q1;\n"
    "}\n"
    "gate ccp(lam) q0, q1, q2 {\n"
    "  cp(lam/2) q0, q1;\n"
    "  cp(lam/2) q0, q2;\n"
    "  cx q1, q2;\n"
    "  cp(-lam/2) q0, q2;\n"
    "  cx q1, q2;\n"
    "}\n"
    "gate cccz q0, q1, q2, q3 {\n"
    "  ccp(pi/2) q0, q1, q2;\n"
    "  ccp(pi/2) q0, q1, q3;\n"
    "  cx q2, q3;\n"
    "  ccp(-pi/2) q0, q1, q3;\n"
    "  cx q2, q3;\n"
    "}\n"
    "gate c3p(lam) q0, q1, q2, q3 {\n"
    "  ccp(lam/2) q0, q1, q2;\n"
    "  ccp(lam/2) q0, q1, q3;\n"
    "  cx q2, q3;\n"
    "  ccp(-lam/2) q0, q1, q3;\n"
    "  cx q2, q3;\n"
    "}\n"
    "gate c4z q0, q1, q2, q3, q4 {\n"
    "  c3p(pi/2) q0, q1, q2, q3;\n"
    "  c3p(pi/2) q0, q1, q2, q4;\n"
    "  cx q3, q4;\n"
    "  c3p(-pi/2) q0, q1, q2, q4;\n"
    "  cx q3, q4;\n"
    "}\n"
    "gate c3x q0, q1, q2, q3 { h q3; cccz q0, q1, q2, q3; h q3; }\n"
    "gate c4x q0, q1, q2, q3, q4 { h q4; c4z q0, q1, q2, q3, q4; h q4; }\n";

const char* kEmulatorMatcher = R"(// quantum emulator rules

// fuse adjacent one-qubit unitaries
U(t1, p1, l1) . U(t2, p2, l2) => {
  c1 = cos(t1 / 2); s1 = sin(t1 / 2);
  c2 = cos(t2 / 2); s2 = sin(t2 / 2);
  xr = c1 * c2 - s1 * s2 * cos(p1 + l2);
  xi = 0 - s1 * s2 * sin(p1 + l2);
  yr = c1 * s2 * cos(p2) + c2 * s1 * cos(p1 + p2 + l2);
  yi = c1 * s2 * sin(p2) + c2 * s1 * sin(p1 + p2 + l2);
  zr = c2 * s1 * cos(l1) + c1 * s2 * cos(l1 + l2 + p1);
  zi = c2 * s1 * sin(l1) + c1 * s2 * sin(l1 + l2 + p1);
  wr = c1 * c2 * cos(p1 + p2 + l1 + l2) - s1 * s2 * cos(p2 + l1);
  wi = c1 * c2 * sin(p1 + p2 + l1 + l2) - s1 * s2 * sin(p2 + l1);
  ax = sqrt(xr * xr + xi * xi);
  ay = sqrt(yr * yr + yi * yi);
  if ay == 0 { return U(0, 0, atan2(wi, wr) - atan2(xi, xr)); }
  if ax == 0 { return U(pi, atan2(yi, yr), atan2(zi, zr)); }
  g = atan2(xi, xr);
  return U(2 * atan2(ay, ax), atan2(yi, yr) - g, atan2(zi, zr) - g);
}
U(t, p, l) => {
  if sin(t / 2) == 0 {
    if sin((p + l) / 2) == 0 { return id; }
    if t != 0 || p != 0 { return U(0, 0, p + l); }
  }
}
cx x,y . cx x,y => { return id; }
)";

}  // namespace quditc::rt::data
