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

#include "quditc/qudit_opt.hpp"

#include <cmath>

namespace quditc::qopt {

namespace {

// Angle normalization targets (-2pi, 2pi]; elimination/merge thresholds are
// exact identities of the half-angle convention: R has period 4pi, with
// R(2pi) = Ph^i(pi) Ph^j(pi); Ph and XX have period 2pi.
constexpr const char* kQuditRules = R"(
// phases on a common level add; full turns vanish
ph(i1, a1) . ph(i2, a2) => {
  if i1 == i2 { return ph(i1, a1 + a2); }
}
ph(i, a) => {
  if sin(a / 2) == 0 { return id; }
  if a > 2 * pi { return ph(i, a - 2 * pi); }
  if a < -2 * pi { return ph(i, a + 2 * pi); }
}

// rotations on the same levels: same axis adds, opposite axis subtracts,
// anything else fuses into one pulse plus a phase pair (exact on the block)
r(i1, j1, a1, p1) . r(i2, j2, a2, p2) => {
  if i1 == i2 && j1 == j2 {
    if p1 == p2 { return r(i1, j1, a1 + a2, p1); }
    if p1 == p2 + pi || p1 == p2 - pi { return r(i1, j1, a1 - a2, p1); }
    c1 = cos(a1 / 2); s1 = sin(a1 / 2);
    c2 = cos(a2 / 2); s2 = sin(a2 / 2);
    xr = c1 * c2 - s1 * s2 * cos(p1 - p2);
    xi = 0 - s1 * s2 * sin(p1 - p2);
    yr = c1 * s2 * sin(p2) + c2 * s1 * sin(p1);
    yi = 0 - (c1 * s2 * cos(p2) + c2 * s1 * cos(p1));
    ax = sqrt(xr * xr + xi * xi);
    ay = sqrt(yr * yr + yi * yi);
    if ay == 0 {
      return ph(i1, atan2(xi, xr)) . ph(j1, 0 - atan2(xi, xr));
    }
    if ax == 0 {
      return r(i1, j1, pi, atan2(yi, yr) + pi / 2);
    }
    g = atan2(xi, xr);
    return r(i1, j1, 2 * atan2(ay, ax), atan2(yi, yr) + pi / 2 + g)
         . ph(i1, g) . ph(j1, 0 - g);
  }
}
r(i, j, a, p) => {
  if j < i { return r(j, i, a, -p); }
  if sin(a / 4) == 0 { return id; }
  if sin(a / 2) == 0 { return ph(i, pi) . ph(j, pi); }
  if a > 2 * pi { return r(i, j, a - 4 * pi, p); }
  if a < -2 * pi { return r(i, j, a + 4 * pi, p); }
}

// entanglers on identical level pairs merge
xx(i1, j1, k1, l1, a1) . xx(i2, j2, k2, l2, a2) => {
  if i1 == i2 && j1 == j2 && k1 == k2 && l1 == l2 {
    return xx(i1, j1, k1, l1, a1 + a2);
  }
}
xx(i, j, k, l, a) => {
  if sin(a / 2) == 0 { return id; }
  if a > pi { return xx(i, j, k, l, a - 2 * pi); }
  if a < -pi { return xx(i, j, k, l, a + 2 * pi); }
}

// push phases rightward; a phase on a rotated level tilts the axis
ph(i, a) x . r(j, k, t, p) x => {
  if i == j { return r(j, k, t, p + a) x . ph(i, a) x; }
  if i == k { return r(j, k, t, p - a) x . ph(i, a) x; }
  return r(j, k, t, p) x . ph(i, a) x;
}
ph(i, a) x . xx(j, k, l, m, t) x,y => {
  if i != j && i != k { return xx(j, k, l, m, t) x,y . ph(i, a) x; }
}
ph(i, a) y . xx(j, k, l, m, t) x,y => {
  if i != l && i != m { return xx(j, k, l, m, t) x,y . ph(i, a) y; }
}
)";

int level_of(double v, const char* what) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9 || r < 0) {
        throw InternalError(std::string("rule produced a non-integer level for ") + what);
    }
    return static_cast<int>(r);
}

// Commutation is checked per (qudit, level): ops touching disjoint level
// sets of the same qudit commute exactly, so merges reach across them.
int resource(int qudit, int level, int d) { return qudit * d + level; }

void annotate_conflicts(rw::Term& t, int d) {
    t.conflicts.clear();
    if (t.name == "ph") {
        t.conflicts = {resource(t.entities[0], level_of(t.params[0], "ph"), d)};
    } else if (t.name == "r") {
        t.conflicts = {resource(t.entities[0], level_of(t.params[0], "r"), d),
                       resource(t.entities[0], level_of(t.params[1], "r"), d)};
    } else if (t.name == "xx") {
        t.conflicts = {resource(t.entities[0], level_of(t.params[0], "xx"), d),
                       resource(t.entities[0], level_of(t.params[1], "xx"), d),
                       resource(t.entities[1], level_of(t.params[2], "xx"), d),
                       resource(t.entities[1], level_of(t.params[3], "xx"), d)};
    }
}

std::vector<rw::Item> encode(const qd::Circuit& c) {
    std::vector<rw::Item> items;
    items.reserve(c.ops.size());
    for (std::size_t k = 0; k < c.ops.size(); ++k) {
        rw::Item item;
        item.orig = k;
        if (const auto* ph = std::get_if<qd::PhOp>(&c.ops[k])) {
            item.term = rw::Term{"ph", {double(ph->level), ph->theta}, {ph->qudit}, {}};
        } else if (const auto* r = std::get_if<qd::ROp>(&c.ops[k])) {
            item.term =
                rw::Term{"r", {double(r->i), double(r->j), r->theta, r->phi}, {r->qudit}, {}};
        } else if (const auto* xx = std::get_if<qd::XXOp>(&c.ops[k])) {
            item.term = rw::Term{
                "xx",
                {double(xx->i), double(xx->j), double(xx->k), double(xx->l), xx->theta},
                {xx->a, xx->b},
                {}};
        } else {
            const auto& bar = std::get<qd::BarrierOp>(c.ops[k]);
            for (int q : bar.qudits) {
                for (int lv = 0; lv < c.levels; ++lv) {
                    item.blocked.push_back(resource(q, lv, c.levels));
                }
            }
            item.all = bar.qudits.empty();
        }
        if (item.term) annotate_conflicts(*item.term, c.levels);
        items.push_back(std::move(item));
    }
    return items;
}

qd::Circuit decode(const qd::Circuit& original, const std::vector<rw::Item>& items) {
    qd::Circuit out;
    out.qudits = original.qudits;
    out.levels = original.levels;
    out.ops.reserve(items.size());
    for (const auto& item : items) {
        if (!item.term) {
            out.ops.push_back(original.ops[item.orig]);
            continue;
        }
        const auto& t = *item.term;
        if (t.name == "ph") {
            out.ops.push_back(qd::PhOp{t.entities[0], level_of(t.params[0], "ph"), t.params[1]});
        } else if (t.name == "r") {
            out.ops.push_back(qd::ROp{t.entities[0], level_of(t.params[0], "r"),
                                      level_of(t.params[1], "r"), t.params[2], t.params[3]});
        } else if (t.name == "xx") {
            out.ops.push_back(qd::make_xx(t.entities[0], t.entities[1],
                                          level_of(t.params[0], "xx"), level_of(t.params[1], "xx"),
                                          level_of(t.params[2], "xx"), level_of(t.params[3], "xx"),
                                          t.params[4]));
        } else {
            throw InternalError("unknown term '" + t.name + "' from qudit rules");
        }
    }
    out.validate();
    return out;
}

}  // namespace

const rw::RuleScript& builtin_rules() {
    static const rw::RuleScript script = [] {
        auto s = rw::parse_rules(kQuditRules, "<qudit-rules>");
        rw::GateTable gates = {
            {"ph", {2, 1}},
            {"r", {4, 1}},
            {"xx", {5, 2}},
        };
        rw::validate_rules(s, gates);
        return s;
    }();
    return script;
}

qd::Circuit optimize_qudit(const qd::Circuit& circuit, long cap, rw::OptimizeStats* stats) {
    const int d = circuit.levels;
    auto items = rw::optimize_items(encode(circuit), builtin_rules(), cap, stats,
                                    [d](rw::Term& t) { annotate_conflicts(t, d); });
    return decode(circuit, items);
}

qd::Circuit strip_trailing_phases(const qd::Circuit& circuit) {
    std::vector<bool> later_non_ph(circuit.qudits, false);
    std::vector<bool> keep(circuit.ops.size(), true);
    for (std::size_t k = circuit.ops.size(); k-- > 0;) {
        const auto& op = circuit.ops[k];
        if (const auto* ph = std::get_if<qd::PhOp>(&op)) {
            if (!later_non_ph[ph->qudit]) keep[k] = false;
        } else if (const auto* r = std::get_if<qd::ROp>(&op)) {
            later_non_ph[r->qudit] = true;
        } else if (const auto* xx = std::get_if<qd::XXOp>(&op)) {
            later_non_ph[xx->a] = true;
            later_non_ph[xx->b] = true;
        } else {
            const auto& bar = std::get<qd::BarrierOp>(op);
            if (bar.qudits.empty()) {
                later_non_ph.assign(circuit.qudits, true);
            } else {
                for (int q : bar.qudits) later_non_ph[q] = true;
            }
        }
    }
    qd::Circuit out;
    out.qudits = circuit.qudits;
    out.levels = circuit.levels;
    for (std::size_t k = 0; k < circuit.ops.size(); ++k) {
        if (keep[k]) out.ops.push_back(circuit.ops[k]);
    }
    return out;
}

}  // namespace quditc::qopt
