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

#include "quditc/route.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

namespace quditc::route {

namespace {

constexpr double kPi = M_PI;
constexpr double kHalfPi = M_PI / 2;

using qd::Op;
using qd::PhOp;
using qd::ROp;
using qd::XXOp;

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

// Composition of swap pulses as a signed permutation of levels:
// R^{ab}(pi, pi/2) maps |a> -> |b> and |b> -> -|a>.
struct Monomial {
    std::vector<int> image;
    std::vector<int> sign;

    explicit Monomial(int d) : image(d), sign(d, 1) {
        for (int k = 0; k < d; ++k) image[k] = k;
    }

    void apply_swap(int a, int b) {  // a < b: the pulse on edge (a, b)
        for (int k = 0; k < static_cast<int>(image.size()); ++k) {
            if (image[k] == a) {
                image[k] = b;
            } else if (image[k] == b) {
                image[k] = a;
                sign[k] = -sign[k];
            }
        }
    }
};

/// Shortest word of allowed swap edges mapping the level set {i,j} onto one
/// of `targets` (as a set). Returns nullopt when unreachable.
std::optional<std::vector<std::pair<int, int>>> find_word(
    const TransitionGraph& graph, std::pair<int, int> from,
    const std::set<std::pair<int, int>>& targets) {
    from = ordered(from.first, from.second);
    if (targets.count(from)) return std::vector<std::pair<int, int>>{};
    std::map<std::pair<int, int>, std::pair<std::pair<int, int>, std::pair<int, int>>> parent;
    std::queue<std::pair<int, int>> queue;
    queue.push(from);
    parent[from] = {from, {-1, -1}};
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop();
        for (const auto& edge : graph.r_pairs) {
            auto apply = [&](int level) {
                if (level == edge.first) return edge.second;
                if (level == edge.second) return edge.first;
                return level;
            };
            const auto next = ordered(apply(cur.first), apply(cur.second));
            if (parent.count(next)) continue;
            parent[next] = {cur, edge};
            if (targets.count(next)) {
                std::vector<std::pair<int, int>> word;
                auto walk = next;
                while (walk != from) {
                    word.push_back(parent[walk].second);
                    walk = parent[walk].first;
                }
                std::reverse(word.begin(), word.end());
                return word;
            }
            queue.push(next);
        }
    }
    return std::nullopt;
}

class Router {
  public:
    Router(const TransitionGraph& graph) : graph_(graph) { graph_.validate(); }

    qd::Circuit run(const qd::Circuit& circuit) {
        if (circuit.levels > graph_.d) {
            throw Error("circuit uses " + std::to_string(circuit.levels) +
                        " levels but the device supports " + std::to_string(graph_.d));
        }
        qd::Circuit out;
        out.qudits = circuit.qudits;
        out.levels = circuit.levels;
        for (const auto& op : circuit.ops) route_op(out, op);
        out.validate();
        return out;
    }

  private:
    void route_op(qd::Circuit& out, const Op& op) {
        if (const auto* r = std::get_if<ROp>(&op)) {
            route_r(out, *r);
        } else if (const auto* xx = std::get_if<XXOp>(&op)) {
            route_xx(out, *xx);
        } else {
            out.ops.push_back(op);  // Ph is virtual; barriers pass through
        }
    }

    void emit_word(qd::Circuit& out, int qudit, const std::vector<std::pair<int, int>>& word,
                   bool invert) {
        if (!invert) {
            for (const auto& [a, b] : word) out.ops.push_back(ROp{qudit, a, b, kPi, kHalfPi});
        } else {
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                out.ops.push_back(ROp{qudit, it->first, it->second, -kPi, kHalfPi});
            }
        }
    }

    // sigma_phi^{ij} conjugated by the word's monomial M:
    //   M sigma_phi^{ij} M^dag = s_i * s_j * sigma_phi^{p(i) p(j)}
    // (written-order levels; R^{qp} = R^{pq} with negated phi normalizes).
    struct Conjugated {
        int i, j;
        int sign;
    };

    Conjugated conjugate(const Monomial& m, int i, int j) const {
        return {m.image[i], m.image[j], m.sign[i] * m.sign[j]};
    }

    void route_r(qd::Circuit& out, const ROp& r) {
        const auto pair = ordered(r.i, r.j);
        if (graph_.allows_r(pair.first, pair.second)) {
            out.ops.push_back(normalized(r));
            return;
        }
        auto word = find_word(graph_, pair, graph_.r_pairs);
        if (!word) throw Error("cannot route R op: transition graph is disconnected");
        Monomial m(graph_.d);
        for (const auto& [a, b] : *word) m.apply_swap(a, b);
        const auto conj = conjugate(m, r.i, r.j);
        emit_word(out, r.qudit, *word, false);
        out.ops.push_back(
            normalized(ROp{r.qudit, conj.i, conj.j, r.theta * conj.sign, r.phi}));
        emit_word(out, r.qudit, *word, true);
    }

    /// Orientation with the lower level first; R^{ji}(theta,phi) = R^{ij}(theta,-phi).
    static ROp normalized(ROp r) {
        if (r.i > r.j) {
            std::swap(r.i, r.j);
            r.phi = -r.phi;
        }
        return r;
    }

    void route_xx(qd::Circuit& out, const XXOp& xx) {
        if (graph_.allows_xx(xx.i, xx.j, xx.k, xx.l)) {
            out.ops.push_back(xx);
            return;
        }
        // Route each side independently onto an allowed XX level pair,
        // trying every allowed pair and keeping the cheapest total word.
        std::optional<std::vector<std::pair<int, int>>> best_a, best_b;
        std::array<int, 4> best_target{};
        for (const auto& target : graph_.xx_pairs) {
            auto word_a = find_word(graph_, {xx.i, xx.j}, {{target[0], target[1]}});
            auto word_b = find_word(graph_, {xx.k, xx.l}, {{target[2], target[3]}});
            if (!word_a || !word_b) continue;
            if (!best_a || word_a->size() + word_b->size() < best_a->size() + best_b->size()) {
                best_a = word_a;
                best_b = word_b;
                best_target = target;
            }
        }
        if (!best_a) throw Error("cannot route XX op onto an allowed level pair");
        Monomial ma(graph_.d), mb(graph_.d);
        for (const auto& [a, b] : *best_a) ma.apply_swap(a, b);
        for (const auto& [a, b] : *best_b) mb.apply_swap(a, b);
        const auto ca = conjugate(ma, xx.i, xx.j);
        const auto cb = conjugate(mb, xx.k, xx.l);
        emit_word(out, xx.a, *best_a, false);
        emit_word(out, xx.b, *best_b, false);
        out.ops.push_back(qd::make_xx(xx.a, xx.b, best_target[0], best_target[1], best_target[2],
                                      best_target[3], xx.theta * ca.sign * cb.sign));
        emit_word(out, xx.b, *best_b, true);
        emit_word(out, xx.a, *best_a, true);
    }

    TransitionGraph graph_;
};

}  // namespace

TransitionGraph TransitionGraph::star(int d) {
    TransitionGraph g;
    g.d = d;
    for (int i = 1; i < d; ++i) g.r_pairs.insert({0, i});
    if (d >= 2) g.xx_pairs.insert({0, 1, 0, 1});
    return g;
}

bool TransitionGraph::allows_r(int i, int j) const {
    return r_pairs.count(ordered(i, j)) != 0;
}

bool TransitionGraph::allows_xx(int i, int j, int k, int l) const {
    const auto a = ordered(i, j);
    const auto b = ordered(k, l);
    return xx_pairs.count({a.first, a.second, b.first, b.second}) != 0 ||
           xx_pairs.count({b.first, b.second, a.first, a.second}) != 0;
}

void TransitionGraph::validate() const {
    std::vector<int> seen(d, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop();
        for (const auto& [a, b] : r_pairs) {
            const int other = a == cur ? b : (b == cur ? a : -1);
            if (other >= 0 && !seen[other]) {
                seen[other] = 1;
                queue.push(other);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw Error("transition graph is not connected over the levels");
    }
    for (const auto& t : xx_pairs) {
        if (t[0] >= t[1] || t[2] >= t[3] || t[1] >= d || t[3] >= d) {
            throw Error("malformed XX transition pair");
        }
    }
}

qd::Circuit route(const qd::Circuit& circuit, const TransitionGraph& graph) {
    return Router(graph).run(circuit);
}

bool is_legal(const qd::Circuit& circuit, const TransitionGraph& graph) {
    for (const auto& op : circuit.ops) {
        if (const auto* r = std::get_if<ROp>(&op)) {
            if (!graph.allows_r(r->i, r->j)) return false;
        } else if (const auto* xx = std::get_if<XXOp>(&op)) {
            if (!graph.allows_xx(xx->i, xx->j, xx->k, xx->l)) return false;
        }
    }
    return true;
}

}  // namespace quditc::route
