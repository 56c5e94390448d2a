#include "ecirr/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ecirr/error.hpp"

namespace ecirr {

FunctionalGraph FunctionalGraph::build(const RationalMap& m, const FieldCtx& field, u64 cap) {
    const u64 q = field.order();
    if (q > cap) fail(ErrorCode::kFieldTooLarge, "graph needs q <= " + std::to_string(cap) + ", got " + std::to_string(q));
    const RationalMap map = m.ctx() == field ? m : m.lift_to(field);
    const u64 inf = q;

    FunctionalGraph g(field);
    g.succ_.assign(q + 1, inf);

    // Evaluate a and b everywhere, then invert all nonzero b(x) at once
    // (prefix products, one field inversion).
    std::vector<Elem> num(q), den(q), prefix(q);
    Elem acc = field.one();
    for (u64 v = 0; v < q; ++v) {
        num[v] = map.a().eval(Elem{v});
        den[v] = map.b().eval(Elem{v});
        prefix[v] = acc;
        if (den[v].v != 0) acc = field.mul(acc, den[v]);
    }
    Elem inv_acc = field.inv(acc);
    for (u64 v = q; v-- > 0;) {
        if (den[v].v == 0) continue;
        const Elem inv_den = field.mul(inv_acc, prefix[v]);
        inv_acc = field.mul(inv_acc, den[v]);
        g.succ_[v] = field.mul(num[v], inv_den).v;
    }
    g.succ_[inf] = inf;

    // Inverse adjacency in CSR form.
    g.pred_start_.assign(q + 2, 0);
    for (u64 v = 0; v <= q; ++v) ++g.pred_start_[g.succ_[v] + 1];
    for (u64 v = 0; v <= q; ++v) g.pred_start_[v + 1] += g.pred_start_[v];
    g.pred_.resize(q + 1);
    std::vector<u64> fill(g.pred_start_.begin(), g.pred_start_.end() - 1);
    for (u64 v = 0; v <= q; ++v) g.pred_[fill[g.succ_[v]]++] = v;

    // Cycles by pointer chasing: 0 unvisited, 1 on the current walk, 2 done.
    g.cycle_id_.assign(q + 1, kNoCycle);
    std::vector<unsigned char> state(q + 1, 0);
    std::vector<u64> walk;
    for (u64 s = 0; s <= q; ++s) {
        if (state[s]) continue;
        walk.clear();
        u64 v = s;
        while (state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = g.succ_[v];
        }
        if (state[v] == 1) {
            Component comp;
            const u64 id = g.components_.size();
            u64 w = v;
            do {
                comp.cycle.push_back(w);
                g.cycle_id_[w] = id;
                w = g.succ_[w];
            } while (w != v);
            g.components_.push_back(std::move(comp));
        }
        for (u64 w : walk) state[w] = 2;
    }

    // Heights and roots by reverse BFS from the cycles.
    g.height_.assign(q + 1, 0);
    g.root_.assign(q + 1, 0);
    std::deque<u64> queue;
    for (u64 v = 0; v <= q; ++v) {
        if (g.cycle_id_[v] != kNoCycle) {
            g.root_[v] = v;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const u64 v = queue.front();
        queue.pop_front();
        for (u64 k = g.pred_start_[v]; k < g.pred_start_[v + 1]; ++k) {
            const u64 u = g.pred_[k];
            if (g.cycle_id_[u] != kNoCycle) continue;
            g.height_[u] = g.height_[v] + 1;
            g.root_[u] = g.root_[v];
            queue.push_back(u);
        }
    }
    for (u64 v = 0; v <= q; ++v) ++g.components_[g.cycle_id_[g.root_[v]]].size;
    return g;
}

u64 FunctionalGraph::node_of(const ProjPoint& pt) const {
    if (pt.is_infinity()) return infinity_node();
    if (!field_.contains(pt.x())) fail(ErrorCode::kNodeNotFound, "element outside the graph's field");
    return pt.x().v;
}

ProjPoint FunctionalGraph::point_of(u64 node) const {
    if (node > infinity_node()) fail(ErrorCode::kNodeNotFound, "node index out of range");
    return node == infinity_node() ? ProjPoint::infinity() : ProjPoint::affine(Elem{node});
}

std::pair<const u64*, const u64*> FunctionalGraph::preds(u64 node) const {
    const u64* base = pred_.data();
    return {base + pred_start_.at(node), base + pred_start_.at(node + 1)};
}

std::vector<TreeProfile> all_tree_profiles(const FunctionalGraph& g, unsigned subfield_deg) {
    const FieldCtx& k = g.field();
    if (subfield_deg == 0 || k.n() % subfield_deg != 0) {
        fail(ErrorCode::kSubfieldMismatch, "subfield degree " + std::to_string(subfield_deg) +
                                               " does not divide the field degree " + std::to_string(k.n()));
    }
    const u64 nodes = g.node_count();
    std::vector<u64> slot(nodes, ~u64{0});
    std::vector<TreeProfile> out;
    for (u64 v = 0; v < nodes; ++v) {
        if (!g.on_cycle(v)) continue;
        slot[v] = out.size();
        TreeProfile t;
        t.root = g.point_of(v);
        t.root_node = v;
        t.in_subfield = t.root.is_infinity() || k.in_subfield(t.root.x(), subfield_deg);
        out.push_back(std::move(t));
    }
    for (u64 v = 0; v < nodes; ++v) {
        if (g.on_cycle(v)) continue;
        TreeProfile& t = out[slot[g.root(v)]];
        ++t.size;
        t.depth = std::max(t.depth, g.height(v));
        if (g.in_degree(v) == 0) ++t.leaf_heights[g.height(v)];
    }
    return out;
}

std::vector<TreeProfile> tree_profiles(const FunctionalGraph& g, unsigned subfield_deg) {
    std::vector<TreeProfile> all = all_tree_profiles(g, subfield_deg);
    std::erase_if(all, [](const TreeProfile& t) { return !t.in_subfield; });
    return all;
}

DepthSummary summarize(const std::vector<TreeProfile>& profiles) {
    DepthSummary s;
    s.trees = profiles.size();
    if (profiles.empty()) return s;
    s.depth = profiles.front().depth;
    s.min_depth = s.max_depth = s.depth;
    for (const auto& t : profiles) {
        s.min_depth = std::min(s.min_depth, t.depth);
        s.max_depth = std::max(s.max_depth, t.depth);
        if (t.depth != s.depth) s.uniform_depth = false;
        for (const auto& [h, count] : t.leaf_heights) {
            if (h != s.depth) s.uniform_leaves = false;
        }
    }
    s.uniform_leaves = s.uniform_leaves && s.uniform_depth;
    return s;
}

std::pair<std::vector<ProjPoint>, std::vector<ProjPoint>> trajectory(const FunctionalGraph& g,
                                                                     const ProjPoint& start) {
    u64 v = g.node_of(start);
    std::vector<ProjPoint> tail, cycle;
    while (!g.on_cycle(v)) {
        tail.push_back(g.point_of(v));
        v = g.succ(v);
    }
    const u64 first = v;
    do {
        cycle.push_back(g.point_of(v));
        v = g.succ(v);
    } while (v != first);
    return {std::move(tail), std::move(cycle)};
}

std::string to_dot(const FunctionalGraph& g) {
    const FieldCtx& k = g.field();
    auto label = [&](u64 v) { return v == g.infinity_node() ? std::string("inf") : k.to_string(Elem{v}); };
    std::ostringstream os;
    os << "digraph G {\n";
    for (u64 v = 0; v < g.node_count(); ++v) {
        os << "  n" << v << " [label=\"" << label(v) << "\"";
        if (g.on_cycle(v)) os << ", shape=box";
        os << "];\n";
    }
    for (u64 v = 0; v < g.node_count(); ++v) os << "  n" << v << " -> n" << g.succ(v) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace ecirr
