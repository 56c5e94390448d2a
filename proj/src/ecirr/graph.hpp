#ifndef ECIRR_GRAPH_HPP
#define ECIRR_GRAPH_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ecirr/ratmap.hpp"

namespace ecirr {

/// Functional graph of x -> r(x) on P^1(F_q).
///
/// Nodes are indexed by the packed field element; infinity is node q.
class FunctionalGraph {
public:
    static constexpr u64 kNoCycle = ~u64{0};

    struct Component {
        std::vector<u64> cycle;  // in successor order
        u64 size = 0;            // cycle plus attached trees
    };

    /// The map is lifted to `field` when it is defined over the prime field.
    /// Throws FieldTooLarge when q exceeds cap.
    static FunctionalGraph build(const RationalMap& m, const FieldCtx& field, u64 cap = enumeration_cap());

    const FieldCtx& field() const noexcept { return field_; }
    u64 node_count() const noexcept { return succ_.size(); }
    u64 infinity_node() const noexcept { return succ_.size() - 1; }
    u64 node_of(const ProjPoint& pt) const;  // NodeNotFound
    ProjPoint point_of(u64 node) const;

    u64 succ(u64 node) const { return succ_.at(node); }
    std::pair<const u64*, const u64*> preds(u64 node) const;
    u64 in_degree(u64 node) const { return pred_start_.at(node + 1) - pred_start_.at(node); }
    /// Component index for cycle vertices, kNoCycle otherwise.
    u64 cycle_id(u64 node) const { return cycle_id_.at(node); }
    bool on_cycle(u64 node) const { return cycle_id_.at(node) != kNoCycle; }
    u64 height(u64 node) const { return height_.at(node); }
    /// Cycle vertex at which node's tree is attached (itself on a cycle).
    u64 root(u64 node) const { return root_.at(node); }
    u64 component_of(u64 node) const { return cycle_id_.at(root_.at(node)); }
    const std::vector<Component>& components() const noexcept { return components_; }

private:
    explicit FunctionalGraph(FieldCtx field) : field_(std::move(field)) {}

    FieldCtx field_;
    std::vector<u64> succ_;
    std::vector<u64> pred_start_;
    std::vector<u64> pred_;
    std::vector<u64> cycle_id_;
    std::vector<u64> height_;
    std::vector<u64> root_;
    std::vector<Component> components_;
};

inline FunctionalGraph build_graph(const RationalMap& m, const FieldCtx& field, u64 cap = enumeration_cap()) {
    return FunctionalGraph::build(m, field, cap);
}

struct TreeProfile {
    ProjPoint root = ProjPoint::infinity();
    u64 root_node = 0;
    u64 depth = 0;                      // max height in the tree
    std::map<u64, u64> leaf_heights;    // height -> number of leaves
    u64 size = 0;                       // non-cycle vertices in the tree
    bool in_subfield = false;
};

/// Trees rooted at cycle vertices of P^1(F_{p^subfield_deg}).
/// Throws SubfieldMismatch unless subfield_deg divides the field degree.
std::vector<TreeProfile> tree_profiles(const FunctionalGraph& g, unsigned subfield_deg);

/// Every tree, with in_subfield flagging the subfield-rooted ones.
std::vector<TreeProfile> all_tree_profiles(const FunctionalGraph& g, unsigned subfield_deg);

struct DepthSummary {
    u64 trees = 0;
    bool uniform_depth = true;
    bool uniform_leaves = true;  // every leaf height equals the common depth
    u64 depth = 0;               // common depth (first tree's when not uniform)
    u64 min_depth = 0;
    u64 max_depth = 0;
};

DepthSummary summarize(const std::vector<TreeProfile>& profiles);

/// Rho decomposition from start: the tail before the cycle, then the cycle
/// starting at the first cycle vertex reached. Throws NodeNotFound.
std::pair<std::vector<ProjPoint>, std::vector<ProjPoint>> trajectory(const FunctionalGraph& g,
                                                                     const ProjPoint& start);

/// Graphviz digraph of the whole graph; cycle vertices are boxed.
std::string to_dot(const FunctionalGraph& g);

}  // namespace ecirr

#endif  // ECIRR_GRAPH_HPP
