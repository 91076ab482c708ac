#ifndef QEO_ORACLES_HPP
#define QEO_ORACLES_HPP

#include "qeo/exactalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qeo {
namespace oracles {

// Rooted combinatorial map as a rotation system. Darts are 0-based; the root
// dart is 0 after canonical relabelling. sigma is the counterclockwise dart
// order around vertices, alpha the edge-pairing involution.
struct RotationSystem {
    std::vector<int> sigma;
    std::vector<int> alpha;

    int darts() const { return static_cast<int>(sigma.size()); }
    int edges() const { return darts() / 2; }
    int vertex_count() const;
    int face_count() const;

    // involution / connectivity / Euler (genus 0) checks
    bool validate(std::string* why = nullptr) const;

    // BFS relabelling from the root dart; equal canonical forms <=> rooted isomorphic
    RotationSystem canonical() const;

    bool operator==(const RotationSystem& o) const { return sigma == o.sigma && alpha == o.alpha; }
    bool operator<(const RotationSystem& o) const
    {
        if (sigma != o.sigma) return sigma < o.sigma;
        return alpha < o.alpha;
    }
};

// All rooted planar maps with exactly e edges (0 <= e <= 6), canonical
// representatives in a deterministic order.
std::vector<RotationSystem> enumerate_rooted_planar_maps(int e);

// Number of rooted planar maps with e edges: 2 * 3^e * (2e)! / (e! (e+2)!).
Int rooted_planar_map_count(int e);

// [t^e]Q(t,omega,v) for e <= e_max by brute force over Eulerian partial
// orientations (3^e states per map), weight omega^{#undirected} v^{#vertices}.
VSeries count_partial_orientations(int e_max);

// Same restricted to fully directed orientations (omega-degree 0 part), used
// by the reversal-parity property test.
std::vector<Int> count_fully_directed(int e_max);

} // namespace oracles

namespace trees {

// Brute-force counts for plane binary trees with solid/dashed edges:
// balanced, no balanced proper (non-leaf) subtree, by leaves (t) and special
// leaves (v). Equals t - R0 coefficientwise. Full object-level enumeration.
VSeries count_charged_binary_trees(int n_max);

// Unary/binary trees, balanced, no balanced proper subtree; equals t - R1.
// Recursive generation with memoised charge bounds.
VSeries count_unary_binary_trees(int n_max);

// Unary/binary trees of charge 1 with no balanced subtree; equals t^2 (v + Q1).
VSeries count_unary_binary_charge1(int n_max);

// Object-level (non-memoised) recount cross-checking the memoised counter on
// small sizes.
VSeries count_unary_binary_trees_explicit(int n_max);

} // namespace trees
} // namespace qeo

#endif
