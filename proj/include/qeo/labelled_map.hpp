#ifndef QEO_LABELLED_MAP_HPP
#define QEO_LABELLED_MAP_HPP

#include <string>
#include <vector>

namespace qeo {
namespace combmap {

// Rooted labelled planar map as a half-edge structure.
//
// Conventions (used consistently by every operation below):
//  - next[d] is the dart after d counterclockwise around its start vertex;
//  - opp[d] is the other half of d's edge;
//  - the corner written corner(d) is the sector between prev(d) and d;
//  - the root corner is corner(root); walking next(opp(d)) from the root
//    enumerates the outer corners in counterclockwise order around the map;
//  - faces are the orbits of phi(d) = next(opp(d)), the face to the RIGHT of
//    each dart; the outer face (root face) is the orbit of the root dart.
// The atomic map has one vertex and no darts (root = -1).
struct LabelledMap {
    std::vector<int> next;
    std::vector<int> opp;
    std::vector<int> dart_vertex;
    std::vector<int> label; // per vertex
    int root = -1;

    int darts() const { return static_cast<int>(next.size()); }
    int edge_count() const { return darts() / 2; }
    int vertex_count() const { return static_cast<int>(label.size()); }
    bool atomic() const { return darts() == 0; }

    int prev(int d) const; // inverse of next (linear scan around the vertex)
    int root_vertex() const { return atomic() ? 0 : dart_vertex[root]; }
    int coroot_vertex() const { return dart_vertex[opp[root]]; }

    // face ids per dart and face count; face 0 is not special
    struct Faces {
        std::vector<int> id;
        std::vector<int> degree;
        int count = 0;
    };
    Faces faces() const;
    // phi walks the face to the right of each dart, so the root face (the
    // outer face) is the orbit of the root dart itself
    int outer_face(const Faces& f) const { return atomic() ? 0 : f.id[root]; }

    // structural and label validation; weak = labels may also be equal on an
    // edge (weakly labelled map)
    bool validate(std::string* why = nullptr, bool weak = false) const;

    // outer corners counterclockwise from the root corner, as corner darts
    std::vector<int> outer_corners() const;

    int local_minima() const;
    int inner_digons(const Faces& f) const;
    int inner_quadrangles(const Faces& f) const;
    int inner_bicoloured_quadrangles(const Faces& f) const;
    // outer corners carrying the given label
    int outer_corners_with_label(int lab) const;
};

// The families overlap (the atomic map is a patch and a D-patch but not a
// C-patch; a digon-free D-patch whose root is a local minimum is a patch;
// an E-patch with k = m is a patch), so the classification reports each
// membership separately.
struct Classification {
    bool valid = false;
    bool is_atomic = false;
    bool is_patch = false;         // includes the shifted case via `shift`
    bool is_shifted_patch = false; // patch after subtracting `shift`
    bool is_d_patch = false;
    bool is_e_patch = false;
    int shift = 0;       // label shift of the shifted patch
    int half_degree = 0; // half the outer degree
    int e_ones = 0;      // k of the E-patch pattern
    std::string detail;
};

// Deterministic classification against the patch family definitions.
Classification classify(const LabelledMap& m);

LabelledMap atomic_map(int label);

// All labels shifted by delta.
LabelledMap shift_labels(const LabelledMap& m, int delta);

// New root edge joining the root vertex of p1 (label 0) to the co-root
// vertex of p2 (label 1); inverse of deleting a bridge root edge.
LabelledMap join_patches(const LabelledMap& p1, const LabelledMap& p2);

// From a patch of outer degree 2k to a D-patch of outer degree 2 with
// sum(placement) inner digons; placement has k+1 entries (the root corner
// counts twice). Labels are shifted +1 and a new root vertex labelled 0 is
// attached to every outer 1-corner.
LabelledMap add_digons(const LabelledMap& patch, const std::vector<int>& placement);

// Reattachment of the dangling root edges of C over the 0-corners of S;
// inverse of subpatch extraction. S is rooted at a 0-corner with outer
// corners alternating 0/-1; C is a D-patch.
LabelledMap decontract(const LabelledMap& S, const LabelledMap& C);

// Subpatch extraction: the maximal submap at the root with labels <= l,
// filled in, plus the contracted map. Asserts the six statistic identities.
struct ExtractResult {
    LabelledMap S;
    LabelledMap C;
};
ExtractResult subpatch_extract(const LabelledMap& m);

// patch <-> S-form used around decontract: shift labels -1 and advance the
// root corner one outer corner counterclockwise (so it sits on a 0-corner)
LabelledMap patch_to_subpatch_form(const LabelledMap& patch);

// label flip with the canonical re-rooting (two outer corners ccw)
LabelledMap flip_labels_reroot(const LabelledMap& e);

// Close an E-patch into a patch by adding the root edge and quadrangle:
// variant B expects exactly one outer corner labelled +1 (shifts labels +1,
// the new face reads 0,1,2,1), variant A exactly one labelled -1 (no shift,
// the new face reads 0,1,0,-1).
enum class CloseVariant { A, B };
LabelledMap close_E_to_patch(const LabelledMap& e, CloseVariant variant);

// JSON round trip of the map structure ({darts, next, opp, labels, root})
std::string to_json(const LabelledMap& m);
LabelledMap from_json(const std::string& text);

} // namespace combmap
} // namespace qeo

#endif
