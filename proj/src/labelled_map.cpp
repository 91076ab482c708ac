#include "qeo/labelled_map.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qeo {
namespace combmap {

int LabelledMap::prev(int d) const
{
    int p = d;
    while (next[p] != d) p = next[p];
    return p;
}

LabelledMap::Faces LabelledMap::faces() const
{
    Faces f;
    f.id.assign(darts(), -1);
    for (int d = 0; d < darts(); ++d) {
        if (f.id[d] >= 0) continue;
        int deg = 0;
        for (int x = d; f.id[x] < 0; x = next[opp[x]]) {
            f.id[x] = f.count;
            ++deg;
        }
        f.degree.push_back(deg);
        ++f.count;
    }
    if (darts() == 0) {
        f.count = 1;
        f.degree = {0};
    }
    return f;
}

bool LabelledMap::validate(std::string* why, bool weak) const
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = darts();
    if (static_cast<int>(opp.size()) != n || static_cast<int>(dart_vertex.size()) != n)
        return fail("array size mismatch");
    if (n % 2 != 0) return fail("odd dart count");
    if (n == 0) {
        if (vertex_count() != 1) return fail("atomic map must have one vertex");
        return true;
    }
    if (root < 0 || root >= n) return fail("bad root dart");
    std::vector<int> hit(n, 0);
    for (int d = 0; d < n; ++d) {
        if (next[d] < 0 || next[d] >= n || opp[d] < 0 || opp[d] >= n) return fail("index out of range");
        if (opp[d] == d || opp[opp[d]] != d) return fail("opp not a fixed-point-free involution");
        if (dart_vertex[next[d]] != dart_vertex[d]) return fail("next leaves the vertex");
        hit[next[d]]++;
    }
    for (int d = 0; d < n; ++d)
        if (hit[d] != 1) return fail("next is not a permutation");
    // vertices consistent: every dart's vertex id valid, rotation cycles
    // cover each vertex's darts
    std::vector<int> seen_vertex(vertex_count(), 0);
    for (int d = 0; d < n; ++d) {
        if (dart_vertex[d] < 0 || dart_vertex[d] >= vertex_count()) return fail("bad vertex id");
        seen_vertex[dart_vertex[d]] = 1;
    }
    for (int u = 0; u < vertex_count(); ++u)
        if (!seen_vertex[u]) return fail("isolated vertex in a non-atomic map");
    // connectivity over <next, opp>
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int x : {next[d], opp[d]})
            if (!seen[x]) {
                seen[x] = 1;
                ++reached;
                stack.push_back(x);
            }
    }
    if (reached != n) return fail("not connected");
    // genus 0
    Faces f = faces();
    if (vertex_count() - edge_count() + f.count != 2) return fail("not planar (Euler)");
    // labels
    for (int d = 0; d < n; ++d) {
        int a = label[dart_vertex[d]], b = label[dart_vertex[opp[d]]];
        int diff = a - b;
        if (diff < 0) diff = -diff;
        if (weak ? diff > 1 : diff != 1) return fail("label adjacency violated");
    }
    return true;
}

std::vector<int> LabelledMap::outer_corners() const
{
    std::vector<int> out;
    if (atomic()) return out;
    int d = root;
    do {
        out.push_back(d);
        d = next[opp[d]];
    } while (d != root);
    return out;
}

int LabelledMap::local_minima() const
{
    if (atomic()) return 1;
    std::vector<char> is_min(vertex_count(), 1);
    for (int d = 0; d < darts(); ++d) {
        int u = dart_vertex[d], w = dart_vertex[opp[d]];
        if (label[w] < label[u]) is_min[u] = 0;
    }
    int c = 0;
    for (char b : is_min) c += b;
    return c;
}

int LabelledMap::inner_digons(const Faces& f) const
{
    if (atomic()) return 0;
    int outer = outer_face(f);
    int c = 0;
    for (int i = 0; i < f.count; ++i)
        if (i != outer && f.degree[i] == 2) ++c;
    return c;
}

int LabelledMap::inner_quadrangles(const Faces& f) const
{
    if (atomic()) return 0;
    int outer = outer_face(f);
    int c = 0;
    for (int i = 0; i < f.count; ++i)
        if (i != outer && f.degree[i] == 4) ++c;
    return c;
}

int LabelledMap::inner_bicoloured_quadrangles(const Faces& f) const
{
    if (atomic()) return 0;
    int outer = outer_face(f);
    // collect labels per face
    std::vector<std::set<int>> labs(f.count);
    for (int d = 0; d < darts(); ++d) labs[f.id[d]].insert(label[dart_vertex[d]]);
    int c = 0;
    for (int i = 0; i < f.count; ++i)
        if (i != outer && f.degree[i] == 4 && labs[i].size() == 2) ++c;
    return c;
}

int LabelledMap::outer_corners_with_label(int lab) const
{
    int c = 0;
    for (int d : outer_corners())
        if (label[dart_vertex[d]] == lab) ++c;
    return c;
}

Classification classify(const LabelledMap& m)
{
    Classification out;
    std::string why;
    if (!m.validate(&why)) {
        out.detail = "invalid map: " + why;
        return out;
    }
    if (m.atomic()) {
        out.kind = PatchKind::atomic;
        return out;
    }
    auto f = m.faces();
    const int outer = m.outer_face(f);
    std::vector<int> corners = m.outer_corners();
    const int deg = static_cast<int>(corners.size());
    if (deg != f.degree[outer]) {
        out.detail = "outer walk does not match the outer face";
        return out;
    }
    std::vector<int> labs;
    labs.reserve(deg);
    for (int d : corners) labs.push_back(m.label[m.dart_vertex[d]]);

    auto all_inner_deg = [&](std::initializer_list<int> allowed) {
        for (int i = 0; i < f.count; ++i) {
            if (i == outer) continue;
            bool ok = false;
            for (int a : allowed) ok = ok || f.degree[i] == a;
            if (!ok) return false;
        }
        return true;
    };

    // patch / l-patch: inner faces degree 4, outer alternately l, l+1 with l at
    // the root corner (a patch is the case l = 0)
    if (deg % 2 == 0 && all_inner_deg({4})) {
        const int l = labs[0];
        bool alt = true;
        for (int i = 0; i < deg; ++i) alt = alt && labs[i] == (i % 2 == 0 ? l : l + 1);
        if (alt) {
            out.kind = l == 0 ? PatchKind::patch : PatchKind::shifted_patch;
            out.shift = l;
            out.half_degree = deg / 2;
            return out;
        }
        // E-patch: 0, l1, 0, l3, ... with l_{2j+1} = 1 for j < k then -1
        if (labs[0] == 0) {
            bool even_zero = true;
            for (int i = 0; i < deg; i += 2) even_zero = even_zero && labs[i] == 0;
            if (even_zero) {
                int k = 0;
                bool seen_minus = false, ok = true;
                for (int i = 1; i < deg; i += 2) {
                    if (labs[i] == 1 && !seen_minus) ++k;
                    else if (labs[i] == -1) seen_minus = true;
                    else ok = false;
                }
                if (ok) {
                    out.kind = PatchKind::e_patch;
                    out.half_degree = deg / 2;
                    out.e_ones = k;
                    return out;
                }
            }
        }
    }
    // D-patch: inner faces of degree 2 or 4, digons incident to the root
    // vertex, outer degree 2 corners 0/1, root neighbours all labelled 1
    if (deg == 2 && all_inner_deg({2, 4}) && labs[0] == 0 && labs[1] == 1) {
        bool ok = true;
        const int rv = m.root_vertex();
        // digons incident to the root vertex
        std::vector<char> face_has_root(f.count, 0);
        for (int d = 0; d < m.darts(); ++d)
            if (m.dart_vertex[d] == rv) face_has_root[f.id[d]] = 1;
        for (int i = 0; i < f.count && ok; ++i)
            if (i != outer && f.degree[i] == 2 && !face_has_root[i]) ok = false;
        for (int d = 0; d < m.darts() && ok; ++d)
            if (m.dart_vertex[d] == rv && m.label[m.dart_vertex[m.opp[d]]] != 1) ok = false;
        if (ok) {
            out.kind = PatchKind::d_patch;
            out.half_degree = 1;
            return out;
        }
    }
    out.detail = "no family matched";
    return out;
}

LabelledMap atomic_map(int lab)
{
    LabelledMap m;
    m.label = {lab};
    return m;
}

LabelledMap shift_labels(const LabelledMap& m, int delta)
{
    LabelledMap r = m;
    for (int& l : r.label) l += delta;
    return r;
}

namespace {

// splice helper: insert dart d before dart at (same vertex) in the rotation
void insert_before(LabelledMap& m, int d, int at)
{
    int p = m.prev(at);
    m.next[p] = d;
    m.next[d] = at;
    m.dart_vertex[d] = m.dart_vertex[at];
}

// append a fresh pair of darts; returns their ids
std::pair<int, int> new_edge(LabelledMap& m)
{
    int a = m.darts();
    m.next.push_back(-1);
    m.next.push_back(-1);
    m.opp.push_back(a + 1);
    m.opp.push_back(a);
    m.dart_vertex.push_back(-1);
    m.dart_vertex.push_back(-1);
    return {a, a + 1};
}

// disjoint union, returning the dart offset of the second map and the
// vertex offset of the second map
std::pair<int, int> absorb(LabelledMap& m, const LabelledMap& o)
{
    const int doff = m.darts(), voff = m.vertex_count();
    for (int d = 0; d < o.darts(); ++d) {
        m.next.push_back(o.next[d] + doff);
        m.opp.push_back(o.opp[d] + doff);
        m.dart_vertex.push_back(o.dart_vertex[d] + voff);
    }
    for (int l : o.label) m.label.push_back(l);
    return {doff, voff};
}

} // namespace

LabelledMap join_patches(const LabelledMap& p1, const LabelledMap& p2)
{
    LabelledMap m;
    auto [off1, voff1] = absorb(m, p1);
    auto [off2, voff2] = absorb(m, p2);
    auto [a, b] = new_edge(m);

    if (p1.atomic()) {
        m.dart_vertex[a] = voff1;
        m.next[a] = a;
    } else {
        insert_before(m, a, p1.root + off1);
    }
    if (p2.atomic()) {
        m.dart_vertex[b] = voff2;
        m.next[b] = b;
        m.label[voff2] = 1; // the lone vertex plays the co-root
    } else {
        // b goes right after opp(root of p2) around the co-root vertex
        int target = p2.opp[p2.root] + off2;
        insert_before(m, b, m.next[target]);
    }
    m.root = a;
    return m;
}

LabelledMap add_digons(const LabelledMap& patch, const std::vector<int>& placement)
{
    auto cls = classify(patch);
    if (cls.kind != PatchKind::patch && cls.kind != PatchKind::atomic)
        throw std::invalid_argument("add_digons: input is not a patch");
    const int k = cls.kind == PatchKind::atomic ? 0 : cls.half_degree;
    if (static_cast<int>(placement.size()) != k + 1)
        throw std::invalid_argument("add_digons: placement must have k+1 entries");
    for (int c : placement)
        if (c < 0) throw std::invalid_argument("add_digons: negative placement");

    LabelledMap m;
    auto [doff, voff] = absorb(m, shift_labels(patch, 1));
    const int v0 = m.vertex_count();
    m.label.push_back(0);

    if (patch.atomic()) {
        // a stack of 1 + j parallel edges to the lone vertex (label 1 now)
        const int edges = 1 + placement[0];
        std::vector<int> fan, heads;
        for (int i = 0; i < edges; ++i) {
            auto [a, b] = new_edge(m);
            m.dart_vertex[a] = v0;
            m.dart_vertex[b] = voff;
            fan.push_back(a);
            heads.push_back(b);
        }
        for (int i = 0; i < edges; ++i) {
            m.next[fan[i]] = fan[(i + 1) % edges];
            m.next[heads[i]] = heads[(i + edges - 1) % edges]; // reversed cycle
        }
        m.root = fan[0];
        return m;
    }

    // attachment corner visits: the outer 1-corners of the shifted patch in
    // counterclockwise order from the root corner, root corner visited twice
    std::vector<int> all = patch.outer_corners();
    std::vector<int> visits;
    for (size_t i = 0; i < all.size(); i += 2) visits.push_back(all[i] + doff);
    visits.push_back(all[0] + doff);

    std::vector<int> fan;
    std::map<int, std::vector<int>> arrivals_at; // corner dart -> groups in visit order, reversed inside
    for (int visit = 0; visit <= k; ++visit) {
        std::vector<int> group;
        for (int c = 0; c < 1 + placement[visit]; ++c) {
            auto [a, b] = new_edge(m);
            m.dart_vertex[a] = v0;
            fan.push_back(a);
            group.push_back(b);
        }
        auto& dst = arrivals_at[visits[visit]];
        dst.insert(dst.end(), group.rbegin(), group.rend());
    }
    for (size_t i = 0; i < fan.size(); ++i) m.next[fan[i]] = fan[(i + 1) % fan.size()];
    // insertion before the corner dart: visit groups in order, each group
    // internally reversed (parallel edges of one group bound digons, adjacent
    // groups bound quadrangles)
    for (auto& [corner_dart, arr] : arrivals_at)
        for (int b : arr) insert_before(m, b, corner_dart);
    m.root = fan[0];
    return m;
}

LabelledMap decontract(const LabelledMap& S, const LabelledMap& C)
{
    if (C.atomic()) return S;
    if (S.atomic()) {
        // the contraction vertex is S's lone vertex: nothing moves
        if (S.label[0] != C.label[C.root_vertex()])
            throw std::invalid_argument("decontract: atomic S label mismatch");
        return C;
    }
    const int l = S.label[S.root_vertex()];
    LabelledMap m;
    auto [soff, svoff] = absorb(m, S);
    auto [coff, cvoff] = absorb(m, C);

    // the dangling edges: darts at C's root vertex, counterclockwise from the
    // root dart
    std::vector<int> fan;
    {
        int d = C.root;
        do {
            fan.push_back(d + coff);
            d = C.next[d];
        } while (d != C.root);
    }
    // digon test between consecutive fan darts (in C): the face between
    // u_i and u_{i+1} is {opp(u_i), u_{i+1}} when it is a digon
    auto digon_between = [&](size_t i) {
        // face between consecutive fan darts a, b around C's root vertex is
        // orbit(b); it is a digon exactly when phi(b) = opp(a)
        int a = fan[i] - coff, b = fan[i + 1] - coff;
        return C.next[C.opp[b]] == C.opp[a];
    };

    // S's outer 0-corners, counterclockwise from its root corner
    std::vector<int> zero_corners;
    for (int d : S.outer_corners())
        if (S.label[S.dart_vertex[d]] == l) zero_corners.push_back(d + soff);
    if (zero_corners.empty() || zero_corners[0] != S.root + soff)
        throw std::invalid_argument("decontract: S must be rooted at an l-corner");

    // assign each dangling dart a corner, advancing on digons; within a
    // corner the run keeps its order (consecutive pairs bound quadrangles)
    std::map<int, std::vector<int>> arrivals_at;
    size_t corner_idx = 0;
    for (size_t i = 0; i < fan.size(); ++i) {
        if (i > 0 && digon_between(i - 1)) {
            ++corner_idx;
            if (corner_idx >= zero_corners.size())
                throw std::invalid_argument("decontract: not enough l-corners (oc >= id violated)");
        }
        arrivals_at[zero_corners[corner_idx]].push_back(fan[i]);
    }
    for (auto& [corner_dart, arr] : arrivals_at)
        for (int b : arr) insert_before(m, b, corner_dart);

    // erase C's old root vertex (now dartless): compact vertex ids
    const int dead = C.root_vertex() + cvoff;
    for (int d = 0; d < m.darts(); ++d)
        if (m.dart_vertex[d] > dead) m.dart_vertex[d]--;
        else if (m.dart_vertex[d] == dead)
            throw std::logic_error("decontract: dart still on the contracted vertex");
    m.label.erase(m.label.begin() + dead);
    m.root = fan[0];
    return m;
}

LabelledMap patch_to_subpatch_form(const LabelledMap& patch)
{
    if (patch.atomic()) return atomic_map(patch.label[0] - 1);
    LabelledMap s = shift_labels(patch, -1);
    // advance the root one outer corner counterclockwise (to a 0-corner)
    s.root = s.next[s.opp[s.root]];
    return s;
}

LabelledMap flip_labels_reroot(const LabelledMap& e)
{
    LabelledMap r = e;
    for (int& l : r.label) l = -l;
    if (!r.atomic()) {
        // two outer corners counterclockwise
        r.root = r.next[r.opp[r.root]];
        r.root = r.next[r.opp[r.root]];
    }
    return r;
}

LabelledMap close_E_to_patch(const LabelledMap& e, CloseVariant variant)
{
    auto cls = classify(e);
    if (cls.kind != PatchKind::e_patch && cls.kind != PatchKind::atomic &&
        cls.kind != PatchKind::patch && cls.kind != PatchKind::shifted_patch)
        throw std::invalid_argument("close_E_to_patch: input is not an E-patch: " + cls.detail);

    LabelledMap m = variant == CloseVariant::B ? shift_labels(e, 1) : e;
    std::vector<int> corners = m.outer_corners();
    const int deg = static_cast<int>(corners.size());
    if (deg < 2) throw std::invalid_argument("close_E_to_patch: degenerate E-patch");

    int at_v0, at_v1;
    if (variant == CloseVariant::B) {
        // corners (after +1): c0 = 1 (u1), c1 = 2 (u), c2 = 1 (v1), ...,
        // c_{deg-1} = 0 (v0); new edge v0 -> v1, new face (v0, v1, u, u1)
        if (m.label[m.dart_vertex[corners[1]]] != 2)
            throw std::invalid_argument("close_E_to_patch: variant B needs the +1 corner first");
        at_v0 = corners[deg - 1];
        at_v1 = corners[2 % deg];
    } else {
        // corners: c0 = 0 (u), c1 = 1 (v1), ..., c_{deg-2} = 0 (v0),
        // c_{deg-1} = -1 (u1); new edge v0 -> v1
        if (m.label[m.dart_vertex[corners[deg - 1]]] != -1)
            throw std::invalid_argument("close_E_to_patch: variant A needs the -1 corner last");
        at_v0 = corners[deg - 2];
        at_v1 = corners[1];
    }
    auto [a, b] = new_edge(m);
    insert_before(m, a, at_v0);
    insert_before(m, b, at_v1);
    m.root = a;
    return m;
}

ExtractResult subpatch_extract(const LabelledMap& m)
{
    std::string why;
    if (!m.validate(&why)) throw std::invalid_argument("subpatch_extract: invalid map: " + why);
    ExtractResult out;
    if (m.atomic()) {
        out.S = m;
        out.C = m;
        return out;
    }
    const int l = m.label[m.root_vertex()];

    // M': component of the root vertex among vertices labelled <= l
    std::vector<char> in_mp(m.vertex_count(), 0);
    {
        std::vector<int> stack{m.root_vertex()};
        in_mp[m.root_vertex()] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int d = 0; d < m.darts(); ++d) {
                if (m.dart_vertex[d] != u) continue;
                int w = m.dart_vertex[m.opp[d]];
                if (m.label[w] <= l && !in_mp[w]) {
                    in_mp[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    auto edge_in_mp = [&](int d) { return in_mp[m.dart_vertex[d]] && in_mp[m.dart_vertex[m.opp[d]]]; };

    // faces reachable from the outer face across non-M' edges
    auto f = m.faces();
    std::vector<char> outside(f.count, 0);
    {
        std::vector<int> stack{m.outer_face(f)};
        outside[m.outer_face(f)] = 1;
        while (!stack.empty()) {
            int fi = stack.back();
            stack.pop_back();
            for (int d = 0; d < m.darts(); ++d) {
                if (f.id[d] != fi || edge_in_mp(d)) continue;
                int other = f.id[m.opp[d]];
                if (!outside[other]) {
                    outside[other] = 1;
                    stack.push_back(other);
                }
            }
        }
    }
    // S-darts: edges of M' or edges buried inside
    std::vector<char> in_S(m.darts(), 0);
    for (int d = 0; d < m.darts(); ++d)
        in_S[d] = edge_in_mp(d) || (!outside[f.id[d]] && !outside[f.id[m.opp[d]]]);
    for (int d = 0; d < m.darts(); ++d)
        if (in_S[d] != in_S[m.opp[d]]) throw std::logic_error("subpatch_extract: inconsistent S membership");

    // build S: restrict the rotation to S-darts
    const bool s_atomic = std::find(in_S.begin(), in_S.end(), 1) == in_S.end() ||
                          [&] {
                              for (int d = 0; d < m.darts(); ++d)
                                  if (in_S[d] && m.dart_vertex[d] == m.root_vertex()) return false;
                              // the root vertex carries no S-dart: S is atomic only if
                              // nothing at all is in S around it
                              for (int d = 0; d < m.darts(); ++d)
                                  if (in_S[d]) throw std::logic_error("subpatch_extract: S disconnected from root");
                              return true;
                          }();
    if (s_atomic) {
        out.S = atomic_map(l);
    } else {
        LabelledMap S;
        std::vector<int> dmap(m.darts(), -1), vmap(m.vertex_count(), -1);
        for (int d = 0; d < m.darts(); ++d)
            if (in_S[d]) {
                dmap[d] = S.darts();
                S.next.push_back(-1);
                S.opp.push_back(-1);
                S.dart_vertex.push_back(-1);
            }
        for (int d = 0; d < m.darts(); ++d) {
            if (!in_S[d]) continue;
            int u = m.dart_vertex[d];
            if (vmap[u] < 0) {
                vmap[u] = S.vertex_count();
                S.label.push_back(m.label[u]);
            }
            S.dart_vertex[dmap[d]] = vmap[u];
            S.opp[dmap[d]] = dmap[m.opp[d]];
            int x = m.next[d];
            while (!in_S[x]) x = m.next[x];
            S.next[dmap[d]] = dmap[x];
        }
        // root: the first S-dart counterclockwise from the root corner
        int r = m.root;
        while (!in_S[r]) r = m.next[r];
        S.root = dmap[r];
        out.S = S;
    }

    // build C: contract S to a single vertex labelled l
    {
        LabelledMap C;
        std::vector<int> dmap(m.darts(), -1), vmap(m.vertex_count(), -1);
        std::vector<char> s_vertex(m.vertex_count(), 0);
        for (int d = 0; d < m.darts(); ++d)
            if (in_S[d]) s_vertex[m.dart_vertex[d]] = 1;
        s_vertex[m.root_vertex()] = 1;
        for (int d = 0; d < m.darts(); ++d)
            if (!in_S[d]) {
                dmap[d] = C.darts();
                C.next.push_back(-1);
                C.opp.push_back(-1);
                C.dart_vertex.push_back(-1);
            }
        const int v0 = 0;
        C.label.push_back(l);
        for (int u = 0; u < m.vertex_count(); ++u)
            if (!s_vertex[u]) {
                vmap[u] = C.vertex_count();
                C.label.push_back(m.label[u]);
            }
        if (C.darts() == 0) {
            out.C = atomic_map(l);
        } else {
            for (int d = 0; d < m.darts(); ++d) {
                if (in_S[d]) continue;
                int u = m.dart_vertex[d];
                C.opp[dmap[d]] = dmap[m.opp[d]];
                if (!s_vertex[u]) {
                    C.dart_vertex[dmap[d]] = vmap[u];
                    int x = m.next[d];
                    while (in_S[x]) x = m.next[x]; // only possible at S-vertices
                    C.next[dmap[d]] = dmap[x];
                } else {
                    C.dart_vertex[dmap[d]] = v0;
                    // walk around the S-blob to the next C-dart
                    int x = m.next[d];
                    while (in_S[x]) x = m.next[m.opp[x]];
                    C.next[dmap[d]] = dmap[x];
                }
            }
            C.root = dmap[m.root];
            out.C = C;
        }
    }

    // the six statistic identities of the extraction
    {
        auto fm = m.faces();
        auto fs = out.S.faces();
        auto fc = out.C.faces();
        bool ok = m.inner_digons(fm) == out.S.inner_digons(fs) &&
                  m.inner_quadrangles(fm) ==
                      out.S.inner_quadrangles(fs) + out.C.inner_quadrangles(fc) + out.C.inner_digons(fc) &&
                  m.inner_bicoloured_quadrangles(fm) ==
                      out.S.inner_bicoloured_quadrangles(fs) + out.C.inner_bicoloured_quadrangles(fc) &&
                  m.local_minima() == out.S.local_minima() + out.C.local_minima() - 1 &&
                  m.outer_corners_with_label(l + 1) == out.C.outer_corners_with_label(l + 1) &&
                  m.outer_corners_with_label(l - 1) ==
                      out.S.outer_corners_with_label(l - 1) - out.C.inner_digons(fc);
        if (!ok) throw std::logic_error("subpatch_extract: statistic identities violated");
    }
    return out;
}

std::string to_json(const LabelledMap& m)
{
    nlohmann::json j;
    j["darts"] = m.darts();
    j["next"] = m.next;
    j["opp"] = m.opp;
    j["dart_vertex"] = m.dart_vertex;
    j["labels"] = m.label;
    j["root"] = m.root;
    return j.dump();
}

LabelledMap from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    LabelledMap m;
    m.next = j.at("next").get<std::vector<int>>();
    m.opp = j.at("opp").get<std::vector<int>>();
    m.dart_vertex = j.at("dart_vertex").get<std::vector<int>>();
    m.label = j.at("labels").get<std::vector<int>>();
    m.root = j.at("root").get<int>();
    return m;
}

} // namespace combmap
} // namespace qeo
