#include "qeo/oracles.hpp"

#include <array>
#include <map>
#include <vector>

namespace qeo {
namespace trees {

namespace {

// ---- plane binary trees with solid/dashed edges, object-level ----

struct BinShape {
    int left = -1;  // -1 means leaf child
    int right = -1; // index into the arena of the smaller-leaf shapes
};

// arena[n] = list of shapes with n leaves; a shape is a node id into nodes
struct BinArena {
    std::vector<BinShape> nodes; // internal nodes only; leaf encoded as -1
    std::vector<std::vector<int>> roots_by_leaves;

    int add(int l, int r)
    {
        nodes.push_back({l, r});
        return static_cast<int>(nodes.size()) - 1;
    }

    void build(int n_max)
    {
        roots_by_leaves.assign(n_max + 1, {});
        if (n_max >= 1) roots_by_leaves[1] = {-1};
        for (int n = 2; n <= n_max; ++n)
            for (int i = 1; i < n; ++i)
                for (int l : roots_by_leaves[i])
                    for (int r : roots_by_leaves[n - i]) roots_by_leaves[n].push_back(add(l, r));
    }
};

struct BinEval {
    const BinArena& arena;
    unsigned mask = 0; // bit per edge, 1 = solid
    int next_edge = 0;

    struct Res {
        int charge = 0;
        bool any_internal_balanced = false; // some non-leaf subtree (incl. self) balanced
        int special = 0;
    };

    // edges get consecutive ids in the (left, right) traversal order
    Res eval(int node)
    {
        Res r;
        if (node < 0) return r; // leaf: charge 0, not internal
        const BinShape& s = arena.nodes[node];
        int left_edge = next_edge++;
        bool left_solid = (mask >> left_edge) & 1u;
        Res l = eval(s.left);
        int right_edge = next_edge++;
        bool right_solid = (mask >> right_edge) & 1u;
        Res rr = eval(s.right);
        r.charge = l.charge + rr.charge + (left_solid ? 1 : -1) + (right_solid ? 1 : -1);
        r.special = l.special + rr.special;
        if (s.right < 0 && !right_solid) r.special++; // right leaf on a dashed edge
        bool child_bal = (s.left >= 0 && l.charge == 0) || (s.right >= 0 && rr.charge == 0);
        r.any_internal_balanced = l.any_internal_balanced || rr.any_internal_balanced || child_bal || r.charge == 0;
        return r;
    }
};

int count_edges_bin(const BinArena& arena, int node)
{
    if (node < 0) return 0;
    return 2 + count_edges_bin(arena, arena.nodes[node].left) + count_edges_bin(arena, arena.nodes[node].right);
}

// ---- unary/binary trees ----

// Clean trees: every non-leaf subtree, including the root, has nonzero
// charge. f[b][u] counts them with b binary and u unary vertices, weighted v
// per special leaf strictly inside (the root leaf case is weighted by the
// parent). Charge is determined as b - u.
class CleanTable {
public:
    const BivarPoly& f(int b, int u)
    {
        if (b < 0 || u < 0) return zero_;
        auto key = std::make_pair(b, u);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        BivarPoly val;
        if (b == 0 && u == 0) {
            val = BivarPoly::one(); // bare leaf
        } else if (b - u != 0) {    // clean non-leaf roots need nonzero charge
            // unary root
            val += f(b, u - 1);
            // binary root: left clean, right clean with special-leaf weight
            for (int bl = 0; bl <= b - 1; ++bl)
                for (int ul = 0; ul <= u; ++ul) {
                    const BivarPoly& L = f(bl, ul);
                    if (L.is_zero()) continue;
                    val += L * right_f(b - 1 - bl, u - ul);
                }
        }
        return memo_.emplace(key, std::move(val)).first->second;
    }

    BivarPoly right_f(int b, int u)
    {
        if (b == 0 && u == 0) return BivarPoly::v();
        return f(b, u);
    }

private:
    std::map<std::pair<int, int>, BivarPoly> memo_;
    BivarPoly zero_;
};

} // namespace

VSeries count_charged_binary_trees(int n_max)
{
    BinArena arena;
    arena.build(n_max);
    VSeries out(n_max);
    for (int n = 2; n <= n_max; ++n) {
        BivarPoly count;
        for (int root : arena.roots_by_leaves[n]) {
            const int ne = count_edges_bin(arena, root);
            const BinShape& s = arena.nodes[root];
            for (unsigned mask = 0; mask < (1u << ne); ++mask) {
                BinEval walk{arena, mask, 0};
                const int le = walk.next_edge++;
                const bool lsolid = (mask >> le) & 1u;
                auto lres = walk.eval(s.left);
                const int re = walk.next_edge++;
                const bool rsolid = (mask >> re) & 1u;
                auto rres = walk.eval(s.right);
                const int charge = lres.charge + rres.charge + (lsolid ? 1 : -1) + (rsolid ? 1 : -1);
                if (charge != 0) continue;
                if (lres.any_internal_balanced || rres.any_internal_balanced) continue;
                const int special = lres.special + rres.special + (s.right < 0 && !rsolid ? 1 : 0);
                count += BivarPoly::monomial(0, special, Rat(1));
            }
        }
        out.set_coeff(n, count);
    }
    return out;
}

VSeries count_unary_binary_trees(int n_max)
{
    CleanTable tab;
    VSeries out(n_max);
    for (int n = 2; n <= n_max; ++n) {
        // balanced: b = u = n-1; root unary over charge-1 clean, or binary
        // over clean children with charges summing to -1
        const int b = n - 1, u = n - 1;
        BivarPoly count = tab.f(b, u - 1); // unary root
        for (int bl = 0; bl <= b - 1; ++bl)
            for (int ul = 0; ul <= u; ++ul) {
                const BivarPoly& L = tab.f(bl, ul);
                if (L.is_zero()) continue;
                count += L * tab.right_f(b - 1 - bl, u - ul);
            }
        out.set_coeff(n, count);
    }
    return out;
}

VSeries count_unary_binary_charge1(int n_max)
{
    CleanTable tab;
    VSeries out(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const int b = n - 1, u = b - 1; // charge b-u = 1
        if (u < 0) {
            out.set_coeff(n, BivarPoly());
            continue;
        }
        out.set_coeff(n, tab.f(b, u));
    }
    return out;
}

namespace {

struct UBNode {
    int kind; // 0 leaf, 1 unary, 2 binary
    int a = -1, b = -1;
};

struct UBArena {
    std::vector<UBNode> nodes;
    std::map<std::pair<int, int>, std::vector<int>> by_bu;

    int add(UBNode n)
    {
        nodes.push_back(n);
        return static_cast<int>(nodes.size()) - 1;
    }

    const std::vector<int>& gen(int b, int u)
    {
        auto key = std::make_pair(b, u);
        auto it = by_bu.find(key);
        if (it != by_bu.end()) return it->second;
        std::vector<int> out;
        if (b == 0 && u == 0) out.push_back(add({0}));
        if (u >= 1)
            for (int c : gen(b, u - 1)) out.push_back(add({1, c, -1}));
        if (b >= 1)
            for (int bl = 0; bl <= b - 1; ++bl)
                for (int ul = 0; ul <= u; ++ul) {
                    auto ls = gen(bl, ul);
                    auto rs = gen(b - 1 - bl, u - ul);
                    for (int l : ls)
                        for (int r : rs) out.push_back(add({2, l, r}));
                }
        return by_bu.emplace(key, std::move(out)).first->second;
    }

    struct Res {
        int charge = 0;
        bool any_nonleaf_balanced = false;
        int special = 0;
    };

    Res eval(int id)
    {
        const UBNode& n = nodes[id];
        Res r;
        if (n.kind == 0) return r;
        if (n.kind == 1) {
            Res c = eval(n.a);
            r.charge = c.charge - 1;
            r.special = c.special;
            r.any_nonleaf_balanced = c.any_nonleaf_balanced || r.charge == 0;
            return r;
        }
        Res l = eval(n.a), rr = eval(n.b);
        r.charge = l.charge + rr.charge + 1;
        r.special = l.special + rr.special + (nodes[n.b].kind == 0 ? 1 : 0);
        r.any_nonleaf_balanced = l.any_nonleaf_balanced || rr.any_nonleaf_balanced || r.charge == 0;
        return r;
    }
};

} // namespace

VSeries count_unary_binary_trees_explicit(int n_max)
{
    UBArena arena;
    VSeries out(n_max);
    for (int n = 2; n <= n_max; ++n) {
        const int b = n - 1, u = n - 1;
        BivarPoly count;
        for (int root : arena.gen(b, u)) {
            const UBNode& nd = arena.nodes[root];
            UBArena::Res res = arena.eval(root);
            if (res.charge != 0) continue;
            bool proper_bal = false;
            if (nd.kind == 1) proper_bal = arena.eval(nd.a).any_nonleaf_balanced;
            else if (nd.kind == 2)
                proper_bal = arena.eval(nd.a).any_nonleaf_balanced || arena.eval(nd.b).any_nonleaf_balanced;
            if (proper_bal) continue;
            count += BivarPoly::monomial(0, res.special, Rat(1));
        }
        out.set_coeff(n, count);
    }
    return out;
}

} // namespace trees
} // namespace qeo
