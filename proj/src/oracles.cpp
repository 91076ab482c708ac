#include "qeo/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qeo {
namespace oracles {

namespace {

std::vector<int> vertex_of_darts(const RotationSystem& m)
{
    std::vector<int> vid(m.darts(), -1);
    int nv = 0;
    for (int d = 0; d < m.darts(); ++d) {
        if (vid[d] >= 0) continue;
        for (int x = d; vid[x] < 0; x = m.sigma[x]) vid[x] = nv;
        ++nv;
    }
    return vid;
}

int cycle_count(const std::vector<int>& perm)
{
    std::vector<char> seen(perm.size(), 0);
    int c = 0;
    for (size_t d = 0; d < perm.size(); ++d) {
        if (seen[d]) continue;
        for (size_t x = d; !seen[x]; x = perm[x]) seen[x] = 1;
        ++c;
    }
    return c;
}

} // namespace

int RotationSystem::vertex_count() const
{
    if (darts() == 0) return 1; // atomic map
    return cycle_count(sigma);
}

int RotationSystem::face_count() const
{
    if (darts() == 0) return 1;
    std::vector<int> phi(darts());
    for (int d = 0; d < darts(); ++d) phi[d] = sigma[alpha[d]];
    return cycle_count(phi);
}

bool RotationSystem::validate(std::string* why) const
{
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = darts();
    if (static_cast<int>(alpha.size()) != n) return fail("size mismatch");
    if (n % 2 != 0) return fail("odd dart count");
    if (n == 0) return true;
    std::vector<int> hit(n, 0);
    for (int d = 0; d < n; ++d) {
        if (sigma[d] < 0 || sigma[d] >= n || alpha[d] < 0 || alpha[d] >= n) return fail("out of range");
        if (alpha[d] == d) return fail("alpha has a fixed point");
        if (alpha[alpha[d]] != d) return fail("alpha not an involution");
        hit[sigma[d]]++;
    }
    for (int d = 0; d < n; ++d)
        if (hit[d] != 1) return fail("sigma not a permutation");
    // connectivity: orbit of <sigma, alpha> from dart 0
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int x : {sigma[d], alpha[d]})
            if (!seen[x]) {
                seen[x] = 1;
                stack.push_back(x);
            }
    }
    if (std::count(seen.begin(), seen.end(), 1) != n) return fail("not connected");
    // Euler: V - E + F = 2
    if (vertex_count() - edges() + face_count() != 2) return fail("not planar (Euler)");
    return true;
}

RotationSystem RotationSystem::canonical() const
{
    const int n = darts();
    if (n == 0) return *this;
    std::vector<int> newid(n, -1);
    std::vector<int> order;
    order.reserve(n);
    auto assign = [&](int d) {
        if (newid[d] < 0) {
            newid[d] = static_cast<int>(order.size());
            order.push_back(d);
        }
    };
    assign(0);
    for (size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        assign(alpha[d]);
        assign(sigma[d]);
    }
    RotationSystem c;
    c.sigma.resize(n);
    c.alpha.resize(n);
    for (int d = 0; d < n; ++d) {
        c.sigma[newid[d]] = newid[sigma[d]];
        c.alpha[newid[d]] = newid[alpha[d]];
    }
    return c;
}

Int rooted_planar_map_count(int e)
{
    // 2 * 3^e * (2e)! / (e! (e+2)!)
    Int num = 2;
    for (int i = 0; i < e; ++i) num *= 3;
    Int fact2e = 1, facte = 1, facte2 = 1;
    for (int i = 1; i <= 2 * e; ++i) fact2e *= i;
    for (int i = 1; i <= e; ++i) facte *= i;
    for (int i = 1; i <= e + 2; ++i) facte2 *= i;
    return num * fact2e / (facte * facte2);
}

namespace {

int prev_in_cycle(const std::vector<int>& sigma, int d)
{
    int p = d;
    while (sigma[p] != d) p = sigma[p];
    return p;
}

// New root edge as a bridge joining m1 (tail side) and m2 (head side). The
// tail dart is inserted just before m1's root dart, the head dart just before
// m2's root dart; the tail dart becomes the root.
RotationSystem join_bridge(const RotationSystem& m1, const RotationSystem& m2)
{
    const int s1 = m1.darts(), s2 = m2.darts();
    const int a = 0;
    const int b = s1 + s2 + 1;
    auto from1 = [&](int d) { return d + 1; };
    auto from2 = [&](int d) { return d + s1 + 1; };
    RotationSystem m;
    m.sigma.assign(s1 + s2 + 2, -1);
    m.alpha.assign(s1 + s2 + 2, -1);
    for (int d = 0; d < s1; ++d) {
        m.sigma[from1(d)] = from1(m1.sigma[d]);
        m.alpha[from1(d)] = from1(m1.alpha[d]);
    }
    for (int d = 0; d < s2; ++d) {
        m.sigma[from2(d)] = from2(m2.sigma[d]);
        m.alpha[from2(d)] = from2(m2.alpha[d]);
    }
    m.alpha[a] = b;
    m.alpha[b] = a;
    if (s1 == 0) m.sigma[a] = a;
    else {
        int r = from1(0);
        m.sigma[prev_in_cycle(m.sigma, r)] = a;
        m.sigma[a] = r;
    }
    if (s2 == 0) m.sigma[b] = b;
    else {
        int r = from2(0);
        m.sigma[prev_in_cycle(m.sigma, r)] = b;
        m.sigma[b] = r;
    }
    return m;
}

// Corners are identified with darts: corner(d) sits at the start vertex of d
// just before d in counterclockwise order. Crossing the root face: the corner
// after corner(d) is corner(sigma(alpha(d))).
int next_corner(const RotationSystem& m, int d) { return m.sigma[m.alpha[d]]; }

RotationSystem reroot_at(const RotationSystem& m, int new_root)
{
    const int n = m.darts();
    std::vector<int> rel(n);
    std::iota(rel.begin(), rel.end(), 0);
    std::swap(rel[0], rel[new_root]);
    RotationSystem r;
    r.sigma.resize(n);
    r.alpha.resize(n);
    for (int d = 0; d < n; ++d) {
        r.sigma[rel[d]] = rel[m.sigma[d]];
        r.alpha[rel[d]] = rel[m.alpha[d]];
    }
    return r;
}

// All ways to add a non-bridge root edge to m: tail at the root corner, head
// at each corner of the face containing it. Placing the head in the root
// corner itself yields two maps (the loop can enclose either side).
void insert_root_edge_all(const RotationSystem& m, std::vector<RotationSystem>& out)
{
    const int s = m.darts();
    const int a = s, b = s + 1;
    if (s == 0) {
        RotationSystem loop;
        loop.sigma = {1, 0};
        loop.alpha = {1, 0};
        out.push_back(loop);
        return;
    }
    std::vector<int> corners;
    int c = 0;
    do {
        corners.push_back(c);
        c = next_corner(m, c);
    } while (c != 0);

    auto base = [&]() {
        RotationSystem r = m;
        r.sigma.resize(s + 2, -1);
        r.alpha.resize(s + 2, -1);
        r.alpha[a] = b;
        r.alpha[b] = a;
        return r;
    };

    for (int mc : corners) {
        if (mc == 0) continue;
        RotationSystem r = base();
        r.sigma[prev_in_cycle(r.sigma, 0)] = a;
        r.sigma[a] = 0;
        r.sigma[prev_in_cycle(r.sigma, mc)] = b;
        r.sigma[b] = mc;
        out.push_back(reroot_at(r, a));
    }
    for (int variant = 0; variant < 2; ++variant) {
        RotationSystem r = base();
        int p0 = prev_in_cycle(r.sigma, 0);
        if (variant == 0) {
            r.sigma[p0] = a;
            r.sigma[a] = b;
            r.sigma[b] = 0;
        } else {
            r.sigma[p0] = b;
            r.sigma[b] = a;
            r.sigma[a] = 0;
        }
        out.push_back(reroot_at(r, a));
    }
}

} // namespace

std::vector<RotationSystem> enumerate_rooted_planar_maps(int e)
{
    if (e < 0 || e > 6) throw std::domain_error("enumerate_rooted_planar_maps: e out of supported range");
    static std::map<int, std::vector<RotationSystem>> cache;
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;

    std::vector<RotationSystem> result;
    if (e == 0) {
        result.push_back(RotationSystem{});
    } else {
        std::set<RotationSystem> seen;
        auto add = [&](const RotationSystem& m) {
            RotationSystem c = m.canonical();
            std::string why;
            if (!c.validate(&why)) throw std::logic_error("enumerate: invalid map generated: " + why);
            if (!seen.insert(c).second) throw std::logic_error("enumerate: duplicate map generated");
        };
        for (int e1 = 0; e1 <= e - 1; ++e1) {
            auto m1s = enumerate_rooted_planar_maps(e1);
            auto m2s = enumerate_rooted_planar_maps(e - 1 - e1);
            for (auto& m1 : m1s)
                for (auto& m2 : m2s) add(join_bridge(m1, m2));
        }
        for (auto& m : enumerate_rooted_planar_maps(e - 1)) {
            std::vector<RotationSystem> ins;
            insert_root_edge_all(m, ins);
            for (auto& r : ins) add(r);
        }
        result.assign(seen.begin(), seen.end());
    }
    if (Int(static_cast<long>(result.size())) != rooted_planar_map_count(e))
        throw std::logic_error("enumerate: count does not match the closed-form formula");
    cache[e] = result;
    return result;
}

VSeries count_partial_orientations(int e_max)
{
    if (e_max > 5) throw std::domain_error("count_partial_orientations: e_max > 5 unsupported");
    VSeries q(e_max);
    q.set_coeff(0, BivarPoly::v()); // the atomic map alone
    for (int e = 1; e <= e_max; ++e) {
        BivarPoly total;
        for (auto& m : enumerate_rooted_planar_maps(e)) {
            const auto vid = vertex_of_darts(m);
            const int nv = m.vertex_count();
            std::vector<std::pair<int, int>> edge_darts;
            for (int d = 0; d < m.darts(); ++d)
                if (d < m.alpha[d]) edge_darts.emplace_back(d, m.alpha[d]);
            std::vector<long> undirected_histogram(e + 1, 0);
            std::vector<int> balance(nv, 0);
            long total_states = 1;
            for (int i = 0; i < e; ++i) total_states *= 3;
            for (long code = 0; code < total_states; ++code) {
                long c = code;
                std::fill(balance.begin(), balance.end(), 0);
                int undirected = 0;
                for (int i = 0; i < e; ++i) {
                    int s = c % 3;
                    c /= 3;
                    auto [d1, d2] = edge_darts[i];
                    if (s == 0) ++undirected;
                    else if (s == 1) {
                        balance[vid[d1]]++;
                        balance[vid[d2]]--;
                    } else {
                        balance[vid[d1]]--;
                        balance[vid[d2]]++;
                    }
                }
                bool ok = true;
                for (int u = 0; u < nv && ok; ++u) ok = balance[u] == 0;
                if (ok) undirected_histogram[undirected]++;
            }
            for (int u = 0; u <= e; ++u)
                if (undirected_histogram[u] != 0)
                    total += BivarPoly::monomial(u, nv, Rat(undirected_histogram[u]));
        }
        q.set_coeff(e, total);
    }
    return q;
}

std::vector<Int> count_fully_directed(int e_max)
{
    std::vector<Int> out;
    for (int e = 1; e <= e_max; ++e) {
        Int count = 0;
        for (auto& m : enumerate_rooted_planar_maps(e)) {
            const auto vid = vertex_of_darts(m);
            const int nv = m.vertex_count();
            std::vector<std::pair<int, int>> edge_darts;
            for (int d = 0; d < m.darts(); ++d)
                if (d < m.alpha[d]) edge_darts.emplace_back(d, m.alpha[d]);
            long total_states = 1;
            for (int i = 0; i < e; ++i) total_states *= 2;
            std::vector<int> balance(nv, 0);
            for (long code = 0; code < total_states; ++code) {
                std::fill(balance.begin(), balance.end(), 0);
                for (int i = 0; i < e; ++i) {
                    auto [d1, d2] = edge_darts[i];
                    if ((code >> i) & 1) {
                        balance[vid[d1]]++;
                        balance[vid[d2]]--;
                    } else {
                        balance[vid[d1]]--;
                        balance[vid[d2]]++;
                    }
                }
                bool ok = true;
                for (int u = 0; u < nv && ok; ++u) ok = balance[u] == 0;
                if (ok) count += 1;
            }
        }
        out.push_back(count);
    }
    return out;
}

} // namespace oracles
} // namespace qeo
