#pragma once

// Independent reference implementations used only by the tests. They share no
// code with the library beyond the TorusMap accessors.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tpm/map.hpp"

namespace oracle {

using tpm::Face;
using tpm::TorusMap;
using tpm::VertexId;

inline Face rotate_min(Face f) {
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
    return f;
}

inline std::set<Face> face_set(const std::vector<Face>& faces) {
    std::set<Face> s;
    for (const auto& f : faces) s.insert(rotate_min(f));
    return s;
}

inline std::vector<std::pair<int, int>> edge_list(const TorusMap& m) {
    std::set<std::pair<int, int>> s;
    for (const auto& f : m.faces()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            s.insert({std::min(a, b), std::max(a, b)});
        }
    }
    return {s.begin(), s.end()};
}

/// Faces of `m` with vertex v renamed perm[v], optionally reversed.
inline std::set<Face> image(const TorusMap& m, const std::vector<int>& perm, bool reverse) {
    std::vector<Face> out;
    for (auto f : m.faces()) {
        for (auto& v : f) v = perm[static_cast<std::size_t>(v)];
        if (reverse) std::reverse(f.begin(), f.end());
        out.push_back(f);
    }
    return face_set(out);
}

/// Tries every permutation of the vertices.
inline bool brute_force_map_iso(const TorusMap& a, const TorusMap& b, bool reflections = true) {
    if (a.vertex_count() != b.vertex_count() || a.face_count() != b.face_count()) return false;
    const auto target = face_set(b.faces());
    std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (image(a, perm, false) == target) return true;
        if (reflections && image(a, perm, true) == target) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

inline bool brute_force_graph_iso(const TorusMap& a, const TorusMap& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    auto eb = edge_list(b);
    std::set<std::pair<int, int>> target(eb.begin(), eb.end());
    auto ea = edge_list(a);
    if (ea.size() != eb.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : ea) {
            int x = perm[static_cast<std::size_t>(u)], y = perm[static_cast<std::size_t>(v)];
            if (!target.count({std::min(x, y), std::max(x, y)})) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

/// Connected after deleting every pair of vertices.
inline bool three_connected(const TorusMap& m) {
    const int n = m.vertex_count();
    auto edges = edge_list(m);
    auto connected_without = [&](int x, int y) {
        std::vector<int> parent(static_cast<std::size_t>(n) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
            return v;
        };
        for (auto [u, v] : edges) {
            if (u == x || u == y || v == x || v == y) continue;
            parent[static_cast<std::size_t>(find(u))] = find(v);
        }
        int root = -1;
        for (int v = 1; v <= n; ++v) {
            if (v == x || v == y) continue;
            if (root < 0) root = find(v);
            if (find(v) != root) return false;
        }
        return true;
    };
    for (int x = 1; x <= n; ++x) {
        for (int y = x + 1; y <= n; ++y) {
            if (!connected_without(x, y)) return false;
        }
    }
    return true;
}

/// Whether the cycle's edge set is a GF(2) sum of face boundaries, i.e. the
/// cycle is null-homologous. On the torus a simple cycle is contractible iff
/// this holds.
inline bool null_homologous(const TorusMap& m, const std::vector<VertexId>& cycle) {
    auto edges = edge_list(m);
    auto index = [&](int a, int b) {
        auto e = std::make_pair(std::min(a, b), std::max(a, b));
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    const std::size_t E = edges.size();
    auto vec = [&](const std::vector<VertexId>& c) {
        std::vector<char> v(E, 0);
        for (std::size_t i = 0; i < c.size(); ++i) v[index(c[i], c[(i + 1) % c.size()])] ^= 1;
        return v;
    };
    std::vector<std::vector<char>> rows;
    for (const auto& f : m.faces()) rows.push_back(vec(f));
    auto target = vec(cycle);
    // Gaussian elimination on the face rows, then reduce the target.
    std::vector<std::vector<char>> basis;
    std::vector<std::size_t> pivots;
    auto reduce = [&](std::vector<char> r) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (r[pivots[k]]) {
                for (std::size_t j = 0; j < E; ++j) r[j] ^= basis[k][j];
            }
        }
        return r;
    };
    for (auto& r : rows) {
        auto x = reduce(r);
        auto it = std::find(x.begin(), x.end(), 1);
        if (it == x.end()) continue;
        pivots.push_back(static_cast<std::size_t>(it - x.begin()));
        basis.push_back(x);
    }
    auto rest = reduce(target);
    return std::find(rest.begin(), rest.end(), 1) == rest.end();
}

/// Valid chords of a face counted directly from the definition: boundary
/// points are the k vertices and k edge interiors; a pair is invalid when a
/// single existing edge contains both.
struct ChordCount {
    int vv = 0, ve = 0, ee = 0;
    int total() const { return vv + ve + ee; }
};

inline ChordCount count_chords(const TorusMap& m, int face) {
    const auto& f = m.face(face);
    const int k = static_cast<int>(f.size());
    ChordCount c;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (!m.adjacent(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) ++c.vv;
        }
    }
    for (int i = 0; i < k; ++i) {      // vertex f[i]
        for (int j = 0; j < k; ++j) {  // edge f[j] f[j+1]
            if (j == i || (j + 1) % k == i) continue;
            ++c.ve;
        }
    }
    c.ee = k * (k - 1) / 2;
    return c;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(static_cast<std::size_t>(n) + 1);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin() + 1, p.end(), rng);
    return p;
}

}  // namespace oracle
