#include "tpm/topology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "complex.hpp"

namespace tpm {

namespace detail {

void Complex::finish() {
    edge_faces.assign(edge_ends.size(), {-1, -1});
    vertex_faces.assign(static_cast<std::size_t>(vertex_count), {});
    for (int f = 0; f < face_count(); ++f) {
        for (int e : face_edges[static_cast<std::size_t>(f)]) {
            auto& s = edge_faces[static_cast<std::size_t>(e)];
            (s[0] < 0 ? s[0] : s[1]) = f;
        }
        for (int v : face_vertices[static_cast<std::size_t>(f)]) {
            vertex_faces[static_cast<std::size_t>(v)].push_back(f);
        }
    }
}

Complex Complex::primal(const TorusMap& map) {
    Complex c;
    c.vertex_count = map.vertex_count();
    std::map<std::pair<int, int>, int> id;
    for (const auto& e : edges(map)) {
        id[{e.u, e.v}] = c.edge_count();
        c.edge_ends.push_back({e.u - 1, e.v - 1});
    }
    for (const auto& f : map.faces()) {
        std::vector<int> fv;
        std::vector<int> fe;
        for (std::size_t i = 0; i < f.size(); ++i) {
            VertexId a = f[i];
            VertexId b = f[(i + 1) % f.size()];
            fv.push_back(a - 1);
            fe.push_back(id.at({std::min(a, b), std::max(a, b)}));
        }
        c.face_vertices.push_back(std::move(fv));
        c.face_edges.push_back(std::move(fe));
    }
    c.finish();
    return c;
}

Complex Complex::dual(const TorusMap& map) {
    Complex c;
    c.vertex_count = map.face_count();
    std::map<std::pair<int, int>, int> id;
    for (const auto& e : edges(map)) {
        id[{e.u, e.v}] = c.edge_count();
        c.edge_ends.push_back({e.forward.face, e.backward.face});
    }
    for (VertexId v = 1; v <= map.vertex_count(); ++v) {
        std::vector<int> fv;
        std::vector<int> fe;
        const auto& f0 = map.face(map.faces_around(v).front());
        auto it = std::find(f0.begin(), f0.end(), v);
        VertexId w = f0[static_cast<std::size_t>(it - f0.begin() + 1) % f0.size()];
        for (int i = 0; i < map.valence(v); ++i) {
            fv.push_back(map.dart(v, w)->face);
            w = map.next_ccw(v, w);
            fe.push_back(id.at({std::min(v, w), std::max(v, w)}));
        }
        c.face_vertices.push_back(std::move(fv));
        c.face_edges.push_back(std::move(fe));
    }
    c.finish();
    return c;
}

int region_euler(const Complex& c, const std::vector<char>& in) {
    std::vector<char> vs(static_cast<std::size_t>(c.vertex_count), 0);
    std::vector<char> es(c.edge_ends.size(), 0);
    int faces = 0;
    for (int f = 0; f < c.face_count(); ++f) {
        if (!in[static_cast<std::size_t>(f)]) continue;
        ++faces;
        for (int v : c.face_vertices[static_cast<std::size_t>(f)]) vs[static_cast<std::size_t>(v)] = 1;
        for (int e : c.face_edges[static_cast<std::size_t>(f)]) es[static_cast<std::size_t>(e)] = 1;
    }
    return static_cast<int>(std::count(vs.begin(), vs.end(), 1)) -
           static_cast<int>(std::count(es.begin(), es.end(), 1)) + faces;
}

std::vector<std::vector<int>> face_components(const Complex& c, const std::vector<char>& in,
                                              const std::vector<char>& blocked_edge) {
    std::vector<int> comp(static_cast<std::size_t>(c.face_count()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < c.face_count(); ++s) {
        if (!in[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            out.back().push_back(f);
            for (int e : c.face_edges[static_cast<std::size_t>(f)]) {
                if (blocked_edge[static_cast<std::size_t>(e)]) continue;
                for (int g : c.edge_faces[static_cast<std::size_t>(e)]) {
                    if (in[static_cast<std::size_t>(g)] && comp[static_cast<std::size_t>(g)] < 0) {
                        comp[static_cast<std::size_t>(g)] = id;
                        stack.push_back(g);
                    }
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::optional<std::vector<int>> disk_boundary(const Complex& c, const std::vector<char>& in) {
    if (region_euler(c, in) != 1) return std::nullopt;
    // sides of each edge inside the region
    std::vector<int> sides(c.edge_ends.size(), 0);
    for (int f = 0; f < c.face_count(); ++f) {
        if (!in[static_cast<std::size_t>(f)]) continue;
        for (int e : c.face_edges[static_cast<std::size_t>(f)]) ++sides[static_cast<std::size_t>(e)];
    }
    std::vector<std::vector<int>> bnd(static_cast<std::size_t>(c.vertex_count));
    int boundary_edges = 0;
    for (int e = 0; e < c.edge_count(); ++e) {
        if (sides[static_cast<std::size_t>(e)] != 1) continue;
        ++boundary_edges;
        bnd[static_cast<std::size_t>(c.edge_ends[static_cast<std::size_t>(e)][0])].push_back(e);
        bnd[static_cast<std::size_t>(c.edge_ends[static_cast<std::size_t>(e)][1])].push_back(e);
    }
    if (boundary_edges == 0) return std::nullopt;
    int start = -1;
    for (int v = 0; v < c.vertex_count; ++v) {
        const auto k = bnd[static_cast<std::size_t>(v)].size();
        if (k != 0 && k != 2) return std::nullopt;
        if (k == 2 && start < 0) start = v;
    }
    std::vector<char> blocked(c.edge_ends.size(), 0);
    if (face_components(c, in, blocked).size() != 1) return std::nullopt;
    // walk the boundary once around
    std::vector<int> cycle;
    int v = start;
    int prev_edge = -1;
    do {
        cycle.push_back(v);
        const auto& be = bnd[static_cast<std::size_t>(v)];
        int e = be[0] == prev_edge ? be[1] : be[0];
        const auto& ends = c.edge_ends[static_cast<std::size_t>(e)];
        v = ends[0] == v ? ends[1] : ends[0];
        prev_edge = e;
    } while (v != start && static_cast<int>(cycle.size()) <= boundary_edges);
    if (static_cast<int>(cycle.size()) != boundary_edges) return std::nullopt;
    return cycle;
}

namespace {

/// Calls visit(chosen) for each k-subset of `pool`, stopping when it returns
/// true.
template <typename Visit>
bool for_each_subset(const std::vector<int>& pool, std::size_t k, Visit visit) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > pool.size()) return false;
    while (true) {
        if (visit(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct RawEic {
    std::vector<int> cycle;
    std::array<int, 2> edge;
    std::vector<int> faces;
};

std::optional<RawEic> find_eic(const Complex& c) {
    const auto nf = static_cast<std::size_t>(c.face_count());
    struct Candidate {
        int edge;
        std::vector<char> base;
        std::vector<int> rest;
    };
    std::vector<Candidate> cands;
    std::vector<int> order(static_cast<std::size_t>(c.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](int e) {
        auto [a, b] = c.edge_ends[static_cast<std::size_t>(e)];
        return std::array<int, 3>{std::min(a, b), std::max(a, b), e};
    };
    std::sort(order.begin(), order.end(), [&](int x, int y) { return key(x) < key(y); });
    for (int e : order) {
        Candidate cd{e, std::vector<char>(nf, 0), {}};
        for (int end : c.edge_ends[static_cast<std::size_t>(e)]) {
            for (int f : c.vertex_faces[static_cast<std::size_t>(end)]) cd.base[static_cast<std::size_t>(f)] = 1;
        }
        for (std::size_t f = 0; f < nf; ++f) {
            if (!cd.base[f]) cd.rest.push_back(static_cast<int>(f));
        }
        // a disk is never the whole surface
        if (!cd.rest.empty()) cands.push_back(std::move(cd));
    }
    // smallest disks first, across all edges
    for (std::size_t extra = 0; extra < nf; ++extra) {
        for (const auto& cd : cands) {
            if (extra >= cd.rest.size()) continue;
            std::optional<RawEic> found;
            for_each_subset(cd.rest, extra, [&](const std::vector<std::size_t>& idx) {
                auto in = cd.base;
                for (auto i : idx) in[static_cast<std::size_t>(cd.rest[i])] = 1;
                auto cycle = disk_boundary(c, in);
                if (!cycle) return false;
                RawEic r{std::move(*cycle), c.edge_ends[static_cast<std::size_t>(cd.edge)], {}};
                for (std::size_t f = 0; f < nf; ++f) {
                    if (in[f]) r.faces.push_back(static_cast<int>(f));
                }
                found = std::move(r);
                return true;
            });
            if (found) return found;
        }
    }
    return std::nullopt;
}

EicWitness to_witness(const RawEic& r) {
    EicWitness w;
    for (int v : r.cycle) w.cycle.push_back(v + 1);
    w.edge = {std::min(r.edge[0], r.edge[1]) + 1, std::max(r.edge[0], r.edge[1]) + 1};
    w.disk_faces = r.faces;
    return w;
}

}  // namespace

}  // namespace detail

using detail::Complex;

namespace {

std::vector<char> cycle_edges(const TorusMap& map, const Complex& c, const Cycle& cycle) {
    const auto k = cycle.size();
    if (k < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<char> seen(static_cast<std::size_t>(map.vertex_count()) + 1, 0);
    for (VertexId v : cycle) {
        if (v < 1 || v > map.vertex_count() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("cycle repeats a vertex or leaves the map");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<char> blocked(c.edge_ends.size(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        VertexId a = cycle[i];
        VertexId b = cycle[(i + 1) % k];
        auto s = map.dart(a, b);
        if (!s) throw std::invalid_argument("cycle uses a non-edge");
        // the edge id is the one in the face slot
        blocked[static_cast<std::size_t>(
            c.face_edges[static_cast<std::size_t>(s->face)][static_cast<std::size_t>(s->pos)])] = 1;
    }
    return blocked;
}

}  // namespace

std::optional<std::vector<int>> is_planar_cycle(const TorusMap& map, const Cycle& cycle) {
    const auto c = Complex::primal(map);
    const auto blocked = cycle_edges(map, c, cycle);
    std::vector<char> all(static_cast<std::size_t>(c.face_count()), 1);
    const auto parts = detail::face_components(c, all, blocked);
    if (parts.size() != 2) return std::nullopt;
    for (const auto& part : parts) {
        std::vector<char> in(static_cast<std::size_t>(c.face_count()), 0);
        for (int f : part) in[static_cast<std::size_t>(f)] = 1;
        if (detail::region_euler(c, in) == 1) return part;
    }
    return std::nullopt;
}

std::optional<EicWitness> has_eic(const TorusMap& map) {
    auto r = detail::find_eic(Complex::primal(map));
    if (!r) return std::nullopt;
    return detail::to_witness(*r);
}

std::optional<EicWitness> dual_has_eic(const TorusMap& map) {
    auto r = detail::find_eic(Complex::dual(map));
    if (!r) return std::nullopt;
    return detail::to_witness(*r);
}

std::vector<Cycle> noncontractible_cycles(const TorusMap& map) {
    const int n = map.vertex_count();
    const auto c = Complex::primal(map);
    std::vector<std::vector<VertexId>> nbr(static_cast<std::size_t>(n) + 1);
    for (const auto& e : edges(map)) {
        nbr[static_cast<std::size_t>(e.u)].push_back(e.v);
        nbr[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& l : nbr) std::sort(l.begin(), l.end());

    std::vector<Cycle> out;
    std::vector<char> on(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> all(static_cast<std::size_t>(c.face_count()), 1);
    Cycle path;
    auto keep = [&](const Cycle& cyc) {
        auto blocked = cycle_edges(map, c, cyc);
        if (detail::face_components(c, all, blocked).size() == 1) out.push_back(cyc);
    };
    // simple cycles through their least vertex s, each found in one direction
    auto dfs = [&](auto&& self, VertexId s, VertexId v) -> void {
        for (VertexId w : nbr[static_cast<std::size_t>(v)]) {
            if (w == s && path.size() >= 3 && path[1] < path.back()) keep(path);
            if (w <= s || on[static_cast<std::size_t>(w)]) continue;
            on[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self, s, w);
            path.pop_back();
            on[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (VertexId s = 1; s <= n; ++s) {
        path.assign(1, s);
        on[static_cast<std::size_t>(s)] = 1;
        dfs(dfs, s, s);
        on[static_cast<std::size_t>(s)] = 0;
    }
    return out;
}

namespace {

std::optional<BandDecomposition> bands_from_cycles(const TorusMap& map, const Complex& c,
                                                   const std::vector<Cycle>& cycles) {
    std::vector<char> blocked(c.edge_ends.size(), 0);
    std::vector<int> owner(static_cast<std::size_t>(map.vertex_count()) + 1, -1);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        auto b = cycle_edges(map, c, cycles[i]);
        for (std::size_t e = 0; e < b.size(); ++e) blocked[e] |= b[e];
        for (VertexId v : cycles[i]) owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<char> all(static_cast<std::size_t>(c.face_count()), 1);
    auto parts = detail::face_components(c, all, blocked);
    if (parts.size() != cycles.size()) return std::nullopt;
    BandDecomposition d;
    d.cycles = cycles;
    for (const auto& part : parts) {
        std::vector<char> in(static_cast<std::size_t>(c.face_count()), 0);
        for (int f : part) in[static_cast<std::size_t>(f)] = 1;
        if (detail::region_euler(c, in) != 0) return std::nullopt;
        // boundary edges must be exactly the edges of two of the cycles
        std::vector<int> sides(c.edge_ends.size(), 0);
        for (int f : part) {
            for (int e : c.face_edges[static_cast<std::size_t>(f)]) ++sides[static_cast<std::size_t>(e)];
        }
        std::vector<int> touched;
        for (std::size_t e = 0; e < sides.size(); ++e) {
            if (sides[e] != 1) continue;
            if (!blocked[e]) return std::nullopt;
            int o = owner[static_cast<std::size_t>(c.edge_ends[e][0]) + 1];
            if (std::find(touched.begin(), touched.end(), o) == touched.end()) touched.push_back(o);
        }
        if (touched.size() != 2) return std::nullopt;
        std::sort(touched.begin(), touched.end());
        Band b;
        b.faces = part;
        b.lower = cycles[static_cast<std::size_t>(touched[0])];
        b.upper = cycles[static_cast<std::size_t>(touched[1])];
        // every edge of both cycles lies on this band
        for (int t : touched) {
            auto ce = cycle_edges(map, c, cycles[static_cast<std::size_t>(t)]);
            for (std::size_t e = 0; e < ce.size(); ++e) {
                if (ce[e] && sides[e] != 1) return std::nullopt;
            }
        }
        d.bands.push_back(std::move(b));
    }
    return d;
}

}  // namespace

std::optional<BandDecomposition> find_band_decomposition(const TorusMap& map, int k) {
    if (k < 2) throw std::invalid_argument("band count must be at least 2");
    const auto c = Complex::primal(map);
    const auto cycles = noncontractible_cycles(map);
    const int n = map.vertex_count();
    if (n < 3 * k) return std::nullopt;
    using Mask = std::vector<std::uint64_t>;
    const std::size_t words = static_cast<std::size_t>(n) / 64 + 1;
    std::vector<Mask> masks;
    for (const auto& cyc : cycles) {
        Mask m(words, 0);
        for (VertexId v : cyc) m[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
        masks.push_back(std::move(m));
    }
    auto disjoint = [&](const Mask& a, const Mask& b) {
        for (std::size_t i = 0; i < words; ++i) {
            if (a[i] & b[i]) return false;
        }
        return true;
    };
    std::vector<std::size_t> pick;
    Mask used(words, 0);
    std::optional<BandDecomposition> found;
    auto search = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(pick.size()) == k) {
            std::vector<Cycle> chosen;
            for (auto i : pick) chosen.push_back(cycles[i]);
            found = bands_from_cycles(map, c, chosen);
            return found.has_value();
        }
        for (std::size_t i = from; i < cycles.size(); ++i) {
            if (!disjoint(used, masks[i])) continue;
            pick.push_back(i);
            for (std::size_t w = 0; w < words; ++w) used[w] |= masks[i][w];
            if (self(self, i + 1)) return true;
            for (std::size_t w = 0; w < words; ++w) used[w] &= ~masks[i][w];
            pick.pop_back();
        }
        return false;
    };
    search(search, 0);
    return found;
}

int disjoint_cross_paths(const TorusMap& map, const Band& band) {
    // unit vertex capacities: v_in = 2v, v_out = 2v + 1
    const int n = map.vertex_count();
    const int source = 0;
    const int sink = 1;
    const int nodes = 2 * (n + 1);
    std::vector<std::map<int, int>> cap(static_cast<std::size_t>(nodes));
    auto add = [&](int a, int b, int x) {
        cap[static_cast<std::size_t>(a)][b] += x;
        cap[static_cast<std::size_t>(b)][a] += 0;
    };
    const int inf = n + 1;
    std::vector<char> in_band(static_cast<std::size_t>(n) + 1, 0);
    for (int f : band.faces) {
        const auto& face = map.face(f);
        for (std::size_t i = 0; i < face.size(); ++i) {
            VertexId a = face[i];
            VertexId b = face[(i + 1) % face.size()];
            in_band[static_cast<std::size_t>(a)] = 1;
            add(2 * a + 1, 2 * b, inf);
            add(2 * b + 1, 2 * a, inf);
        }
    }
    for (VertexId v = 1; v <= n; ++v) {
        if (in_band[static_cast<std::size_t>(v)]) add(2 * v, 2 * v + 1, 1);
    }
    for (VertexId v : band.lower) add(source, 2 * v, 1);
    for (VertexId v : band.upper) add(2 * v + 1, sink, 1);

    int flow = 0;
    while (true) {
        std::vector<int> prev(static_cast<std::size_t>(nodes), -1);
        std::queue<int> q;
        q.push(source);
        prev[static_cast<std::size_t>(source)] = source;
        while (!q.empty() && prev[static_cast<std::size_t>(sink)] < 0) {
            int x = q.front();
            q.pop();
            for (auto [y, r] : cap[static_cast<std::size_t>(x)]) {
                if (r > 0 && prev[static_cast<std::size_t>(y)] < 0) {
                    prev[static_cast<std::size_t>(y)] = x;
                    q.push(y);
                }
            }
        }
        if (prev[static_cast<std::size_t>(sink)] < 0) return flow;
        for (int y = sink; y != source; y = prev[static_cast<std::size_t>(y)]) {
            int x = prev[static_cast<std::size_t>(y)];
            --cap[static_cast<std::size_t>(x)][y];
            ++cap[static_cast<std::size_t>(y)][x];
        }
        ++flow;
    }
}

}  // namespace tpm
