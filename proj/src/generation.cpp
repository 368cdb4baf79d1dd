#include "tpm/generation.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "tpm/topology.hpp"

namespace tpm {

namespace {

constexpr std::size_t kRequiredMarks = 3;

bool is_vertex_point(int p) { return p % 2 == 0; }

std::string chord_text(const ChordSpec& s) {
    std::ostringstream o;
    o << "f" << s.face << ":" << s.a << "-" << s.b;
    return o.str();
}

}  // namespace

ChordKind kind(const ChordSpec& spec) {
    const bool va = is_vertex_point(spec.a);
    const bool vb = is_vertex_point(spec.b);
    if (va && vb) return ChordKind::VV;
    if (va || vb) return ChordKind::VE;
    return ChordKind::EE;
}

std::optional<std::string> chord_problem(const TorusMap& map, const ChordSpec& spec) {
    if (spec.face < 0 || spec.face >= map.face_count()) return "face index out of range";
    const auto& f = map.face(spec.face);
    const int k = static_cast<int>(f.size());
    if (spec.a < 0 || spec.b < 0 || spec.a >= 2 * k || spec.b >= 2 * k) return "boundary point out of range";
    if (spec.a >= spec.b) return "endpoints must satisfy a < b";
    auto vert = [&](int p) { return f[static_cast<std::size_t>(p / 2)]; };
    auto edge_ends = [&](int p) {
        return std::pair{f[static_cast<std::size_t>(p / 2)], f[static_cast<std::size_t>((p / 2 + 1) % k)]};
    };
    switch (kind(spec)) {
    case ChordKind::VV:
        if (map.adjacent(vert(spec.a), vert(spec.b))) return "endpoints already adjacent";
        break;
    case ChordKind::VE: {
        const int vp = is_vertex_point(spec.a) ? spec.a : spec.b;
        const int ep = is_vertex_point(spec.a) ? spec.b : spec.a;
        auto [x, y] = edge_ends(ep);
        if (vert(vp) == x || vert(vp) == y) return "vertex lies on the subdivided edge";
        break;
    }
    case ChordKind::EE:
        break;
    }
    return std::nullopt;
}

TorusMap add_edge(const TorusMap& map, const ChordSpec& spec) {
    if (auto p = chord_problem(map, spec)) throw MapError(ViolationKind::DuplicateEdgeDirection, "add_edge: " + *p);
    const auto& f = map.face(spec.face);
    const auto k = f.size();
    VertexId next = map.vertex_count() + 1;
    Face refined;
    std::size_t pa = 0;
    std::size_t pb = 0;
    // (old dart x -> y, new vertex) per subdivided edge
    std::vector<std::array<VertexId, 3>> splits;
    for (std::size_t i = 0; i < k; ++i) {
        const int vp = static_cast<int>(2 * i);
        if (vp == spec.a) pa = refined.size();
        if (vp == spec.b) pb = refined.size();
        refined.push_back(f[i]);
        const int ep = vp + 1;
        if (ep == spec.a || ep == spec.b) {
            (ep == spec.a ? pa : pb) = refined.size();
            splits.push_back({f[i], f[(i + 1) % k], next});
            refined.push_back(next++);
        }
    }
    Face half1(refined.begin() + static_cast<long>(pa), refined.begin() + static_cast<long>(pb) + 1);
    Face half2(refined.begin() + static_cast<long>(pb), refined.end());
    half2.insert(half2.end(), refined.begin(), refined.begin() + static_cast<long>(pa) + 1);

    auto faces = map.faces();
    auto marks = map.marks();
    for (const auto& [x, y, w] : splits) {
        for (std::size_t g = 0; g < faces.size(); ++g) {
            if (static_cast<int>(g) == spec.face) continue;
            auto& h = faces[g];
            for (std::size_t i = 0; i < h.size(); ++i) {
                if (h[i] == y && h[(i + 1) % h.size()] == x) {
                    h.insert(h.begin() + static_cast<long>(i) + 1, w);
                    break;
                }
            }
        }
        for (auto& p : marks) {
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                if ((p[i] == x && p[i + 1] == y) || (p[i] == y && p[i + 1] == x)) {
                    p.insert(p.begin() + static_cast<long>(i) + 1, w);
                    break;
                }
            }
        }
    }
    faces[static_cast<std::size_t>(spec.face)] = std::move(half1);
    faces.push_back(std::move(half2));
    return TorusMap(next - 1, std::move(faces), std::move(marks));
}

std::vector<ChordSpec> enumerate_edge_additions(const TorusMap& map, int face) {
    std::vector<ChordSpec> out;
    const int pts = 2 * static_cast<int>(map.face(face).size());
    for (int a = 0; a < pts; ++a) {
        for (int b = a + 1; b < pts; ++b) {
            ChordSpec s{face, a, b};
            if (!chord_problem(map, s)) out.push_back(s);
        }
    }
    return out;
}

std::vector<ChordSpec> enumerate_edge_additions(const TorusMap& map) {
    std::vector<ChordSpec> out;
    for (int f = 0; f < map.face_count(); ++f) {
        auto part = enumerate_edge_additions(map, f);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

TorusMap split_vertex(const TorusMap& map, const VertexSplitSpec& spec) {
    const VertexId x = spec.x;
    if (x < 1 || x > map.vertex_count()) throw std::invalid_argument("split_vertex: no such vertex");
    auto rot = rotation_system(map);
    const auto& around = rot[static_cast<std::size_t>(x)];
    const int d = static_cast<int>(around.size());
    if (spec.count < 1 || spec.count > d || spec.start < 0 || spec.start >= d) {
        throw std::invalid_argument("split_vertex: block out of range");
    }
    if (spec.count == 1 && spec.share_start && spec.share_end) {
        throw MapError(ViolationKind::DuplicateEdgeDirection, "split_vertex: one neighbour cannot be shared twice");
    }
    const VertexId x2 = map.vertex_count() + 1;
    std::vector<VertexId> b1;
    std::vector<VertexId> b2;
    for (int i = 0; i < d; ++i) {
        VertexId w = around[static_cast<std::size_t>((spec.start + i) % d)];
        (i < spec.count ? b1 : b2).push_back(w);
    }
    const VertexId ws = b1.front();
    const VertexId we = b1.back();
    std::vector<VertexId> r1 = b1;
    r1.push_back(x2);
    std::vector<VertexId> r2;
    if (spec.share_end) r2.push_back(we);
    r2.insert(r2.end(), b2.begin(), b2.end());
    if (spec.share_start) r2.push_back(ws);
    r2.push_back(x);

    rot.resize(static_cast<std::size_t>(x2) + 1);
    for (VertexId w : b2) {
        for (auto& y : rot[static_cast<std::size_t>(w)]) {
            if (y == x) y = x2;
        }
    }
    auto splice = [&](VertexId w, VertexId first, VertexId second) {
        auto& r = rot[static_cast<std::size_t>(w)];
        auto it = std::find(r.begin(), r.end(), x);
        *it = first;
        r.insert(it + 1, second);
    };
    if (spec.share_end) splice(we, x2, x);
    if (spec.share_start) splice(ws, x, x2);
    rot[static_cast<std::size_t>(x)] = std::move(r1);
    rot[static_cast<std::size_t>(x2)] = std::move(r2);

    auto faces = faces_from_rotation(rot);
    std::vector<MarkedPath> marks;
    for (const auto& p : map.marks()) {
        if (std::find(p.begin(), p.end(), x) == p.end()) marks.push_back(p);
    }
    return TorusMap(x2, std::move(faces), std::move(marks));
}

// --- seeds ---

char letter(CrossClass c) { return static_cast<char>('A' + static_cast<int>(c)); }

namespace {

/// Attachment pattern on one three-vertex cycle: which vertices are used and
/// how many subdivision points each edge gets; three points in total.
struct Pattern {
    std::array<int, 3> vertex{};
    std::array<int, 3> edge{};
};

std::vector<Pattern> cycle_patterns() {
    std::vector<Pattern> out;
    for (int mask = 0; mask < 8; ++mask) {
        Pattern p;
        int used = 0;
        for (int i = 0; i < 3; ++i) {
            p.vertex[static_cast<std::size_t>(i)] = (mask >> i) & 1;
            used += p.vertex[static_cast<std::size_t>(i)];
        }
        const int rest = 3 - used;
        for (int e0 = 0; e0 <= rest; ++e0) {
            for (int e1 = 0; e0 + e1 <= rest; ++e1) {
                p.edge = {e0, e1, rest - e0 - e1};
                out.push_back(p);
            }
        }
    }
    return out;
}

/// Refined cycle: vertex ids in cyclic order, the chosen points (indices into
/// it) and each chosen point's position type (0..2 vertex, 3..5 edge).
struct Refined {
    std::vector<VertexId> nodes;
    std::vector<std::size_t> chosen;
    std::vector<int> type;
    std::array<std::size_t, 3> corner{};  // index of each original vertex
};

Refined refine(const Pattern& p, VertexId first, VertexId& next) {
    Refined r;
    for (int i = 0; i < 3; ++i) {
        r.corner[static_cast<std::size_t>(i)] = r.nodes.size();
        if (p.vertex[static_cast<std::size_t>(i)]) {
            r.chosen.push_back(r.nodes.size());
            r.type.push_back(i);
        }
        r.nodes.push_back(first + i);
        for (int j = 0; j < p.edge[static_cast<std::size_t>(i)]; ++j) {
            r.chosen.push_back(r.nodes.size());
            r.type.push_back(3 + i);
            r.nodes.push_back(next++);
        }
    }
    return r;
}

/// nodes[from], nodes[from + 1], ..., nodes[to], cyclically.
std::vector<VertexId> arc(const std::vector<VertexId>& nodes, std::size_t from, std::size_t to) {
    std::vector<VertexId> out;
    for (std::size_t i = from;; i = (i + 1) % nodes.size()) {
        out.push_back(nodes[i]);
        if (i == to) break;
    }
    return out;
}

CrossClass cross_class(int y, int x) {
    const bool yv = y < 3;
    const bool xv = x < 3;
    auto mod3 = [](int v) { return ((v % 3) + 3) % 3; };
    if (yv && xv) return mod3(x - y) == 0 ? CrossClass::StraightAcross : CrossClass::DiagonalVV;
    if (yv != xv) {
        const int v = yv ? y : x;
        const int e = (yv ? x : y) - 3;
        return mod3(v - e) == 2 ? CrossClass::FarVE : CrossClass::NearVE;
    }
    return (y - 3) == (x - 3) ? CrossClass::AlignedEE : CrossClass::OffsetEE;
}

std::string pattern_text(const Refined& ry, const Refined& rx, int twist) {
    std::ostringstream o;
    auto name = [](int t) { return t < 3 ? std::string(1, static_cast<char>('a' + t)) : "e" + std::to_string(t - 3); };
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) o << ",";
        o << "Y" << name(ry.type[i]) << ">X" << name(rx.type[(i + static_cast<std::size_t>(twist)) % 3]);
    }
    return o.str();
}

/// Orbits of single cross edges (Y position, X position) under shifting,
/// reflecting and exchanging the two cycles.
std::array<int, 3> first_edge_orbit_counts() {
    auto shift = [](int t) { return t < 3 ? (t + 1) % 3 : 3 + (t - 2) % 3; };
    auto reflect = [](int t) { return t < 3 ? (3 - t) % 3 : 3 + ((3 - (t - 3) - 1) % 3 + 3) % 3; };
    std::set<std::pair<int, int>> seen;
    std::array<int, 3> counts{};
    for (int y = 0; y < 6; ++y) {
        for (int x = 0; x < 6; ++x) {
            if (seen.count({y, x})) continue;
            std::vector<std::pair<int, int>> stack{{y, x}};
            seen.insert({y, x});
            while (!stack.empty()) {
                auto [a, b] = stack.back();
                stack.pop_back();
                for (auto next : {std::pair{shift(a), shift(b)}, std::pair{reflect(a), reflect(b)}, std::pair{b, a}}) {
                    if (seen.insert(next).second) stack.push_back(next);
                }
            }
            const int vertices = (y < 3) + (x < 3);
            ++counts[static_cast<std::size_t>(2 - vertices)];
        }
    }
    return counts;
}

}  // namespace

TorusMap seed_band_map() {
    return TorusMap(6, {{1, 2, 5, 4}, {2, 3, 6, 5}, {3, 1, 4, 6}, {4, 5, 3, 2}, {5, 6, 1, 3}, {6, 4, 2, 1}},
                    {{1, 4}, {2, 5}, {3, 6}});
}

SeedReport build_seed_set() {
    SeedReport report;
    report.first_edge_orbits = first_edge_orbit_counts();
    const auto patterns = cycle_patterns();
    std::set<CanonicalKey> seen;
    const KeyOptions opts{Symmetry::WithReflections, true};
    for (const auto& py : patterns) {
        for (const auto& px : patterns) {
            for (int twist = 0; twist < 3; ++twist) {
                ++report.candidates;
                VertexId next = 7;
                const Refined rx = refine(px, 1, next);
                const Refined ry = refine(py, 4, next);
                std::vector<Face> faces;
                for (std::size_t i = 0; i < 3; ++i) {
                    // first band: X forward from corner i to i+1, Y back
                    Face q = arc(rx.nodes, rx.corner[i], rx.corner[(i + 1) % 3]);
                    auto top = arc(ry.nodes, ry.corner[i], ry.corner[(i + 1) % 3]);
                    q.insert(q.end(), top.rbegin(), top.rend());
                    faces.push_back(std::move(q));
                }
                for (std::size_t i = 0; i < 3; ++i) {
                    // second band: Y forward between cross edges, X back
                    Face q = arc(ry.nodes, ry.chosen[i], ry.chosen[(i + 1) % 3]);
                    const auto t = static_cast<std::size_t>(twist);
                    auto top = arc(rx.nodes, rx.chosen[(i + t) % 3], rx.chosen[(i + 1 + t) % 3]);
                    q.insert(q.end(), top.rbegin(), top.rend());
                    faces.push_back(std::move(q));
                }
                std::optional<TorusMap> m;
                try {
                    m.emplace(next - 1, std::move(faces), std::vector<MarkedPath>{{1, 4}, {2, 5}, {3, 6}});
                } catch (const MapError&) {
                    ++report.rejected_invalid;
                    continue;
                }
                if (!seen.insert(canonical_key(*m, opts)).second) continue;
                ++report.distinct;
                if (find_band_decomposition(*m, 3)) {
                    ++report.pruned_three_bands;
                    continue;
                }
                CrossClass best = CrossClass::OffsetEE;
                for (std::size_t i = 0; i < 3; ++i) {
                    best = std::min(best, cross_class(ry.type[i], rx.type[(i + static_cast<std::size_t>(twist)) % 3]));
                }
                ++report.per_class[static_cast<std::size_t>(best)];
                report.seeds.push_back({std::move(*m), best, pattern_text(ry, rx, twist)});
            }
        }
    }
    return report;
}

std::string SeedReport::text() const {
    std::ostringstream o;
    o << "first-edge orbits: vv " << first_edge_orbits[0] << ", ve " << first_edge_orbits[1] << ", ee "
      << first_edge_orbits[2] << " (published 2/2/2)\n";
    o << "patterns tried: " << candidates << ", invalid: " << rejected_invalid << ", distinct: " << distinct
      << ", three bands: " << pruned_three_bands << "\n";
    o << "seeds: " << seeds.size() << " (published 359)\n";
    static const char* published[6] = {"18", "37", "-", "-", "-", "-"};
    for (std::size_t c = 0; c < 6; ++c) {
        o << "  class " << letter(static_cast<CrossClass>(c)) << ": " << per_class[c];
        if (published[c][0] != '-') o << " (published " << published[c] << ")";
        o << "\n";
    }
    o << "  C-F combined: " << per_class[2] + per_class[3] + per_class[4] + per_class[5]
      << " (published " << 359 - 18 - 37 << ")\n";
    return o.str();
}

// --- expansion ---

namespace {

/// Side of each boundary point of a face relative to the improper meeting.
enum class Side { Excluded, Left, Right, Shared };

struct FaceSides {
    int face;
    std::vector<Side> side;  // per boundary point
};

/// Points strictly between vertex points p and q going forward get `first`,
/// the others (strictly between q and p) get `second`.
void split_arcs(std::vector<Side>& side, int p, int q, Side first, Side second) {
    const int n = static_cast<int>(side.size());
    for (int i = (p + 1) % n; i != q; i = (i + 1) % n) side[static_cast<std::size_t>(i)] = first;
    for (int i = (q + 1) % n; i != p; i = (i + 1) % n) side[static_cast<std::size_t>(i)] = second;
}

int vertex_point(const Face& f, VertexId v) {
    return 2 * static_cast<int>(std::find(f.begin(), f.end(), v) - f.begin());
}

void add_chords_between(const TorusMap& map, const FaceSides& fs, std::vector<Successor>& out,
                        std::set<std::pair<int, int>>& used, bool any_pair) {
    const int n = static_cast<int>(fs.side.size());
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const Side sa = fs.side[static_cast<std::size_t>(a)];
            const Side sb = fs.side[static_cast<std::size_t>(b)];
            if (!any_pair) {
                if (sa == Side::Excluded || sb == Side::Excluded || sa == sb) continue;
            }
            ChordSpec s{fs.face, a, b};
            if (chord_problem(map, s)) continue;
            if (!used.insert({fs.face, a * 4096 + b}).second) continue;
            out.push_back({add_edge(map, s), chord_text(s)});
        }
    }
}

}  // namespace

std::vector<Successor> improper_pair_expansions(const TorusMap& map, const ExpansionOptions& options) {
    std::vector<Successor> out;
    const auto imp = first_improper_pair(map);
    if (!imp) return out;
    const int fe = imp->face_a;
    const int ff = imp->face_b;
    const Face& E = map.face(fe);

    // shared edges: dart x -> y in E whose reverse lies in F
    std::vector<std::pair<VertexId, VertexId>> shared_edges;
    std::set<VertexId> on_shared_edge;
    for (std::size_t i = 0; i < E.size(); ++i) {
        VertexId x = E[i];
        VertexId y = E[(i + 1) % E.size()];
        auto s = map.dart(y, x);
        if (s && s->face == ff) {
            shared_edges.emplace_back(x, y);
            on_shared_edge.insert(x);
            on_shared_edge.insert(y);
        }
    }
    std::vector<VertexId> lone;
    for (VertexId v : imp->shared) {
        if (!on_shared_edge.count(v)) lone.push_back(v);
    }

    std::set<std::pair<int, int>> used;
    auto sides_for = [&](int fi) { return FaceSides{fi, std::vector<Side>(2 * map.face(fi).size(), Side::Excluded)}; };

    if (lone.size() >= 2) {
        // two pinch vertices b, c: chords separating them in E or in F
        const VertexId b = lone[0];
        const VertexId c = lone[1];
        for (int fi : {fe, ff}) {
            auto fs = sides_for(fi);
            const Face& f = map.face(fi);
            split_arcs(fs.side, vertex_point(f, b), vertex_point(f, c), Side::Left, Side::Right);
            add_chords_between(map, fs, out, used, false);
        }
    } else if (lone.size() == 1 && !shared_edges.empty()) {
        // a shared edge a -> b (as seen in E) plus a pinch vertex c
        const VertexId a = shared_edges.front().first;
        const VertexId b = shared_edges.front().second;
        const VertexId c = lone.front();
        auto classify = [&](const TorusMap& m, int fi, VertexId from, std::vector<VertexId> q) {
            // walking forward: `from` .. c is one side, c .. the path end the other;
            // q lists the vertices of the shared path ending at `from`
            auto fs = FaceSides{fi, std::vector<Side>(2 * m.face(fi).size(), Side::Excluded)};
            const Face& f = m.face(fi);
            split_arcs(fs.side, vertex_point(f, from), vertex_point(f, c), Side::Right, Side::Left);
            const int n = static_cast<int>(fs.side.size());
            for (VertexId v : q) fs.side[static_cast<std::size_t>(vertex_point(f, v))] = Side::Shared;
            for (std::size_t i = 0; i + 1 < q.size(); ++i) {
                fs.side[static_cast<std::size_t>((vertex_point(f, q[i]) + 1) % n)] = Side::Shared;
            }
            fs.side[static_cast<std::size_t>(vertex_point(f, c))] = Side::Excluded;
            return fs;
        };
        // in E the shared path runs a -> b; in F it runs b -> a
        const auto fsE = classify(map, fe, b, {a, b});
        const auto fsF = classify(map, ff, a, {b, a});
        add_chords_between(map, fsE, out, used, false);
        add_chords_between(map, fsF, out, used, false);

        // two chords through a new point q on the shared edge, one in each face
        const int qE = (vertex_point(E, a) + 1) % static_cast<int>(2 * E.size());
        for (int p = 0; p < static_cast<int>(fsE.side.size()); ++p) {
            const Side s = fsE.side[static_cast<std::size_t>(p)];
            if (s != Side::Left && s != Side::Right) continue;
            ChordSpec first{fe, std::min(p, qE), std::max(p, qE)};
            if (chord_problem(map, first)) continue;
            const TorusMap m1 = add_edge(map, first);
            const Face& F1 = m1.face(ff);
            const VertexId qv = F1[static_cast<std::size_t>(vertex_point(F1, b) / 2 + 1) % F1.size()];
            const auto fsF1 = classify(m1, ff, a, {b, qv, a});
            for (int r = 0; r < static_cast<int>(fsF1.side.size()); ++r) {
                const Side t = fsF1.side[static_cast<std::size_t>(r)];
                if (t != Side::Left && t != Side::Right) continue;
                const int qp = vertex_point(F1, qv);
                ChordSpec second{ff, std::min(r, qp), std::max(r, qp)};
                if (chord_problem(m1, second)) continue;
                out.push_back({add_edge(m1, second), chord_text(first) + "+" + chord_text(second)});
            }
        }
    } else {
        for (int fi : {fe, ff}) add_chords_between(map, sides_for(fi), out, used, true);
    }
    if (options.over_approximate) {
        for (int fi : {fe, ff}) add_chords_between(map, sides_for(fi), out, used, true);
    }
    return out;
}

// --- pruning ---

std::string_view to_string(PruneReason reason) {
    switch (reason) {
    case PruneReason::HasEIC: return "HAS_EIC";
    case PruneReason::DualHasEIC: return "DUAL_HAS_EIC";
    case PruneReason::ThreeBands: return "THREE_BANDS";
    case PruneReason::MissingMarkedEdges: return "MISSING_MARKED_EDGES";
    }
    return "?";
}

std::optional<PruneReason> prune(const TorusMap& map, const PruneOptions& options) {
    if (has_eic(map)) return PruneReason::HasEIC;
    if (dual_has_eic(map)) return PruneReason::DualHasEIC;
    if (options.three_bands && find_band_decomposition(map, 3)) return PruneReason::ThreeBands;
    const auto& marks = map.marks();
    if (!marks.empty()) {
        if (marks.size() != kRequiredMarks) return PruneReason::MissingMarkedEdges;
        for (const auto& p : marks) {
            if (p.size() != 2) return PruneReason::MissingMarkedEdges;
        }
    }
    return std::nullopt;
}

}  // namespace tpm
