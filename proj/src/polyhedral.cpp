#include "tpm/polyhedral.hpp"

#include <algorithm>

namespace tpm {

namespace {

bool consecutive(const Face& f, VertexId a, VertexId b) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        VertexId x = f[i];
        VertexId y = f[(i + 1) % f.size()];
        if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
}

std::vector<VertexId> sorted_copy(const Face& f) {
    std::vector<VertexId> s = f;
    std::sort(s.begin(), s.end());
    return s;
}

Meeting meet_sorted(const Face& a, const Face& b, const std::vector<VertexId>& sa,
                    const std::vector<VertexId>& sb) {
    Meeting m;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(m.shared));
    if (m.shared.size() <= 1) return m;
    if (m.shared.size() == 2 && consecutive(a, m.shared[0], m.shared[1]) &&
        consecutive(b, m.shared[0], m.shared[1])) {
        return m;
    }
    m.proper = false;
    return m;
}

bool path_is_edge_path(const std::vector<Face>& faces, const MarkedPath& p) {
    if (p.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] == p[i + 1]) return false;
        bool found = false;
        for (const auto& f : faces) {
            if (consecutive(f, p[i], p[i + 1])) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

/// Drops the vertices flagged in `deleted`, renumbers densely and builds the
/// map. Marks that no longer describe edge paths are discarded.
Reduction rebuild(int n, std::vector<Face> faces, std::vector<MarkedPath> marks,
                  const std::vector<bool>& deleted) {
    std::vector<VertexId> renumber(static_cast<std::size_t>(n) + 1, 0);
    VertexId next = 1;
    for (VertexId v = 1; v <= n; ++v) {
        if (!deleted[static_cast<std::size_t>(v)]) renumber[static_cast<std::size_t>(v)] = next++;
    }
    for (auto& f : faces)
        for (auto& v : f) v = renumber[static_cast<std::size_t>(v)];
    std::vector<MarkedPath> kept;
    for (auto& p : marks) {
        bool ok = std::all_of(p.begin(), p.end(), [&](VertexId v) { return v >= 1 && v <= n && !deleted[static_cast<std::size_t>(v)]; });
        if (!ok) continue;
        for (auto& v : p) v = renumber[static_cast<std::size_t>(v)];
        if (path_is_edge_path(faces, p)) kept.push_back(std::move(p));
    }
    return Reduction{TorusMap(next - 1, std::move(faces), std::move(kept)), std::move(renumber)};
}

Face rotated_to(const Face& f, int pos) {
    Face r(f.begin() + pos, f.end());
    r.insert(r.end(), f.begin(), f.begin() + pos);
    return r;
}

void erase_vertex(std::vector<Face>& faces, VertexId w) {
    for (auto& f : faces) f.erase(std::remove(f.begin(), f.end(), w), f.end());
}

struct MergePlan {
    int face_a = -1;
    int face_b = -1;
    Face merged;
    std::vector<VertexId> suppressed;
};

/// Builds the merged face for removing uv; throws if the two faces meet at
/// anything besides the edge.
MergePlan plan_merge(const TorusMap& map, VertexId u, VertexId v) {
    auto fwd = map.dart(u, v);
    auto bwd = map.dart(v, u);
    if (!fwd || !bwd) throw std::invalid_argument("remove_edge: not an edge");
    if (fwd->face == bwd->face) {
        throw MapError(ViolationKind::RepeatedVertexInFace, "remove_edge: both sides in one face");
    }
    Face a = rotated_to(map.face(fwd->face), fwd->pos);  // u, v, a1..ak
    Face b = rotated_to(map.face(bwd->face), bwd->pos);  // v, u, b1..bm
    MergePlan plan;
    plan.face_a = fwd->face;
    plan.face_b = bwd->face;
    plan.merged.push_back(v);
    plan.merged.insert(plan.merged.end(), a.begin() + 2, a.end());
    plan.merged.push_back(u);
    plan.merged.insert(plan.merged.end(), b.begin() + 2, b.end());
    auto s = sorted_copy(plan.merged);
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw MapError(ViolationKind::RepeatedVertexInFace,
                       "remove_edge: faces meet at more than the edge");
    }
    for (VertexId w : {u, v}) {
        if (map.valence(w) == 3) plan.suppressed.push_back(w);
    }
    return plan;
}

}  // namespace

std::string_view to_string(Status status) {
    switch (status) {
    case Status::DiminimalTPM: return "DIMINIMAL";
    case Status::PolyhedralNotDiminimal: return "POLYHEDRAL_NOT_DIMINIMAL";
    case Status::NotPolyhedral: return "NOT_POLYHEDRAL";
    }
    return "?";
}

Meeting meet(const Face& a, const Face& b) {
    return meet_sorted(a, b, sorted_copy(a), sorted_copy(b));
}

Meeting faces_meet_properly(const TorusMap& map, int i, int j) {
    if (i == j) throw std::invalid_argument("faces_meet_properly: identical faces");
    return meet(map.face(i), map.face(j));
}

std::optional<ImproperMeeting> first_improper_pair(const TorusMap& map) {
    std::vector<std::vector<VertexId>> sorted;
    sorted.reserve(map.faces().size());
    for (const auto& f : map.faces()) sorted.push_back(sorted_copy(f));
    for (int i = 0; i < map.face_count(); ++i) {
        for (int j = i + 1; j < map.face_count(); ++j) {
            auto m = meet_sorted(map.face(i), map.face(j), sorted[static_cast<std::size_t>(i)],
                                 sorted[static_cast<std::size_t>(j)]);
            if (!m.proper) return ImproperMeeting{i, j, std::move(m.shared)};
        }
    }
    return std::nullopt;
}

bool is_polyhedral(const TorusMap& map) {
    return !first_improper_pair(map).has_value();
}

Reduction remove_edge(const TorusMap& map, VertexId u, VertexId v) {
    MergePlan plan = plan_merge(map, u, v);
    std::vector<Face> faces;
    for (int i = 0; i < map.face_count(); ++i) {
        if (i == plan.face_a) faces.push_back(plan.merged);
        else if (i != plan.face_b) faces.push_back(map.face(i));
    }
    std::vector<bool> deleted(static_cast<std::size_t>(map.vertex_count()) + 1, false);
    std::vector<MarkedPath> marks;
    for (const auto& p : map.marks()) {
        bool uses_edge = false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if ((p[i] == u && p[i + 1] == v) || (p[i] == v && p[i + 1] == u)) uses_edge = true;
        }
        if (!uses_edge) marks.push_back(p);
    }
    for (VertexId w : plan.suppressed) {
        erase_vertex(faces, w);
        deleted[static_cast<std::size_t>(w)] = true;
        for (auto& p : marks) {
            if (p.front() == w || p.back() == w) continue;  // dropped by rebuild
            p.erase(std::remove(p.begin(), p.end(), w), p.end());
        }
    }
    return rebuild(map.vertex_count(), std::move(faces), std::move(marks), deleted);
}

Reduction shrink_edge(const TorusMap& map, VertexId u, VertexId v) {
    if (!map.adjacent(u, v)) throw std::invalid_argument("shrink_edge: not an edge");
    const VertexId keep = std::min(u, v);
    const VertexId gone = std::max(u, v);
    std::vector<Face> faces;
    for (const auto& f : map.faces()) {
        Face g;
        const bool has_edge = consecutive(f, keep, gone);
        for (VertexId w : f) {
            if (w == gone) {
                if (!has_edge) g.push_back(keep);
            } else {
                g.push_back(w);
            }
        }
        if (g.size() == 2) continue;  // two-sided face collapses to one edge
        faces.push_back(std::move(g));
    }
    std::vector<MarkedPath> marks;
    for (auto p : map.marks()) {
        for (auto& w : p)
            if (w == gone) w = keep;
        p.erase(std::unique(p.begin(), p.end()), p.end());
        if (p.size() >= 2) marks.push_back(std::move(p));
    }
    std::vector<bool> deleted(static_cast<std::size_t>(map.vertex_count()) + 1, false);
    deleted[static_cast<std::size_t>(gone)] = true;
    return rebuild(map.vertex_count(), std::move(faces), std::move(marks), deleted);
}

bool is_edge_removable(const TorusMap& map, VertexId u, VertexId v) {
    MergePlan plan;
    try {
        plan = plan_merge(map, u, v);
    } catch (const MapError&) {
        return false;
    }
    std::vector<Face> faces;
    std::vector<bool> changed;
    for (int i = 0; i < map.face_count(); ++i) {
        if (i == plan.face_b) continue;
        faces.push_back(i == plan.face_a ? plan.merged : map.face(i));
        changed.push_back(i == plan.face_a);
    }
    // edges created by suppression must not duplicate existing ones
    std::vector<std::pair<VertexId, VertexId>> created;
    for (VertexId w : plan.suppressed) {
        std::vector<VertexId> nbrs;
        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            const auto& f = faces[fi];
            auto it = std::find(f.begin(), f.end(), w);
            if (it == f.end()) continue;
            changed[fi] = true;
            auto i = static_cast<std::size_t>(it - f.begin());
            nbrs.push_back(f[(i + 1) % f.size()]);
            nbrs.push_back(f[(i + f.size() - 1) % f.size()]);
        }
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        if (nbrs.size() != 2) return false;
        std::pair<int, int> e = std::minmax(nbrs[0], nbrs[1]);
        if (map.adjacent(e.first, e.second) ||
            std::find(created.begin(), created.end(), e) != created.end()) {
            return false;
        }
        created.push_back(e);
        erase_vertex(faces, w);
    }
    for (const auto& f : faces) {
        if (f.size() < 3) return false;
    }
    std::vector<std::vector<VertexId>> sorted;
    sorted.reserve(faces.size());
    for (const auto& f : faces) sorted.push_back(sorted_copy(f));
    for (std::size_t c = 0; c < faces.size(); ++c) {
        if (!changed[c]) continue;
        for (std::size_t j = 0; j < faces.size(); ++j) {
            if (j == c) continue;
            if (!meet_sorted(faces[c], faces[j], sorted[c], sorted[j]).proper) return false;
        }
    }
    return true;
}

bool is_edge_removable_slow(const TorusMap& map, VertexId u, VertexId v) {
    try {
        return is_polyhedral(remove_edge(map, u, v).map);
    } catch (const MapError&) {
        return false;
    }
}

bool is_edge_shrinkable(const TorusMap& map, VertexId u, VertexId v) {
    try {
        return is_polyhedral(shrink_edge(map, u, v).map);
    } catch (const MapError&) {
        return false;
    }
}

Verdict classify(const TorusMap& map) {
    Verdict verdict;
    if (auto bad = first_improper_pair(map)) {
        verdict.status = Status::NotPolyhedral;
        verdict.improper = std::move(bad);
        return verdict;
    }
    const auto all = edges(map);
    for (const auto& e : all) {
        if (is_edge_removable(map, e.u, e.v)) {
            verdict.status = Status::PolyhedralNotDiminimal;
            verdict.edge = {e.u, e.v};
            verdict.removable = true;
            return verdict;
        }
    }
    for (const auto& e : all) {
        if (is_edge_shrinkable(map, e.u, e.v)) {
            verdict.status = Status::PolyhedralNotDiminimal;
            verdict.edge = {e.u, e.v};
            verdict.removable = false;
            return verdict;
        }
    }
    verdict.status = Status::DiminimalTPM;
    return verdict;
}

std::string Verdict::record() const {
    std::string s(to_string(status));
    s += '\t';
    if (improper) {
        s += "faces=" + std::to_string(improper->face_a) + "," + std::to_string(improper->face_b) + ";shared=";
        for (std::size_t i = 0; i < improper->shared.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(improper->shared[i]);
        }
    } else if (edge) {
        s += (removable ? "removable=" : "shrinkable=") + std::to_string(edge->first) + "-" +
             std::to_string(edge->second);
    } else {
        s += "-";
    }
    return s;
}

}  // namespace tpm
