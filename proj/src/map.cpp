#include "tpm/map.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace tpm {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::EmptyMap: return "empty map";
    case ViolationKind::VertexOutOfRange: return "vertex id out of range";
    case ViolationKind::FaceTooShort: return "face shorter than 3";
    case ViolationKind::RepeatedVertexInFace: return "repeated vertex in face";
    case ViolationKind::DuplicateEdgeDirection: return "non-orientable/duplicate edge direction";
    case ViolationKind::UnpairedEdge: return "edge without opposite occurrence";
    case ViolationKind::ValenceBelowThree: return "valence<3";
    case ViolationKind::NonManifoldVertex: return "vertex neighbourhood is not a disk";
    case ViolationKind::Disconnected: return "disconnected";
    case ViolationKind::EulerNonZero: return "Euler characteristic != 0";
    case ViolationKind::BadMarkedPath: return "marked path is not a path of the map";
    }
    return "unknown";
}

namespace {

struct DartRec {
    VertexId from;
    VertexId to;
    int face;
    int pos;
};

std::string pair_text(VertexId a, VertexId b) {
    return std::to_string(a) + "-" + std::to_string(b);
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

}  // namespace

int euler_characteristic(int vertex_count, const std::vector<Face>& faces) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& f : faces) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            VertexId a = f[i];
            VertexId b = f[(i + 1) % f.size()];
            pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return vertex_count - static_cast<int>(pairs.size()) + static_cast<int>(faces.size());
}

std::vector<Violation> validate(int n, const std::vector<Face>& faces,
                                const std::vector<MarkedPath>& marks) {
    std::vector<Violation> out;
    if (n <= 0 || faces.empty()) {
        out.push_back({ViolationKind::EmptyMap, "order " + std::to_string(n) + ", " +
                                                    std::to_string(faces.size()) + " faces"});
        return out;
    }
    bool structural = true;
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& f = faces[fi];
        for (VertexId v : f) {
            if (v < 1 || v > n) {
                out.push_back({ViolationKind::VertexOutOfRange,
                               "face " + std::to_string(fi) + " vertex " + std::to_string(v)});
                structural = false;
            }
        }
        if (f.size() < 3) {
            out.push_back({ViolationKind::FaceTooShort, "face " + std::to_string(fi)});
        }
        std::vector<VertexId> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            out.push_back({ViolationKind::RepeatedVertexInFace,
                           "face " + std::to_string(fi) + " vertex " + std::to_string(*dup)});
        }
    }
    if (!structural) return out;

    std::vector<DartRec> darts;
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& f = faces[fi];
        for (std::size_t i = 0; i < f.size(); ++i) {
            darts.push_back({f[i], f[(i + 1) % f.size()], static_cast<int>(fi), static_cast<int>(i)});
        }
    }
    auto key = [](const DartRec& d) { return std::make_pair(d.from, d.to); };
    std::sort(darts.begin(), darts.end(),
              [&](const DartRec& a, const DartRec& b) { return key(a) < key(b); });
    for (std::size_t i = 1; i < darts.size(); ++i) {
        if (key(darts[i]) == key(darts[i - 1])) {
            out.push_back({ViolationKind::DuplicateEdgeDirection,
                           pair_text(darts[i].from, darts[i].to)});
        }
    }
    for (const auto& d : darts) {
        auto it = std::lower_bound(darts.begin(), darts.end(), std::make_pair(d.to, d.from),
                                   [&](const DartRec& x, const std::pair<VertexId, VertexId>& k) {
                                       return key(x) < k;
                                   });
        if (it == darts.end() || key(*it) != std::make_pair(d.to, d.from)) {
            out.push_back({ViolationKind::UnpairedEdge, pair_text(d.from, d.to)});
        }
    }

    std::vector<int> valence(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& d : darts) ++valence[static_cast<std::size_t>(d.from)];
    for (VertexId v = 1; v <= n; ++v) {
        if (valence[static_cast<std::size_t>(v)] < 3) {
            out.push_back({ViolationKind::ValenceBelowThree,
                           "vertex " + std::to_string(v) + " valence " +
                               std::to_string(valence[static_cast<std::size_t>(v)])});
        }
    }

    const bool paired = std::none_of(out.begin(), out.end(), [](const Violation& x) {
        return x.kind == ViolationKind::DuplicateEdgeDirection ||
               x.kind == ViolationKind::UnpairedEdge || x.kind == ViolationKind::FaceTooShort ||
               x.kind == ViolationKind::RepeatedVertexInFace;
    });
    if (paired) {
        // Each vertex's corners must chain into one cycle: the corner entering
        // v along u->v continues with the corner whose outgoing dart is v->u.
        for (VertexId v = 1; v <= n; ++v) {
            std::vector<std::pair<VertexId, VertexId>> corners;  // (in-neighbour, out-neighbour)
            for (const auto& f : faces) {
                for (std::size_t i = 0; i < f.size(); ++i) {
                    if (f[i] == v) {
                        corners.emplace_back(f[(i + f.size() - 1) % f.size()], f[(i + 1) % f.size()]);
                    }
                }
            }
            if (corners.empty()) continue;
            std::size_t seen = 1;
            VertexId start_in = corners[0].first;
            VertexId cur_in = corners[0].first;
            while (true) {
                auto it = std::find_if(corners.begin(), corners.end(),
                                       [&](const auto& c) { return c.second == cur_in; });
                if (it == corners.end()) break;
                cur_in = it->first;
                if (cur_in == start_in) break;
                ++seen;
                if (seen > corners.size()) break;
            }
            if (seen != corners.size()) {
                out.push_back({ViolationKind::NonManifoldVertex, "vertex " + std::to_string(v)});
            }
        }
    }

    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& d : darts) {
        parent[static_cast<std::size_t>(find_root(parent, d.from))] = find_root(parent, d.to);
    }
    for (VertexId v = 2; v <= n; ++v) {
        if (find_root(parent, v) != find_root(parent, 1)) {
            out.push_back({ViolationKind::Disconnected, "vertex " + std::to_string(v)});
            break;
        }
    }

    const int chi = euler_characteristic(n, faces);
    if (chi != 0) {
        out.push_back({ViolationKind::EulerNonZero, "V-E+F=" + std::to_string(chi)});
    }

    for (const auto& path : marks) {
        bool ok = path.size() >= 2;
        for (std::size_t i = 0; ok && i < path.size(); ++i) {
            if (path[i] < 1 || path[i] > n) ok = false;
        }
        if (ok && std::set<VertexId>(path.begin(), path.end()).size() != path.size()) ok = false;
        for (std::size_t i = 0; ok && i + 1 < path.size(); ++i) {
            auto it = std::lower_bound(darts.begin(), darts.end(), std::make_pair(path[i], path[i + 1]),
                                       [&](const DartRec& x, const std::pair<VertexId, VertexId>& k) {
                                           return key(x) < k;
                                       });
            if (it == darts.end() || key(*it) != std::make_pair(path[i], path[i + 1])) ok = false;
        }
        if (!ok) out.push_back({ViolationKind::BadMarkedPath, format_marks({path})});
    }
    return out;
}

TorusMap::TorusMap(int vertex_count, std::vector<Face> faces, std::vector<MarkedPath> marks)
    : n_(vertex_count), faces_(std::move(faces)), marks_(std::move(marks)) {
    auto violations = validate(n_, faces_, marks_);
    if (!violations.empty()) {
        const auto& v = violations.front();
        throw MapError(v.kind, std::string(to_string(v.kind)) + ": " + v.witness);
    }
    index();
}

void TorusMap::index() {
    const auto n = static_cast<std::size_t>(n_);
    valence_.assign(n + 1, 0);
    dart_.assign((n + 1) * (n + 1), -1);
    int darts = 0;
    for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
        const auto& f = faces_[fi];
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto a = static_cast<std::size_t>(f[i]);
            auto b = static_cast<std::size_t>(f[(i + 1) % f.size()]);
            dart_[a * (n + 1) + b] = static_cast<std::int32_t>((fi << 16) | i);
            ++valence_[a];
            ++darts;
        }
    }
    edge_count_ = darts / 2;
}

bool TorusMap::adjacent(VertexId a, VertexId b) const noexcept {
    return dart(a, b).has_value();
}

std::optional<Slot> TorusMap::dart(VertexId a, VertexId b) const noexcept {
    if (a < 1 || b < 1 || a > n_ || b > n_) return std::nullopt;
    const auto n = static_cast<std::size_t>(n_);
    std::int32_t code = dart_[static_cast<std::size_t>(a) * (n + 1) + static_cast<std::size_t>(b)];
    if (code < 0) return std::nullopt;
    return Slot{code >> 16, code & 0xffff};
}

VertexId TorusMap::next_ccw(VertexId v, VertexId w) const {
    auto s = dart(v, w);
    if (!s) throw std::invalid_argument("next_ccw: " + pair_text(v, w) + " is not an edge");
    const auto& f = faces_[static_cast<std::size_t>(s->face)];
    return f[(static_cast<std::size_t>(s->pos) + f.size() - 1) % f.size()];
}

std::vector<int> TorusMap::faces_around(VertexId v) const {
    std::vector<int> out;
    const auto& f0 = *std::find_if(faces_.begin(), faces_.end(), [&](const Face& f) {
        return std::find(f.begin(), f.end(), v) != f.end();
    });
    auto it = std::find(f0.begin(), f0.end(), v);
    VertexId start = f0[static_cast<std::size_t>((it - f0.begin() + 1)) % f0.size()];
    VertexId w = start;
    do {
        out.push_back(dart(v, w)->face);
        w = next_ccw(v, w);
    } while (w != start);
    return out;
}

TorusMap TorusMap::with_marks(std::vector<MarkedPath> marks) const {
    return TorusMap(n_, faces_, std::move(marks));
}

TorusMap TorusMap::normalized() const {
    auto faces = faces_;
    for (auto& f : faces) std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
    return TorusMap(n_, std::move(faces), marks_);
}

TorusMap TorusMap::mirrored() const {
    auto faces = faces_;
    for (auto& f : faces) std::reverse(f.begin(), f.end());
    return TorusMap(n_, std::move(faces), marks_);
}

TorusMap TorusMap::relabeled(std::span<const VertexId> perm) const {
    auto faces = faces_;
    for (auto& f : faces)
        for (auto& v : f) v = perm[static_cast<std::size_t>(v)];
    auto marks = marks_;
    for (auto& p : marks)
        for (auto& v : p) v = perm[static_cast<std::size_t>(v)];
    return TorusMap(n_, std::move(faces), std::move(marks));
}

std::vector<EdgeRef> edges(const TorusMap& map) {
    std::vector<EdgeRef> out;
    out.reserve(static_cast<std::size_t>(map.edge_count()));
    for (VertexId u = 1; u <= map.vertex_count(); ++u) {
        for (VertexId v = u + 1; v <= map.vertex_count(); ++v) {
            if (auto f = map.dart(u, v)) out.push_back({u, v, *f, *map.dart(v, u)});
        }
    }
    return out;
}

std::vector<int> valence_distribution(const TorusMap& map) {
    std::vector<int> out;
    for (VertexId v = 1; v <= map.vertex_count(); ++v) {
        auto k = static_cast<std::size_t>(map.valence(v) - 3);
        if (out.size() <= k) out.resize(k + 1, 0);
        ++out[k];
    }
    return out;
}

std::vector<int> face_size_distribution(const TorusMap& map) {
    std::vector<int> out;
    for (const auto& f : map.faces()) {
        auto k = f.size() - 3;
        if (out.size() <= k) out.resize(k + 1, 0);
        ++out[k];
    }
    return out;
}

int euler_characteristic(const TorusMap& map) {
    return map.vertex_count() - map.edge_count() + map.face_count();
}

RotationSystem rotation_system(const TorusMap& map) {
    RotationSystem rot(static_cast<std::size_t>(map.vertex_count()) + 1);
    for (VertexId v = 1; v <= map.vertex_count(); ++v) {
        VertexId start = 0;
        for (VertexId w = 1; w <= map.vertex_count() && start == 0; ++w) {
            if (map.adjacent(v, w)) start = w;
        }
        VertexId w = start;
        do {
            rot[static_cast<std::size_t>(v)].push_back(w);
            w = map.next_ccw(v, w);
        } while (w != start);
    }
    return rot;
}

std::vector<Face> faces_from_rotation(const RotationSystem& rot) {
    const std::size_t n = rot.size() - 1;
    // position of w in rot[v]
    std::vector<std::vector<int>> where(n + 1, std::vector<int>(n + 1, -1));
    for (std::size_t v = 1; v <= n; ++v) {
        for (std::size_t i = 0; i < rot[v].size(); ++i) {
            where[v][static_cast<std::size_t>(rot[v][i])] = static_cast<int>(i);
        }
    }
    std::vector<std::vector<bool>> used(n + 1, std::vector<bool>(n + 1, false));
    std::vector<Face> faces;
    for (std::size_t v = 1; v <= n; ++v) {
        for (VertexId w0 : rot[v]) {
            if (used[v][static_cast<std::size_t>(w0)]) continue;
            Face f;
            auto a = static_cast<VertexId>(v);
            VertexId b = w0;
            while (!used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                used[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
                f.push_back(a);
                const auto& rb = rot[static_cast<std::size_t>(b)];
                int i = where[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
                if (i < 0) throw std::invalid_argument("rotation system is not symmetric");
                VertexId c = rb[(static_cast<std::size_t>(i) + rb.size() - 1) % rb.size()];
                a = b;
                b = c;
            }
            faces.push_back(std::move(f));
        }
    }
    return faces;
}

TorusMap dual(const TorusMap& map) {
    std::vector<Face> faces;
    faces.reserve(static_cast<std::size_t>(map.vertex_count()));
    for (VertexId v = 1; v <= map.vertex_count(); ++v) {
        Face f;
        for (int fi : map.faces_around(v)) f.push_back(fi + 1);
        faces.push_back(std::move(f));
    }
    return TorusMap(map.face_count(), std::move(faces));
}

std::vector<long long> parse_integers(std::string_view text) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == ',' || c == '[' || c == ']' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + i) {
            throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                             std::to_string(i));
        }
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return out;
}

TorusMap from_serial(std::span<const long long> values) {
    if (values.size() < 3) throw ParseError("serial form needs at least order, placeholder and -1");
    if (values[0] < 3) throw ParseError("order must be at least 3");
    if (values[1] != 0) throw ParseError("placeholder must be 0");
    if (values[2] != -1) throw ParseError("expected -1 after the placeholder");
    const auto n = static_cast<int>(values[0]);
    std::vector<Face> faces;
    Face cur;
    for (std::size_t i = 3; i < values.size(); ++i) {
        if (values[i] == -1) {
            if (cur.empty()) throw ParseError("empty face at position " + std::to_string(i));
            faces.push_back(std::move(cur));
            cur.clear();
        } else if (values[i] < 1) {
            throw ParseError("invalid vertex " + std::to_string(values[i]) + " at position " +
                             std::to_string(i));
        } else {
            cur.push_back(static_cast<VertexId>(values[i]));
        }
    }
    if (!cur.empty()) throw ParseError("last face is not terminated by -1");
    return TorusMap(n, std::move(faces));
}

TorusMap parse_serial(std::string_view text) {
    auto values = parse_integers(text);
    return from_serial(values);
}

std::vector<long long> to_serial(const TorusMap& map) {
    std::vector<long long> out{map.vertex_count(), 0, -1};
    for (const auto& f : map.faces()) {
        out.insert(out.end(), f.begin(), f.end());
        out.push_back(-1);
    }
    return out;
}

std::string serialize(const TorusMap& map) {
    std::string s = "[";
    bool first = true;
    for (long long x : to_serial(map)) {
        if (!first) s += ", ";
        s += std::to_string(x);
        first = false;
    }
    s += "]";
    return s;
}

std::string format_marks(const std::vector<MarkedPath>& marks) {
    std::string s;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (i) s += ',';
        for (std::size_t j = 0; j < marks[i].size(); ++j) {
            if (j) s += '-';
            s += std::to_string(marks[i][j]);
        }
    }
    return s;
}

std::vector<MarkedPath> parse_marks(std::string_view text) {
    std::vector<MarkedPath> out;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        MarkedPath path;
        std::stringstream ps(item);
        std::string v;
        while (std::getline(ps, v, '-')) {
            int x = 0;
            auto b = v.find_first_not_of(" \t");
            auto e = v.find_last_not_of(" \t");
            if (b == std::string::npos) throw ParseError("bad marked path '" + item + "'");
            auto sv = std::string_view(v).substr(b, e - b + 1);
            auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), x);
            if (ec != std::errc() || ptr != sv.data() + sv.size())
                throw ParseError("bad marked path '" + item + "'");
            path.push_back(x);
        }
        out.push_back(std::move(path));
    }
    return out;
}

}  // namespace tpm
