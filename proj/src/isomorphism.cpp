#include "tpm/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tpm {

namespace {

/// Neighbour lists in counterclockwise order plus a reverse index.
struct Rotation {
    std::vector<std::vector<VertexId>> nbr;
    std::vector<std::vector<int>> pos;  // pos[v][w] = index of w in nbr[v], or -1

    explicit Rotation(const TorusMap& m) {
        auto rot = rotation_system(m);
        const auto n = static_cast<std::size_t>(m.vertex_count());
        nbr = std::move(rot);
        pos.assign(n + 1, std::vector<int>(n + 1, -1));
        for (std::size_t v = 1; v <= n; ++v) {
            for (std::size_t i = 0; i < nbr[v].size(); ++i) {
                pos[v][static_cast<std::size_t>(nbr[v][i])] = static_cast<int>(i);
            }
        }
    }
};

using Class = std::pair<int, std::vector<int>>;

std::vector<Class> vertex_classes(const TorusMap& m, bool with_faces) {
    std::vector<Class> cls(static_cast<std::size_t>(m.vertex_count()) + 1);
    for (VertexId v = 1; v <= m.vertex_count(); ++v) {
        auto& c = cls[static_cast<std::size_t>(v)];
        c.first = m.valence(v);
        if (with_faces) {
            for (int f : m.faces_around(v)) c.second.push_back(static_cast<int>(m.face(f).size()));
            std::sort(c.second.begin(), c.second.end());
        }
    }
    return cls;
}

bool carries_faces(const TorusMap& a, const TorusMap& b, const Bijection& f, bool reversed) {
    for (const auto& face : a.faces()) {
        const std::size_t k = face.size();
        int target = -1;
        for (std::size_t i = 0; i < k; ++i) {
            VertexId x = f[static_cast<std::size_t>(face[i])];
            VertexId y = f[static_cast<std::size_t>(face[(i + 1) % k])];
            auto s = reversed ? b.dart(y, x) : b.dart(x, y);
            if (!s) return false;
            if (target < 0) target = s->face;
            else if (s->face != target) return false;
        }
        if (b.face(target).size() != k) return false;
    }
    return true;
}

/// Backtracking over vertex bijections preserving class and adjacency.
class Matcher {
public:
    Matcher(const TorusMap& a, const TorusMap& b, bool with_faces)
        : a_(a), b_(b), ca_(vertex_classes(a, with_faces)), cb_(vertex_classes(b, with_faces)) {}

    template <typename Accept>
    std::optional<Bijection> run(Accept accept) {
        const int n = a_.vertex_count();
        if (n != b_.vertex_count()) return std::nullopt;
        // seed at the rarest class
        std::map<Class, int> count;
        for (VertexId v = 1; v <= n; ++v) ++count[ca_[static_cast<std::size_t>(v)]];
        VertexId seed = 1;
        for (VertexId v = 2; v <= n; ++v) {
            if (count[ca_[static_cast<std::size_t>(v)]] < count[ca_[static_cast<std::size_t>(seed)]]) seed = v;
        }
        order_.clear();
        parent_.assign(static_cast<std::size_t>(n) + 1, 0);
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        order_.push_back(seed);
        seen[static_cast<std::size_t>(seed)] = true;
        for (std::size_t i = 0; i < order_.size(); ++i) {
            VertexId v = order_[i];
            for (VertexId w = 1; w <= n; ++w) {
                if (!seen[static_cast<std::size_t>(w)] && a_.adjacent(v, w)) {
                    seen[static_cast<std::size_t>(w)] = true;
                    parent_[static_cast<std::size_t>(w)] = v;
                    order_.push_back(w);
                }
            }
        }
        if (static_cast<int>(order_.size()) != n) return std::nullopt;
        f_.assign(static_cast<std::size_t>(n) + 1, 0);
        used_.assign(static_cast<std::size_t>(n) + 1, false);
        std::optional<Bijection> out;
        auto leaf = [&](const Bijection& f) {
            if (accept(f)) {
                out = f;
                return true;
            }
            return false;
        };
        search(0, leaf);
        return out;
    }

private:
    template <typename Leaf>
    bool search(std::size_t depth, Leaf& leaf) {
        if (depth == order_.size()) return leaf(f_);
        VertexId x = order_[depth];
        const int n = b_.vertex_count();
        VertexId p = parent_[static_cast<std::size_t>(x)];
        for (VertexId y = 1; y <= n; ++y) {
            if (used_[static_cast<std::size_t>(y)]) continue;
            if (p != 0 && !b_.adjacent(f_[static_cast<std::size_t>(p)], y)) continue;
            if (ca_[static_cast<std::size_t>(x)] != cb_[static_cast<std::size_t>(y)]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                VertexId z = order_[i];
                ok = a_.adjacent(x, z) == b_.adjacent(y, f_[static_cast<std::size_t>(z)]);
            }
            if (!ok) continue;
            f_[static_cast<std::size_t>(x)] = y;
            used_[static_cast<std::size_t>(y)] = true;
            if (search(depth + 1, leaf)) return true;
            used_[static_cast<std::size_t>(y)] = false;
            f_[static_cast<std::size_t>(x)] = 0;
        }
        return false;
    }

    const TorusMap& a_;
    const TorusMap& b_;
    std::vector<Class> ca_;
    std::vector<Class> cb_;
    std::vector<VertexId> order_;
    std::vector<VertexId> parent_;
    Bijection f_;
    std::vector<bool> used_;
};

/// Extends dart (a0 -> a1) |-> (b0 -> b1) to a map isomorphism, turning the
/// same way (dir = +1) or the opposite way (dir = -1) around each vertex.
std::optional<Bijection> extend_from_dart(const TorusMap& a, const Rotation& ra, const TorusMap& b,
                                          const Rotation& rb, VertexId a0, VertexId a1,
                                          VertexId b0, VertexId b1, int dir) {
    const auto n = static_cast<std::size_t>(a.vertex_count());
    if (n != static_cast<std::size_t>(b.vertex_count())) return std::nullopt;
    Bijection f(n + 1, 0);
    std::vector<bool> used(n + 1, false);
    std::vector<VertexId> ref(n + 1, 0);
    std::vector<VertexId> queue{a0};
    f[static_cast<std::size_t>(a0)] = b0;
    used[static_cast<std::size_t>(b0)] = true;
    ref[static_cast<std::size_t>(a0)] = a1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const VertexId v = queue[qi];
        const VertexId fv = f[static_cast<std::size_t>(v)];
        const auto& na = ra.nbr[static_cast<std::size_t>(v)];
        const auto& nb = rb.nbr[static_cast<std::size_t>(fv)];
        if (na.size() != nb.size()) return std::nullopt;
        const VertexId r = ref[static_cast<std::size_t>(v)];
        const VertexId fr = (v == a0) ? b1 : f[static_cast<std::size_t>(r)];
        const int pa = ra.pos[static_cast<std::size_t>(v)][static_cast<std::size_t>(r)];
        const int pb = rb.pos[static_cast<std::size_t>(fv)][static_cast<std::size_t>(fr)];
        if (pa < 0 || pb < 0) return std::nullopt;
        const auto d = static_cast<int>(na.size());
        for (int t = 0; t < d; ++t) {
            VertexId u = na[static_cast<std::size_t>((pa + t) % d)];
            VertexId fu = nb[static_cast<std::size_t>(((pb + dir * t) % d + d) % d)];
            auto& slot = f[static_cast<std::size_t>(u)];
            if (slot == 0) {
                if (used[static_cast<std::size_t>(fu)]) return std::nullopt;
                slot = fu;
                used[static_cast<std::size_t>(fu)] = true;
                ref[static_cast<std::size_t>(u)] = v;
                queue.push_back(u);
            } else if (slot != fu) {
                return std::nullopt;
            }
        }
    }
    if (queue.size() != n) return std::nullopt;
    return f;
}

std::vector<int> mark_code(const std::vector<MarkedPath>& marks, const Bijection& label) {
    std::vector<std::vector<int>> paths;
    for (const auto& p : marks) {
        std::vector<int> q;
        for (VertexId v : p) q.push_back(label[static_cast<std::size_t>(v)]);
        std::vector<int> r(q.rbegin(), q.rend());
        paths.push_back(std::min(q, r));
    }
    std::sort(paths.begin(), paths.end());
    std::vector<int> out{static_cast<int>(paths.size())};
    for (const auto& p : paths) {
        out.push_back(static_cast<int>(p.size()));
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

}  // namespace

Signature invariant_signature(const TorusMap& map) {
    return {map.vertex_count(), map.face_count(), valence_distribution(map), face_size_distribution(map)};
}

std::optional<Bijection> are_map_isomorphic(const TorusMap& a, const TorusMap& b, Symmetry symmetry) {
    if (!(invariant_signature(a) == invariant_signature(b))) return std::nullopt;
    Matcher m(a, b, true);
    return m.run([&](const Bijection& f) {
        if (carries_faces(a, b, f, false)) return true;
        return symmetry == Symmetry::WithReflections && carries_faces(a, b, f, true);
    });
}

std::optional<Bijection> graph_isomorphism(const TorusMap& a, const TorusMap& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        valence_distribution(a) != valence_distribution(b)) {
        return std::nullopt;
    }
    Matcher m(a, b, false);
    return m.run([](const Bijection&) { return true; });
}

bool are_graph_isomorphic(const TorusMap& a, const TorusMap& b) {
    return graph_isomorphism(a, b).has_value();
}

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    const bool wide = std::any_of(code.begin(), code.end(), [](int x) { return x < 0 || x > 254; });
    std::string s = wide ? "w" : "";
    for (int x : code) {
        const int width = wide ? 8 : 2;
        auto u = static_cast<unsigned>(x);
        for (int i = width - 1; i >= 0; --i) s += digits[(u >> (4 * i)) & 0xf];
    }
    return s;
}

CanonicalForm canonical_form(const TorusMap& map, const KeyOptions& options) {
    const Rotation rot(map);
    const auto n = static_cast<std::size_t>(map.vertex_count());
    CanonicalForm best;
    std::vector<int> best_code;
    bool have = false;

    std::vector<int> label(n + 1);
    std::vector<VertexId> ref(n + 1);
    std::vector<VertexId> queue;
    std::vector<int> code;
    code.reserve(2 * static_cast<std::size_t>(map.edge_count()) + n);

    const int dirs[2] = {1, -1};
    const int ndirs = options.symmetry == Symmetry::WithReflections ? 2 : 1;
    for (int di = 0; di < ndirs; ++di) {
        const int dir = dirs[di];
        for (VertexId v0 = 1; v0 <= map.vertex_count(); ++v0) {
            for (VertexId w0 : rot.nbr[static_cast<std::size_t>(v0)]) {
                std::fill(label.begin(), label.end(), 0);
                queue.assign(1, v0);
                label[static_cast<std::size_t>(v0)] = 1;
                ref[static_cast<std::size_t>(v0)] = w0;
                int next = 2;
                code.clear();
                // -1: undecided, 0: equal so far, 1: already smaller than best
                int state = have ? 0 : 1;
                bool abort = false;
                auto emit = [&](int x) {
                    if (state == 0) {
                        int b = best_code[code.size()];
                        if (x < b) state = 1;
                        else if (x > b) abort = true;
                    }
                    code.push_back(x);
                };
                for (std::size_t qi = 0; qi < queue.size() && !abort; ++qi) {
                    const VertexId v = queue[qi];
                    const auto& nb = rot.nbr[static_cast<std::size_t>(v)];
                    const auto d = static_cast<int>(nb.size());
                    const int p = rot.pos[static_cast<std::size_t>(v)][static_cast<std::size_t>(ref[static_cast<std::size_t>(v)])];
                    for (int t = 0; t < d && !abort; ++t) {
                        VertexId u = nb[static_cast<std::size_t>(((p + dir * t) % d + d) % d)];
                        int& lu = label[static_cast<std::size_t>(u)];
                        if (lu == 0) {
                            lu = next++;
                            ref[static_cast<std::size_t>(u)] = v;
                            queue.push_back(u);
                        }
                        emit(lu);
                    }
                    if (!abort) emit(0);
                }
                if (abort) continue;
                Bijection labeling(n + 1, 0);
                for (std::size_t v = 1; v <= n; ++v) labeling[v] = label[v];
                if (state == 0 && options.include_marks) {
                    // code ties: the marks decide
                    auto mc = mark_code(map.marks(), labeling);
                    std::vector<int> cur(best.key.code.begin() + static_cast<long>(2 + best_code.size()),
                                         best.key.code.end());
                    if (!(mc < cur)) continue;
                } else if (state == 0) {
                    continue;
                }
                best_code = code;
                best.labeling = std::move(labeling);
                best.mirrored = dir < 0;
                best.key.code.assign({map.vertex_count(), map.face_count()});
                best.key.code.insert(best.key.code.end(), code.begin(), code.end());
                if (options.include_marks) {
                    auto mc = mark_code(map.marks(), best.labeling);
                    best.key.code.insert(best.key.code.end(), mc.begin(), mc.end());
                }
                have = true;
            }
        }
    }
    return best;
}

CanonicalKey canonical_key(const TorusMap& map, const KeyOptions& options) {
    return canonical_form(map, options).key;
}

TorusMap canonical_map(const TorusMap& map, const KeyOptions& options) {
    auto form = canonical_form(map, options);
    std::vector<Face> faces;
    for (const auto& f : map.faces()) {
        Face g;
        for (VertexId v : f) g.push_back(form.labeling[static_cast<std::size_t>(v)]);
        if (form.mirrored) std::reverse(g.begin(), g.end());
        std::rotate(g.begin(), std::min_element(g.begin(), g.end()), g.end());
        faces.push_back(std::move(g));
    }
    std::sort(faces.begin(), faces.end());
    std::vector<MarkedPath> marks;
    if (options.include_marks) {
        for (const auto& p : map.marks()) {
            MarkedPath q;
            for (VertexId v : p) q.push_back(form.labeling[static_cast<std::size_t>(v)]);
            MarkedPath r(q.rbegin(), q.rend());
            marks.push_back(std::min(q, r));
        }
        std::sort(marks.begin(), marks.end());
    }
    return TorusMap(map.vertex_count(), std::move(faces), std::move(marks));
}

ForeRear fore_rear_faces(const MarkedMap& m) {
    auto fore = m.map.dart(m.first, m.second);
    auto rear = m.map.dart(m.second, m.first);
    if (!fore || !rear) throw std::invalid_argument("marked pair is not an edge");
    return {fore->face, rear->face};
}

std::string_view to_string(MarkedIsomorphism kind) {
    switch (kind) {
    case MarkedIsomorphism::Simply: return "simply";
    case MarkedIsomorphism::Complexly: return "complexly";
    case MarkedIsomorphism::None: return "none";
    }
    return "?";
}

MarkedIsomorphism classify_marked_isomorphism(const MarkedMap& a, const MarkedMap& b) {
    if (!(invariant_signature(a.map) == invariant_signature(b.map))) return MarkedIsomorphism::None;
    const auto fa = fore_rear_faces(a);
    const auto fb = fore_rear_faces(b);
    const Rotation ra(a.map);
    const Rotation rb(b.map);
    bool complexly = false;
    for (int dir : {1, -1}) {
        auto f = extend_from_dart(a.map, ra, b.map, rb, a.first, a.second, b.first, b.second, dir);
        if (!f) continue;
        // image of the fore-face of a
        const auto& face = a.map.face(fa.fore);
        VertexId x = (*f)[static_cast<std::size_t>(face[0])];
        VertexId y = (*f)[static_cast<std::size_t>(face[1])];
        auto s = dir > 0 ? b.map.dart(x, y) : b.map.dart(y, x);
        if (!s) continue;
        if (s->face == fb.fore) return MarkedIsomorphism::Simply;
        if (s->face == fb.rear) complexly = true;
    }
    return complexly ? MarkedIsomorphism::Complexly : MarkedIsomorphism::None;
}

}  // namespace tpm
