#pragma once

#include <random>
#include <vector>

#include "tpm/catalog.hpp"
#include "tpm/generation.hpp"

namespace fixture {

inline tpm::TorusMap catalog(int n) { return tpm::catalog::entry(n).map(); }

/// Catalog map `n` with a wheel around a new vertex inside face 0, then an
/// edge between the interiors of the first two spokes. That edge lies
/// strictly inside the disk bounded by the old face.
inline tpm::TorusMap wheel_gadget(int n = 13) {
    auto m = catalog(n);
    auto faces = m.faces();
    const auto rim = faces[0];
    const int hub = m.vertex_count() + 1;
    for (std::size_t i = 0; i < rim.size(); ++i) {
        tpm::Face t{rim[i], rim[(i + 1) % rim.size()], hub};
        if (i == 0) {
            faces[0] = t;
        } else {
            faces.push_back(t);
        }
    }
    tpm::TorusMap wheel(hub, faces);
    return tpm::add_edge(wheel, tpm::ChordSpec{0, 3, 5});
}

/// Adds `steps` random valid chords.
inline tpm::TorusMap random_descendant(tpm::TorusMap m, int steps, std::mt19937& rng) {
    for (int i = 0; i < steps; ++i) {
        auto chords = tpm::enumerate_edge_additions(m);
        if (chords.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, chords.size() - 1);
        m = tpm::add_edge(m, chords[pick(rng)]);
    }
    return m;
}

}  // namespace fixture
