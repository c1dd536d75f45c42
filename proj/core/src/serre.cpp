#include "reisner/serre.hpp"

#include <algorithm>
#include <limits>

namespace reisner {

namespace {

// Faces of link(F) grouped by cardinality, filtered out of the global level
// table: level t of the link is {G - F : G a face, G ⊇ F, |G| = |F| + t}.
std::vector<std::vector<Face>> link_levels(const std::vector<std::vector<Face>>& levels,
                                           const Face& f) {
    std::size_t fs = static_cast<std::size_t>(f.size());
    std::vector<std::vector<Face>> out(levels.size() - fs);
    for (std::size_t c = fs; c < levels.size(); ++c)
        for (const Face& g : levels[c])
            if (f.subset_of(g)) out[c - fs].push_back(g - f);
    while (out.size() > 1 && out.back().empty()) out.pop_back();
    return out;
}

int top_dimension(const std::vector<std::vector<Face>>& levels) {
    return static_cast<int>(levels.size()) - 2;
}

} // namespace

SerreCheck satisfies_serre(const SimplicialComplex& c, int r, const PrimeField& field,
                           const RankOptions& opt) {
    if (r < 1) throw ParameterError("satisfies_serre: r must be >= 1");
    SerreCheck result;
    if (r == 1) return result; // vacuous
    auto levels = faces_by_cardinality(c);
    for (const auto& level : levels) {
        for (const Face& f : level) {
            auto ll = link_levels(levels, f);
            int dim_lk = top_dimension(ll);
            int bound = std::min(r - 1, dim_lk);
            if (bound <= -1) continue; // nothing to check below index -1+1
            auto bv = betti_from_levels(ll, field, opt);
            int first = bv.first_nonzero();
            if (first < bound) {
                result.holds = false;
                result.witness = LinkWitness{f, first};
                return result;
            }
        }
    }
    return result;
}

SerreReport analyze_serre(const SimplicialComplex& c, const PrimeField& field,
                          const RankOptions& opt) {
    SerreReport report;
    report.characteristic = field.modulus();
    report.krull_dim = c.dim() + 1;
    if (c.is_void()) {
        // K itself: zero-dimensional and trivially well behaved
        report.level = 0;
        report.depth = 0;
        report.cohen_macaulay = true;
        return report;
    }

    auto levels = faces_by_cardinality(c);
    int d = report.krull_dim;
    int level_bound = d;
    int depth_best = std::numeric_limits<int>::max();
    std::vector<LinkWitness> failures; // (face, smallest failing index), sweep order

    for (const auto& level : levels) {
        for (const Face& f : level) {
            auto ll = link_levels(levels, f);
            int dim_lk = top_dimension(ll);
            auto bv = betti_from_levels(ll, field, opt);
            int first = bv.first_nonzero();
            if (first > bv.max_index()) continue; // exact link, no homology
            depth_best = std::min(depth_best, first + 1 + f.size());
            if (first < dim_lk) {
                failures.push_back(LinkWitness{f, first});
                level_bound = std::min(level_bound, first + 1);
            }
        }
    }

    // every facet contributes its cardinality via the homology of {∅},
    // so depth_best is always set
    report.depth = depth_best;
    report.level = level_bound;
    report.cohen_macaulay = (report.depth == report.krull_dim);
    if (report.level < d) {
        for (const auto& w : failures) {
            if (w.index <= report.level - 1) {
                report.witness = w;
                break;
            }
        }
    }
    return report;
}

int serre_level(const SimplicialComplex& c, const PrimeField& field,
                const RankOptions& opt) {
    return analyze_serre(c, field, opt).level;
}

int depth_from_links(const SimplicialComplex& c, const PrimeField& field,
                     const RankOptions& opt) {
    return analyze_serre(c, field, opt).depth;
}

bool is_cohen_macaulay(const SimplicialComplex& c, const PrimeField& field,
                       const RankOptions& opt) {
    return analyze_serre(c, field, opt).cohen_macaulay;
}

namespace {

// Connectivity of the 1-skeleton given face levels (levels[1] = vertices,
// levels[2] = edges).  The void complex and a single point count as connected.
bool levels_connected(const std::vector<std::vector<Face>>& levels) {
    if (levels.size() <= 1) return true; // only the empty face
    const auto& verts = levels[1];
    if (verts.size() <= 1) return true;
    if (levels.size() <= 2) return false; // several vertices, no edges
    std::vector<int> parent(verts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    std::vector<int> vertex_id(Face::max_vertices + 1, -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        vertex_id[static_cast<std::size_t>(verts[i].min_vertex())] = static_cast<int>(i);
    for (const Face& e : levels[2]) {
        int u = vertex_id[static_cast<std::size_t>(e.min_vertex())];
        int v = vertex_id[static_cast<std::size_t>(e.max_vertex())];
        parent[static_cast<std::size_t>(find(u))] = find(v);
    }
    int root = find(0);
    for (std::size_t i = 1; i < verts.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

} // namespace

bool is_normal_pseudomanifold(const SimplicialComplex& c) {
    if (!is_pseudomanifold(c)) return false;
    int d = c.dim() + 1;
    if (d <= 2) return true; // links of codim >= 2 are empty-face only or none
    auto levels = faces_by_cardinality(c);
    for (int card = 0; card <= d - 2; ++card) {
        for (const Face& f : levels[static_cast<std::size_t>(card)]) {
            if (!levels_connected(link_levels(levels, f))) return false;
        }
    }
    return true;
}

bool links_are_homology_spheres(const SimplicialComplex& c, const PrimeField& field,
                                const RankOptions& opt) {
    auto levels = faces_by_cardinality(c);
    if (levels.size() <= 1) return true; // no vertices
    for (const Face& v : levels[1]) {
        auto ll = link_levels(levels, v);
        int dim_lk = top_dimension(ll);
        auto bv = betti_from_levels(ll, field, opt);
        for (int i = -1; i <= bv.max_index(); ++i) {
            std::int64_t want = (i == dim_lk) ? 1 : 0;
            if (bv.at(i) != want) return false;
        }
    }
    return true;
}

} // namespace reisner
