#include "reisner/homology.hpp"

#include <unordered_map>

namespace reisner {

namespace {

IntTriplets boundary_triplets(const std::vector<Face>& domain,
                              const std::vector<Face>& codomain) {
    IntTriplets t;
    t.rows = static_cast<int>(codomain.size());
    t.cols = static_cast<int>(domain.size());
    if (t.rows == 0 || t.cols == 0) return t;
    std::unordered_map<Face, int, FaceHash> row_of;
    row_of.reserve(codomain.size() * 2);
    for (std::size_t i = 0; i < codomain.size(); ++i)
        row_of.emplace(codomain[i], static_cast<int>(i));
    t.entries.reserve(domain.size() * static_cast<std::size_t>(domain[0].size()));
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const Face& f = domain[col];
        int j = 0;
        for (int v = f.min_vertex(); v != 0; v = f.next_vertex(v), ++j) {
            auto it = row_of.find(f.without(v));
            // every sub-face is present because levels are downward closed
            t.entries.push_back({it->second, static_cast<int>(col), (j % 2) ? -1 : 1});
        }
    }
    return t;
}

} // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int i) {
    if (i < -1 || i > c.dim() + 1)
        throw ParameterError("boundary_matrix: index outside [-1, dim+1]");
    auto levels = faces_by_cardinality(c);
    BoundaryMatrix b;
    b.index = i;
    if (i + 1 >= 0 && i + 1 < static_cast<int>(levels.size()))
        b.domain = levels[static_cast<std::size_t>(i + 1)];
    if (i >= 0 && i < static_cast<int>(levels.size()))
        b.codomain = levels[static_cast<std::size_t>(i)];
    b.matrix = boundary_triplets(b.domain, b.codomain);
    return b;
}

ReducedBettiVector betti_from_levels(const std::vector<std::vector<Face>>& levels,
                                     const PrimeField& field, const RankOptions& opt) {
    std::size_t top = levels.size(); // levels[c] for c in [0, top)
    std::vector<int> rank_down(top + 1, 0); // rank of map card c -> card c-1
    for (std::size_t c = 1; c < top; ++c) {
        if (levels[c].empty() || levels[c - 1].empty()) continue;
        rank_down[c] = rank_mod_p(boundary_triplets(levels[c], levels[c - 1]), field, opt);
    }
    std::vector<std::int64_t> by_card(top, 0);
    for (std::size_t c = 0; c < top; ++c) {
        by_card[c] = static_cast<std::int64_t>(levels[c].size()) - rank_down[c] -
                     rank_down[c + 1];
    }
    return ReducedBettiVector(std::move(by_card));
}

ReducedBettiVector reduced_betti(const SimplicialComplex& c, const PrimeField& field,
                                 const RankOptions& opt) {
    return betti_from_levels(faces_by_cardinality(c), field, opt);
}

std::int64_t reduced_euler_characteristic(const FVector& f) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < f.counts.size(); ++c)
        acc += (c % 2) ? f.counts[c] : -f.counts[c];
    return acc;
}

} // namespace reisner
