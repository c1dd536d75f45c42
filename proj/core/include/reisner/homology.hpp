#pragma once

#include <cstdint>
#include <vector>

#include "reisner/complex.hpp"
#include "reisner/linalg.hpp"

namespace reisner {

/// Signed boundary map from i-dimensional to (i-1)-dimensional faces of the
/// augmented chain complex.  Row/column order follows the lex order of the
/// face lists; the coefficient of F minus its j-th smallest vertex is (-1)^j.
/// Index -1 (empty domain side) and dim+1 are allowed and give zero maps.
struct BoundaryMatrix {
    int index = 0;
    IntTriplets matrix;
    std::vector<Face> domain;   // faces of cardinality index+1 (columns)
    std::vector<Face> codomain; // faces of cardinality index (rows)
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int i);

/// Reduced homology ranks over one prime field, indices -1 .. max_index().
/// The void complex has betti(-1) = 1 and nothing else; any complex with a
/// vertex has betti(-1) = 0.
class ReducedBettiVector {
public:
    ReducedBettiVector() = default;
    explicit ReducedBettiVector(std::vector<std::int64_t> by_card)
        : b_(std::move(by_card)) {}

    /// beta_i for -1 <= i; zero outside the stored range.
    std::int64_t at(int i) const {
        int c = i + 1;
        if (c < 0 || c >= static_cast<int>(b_.size())) return 0;
        return b_[static_cast<std::size_t>(c)];
    }

    int max_index() const { return static_cast<int>(b_.size()) - 2; }

    bool all_zero() const {
        for (auto v : b_)
            if (v) return false;
        return true;
    }

    /// Smallest i >= -1 with beta_i != 0, or max_index()+1 when all vanish.
    int first_nonzero() const {
        for (int i = -1; i <= max_index(); ++i)
            if (at(i)) return i;
        return max_index() + 1;
    }

    bool operator==(const ReducedBettiVector&) const = default;

private:
    std::vector<std::int64_t> b_; // b_[c] = beta of dimension c-1
};

ReducedBettiVector reduced_betti(const SimplicialComplex& c, const PrimeField& field,
                                 const RankOptions& opt = {});

/// Same computation starting from precomputed face levels (levels[c] = faces
/// of cardinality c; levels[0] must hold exactly the empty face).  Face order
/// within a level is irrelevant.  This is the hot path shared by the link
/// sweeps and induced-subcomplex scans, which filter one global face
/// enumeration instead of rebuilding closures.
ReducedBettiVector betti_from_levels(const std::vector<std::vector<Face>>& levels,
                                     const PrimeField& field,
                                     const RankOptions& opt = {});

/// Euler characteristic from face counts: sum (-1)^i f_i, including f_{-1}.
/// Always equals the alternating sum of the reduced betti numbers.
std::int64_t reduced_euler_characteristic(const FVector& f);

} // namespace reisner
