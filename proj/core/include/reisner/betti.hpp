#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "reisner/homology.hpp"

namespace reisner {

/// Graded Betti numbers beta_{i,j} of a quotient ring, stored sparsely with
/// deterministic (i, j) iteration order.  `partial` marks tables computed
/// only up to a degree cap; quantities needing the whole table then throw
/// PartialTableError.
class BettiTable {
public:
    std::uint32_t characteristic = 0; // 0 when the table is field independent
    int num_vars = 0;
    int krull_dim = 0;
    /// Subtracted from num_vars - pd when reporting depth; nonzero for tables
    /// of rings presented over an enlarged variable grid.
    int depth_shift = 0;
    bool partial = false;
    int degree_cap = -1; // populated columns are j <= degree_cap when partial

    void add(int i, int j, std::int64_t v) {
        if (v == 0) return;
        auto key = std::make_pair(i, j);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            entries_.emplace(key, v);
        } else {
            it->second += v;
            if (it->second == 0) entries_.erase(it);
        }
    }

    std::int64_t at(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<std::pair<int, int>, std::int64_t>& entries() const {
        return entries_;
    }

    bool empty() const { return entries_.empty(); }

    /// Largest i with a nonzero entry.  Throws PartialTableError when partial.
    int projective_dimension() const;

    /// Largest j - i over nonzero entries.  Throws PartialTableError when
    /// partial.
    int regularity() const;

    /// num_vars - projective_dimension() - depth_shift.
    int depth() const;

private:
    std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// Inclusion-minimal sets of vertices that are not faces.  All have
/// cardinality between 2 and dim+2.  Sorted lexicographically.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c);

struct BettiOptions {
    /// Hard cap on the vertex count for a full table (2^n subsets are
    /// scanned); beyond it a degree cap is required.
    int max_vertices = 24;
    std::optional<int> degree_cap;
    RankOptions rank;
};

/// Graded Betti numbers of the face ring from induced-subcomplex homology:
/// beta_{i,j} = sum over j-subsets W of the vertex set of
/// beta~_{j-i-1}(restriction to W).  Throws TooLargeError when the vertex
/// count exceeds opt.max_vertices and no degree cap is given.
BettiTable face_ring_betti(const SimplicialComplex& c, const PrimeField& field,
                           const BettiOptions& opt = {});

/// Numerator coefficients of the Hilbert series: coeff[j] of the K-polynomial
/// sum_{i,j} (-1)^i beta_{i,j} t^j.  Requires a complete table.
struct KPolynomial {
    std::vector<std::int64_t> coeff;

    bool operator==(const KPolynomial&) const = default;
};

KPolynomial k_polynomial(const BettiTable& b);

/// Hilbert function values dim_K (module)_q for q = 0..up_to, expanding
/// K-polynomial / (1-t)^num_vars.
std::vector<std::int64_t> hilbert_from_k_polynomial(const KPolynomial& k, int num_vars,
                                                    int up_to);

} // namespace reisner
