#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reisner/face.hpp"

namespace reisner {

/// How to treat vertex ids that do not form a contiguous range 1..n.
enum class VertexPolicy {
    lenient, ///< renumber the ids that actually occur to 1..n, keeping order
    strict,  ///< reject gaps / undeclared isolated vertices
};

/// A finite simplicial complex given by its facets (inclusion-maximal faces).
/// The vertex set is always the union of the facets; the complex {∅} whose
/// only face is the empty set is representable and has dimension -1.
class SimplicialComplex {
public:
    /// Normalizing constructor: drops faces contained in another, sorts, and
    /// computes the vertex set.  Throws EmptyInputError when `faces` is empty.
    static SimplicialComplex from_facets(std::vector<Face> faces);

    /// The complex {∅}: one face, no vertices, dimension -1.
    static SimplicialComplex void_complex();

    const std::vector<Face>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    /// Union of the facets.
    const Face& vertex_set() const { return vertices_; }
    int vertex_count() const { return vertices_.size(); }
    std::vector<int> vertex_list() const { return vertices_.vertices(); }

    /// max |F| - 1 over facets; -1 for the void complex.
    int dim() const { return dim_; }

    bool is_void() const { return dim_ == -1; }

    /// Face membership: F is contained in some facet.
    bool contains(const Face& f) const;

    bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }

private:
    SimplicialComplex() = default;

    std::vector<Face> facets_;
    Face vertices_;
    int dim_ = -1;
};

/// Build a complex from raw facet lists.  Lenient policy renumbers
/// non-contiguous ids to 1..n preserving order; strict policy throws
/// IsolatedVertexError when ids 1..n (n declared or max id) are not all
/// covered.  Throws EmptyInputError / ParameterError on malformed input.
SimplicialComplex build_complex(const std::vector<std::vector<int>>& facet_lists,
                                VertexPolicy policy = VertexPolicy::lenient,
                                std::optional<int> declared_vertex_count = std::nullopt);

/// Face counts by cardinality: counts[k] = number of faces with k vertices,
/// so counts[0] = 1 accounts for the empty face.
struct FVector {
    std::vector<std::int64_t> counts;

    /// f_k = number of k-dimensional faces; f(-1) = 1.
    std::int64_t f(int k) const {
        int c = k + 1;
        if (c < 0 || c >= static_cast<int>(counts.size())) return 0;
        return counts[static_cast<std::size_t>(c)];
    }

    bool operator==(const FVector&) const = default;
};

/// Coefficients h_0..h_d of the numerator of the generating function of the
/// face counts (see h_vector below for the transform).
struct HVector {
    std::vector<std::int64_t> h;

    std::int64_t at(int k) const {
        if (k < 0 || k >= static_cast<int>(h.size())) return 0;
        return h[static_cast<std::size_t>(k)];
    }

    bool operator==(const HVector&) const = default;
};

/// All faces grouped by cardinality; levels[c] is sorted lexicographically.
/// levels[0] = {∅}; levels.size() = dim + 2.
std::vector<std::vector<Face>> faces_by_cardinality(const SimplicialComplex& c);

FVector f_vector(const SimplicialComplex& c);

/// Transform sum_k f_{k-1} (x-1)^{d-k} = sum_k h_k x^{d-k}; closed form
/// h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}.  Requires d >= dim+1.
HVector h_vector(const FVector& f, int d);
HVector h_vector(const SimplicialComplex& c);

/// Faces G with F ∪ G a face and F ∩ G = ∅.  Throws NotAFaceError when F is
/// not a face.  link(c, ∅) == c; the link of a facet is the void complex.
SimplicialComplex link(const SimplicialComplex& c, const Face& f);

/// Faces contained in w (w need not be a face).  The result is the void
/// complex when no vertex of w occurs in c.
SimplicialComplex restriction(const SimplicialComplex& c, const Face& w);

bool is_pure(const SimplicialComplex& c);

/// Facet graph connectivity: consecutive facets must share a face of
/// cardinality (dim) in a walk between any two facets.
bool is_strongly_connected(const SimplicialComplex& c);

/// Pure + strongly connected + every ridge (face of cardinality dim) lies in
/// exactly two facets.
bool is_pseudomanifold(const SimplicialComplex& c);

/// Join with two fresh apex vertices (max id + 1, max id + 2).
SimplicialComplex suspension(const SimplicialComplex& c);

/// Join with one fresh apex vertex (max id + 1).
SimplicialComplex cone(const SimplicialComplex& c);

/// Overflow-checked binomial coefficient; throws ParameterError on overflow,
/// returns 0 for k < 0 or k > n.
std::int64_t binomial(int n, int k);

} // namespace reisner
