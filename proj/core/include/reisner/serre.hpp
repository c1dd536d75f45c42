#pragma once

#include <optional>

#include "reisner/homology.hpp"

namespace reisner {

/// A face F and homology index i certifying that a depth-style link condition
/// fails: the link of F has nonvanishing reduced homology in dimension i
/// strictly below what the condition demands.
struct LinkWitness {
    Face face;
    int index = 0;

    bool operator==(const LinkWitness&) const = default;
};

/// Outcome of testing the r-th link vanishing condition: every face F must
/// have beta_i(link F) = 0 for all i < min(r - 1, dim link F).
struct SerreCheck {
    bool holds = true;
    std::optional<LinkWitness> witness; // first failure in sweep order
};

/// Check the level-r link condition over the given field.  r >= 1; r = 1 is
/// vacuous.  The witness is the first failing (face, index) when faces are
/// ordered by cardinality then lex, and indices increasingly.
SerreCheck satisfies_serre(const SimplicialComplex& c, int r, const PrimeField& field,
                           const RankOptions& opt = {});

/// Full per-field analysis produced by one sweep over all links.
struct SerreReport {
    std::uint32_t characteristic = 0;
    int level = 0;       // largest r in [1, dim+1] passing the link condition,
                         // capped at dim+1; 0 for the void complex
    int depth = 0;       // min over faces of (first nonzero link index + 1 + |F|)
    int krull_dim = 0;   // dim + 1
    bool cohen_macaulay = false; // depth == krull_dim, equivalently level == dim+1
    std::optional<LinkWitness> witness; // obstruction to level + 1, if any

    bool operator==(const SerreReport&) const = default;
};

SerreReport analyze_serre(const SimplicialComplex& c, const PrimeField& field,
                          const RankOptions& opt = {});

/// Largest r such that the link condition holds, capped at dim+1.
int serre_level(const SimplicialComplex& c, const PrimeField& field,
                const RankOptions& opt = {});

/// Depth of the face ring from link homology:
/// min { i + 1 + |F| : F a face, beta_i(link F) != 0 }, or krull dim when no
/// link has homology below its top dimension.
int depth_from_links(const SimplicialComplex& c, const PrimeField& field,
                     const RankOptions& opt = {});

bool is_cohen_macaulay(const SimplicialComplex& c, const PrimeField& field,
                       const RankOptions& opt = {});

/// Pseudomanifold all of whose links of faces of codimension >= 2 are
/// connected.  Purely combinatorial, no field involved.
bool is_normal_pseudomanifold(const SimplicialComplex& c);

/// Every vertex link has the reduced homology of a sphere of its dimension
/// over the given field.
bool links_are_homology_spheres(const SimplicialComplex& c, const PrimeField& field,
                                const RankOptions& opt = {});

} // namespace reisner
