#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "reisner/betti.hpp"
#include "reisner/complex.hpp"

namespace reisner {

/// Exponent vector of a monomial; index k holds the exponent of variable k+1.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);

/// -1, 0, +1 as a is lex smaller / equal / larger than b (same length;
/// x1^2 > x1 x2 > x2^2 in two variables).
int lex_compare(const Exponents& a, const Exponents& b);

/// Largest index (1-based) with a positive exponent; 0 for the unit.
int max_var(const Exponents& e);

/// A monomial ideal given by its unique minimal generators.  The zero ideal
/// (no generators) is allowed; a unit generator is not.
class MonomialIdeal {
public:
    /// Validates, removes divisible generators, sorts by degree then lex
    /// descending.  Throws UnitIdealError on an all-zero exponent vector.
    static MonomialIdeal from_generators(int num_vars, std::vector<Exponents> gens);

    static MonomialIdeal zero(int num_vars) { return from_generators(num_vars, {}); }

    int num_vars() const { return num_vars_; }
    const std::vector<Exponents>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_squarefree() const;

    /// Membership of a monomial: divisible by some generator.
    bool contains(const Exponents& m) const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    MonomialIdeal() = default;
    int num_vars_ = 0;
    std::vector<Exponents> gens_;
};

/// Squarefree ideal of the minimal nonfaces; variables follow the sorted
/// vertex list of the complex.
MonomialIdeal nonface_ideal(const SimplicialComplex& c);

/// The complex whose faces are the subsets of {1..num_vars} containing no
/// generator support.  Variables that are themselves generators belong to no
/// face and are returned in `excluded_vertices`; the complex lives on the
/// remaining labels.  Throws ParameterError for non-squarefree input.
struct SquarefreeComplex {
    SimplicialComplex complex;
    std::vector<int> excluded_vertices;
};
SquarefreeComplex complex_of_squarefree(const MonomialIdeal& ideal);

/// Replace every power x_k^t by a product of distinct grid variables
/// (k, 1..t).  Grid variable (k, t) gets the flat id (k-1)*max_exponent + t.
/// The quotient by the polarized ideal has the same graded Betti numbers as
/// the original and its depth exceeds it by num_vars*(max_exponent-1).
struct PolarizationResult {
    MonomialIdeal polarized;
    SimplicialComplex complex;            // face complex of the polarized ideal
    std::vector<int> excluded_vertices;   // grid ids of degree-one generators
    int source_vars = 0;
    int max_exponent = 1;
    int depth_shift = 0;

    int grid_vertex(int k, int t) const { return (k - 1) * max_exponent + t; }
    std::pair<int, int> grid_cell(int id) const {
        return {(id - 1) / max_exponent + 1, (id - 1) % max_exponent + 1};
    }
};
PolarizationResult polarize(const MonomialIdeal& ideal);

/// Brute-force Hilbert function of S/ideal: counts standard monomials degree
/// by degree.  Intended as an oracle for modest sizes; throws TooLargeError
/// when the lattice walk would exceed an internal budget.
std::vector<std::int64_t> hilbert_function(const MonomialIdeal& ideal, int up_to);

/// h-vector (numerator of the Hilbert series over (1-t)^dim, trailing zeros
/// stripped) and Krull dimension of S/ideal, computed through polarization.
struct HilbertSummary {
    std::vector<std::int64_t> h;
    int krull_dim = 0;

    bool operator==(const HilbertSummary&) const = default;
};
HilbertSummary algebraic_h_vector(const MonomialIdeal& ideal);

/// Krull dimension of S/ideal: num_vars minus the smallest transversal of the
/// generator supports.
int krull_dimension(const MonomialIdeal& ideal);

/// Graded Betti numbers of S/ideal over the given field, via polarization and
/// induced-subcomplex homology.  Degree caps follow BettiOptions.
BettiTable monomial_betti(const MonomialIdeal& ideal, const PrimeField& field,
                          const BettiOptions& opt = {});

/// Largest r such that the polarized face complex passes the level-r link
/// condition; agrees with the ring-theoretic level of S/ideal.
int monomial_serre_level(const MonomialIdeal& ideal, const PrimeField& field,
                         const RankOptions& opt = {});

/// The lex-segment ideal realizing the given Hilbert function values
/// (missing values are zero).  Throws NotOSequenceError when the values
/// violate the Macaulay growth bound, with the offending degree attached.
/// Generators are collected for degrees <= up_to.
struct LexSegmentIdeal {
    MonomialIdeal ideal;
    std::vector<std::int64_t> target; // requested values, padded to up_to
    int up_to = 0;
};
LexSegmentIdeal lex_segment_ideal(const std::vector<std::int64_t>& hilbert_values,
                                  int num_vars, int up_to);

/// In every degree q <= up_to the monomials of the ideal form a lex-descending
/// prefix of the degree-q monomials.
bool is_lex_segment(const MonomialIdeal& ideal, int up_to);

/// Stability: for every generator u and variable j < max_var(u), the exchange
/// x_j * u / x_max(u) stays in the ideal.
bool is_stable(const MonomialIdeal& ideal);

/// Closed-form graded Betti numbers of S/ideal for a stable ideal:
/// beta_{i, i+k-1} += C(max_var(u)-1, i-1) over generators u of degree k.
/// Field independent (characteristic 0 in the table).  Throws NotStableError.
BettiTable stable_betti(const MonomialIdeal& ideal);

/// stable_betti of the ideal of all monomials of the given degree.
BettiTable power_ideal_betti(int num_vars, int degree);

/// All monomials of the given degree in lex-descending order.  Throws
/// TooLargeError beyond an internal budget.
std::vector<Exponents> monomials_of_degree(int num_vars, int degree);

} // namespace reisner
