#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "reisner/json_io.hpp"
#include "reisner/monomial.hpp"
#include "reisner/serre.hpp"

namespace reisner {

/// A bundled example with expected facts.  `source` records how each value
/// was established: "reference" = printed in the literature this models,
/// "oracle" = recomputed independently by the test suite, "definition" =
/// immediate consequence of the construction.
struct ExpectedFact {
    std::string what;    // quantity name, e.g. "serre_level", "h_vector"
    std::uint32_t p = 0; // field characteristic; 0 = field independent
    Json args;           // extra arguments, e.g. [i, j] for "betti_entry"
    Json value;
    std::string source;
};

struct Fixture {
    std::string name;
    std::string summary;
    SimplicialComplex complex;
    std::vector<ExpectedFact> expected;
};

Fixture fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// Outcome of one checker on one instance.
struct CheckResult {
    std::string check;
    std::uint32_t p = 0; // 0 when field independent
    bool pass = true;
    Json details;
};

/// i*h_i + (d-i+1)*h_{i-1} = sum over vertices of h_{i-1}(link), i = 1..d.
/// Purely enumerative; throws NotPureError on non-pure input.
CheckResult check_swartz(const SimplicialComplex& c);

/// With r = serre_level(c, p): h_k >= 0 for k = 0..r.
CheckResult check_h_nonnegativity(const SimplicialComplex& c, const PrimeField& field);

/// With r = serre_level: sum_{k=r..d} h_k >= 0 and facet count >= sum_{k<r} h_k.
CheckResult check_tail_sum(const SimplicialComplex& c, const PrimeField& field);

/// With r = serre_level: if h_t = 0 for some t <= r then h_k = 0 for all
/// k >= t and the complex is Cohen-Macaulay over the field.
CheckResult check_vanishing_rigidity(const SimplicialComplex& c, const PrimeField& field);

/// Depth from the link sweep equals num_vars - projective dimension of the
/// full Betti table.
CheckResult check_depth_cross(const SimplicialComplex& c, const PrimeField& field);

/// (h_0..h_r) passes the Macaulay growth test (is an O-sequence).
CheckResult check_m_vector(const SimplicialComplex& c, const PrimeField& field);

/// Lex-segment comparison: with r = level of the polarized quotient and
/// codim c = n - dim, the Betti numbers of S/I in columns j - i <= r - 1 are
/// bounded by those of the lex ideal in c variables realizing h_0..h_r.
/// An O-sequence violation is reported as a failing result, not an error.
CheckResult check_lex_bound(const MonomialIdeal& ideal, const PrimeField& field);

/// Power-ideal comparison in row j - i = k - 1 against all monomials of
/// degree k in codim-many variables, plus the equality analysis: equality at
/// one homological index in [1, codim] forces equality everywhere and is
/// equivalent to Cohen-Macaulay with a k-linear resolution.
CheckResult check_power_bound(const MonomialIdeal& ideal, const PrimeField& field,
                              int k);

/// Validate every expected fact of a fixture.
CheckResult check_fixture_facts(const Fixture& fx);

/// m distinct cardinality-d subsets of {1..n} covering every vertex.
/// Deterministic in the seed; rejection-samples coverage and throws
/// ParameterError when the parameters make coverage (near) impossible.
SimplicialComplex random_pure_complex(std::uint64_t seed, int n, int d, int m);

/// `count` random exponent vectors with entries in [0, max_deg], zero vectors
/// rejected; the result keeps only minimal generators.
MonomialIdeal random_monomial_ideal(std::uint64_t seed, int n, int max_deg, int count);

/// One verification instance as NDJSON-able record.
struct VerifyOptions {
    std::uint64_t seed = 1;
    int count = 100;
    int max_n = 8;
    int max_d = 3;
    int max_m = 0; // 0 = derive from n and d
    std::vector<std::uint32_t> primes{2, 3};
    std::vector<std::string> checks; // empty = default set
    bool fixtures_only = false;
    bool with_fixtures = true;
    int jobs = 1;
};

struct VerifySummary {
    int instances = 0;
    int failures = 0;
};

/// Names accepted in VerifyOptions::checks.
const std::vector<std::string>& default_check_names();
const std::vector<std::string>& all_check_names();

/// Run fixtures and/or seeded random instances; one JSON object per line on
/// `out`, ordered by instance id regardless of parallelism.
VerifySummary run_verification(const VerifyOptions& opt, std::ostream& out);

struct SearchOptions {
    std::uint64_t seed = 1;
    int count = 100;
    int max_n = 8;
    int max_d = 3;
    int max_m = 0;
    std::vector<std::uint32_t> primes{2, 3};
    bool exhaustive = false; // scan all pure complexes for fixed n, d
    int n = 5;
    int d = 3;
    int jobs = 1;
};

struct SearchSummary {
    int instances = 0;
    int findings = 0;
};

/// Hunt for complexes whose h-vector turns negative right above their level:
/// emits one JSON line per finding (complex, level, h).  Nothing is asserted.
SearchSummary run_search(const SearchOptions& opt, std::ostream& out);

} // namespace reisner
