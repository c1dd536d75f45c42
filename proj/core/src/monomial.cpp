#include "reisner/monomial.hpp"

#include <algorithm>
#include <string>

namespace reisner {

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

int lex_compare(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int max_var(const Exponents& e) {
    for (int i = static_cast<int>(e.size()); i >= 1; --i)
        if (e[static_cast<std::size_t>(i - 1)] > 0) return i;
    return 0;
}

namespace {

std::string monomial_str(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace

MonomialIdeal MonomialIdeal::from_generators(int num_vars, std::vector<Exponents> gens) {
    if (num_vars < 1 || num_vars > Face::max_vertices)
        throw ParameterError("num_vars must be in [1, " +
                             std::to_string(Face::max_vertices) + "]");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != num_vars)
            throw ParameterError("generator arity differs from num_vars");
        bool unit = true;
        for (int e : g) {
            if (e < 0) throw ParameterError("negative exponent");
            if (e > 0) unit = false;
        }
        if (unit) throw UnitIdealError("the unit monomial generates everything");
    }
    // drop generators divisible by another (keep the divisor)
    std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return lex_compare(a, b) > 0;
    });
    std::vector<Exponents> minimal;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& m : minimal) {
            if (divides(m, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    MonomialIdeal ideal;
    ideal.num_vars_ = num_vars;
    ideal.gens_ = std::move(minimal);
    return ideal;
}

bool MonomialIdeal::is_squarefree() const {
    for (const auto& g : gens_)
        for (int e : g)
            if (e > 1) return false;
    return true;
}

bool MonomialIdeal::contains(const Exponents& m) const {
    for (const auto& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

MonomialIdeal nonface_ideal(const SimplicialComplex& c) {
    std::vector<int> verts = c.vertex_list();
    if (verts.empty())
        return MonomialIdeal::from_generators(1, {{1}}); // K as K[x]/(x)
    std::vector<int> pos(Face::max_vertices + 1, -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        pos[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    std::vector<Exponents> gens;
    for (const Face& f : minimal_nonfaces(c)) {
        Exponents e(verts.size(), 0);
        for (int v = f.min_vertex(); v != 0; v = f.next_vertex(v))
            e[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = 1;
        gens.push_back(std::move(e));
    }
    return MonomialIdeal::from_generators(static_cast<int>(verts.size()),
                                          std::move(gens));
}

namespace {

// Keep the inclusion-minimal sets of a family.
std::vector<Face> keep_minimal(std::vector<Face> sets) {
    std::sort(sets.begin(), sets.end(),
              [](const Face& a, const Face& b) { return a.size() < b.size(); });
    std::vector<Face> out;
    for (const Face& s : sets) {
        bool covered = false;
        for (const Face& t : out) {
            if (t.subset_of(s)) {
                covered = true;
                break;
            }
        }
        if (!covered) out.push_back(s);
    }
    return out;
}

// All inclusion-minimal transversals (hitting sets) of the edge family.
std::vector<Face> minimal_transversals(const std::vector<Face>& edges) {
    std::vector<Face> tr{Face{}};
    for (const Face& e : edges) {
        std::vector<Face> next;
        next.reserve(tr.size());
        for (const Face& t : tr) {
            if (t.intersects(e)) {
                next.push_back(t);
                continue;
            }
            for (int v = e.min_vertex(); v != 0; v = e.next_vertex(v))
                next.push_back(t.with(v));
        }
        if (next.size() > 2'000'000)
            throw TooLargeError("transversal enumeration exceeds the budget");
        tr = keep_minimal(std::move(next));
    }
    return tr;
}

} // namespace

SquarefreeComplex complex_of_squarefree(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw ParameterError("complex_of_squarefree: ideal is not squarefree");
    int n = ideal.num_vars();
    Face universe = Face::full(n);
    Face excluded;
    std::vector<Face> edges;
    for (const auto& g : ideal.generators()) {
        Face support;
        for (int i = 0; i < n; ++i)
            if (g[static_cast<std::size_t>(i)] > 0) support.set(i + 1);
        if (support.size() == 1) {
            excluded = excluded | support;
        } else {
            edges.push_back(support);
        }
    }
    Face ground = universe - excluded;
    std::vector<Face> facets;
    for (const Face& t : minimal_transversals(edges)) facets.push_back(ground - t);
    if (facets.empty()) facets.push_back(ground);
    SquarefreeComplex out;
    out.complex = SimplicialComplex::from_facets(std::move(facets));
    out.excluded_vertices = excluded.vertices();
    return out;
}

PolarizationResult polarize(const MonomialIdeal& ideal) {
    int n = ideal.num_vars();
    int max_e = 1;
    for (const auto& g : ideal.generators())
        for (int e : g) max_e = std::max(max_e, e);
    if (n * max_e > Face::max_vertices)
        throw TooLargeError("polarize: grid " + std::to_string(n) + "x" +
                            std::to_string(max_e) + " exceeds " +
                            std::to_string(Face::max_vertices) + " vertices");

    PolarizationResult out;
    out.source_vars = n;
    out.max_exponent = max_e;
    out.depth_shift = n * (max_e - 1);

    std::vector<Exponents> pol_gens;
    for (const auto& g : ideal.generators()) {
        Exponents p(static_cast<std::size_t>(n) * static_cast<std::size_t>(max_e), 0);
        for (int k = 1; k <= n; ++k)
            for (int t = 1; t <= g[static_cast<std::size_t>(k - 1)]; ++t)
                p[static_cast<std::size_t>(out.grid_vertex(k, t) - 1)] = 1;
        pol_gens.push_back(std::move(p));
    }
    out.polarized = MonomialIdeal::from_generators(n * max_e, std::move(pol_gens));
    auto sq = complex_of_squarefree(out.polarized);
    out.complex = std::move(sq.complex);
    out.excluded_vertices = std::move(sq.excluded_vertices);
    return out;
}

std::vector<std::int64_t> hilbert_function(const MonomialIdeal& ideal, int up_to) {
    if (up_to < 0) throw ParameterError("hilbert_function: negative degree");
    int n = ideal.num_vars();
    std::int64_t budget;
    try {
        budget = binomial(up_to + n, n);
    } catch (const ParameterError&) {
        throw TooLargeError("hilbert_function: lattice too large");
    }
    if (budget > 20'000'000)
        throw TooLargeError("hilbert_function: lattice walk over budget");

    std::vector<std::int64_t> h(static_cast<std::size_t>(up_to) + 1, 0);
    Exponents m(static_cast<std::size_t>(n), 0);
    // depth-first over exponent vectors of total degree <= up_to
    auto walk = [&](auto&& self, int var, int used) -> void {
        if (var == n) {
            if (!ideal.contains(m)) ++h[static_cast<std::size_t>(used)];
            return;
        }
        for (int e = 0; e + used <= up_to; ++e) {
            m[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, used + e);
        }
        m[static_cast<std::size_t>(var)] = 0;
    };
    walk(walk, 0, 0);
    return h;
}

int krull_dimension(const MonomialIdeal& ideal) {
    std::vector<Face> supports;
    for (const auto& g : ideal.generators()) {
        Face s;
        for (int i = 0; i < ideal.num_vars(); ++i)
            if (g[static_cast<std::size_t>(i)] > 0) s.set(i + 1);
        supports.push_back(s);
    }
    int best = ideal.num_vars() + 1;
    for (const Face& t : minimal_transversals(supports))
        best = std::min(best, t.size());
    if (best > ideal.num_vars()) best = 0; // no transversal smaller than ground
    return ideal.num_vars() - best;
}

HilbertSummary algebraic_h_vector(const MonomialIdeal& ideal) {
    auto pol = polarize(ideal);
    HVector hv = h_vector(pol.complex);
    HilbertSummary out;
    out.h = hv.h;
    while (out.h.size() > 1 && out.h.back() == 0) out.h.pop_back();
    out.krull_dim = pol.complex.dim() + 1 - pol.depth_shift;
    return out;
}

BettiTable monomial_betti(const MonomialIdeal& ideal, const PrimeField& field,
                          const BettiOptions& opt) {
    auto pol = polarize(ideal);
    BettiTable inner = face_ring_betti(pol.complex, field, opt);
    int e = static_cast<int>(pol.excluded_vertices.size());
    BettiTable table;
    if (e == 0) {
        table = std::move(inner);
    } else {
        // quotienting by e unused variables tensors a Koszul complex onto the
        // resolution: beta_{i,j} = sum_t C(e,t) * inner_{i-t, j-t}
        table.partial = inner.partial;
        table.degree_cap = inner.degree_cap;
        for (const auto& [key, val] : inner.entries()) {
            auto [i, j] = key;
            for (int t = 0; t <= e; ++t) {
                if (table.partial && j + t > table.degree_cap) continue;
                table.add(i + t, j + t, binomial(e, t) * val);
            }
        }
    }
    table.characteristic = field.modulus();
    table.num_vars = ideal.num_vars() * pol.max_exponent;
    table.depth_shift = pol.depth_shift;
    table.krull_dim = pol.complex.dim() + 1 - pol.depth_shift;
    return table;
}

int monomial_serre_level(const MonomialIdeal& ideal, const PrimeField& field,
                         const RankOptions& opt) {
    return serre_level(polarize(ideal).complex, field, opt);
}

std::vector<Exponents> monomials_of_degree(int num_vars, int degree) {
    if (num_vars < 1 || degree < 0)
        throw ParameterError("monomials_of_degree: bad arguments");
    std::int64_t count;
    try {
        count = binomial(num_vars - 1 + degree, degree);
    } catch (const ParameterError&) {
        throw TooLargeError("monomials_of_degree: too many monomials");
    }
    if (count > 2'000'000)
        throw TooLargeError("monomials_of_degree: too many monomials");
    std::vector<Exponents> out;
    out.reserve(static_cast<std::size_t>(count));
    Exponents m(static_cast<std::size_t>(num_vars), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == num_vars - 1) {
            m[static_cast<std::size_t>(var)] = left;
            out.push_back(m);
            m[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, left - e);
        }
        m[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

LexSegmentIdeal lex_segment_ideal(const std::vector<std::int64_t>& hilbert_values,
                                  int num_vars, int up_to) {
    if (num_vars < 1) throw ParameterError("lex_segment_ideal: num_vars < 1");
    if (up_to < 0) throw ParameterError("lex_segment_ideal: negative up_to");
    auto value_at = [&](int q) -> std::int64_t {
        return q < static_cast<int>(hilbert_values.size())
                   ? hilbert_values[static_cast<std::size_t>(q)]
                   : 0;
    };
    if (value_at(0) != 1)
        throw NotOSequenceError("a cyclic graded quotient has value 1 in degree 0", 0);

    std::vector<Exponents> gens;
    // lex-descending monomial lists of the previous and current degree
    std::vector<Exponents> prev = monomials_of_degree(num_vars, 0);
    std::int64_t prev_size = 0; // |L_0| = 1 - h(0) = 0
    for (int q = 1; q <= up_to; ++q) {
        std::int64_t hb = value_at(q);
        if (hb < 0) throw NotOSequenceError("negative value", q);
        std::int64_t dim_q = binomial(num_vars - 1 + q, q);
        if (hb > dim_q)
            throw NotOSequenceError("value exceeds the dimension of the degree piece", q);
        std::int64_t size = dim_q - hb;
        std::vector<Exponents> cur = monomials_of_degree(num_vars, q);
        auto in_segment = [&](const Exponents& v) {
            // first `size` entries of cur, which is sorted lex descending
            return size > 0 &&
                   lex_compare(v, cur[static_cast<std::size_t>(size - 1)]) >= 0;
        };
        // Macaulay growth: each variable multiple of the previous segment
        // must land in the current one
        for (std::int64_t s = 0; s < prev_size; ++s) {
            Exponents v = prev[static_cast<std::size_t>(s)];
            for (int i = 0; i < num_vars; ++i) {
                ++v[static_cast<std::size_t>(i)];
                if (!in_segment(v))
                    throw NotOSequenceError(
                        "value at degree " + std::to_string(q) +
                            " is too large for the previous one (growth bound)",
                        q);
                --v[static_cast<std::size_t>(i)];
            }
        }
        // new minimal generators: segment members no divisor of which lies in
        // the previous segment
        auto in_prev = [&](const Exponents& v) {
            return prev_size > 0 &&
                   lex_compare(v, prev[static_cast<std::size_t>(prev_size - 1)]) >= 0;
        };
        for (std::int64_t s = 0; s < size; ++s) {
            Exponents v = cur[static_cast<std::size_t>(s)];
            bool fresh = true;
            for (int i = 0; i < num_vars && fresh; ++i) {
                if (v[static_cast<std::size_t>(i)] == 0) continue;
                --v[static_cast<std::size_t>(i)];
                if (in_prev(v)) fresh = false;
                ++v[static_cast<std::size_t>(i)];
            }
            if (fresh) gens.push_back(cur[static_cast<std::size_t>(s)]);
        }
        prev = std::move(cur);
        prev_size = size;
    }

    LexSegmentIdeal out;
    out.ideal = MonomialIdeal::from_generators(num_vars, std::move(gens));
    out.up_to = up_to;
    out.target.resize(static_cast<std::size_t>(up_to) + 1, 0);
    for (int q = 0; q <= up_to; ++q)
        out.target[static_cast<std::size_t>(q)] = value_at(q);
    return out;
}

bool is_lex_segment(const MonomialIdeal& ideal, int up_to) {
    for (int q = 0; q <= up_to; ++q) {
        bool outside_seen = false;
        for (const auto& m : monomials_of_degree(ideal.num_vars(), q)) {
            if (ideal.contains(m)) {
                if (outside_seen) return false;
            } else {
                outside_seen = true;
            }
        }
    }
    return true;
}

bool is_stable(const MonomialIdeal& ideal) {
    for (const auto& u : ideal.generators()) {
        int mu = max_var(u);
        for (int j = 1; j < mu; ++j) {
            Exponents v = u;
            ++v[static_cast<std::size_t>(j - 1)];
            --v[static_cast<std::size_t>(mu - 1)];
            if (!ideal.contains(v)) return false;
        }
    }
    return true;
}

BettiTable stable_betti(const MonomialIdeal& ideal) {
    for (const auto& u : ideal.generators()) {
        int mu = max_var(u);
        for (int j = 1; j < mu; ++j) {
            Exponents v = u;
            ++v[static_cast<std::size_t>(j - 1)];
            --v[static_cast<std::size_t>(mu - 1)];
            if (!ideal.contains(v))
                throw NotStableError("exchange of " + monomial_str(u) +
                                     " by variable x" + std::to_string(j) +
                                     " leaves the ideal");
        }
    }
    BettiTable table;
    table.characteristic = 0; // the formula does not see the field
    table.num_vars = ideal.num_vars();
    table.krull_dim = krull_dimension(ideal);
    table.add(0, 0, 1);
    for (const auto& u : ideal.generators()) {
        int k = total_degree(u);
        int mu = max_var(u);
        for (int i = 1; i <= mu; ++i)
            table.add(i, i + k - 1, binomial(mu - 1, i - 1));
    }
    return table;
}

BettiTable power_ideal_betti(int num_vars, int degree) {
    if (degree < 1) throw ParameterError("power_ideal_betti: degree < 1");
    auto gens = monomials_of_degree(num_vars, degree);
    if (gens.size() > 100'000)
        throw TooLargeError("power_ideal_betti: too many generators");
    return stable_betti(MonomialIdeal::from_generators(num_vars, std::move(gens)));
}

} // namespace reisner
