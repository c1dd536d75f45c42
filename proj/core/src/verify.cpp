#include "reisner/verify.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <random>
#include <thread>

namespace reisner {

namespace {

Json h_to_json(const HVector& h) {
    Json arr = Json::array();
    for (auto v : h.h) arr.push_back(v);
    return arr;
}

} // namespace

CheckResult check_swartz(const SimplicialComplex& c) {
    if (!is_pure(c)) throw NotPureError("the vertex-link identity needs a pure complex");
    CheckResult res;
    res.check = "swartz";
    int d = c.dim() + 1;
    if (d == 0) return res; // void complex: nothing to sum
    HVector h = h_vector(c);
    auto levels = faces_by_cardinality(c);

    // h-vectors of all vertex links from filtered level sizes
    std::vector<HVector> link_h;
    for (const Face& v : levels[1]) {
        FVector lf;
        for (std::size_t card = 1; card < levels.size(); ++card) {
            std::int64_t cnt = 0;
            for (const Face& g : levels[card])
                if (g.contains(v.min_vertex())) ++cnt;
            lf.counts.push_back(cnt);
        }
        link_h.push_back(h_vector(lf, d - 1));
    }

    for (int i = 1; i <= d; ++i) {
        std::int64_t lhs = i * h.at(i) + (d - i + 1) * h.at(i - 1);
        std::int64_t rhs = 0;
        for (const auto& lh : link_h) rhs += lh.at(i - 1);
        if (lhs != rhs) {
            res.pass = false;
            res.details = Json{{"i", i}, {"lhs", lhs}, {"rhs", rhs},
                               {"h", h_to_json(h)}};
            return res;
        }
    }
    return res;
}

CheckResult check_h_nonnegativity(const SimplicialComplex& c, const PrimeField& field) {
    CheckResult res;
    res.check = "h_nonneg";
    res.p = field.modulus();
    int r = serre_level(c, field);
    HVector h = h_vector(c);
    for (int k = 0; k <= r; ++k) {
        if (h.at(k) < 0) {
            res.pass = false;
            res.details = Json{{"level", r}, {"k", k}, {"h", h_to_json(h)}};
            return res;
        }
    }
    return res;
}

CheckResult check_tail_sum(const SimplicialComplex& c, const PrimeField& field) {
    CheckResult res;
    res.check = "tail_sum";
    res.p = field.modulus();
    int r = serre_level(c, field);
    int d = c.dim() + 1;
    HVector h = h_vector(c);
    std::int64_t tail = 0;
    for (int k = r; k <= d; ++k) tail += h.at(k);
    std::int64_t head = 0;
    for (int k = 0; k < r; ++k) head += h.at(k);
    auto facets = static_cast<std::int64_t>(c.facet_count());
    if (tail < 0 || facets < head) {
        res.pass = false;
        res.details = Json{{"level", r},    {"tail_sum", tail},
                           {"head_sum", head}, {"facets", facets},
                           {"h", h_to_json(h)}};
    }
    return res;
}

CheckResult check_vanishing_rigidity(const SimplicialComplex& c,
                                     const PrimeField& field) {
    CheckResult res;
    res.check = "rigidity";
    res.p = field.modulus();
    SerreReport report = analyze_serre(c, field);
    HVector h = h_vector(c);
    int d = c.dim() + 1;
    int t = -1;
    for (int k = 0; k <= report.level; ++k) {
        if (h.at(k) == 0) {
            t = k;
            break;
        }
    }
    if (t < 0) return res; // vacuous
    bool zero_tail = true;
    for (int k = t; k <= d; ++k)
        if (h.at(k) != 0) zero_tail = false;
    if (!zero_tail || !report.cohen_macaulay) {
        res.pass = false;
        res.details = Json{{"level", report.level},
                           {"t", t},
                           {"h", h_to_json(h)},
                           {"cohen_macaulay", report.cohen_macaulay}};
    }
    return res;
}

CheckResult check_depth_cross(const SimplicialComplex& c, const PrimeField& field) {
    CheckResult res;
    res.check = "depth_cross";
    res.p = field.modulus();
    int by_links = depth_from_links(c, field);
    BettiTable table = face_ring_betti(c, field);
    int by_resolution = table.depth();
    if (by_links != by_resolution) {
        res.pass = false;
        res.details = Json{{"depth_links", by_links},
                           {"depth_resolution", by_resolution},
                           {"projective_dimension", table.projective_dimension()}};
    }
    return res;
}

CheckResult check_m_vector(const SimplicialComplex& c, const PrimeField& field) {
    CheckResult res;
    res.check = "m_vector";
    res.p = field.modulus();
    int r = serre_level(c, field);
    HVector h = h_vector(c);
    std::vector<std::int64_t> head;
    for (int k = 0; k <= r; ++k) head.push_back(h.at(k));
    for (std::int64_t v : head) {
        if (v < 0) {
            res.pass = false;
            res.details = Json{{"level", r}, {"h", h_to_json(h)}};
            return res;
        }
    }
    int vars = static_cast<int>(std::max<std::int64_t>(1, h.at(1)));
    try {
        lex_segment_ideal(head, vars, r);
    } catch (const NotOSequenceError& e) {
        res.pass = false;
        res.details = Json{{"level", r},
                           {"h", h_to_json(h)},
                           {"degree", e.degree},
                           {"reason", e.what()}};
    }
    return res;
}

CheckResult check_lex_bound(const MonomialIdeal& ideal, const PrimeField& field) {
    CheckResult res;
    res.check = "lex_bound";
    res.p = field.modulus();
    HilbertSummary summary = algebraic_h_vector(ideal);
    int codim = ideal.num_vars() - summary.krull_dim;
    if (codim < 1)
        throw ParameterError("check_lex_bound: zero ideal has no lex comparison ring");
    int r = monomial_serre_level(ideal, field);
    LexSegmentIdeal lex;
    try {
        lex = lex_segment_ideal(summary.h, codim, r);
    } catch (const NotOSequenceError& e) {
        // a level-r quotient whose truncated h-vector is not an O-sequence
        // would contradict the nonnegativity theorem; report, don't throw
        res.pass = false;
        res.details = Json{{"level", r},
                           {"codim", codim},
                           {"degree", e.degree},
                           {"reason", e.what()}};
        return res;
    }
    BettiTable mine = monomial_betti(ideal, field);
    BettiTable bound = stable_betti(lex.ideal);
    for (const auto& [key, val] : mine.entries()) {
        auto [i, j] = key;
        if (i < 1 || j - i > r - 1) continue;
        if (val > bound.at(i, j)) {
            res.pass = false;
            res.details = Json{{"level", r},
                               {"i", i},
                               {"j", j},
                               {"value", val},
                               {"bound", bound.at(i, j)},
                               {"lex", to_json(lex.ideal)}};
            return res;
        }
    }
    return res;
}

CheckResult check_power_bound(const MonomialIdeal& ideal, const PrimeField& field,
                              int k) {
    CheckResult res;
    res.check = "power_bound";
    res.p = field.modulus();
    int r = monomial_serre_level(ideal, field);
    if (k < 1 || k > r)
        throw ParameterError("check_power_bound: k must satisfy 1 <= k <= level");
    HilbertSummary summary = algebraic_h_vector(ideal);
    int codim = ideal.num_vars() - summary.krull_dim;
    if (codim < 1)
        throw ParameterError("check_power_bound: zero ideal has no comparison ring");
    BettiTable mine = monomial_betti(ideal, field);
    BettiTable bound = power_ideal_betti(codim, k);

    int top = std::max(mine.projective_dimension(), codim) + 1;
    bool eq_low = false;  // equality at some homological index in [1, codim]
    bool eq_all = true;   // equality along the whole row
    for (int i = 1; i <= top; ++i) {
        std::int64_t lhs = mine.at(i, i + k - 1);
        std::int64_t rhs = bound.at(i, i + k - 1);
        if (lhs > rhs) {
            res.pass = false;
            res.details = Json{{"k", k}, {"i", i}, {"value", lhs}, {"bound", rhs}};
            return res;
        }
        if (lhs != rhs) eq_all = false;
        else if (i <= codim) eq_low = true;
    }

    bool cm = mine.depth() == mine.krull_dim;
    bool gens_degree_k = true;
    for (const auto& g : ideal.generators())
        if (total_degree(g) != k) gens_degree_k = false;
    bool single_strand = true;
    for (const auto& [key, val] : mine.entries()) {
        auto [i, j] = key;
        if (i >= 1 && j - i != k - 1) single_strand = false;
    }
    bool linear = gens_degree_k && single_strand && !ideal.is_zero();

    // equality at one low index <=> equality everywhere <=> CM + k-linear
    bool consistent = (eq_low == (cm && linear)) && (!eq_low || eq_all);
    if (!consistent) {
        res.pass = false;
        res.details = Json{{"k", k},
                           {"equality_low", eq_low},
                           {"equality_all", eq_all},
                           {"cohen_macaulay", cm},
                           {"linear_resolution", linear}};
    }
    return res;
}

namespace {

Json fact_to_json(const ExpectedFact& f) {
    Json out{{"what", f.what}, {"p", f.p}, {"value", f.value}, {"source", f.source}};
    if (!f.args.is_null()) out["args"] = f.args;
    return out;
}

Json compute_fact(const SimplicialComplex& c, const ExpectedFact& f) {
    const std::string& w = f.what;
    if (w == "pure") return is_pure(c);
    if (w == "strongly_connected") return is_strongly_connected(c);
    if (w == "pseudomanifold") return is_pseudomanifold(c);
    if (w == "normal_pseudomanifold") return is_normal_pseudomanifold(c);
    if (w == "dim") return c.dim();
    if (w == "num_vertices") return c.vertex_count();
    if (w == "facet_count") return c.facet_count();
    if (w == "codim") return c.vertex_count() - (c.dim() + 1);
    if (w == "f_vector") {
        Json arr = Json::array();
        for (auto v : f_vector(c).counts) arr.push_back(v);
        return arr;
    }
    if (w == "h_vector") return h_to_json(h_vector(c));
    if (w == "minimal_nonface_count_deg2") {
        std::int64_t count = 0;
        for (const Face& nf : minimal_nonfaces(c))
            if (nf.size() == 2) ++count;
        return count;
    }
    PrimeField field(f.p);
    if (w == "serre_level") return serre_level(c, field);
    if (w == "depth") return depth_from_links(c, field);
    if (w == "cohen_macaulay") return is_cohen_macaulay(c, field);
    if (w == "links_homology_spheres") return links_are_homology_spheres(c, field);
    if (w == "reduced_betti") {
        auto bv = reduced_betti(c, field);
        Json arr = Json::array();
        for (int i = -1; i <= bv.max_index(); ++i) arr.push_back(bv.at(i));
        return arr;
    }
    if (w == "witness_face" || w == "witness_index") {
        SerreReport report = analyze_serre(c, field);
        if (!report.witness) return Json();
        if (w == "witness_face") return to_json(report.witness->face);
        return report.witness->index;
    }
    if (w == "betti_entry") {
        BettiTable table = face_ring_betti(c, field);
        return table.at(f.args.at(0).get<int>(), f.args.at(1).get<int>());
    }
    throw ParameterError("unknown expected fact \"" + w + "\"");
}

} // namespace

CheckResult check_fixture_facts(const Fixture& fx) {
    CheckResult res;
    res.check = "fixture_facts";
    Json mismatches = Json::array();
    for (const ExpectedFact& f : fx.expected) {
        Json got = compute_fact(fx.complex, f);
        if (got != f.value) {
            Json m = fact_to_json(f);
            m["computed"] = got;
            mismatches.push_back(m);
        }
    }
    if (!mismatches.empty()) {
        res.pass = false;
        res.details = Json{{"fixture", fx.name}, {"mismatches", mismatches}};
    }
    return res;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// bounded draw; the slight modulo bias is irrelevant for instance generation
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

} // namespace

SimplicialComplex random_pure_complex(std::uint64_t seed, int n, int d, int m) {
    if (d < 1 || d > n || n > Face::max_vertices)
        throw ParameterError("random_pure_complex: need 1 <= d <= n <= 128");
    std::int64_t total = binomial(n, d);
    if (total > 2'000'000)
        throw ParameterError("random_pure_complex: C(n,d) too large to enumerate");
    if (m < 1 || m > total)
        throw ParameterError("random_pure_complex: need 1 <= m <= C(n,d)");
    if (static_cast<std::int64_t>(m) * d < n)
        throw ParameterError("random_pure_complex: m*d < n cannot cover all vertices");

    // all d-subsets once; sampling permutes indices
    std::vector<Face> pool;
    pool.reserve(static_cast<std::size_t>(total));
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        Face f;
        for (int v : idx) f.set(v);
        pool.push_back(f);
        int i = d - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - d + i + 1) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        // partial Fisher-Yates: the first m entries are a uniform m-subset
        for (int i = 0; i < m; ++i) {
            auto j = static_cast<std::size_t>(i) +
                     static_cast<std::size_t>(draw(rng, order.size() - static_cast<std::size_t>(i)));
            std::swap(order[static_cast<std::size_t>(i)], order[j]);
        }
        Face covered;
        std::vector<Face> facets;
        facets.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            facets.push_back(pool[order[static_cast<std::size_t>(i)]]);
            covered = covered | facets.back();
        }
        if (covered == Face::full(n))
            return SimplicialComplex::from_facets(std::move(facets));
    }
    throw ParameterError("random_pure_complex: could not cover all vertices; raise m");
}

MonomialIdeal random_monomial_ideal(std::uint64_t seed, int n, int max_deg, int count) {
    if (n < 1 || max_deg < 1 || count < 1)
        throw ParameterError("random_monomial_ideal: positive parameters required");
    std::mt19937_64 rng(seed);
    std::vector<Exponents> gens;
    int guard = 0;
    while (static_cast<int>(gens.size()) < count) {
        if (++guard > 1000 * count)
            throw ParameterError("random_monomial_ideal: rejection budget exhausted");
        Exponents e(static_cast<std::size_t>(n), 0);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            e[static_cast<std::size_t>(i)] =
                static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_deg) + 1));
            if (e[static_cast<std::size_t>(i)]) zero = false;
        }
        if (zero) continue;
        gens.push_back(std::move(e));
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

const std::vector<std::string>& default_check_names() {
    static const std::vector<std::string> names{
        "swartz", "h_nonneg", "tail_sum", "rigidity", "depth_cross", "m_vector"};
    return names;
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names{
        "swartz",      "h_nonneg", "tail_sum",  "rigidity",
        "depth_cross", "m_vector", "lex_bound", "power_bound"};
    return names;
}

namespace {

struct InstanceParams {
    int n, d, m;
    std::uint64_t seed;
};

InstanceParams instance_params(const VerifyOptions& opt, int index) {
    InstanceParams p{};
    p.seed = splitmix64(opt.seed + 0x100001 * static_cast<std::uint64_t>(index));
    std::mt19937_64 rng(p.seed);
    int max_d = std::max(2, opt.max_d);
    p.d = 2 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_d - 1)));
    int max_n = std::max(p.d, opt.max_n);
    p.n = p.d + static_cast<int>(
                    draw(rng, static_cast<std::uint64_t>(max_n - p.d) + 1));
    std::int64_t total = binomial(p.n, p.d);
    std::int64_t lo = (p.n + p.d - 1) / p.d;
    std::int64_t hi = opt.max_m > 0 ? opt.max_m : lo + 2 * p.n;
    hi = std::min(hi, total);
    if (hi < lo) hi = lo = std::min<std::int64_t>(total, lo);
    p.m = static_cast<int>(lo + static_cast<std::int64_t>(
                                    draw(rng, static_cast<std::uint64_t>(hi - lo) + 1)));
    return p;
}

bool check_selected(const std::vector<std::string>& selected, const std::string& name) {
    if (selected.empty())
        return std::find(default_check_names().begin(), default_check_names().end(),
                         name) != default_check_names().end();
    return std::find(selected.begin(), selected.end(), name) != selected.end();
}

Json run_checks_on_complex(const SimplicialComplex& c, const VerifyOptions& opt,
                           bool& all_pass) {
    Json checks = Json::array();
    auto push = [&](CheckResult r) {
        Json o{{"check", r.check}, {"pass", r.pass}};
        if (r.p) o["p"] = r.p;
        if (!r.details.is_null()) o["details"] = r.details;
        all_pass = all_pass && r.pass;
        checks.push_back(std::move(o));
    };
    if (check_selected(opt.checks, "swartz")) push(check_swartz(c));
    for (std::uint32_t p : opt.primes) {
        PrimeField field(p);
        if (check_selected(opt.checks, "h_nonneg"))
            push(check_h_nonnegativity(c, field));
        if (check_selected(opt.checks, "tail_sum")) push(check_tail_sum(c, field));
        if (check_selected(opt.checks, "rigidity"))
            push(check_vanishing_rigidity(c, field));
        if (check_selected(opt.checks, "depth_cross")) push(check_depth_cross(c, field));
        if (check_selected(opt.checks, "m_vector")) push(check_m_vector(c, field));
        bool want_lex = check_selected(opt.checks, "lex_bound");
        bool want_power = check_selected(opt.checks, "power_bound");
        if (want_lex || want_power) {
            MonomialIdeal ideal = nonface_ideal(c);
            int codim = c.vertex_count() - (c.dim() + 1);
            if (codim >= 1 && !ideal.is_zero()) {
                if (want_lex) push(check_lex_bound(ideal, field));
                if (want_power) {
                    int r = monomial_serre_level(ideal, field);
                    for (int k = 1; k <= r; ++k)
                        push(check_power_bound(ideal, field, k));
                }
            }
        }
    }
    return checks;
}

std::string verify_instance_line(const VerifyOptions& opt, int id, int fixture_count) {
    Json record;
    record["id"] = id;
    bool all_pass = true;
    if (id < fixture_count) {
        Fixture fx = fixture(fixture_names()[static_cast<std::size_t>(id)]);
        record["kind"] = "fixture";
        record["name"] = fx.name;
        Json checks = run_checks_on_complex(fx.complex, opt, all_pass);
        CheckResult facts = check_fixture_facts(fx);
        Json fo{{"check", facts.check}, {"pass", facts.pass}};
        if (!facts.details.is_null()) fo["details"] = facts.details;
        all_pass = all_pass && facts.pass;
        checks.insert(checks.begin(), fo);
        record["checks"] = checks;
        if (!all_pass) record["replay"] = to_json(fx.complex);
    } else {
        InstanceParams p = instance_params(opt, id - fixture_count);
        SimplicialComplex c = random_pure_complex(p.seed, p.n, p.d, p.m);
        record["kind"] = "random";
        record["seed"] = p.seed;
        record["n"] = p.n;
        record["d"] = p.d;
        record["m"] = p.m;
        record["checks"] = run_checks_on_complex(c, opt, all_pass);
        if (!all_pass) record["replay"] = to_json(c);
    }
    record["pass"] = all_pass;
    return record.dump();
}

} // namespace

VerifySummary run_verification(const VerifyOptions& opt, std::ostream& out) {
    int fixture_count = opt.with_fixtures || opt.fixtures_only
                            ? static_cast<int>(fixture_names().size())
                            : 0;
    int total = fixture_count + (opt.fixtures_only ? 0 : opt.count);

    std::vector<std::string> lines(static_cast<std::size_t>(total));
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (int id = 0; id < total; ++id)
            lines[static_cast<std::size_t>(id)] =
                verify_instance_line(opt, id, fixture_count);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            while (true) {
                int id = next.fetch_add(1);
                if (id >= total) break;
                lines[static_cast<std::size_t>(id)] =
                    verify_instance_line(opt, id, fixture_count);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    VerifySummary summary;
    summary.instances = total;
    for (const std::string& line : lines) {
        out << line << "\n";
        if (line.find("\"pass\":false") != std::string::npos) ++summary.failures;
    }
    return summary;
}

namespace {

std::string search_findings_for(const SimplicialComplex& c, const SearchOptions& opt,
                                Json base, int& findings) {
    std::string lines;
    for (std::uint32_t p : opt.primes) {
        PrimeField field(p);
        int r = serre_level(c, field);
        HVector h = h_vector(c);
        if (r + 1 <= c.dim() + 1 && h.at(r + 1) < 0) {
            Json rec = base;
            rec["p"] = p;
            rec["level"] = r;
            rec["h"] = h_to_json(h);
            rec["complex"] = to_json(c);
            lines += rec.dump();
            lines += "\n";
            ++findings;
        }
    }
    return lines;
}

} // namespace

SearchSummary run_search(const SearchOptions& opt, std::ostream& out) {
    SearchSummary summary;
    if (opt.exhaustive) {
        if (opt.n > 6 || opt.d > 3 || opt.d < 1 || opt.d > opt.n)
            throw ParameterError("exhaustive search is limited to n <= 6, d <= 3");
        std::vector<Face> pool;
        std::vector<int> idx(static_cast<std::size_t>(opt.d));
        for (int i = 0; i < opt.d; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            Face f;
            for (int v : idx) f.set(v);
            pool.push_back(f);
            int i = opt.d - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == opt.n - opt.d + i + 1)
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < opt.d; ++j)
                idx[static_cast<std::size_t>(j)] =
                    idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        std::uint64_t masks = std::uint64_t{1} << pool.size();
        for (std::uint64_t mask = 1; mask < masks; ++mask) {
            Face covered;
            std::vector<Face> facets;
            for (std::size_t b = 0; b < pool.size(); ++b) {
                if (mask & (std::uint64_t{1} << b)) {
                    facets.push_back(pool[b]);
                    covered = covered | pool[b];
                }
            }
            if (covered != Face::full(opt.n)) continue;
            ++summary.instances;
            auto c = SimplicialComplex::from_facets(std::move(facets));
            Json base{{"id", mask}, {"kind", "exhaustive"}, {"n", opt.n}, {"d", opt.d}};
            out << search_findings_for(c, opt, base, summary.findings);
        }
        return summary;
    }

    VerifyOptions vopt;
    vopt.seed = opt.seed;
    vopt.max_n = opt.max_n;
    vopt.max_d = opt.max_d;
    vopt.max_m = opt.max_m;
    for (int i = 0; i < opt.count; ++i) {
        InstanceParams p = instance_params(vopt, i);
        SimplicialComplex c = random_pure_complex(p.seed, p.n, p.d, p.m);
        ++summary.instances;
        Json base{{"id", i},  {"kind", "random"}, {"seed", p.seed},
                  {"n", p.n}, {"d", p.d},          {"m", p.m}};
        out << search_findings_for(c, opt, base, summary.findings);
    }
    return summary;
}

} // namespace reisner
