#include "reisner/complex.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace reisner {

namespace {

// Drop faces contained in another face of the list, dedupe, sort lex.
std::vector<Face> minimalize(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.size() > b.size(); });
    std::vector<Face> out;
    for (const Face& f : faces) {
        bool covered = false;
        for (const Face& g : out) {
            if (f.subset_of(g)) {
                covered = true;
                break;
            }
        }
        if (!covered) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces) {
    if (faces.empty()) throw EmptyInputError("a complex needs at least one facet");
    SimplicialComplex c;
    c.facets_ = minimalize(std::move(faces));
    for (const Face& f : c.facets_) {
        c.vertices_ = c.vertices_ | f;
        c.dim_ = std::max(c.dim_, f.size() - 1);
    }
    return c;
}

SimplicialComplex SimplicialComplex::void_complex() {
    return from_facets({Face{}});
}

bool SimplicialComplex::contains(const Face& f) const {
    for (const Face& g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& facet_lists,
                                VertexPolicy policy,
                                std::optional<int> declared_vertex_count) {
    if (facet_lists.empty()) throw EmptyInputError("facet list is empty");
    std::vector<Face> faces;
    faces.reserve(facet_lists.size());
    for (const auto& list : facet_lists) {
        if (list.empty())
            throw ParameterError("facets must be nonempty vertex lists");
        Face f;
        for (int v : list) f.set(v); // Face::set validates the id range
        faces.push_back(f);
    }

    Face support;
    for (const Face& f : faces) support = support | f;

    if (declared_vertex_count) {
        int n = *declared_vertex_count;
        if (n < 1 || n > Face::max_vertices)
            throw ParameterError("declared vertex count out of range");
        if (support.max_vertex() > n)
            throw ParameterError("facet mentions a vertex beyond the declared count");
    }

    int top = declared_vertex_count ? *declared_vertex_count : support.max_vertex();
    bool contiguous = support == Face::full(top);

    if (!contiguous) {
        if (policy == VertexPolicy::strict)
            throw IsolatedVertexError(
                "vertex ids do not cover 1.." + std::to_string(top) +
                "; strict policy forbids gaps and isolated vertices");
        // lenient: renumber occurring ids to 1..n in increasing order
        std::unordered_map<int, int> renum;
        int next = 1;
        for (int v = support.min_vertex(); v != 0; v = support.next_vertex(v))
            renum[v] = next++;
        for (Face& f : faces) {
            Face g;
            for (int v = f.min_vertex(); v != 0; v = f.next_vertex(v)) g.set(renum[v]);
            f = g;
        }
    }

    return SimplicialComplex::from_facets(std::move(faces));
}

std::vector<std::vector<Face>> faces_by_cardinality(const SimplicialComplex& c) {
    int d1 = c.dim() + 1;
    std::vector<std::unordered_set<Face, FaceHash>> sets(static_cast<std::size_t>(d1) + 1);
    for (const Face& f : c.facets()) sets[static_cast<std::size_t>(f.size())].insert(f);
    for (int card = d1; card >= 1; --card) {
        auto& level = sets[static_cast<std::size_t>(card)];
        auto& below = sets[static_cast<std::size_t>(card - 1)];
        for (const Face& f : level)
            for (int v = f.min_vertex(); v != 0; v = f.next_vertex(v))
                below.insert(f.without(v));
    }
    std::vector<std::vector<Face>> levels(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        levels[i].assign(sets[i].begin(), sets[i].end());
        std::sort(levels[i].begin(), levels[i].end());
    }
    return levels;
}

FVector f_vector(const SimplicialComplex& c) {
    FVector f;
    for (const auto& level : faces_by_cardinality(c))
        f.counts.push_back(static_cast<std::int64_t>(level.size()));
    return f;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::int64_t num = n - k + i;
        if (__builtin_mul_overflow(r, num, &r))
            throw ParameterError("binomial coefficient overflows 64 bits");
        r /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

HVector h_vector(const FVector& f, int d) {
    if (d + 1 < static_cast<int>(f.counts.size()))
        throw ParameterError("h_vector: d smaller than the top face cardinality");
    HVector h;
    h.h.resize(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
        std::int64_t acc = 0;
        for (int i = 0; i <= k; ++i) {
            std::int64_t term = binomial(d - i, k - i) * f.f(i - 1);
            acc += ((k - i) % 2 == 0) ? term : -term;
        }
        h.h[static_cast<std::size_t>(k)] = acc;
    }
    return h;
}

HVector h_vector(const SimplicialComplex& c) {
    return h_vector(f_vector(c), c.dim() + 1);
}

SimplicialComplex link(const SimplicialComplex& c, const Face& f) {
    if (!c.contains(f)) throw NotAFaceError("link: argument is not a face, " + f.str());
    std::vector<Face> facets;
    for (const Face& m : c.facets())
        if (f.subset_of(m)) facets.push_back(m - f);
    // facets of the link are automatically inclusion-incomparable
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex restriction(const SimplicialComplex& c, const Face& w) {
    std::vector<Face> facets;
    for (const Face& m : c.facets()) facets.push_back(m & w);
    return SimplicialComplex::from_facets(std::move(facets));
}

bool is_pure(const SimplicialComplex& c) {
    for (const Face& f : c.facets())
        if (f.size() - 1 != c.dim()) return false;
    return true;
}

bool is_strongly_connected(const SimplicialComplex& c) {
    if (!is_pure(c)) return false;
    std::size_t m = c.facet_count();
    if (m <= 1) return true;
    int d1 = c.dim() + 1;
    std::vector<char> seen(m, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < m; ++j) {
            if (seen[j]) continue;
            if ((c.facets()[i] & c.facets()[j]).size() == d1 - 1) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    return reached == m;
}

bool is_pseudomanifold(const SimplicialComplex& c) {
    if (!is_pure(c) || !is_strongly_connected(c)) return false;
    if (c.dim() < 0) return false; // the void complex has no ridges
    std::unordered_map<Face, int, FaceHash> ridge_count;
    for (const Face& m : c.facets())
        for (int v = m.min_vertex(); v != 0; v = m.next_vertex(v))
            ++ridge_count[m.without(v)];
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2) return false;
    return true;
}

SimplicialComplex suspension(const SimplicialComplex& c) {
    int base = c.vertex_set().max_vertex();
    if (base + 2 > Face::max_vertices)
        throw TooLargeError("suspension: no room for two fresh vertices");
    std::vector<Face> facets;
    for (const Face& m : c.facets()) {
        facets.push_back(m.with(base + 1));
        facets.push_back(m.with(base + 2));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& c) {
    int base = c.vertex_set().max_vertex();
    if (base + 1 > Face::max_vertices)
        throw TooLargeError("cone: no room for a fresh vertex");
    std::vector<Face> facets;
    for (const Face& m : c.facets()) facets.push_back(m.with(base + 1));
    return SimplicialComplex::from_facets(std::move(facets));
}

} // namespace reisner
