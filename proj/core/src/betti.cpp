#include "reisner/betti.hpp"

#include <algorithm>

namespace reisner {

int BettiTable::projective_dimension() const {
    if (partial)
        throw PartialTableError("projective dimension needs a complete Betti table");
    int pd = 0;
    for (const auto& [key, val] : entries_) pd = std::max(pd, key.first);
    return pd;
}

int BettiTable::regularity() const {
    if (partial) throw PartialTableError("regularity needs a complete Betti table");
    int reg = 0;
    for (const auto& [key, val] : entries_) reg = std::max(reg, key.second - key.first);
    return reg;
}

int BettiTable::depth() const { return num_vars - projective_dimension() - depth_shift; }

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
    auto levels = faces_by_cardinality(c);
    auto is_face = [&](const Face& f) {
        int card = f.size();
        if (card >= static_cast<int>(levels.size())) return false;
        const auto& lv = levels[static_cast<std::size_t>(card)];
        return std::binary_search(lv.begin(), lv.end(), f);
    };
    std::vector<int> verts = c.vertex_list();
    int n = static_cast<int>(verts.size());
    std::vector<Face> out;
    int max_card = std::min(n, c.dim() + 2);
    std::vector<int> idx;
    // enumerate k-subsets of the vertex list in lex order
    for (int k = 2; k <= max_card; ++k) {
        idx.assign(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            Face f;
            for (int i : idx) f.set(verts[static_cast<std::size_t>(i)]);
            if (!is_face(f)) {
                bool minimal = true;
                for (int v = f.min_vertex(); v != 0; v = f.next_vertex(v)) {
                    if (!is_face(f.without(v))) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) out.push_back(f);
            }
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Face levels of the restriction to w, filtered from the global level table.
std::vector<std::vector<Face>> restriction_levels(
    const std::vector<std::vector<Face>>& levels, const Face& w) {
    std::vector<std::vector<Face>> out(levels.size());
    for (std::size_t c = 0; c < levels.size(); ++c)
        for (const Face& g : levels[c])
            if (g.subset_of(w)) out[c].push_back(g);
    while (out.size() > 1 && out.back().empty()) out.pop_back();
    return out;
}

} // namespace

BettiTable face_ring_betti(const SimplicialComplex& c, const PrimeField& field,
                           const BettiOptions& opt) {
    int n = c.vertex_count();
    bool capped = opt.degree_cap.has_value() && *opt.degree_cap < n;
    if (!capped && n > opt.max_vertices)
        throw TooLargeError("face_ring_betti: " + std::to_string(n) +
                            " vertices exceeds the cap " +
                            std::to_string(opt.max_vertices) +
                            "; pass a degree cap for a partial table");

    BettiTable table;
    table.characteristic = field.modulus();
    table.num_vars = n;
    table.krull_dim = c.dim() + 1;
    table.partial = capped;
    table.degree_cap = capped ? *opt.degree_cap : n;
    if (capped && *opt.degree_cap < 0)
        throw ParameterError("face_ring_betti: negative degree cap");

    auto levels = faces_by_cardinality(c);
    std::vector<int> verts = c.vertex_list();
    int max_j = capped ? *opt.degree_cap : n;

    std::vector<int> idx;
    for (int j = 0; j <= max_j; ++j) {
        if (j == 0) {
            // W = ∅: the restriction is the void complex, beta~_{-1} = 1
            table.add(0, 0, 1);
            continue;
        }
        idx.assign(static_cast<std::size_t>(j), 0);
        for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            Face w;
            for (int i : idx) w.set(verts[static_cast<std::size_t>(i)]);
            auto bv = betti_from_levels(restriction_levels(levels, w), field, opt.rank);
            for (int ell = 0; ell <= bv.max_index(); ++ell) {
                std::int64_t v = bv.at(ell);
                if (v) table.add(j - ell - 1, j, v);
            }
            int i = j - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - j + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int k = i + 1; k < j; ++k)
                idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
        }
    }
    return table;
}

KPolynomial k_polynomial(const BettiTable& b) {
    if (b.partial)
        throw PartialTableError("the K-polynomial needs a complete Betti table");
    KPolynomial k;
    for (const auto& [key, val] : b.entries()) {
        auto [i, j] = key;
        if (j >= static_cast<int>(k.coeff.size()))
            k.coeff.resize(static_cast<std::size_t>(j) + 1, 0);
        k.coeff[static_cast<std::size_t>(j)] += (i % 2) ? -val : val;
    }
    while (!k.coeff.empty() && k.coeff.back() == 0) k.coeff.pop_back();
    return k;
}

std::vector<std::int64_t> hilbert_from_k_polynomial(const KPolynomial& k, int num_vars,
                                                    int up_to) {
    if (num_vars < 0 || up_to < 0)
        throw ParameterError("hilbert_from_k_polynomial: negative argument");
    std::vector<std::int64_t> h(static_cast<std::size_t>(up_to) + 1, 0);
    for (int q = 0; q <= up_to; ++q) {
        std::int64_t acc = 0;
        for (int j = 0; j < static_cast<int>(k.coeff.size()) && j <= q; ++j) {
            // coefficient of t^{q-j} in 1/(1-t)^num_vars
            std::int64_t expand = (num_vars == 0)
                                      ? (j == q ? 1 : 0)
                                      : binomial(num_vars - 1 + q - j, num_vars - 1);
            acc += k.coeff[static_cast<std::size_t>(j)] * expand;
        }
        h[static_cast<std::size_t>(q)] = acc;
    }
    return h;
}

} // namespace reisner
