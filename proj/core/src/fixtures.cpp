#include <algorithm>

#include "reisner/verify.hpp"

namespace reisner {

namespace {

ExpectedFact fact(std::string what, std::uint32_t p, Json value, std::string source) {
    ExpectedFact f;
    f.what = std::move(what);
    f.p = p;
    f.value = std::move(value);
    f.source = std::move(source);
    return f;
}

ExpectedFact entry_fact(int i, int j, std::uint32_t p, std::int64_t value,
                        std::string source) {
    ExpectedFact f;
    f.what = "betti_entry";
    f.p = p;
    f.args = Json::array({i, j});
    f.value = value;
    f.source = std::move(source);
    return f;
}

SimplicialComplex two_triangles() {
    return build_complex({{1, 2, 3}, {3, 4, 5}});
}

// Nine tetrahedra on six vertices; every triple of vertices is a face, the
// h-vector ends in -1, and the level is exactly 2.
SimplicialComplex grid_complex_s2() {
    return build_complex({{1, 2, 3, 5},
                          {1, 2, 4, 5},
                          {1, 2, 4, 6},
                          {1, 3, 4, 5},
                          {1, 3, 4, 6},
                          {1, 3, 5, 6},
                          {2, 3, 4, 5},
                          {2, 3, 5, 6},
                          {2, 4, 5, 6}});
}

// Same facet list with {2,3,4,5} replaced by {2,3,4,6}: one level higher,
// still not Cohen-Macaulay.
SimplicialComplex grid_complex_s3() {
    return build_complex({{1, 2, 3, 5},
                          {1, 2, 4, 5},
                          {1, 2, 4, 6},
                          {1, 3, 4, 5},
                          {1, 3, 4, 6},
                          {1, 3, 5, 6},
                          {2, 3, 4, 6},
                          {2, 3, 5, 6},
                          {2, 4, 5, 6}});
}

// Four triangles glued corner to corner in a ring.
SimplicialComplex triangle_ring() {
    return build_complex({{1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {7, 8, 1}});
}

// The 7-vertex triangulation of the torus: orbits of {1,2,4} and {1,3,4}
// under the cyclic shift v -> v+1 (mod 7).
SimplicialComplex torus7() {
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) {
        auto w = [&](int off) { return (i + off) % 7 + 1; };
        facets.push_back({w(0), w(1), w(3)});
        facets.push_back({w(0), w(2), w(3)});
    }
    return build_complex(facets);
}

// The 6-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane6() {
    return build_complex({{1, 2, 3},
                          {1, 2, 4},
                          {1, 3, 5},
                          {1, 4, 6},
                          {1, 5, 6},
                          {2, 3, 6},
                          {2, 4, 5},
                          {2, 5, 6},
                          {3, 4, 5},
                          {3, 4, 6}});
}

// Boundary of the octahedron: opposite pairs (1,2), (3,4), (5,6).
SimplicialComplex cross_polytope3() {
    std::vector<std::vector<int>> facets;
    for (int a = 1; a <= 2; ++a)
        for (int b = 3; b <= 4; ++b)
            for (int c = 5; c <= 6; ++c) facets.push_back({a, b, c});
    return build_complex(facets);
}

Fixture make_fixture(const std::string& name) {
    Fixture fx;
    fx.name = name;
    if (name == "delta-a") {
        fx.summary = "two triangles glued at one vertex";
        fx.complex = two_triangles();
        fx.expected = {
            fact("pure", 0, true, "definition"),
            fact("strongly_connected", 0, false, "definition"),
            fact("h_vector", 0, Json::array({1, 2, -1, 0}), "reference"),
            fact("f_vector", 0, Json::array({1, 5, 6, 2}), "definition"),
            fact("serre_level", 2, 1, "reference"),
            fact("serre_level", 3, 1, "reference"),
            fact("witness_face", 2, Json::array({3}), "reference"),
            fact("witness_face", 3, Json::array({3}), "reference"),
            fact("witness_index", 2, 0, "reference"),
            fact("witness_index", 3, 0, "reference"),
            fact("depth", 2, 2, "reference"),
            fact("depth", 3, 2, "reference"),
            fact("cohen_macaulay", 2, false, "reference"),
        };
    } else if (name == "delta-s2") {
        fx.summary = "level-2 but not level-3 complex on six vertices";
        fx.complex = grid_complex_s2();
        fx.expected = {
            fact("f_vector", 0, Json::array({1, 6, 15, 20, 9}), "reference"),
            fact("h_vector", 0, Json::array({1, 2, 3, 4, -1}), "reference"),
            fact("serre_level", 2, 2, "reference"),
            fact("serre_level", 3, 2, "reference"),
            fact("witness_face", 2, Json::array({6}), "reference"),
            fact("witness_index", 2, 1, "reference"),
            fact("witness_face", 3, Json::array({6}), "reference"),
            fact("witness_index", 3, 1, "reference"),
            fact("cohen_macaulay", 2, false, "reference"),
            fact("cohen_macaulay", 3, false, "reference"),
            fact("pure", 0, true, "definition"),
        };
    } else if (name == "gamma-s3") {
        fx.summary = "level-3 non-Cohen-Macaulay complex on six vertices";
        fx.complex = grid_complex_s3();
        fx.expected = {
            fact("f_vector", 0, Json::array({1, 6, 15, 20, 9}), "reference"),
            fact("h_vector", 0, Json::array({1, 2, 3, 4, -1}), "reference"),
            fact("serre_level", 2, 3, "reference"),
            fact("serre_level", 3, 3, "reference"),
            fact("cohen_macaulay", 2, false, "reference"),
            fact("cohen_macaulay", 3, false, "reference"),
            fact("pure", 0, true, "definition"),
        };
    } else if (name == "delta4") {
        fx.summary = "ring of four triangles; sixteen quadratic nonfaces";
        fx.complex = triangle_ring();
        fx.expected = {
            fact("f_vector", 0, Json::array({1, 8, 12, 4}), "definition"),
            fact("h_vector", 0, Json::array({1, 5, -1, -1}), "oracle"),
            fact("codim", 0, 5, "reference"),
            fact("minimal_nonface_count_deg2", 0, 16, "reference"),
            entry_fact(1, 2, 2, 16, "reference"),
            entry_fact(1, 2, 3, 16, "reference"),
            fact("serre_level", 2, 1, "reference"),
            fact("serre_level", 3, 1, "reference"),
            fact("witness_face", 2, Json::array({1}), "oracle"),
            fact("witness_index", 2, 0, "oracle"),
        };
    } else if (name == "torus7") {
        fx.summary = "7-vertex torus; homology below the top dimension";
        fx.complex = torus7();
        fx.expected = {
            fact("f_vector", 0, Json::array({1, 7, 21, 14}), "definition"),
            fact("pseudomanifold", 0, true, "oracle"),
            fact("normal_pseudomanifold", 0, true, "oracle"),
            fact("reduced_betti", 2, Json::array({0, 0, 2, 1}), "oracle"),
            fact("reduced_betti", 3, Json::array({0, 0, 2, 1}), "oracle"),
            fact("serre_level", 2, 2, "oracle"),
            fact("serre_level", 3, 2, "oracle"),
            fact("depth", 2, 2, "oracle"),
            fact("cohen_macaulay", 2, false, "oracle"),
        };
    } else if (name == "suspension-torus7") {
        fx.summary = "suspension of the 7-vertex torus; level 2 with torus links";
        fx.complex = suspension(torus7());
        fx.expected = {
            fact("serre_level", 2, 2, "reference"),
            fact("serre_level", 3, 2, "reference"),
            fact("normal_pseudomanifold", 0, true, "oracle"),
            fact("links_homology_spheres", 2, false, "reference"),
            fact("links_homology_spheres", 3, false, "reference"),
            fact("cohen_macaulay", 2, false, "oracle"),
            fact("depth", 2, 3, "oracle"),
            fact("depth", 3, 3, "oracle"),
        };
    } else if (name == "projective-plane6") {
        fx.summary = "6-vertex projective plane; homology depends on the field";
        fx.complex = projective_plane6();
        fx.expected = {
            fact("f_vector", 0, Json::array({1, 6, 15, 10}), "definition"),
            fact("reduced_betti", 2, Json::array({0, 0, 1, 1}), "reference"),
            fact("reduced_betti", 3, Json::array({0, 0, 0, 0}), "reference"),
            fact("serre_level", 2, 2, "oracle"),
            fact("serre_level", 3, 3, "reference"),
            fact("depth", 2, 2, "oracle"),
            fact("cohen_macaulay", 2, false, "reference"),
            fact("cohen_macaulay", 3, true, "reference"),
            fact("pseudomanifold", 0, true, "oracle"),
        };
    } else if (name == "simplex-4") {
        fx.summary = "full simplex on four vertices";
        fx.complex = build_complex({{1, 2, 3, 4}});
        fx.expected = {
            fact("h_vector", 0, Json::array({1, 0, 0, 0, 0}), "definition"),
            fact("serre_level", 2, 4, "definition"),
            fact("serre_level", 3, 4, "definition"),
            fact("cohen_macaulay", 2, true, "definition"),
            fact("depth", 2, 4, "definition"),
        };
    } else if (name == "cross-polytope-3") {
        fx.summary = "boundary of the octahedron";
        fx.complex = cross_polytope3();
        fx.expected = {
            fact("f_vector", 0, Json::array({1, 6, 12, 8}), "definition"),
            fact("h_vector", 0, Json::array({1, 3, 3, 1}), "oracle"),
            fact("reduced_betti", 2, Json::array({0, 0, 0, 1}), "reference"),
            fact("reduced_betti", 3, Json::array({0, 0, 0, 1}), "reference"),
            fact("serre_level", 2, 3, "oracle"),
            fact("cohen_macaulay", 2, true, "reference"),
            fact("cohen_macaulay", 3, true, "reference"),
            fact("pseudomanifold", 0, true, "definition"),
            fact("normal_pseudomanifold", 0, true, "oracle"),
            fact("links_homology_spheres", 2, true, "oracle"),
        };
    } else {
        throw ParameterError("unknown fixture \"" + name + "\"");
    }
    return fx;
}

} // namespace

std::vector<std::string> fixture_names() {
    return {"delta-a",         "delta-s2",
            "gamma-s3",        "delta4",
            "torus7",          "suspension-torus7",
            "projective-plane6", "simplex-4",
            "cross-polytope-3"};
}

Fixture fixture(const std::string& name) { return make_fixture(name); }

} // namespace reisner
