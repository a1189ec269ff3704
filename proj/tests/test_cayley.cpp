#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccg/cayley.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>

using namespace ccg;

namespace {

ConnectionSet cube_q3() {
    FieldSpec f(2, 3);
    std::vector<Vec> gens{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    return make_connection_set(f, gens, true);
}

ConnectionSet clebsch() {
    FieldSpec f(2, 4);
    std::vector<Vec> gens{{1, 0, 0, 0},
                          {0, 1, 0, 0},
                          {0, 0, 1, 0},
                          {0, 0, 0, 1},
                          {1, 1, 1, 1}};
    return make_connection_set(f, gens, true);
}

/// All symmetric zero-free subsets of (F_2)^d, as generator index masks.
std::vector<ConnectionSet> all_binary_sets(int d) {
    FieldSpec f(2, d);
    long long nz = f.order() - 1;
    std::vector<ConnectionSet> out;
    for (long long mask = 0; mask < (1LL << nz); ++mask) {
        std::vector<Vec> gens;
        for (long long b = 0; b < nz; ++b)
            if (mask >> b & 1) gens.push_back(vec_at(f, b + 1));
        out.push_back(make_connection_set(f, std::span<const Vec>(gens), true));
    }
    return out;
}

}  // namespace

TEST_CASE("make_connection_set closes under negation and sorts") {
    FieldSpec f(5, 2);
    std::vector<Vec> gens{{1, 2}};
    ConnectionSet c = make_connection_set(f, gens, true);
    CHECK(c.size() == 2);
    CHECK(c.elems == std::vector<Vec>{{1, 2}, {4, 3}});
    CHECK(c.contains(Vec{4, 3}));
    CHECK_FALSE(c.contains(Vec{2, 4}));
}

TEST_CASE("make_connection_set rejects zero and asymmetric input") {
    FieldSpec f(3, 2);
    std::vector<Vec> with_zero{{0, 0}};
    CHECK_THROWS_AS(make_connection_set(f, std::span<const Vec>(with_zero), true),
                    std::invalid_argument);
    std::vector<Vec> asym{{1, 0}};
    CHECK_THROWS_AS(make_connection_set(f, std::span<const Vec>(asym), false),
                    std::invalid_argument);
    // Explicitly symmetric input is fine without closing.
    std::vector<Vec> sym{{1, 0}, {2, 0}};
    CHECK_NOTHROW(make_connection_set(f, std::span<const Vec>(sym), false));
}

TEST_CASE("projective representatives and expansion") {
    FieldSpec f(3, 3);
    CHECK(projective_representative(f, Vec{0, 2, 1}) == Vec{0, 1, 2});
    CHECK(projective_representative(f, Vec{2, 0, 0}) == Vec{1, 0, 0});

    std::vector<Vec> lines{{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                           {1, 1, 0}, {1, 0, 1}, {1, 1, 1}};
    ConnectionSet c = projective_expand(f, std::span<const Vec>(lines));
    CHECK(c.size() == 12);  // (p-1) scalars per line
    for (const Vec& v : c.elems) CHECK(c.contains(negate(f, v)));

    FieldSpec g(5, 1);
    std::vector<Vec> one{{1}};
    CHECK(projective_expand(g, std::span<const Vec>(one)).size() == 4);

    std::vector<Vec> dup{{1, 0, 0}, {2, 0, 0}};  // same line twice
    CHECK_THROWS_AS(projective_expand(f, std::span<const Vec>(dup)),
                    std::invalid_argument);
}

TEST_CASE("complement_connection_set is an involution") {
    ConnectionSet c = clebsch();
    ConnectionSet cc = complement_connection_set(c);
    CHECK(cc.size() == 16 - 1 - 5);
    CHECK(complement_connection_set(cc).elems == c.elems);
    for (const Vec& v : cc.elems) CHECK_FALSE(c.contains(v));
}

TEST_CASE("materialize Q_3: 8 vertices, 12 edges, 3-regular") {
    Graph g = materialize(cube_q3());
    CHECK(g.n == 8);
    CHECK(g.edge_count() == 12);
    for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 3);
    // 000 ~ 001 but not 000 ~ 011.
    CHECK(g.adj(0, 1));
    CHECK_FALSE(g.adj(0, 3));
}

TEST_CASE("materialize Clebsch: 16 vertices, 40 edges, triangle-free") {
    Graph g = materialize(clebsch());
    CHECK(g.n == 16);
    CHECK(g.edge_count() == 40);
    for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 5);
    int triangles = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                if (g.adj(a, b) && g.adj(b, c) && g.adj(a, c)) ++triangles;
    CHECK(triangles == 0);
}

TEST_CASE("complete graph from the full connection set") {
    FieldSpec f(3, 1);
    std::vector<Vec> gens{{1}, {2}};
    Graph g = materialize(make_connection_set(f, std::span<const Vec>(gens), true));
    CHECK(g.n == 3);
    CHECK(g.is_complete());
}

TEST_CASE("materialize honours the vertex cap") {
    FieldSpec f(2, 13);
    std::vector<Vec> gens{unit_vector(f, 0)};
    ConnectionSet c = make_connection_set(f, std::span<const Vec>(gens), true);
    CHECK_THROWS_AS(materialize(c), resource_limit_error);
    CHECK_NOTHROW(materialize(c, 10000));
}

TEST_CASE("components are cosets of span(C)") {
    FieldSpec f(2, 3);
    std::vector<Vec> gens{{1, 0, 0}};
    ConnectionSet c = make_connection_set(f, std::span<const Vec>(gens), true);
    auto parts = components(c);
    CHECK(parts.size() == 4);
    for (const auto& part : parts) CHECK(part.size() == 2);

    CHECK(components(cube_q3()).size() == 1);
    FieldSpec g1(5, 1);
    std::vector<Vec> none;
    CHECK(components(make_connection_set(g1, std::span<const Vec>(none), true))
              .size() == 5);
}

TEST_CASE("graph helpers: induced, complement, degree_sequence") {
    Graph g = materialize(cube_q3());
    Graph sub = g.induced({0, 1, 2, 3});  // a 4-cycle 0-1-3-2
    CHECK(sub.n == 4);
    CHECK(sub.edge_count() == 4);
    Graph co = g.complement();
    CHECK(co.edge_count() == 8LL * 7 / 2 - 12);
    for (int v = 0; v < co.n; ++v) CHECK_FALSE(co.adj(v, v));
    std::vector<int> ds = g.degree_sequence();
    CHECK(ds == std::vector<int>(8, 3));
}

TEST_CASE("every binary connection set over F_2^3 gives a regular graph; "
          "complement graphs agree") {
    for (const ConnectionSet& c : all_binary_sets(3)) {
        Graph g = materialize(c);
        for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == c.size());
        Graph h = materialize(complement_connection_set(c));
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v)
                CHECK(h.adj(u, v) == !g.adj(u, v));
    }
}

TEST_CASE("adjacency is translation invariant (random)") {
    std::mt19937 rng(7);
    ConnectionSet c = clebsch();
    FieldSpec f = c.field;
    for (int trial = 0; trial < 1000; ++trial) {
        Vec x = vec_at(f, rng() % f.order());
        Vec y = vec_at(f, rng() % f.order());
        Vec t = vec_at(f, rng() % f.order());
        CHECK(adjacent(c, x, y) ==
              adjacent(c, add(f, x, t), add(f, y, t)));
    }
}

TEST_CASE("connection-set documents parse") {
    nlohmann::json doc{{"p", 2},
                       {"d", 4},
                       {"generators",
                        {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                         {0, 0, 0, 1}, {1, 1, 1, 1}}}};
    ConnectionSet c = parse_connection_document(doc);
    CHECK(c.field == FieldSpec(2, 4));
    CHECK(c.size() == 5);

    nlohmann::json proj{{"p", 3},
                        {"d", 2},
                        {"generators", {{1, 0}, {0, 1}}},
                        {"projective", true}};
    CHECK(parse_connection_document(proj).size() == 4);

    nlohmann::json raw{{"p", 5},
                       {"d", 1},
                       {"generators", {{2}, {3}}},
                       {"close_under_negation", false}};
    CHECK(parse_connection_document(raw).size() == 2);
}

TEST_CASE("connection-set documents reject bad input") {
    using nlohmann::json;
    CHECK_THROWS_AS(parse_connection_document(
                        json{{"p", 4}, {"d", 2}, {"generators", {{1, 0}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_connection_document(
                        json{{"p", 2}, {"d", 2}, {"generators", {{2, 0}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_connection_document(
                        json{{"p", 2}, {"d", 2}, {"generators", {{1}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_connection_document(
                        json{{"p", 2}, {"generators", {{1, 0}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_connection_document(
                        json{{"p", 2}, {"d", 2}, {"generators", {{0, 0}}}}),
                    std::invalid_argument);
    // Projective form is a p = 2 error: lines need p odd.
    CHECK_THROWS_AS(parse_connection_document(json{{"p", 2},
                                                   {"d", 2},
                                                   {"generators", {{1, 0}}},
                                                   {"projective", true}}),
                    std::invalid_argument);
}

TEST_CASE("load_connection_document round-trips through a file") {
    std::string path = "test_cayley_doc.json";
    {
        std::ofstream out(path);
        out << R"({"p": 2, "d": 3, "generators": [[1,0,0],[0,1,0],[0,0,1]]})";
    }
    ConnectionSet c = load_connection_document(path);
    CHECK(c.field == FieldSpec(2, 3));
    CHECK(c.size() == 3);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_connection_document("definitely_missing.json"),
                    std::invalid_argument);
}
