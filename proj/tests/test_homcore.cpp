#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ccg/homcore.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

using namespace ccg;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);        // outer pentagon
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);              // spokes
    }
    return g;
}

// Mycielski construction over C_5: 11 vertices, triangle-free, chromatic 4.
Graph grotzsch() {
    Graph g(11);
    for (int v = 0; v < 5; ++v) {
        int next = (v + 1) % 5;
        g.add_edge(v, next);
        g.add_edge(5 + v, next);
        g.add_edge(5 + next, v);
        g.add_edge(5 + v, 10);
    }
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

ConnectionSet binary_set(int d, std::vector<Vec> gens) {
    FieldSpec f(2, d);
    return make_connection_set(f, std::span<const Vec>(gens), true);
}

/// Independent oracle: plain index-order backtracking, no degree ordering, no
/// forward checking.
bool oracle_noninjective_endo(const Graph& x) {
    int n = x.n;
    std::vector<int> img(n, -1);
    auto consistent = [&](int v) {
        for (int u = 0; u < v; ++u)
            if (x.adj(u, v) && !x.adj(img[u], img[v])) return false;
        return true;
    };
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == n) {
            std::vector<int> seen(img.begin(), img.end());
            std::sort(seen.begin(), seen.end());
            return std::adjacent_find(seen.begin(), seen.end()) != seen.end();
        }
        for (int w = 0; w < n; ++w) {
            img[v] = w;
            if (consistent(v) && go(v + 1)) return true;
        }
        img[v] = -1;
        return false;
    };
    return go(0);
}

Graph random_graph(int n, double density, std::mt19937& rng) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < density) g.add_edge(u, v);
    return g;
}

int oracle_clique_number(const Graph& x) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << x.n); ++mask) {
        int size = std::popcount(mask);
        if (size <= best) continue;
        bool clique = true;
        for (int u = 0; u < x.n && clique; ++u)
            for (int v = u + 1; v < x.n && clique; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !x.adj(u, v))
                    clique = false;
        if (clique) best = size;
    }
    return best;
}

bool oracle_colorable(const Graph& x, int k) {
    std::vector<int> color(x.n, 0);
    long long total = 1;
    for (int v = 0; v < x.n; ++v) total *= k;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int v = 0; v < x.n; ++v) {
            color[v] = (int)(c % k);
            c /= k;
        }
        bool proper = true;
        for (int u = 0; u < x.n && proper; ++u)
            for (int v = u + 1; v < x.n && proper; ++v)
                if (x.adj(u, v) && color[u] == color[v]) proper = false;
        if (proper) return true;
    }
    return false;
}

void check_certificate(const Graph& g, const CoreCertificate& cert) {
    REQUIRE(cert.retraction.size() == g.n);
    CHECK(is_homomorphism(cert.retraction, g, g));
    CHECK(cert.retraction.is_idempotent());
    CHECK(cert.retraction.image() == cert.core_vertices);
    Graph core = g.induced(cert.core_vertices);
    CHECK(is_core(core));
    if (cert.kind == CoreCertificate::Kind::Complete) CHECK(core.is_complete());
}

}  // namespace

TEST_CASE("vertex map basics") {
    VertexMap id = identity_vertex_map(4);
    CHECK(id.is_idempotent());
    CHECK(id.is_injective());
    CHECK(id.image() == std::vector<int>{0, 1, 2, 3});

    VertexMap fold{{0, 1, 0, 1}};
    CHECK(fold.is_idempotent());
    CHECK_FALSE(fold.is_injective());
    CHECK(fold.image() == std::vector<int>{0, 1});

    VertexMap rot{{1, 2, 0}};
    CHECK_FALSE(rot.is_idempotent());
    CHECK(compose(rot, rot) == VertexMap{{2, 0, 1}});
    CHECK(compose(rot, compose(rot, rot)) == identity_vertex_map(3));
}

TEST_CASE("is_homomorphism") {
    Graph c4 = cycle(4);
    CHECK(is_homomorphism(identity_vertex_map(4), c4, c4));
    CHECK(is_homomorphism(VertexMap{{0, 1, 0, 1}}, c4, c4));  // fold onto an edge
    CHECK_FALSE(is_homomorphism(VertexMap{{0, 0, 0, 0}}, c4, c4));  // loops needed
    // C_4 -> K_2 bipartition map.
    Graph k2 = complete(2);
    CHECK(is_homomorphism(VertexMap{{0, 1, 0, 1}}, c4, k2));
}

TEST_CASE("find_endomorphism agrees with the brute-force oracle") {
    std::vector<Graph> fixtures{cycle(4),  cycle(5),  cycle(6), cycle(7),
                                path(4),   path(5),   complete(3), complete(4),
                                complete_bipartite(2, 3), Graph(3)};
    std::mt19937 rng(31337);
    for (int t = 0; t < 40; ++t)
        fixtures.push_back(random_graph(4 + (int)(rng() % 4), 0.4, rng));
    for (const Graph& g : fixtures) {
        auto found = find_endomorphism(g, EndoConstraint::NonInjective);
        CHECK(found.has_value() == oracle_noninjective_endo(g));
        if (found) {
            CHECK(is_homomorphism(*found, g, g));
            CHECK_FALSE(found->is_injective());
        }
        auto any = find_endomorphism(g, EndoConstraint::Any);
        REQUIRE(any);
        CHECK(is_homomorphism(*any, g, g));
    }
}

TEST_CASE("idempotent_power") {
    // A 3-cycle on {0,1,2} with a tail 3 -> 0: powers cycle with period 3,
    // stable from the first step; the least idempotent power is f^3.
    VertexMap f{{1, 2, 0, 0}};
    VertexMap r = idempotent_power(f);
    CHECK(r.is_idempotent());
    CHECK(r == compose(f, compose(f, f)));

    // Pure tail: constant after one step.
    VertexMap g{{0, 0, 1, 2}};
    VertexMap rg = idempotent_power(g);
    CHECK(rg.is_idempotent());
    CHECK(rg.image() == std::vector<int>{0});

    CHECK(idempotent_power(identity_vertex_map(5)) == identity_vertex_map(5));
}

TEST_CASE("compute_core on bipartite graphs collapses to an edge") {
    for (Graph g : {cycle(4), cycle(6), path(5), complete_bipartite(3, 3)}) {
        CoreCertificate cert = compute_core(g);
        CHECK(cert.core_vertices.size() == 2);
        CHECK(cert.kind == CoreCertificate::Kind::Complete);
        check_certificate(g, cert);
    }
}

TEST_CASE("compute_core recognises cores") {
    for (Graph g : {complete(1), complete(4), cycle(5), cycle(7), petersen()}) {
        CoreCertificate cert = compute_core(g);
        CHECK((int)cert.core_vertices.size() == g.n);
        CHECK(cert.retraction == identity_vertex_map(g.n));
        CHECK(is_core(g));
    }
    CHECK_FALSE(is_core(cycle(6)));
    CHECK_FALSE(is_core(path(4)));
}

TEST_CASE("compute_core on Cayley graphs") {
    // Q_3 is bipartite: core K_2.
    Graph q3 = materialize(binary_set(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CoreCertificate cert = compute_core(q3);
    CHECK(cert.core_vertices.size() == 2);
    check_certificate(q3, cert);

    // The full set over F_3^2 gives K_9: a core already.
    FieldSpec f(3, 2);
    std::vector<Vec> all;
    for (long long n = 1; n < 9; ++n) all.push_back(vec_at(f, n));
    Graph k9 = materialize(make_connection_set(f, std::span<const Vec>(all), true));
    CHECK(k9.is_complete());
    CoreCertificate self = compute_core(k9);
    CHECK(self.core_vertices.size() == 9);
    CHECK(self.kind == CoreCertificate::Kind::Complete);
}

TEST_CASE("core order divides the group order on all Cayley fixtures") {
    // Every symmetric set over F_2^3 and over F_3^2.
    FieldSpec f2(2, 3);
    for (long long mask = 0; mask < (1 << 7); ++mask) {
        std::vector<Vec> gens;
        for (int b = 0; b < 7; ++b)
            if (mask >> b & 1) gens.push_back(vec_at(f2, b + 1));
        Graph g = materialize(
            make_connection_set(f2, std::span<const Vec>(gens), true));
        CoreCertificate cert = compute_core(g);
        CHECK(8 % cert.core_vertices.size() == 0);
        check_certificate(g, cert);
    }
    FieldSpec f3(3, 2);
    std::vector<Vec> reps{{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<Vec> gens;
        for (int b = 0; b < 4; ++b)
            if (mask >> b & 1) gens.push_back(reps[b]);
        Graph g = materialize(
            make_connection_set(f3, std::span<const Vec>(gens), true));
        CoreCertificate cert = compute_core(g);
        CHECK(9 % cert.core_vertices.size() == 0);
        check_certificate(g, cert);
    }
}

TEST_CASE("clique_number on known graphs") {
    CHECK(clique_number(complete(5)) == 5);
    CHECK(clique_number(cycle(5)) == 2);
    CHECK(clique_number(cycle(3)) == 3);
    CHECK(clique_number(petersen()) == 2);
    CHECK(clique_number(grotzsch()) == 2);
    CHECK(clique_number(complete_bipartite(4, 4)) == 2);
    CHECK(clique_number(Graph(6)) == 1);
    std::vector<int> mc = maximum_clique(complete(4));
    CHECK(mc.size() == 4);
}

TEST_CASE("clique_number agrees with subset enumeration (random)") {
    std::mt19937 rng(90210);
    for (int t = 0; t < 1000; ++t) {
        Graph g = random_graph(3 + (int)(rng() % 8), 0.2 + 0.06 * (rng() % 10),
                               rng);
        int expect = oracle_clique_number(g);
        CHECK(clique_number(g) == expect);
        std::vector<int> mc = maximum_clique(g);
        CHECK((int)mc.size() == expect);
        for (size_t a = 0; a < mc.size(); ++a)
            for (size_t b = a + 1; b < mc.size(); ++b)
                CHECK(g.adj(mc[a], mc[b]));
    }
}

TEST_CASE("coloring decisions on known graphs") {
    CHECK_FALSE(has_proper_coloring(cycle(5), 2));
    CHECK(has_proper_coloring(cycle(5), 3));
    CHECK_FALSE(has_proper_coloring(complete(6), 5));
    CHECK(has_proper_coloring(complete(6), 6));
    CHECK_FALSE(has_proper_coloring(petersen(), 2));
    CHECK(has_proper_coloring(petersen(), 3));
    CHECK_FALSE(has_proper_coloring(grotzsch(), 3));
    CHECK(has_proper_coloring(grotzsch(), 4));
    CHECK(has_proper_coloring(complete_bipartite(5, 5), 2));
    CHECK(has_proper_coloring(Graph(4), 1));

    CHECK(chromatic_number(petersen(), 10) == 3);
    CHECK(chromatic_number(grotzsch(), 10) == 4);
    CHECK(chromatic_number(complete(7), 10) == 7);
    CHECK_FALSE(chromatic_number(complete(7), 5).has_value());
}

TEST_CASE("has_proper_coloring agrees with exhaustive assignment (random)") {
    std::mt19937 rng(5551212);
    for (int t = 0; t < 1000; ++t) {
        Graph g = random_graph(3 + (int)(rng() % 5), 0.3 + 0.07 * (rng() % 8),
                               rng);
        int k = 1 + (int)(rng() % 4);
        CHECK(has_proper_coloring(g, k) == oracle_colorable(g, k));
    }
}

TEST_CASE("order-9 Cayley colouring catalogue") {
    CHECK(nine_vertex_transitive_chromatic_bound());
}

TEST_CASE("certify_core_by_invariants on easy cases") {
    // The 5-cycle as Cay(F_5, {1, 4}): the only candidate proper core order
    // is 1, killed by any edge.
    FieldSpec f5(5, 1);
    std::vector<Vec> pm1{{1}};
    ConnectionSet c5 = make_connection_set(f5, std::span<const Vec>(pm1), true);
    auto cert = certify_core_by_invariants(c5);
    REQUIRE(cert);
    CHECK(cert->kind == CoreCertificate::Kind::Self);
    CHECK(cert->core_vertices.size() == 5);

    // Q_3 is 2-colourable, so its core is K_2 and certification must refuse.
    CHECK_FALSE(certify_core_by_invariants(
        binary_set(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
}
