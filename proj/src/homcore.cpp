#include "ccg/homcore.hpp"

#include "ccg/gfp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ccg {

bool VertexMap::is_idempotent() const {
    for (int v = 0; v < size(); ++v)
        if (img[img[v]] != img[v]) return false;
    return true;
}

bool VertexMap::is_injective() const {
    std::vector<bool> seen(img.size(), false);
    for (int w : img) {
        if (seen[w]) return false;
        seen[w] = true;
    }
    return true;
}

std::vector<int> VertexMap::image() const {
    std::vector<int> s = img;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

VertexMap identity_vertex_map(int n) {
    VertexMap f;
    f.img.resize(n);
    std::iota(f.img.begin(), f.img.end(), 0);
    return f;
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
    VertexMap f;
    f.img.resize(inner.size());
    for (int v = 0; v < inner.size(); ++v) f.img[v] = outer.img[inner.img[v]];
    return f;
}

bool is_homomorphism(const VertexMap& f, const Graph& x, const Graph& y) {
    if (f.size() != x.n)
        throw std::invalid_argument("map size does not match the domain graph");
    for (int u = 0; u < x.n; ++u) {
        for (int v = u + 1; v < x.n; ++v) {
            if (!x.adj(u, v)) continue;
            if (f.img[u] >= y.n || f.img[v] >= y.n) return false;
            if (!y.adj(f.img[u], f.img[v])) return false;
        }
    }
    return true;
}

namespace {

// Backtracking endomorphism search with forward checking. Domains are one
// bitmap row per vertex; assigning v to w intersects every unassigned
// neighbour's domain with the neighbourhood of w.
struct HomSearch {
    const Graph& x;
    int n, words;
    std::vector<int> order;               // assignment order
    std::pair<int, int> collapse{-1, -1};  // require f(first) == f(second)
    std::vector<int> assign;
    std::vector<uint64_t> domain_stack;    // (n+1) levels of n rows

    explicit HomSearch(const Graph& g) : x(g), n(g.n), words(g.words) {
        assign.assign(n, -1);
        domain_stack.assign((size_t)(n + 1) * n * words, 0);
    }

    uint64_t* dom(int depth, int v) {
        return domain_stack.data() + ((size_t)depth * n + v) * words;
    }

    void init_domains() {
        uint64_t full = ~uint64_t{0};
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < words; ++w)
                dom(0, v)[w] =
                    (w == words - 1 && (n & 63)) ? (full >> (64 - (n & 63)))
                                                 : full;
    }

    bool run(std::vector<int>& out) { return rec(0, out); }

    bool rec(int depth, std::vector<int>& out) {
        if (depth == n) {
            out = assign;
            return true;
        }
        int v = order[depth];
        uint64_t* d = dom(depth, v);
        if (v == collapse.second) {
            // The partner is assigned earlier; images must coincide.
            int forced = assign[collapse.first];
            if (!((d[forced >> 6] >> (forced & 63)) & 1)) return false;
            return try_image(depth, v, forced, out);
        }
        for (int w = 0; w < words; ++w) {
            uint64_t bits = d[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                if (try_image(depth, v, w * 64 + b, out)) return true;
            }
        }
        return false;
    }

    bool try_image(int depth, int v, int image, std::vector<int>& out) {
        assign[v] = image;
        // Copy domains down and prune neighbours.
        const uint64_t* img_row = x.row(image);
        bool feasible = true;
        for (int t = 0; t < n && feasible; ++t) {
            uint64_t* next = dom(depth + 1, t);
            const uint64_t* cur = dom(depth, t);
            if (assign[t] < 0 && x.adj(v, t)) {
                uint64_t any = 0;
                for (int w = 0; w < words; ++w) {
                    next[w] = cur[w] & img_row[w];
                    any |= next[w];
                }
                if (!any) feasible = false;
            } else {
                std::copy(cur, cur + words, next);
            }
        }
        if (feasible && rec(depth + 1, out)) return true;
        assign[v] = -1;
        return false;
    }
};

std::vector<int> degree_order(const Graph& x) {
    std::vector<int> order(x.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = x.degree(a), db = x.degree(b);
        return da != db ? da > db : a < b;
    });
    return order;
}

}  // namespace

std::optional<VertexMap> find_endomorphism(const Graph& x, EndoConstraint c,
                                           int cap) {
    if (x.n > cap)
        throw resource_limit_error("endomorphism search cap " +
                                   std::to_string(cap) + " exceeded: |V| = " +
                                   std::to_string(x.n));
    if (x.n == 0) return c == EndoConstraint::Any ? std::optional<VertexMap>{VertexMap{}} : std::nullopt;

    if (c == EndoConstraint::Any) {
        HomSearch s(x);
        s.order = degree_order(x);
        s.init_domains();
        std::vector<int> out;
        if (s.run(out)) return VertexMap{out};
        return std::nullopt;
    }

    // A non-injective endomorphism must identify some non-adjacent pair
    // (identifying an edge would create a loop), and for finite graphs a
    // non-injective endomorphism is exactly one with strictly smaller image.
    for (int u = 0; u < x.n; ++u) {
        for (int v = u + 1; v < x.n; ++v) {
            if (x.adj(u, v)) continue;
            HomSearch s(x);
            s.collapse = {u, v};
            std::vector<int> rest = degree_order(x);
            std::erase(rest, u);
            std::erase(rest, v);
            s.order = {u, v};
            s.order.insert(s.order.end(), rest.begin(), rest.end());
            s.init_domains();
            std::vector<int> out;
            if (s.run(out)) return VertexMap{out};
        }
    }
    return std::nullopt;
}

VertexMap idempotent_power(const VertexMap& f) {
    const int n = f.size();
    if (n == 0) return f;
    // Tail: iterate until the image stabilises; f then permutes it.
    VertexMap power = f;
    long long tail = 1;
    std::vector<int> img = power.image();
    while (true) {
        VertexMap next = compose(f, power);
        std::vector<int> next_img = next.image();
        if (next_img == img) break;
        power = std::move(next);
        img = std::move(next_img);
        ++tail;
    }
    // Cycle structure of f on the stable image.
    long long period = 1;
    std::vector<bool> seen(n, false);
    for (int start : img) {
        if (seen[start]) continue;
        long long len = 0;
        int v = start;
        do {
            seen[v] = true;
            v = f.img[v];
            ++len;
        } while (v != start);
        period = std::lcm(period, len);
    }
    long long k = period * ((tail + period - 1) / period);
    if (k == 0) k = period;

    VertexMap result = identity_vertex_map(n);
    VertexMap base = f;
    long long e = k;
    while (e > 0) {
        if (e & 1) result = compose(base, result);
        base = compose(base, base);
        e >>= 1;
    }
    return result;
}

CoreCertificate compute_core(const Graph& x, int cap) {
    if (x.n > cap)
        throw resource_limit_error("core search cap " + std::to_string(cap) +
                                   " exceeded: |V| = " + std::to_string(x.n));
    VertexMap r = identity_vertex_map(x.n);
    std::vector<int> s(x.n);
    std::iota(s.begin(), s.end(), 0);
    int folds = 0;
    while (true) {
        Graph y = x.induced(s);
        std::optional<VertexMap> e =
            find_endomorphism(y, EndoConstraint::NonInjective, cap);
        if (!e) break;
        std::vector<int> pos(x.n, -1);
        for (size_t t = 0; t < s.size(); ++t) pos[s[t]] = static_cast<int>(t);
        VertexMap f;
        f.img.resize(x.n);
        for (int v = 0; v < x.n; ++v) f.img[v] = s[e->img[pos[r.img[v]]]];
        r = idempotent_power(f);
        s = r.image();
        ++folds;
    }
    CoreCertificate cert;
    cert.core_vertices = s;
    cert.retraction = r;
    Graph y = x.induced(s);
    if (y.is_complete())
        cert.kind = CoreCertificate::Kind::Complete;
    else if (static_cast<int>(s.size()) == x.n)
        cert.kind = CoreCertificate::Kind::Self;
    else
        cert.kind = CoreCertificate::Kind::General;
    cert.evidence = "folds=" + std::to_string(folds) +
                    " order=" + std::to_string(s.size()) +
                    (cert.kind == CoreCertificate::Kind::Complete
                         ? " complete"
                         : " exhaustive endomorphism search found no further fold");
    return cert;
}

bool is_core(const Graph& x, int cap) {
    return !find_endomorphism(x, EndoConstraint::NonInjective, cap).has_value();
}

namespace {

struct CliqueSolver {
    const Graph& x;
    int words;
    std::vector<int> best, current;

    explicit CliqueSolver(const Graph& g) : x(g), words(g.words) {}

    void expand(std::vector<uint64_t>& p) {
        // Greedy colouring bound, Tomita-style ordering.
        std::vector<int> verts, bound;
        std::vector<uint64_t> uncolored = p;
        int color = 0;
        auto any = [&](const std::vector<uint64_t>& bs) {
            for (uint64_t w : bs)
                if (w) return true;
            return false;
        };
        while (any(uncolored)) {
            ++color;
            std::vector<uint64_t> avail = uncolored;
            while (any(avail)) {
                int v = -1;
                for (int w = 0; w < words; ++w)
                    if (avail[w]) {
                        v = w * 64 + std::countr_zero(avail[w]);
                        break;
                    }
                avail[v >> 6] &= ~(uint64_t{1} << (v & 63));
                uncolored[v >> 6] &= ~(uint64_t{1} << (v & 63));
                for (int w = 0; w < words; ++w) avail[w] &= ~x.row(v)[w];
                verts.push_back(v);
                bound.push_back(color);
            }
        }
        for (int t = static_cast<int>(verts.size()) - 1; t >= 0; --t) {
            if (current.size() + bound[t] <= best.size()) return;
            int v = verts[t];
            std::vector<uint64_t> next(words);
            bool nonempty = false;
            for (int w = 0; w < words; ++w) {
                next[w] = p[w] & x.row(v)[w];
                nonempty |= next[w] != 0;
            }
            current.push_back(v);
            if (!nonempty) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
            p[v >> 6] &= ~(uint64_t{1} << (v & 63));
        }
    }
};

}  // namespace

std::vector<int> maximum_clique(const Graph& x, int cap) {
    if (x.n > cap)
        throw resource_limit_error("clique search cap " + std::to_string(cap) +
                                   " exceeded: |V| = " + std::to_string(x.n));
    if (x.n == 0) return {};
    CliqueSolver solver(x);
    std::vector<uint64_t> p(x.words, 0);
    for (int v = 0; v < x.n; ++v) p[v >> 6] |= uint64_t{1} << (v & 63);
    solver.expand(p);
    std::sort(solver.best.begin(), solver.best.end());
    return solver.best;
}

int clique_number(const Graph& x, int cap) {
    if (x.n == 0) return 0;
    return static_cast<int>(maximum_clique(x, cap).size());
}

namespace {

struct ColorSolver {
    const Graph& x;
    int k;
    std::vector<int> color;

    ColorSolver(const Graph& g, int k_) : x(g), k(k_), color(g.n, -1) {}

    bool rec(int colored, int used) {
        if (colored == x.n) return true;
        // DSATUR vertex choice: max saturation, then max degree, then index.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < x.n; ++v) {
            if (color[v] >= 0) continue;
            uint64_t satmask[2] = {0, 0};  // k <= 128 in practice
            int sat = 0;
            for (int u = 0; u < x.n; ++u) {
                if (color[u] >= 0 && x.adj(u, v)) {
                    uint64_t bit = uint64_t{1} << (color[u] & 63);
                    int w = color[u] >> 6;
                    if (!(satmask[w] & bit)) {
                        satmask[w] |= bit;
                        ++sat;
                    }
                }
            }
            int deg = x.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int limit = std::min(k - 1, used);  // at most one fresh colour
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int u = 0; u < x.n && ok; ++u)
                if (color[u] == c && x.adj(u, pick)) ok = false;
            if (!ok) continue;
            color[pick] = c;
            if (rec(colored + 1, std::max(used, c + 1))) return true;
            color[pick] = -1;
        }
        return false;
    }
};

}  // namespace

bool has_proper_coloring(const Graph& x, int k, int cap) {
    if (x.n > cap)
        throw resource_limit_error("colouring search cap " +
                                   std::to_string(cap) + " exceeded: |V| = " +
                                   std::to_string(x.n));
    if (k < 0) throw std::invalid_argument("colour count must be >= 0");
    if (x.n == 0) return true;
    if (k == 0) return false;
    if (k > 127) throw std::invalid_argument("colour count too large");
    std::vector<int> clique = maximum_clique(x, cap);
    if (static_cast<int>(clique.size()) > k) return false;
    ColorSolver solver(x, k);
    for (size_t t = 0; t < clique.size(); ++t)
        solver.color[clique[t]] = static_cast<int>(t);
    return solver.rec(static_cast<int>(clique.size()),
                      static_cast<int>(clique.size()));
}

std::optional<int> chromatic_number(const Graph& x, int limit, int cap) {
    if (x.n == 0) return 0;
    int lo = std::max(1, clique_number(x, cap));
    for (int t = lo; t <= limit; ++t)
        if (has_proper_coloring(x, t, cap)) return t;
    return std::nullopt;
}

bool nine_vertex_transitive_chromatic_bound() {
    static const bool verified = [] {
        // Cayley graphs on Z_3^2: unions of the 4 projective lines.
        FieldSpec f(3, 2);
        std::vector<Vec> lines = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<Vec> chosen;
            for (int t = 0; t < 4; ++t)
                if (mask & (1 << t)) chosen.push_back(lines[t]);
            Graph g = materialize(
                projective_expand(f, std::span<const Vec>(chosen)));
            if (!g.is_complete() && !has_proper_coloring(g, 5)) return false;
        }
        // Circulants on Z_9: unions of the 4 pairs {±1},{±2},{±3},{±4}.
        for (int mask = 0; mask < 16; ++mask) {
            Graph g(9);
            for (int t = 1; t <= 4; ++t) {
                if (!(mask & (1 << (t - 1)))) continue;
                for (int u = 0; u < 9; ++u) g.add_edge(u, (u + t) % 9);
            }
            if (!g.is_complete() && !has_proper_coloring(g, 5)) return false;
        }
        return true;
    }();
    return verified;
}

std::optional<CoreCertificate> certify_core_by_invariants(
    const ConnectionSet& c, long long materialize_cap, int color_tests_budget) {
    const FieldSpec& f = c.field;
    Graph x = materialize(c, materialize_cap);
    const int n = x.n;
    const int sub_cap = std::max(64, n);

    if (n == 1 || !x.has_edge()) {
        if (n == 1) {
            CoreCertificate cert;
            cert.core_vertices = {0};
            cert.retraction = identity_vertex_map(1);
            cert.kind = CoreCertificate::Kind::Self;
            cert.evidence = "single vertex";
            return cert;
        }
        return std::nullopt;  // edgeless graphs fold to a point
    }

    int omega = clique_number(x, sub_cap);
    int chromatic_lb = omega;  // chi >= omega
    std::optional<int> exact_chi;

    std::vector<long long> candidates;  // proper divisor orders p^e, e < d
    long long m = 1;
    for (int e = 0; e < f.d; ++e) {
        candidates.push_back(m);
        m *= f.p;
    }

    auto all_eliminated = [&]() {
        for (long long order : candidates) {
            if (order == 1) continue;  // killed: the graph has an edge
            bool complete_dead = (omega != order) || (chromatic_lb > order) ||
                                 (exact_chi && *exact_chi != order);
            bool noncomplete_dead =
                (chromatic_lb >= order) ||
                (order == 9 && chromatic_lb > 5 &&
                 nine_vertex_transitive_chromatic_bound());
            if (!(complete_dead && noncomplete_dead)) return false;
        }
        return true;
    };

    while (!all_eliminated()) {
        if (exact_chi || color_tests_budget-- <= 0) return std::nullopt;
        if (has_proper_coloring(x, chromatic_lb, sub_cap))
            exact_chi = chromatic_lb;
        else
            ++chromatic_lb;
    }

    CoreCertificate cert;
    cert.core_vertices.resize(n);
    std::iota(cert.core_vertices.begin(), cert.core_vertices.end(), 0);
    cert.retraction = identity_vertex_map(n);
    cert.kind = CoreCertificate::Kind::Self;
    cert.evidence =
        "clique=" + std::to_string(omega) +
        (exact_chi ? " chromatic=" + std::to_string(*exact_chi)
                   : " chromatic>=" + std::to_string(chromatic_lb)) +
        " all proper divisor core orders eliminated";
    return cert;
}

}  // namespace ccg
