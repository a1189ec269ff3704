#include "ccg/cayley.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <nlohmann/json.hpp>

namespace ccg {

bool ConnectionSet::contains(const Vec& v) const {
    return std::binary_search(elems.begin(), elems.end(), v);
}

static ConnectionSet from_sorted(const FieldSpec& f, std::vector<Vec> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return ConnectionSet{f, std::move(elems)};
}

ConnectionSet make_connection_set(const FieldSpec& f,
                                  std::span<const Vec> generators,
                                  bool close) {
    std::vector<Vec> elems;
    for (const Vec& g : generators) {
        if (static_cast<int>(g.size()) != f.d)
            throw std::invalid_argument("generator length does not match d");
        if (is_zero(g))
            throw std::invalid_argument(
                "invalid connection set: contains the zero vector");
        elems.push_back(g);
        if (close) elems.push_back(negate(f, g));
    }
    ConnectionSet c = from_sorted(f, std::move(elems));
    if (!close) {
        for (const Vec& v : c.elems) {
            Vec nv = negate(f, v);
            if (!c.contains(nv)) {
                std::string coords;
                for (int x : v) coords += std::to_string(x) + " ";
                throw std::invalid_argument(
                    "connection set is not symmetric: negation of ( " + coords +
                    ") is missing");
            }
        }
    }
    return c;
}

Vec projective_representative(const FieldSpec& f, const Vec& v) {
    if (is_zero(v))
        throw std::invalid_argument("zero vector has no projective point");
    int lead = 0;
    while (v[lead] == 0) ++lead;
    return scale(f, mod_inverse(v[lead], f.p), v);
}

ConnectionSet projective_expand(const FieldSpec& f,
                                std::span<const Vec> lines) {
    if (f.p == 2)
        throw std::invalid_argument("projective input requires odd p");
    std::vector<Vec> reps;
    for (const Vec& line : lines) {
        if (static_cast<int>(line.size()) != f.d)
            throw std::invalid_argument("line length does not match d");
        reps.push_back(projective_representative(f, line));
    }
    std::vector<Vec> sorted = reps;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate projective line supplied");
    std::vector<Vec> elems;
    for (const Vec& rep : reps)
        for (int s = 1; s < f.p; ++s) elems.push_back(scale(f, s, rep));
    return from_sorted(f, std::move(elems));
}

ConnectionSet complement_connection_set(const ConnectionSet& c) {
    const FieldSpec& f = c.field;
    std::vector<Vec> elems;
    for (long long n = 1; n < f.order(); ++n) {
        Vec v = vec_at(f, n);
        if (!c.contains(v)) elems.push_back(std::move(v));
    }
    return ConnectionSet{f, std::move(elems)};
}

bool adjacent(const ConnectionSet& c, const Vec& x, const Vec& y) {
    return c.contains(sub(c.field, x, y));
}

std::vector<std::vector<long long>> components(const ConnectionSet& c,
                                               long long cap) {
    const FieldSpec& f = c.field;
    if (f.order() > cap)
        throw resource_limit_error("materialization cap " +
                                   std::to_string(cap) + " exceeded: p^d = " +
                                   std::to_string(f.order()));
    Subspace b = span(f, std::span<const Vec>(c.elems));
    std::vector<std::vector<long long>> parts;
    std::vector<bool> seen(f.order(), false);
    std::vector<Vec> members = subspace_elements(b);
    for (long long n = 0; n < f.order(); ++n) {
        if (seen[n]) continue;
        Vec rep = vec_at(f, n);
        std::vector<long long> part;
        for (const Vec& m : members) {
            long long idx = vec_index(f, add(f, rep, m));
            seen[idx] = true;
            part.push_back(idx);
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

Graph::Graph(int n_) : n(n_), words((n_ + 63) / 64), bits((size_t)n_ * ((n_ + 63) / 64), 0) {}

void Graph::add_edge(int u, int v) {
    row(u)[v >> 6] |= uint64_t{1} << (v & 63);
    row(v)[u >> 6] |= uint64_t{1} << (u & 63);
}

int Graph::degree(int u) const {
    int deg = 0;
    for (int w = 0; w < words; ++w) deg += std::popcount(row(u)[w]);
    return deg;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int u = 0; u < n; ++u) total += degree(u);
    return total / 2;
}

bool Graph::is_complete() const {
    return edge_count() == static_cast<long long>(n) * (n - 1) / 2;
}

bool Graph::has_edge() const { return edge_count() > 0; }

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph g(static_cast<int>(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (adj(verts[a], verts[b]))
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

Graph Graph::complement() const {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!adj(u, v)) g.add_edge(u, v);
    return g;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> deg(n);
    for (int u = 0; u < n; ++u) deg[u] = degree(u);
    std::sort(deg.begin(), deg.end());
    return deg;
}

Graph materialize(const ConnectionSet& c, long long cap) {
    const FieldSpec& f = c.field;
    if (f.order() > cap)
        throw resource_limit_error("materialization cap " +
                                   std::to_string(cap) + " exceeded: p^d = " +
                                   std::to_string(f.order()));
    Graph g(static_cast<int>(f.order()));
    for (long long u = 0; u < f.order(); ++u) {
        Vec x = vec_at(f, u);
        for (const Vec& e : c.elems) {
            long long v = vec_index(f, add(f, x, e));
            if (v > u) g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    return g;
}

ConnectionSet parse_connection_document(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw std::invalid_argument("document must be a JSON object");
    if (!doc.contains("p") || !doc.contains("d") || !doc.contains("generators"))
        throw std::invalid_argument(
            "document requires fields p, d and generators");
    if (!doc["p"].is_number_integer() || !doc["d"].is_number_integer())
        throw std::invalid_argument("p and d must be integers");
    FieldSpec f(doc["p"].get<int>(), doc["d"].get<int>());

    bool close = doc.value("close_under_negation", true);
    bool projective = doc.value("projective", false);

    if (!doc["generators"].is_array())
        throw std::invalid_argument("generators must be an array");
    std::vector<Vec> gens;
    for (const auto& row : doc["generators"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != f.d)
            throw std::invalid_argument(
                "each generator must be an integer array of length d");
        Vec v;
        for (const auto& entry : row) {
            if (!entry.is_number_integer())
                throw std::invalid_argument("coordinates must be integers");
            int x = entry.get<int>();
            if (x < 0 || x >= f.p)
                throw std::invalid_argument(
                    "coordinate " + std::to_string(x) +
                    " outside [0, p-1]");
            v.push_back(x);
        }
        gens.push_back(std::move(v));
    }

    if (projective) {
        if (f.p == 2)
            throw std::invalid_argument("projective input requires odd p");
        return projective_expand(f, std::span<const Vec>(gens));
    }
    return make_connection_set(f, std::span<const Vec>(gens), close);
}

ConnectionSet load_connection_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);  // throws parse_error
    return parse_connection_document(doc);
}

}  // namespace ccg
