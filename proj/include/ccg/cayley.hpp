#pragma once

#include "ccg/gfp.hpp"

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace ccg {

/// Symmetric, zero-free subset of (F_p)^d \ {0}. Elements kept sorted.
struct ConnectionSet {
    FieldSpec field;
    std::vector<Vec> elems;

    int size() const { return static_cast<int>(elems.size()); }
    bool contains(const Vec& v) const;
};

/// With close=true the generators are closed under negation; a supplied zero
/// vector is always an error. With close=false the set must already satisfy
/// -C = C.
ConnectionSet make_connection_set(const FieldSpec& f,
                                  std::span<const Vec> generators, bool close);

/// Scale so the first nonzero coordinate is 1 (p odd).
Vec projective_representative(const FieldSpec& f, const Vec& v);

/// All nonzero scalar multiples of the given projective line representatives.
/// |result| = (p-1) * lines. Duplicate lines are rejected.
ConnectionSet projective_expand(const FieldSpec& f, std::span<const Vec> lines);

ConnectionSet complement_connection_set(const ConnectionSet& c);

bool adjacent(const ConnectionSet& c, const Vec& x, const Vec& y);

/// Partition of (F_p)^d into cosets of span(C), as sorted vertex indices.
/// The graph is connected iff there is one part.
std::vector<std::vector<long long>> components(const ConnectionSet& c,
                                               long long cap = 4096);

/// Adjacency bitmap, one row of words per vertex.
struct Graph {
    int n = 0;
    int words = 0;
    std::vector<uint64_t> bits;

    Graph() = default;
    explicit Graph(int n_);

    const uint64_t* row(int u) const { return bits.data() + (size_t)u * words; }
    uint64_t* row(int u) { return bits.data() + (size_t)u * words; }
    bool adj(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v);
    int degree(int u) const;
    long long edge_count() const;
    bool is_complete() const;
    bool has_edge() const;

    /// Induced subgraph; vertex t of the result is verts[t].
    Graph induced(const std::vector<int>& verts) const;
    Graph complement() const;
    std::vector<int> degree_sequence() const;  // sorted
};

Graph materialize(const ConnectionSet& c, long long cap = 4096);

/// Connection-set document: {"p":…, "d":…, "generators":[[…]…],
/// "close_under_negation":bool (default true), "projective":bool}.
/// Coordinates outside [0, p-1] are rejected.
ConnectionSet parse_connection_document(const nlohmann::json& doc);
ConnectionSet load_connection_document(const std::string& path);

}  // namespace ccg
