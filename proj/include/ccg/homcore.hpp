#pragma once

#include "ccg/cayley.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ccg {

struct VertexMap {
    std::vector<int> img;

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int v) const { return img[v]; }
    bool operator==(const VertexMap&) const = default;

    bool is_idempotent() const;
    bool is_injective() const;
    std::vector<int> image() const;  // sorted distinct
};

VertexMap identity_vertex_map(int n);
VertexMap compose(const VertexMap& outer, const VertexMap& inner);  // outer ∘ inner

bool is_homomorphism(const VertexMap& f, const Graph& x, const Graph& y);

enum class EndoConstraint { Any, NonInjective, ImageSmaller };

/// Exhaustive backtracking endomorphism search with forward checking.
/// Deterministic: vertices are assigned in descending-degree order (ties by
/// index) and images tried in increasing order, so the returned map is the
/// first in that fixed order. A "none" answer is exhaustive.
std::optional<VertexMap> find_endomorphism(const Graph& x, EndoConstraint c,
                                           int cap = 64);

/// Least power f^k that is idempotent, i.e. a retraction onto its image.
VertexMap idempotent_power(const VertexMap& f);

struct CoreCertificate {
    enum class Kind { Complete, Self, General };

    std::vector<int> core_vertices;  // sorted, in the parent graph
    VertexMap retraction;            // idempotent endomorphism onto them
    Kind kind = Kind::General;
    std::string evidence;
};

/// Core by iterated folding: find an image-shrinking endomorphism, take its
/// idempotent power, restrict, repeat.
CoreCertificate compute_core(const Graph& x, int cap = 64);

bool is_core(const Graph& x, int cap = 64);

/// Exact maximum clique (branch and bound with a greedy colouring bound).
int clique_number(const Graph& x, int cap = 64);
std::vector<int> maximum_clique(const Graph& x, int cap = 64);

/// Exact decision: does a proper k-colouring exist? Backtracking with the
/// first maximum clique pre-coloured.
bool has_proper_coloring(const Graph& x, int k, int cap = 64);

/// Smallest t <= limit with a proper t-colouring, or nullopt if none found
/// within the limit.
std::optional<int> chromatic_number(const Graph& x, int limit, int cap = 64);

/// Checked once and cached: every non-complete Cayley graph on a group of
/// order 9 (both Z_3^2 and Z_9) has chromatic number at most 5. All
/// 9-vertex vertex-transitive graphs are Cayley graphs on one of these two
/// groups, so this covers every candidate 9-vertex core.
bool nine_vertex_transitive_chromatic_bound();

/// The divisibility/clique/colouring invariant chain for a vertex-transitive
/// Cayley graph. Returns a kind=Self certificate when every proper candidate
/// core order is eliminated, nullopt when inconclusive.
std::optional<CoreCertificate> certify_core_by_invariants(
    const ConnectionSet& c, long long materialize_cap = 4096,
    int color_tests_budget = 8);

}  // namespace ccg
