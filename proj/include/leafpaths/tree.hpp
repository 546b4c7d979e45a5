#ifndef LEAFPATHS_TREE_HPP
#define LEAFPATHS_TREE_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "leafpaths/error.hpp"

namespace leafpaths {

/*
 * Undirected labeled tree on vertices 0..n-1, immutable after construction.
 * Adjacency lists are kept sorted ascending so every traversal is
 * deterministic.
 */
class Tree {
public:
    static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // A vertex of degree at most 1 is a leaf of the undirected tree.
    bool is_leaf(int v) const { return degree(v) <= 1; }
    std::vector<int> leaves() const;

    // Edges as (min,max) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

private:
    Tree(int n, std::vector<std::vector<int>> adj)
        : n_(n), adj_(std::move(adj)) {}

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
};

/*
 * Non-increasing multiset of positive degrees; valid for a tree iff n >= 2
 * and the entries sum to 2(n-1).
 */
class DegreeSequence {
public:
    static DegreeSequence validate(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int max_degree() const { return entries_.front(); }
    int leaf_count() const;
    bool has_entry_two() const;

    // The sequence with all 2-entries removed; always a valid degree
    // sequence again (dropping a 2 drops one vertex and two edge ends).
    DegreeSequence without_twos() const;

    bool operator==(const DegreeSequence& o) const { return entries_ == o.entries_; }

private:
    explicit DegreeSequence(std::vector<int> entries) : entries_(std::move(entries)) {}
    std::vector<int> entries_;
};

/*
 * Non-increasing children counts of a rooted tree; valid iff the entries
 * sum to n-1. A single 0 entry is the one-vertex rooted tree.
 */
class OutDegreeSequence {
public:
    static OutDegreeSequence validate(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int leaf_count() const; // number of 0 entries

    bool operator==(const OutDegreeSequence& o) const { return entries_ == o.entries_; }

private:
    explicit OutDegreeSequence(std::vector<int> entries) : entries_(std::move(entries)) {}
    std::vector<int> entries_;
};

/*
 * A Tree plus a root, with parent/children/depth arrays. Children are
 * listed ascending; `order` is the BFS visit order from the root, so
 * iterating it reversed gives a valid bottom-up schedule.
 */
struct RootedTree {
    Tree tree;
    int root = 0;
    std::vector<int> parent;   // parent[root] == -1
    std::vector<std::vector<int>> children;
    std::vector<int> depth;
    std::vector<int> order;

    int height() const;
    // Rooted leaves: vertices without children (ascending id).
    std::vector<int> leaves() const;
};

struct Metrics {
    int radius = 0;
    int diameter = 0;
    std::vector<int> centers; // vertices of minimum eccentricity, ascending
};

DegreeSequence validate_degree_sequence(std::vector<int> entries);
OutDegreeSequence validate_out_degree_sequence(std::vector<int> entries);

DegreeSequence degree_sequence_of(const Tree& tree);
RootedTree root_at(const Tree& tree, int r);
OutDegreeSequence out_degree_sequence_of(const RootedTree& rt);

// Radius / diameter / centers by BFS sweeps, O(n).
Metrics metrics(const Tree& tree);

// Distances from src to every vertex, one BFS.
std::vector<int> bfs_distances(const Tree& tree, int src);

int lca(const RootedTree& rt, int u, int v);
int lca_of_set(const RootedTree& rt, const std::vector<int>& vertices);

// Edge-list text format: first line n, then exactly n-1 lines "u v".
Tree parse_tree(const std::string& text);
Tree parse_tree(std::istream& in);
std::string serialize_tree(const Tree& tree);

} // namespace leafpaths

#endif
