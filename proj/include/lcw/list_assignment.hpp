#pragma once
// List assignments: a color list per vertex of some domain. Includes the
// product-specific row-disjointness test used by the X-side machinery.
#include <string>
#include <vector>

#include "lcw/color_set.hpp"
#include "lcw/graph.hpp"

namespace lcw {

class ListAssignment {
  public:
    ListAssignment() = default;
    explicit ListAssignment(int num_vertices) : lists_(num_vertices) {}
    ListAssignment(int num_vertices, const ColorSet& uniform) : lists_(num_vertices, uniform) {}

    int num_vertices() const { return static_cast<int>(lists_.size()); }
    const ColorSet& list(int v) const { return lists_[v]; }
    void set_list(int v, const ColorSet& s) { lists_[v] = s; }

    // Is every list exactly k colors?
    bool is_k_assignment(int k) const;
    // Union of all lists.
    ColorSet universe() const;
    // All lists equal (and the domain nonempty)?
    bool is_constant() const;

    bool operator==(const ListAssignment& o) const { return lists_ == o.lists_; }

    // Restriction to an induced subgraph given by new-id -> old-id map.
    ListAssignment restrict_to(const std::vector<int>& to_parent) const;

    // One line per vertex: "v: c1 c2 ... ck".
    std::string to_text() const;
    static ListAssignment from_text(const std::string& text, int num_vertices);

  private:
    std::vector<ColorSet> lists_;
};

// For H = M x K_{a,b}: do the a lists of row i (vertices (v_i, x_1..x_a))
// pairwise intersect trivially, for every base row i?
bool rows_pairwise_disjoint(const ProductStructure& p, int a, const ListAssignment& L);

}  // namespace lcw
