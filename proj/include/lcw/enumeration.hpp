#pragma once
// Canonical enumeration of k-assignments up to color renaming.
//
// A k-assignment on vertices 0..n-1 is canonical when, reading lists in
// vertex order (each list in ascending color order), every color not seen
// before equals the number of distinct colors seen so far. Each renaming
// orbit contains exactly one canonical assignment.
#include <functional>
#include <optional>
#include <vector>

#include "lcw/list_assignment.hpp"

namespace lcw {

// Candidate lists for the next vertex given the number of colors already in
// use: all k-sets using some old colors plus a run of fresh ones.
std::vector<ColorSet> canonical_candidates(int next_fresh, int k);

struct EnumHooks {
    // Called after assigning the list of vertex `depth` (0-based); the
    // partial assignment has vertices 0..depth set. Return false to prune
    // the subtree (skip all completions).
    std::function<bool(const ListAssignment& partial, int depth, int next_fresh)> on_partial;
    // Called for each complete assignment. Return false to stop everything.
    std::function<bool(const ListAssignment&)> on_leaf;
};

// Depth-first enumeration of all canonical k-assignments on n vertices.
void enumerate_canonical_assignments(int n, int k, const EnumHooks& hooks);
// Same with a prescribed list size per vertex.
void enumerate_canonical_assignments(const std::vector<int>& sizes, const EnumHooks& hooks);

// Canonical k-assignments on a rows x cols vertex grid (vertex = row*cols+col,
// matching the X side of M x K_{a,b}) whose per-row lists are pairwise
// disjoint, further deduplicated under simultaneous column permutation:
// only the lexicographically least representative (after recanonicalizing
// colors) of each column-permutation orbit reaches on_leaf.
void enumerate_canonical_disjoint_rows(int rows, int cols, int k, const EnumHooks& hooks);

// Relabel colors into first-use order (vertex order, ascending within lists).
ListAssignment canonical_relabel(const ListAssignment& L);

// Lazy resumable stream over canonical k-assignments. The cursor is the
// stack of per-vertex candidate indices identifying the current leaf.
class CanonicalStream {
  public:
    CanonicalStream(int n, int k, bool disjoint_rows = false, int rows = 0, int cols = 0);

    std::optional<ListAssignment> next();
    std::vector<int> cursor() const { return stack_; }
    // Position the stream so that iteration resumes *after* the given leaf.
    void seek(const std::vector<int>& cursor);

  private:
    bool advance();
    bool valid_candidate(int depth, const ColorSet& cand) const;
    bool leaf_accepted() const;

    int n_, k_;
    bool disjoint_rows_;
    int rows_ = 0, cols_ = 0;
    std::vector<int> stack_;               // candidate index per assigned vertex
    std::vector<int> fresh_;               // next_fresh before each depth
    std::vector<std::vector<ColorSet>> cands_;  // candidates per depth
    ListAssignment current_;
    bool exhausted_ = false;
    bool primed_ = false;
};

}  // namespace lcw
