#include "lcw/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcw {

namespace {

// Lexicographic (k-t)-subsets of {0..pool-1}, each completed with the fresh
// run {next_fresh .. next_fresh+t-1}.
void append_candidates(std::vector<ColorSet>& out, int next_fresh, int k, int t) {
    int old = k - t;
    if (old > next_fresh) return;
    std::vector<int> idx(old);
    for (int i = 0; i < old; ++i) idx[i] = i;
    while (true) {
        ColorSet s;
        for (int i = 0; i < old; ++i) s.insert(idx[i]);
        for (int j = 0; j < t; ++j) s.insert(next_fresh + j);
        out.push_back(s);
        // next combination
        int i = old - 1;
        while (i >= 0 && idx[i] == next_fresh - old + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < old; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<int> flatten_key(const ListAssignment& L) {
    std::vector<int> key;
    for (int v = 0; v < L.num_vertices(); ++v)
        for (int c = L.list(v).first(); c >= 0; c = L.list(v).next(c)) key.push_back(c);
    return key;
}

// Reject leaves that are not the least representative of their orbit under
// simultaneous column permutation (composed with color recanonicalization).
bool column_perm_minimal(const ListAssignment& L, int rows, int cols) {
    std::vector<int> base_key = flatten_key(L);  // L is canonical already
    std::vector<int> perm(cols);
    for (int j = 0; j < cols; ++j) perm[j] = j;
    while (std::next_permutation(perm.begin(), perm.end())) {
        ListAssignment permuted(rows * cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) permuted.set_list(i * cols + j, L.list(i * cols + perm[j]));
        if (flatten_key(canonical_relabel(permuted)) < base_key) return false;
    }
    return true;
}

struct RecursiveEnum {
    int n;
    std::vector<int> sizes;
    bool disjoint_rows;
    int rows = 0, cols = 0;
    const EnumHooks& hooks;
    ListAssignment partial;
    bool stopped = false;

    bool row_ok(int depth, const ColorSet& cand) const {
        if (!disjoint_rows) return true;
        int r = depth / cols, c = depth % cols;
        for (int j = 0; j < c; ++j)
            if (partial.list(r * cols + j).intersects(cand)) return false;
        return true;
    }

    void go(int depth, int next_fresh) {
        if (stopped) return;
        int k = sizes[depth];
        for (int t = 0; t <= k && !stopped; ++t) {
            std::vector<ColorSet> cands;
            append_candidates(cands, next_fresh, k, t);
            for (const ColorSet& cand : cands) {
                if (stopped) return;
                if (!row_ok(depth, cand)) continue;
                partial.set_list(depth, cand);
                if (hooks.on_partial && !hooks.on_partial(partial, depth, next_fresh + t)) continue;
                if (depth + 1 == n) {
                    if (disjoint_rows && !column_perm_minimal(partial, rows, cols)) continue;
                    if (hooks.on_leaf && !hooks.on_leaf(partial)) {
                        stopped = true;
                        return;
                    }
                } else {
                    go(depth + 1, next_fresh + t);
                }
            }
        }
    }
};

}  // namespace

std::vector<ColorSet> canonical_candidates(int next_fresh, int k) {
    std::vector<ColorSet> out;
    for (int t = 0; t <= k; ++t) append_candidates(out, next_fresh, k, t);
    return out;
}

ListAssignment canonical_relabel(const ListAssignment& L) {
    std::vector<int> map(kMaxColors, -1);
    int fresh = 0;
    ListAssignment out(L.num_vertices());
    for (int v = 0; v < L.num_vertices(); ++v) {
        ColorSet s;
        for (int c = L.list(v).first(); c >= 0; c = L.list(v).next(c)) {
            if (map[c] < 0) map[c] = fresh++;
            s.insert(map[c]);
        }
        out.set_list(v, s);
    }
    return out;
}

void enumerate_canonical_assignments(int n, int k, const EnumHooks& hooks) {
    if (n <= 0) return;
    RecursiveEnum e{n, std::vector<int>(n, k), false, 0, 0, hooks, ListAssignment(n)};
    e.go(0, 0);
}

void enumerate_canonical_assignments(const std::vector<int>& sizes, const EnumHooks& hooks) {
    int n = static_cast<int>(sizes.size());
    if (n <= 0) return;
    RecursiveEnum e{n, sizes, false, 0, 0, hooks, ListAssignment(n)};
    e.go(0, 0);
}

void enumerate_canonical_disjoint_rows(int rows, int cols, int k, const EnumHooks& hooks) {
    if (rows <= 0 || cols <= 0) return;
    if (cols > 6) throw std::invalid_argument("column-permutation dedup limited to <= 6 columns");
    RecursiveEnum e{rows * cols, std::vector<int>(rows * cols, k), true, rows, cols, hooks, ListAssignment(rows * cols)};
    e.go(0, 0);
}

CanonicalStream::CanonicalStream(int n, int k, bool disjoint_rows, int rows, int cols)
    : n_(n), k_(k), disjoint_rows_(disjoint_rows), rows_(rows), cols_(cols), current_(n) {
    if (disjoint_rows_ && rows_ * cols_ != n_) throw std::invalid_argument("rows*cols must equal n");
}

bool CanonicalStream::valid_candidate(int depth, const ColorSet& cand) const {
    if (!disjoint_rows_) return true;
    int r = depth / cols_, c = depth % cols_;
    for (int j = 0; j < c; ++j)
        if (current_.list(r * cols_ + j).intersects(cand)) return false;
    return true;
}

bool CanonicalStream::leaf_accepted() const {
    if (!disjoint_rows_) return true;
    return column_perm_minimal(current_, rows_, cols_);
}

bool CanonicalStream::advance() {
    // Depth-first successor of the current stack position.
    while (true) {
        if (stack_.empty()) {
            if (primed_) return false;  // fully exhausted
            primed_ = true;
            fresh_ = {0};
            cands_ = {canonical_candidates(0, k_)};
            stack_ = {-1};
        }
        int depth = static_cast<int>(stack_.size()) - 1;
        ++stack_[depth];
        if (stack_[depth] >= static_cast<int>(cands_[depth].size())) {
            stack_.pop_back();
            cands_.pop_back();
            fresh_.pop_back();
            if (stack_.empty()) return false;
            continue;
        }
        const ColorSet& cand = cands_[depth][stack_[depth]];
        if (!valid_candidate(depth, cand)) continue;
        current_.set_list(depth, cand);
        if (depth + 1 == n_) {
            if (leaf_accepted()) return true;
            continue;
        }
        int used = fresh_[depth];
        for (int c = cand.first(); c >= 0; c = cand.next(c)) used = std::max(used, c + 1);
        fresh_.push_back(used);
        cands_.push_back(canonical_candidates(used, k_));
        stack_.push_back(-1);
    }
}

std::optional<ListAssignment> CanonicalStream::next() {
    if (exhausted_) return std::nullopt;
    if (!advance()) {
        exhausted_ = true;
        return std::nullopt;
    }
    return current_;
}

void CanonicalStream::seek(const std::vector<int>& cursor) {
    stack_.clear();
    fresh_.clear();
    cands_.clear();
    current_ = ListAssignment(n_);
    exhausted_ = false;
    primed_ = true;
    int used = 0;
    for (int depth = 0; depth < static_cast<int>(cursor.size()); ++depth) {
        fresh_.push_back(used);
        cands_.push_back(canonical_candidates(used, k_));
        int idx = cursor[depth];
        if (idx < 0 || idx >= static_cast<int>(cands_.back().size()))
            throw std::invalid_argument("seek: cursor out of range");
        stack_.push_back(idx);
        const ColorSet& cand = cands_.back()[idx];
        current_.set_list(depth, cand);
        for (int c = cand.first(); c >= 0; c = cand.next(c)) used = std::max(used, c + 1);
    }
}

}  // namespace lcw
