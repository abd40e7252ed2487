#include "lcw/list_assignment.hpp"

#include <sstream>
#include <stdexcept>

namespace lcw {

bool ListAssignment::is_k_assignment(int k) const {
    for (const auto& s : lists_)
        if (s.size() != k) return false;
    return true;
}

ColorSet ListAssignment::universe() const {
    ColorSet u;
    for (const auto& s : lists_) u |= s;
    return u;
}

bool ListAssignment::is_constant() const {
    if (lists_.empty()) return false;
    for (const auto& s : lists_)
        if (s != lists_[0]) return false;
    return true;
}

ListAssignment ListAssignment::restrict_to(const std::vector<int>& to_parent) const {
    ListAssignment r(static_cast<int>(to_parent.size()));
    for (int i = 0; i < r.num_vertices(); ++i) r.set_list(i, lists_[to_parent[i]]);
    return r;
}

std::string ListAssignment::to_text() const {
    std::ostringstream out;
    for (int v = 0; v < num_vertices(); ++v) {
        out << v << ':';
        for (int c = lists_[v].first(); c >= 0; c = lists_[v].next(c)) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

ListAssignment ListAssignment::from_text(const std::string& text, int num_vertices) {
    ListAssignment L(num_vertices);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("list text: missing ':'");
        int v = std::stoi(line.substr(0, colon));
        if (v < 0 || v >= num_vertices) throw std::invalid_argument("list text: vertex out of range");
        std::istringstream rest(line.substr(colon + 1));
        ColorSet s;
        int c;
        while (rest >> c) {
            if (c < 0 || c >= kMaxColors) throw std::invalid_argument("list text: color out of range");
            s.insert(c);
        }
        L.set_list(v, s);
    }
    return L;
}

bool rows_pairwise_disjoint(const ProductStructure& p, int a, const ListAssignment& L) {
    for (int i = 0; i < p.left_n; ++i)
        for (int j = 0; j < a; ++j)
            for (int j2 = j + 1; j2 < a; ++j2)
                if (L.list(p.vertex(i, j)).intersects(L.list(p.vertex(i, j2)))) return false;
    return true;
}

}  // namespace lcw
