#include "teqset/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace teqset {

AltSet IsoMapping::apply(AltSet s) const {
    AltSet out;
    for (int i : s) out = out.with(map[i]);
    return out;
}

bool is_isomorphism(const Tournament& a, const Tournament& b, std::span<const int> map) {
    const int n = a.order();
    if (b.order() != n || map.size() != static_cast<std::size_t>(n)) return false;
    AltSet image;
    for (int v : map) {
        if (v < 0 || v >= n || image.contains(v)) return false;
        image = image.with(v);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && a.dominates(i, j) != b.dominates(map[i], map[j])) return false;
        }
    }
    return true;
}

namespace {

class Matcher {
public:
    Matcher(const Tournament& a, const Tournament& b) : a_(a), b_(b), map_(a.order(), -1) {
        const int n = a.order();
        // Rarest score classes first: they branch least.
        std::vector<int> class_size(n, 0);
        for (int i = 0; i < n; ++i) ++class_size[a.score(i)];
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
            const int cx = class_size[a.score(x)];
            const int cy = class_size[a.score(y)];
            return cx != cy ? cx < cy : a.score(x) < a.score(y);
        });
    }

    bool run() { return extend(0); }
    std::vector<int> mapping() const { return map_; }

private:
    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        for (int w : b_.universe() - used_) {
            if (b_.score(w) != a_.score(v) || !consistent(v, w, depth)) continue;
            map_[v] = w;
            used_ = used_.with(w);
            if (extend(depth + 1)) return true;
            used_ = used_.without(w);
            map_[v] = -1;
        }
        return false;
    }

    bool consistent(int v, int w, std::size_t depth) const {
        for (std::size_t k = 0; k < depth; ++k) {
            const int u = order_[k];
            if (a_.dominates(v, u) != b_.dominates(w, map_[u])) return false;
        }
        return true;
    }

    const Tournament& a_;
    const Tournament& b_;
    std::vector<int> order_;
    std::vector<int> map_;
    AltSet used_;
};

}  // namespace

std::optional<IsoMapping> find_isomorphism(const Tournament& a, const Tournament& b) {
    if (a.order() != b.order()) return std::nullopt;
    if (a.score_sequence() != b.score_sequence()) return std::nullopt;
    Matcher matcher(a, b);
    if (!matcher.run()) return std::nullopt;
    return IsoMapping{matcher.mapping()};
}

}  // namespace teqset
