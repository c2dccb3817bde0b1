#include "teqset/teq.hpp"

#include <algorithm>
#include <array>

namespace teqset {

TeqCache::TeqCache(Tournament base) : base_(std::move(base)) {}

std::optional<AltSet> TeqCache::lookup(AltSet subset) const {
    auto it = table_.find(subset.bits());
    if (it == table_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void TeqCache::store(AltSet subset, AltSet value) { table_.emplace(subset.bits(), value); }

void TeqCache::check_deadline() const {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_) throw TeqTimeout();
}

namespace {

void check_subset(const TeqCache& cache, AltSet subset) {
    if (subset.empty()) throw std::invalid_argument("TEQ of an empty set is undefined");
    if (!subset.subset_of(cache.base().universe())) {
        throw std::invalid_argument("set reaches beyond the base tournament");
    }
}

AltSet teq_unchecked(TeqCache& cache, AltSet subset);

RelationGraph relation_graph_unchecked(TeqCache& cache, AltSet universe) {
    const Tournament& base = cache.base();
    RelationGraph g{universe, std::vector<AltSet>(base.order())};
    for (int x : universe) {
        const AltSet dom = base.in_set(x) & universe;
        if (!dom.empty()) g.successors[x] = teq_unchecked(cache, dom);
    }
    return g;
}

AltSet teq_unchecked(TeqCache& cache, AltSet subset) {
    if (subset.size() == 1) return subset;
    if (auto hit = cache.lookup(subset)) return *hit;
    cache.check_deadline();

    AltSet result;
    for (AltSet component : terminal_sccs(relation_graph_unchecked(cache, subset))) result |= component;
    cache.store(subset, result);
    return result;
}

// Tarjan's algorithm; recursion depth is bounded by the order (<= 64).
class TarjanScc {
public:
    explicit TarjanScc(const RelationGraph& g) : g_(g) {
        index_.fill(-1);
    }

    std::vector<AltSet> run() {
        for (int v : g_.universe) {
            if (index_[v] < 0) visit(v);
        }
        return components_;
    }

private:
    void visit(int v) {
        index_[v] = low_[v] = next_index_++;
        stack_[depth_++] = v;
        on_stack_ = on_stack_.with(v);
        for (int w : g_.successors[v] & g_.universe) {
            if (index_[w] < 0) {
                visit(w);
                low_[v] = std::min(low_[v], low_[w]);
            } else if (on_stack_.contains(w)) {
                low_[v] = std::min(low_[v], index_[w]);
            }
        }
        if (low_[v] == index_[v]) {
            AltSet component;
            int w;
            do {
                w = stack_[--depth_];
                on_stack_ = on_stack_.without(w);
                component = component.with(w);
            } while (w != v);
            components_.push_back(component);
        }
    }

    const RelationGraph& g_;
    std::array<int, kMaxOrder> index_{};
    std::array<int, kMaxOrder> low_{};
    std::array<int, kMaxOrder> stack_{};
    int depth_ = 0;
    int next_index_ = 0;
    AltSet on_stack_;
    std::vector<AltSet> components_;
};

}  // namespace

RelationGraph build_relation_graph(TeqCache& cache, AltSet universe) {
    check_subset(cache, universe);
    return relation_graph_unchecked(cache, universe);
}

std::vector<AltSet> terminal_sccs(const RelationGraph& g) {
    TarjanScc tarjan(g);
    std::vector<AltSet> components = tarjan.run();
    std::vector<AltSet> terminal;
    for (AltSet component : components) {
        AltSet reach;
        for (int v : component) reach |= g.successors[v];
        if ((reach & g.universe).subset_of(component)) terminal.push_back(component);
    }
    std::sort(terminal.begin(), terminal.end(), BySmallestMember{});
    return terminal;
}

AltSet teq_of_subset(TeqCache& cache, AltSet subset) {
    check_subset(cache, subset);
    return teq_unchecked(cache, subset);
}

AltSet teq(const Tournament& t) {
    TeqCache cache(t);
    return teq_unchecked(cache, t.universe());
}

bool is_retentive(TeqCache& cache, AltSet set) {
    check_subset(cache, set);
    const Tournament& base = cache.base();
    for (int x : set) {
        const AltSet dom = base.in_set(x);
        if (!dom.empty() && !teq_unchecked(cache, dom).subset_of(set)) return false;
    }
    return true;
}

std::vector<AltSet> minimal_retentive_sets(TeqCache& cache) {
    return terminal_sccs(relation_graph_unchecked(cache, cache.base().universe()));
}

std::vector<AltSet> minimal_retentive_sets(const Tournament& t) {
    TeqCache cache(t);
    return minimal_retentive_sets(cache);
}

}  // namespace teqset
