#include "teqset/random.hpp"

#include <vector>

namespace teqset {

Tournament random_tournament(int order, std::uint64_t seed) {
    check_order(order);
    std::vector<AltSet> rows(order);
    for (int i = 0; i < order; ++i) {
        for (int j = i + 1; j < order; ++j) {
            if (counter_draw(seed, pair_index(i, j, order)) >> 63) {
                rows[i] = rows[i].with(j);
            } else {
                rows[j] = rows[j].with(i);
            }
        }
    }
    return Tournament::from_out_sets(order, rows);
}

}  // namespace teqset
