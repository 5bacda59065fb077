#pragma once

#include <functional>
#include <vector>

#include "bow/util.hpp"

namespace bow {

// A partition is a weakly decreasing list of positive integers.
// The empty vector is the empty partition.
using Partition = std::vector<i64>;

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline i64 partition_weight(const Partition& p) {
    i64 s = 0;
    for (i64 x : p) s += x;
    return s;
}

// part of the conjugate partition: p'_j = #{ rows with p_i >= j }
inline i64 conjugate_part(const Partition& p, i64 j) {
    i64 c = 0;
    for (i64 x : p)
        if (x >= j) ++c;
    return c;
}

// Leg and arm of the box s = (row i, column j), both 1-based, following
// the convention l_Y(s) = Y_i - j, a_Y(s) = Y'_j - i.  The box need not
// lie inside Y; the values are then negative.
inline i64 leg(const Partition& Y, i64 i, i64 j) {
    i64 yi = (i >= 1 && i <= static_cast<i64>(Y.size())) ? Y[i - 1] : 0;
    return yi - j;
}

inline i64 arm(const Partition& Y, i64 i, i64 j) {
    return conjugate_part(Y, j) - i;
}

// All partitions of k, in a fixed (first-part-descending) order.
// Results are memoised; k stays small in this project.
const std::vector<Partition>& partitions_of(i64 k);

// Visit every `slots`-tuple of partitions with total weight `total`,
// in a fixed deterministic order.
void for_each_partition_tuple(int slots, i64 total,
                              const std::function<void(const std::vector<Partition>&)>& fn);

}  // namespace bow
