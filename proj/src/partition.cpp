#include "bow/partition.hpp"

#include <map>

namespace bow {

namespace {

void gen_partitions(i64 remaining, i64 max_part, Partition& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (i64 part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(i64 k) {
    static std::map<i64, std::vector<Partition>> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(k, k, cur, out);
    return cache.emplace(k, std::move(out)).first->second;
}

void for_each_partition_tuple(int slots, i64 total,
                              const std::function<void(const std::vector<Partition>&)>& fn) {
    std::vector<Partition> tuple(slots);
    std::function<void(int, i64)> rec = [&](int slot, i64 remaining) {
        if (slot == slots - 1) {
            for (const Partition& p : partitions_of(remaining)) {
                tuple[slot] = p;
                fn(tuple);
            }
            return;
        }
        for (i64 w = 0; w <= remaining; ++w) {
            for (const Partition& p : partitions_of(w)) {
                tuple[slot] = p;
                rec(slot + 1, remaining - w);
            }
        }
    };
    if (slots == 0) {
        if (total == 0) fn(tuple);
        return;
    }
    rec(0, total);
}

}  // namespace bow
