#pragma once

#include <cstdint>

namespace orderedmim {

/// Basic-operation counters used by the complexity accounting checks.
struct OpCounters {
    std::uint64_t stamp_writes = 0; // neighbourhood stamps written
    std::uint64_t scan_steps = 0;   // elements passed scanning for a non-neighbour
    std::uint64_t insert_steps = 0; // elements passed finding the insertion point
    std::uint64_t appends = 0;      // list/bucket appends
    std::uint64_t iterations = 0;   // outer loop rounds

    std::uint64_t total() const {
        return stamp_writes + scan_steps + insert_steps + appends + iterations;
    }
};

} // namespace orderedmim
