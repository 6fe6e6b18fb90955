#pragma once

#include "ccd/gf.hpp"

// Shared towers for the test suite. Construction is deterministic, so a
// single instance per q is safe to reuse across test cases.
inline const ccd::FieldTower& tower_q(uint64_t q) {
    static ccd::FieldTower t2(2, 1), t3(3, 1), t4(2, 2), t5(5, 1), t8(2, 3), t9(3, 2);
    switch (q) {
        case 2: return t2;
        case 3: return t3;
        case 4: return t4;
        case 5: return t5;
        case 8: return t8;
        case 9: return t9;
    }
    throw std::logic_error("no shared tower for this q");
}
