#pragma once

#include <cstdint>
#include <vector>

#include "ccd/constacyclic.hpp"
#include "ccd/parallel.hpp"

namespace ccd {
namespace detail {

// Bulk enumeration kernels. Both walk an entire message space in a fixed
// deterministic order, partitioned into contiguous chunks per worker, and
// hand each codeword's weight (and optional 128-bit support mask) to the
// sink as sink(worker, weight, mask_lo, mask_hi).

template <bool WantMask, class Sink>
void scan_trace_messages(const ConstacyclicCode& code, unsigned workers, Sink&& sink) {
    TraceKernel kern(code);
    const FieldTower& tw = *code.tower;
    constexpr uint32_t kZ = FieldTower::kLogZero;
    uint64_t slots = tw.order() + 1;  // message symbol: zero or one of q^4-1 logs
    parallel_chunks(slots, workers, [&](unsigned w, uint64_t beg, uint64_t end) {
        for (uint64_t sa = beg; sa < end; ++sa) {
            uint32_t la = sa == 0 ? kZ : static_cast<uint32_t>(sa - 1);
            for (uint64_t sb = 0; sb < slots; ++sb) {
                uint32_t lb = sb == 0 ? kZ : static_cast<uint32_t>(sb - 1);
                uint32_t wt = 0;
                uint64_t mlo = 0, mhi = 0;
                for (uint32_t i = 0; i < kern.n; ++i) {
                    if (!kern.coord_is_zero(la, lb, i)) {
                        ++wt;
                        if constexpr (WantMask) {
                            if (i < 64)
                                mlo |= uint64_t(1) << i;
                            else
                                mhi |= uint64_t(1) << (i - 64);
                        }
                    }
                }
                sink(w, wt, mlo, mhi);
            }
        }
    });
}

// Enumerate all |alphabet|^rows combinations of log-space basis rows.
// The last message digit varies fastest; the prefix sum over the other
// digits is reused across the whole inner alphabet loop.
template <bool WantMask, class Sink>
void scan_span(const FieldTower& tw, const std::vector<std::vector<uint32_t>>& rows,
               const std::vector<uint32_t>& alphabet, unsigned workers, Sink&& sink) {
    constexpr uint32_t kZ = FieldTower::kLogZero;
    size_t k = rows.size();
    if (k == 0) {
        sink(0u, 0u, uint64_t(0), uint64_t(0));
        return;
    }
    size_t n = rows[0].size();
    uint64_t Q = alphabet.size();
    uint64_t prefixes = 1;
    for (size_t i = 0; i + 1 < k; ++i) prefixes *= Q;
    parallel_chunks(prefixes, workers, [&](unsigned w, uint64_t beg, uint64_t end) {
        std::vector<uint32_t> digits(k - 1), acc(n);
        for (uint64_t pi = beg; pi < end; ++pi) {
            uint64_t t = pi;
            for (size_t d = 0; d + 1 < k; ++d) {
                digits[d] = alphabet[t % Q];
                t /= Q;
            }
            for (size_t i = 0; i < n; ++i) {
                uint32_t a = kZ;
                for (size_t d = 0; d + 1 < k; ++d)
                    a = tw.add_log(a, tw.mul_log(digits[d], rows[d][i]));
                acc[i] = a;
            }
            for (uint64_t li = 0; li < Q; ++li) {
                uint32_t last = alphabet[li];
                uint32_t wt = 0;
                uint64_t mlo = 0, mhi = 0;
                for (size_t i = 0; i < n; ++i) {
                    if (tw.add_log(acc[i], tw.mul_log(last, rows[k - 1][i])) != kZ) {
                        ++wt;
                        if constexpr (WantMask) {
                            if (i < 64)
                                mlo |= uint64_t(1) << i;
                            else
                                mhi |= uint64_t(1) << (i - 64);
                        }
                    }
                }
                sink(w, wt, mlo, mhi);
            }
        }
    });
}

// Log-space views used by the span scanner.
std::vector<std::vector<uint32_t>> rows_to_logs(const Matrix& rows);

// All elements of the given level as message-symbol logs: the zero tag
// followed by the logs in ascending order.
std::vector<uint32_t> level_alphabet(const FieldTower& tw, Level lv);

}  // namespace detail
}  // namespace ccd
