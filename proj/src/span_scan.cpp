#include "ccd/span_scan.hpp"

namespace ccd {
namespace detail {

std::vector<std::vector<uint32_t>> rows_to_logs(const Matrix& rows) {
    std::vector<std::vector<uint32_t>> out(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        out[r].reserve(rows[r].size());
        for (const FieldElem& e : rows[r])
            out[r].push_back(e.is_zero() ? FieldTower::kLogZero : e.log());
    }
    return out;
}

std::vector<uint32_t> level_alphabet(const FieldTower& tw, Level lv) {
    uint64_t size = tw.level_size(lv);
    uint64_t stride = tw.level_stride(lv);
    std::vector<uint32_t> out;
    out.reserve(size);
    out.push_back(FieldTower::kLogZero);
    for (uint64_t t = 0; t + 1 < size; ++t)
        out.push_back(static_cast<uint32_t>(t * stride));
    return out;
}

}  // namespace detail
}  // namespace ccd
