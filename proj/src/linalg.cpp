#include "ccd/linalg.hpp"

#include <algorithm>

namespace ccd {

std::vector<size_t> row_reduce(Matrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t sel = pr;
        while (sel < rows && m[sel][pc].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[pr], m[sel]);
        FieldElem inv = m[pr][pc].inv();
        for (size_t c = pc; c < cols; ++c) m[pr][c] = m[pr][c] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][pc].is_zero()) continue;
            FieldElem f = m[r][pc];
            for (size_t c = pc; c < cols; ++c) m[r][c] = m[r][c] - f * m[pr][c];
        }
        pivots.push_back(pc);
        ++pr;
    }
    m.resize(pr);  // drop the zero rows
    return pivots;
}

size_t rank(Matrix m) { return row_reduce(m).size(); }

Matrix kernel_basis(const Matrix& m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    Matrix r = m;
    std::vector<size_t> pivots = row_reduce(r);
    std::vector<bool> is_pivot(cols, false);
    for (size_t pc : pivots) is_pivot[pc] = true;
    const FieldTower* tw = nullptr;
    for (const auto& row : m)
        for (const auto& x : row)
            if (x.tower_ptr()) {
                tw = x.tower_ptr();
                break;
            }
    internal_check(tw != nullptr, "kernel of a matrix with no attached tower");
    Matrix basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Row v(cols, tw->zero());
        v[fc] = tw->one();
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_space(Matrix basis, const Row& v) {
    size_t r0 = rank(basis);
    basis.push_back(v);
    return rank(std::move(basis)) == r0;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    Matrix stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return rank(std::move(stacked)) == ra;
}

}  // namespace ccd
