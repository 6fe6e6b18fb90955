#include "doctest.h"

#include <vector>

#include "ccd/linalg.hpp"
#include "test_util.hpp"

using namespace ccd;

namespace {

// w generates F_9 inside the q=3 tower (logs divisible by 10)
Row row_of_logs(const FieldTower& tw, const std::vector<int>& logs) {
    Row r;
    for (int lg : logs) r.push_back(lg < 0 ? tw.zero() : tw.from_log(10 * lg));
    return r;
}

FieldElem dot(const Row& a, const Row& b) {
    FieldElem acc = a[0] * b[0];
    for (size_t i = 1; i < a.size(); ++i) acc = acc + a[i] * b[i];
    return acc;
}

}  // namespace

TEST_CASE("row reduction and rank") {
    const FieldTower& tw = tower_q(3);

    // second row is w * first row: rank 1
    Matrix dep{row_of_logs(tw, {0, 1}), row_of_logs(tw, {1, 2})};
    CHECK(rank(dep) == 1);

    Matrix m{row_of_logs(tw, {0, 1, 0}), row_of_logs(tw, {1, 2, 3})};
    CHECK(rank(m) == 2);
    Matrix reduced = m;
    std::vector<size_t> pivots = row_reduce(reduced);
    CHECK(pivots == std::vector<size_t>{0, 2});
    // pivot entries are 1 and pivot columns are cleared elsewhere
    for (size_t i = 0; i < pivots.size(); ++i) {
        CHECK(reduced[i][pivots[i]] == tw.one());
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) CHECK(reduced[j][pivots[i]] == tw.zero());
    }
}

TEST_CASE("kernel basis annihilates the matrix") {
    const FieldTower& tw = tower_q(3);
    Matrix m{row_of_logs(tw, {0, 1, 0, 2}), row_of_logs(tw, {1, 2, 3, -1})};
    Matrix ker = kernel_basis(m);
    CHECK(ker.size() == 2);  // 4 columns - rank 2
    for (const Row& v : ker)
        for (const Row& row : m) CHECK(dot(row, v) == tw.zero());

    // kernel vectors are independent
    Matrix stacked = ker;
    CHECK(rank(stacked) == 2);

    // full-rank square matrix has a trivial kernel
    Matrix square{row_of_logs(tw, {0, 1}), row_of_logs(tw, {1, 0})};
    CHECK(kernel_basis(square).empty());
}

TEST_CASE("row space comparisons") {
    const FieldTower& tw = tower_q(3);
    Matrix a{row_of_logs(tw, {0, 1, 0}), row_of_logs(tw, {1, 2, 3})};
    // scale both rows and swap them: same span
    Matrix b{row_of_logs(tw, {2, 3, 4}), row_of_logs(tw, {3, 4, 3})};
    CHECK(same_row_space(a, b));

    // pivot structure {0,1} instead of {0,2}: different span
    Matrix c{row_of_logs(tw, {0, 1, 0}), row_of_logs(tw, {1, 3, 3})};
    CHECK_FALSE(same_row_space(a, c));

    Row combo(3, tw.zero());
    for (size_t i = 0; i < 3; ++i) combo[i] = a[0][i] + a[1][i] * tw.from_log(10);
    CHECK(in_row_space(a, combo));
    // any span member has second entry w * first entry; this one does not
    CHECK_FALSE(in_row_space(a, row_of_logs(tw, {0, 2, -1})));
}
