#pragma once

#include "subsplit/bigint.hpp"

#include <optional>
#include <vector>

namespace subsplit {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    std::vector<Int> row(size_t i) const;
    void set_row(size_t i, const std::vector<Int>& v);
    void swap_rows(size_t i, size_t j);
    bool operator==(const IntMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    static IntMatrix identity(size_t n);

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct LllParams {
    Rational delta{99, 100};
    Rational eta{501, 1000};
};

LllParams lll_params(double delta, double eta);

// Integral LLL with exact arithmetic. Rows are the basis vectors.
IntMatrix lll_reduce(const IntMatrix& basis, const LllParams& params = {});
IntMatrix lll_reduce(const IntMatrix& basis, double delta, double eta);

struct GramSchmidt {
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> norms;  // squared norms of b_i*
};

GramSchmidt gram_schmidt(const IntMatrix& basis);

// Exact check of size reduction (|mu| <= eta) and the Lovasz condition.
bool is_lll_reduced(const IntMatrix& basis, const LllParams& params = {});

Int determinant(const IntMatrix& square);

struct Membership {
    bool member = false;
    std::vector<Int> coords;
};

// Integer coordinates of v in the row lattice of a full-rank basis, if any.
Membership lattice_membership(const IntMatrix& basis, const std::vector<Int>& v);

// log2 of C = (delta - eta^2)^(-(dim - 1)/4).
double lll_log2_factor(const LllParams& params, size_t dim);

} // namespace subsplit
