#ifndef RANKCODE_MATRIX_HPP
#define RANKCODE_MATRIX_HPP

#include "rankcode/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace rankcode {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major matrix over the prime field F_q.
class MatQ {
  public:
    MatQ() = default;
    MatQ(unsigned q, std::size_t rows, std::size_t cols)
        : q_(q), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    MatQ(unsigned q, std::size_t rows, std::size_t cols, std::vector<Sym> entries);

    static MatQ identity(unsigned q, std::size_t n);

    unsigned q() const { return q_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Sym& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Sym at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Sym>& data() const { return a_; }

    bool operator==(const MatQ& o) const {
        return q_ == o.q_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool is_zero() const {
        for (Sym v : a_)
            if (v) return false;
        return true;
    }

  private:
    unsigned q_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Sym> a_;
};

MatQ transpose(const MatQ& x);
MatQ add(const MatQ& x, const MatQ& y);
MatQ sub(const MatQ& x, const MatQ& y);
MatQ vstack(const MatQ& x, const MatQ& y);  // [x; y]
MatQ hcat(const MatQ& x, const MatQ& y);    // [x | y]

// Product; parallel kernel with a serial reference kept for testing.
MatQ mul(const MatQ& x, const MatQ& y);
MatQ mul_serial(const MatQ& x, const MatQ& y);

struct RreResult {
    MatQ R;
    std::vector<std::size_t> pivots;  // strictly increasing pivot column indices
};

RreResult rre(const MatQ& x);
std::size_t rank(const MatQ& x);
std::size_t rank_distance(const MatQ& x, const MatQ& y);

// Right inverse Q of a full-row-rank n x m matrix: h * Q = I_n. Throws if rank-deficient.
MatQ right_inverse(const MatQ& h);

// Canonical subspace of F_q^ambient: basis stored in RRE form with no zero rows,
// so equality of subspaces is structural equality.
class Subspace {
  public:
    Subspace() = default;
    static Subspace row_space(const MatQ& x);

    const MatQ& basis() const { return basis_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return ambient_; }
    unsigned q() const { return basis_.q(); }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool contains(const Subspace& o) const;

  private:
    MatQ basis_;
    std::size_t ambient_ = 0;
};

Subspace sum(const Subspace& u, const Subspace& v);
std::size_t subspace_distance(const Subspace& u, const Subspace& v);

// Number of n-dimensional subspaces of F_q^M (exact).
BigInt gaussian_coefficient(unsigned q, unsigned M, unsigned n);

struct SingletonBounds {
    BigInt rank_metric_bound;   // q^{max(n,m) (min(n,m)-d+1)}
    BigInt subspace_bound;      // 4 q^{max(n,m) (min(n,m)-d+1)} >= A_q[n+m, 2d, n]
    double sub_optimality;      // 4 / ((n+m) log2 q), rate-loss bound for lifted MRD codes
};

SingletonBounds singleton_bounds(unsigned q, unsigned n, unsigned m, unsigned d);

// Conversions between length-n vectors over F_{q^m} and n x m matrices over F_q.
MatQ ext_vector_to_mat(const Field& f, const std::vector<Ext>& v);
std::vector<Ext> mat_to_ext_vector(const Field& f, const MatQ& x);
std::size_t rank_of_ext_vector(const Field& f, const std::vector<Ext>& v);

}  // namespace rankcode

#endif
