#include "rankcode/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace rankcode {

MatQ::MatQ(unsigned q, std::size_t rows, std::size_t cols, std::vector<Sym> entries)
    : q_(q), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
    for (Sym v : a_)
        if (v >= q) throw std::invalid_argument("matrix entry out of range");
}

MatQ MatQ::identity(unsigned q, std::size_t n) {
    MatQ I(q, n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

MatQ transpose(const MatQ& x) {
    MatQ t(x.q(), x.cols(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) t.at(j, i) = x.at(i, j);
    return t;
}

static void require_same_shape(const MatQ& x, const MatQ& y) {
    if (x.q() != y.q() || x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("matrix shape/field mismatch");
}

MatQ add(const MatQ& x, const MatQ& y) {
    require_same_shape(x, y);
    MatQ r = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = fq::add(x.at(i, j), y.at(i, j), x.q());
    return r;
}

MatQ sub(const MatQ& x, const MatQ& y) {
    require_same_shape(x, y);
    MatQ r = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = fq::sub(x.at(i, j), y.at(i, j), x.q());
    return r;
}

MatQ vstack(const MatQ& x, const MatQ& y) {
    if (y.rows() == 0) return x;
    if (x.rows() == 0) return y;
    if (x.q() != y.q() || x.cols() != y.cols()) throw std::invalid_argument("vstack shape mismatch");
    MatQ r(x.q(), x.rows() + y.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) r.at(x.rows() + i, j) = y.at(i, j);
    return r;
}

MatQ hcat(const MatQ& x, const MatQ& y) {
    if (y.cols() == 0) return x;
    if (x.cols() == 0) return y;
    if (x.q() != y.q() || x.rows() != y.rows()) throw std::invalid_argument("hcat shape mismatch");
    MatQ r(x.q(), x.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j);
        for (std::size_t j = 0; j < y.cols(); ++j) r.at(i, x.cols() + j) = y.at(i, j);
    }
    return r;
}

MatQ mul_serial(const MatQ& x, const MatQ& y) {
    if (x.q() != y.q() || x.cols() != y.rows()) throw std::invalid_argument("mul shape mismatch");
    MatQ r(x.q(), x.rows(), y.cols());
    const unsigned q = x.q();
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < x.cols(); ++k) {
                acc += std::uint64_t(x.at(i, k)) * y.at(k, j);
                if (acc >= (1ULL << 62)) acc %= q;
            }
            r.at(i, j) = Sym(acc % q);
        }
    return r;
}

MatQ mul(const MatQ& x, const MatQ& y) {
    if (x.q() != y.q() || x.cols() != y.rows()) throw std::invalid_argument("mul shape mismatch");
    MatQ r(x.q(), x.rows(), y.cols());
    const unsigned q = x.q();
    const long long nrows = (long long)x.rows();
#pragma omp parallel for schedule(static) if (x.rows() * y.cols() * x.cols() > 4096)
    for (long long i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < x.cols(); ++k) {
                acc += std::uint64_t(x.at(std::size_t(i), k)) * y.at(k, j);
                if (acc >= (1ULL << 62)) acc %= q;
            }
            r.at(std::size_t(i), j) = Sym(acc % q);
        }
    return r;
}

RreResult rre(const MatQ& x) {
    MatQ R = x;
    const unsigned q = R.q();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
        std::size_t pr = r;
        while (pr < R.rows() && R.at(pr, c) == 0) ++pr;
        if (pr == R.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < R.cols(); ++j) std::swap(R.at(pr, j), R.at(r, j));
        const Sym piv_inv = fq::inv(R.at(r, c), q);
        for (std::size_t j = c; j < R.cols(); ++j) R.at(r, j) = fq::mul(R.at(r, j), piv_inv, q);
        for (std::size_t i = 0; i < R.rows(); ++i) {
            if (i == r || R.at(i, c) == 0) continue;
            const Sym f = R.at(i, c);
            for (std::size_t j = c; j < R.cols(); ++j)
                R.at(i, j) = fq::sub(R.at(i, j), fq::mul(f, R.at(r, j), q), q);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(R), std::move(pivots)};
}

std::size_t rank(const MatQ& x) { return rre(x).pivots.size(); }

std::size_t rank_distance(const MatQ& x, const MatQ& y) { return rank(sub(y, x)); }

MatQ right_inverse(const MatQ& h) {
    const std::size_t n = h.rows(), m = h.cols();
    if (n > m) throw std::invalid_argument("right inverse needs n <= m");
    // solve h Q = I column by column via RRE of [h | I]
    RreResult red = rre(hcat(h, MatQ::identity(h.q(), n)));
    // h has full row rank iff the first n pivots all land in the h block
    if (red.pivots.size() < n || red.pivots[n - 1] >= m)
        throw std::invalid_argument("matrix does not have full row rank");
    // red.R = [E | T] with E = RRE(h) = T h. E's pivot columns are unit vectors,
    // so Q with row T_r at pivot position p_r satisfies E Q = T, hence h Q = I.
    MatQ Q(h.q(), m, n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t p = red.pivots[r];
        for (std::size_t j = 0; j < n; ++j) Q.at(p, j) = red.R.at(r, m + j);
    }
    return Q;
}

Subspace Subspace::row_space(const MatQ& x) {
    RreResult red = rre(x);
    Subspace s;
    s.ambient_ = x.cols();
    const std::size_t d = red.pivots.size();
    MatQ b(x.q(), d, x.cols());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) b.at(i, j) = red.R.at(i, j);
    s.basis_ = std::move(b);
    return s;
}

bool Subspace::contains(const Subspace& o) const {
    if (ambient_ != o.ambient_) return false;
    return sum(*this, o) == *this;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    if (u.dim() == 0) return v;
    if (v.dim() == 0) return u;
    return Subspace::row_space(vstack(u.basis(), v.basis()));
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    std::size_t s;
    if (u.dim() == 0)
        s = v.dim();
    else if (v.dim() == 0)
        s = u.dim();
    else
        s = rank(vstack(u.basis(), v.basis()));
    return 2 * s - u.dim() - v.dim();
}

BigInt gaussian_coefficient(unsigned q, unsigned M, unsigned n) {
    if (n > M) throw std::invalid_argument("gaussian coefficient needs n <= M");
    BigInt num = 1, den = 1;
    const BigInt bq = q;
    for (unsigned i = 0; i < n; ++i) {
        num *= boost::multiprecision::pow(bq, M - i) - 1;
        den *= boost::multiprecision::pow(bq, i + 1) - 1;
    }
    return num / den;
}

SingletonBounds singleton_bounds(unsigned q, unsigned n, unsigned m, unsigned d) {
    if (d < 1 || d > std::min(n, m)) throw std::invalid_argument("d out of range");
    const unsigned lo = std::min(n, m), hi = std::max(n, m);
    SingletonBounds b;
    b.rank_metric_bound = boost::multiprecision::pow(BigInt(q), hi * (lo - d + 1));
    b.subspace_bound = 4 * b.rank_metric_bound;
    b.sub_optimality = 4.0 / (double(n + m) * std::log2(double(q)));
    return b;
}

MatQ ext_vector_to_mat(const Field& f, const std::vector<Ext>& v) {
    MatQ x(f.q(), v.size(), f.m());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].c.size() != f.m()) throw std::invalid_argument("element from mismatched field");
        for (std::size_t j = 0; j < f.m(); ++j) x.at(i, j) = v[i].c[j];
    }
    return x;
}

std::vector<Ext> mat_to_ext_vector(const Field& f, const MatQ& x) {
    if (x.cols() != f.m() || x.q() != f.q()) throw std::invalid_argument("matrix shape does not match field");
    std::vector<Ext> v(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        v[i] = f.zero();
        for (std::size_t j = 0; j < f.m(); ++j) v[i].c[j] = x.at(i, j);
    }
    return v;
}

std::size_t rank_of_ext_vector(const Field& f, const std::vector<Ext>& v) {
    return rank(ext_vector_to_mat(f, v));
}

}  // namespace rankcode
