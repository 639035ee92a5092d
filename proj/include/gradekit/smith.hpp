#pragma once

// Smith normal form over Z (modulus 0) or over Z/m, with unimodular
// transforms.  Over Z/m every entry is kept in [0, m) and each diagonal entry
// is normalized to a divisor of m, so no coefficient growth occurs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace gradekit {

template <class Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using IntVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
Scalar ext_gcd(Scalar a, Scalar b, Scalar& x, Scalar& y)
{
    Scalar x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Scalar t = a / b;
        Scalar r = a - t * b;
        a = b;
        b = r;
        Scalar nx = x0 - t * x1, ny = y0 - t * y1;
        x0 = x1;
        y0 = y1;
        x1 = nx;
        y1 = ny;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

template <class Scalar>
Scalar mod_reduce(Scalar x, Scalar m)
{
    if (m == 0) return x;
    x %= m;
    return x < 0 ? x + m : x;
}

template <class Scalar>
Scalar mod_inverse(Scalar a, Scalar m)
{
    Scalar x, y;
    ext_gcd<Scalar>(mod_reduce(a, m), m, x, y);
    return mod_reduce(x, m);
}

template <class Scalar>
struct SmithForm {
    Scalar modulus = 0;
    IntMatrix<Scalar> D;     // P * A * Q = D
    IntMatrix<Scalar> P, Pinv, Q, Qinv;
    std::vector<Scalar> diagonal() const
    {
        std::vector<Scalar> d;
        for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
        return d;
    }
};

struct SmithOptions {
    bool left = true;   // compute P and Pinv
    bool right = true;  // compute Q and Qinv
};

namespace detail {

template <class Scalar>
class SmithWorker {
public:
    SmithWorker(IntMatrix<Scalar> A, Scalar m, SmithOptions opt) : A_(std::move(A)), m_(m), opt_(opt)
    {
        const Eigen::Index r = A_.rows(), c = A_.cols();
        if (opt_.left) {
            P_ = IntMatrix<Scalar>::Identity(r, r);
            Pinv_ = IntMatrix<Scalar>::Identity(r, r);
        }
        if (opt_.right) {
            Q_ = IntMatrix<Scalar>::Identity(c, c);
            Qinv_ = IntMatrix<Scalar>::Identity(c, c);
        }
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < c; ++j) A_(i, j) = red(A_(i, j));
    }

    SmithForm<Scalar> run()
    {
        const Eigen::Index n = std::min(A_.rows(), A_.cols());
        for (Eigen::Index t = 0; t < n; ++t) {
            if (!place_pivot(t)) break;
            for (;;) {
                clear(t);
                normalize(t);
                Eigen::Index bad_row = -1;
                const Scalar g = A_(t, t);
                for (Eigen::Index i = t + 1; i < A_.rows() && bad_row < 0; ++i)
                    for (Eigen::Index j = t + 1; j < A_.cols(); ++j)
                        if (A_(i, j) % g != 0) {
                            bad_row = i;
                            break;
                        }
                if (bad_row < 0) break;
                row_addmul(t, bad_row, 1);
            }
        }
        SmithForm<Scalar> out;
        out.modulus = m_;
        out.D = std::move(A_);
        out.P = std::move(P_);
        out.Pinv = std::move(Pinv_);
        out.Q = std::move(Q_);
        out.Qinv = std::move(Qinv_);
        return out;
    }

private:
    IntMatrix<Scalar> A_, P_, Pinv_, Q_, Qinv_;
    Scalar m_;
    SmithOptions opt_;

    Scalar red(Scalar x) const { return mod_reduce(x, m_); }
    Scalar size_of(Scalar x) const { return x < 0 ? -x : x; }

    bool place_pivot(Eigen::Index t)
    {
        Eigen::Index bi = -1, bj = -1;
        Scalar best = 0;
        for (Eigen::Index j = t; j < A_.cols(); ++j)
            for (Eigen::Index i = t; i < A_.rows(); ++i) {
                Scalar v = size_of(A_(i, j));
                if (v != 0 && (bi < 0 || v < best)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) return false;
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
    }

    void clear(Eigen::Index t)
    {
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (Eigen::Index i = t + 1; i < A_.rows(); ++i) {
                Scalar b = A_(i, t);
                if (b == 0) continue;
                Scalar a = A_(t, t);
                if (a != 0 && b % a == 0) {
                    row_addmul(i, t, -(b / a));
                } else {
                    row_bezout(t, i);
                    dirty = true;
                }
            }
            for (Eigen::Index j = t + 1; j < A_.cols(); ++j) {
                Scalar b = A_(t, j);
                if (b == 0) continue;
                Scalar a = A_(t, t);
                if (a != 0 && b % a == 0) {
                    col_addmul(j, t, -(b / a));
                } else {
                    col_bezout(t, j);
                    dirty = true;
                }
            }
        }
    }

    // Make the pivot a nonnegative divisor of the modulus by a unit scaling.
    void normalize(Eigen::Index t)
    {
        Scalar a = A_(t, t);
        if (m_ == 0) {
            if (a < 0) row_scale(t, -1, -1);
            return;
        }
        Scalar g = std::gcd(a, m_);
        if (g == a) return;
        Scalar mg = m_ / g;
        Scalar u = (a / g) % mg;
        while (std::gcd(u, m_) != 1) u += mg;
        row_scale(t, mod_inverse(u, m_), u);
    }

    void row_swap(Eigen::Index a, Eigen::Index b)
    {
        if (a == b) return;
        A_.row(a).swap(A_.row(b));
        if (opt_.left) {
            P_.row(a).swap(P_.row(b));
            Pinv_.col(a).swap(Pinv_.col(b));
        }
    }
    void col_swap(Eigen::Index a, Eigen::Index b)
    {
        if (a == b) return;
        A_.col(a).swap(A_.col(b));
        if (opt_.right) {
            Q_.col(a).swap(Q_.col(b));
            Qinv_.row(a).swap(Qinv_.row(b));
        }
    }
    // row_i += k * row_j
    void row_addmul(Eigen::Index i, Eigen::Index j, Scalar k)
    {
        k = red(k);
        for (Eigen::Index c = 0; c < A_.cols(); ++c) A_(i, c) = red(A_(i, c) + k * A_(j, c));
        if (opt_.left) {
            for (Eigen::Index c = 0; c < P_.cols(); ++c) P_(i, c) = red(P_(i, c) + k * P_(j, c));
            for (Eigen::Index r = 0; r < Pinv_.rows(); ++r) Pinv_(r, j) = red(Pinv_(r, j) - k * Pinv_(r, i));
        }
    }
    // col_i += k * col_j
    void col_addmul(Eigen::Index i, Eigen::Index j, Scalar k)
    {
        k = red(k);
        for (Eigen::Index r = 0; r < A_.rows(); ++r) A_(r, i) = red(A_(r, i) + k * A_(r, j));
        if (opt_.right) {
            for (Eigen::Index r = 0; r < Q_.rows(); ++r) Q_(r, i) = red(Q_(r, i) + k * Q_(r, j));
            for (Eigen::Index c = 0; c < Qinv_.cols(); ++c) Qinv_(j, c) = red(Qinv_(j, c) - k * Qinv_(i, c));
        }
    }
    // row_t *= u, where uinv * u = 1 in the ring.
    void row_scale(Eigen::Index t, Scalar u, Scalar uinv)
    {
        for (Eigen::Index c = 0; c < A_.cols(); ++c) A_(t, c) = red(A_(t, c) * u);
        if (opt_.left) {
            for (Eigen::Index c = 0; c < P_.cols(); ++c) P_(t, c) = red(P_(t, c) * u);
            for (Eigen::Index r = 0; r < Pinv_.rows(); ++r) Pinv_(r, t) = red(Pinv_(r, t) * uinv);
        }
    }
    // Replace rows (t, i) by [[s, x], [-b/g, a/g]] applied to them, where
    // a = A(t,t), b = A(i,t) and s a + x b = g.  Determinant one.
    void row_bezout(Eigen::Index t, Eigen::Index i)
    {
        Scalar a = A_(t, t), b = A_(i, t), s, x;
        Scalar g = ext_gcd(a, b, s, x);
        Scalar c = -(b / g), d = a / g;
        auto apply = [&](IntMatrix<Scalar>& M) {
            for (Eigen::Index col = 0; col < M.cols(); ++col) {
                Scalar u = M(t, col), v = M(i, col);
                M(t, col) = red(s * u + x * v);
                M(i, col) = red(c * u + d * v);
            }
        };
        apply(A_);
        if (opt_.left) {
            apply(P_);
            // inverse of [[s, x], [c, d]] is [[d, -x], [-c, s]], applied on columns
            for (Eigen::Index r = 0; r < Pinv_.rows(); ++r) {
                Scalar u = Pinv_(r, t), v = Pinv_(r, i);
                Pinv_(r, t) = red(u * d - v * c);
                Pinv_(r, i) = red(-u * x + v * s);
            }
        }
    }
    void col_bezout(Eigen::Index t, Eigen::Index j)
    {
        Scalar a = A_(t, t), b = A_(t, j), s, x;
        Scalar g = ext_gcd(a, b, s, x);
        Scalar c = -(b / g), d = a / g;
        auto apply = [&](IntMatrix<Scalar>& M) {
            for (Eigen::Index r = 0; r < M.rows(); ++r) {
                Scalar u = M(r, t), v = M(r, j);
                M(r, t) = red(s * u + x * v);
                M(r, j) = red(c * u + d * v);
            }
        };
        apply(A_);
        if (opt_.right) {
            apply(Q_);
            for (Eigen::Index col = 0; col < Qinv_.cols(); ++col) {
                Scalar u = Qinv_(t, col), v = Qinv_(j, col);
                Qinv_(t, col) = red(u * d - v * c);
                Qinv_(j, col) = red(-u * x + v * s);
            }
        }
    }
};

}  // namespace detail

template <class Scalar>
SmithForm<Scalar> smith_normal_form(const IntMatrix<Scalar>& A, Scalar modulus = 0, SmithOptions opt = {})
{
    return detail::SmithWorker<Scalar>(A, modulus, opt).run();
}

// Kernel of A over Z/m: generators z_i with additive orders o_i, such that
// the kernel is the internal direct sum of the cyclic groups <z_i>.
template <class Scalar>
struct ModKernel {
    Scalar modulus = 0;
    std::vector<IntVector<Scalar>> generators;
    std::vector<Scalar> orders;
    std::vector<Eigen::Index> slots;  // column of Q each generator came from
    IntMatrix<Scalar> Qinv;

    // Coordinates of x (assumed in the kernel) modulo the orders.
    std::vector<Scalar> coordinates(const IntVector<Scalar>& x) const
    {
        std::vector<Scalar> c;
        for (std::size_t g = 0; g < generators.size(); ++g) {
            Scalar y = 0;
            for (Eigen::Index k = 0; k < x.size(); ++k) y = mod_reduce(y + Qinv(slots[g], k) * x(k), modulus);
            c.push_back((y / (modulus / orders[g])) % orders[g]);
        }
        return c;
    }
};

template <class Scalar>
ModKernel<Scalar> kernel_mod(const IntMatrix<Scalar>& A, Scalar m)
{
    SmithForm<Scalar> s = smith_normal_form<Scalar>(A, m, SmithOptions{false, true});
    ModKernel<Scalar> k;
    k.modulus = m;
    k.Qinv = s.Qinv;
    for (Eigen::Index i = 0; i < A.cols(); ++i) {
        Scalar d = i < A.rows() ? s.D(i, i) : 0;
        Scalar order = d == 0 ? m : std::gcd(d, m);
        if (order == 1) continue;
        IntVector<Scalar> z(A.cols());
        for (Eigen::Index r = 0; r < A.cols(); ++r) z(r) = mod_reduce(s.Q(r, i) * (m / order), m);
        k.generators.push_back(z);
        k.orders.push_back(order);
        k.slots.push_back(i);
    }
    return k;
}

// Solves A x = b over Z/m.
template <class Scalar>
std::optional<IntVector<Scalar>> solve_mod(const IntMatrix<Scalar>& A, const IntVector<Scalar>& b, Scalar m)
{
    SmithForm<Scalar> s = smith_normal_form<Scalar>(A, m);
    IntVector<Scalar> pb(A.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        Scalar acc = 0;
        for (Eigen::Index k = 0; k < A.rows(); ++k) acc = mod_reduce(acc + s.P(i, k) * b(k), m);
        pb(i) = acc;
    }
    IntVector<Scalar> y = IntVector<Scalar>::Zero(A.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        Scalar d = i < A.cols() ? s.D(i, i) : 0;
        if (d == 0) {
            if (pb(i) != 0) return std::nullopt;
            continue;
        }
        // d divides m after normalization
        if (pb(i) % d != 0) return std::nullopt;
        y(i) = pb(i) / d;
    }
    IntVector<Scalar> x(A.cols());
    for (Eigen::Index r = 0; r < A.cols(); ++r) {
        Scalar acc = 0;
        for (Eigen::Index k = 0; k < A.cols(); ++k) acc = mod_reduce(acc + s.Q(r, k) * y(k), m);
        x(r) = acc;
    }
    return x;
}

// Row reduction over Z/m by determinant-one row operations, streaming rows
// with a right-hand side.  Keeps at most one row per pivot column, so a tall
// system shrinks to at most `cols` rows with the same solution set.
template <class Scalar>
class ModEchelon {
public:
    ModEchelon(Eigen::Index cols, Scalar m) : cols_(cols), m_(m), pivot_of_(cols, -1) {}

    void add(std::vector<Scalar> row, Scalar rhs = 0)
    {
        for (auto& v : row) v = mod_reduce(v, m_);
        rhs = mod_reduce(rhs, m_);
        for (Eigen::Index j = 0; j < cols_; ++j) {
            if (row[j] == 0) continue;
            if (pivot_of_[j] < 0) {
                pivot_of_[j] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(row));
                rhs_.push_back(rhs);
                return;
            }
            auto& p = rows_[pivot_of_[j]];
            Scalar& pr = rhs_[pivot_of_[j]];
            Scalar a = p[j], b = row[j];
            if (b % a == 0) {
                Scalar k = b / a;
                for (Eigen::Index c = j; c < cols_; ++c) row[c] = mod_reduce(row[c] - k * p[c], m_);
                rhs = mod_reduce(rhs - k * pr, m_);
            } else {
                Scalar s, x;
                Scalar g = ext_gcd(a, b, s, x);
                Scalar c2 = -(b / g), d2 = a / g;
                for (Eigen::Index c = j; c < cols_; ++c) {
                    Scalar u = p[c], v = row[c];
                    p[c] = mod_reduce(s * u + x * v, m_);
                    row[c] = mod_reduce(c2 * u + d2 * v, m_);
                }
                Scalar u = pr, v = rhs;
                pr = mod_reduce(s * u + x * v, m_);
                rhs = mod_reduce(c2 * u + d2 * v, m_);
            }
        }
        if (rhs != 0) inconsistent_ = true;
    }

    bool inconsistent() const { return inconsistent_; }
    IntMatrix<Scalar> matrix() const
    {
        IntMatrix<Scalar> M(static_cast<Eigen::Index>(rows_.size()), cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (Eigen::Index j = 0; j < cols_; ++j) M(i, j) = rows_[i][j];
        return M;
    }
    IntVector<Scalar> rhs() const
    {
        IntVector<Scalar> v(static_cast<Eigen::Index>(rhs_.size()));
        for (std::size_t i = 0; i < rhs_.size(); ++i) v(i) = rhs_[i];
        return v;
    }

private:
    Eigen::Index cols_;
    Scalar m_;
    std::vector<int> pivot_of_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<Scalar> rhs_;
    bool inconsistent_ = false;
};

}  // namespace gradekit
