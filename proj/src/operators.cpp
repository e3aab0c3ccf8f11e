#include "nldirac/operators.hpp"
#include "nldirac/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace nldirac {

namespace {

constexpr int kR = Closure::R;
constexpr int kC = Closure::C;
constexpr int kV = Closure::V;

// Class functions f_d(x) = x · T_d(2x/16 - 1): low-degree polynomials that
// vanish at x = 0 and stay O(1) across the block.  Ascending coefficients.
using Poly = std::vector<double>;

const std::array<Poly, 4> kBasis = {
    Poly{0.0, 1.0},
    Poly{0.0, -1.0, 1.0 / 8.0},
    Poly{0.0, 1.0, -0.5, 1.0 / 32.0},
    Poly{0.0, -1.0, 9.0 / 8.0, -3.0 / 16.0, 1.0 / 128.0},
};

constexpr int kPHard = 2, kQHard = 1;  // exact class counts
constexpr int kPAll = 4, kQAll = 3;    // exact + least-squares class counts
constexpr double kSoftWeight = 1.0;

double polyval(const Poly& c, double x) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

double polyval_d(const Poly& c, double x) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * x + static_cast<double>(i) * c[i];
    return acc;
}

// Central 4th-order coefficient of row k at column j, including the diagonal
// part of P (dimensionless).
double pcen(int S, const Vec& x, int k, int j) {
    double v = 0.0;
    if (j == k - 2) v = 1.0 / 12.0;
    else if (j == k - 1) v = -2.0 / 3.0;
    else if (j == k + 1) v = 2.0 / 3.0;
    else if (j == k + 2) v = -1.0 / 12.0;
    if (j == k) v += static_cast<double>(S + 1) / x[static_cast<std::size_t>(k)];
    return v;
}

struct ExactSolve {
    Eigen::VectorXd particular;  // min-norm solution of A x = b
    Eigen::MatrixXd kernel;      // null-space basis (columns)
};

ExactSolve svd_exact(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > 1e-12 * sv[0]) ++rank;
    const Eigen::VectorXd utb = svd.matrixU().transpose() * b;
    Eigen::VectorXd xp = Eigen::VectorXd::Zero(A.cols());
    for (int i = 0; i < rank; ++i) xp += svd.matrixV().col(i) * (utb[i] / sv[i]);
    ExactSolve out;
    out.particular = xp;
    out.kernel = svd.matrixV().rightCols(A.cols() - rank);
    return out;
}

Eigen::VectorXd lstsq(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    return Eigen::BDCSVD<Eigen::MatrixXd>(A, Eigen::ComputeThinU | Eigen::ComputeThinV)
        .solve(b);
}

void scale_rows(Eigen::MatrixXd& M, Eigen::VectorXd& b) {
    for (int i = 0; i < M.rows(); ++i) {
        const double s = M.row(i).cwiseAbs().maxCoeff();
        if (s > 0.0) {
            M.row(i) /= s;
            b[i] /= s;
        }
    }
}

} // namespace

Closure build_closure(int S) {
    if (S == 0 || S == -1) throw ConfigError("build_closure: vorticity S must avoid {0, -1}");
    const int n_ext = kC + 4;  // block columns + central rows feeding them
    Vec x(static_cast<std::size_t>(n_ext));
    for (int j = 0; j < n_ext; ++j) x[static_cast<std::size_t>(j)] = j + 0.5;

    const auto tP = [S](const Poly& c, double xs) {
        return polyval_d(c, xs) + static_cast<double>(S + 1) * polyval(c, xs) / xs;
    };
    const auto tQ = [S](const Poly& c, double xs) {
        return polyval_d(c, xs) - static_cast<double>(S) * polyval(c, xs) / xs;
    };

    // ---- stage 1: diagonal norm weights -----------------------------------
    // For a class pair (a, b), skew-adjointness of (P, Q) in the norm requires
    //   Σ_j om_j [ f_b(x_j) (P f_a)(x_j) + (Q f_b)(x_j) f_a(x_j) ] = 0
    // with the central/one-sided rows substituted where the row is not solved.
    const auto pair_row = [&](const Poly& ca, const Poly& cb, Eigen::VectorXd& m, double& b) {
        m.setZero(kV);
        b = 0.0;
        for (int j = 0; j < kR; ++j)
            m[j] += x[static_cast<std::size_t>(j)] * polyval(cb, x[static_cast<std::size_t>(j)]) *
                    tP(ca, x[static_cast<std::size_t>(j)]);
        for (int j = 0; j < kC; ++j) {
            const double xj = x[static_cast<std::size_t>(j)];
            double t = xj * tQ(cb, xj) * polyval(ca, xj);
            if (j < kV) m[j] += t;
            else b -= t;
            for (int k = kR; k < j + 3; ++k) {
                const double xk = x[static_cast<std::size_t>(k)];
                t = pcen(S, x, k, j) * xk * polyval(cb, xk) * polyval(ca, xj);
                if (k < kV) m[k] += t;
                else b -= t;
            }
        }
    };

    Eigen::MatrixXd Mh(kPHard * kQHard, kV), Ms(kPAll * kQAll - kPHard * kQHard, kV);
    Eigen::VectorXd bh(Mh.rows()), bs(Ms.rows());
    {
        int ih = 0, is = 0;
        Eigen::VectorXd row(kV);
        double rhs = 0.0;
        for (int a = 0; a < kPAll; ++a)
            for (int b = 0; b < kQAll; ++b) {
                pair_row(kBasis[static_cast<std::size_t>(a)], kBasis[static_cast<std::size_t>(b)],
                         row, rhs);
                if (a < kPHard && b < kQHard) {
                    Mh.row(ih) = row;
                    bh[ih++] = rhs;
                } else {
                    Ms.row(is) = row;
                    bs[is++] = rhs;
                }
            }
    }
    scale_rows(Mh, bh);
    scale_rows(Ms, bs);

    const ExactSolve s1 = svd_exact(Mh, bh);
    Eigen::VectorXd w;
    {
        const Eigen::MatrixXd& N = s1.kernel;
        Eigen::MatrixXd A(Ms.rows() + N.rows(), N.cols());
        A.topRows(Ms.rows()) = Ms * N;
        A.bottomRows(N.rows()) = 0.03 * N;
        Eigen::VectorXd rhs(A.rows());
        rhs.head(Ms.rows()) = bs - Ms * s1.particular;
        rhs.tail(N.rows()) = 0.03 * (Eigen::VectorXd::Ones(kV) - s1.particular);
        w = s1.particular + N * lstsq(A, rhs);
    }

    Vec om(x);
    for (int j = 0; j < kV; ++j) om[static_cast<std::size_t>(j)] = w[j] * x[static_cast<std::size_t>(j)];

    // ---- stage 2: block completion ----------------------------------------
    // Unknowns: the R x C block entries (row-major).  Exactness of a P row on
    // class a is a linear condition on that row; exactness of column j of
    // Q = -Om^{-1} P^T Om on class b couples all block rows through column j.
    const auto idx = [](int j, int k) { return j * kC + k; };

    Eigen::MatrixXd D0 = Eigen::MatrixXd::Zero(kR, kC);  // baseline one-sided/central rows
    {
        const double c0[5] = {-25, 48, -36, 16, -3};
        const double c1[5] = {-3, -10, 18, -6, 1};
        for (int k = 0; k < 5; ++k) {
            D0(0, k) = c0[k] / 12.0;
            D0(1, k) = c1[k] / 12.0;
        }
        const double cc[5] = {1, -8, 0, 8, -1};
        for (int j = 2; j < kR; ++j)
            for (int k = 0; k < 5; ++k) D0(j, j - 2 + k) = cc[k] / 12.0;
        for (int j = 0; j < kR; ++j)
            D0(j, j) += static_cast<double>(S + 1) / x[static_cast<std::size_t>(j)];
    }

    const auto p_row = [&](const Poly& ca, int j, Eigen::VectorXd& row, double& t) {
        row.setZero(kR * kC);
        for (int k = 0; k < kC; ++k) row[idx(j, k)] = polyval(ca, x[static_cast<std::size_t>(k)]);
        t = tP(ca, x[static_cast<std::size_t>(j)]);
    };
    const auto q_row = [&](const Poly& cb, int j, Eigen::VectorXd& row, double& t) {
        row.setZero(kR * kC);
        double acc = 0.0;
        for (int k = 0; k < kR; ++k)
            row[idx(k, j)] = om[static_cast<std::size_t>(k)] * polyval(cb, x[static_cast<std::size_t>(k)]);
        for (int k = kR; k < j + 3; ++k)
            acc += pcen(S, x, k, j) * om[static_cast<std::size_t>(k)] *
                   polyval(cb, x[static_cast<std::size_t>(k)]);
        t = -om[static_cast<std::size_t>(j)] * tQ(cb, x[static_cast<std::size_t>(j)]) - acc;
    };

    const int nh = kPHard * kR + kQHard * kC;
    const int ns = (kPAll - kPHard) * kR + (kQAll - kQHard) * kC;
    Eigen::MatrixXd Ah(nh, kR * kC), As(ns, kR * kC);
    Eigen::VectorXd ch(nh), cs(ns);
    {
        int ih = 0, is = 0;
        Eigen::VectorXd row(kR * kC);
        double t = 0.0;
        for (int a = 0; a < kPHard; ++a)
            for (int j = 0; j < kR; ++j) {
                p_row(kBasis[static_cast<std::size_t>(a)], j, row, t);
                Ah.row(ih) = row;
                ch[ih++] = t;
            }
        for (int b = 0; b < kQHard; ++b)
            for (int j = 0; j < kC; ++j) {
                q_row(kBasis[static_cast<std::size_t>(b)], j, row, t);
                Ah.row(ih) = row;
                ch[ih++] = t;
            }
        for (int a = kPHard; a < kPAll; ++a)
            for (int j = 0; j < kR; ++j) {
                p_row(kBasis[static_cast<std::size_t>(a)], j, row, t);
                As.row(is) = row;
                cs[is++] = t;
            }
        for (int b = kQHard; b < kQAll; ++b)
            for (int j = 0; j < kC; ++j) {
                q_row(kBasis[static_cast<std::size_t>(b)], j, row, t);
                As.row(is) = row;
                cs[is++] = t;
            }
    }
    scale_rows(Ah, ch);
    scale_rows(As, cs);

    const ExactSolve s2 = svd_exact(Ah, ch);
    Eigen::VectorXd xx;
    {
        const Eigen::MatrixXd& Z = s2.kernel;
        Eigen::MatrixXd A(As.rows() + Z.rows(), Z.cols());
        A.topRows(As.rows()) = kSoftWeight * (As * Z);
        A.bottomRows(Z.rows()) = 0.01 * Z;
        Eigen::VectorXd rhs(A.rows());
        rhs.head(As.rows()) = kSoftWeight * (cs - As * s2.particular);
        Eigen::VectorXd d0v(kR * kC);
        for (int j = 0; j < kR; ++j)
            for (int k = 0; k < kC; ++k) d0v[idx(j, k)] = D0(j, k);
        rhs.tail(Z.rows()) = 0.01 * (d0v - s2.particular);
        xx = s2.particular + Z * lstsq(A, rhs);
    }

    Closure out;
    for (int j = 0; j < kR; ++j)
        for (int k = 0; k < kC; ++k)
            out.block[static_cast<std::size_t>(idx(j, k))] = xx[idx(j, k)];
    for (int j = 0; j < kV; ++j) out.wnorm[static_cast<std::size_t>(j)] = w[j];
    const double h1 = (Mh * w - bh).cwiseAbs().maxCoeff();
    const double s1r = (Ms * w - bs).cwiseAbs().maxCoeff();
    const double h2 = (Ah * xx - ch).cwiseAbs().maxCoeff();
    const double s2r = (As * xx - cs).cwiseAbs().maxCoeff();
    out.hard_defect = std::max(h1, h2);
    out.soft_defect = std::max(s1r, s2r);
    return out;
}

RadialOperators::RadialOperators(const RadialGrid& g, int S)
    : grid_(g), S_(S), closure_(build_closure(S)) {
    if (g.n < 32)
        throw ConfigError("RadialOperators: need at least 32 nodes (origin block + boundary rows)");
    if (!(closure_.hard_defect < 1e-9))
        throw std::runtime_error("operator closure: equality classes not met");
    omega_.resize(g.n);
    diag_.resize(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double xj = static_cast<double>(j) + 0.5;
        omega_[j] = (j < kV) ? closure_.wnorm[j] * xj : xj;
        if (!(omega_[j] > 0.0))
            throw std::runtime_error("operator closure: norm weight not positive");
        diag_[j] = static_cast<double>(S + 1) / g.r[j];
    }
}

void RadialOperators::apply_P(const Vec& u, Vec& out) const {
    const std::size_t n = grid_.n;
    if (u.size() != n) throw DomainError("apply_P: length mismatch");
    out.resize(n);
    const double inv_h = 1.0 / grid_.h;
    const double ih = inv_h / 12.0;
    for (int i = 0; i < kR; ++i) {
        double acc = 0.0;
        const double* row = closure_.block.data() + static_cast<std::size_t>(i) * kC;
        for (int k = 0; k < kC; ++k) acc += row[k] * u[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(i)] = acc * inv_h;
    }
    for (std::size_t j = kR; j + 2 < n; ++j)
        out[j] = (u[j - 2] - 8.0 * u[j - 1] + 8.0 * u[j + 1] - u[j + 2]) * ih + diag_[j] * u[j];
    out[n - 2] = (-u[n - 5] + 6.0 * u[n - 4] - 18.0 * u[n - 3] + 10.0 * u[n - 2] +
                  3.0 * u[n - 1]) * ih + diag_[n - 2] * u[n - 2];
    out[n - 1] = (3.0 * u[n - 5] - 16.0 * u[n - 4] + 36.0 * u[n - 3] - 48.0 * u[n - 2] +
                  25.0 * u[n - 1]) * ih + diag_[n - 1] * u[n - 1];
}

void RadialOperators::apply_Q(const Vec& u, Vec& out) const {
    const std::size_t n = grid_.n;
    if (u.size() != n) throw DomainError("apply_Q: length mismatch");
    // out = -Om^{-1} P^T (Om u): scatter each row of P against om_i * u_i.
    Vec y(n, 0.0);
    const double inv_h = 1.0 / grid_.h;
    const double ih = inv_h / 12.0;
    for (int i = 0; i < kR; ++i) {
        const double z = omega_[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)] * inv_h;
        const double* row = closure_.block.data() + static_cast<std::size_t>(i) * kC;
        for (int k = 0; k < kC; ++k) y[static_cast<std::size_t>(k)] += row[k] * z;
    }
    for (std::size_t i = kR; i + 2 < n; ++i) {
        const double z = omega_[i] * u[i];
        const double zc = z * ih;
        y[i - 2] += zc;
        y[i - 1] -= 8.0 * zc;
        y[i + 1] += 8.0 * zc;
        y[i + 2] -= zc;
        y[i] += diag_[i] * z;
    }
    {
        const double z = omega_[n - 2] * u[n - 2];
        const double zc = z * ih;
        y[n - 5] -= zc;
        y[n - 4] += 6.0 * zc;
        y[n - 3] -= 18.0 * zc;
        y[n - 2] += 10.0 * zc + diag_[n - 2] * z;
        y[n - 1] += 3.0 * zc;
    }
    {
        const double z = omega_[n - 1] * u[n - 1];
        const double zc = z * ih;
        y[n - 5] += 3.0 * zc;
        y[n - 4] -= 16.0 * zc;
        y[n - 3] += 36.0 * zc;
        y[n - 2] -= 48.0 * zc;
        y[n - 1] += 25.0 * zc + diag_[n - 1] * z;
    }
    out.resize(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = -y[j] / omega_[j];
}

Vec RadialOperators::apply_P(const Vec& u) const {
    Vec out;
    apply_P(u, out);
    return out;
}

Vec RadialOperators::apply_Q(const Vec& u) const {
    Vec out;
    apply_Q(u, out);
    return out;
}

} // namespace nldirac
