#include "treelattice/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "treelattice/error.hpp"

namespace treelattice {

namespace {

constexpr double pole_tolerance = 1e-8;

Complex qpow(int q, Complex w) { return std::exp(w * std::log(static_cast<double>(q))); }

}  // namespace

SpectralData eigendecompose(const RegularGraph& g, double residual_tol) {
    const int n = g.num_vertices();
    Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
    for (const Arc& a : g.arcs()) laplacian(a.origin, a.terminus) = 1.0 / g.degree();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
    if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");

    SpectralData out;
    out.q = g.q();
    out.size = n;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    const auto& values = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values(a) > values(b); });

    out.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd v = solver.eigenvectors().col(order[static_cast<std::size_t>(i)]);
        if (i == 0 && v.sum() < 0) v = -v;
        out.eigenvalues.push_back(values(order[static_cast<std::size_t>(i)]));
        std::copy(v.data(), v.data() + n, out.vectors.begin() + static_cast<std::ptrdiff_t>(i) * n);
        const double residual = (laplacian * v - out.eigenvalues.back() * v).norm();
        out.max_residual = std::max(out.max_residual, residual);
    }
    if (out.max_residual > residual_tol)
        throw Error("eigensolver residual " + std::to_string(out.max_residual) + " above tolerance");
    return out;
}

double phi_zero(const RegularGraph& g, const SpectralData& spec, const ClassDescriptor& k, int i) {
    double sum = 0.0;
    for (ArcId a : k.primitive_walk) sum += spec.phi(i, g.origin(a));
    return sum / static_cast<double>(k.primitive_walk.size());
}

SphericalParams make_spherical_params(double lambda, int q, double phi0) {
    SphericalParams p;
    p.lambda = lambda;
    p.q = q;
    p.phi0 = phi0;
    p.phi1 = ((q + 1) * lambda - 2.0) * phi0 / (q - 1);

    const double qq = q;
    const double disc = (qq + 1) * (qq + 1) * lambda * lambda - 4 * qq;
    if (std::abs(disc) < degenerate_tolerance * (qq + 1) * (qq + 1)) {
        p.degenerate = true;
        p.sign = lambda >= 0 ? 1 : -1;
        p.alpha_plus = p.alpha_minus = p.sign / std::sqrt(qq);
        p.u_plus = p.u_minus = 0.0;
        return p;
    }
    const Complex root = std::sqrt(Complex(disc, 0.0));
    p.alpha_plus = ((qq + 1) * lambda + root) / (2 * qq);
    p.alpha_minus = ((qq + 1) * lambda - root) / (2 * qq);
    const Complex ratio = ((qq + 1) * (qq + 1) * lambda - 4 * qq) / (2 * (qq - 1) * root);
    p.u_plus = (0.5 + ratio) * phi0;
    p.u_minus = (0.5 - ratio) * phi0;
    return p;
}

double spherical(const SphericalParams& p, int n) {
    if (n == 0) return p.phi0;
    if (p.degenerate) {
        const double sq = std::sqrt(static_cast<double>(p.q));
        const double c = (sq - 1) / (sq + 1);
        const double factor = p.sign > 0 ? c : 1.0 / c;
        return (1.0 + n * factor) * p.phi0 * std::pow(p.alpha_plus.real(), n);
    }
    const Complex v = p.u_plus * std::pow(p.alpha_plus, n) + p.u_minus * std::pow(p.alpha_minus, n);
    return v.real();
}

std::vector<double> spherical_by_recursion(const SphericalParams& p, int n_max) {
    std::vector<double> phi{p.phi0};
    if (n_max >= 1) phi.push_back(p.phi1);
    const double q = p.q;
    for (int n = 1; n < n_max; ++n)
        phi.push_back((q + 1) / q * p.lambda * phi[static_cast<std::size_t>(n)] - phi[static_cast<std::size_t>(n) - 1] / q);
    return phi;
}

FourierValue fourier_coefficient(const SphericalParams& p, int mu, int nu, Complex s) {
    const double q = p.q;
    const Complex prefactor = qpow(p.q, -s * static_cast<double>(mu)) * (static_cast<double>(mu) / nu);
    FourierValue out;
    if (p.degenerate) {
        const double sq = std::sqrt(q);
        const double c = (sq - 1) / (sq + 1);
        const double factor = p.sign > 0 ? c : 1.0 / c;
        const Complex y = static_cast<double>(p.sign) * qpow(p.q, 0.5 - 2.0 * s);
        out.near_pole = std::abs(1.0 - y) < pole_tolerance;
        out.series_converges = std::abs(y) < 1.0;
        out.value = prefactor * p.phi0 / q +
                    prefactor * (q - 1) / q * p.phi0 / (1.0 - y) +
                    prefactor * (q - 1) / q * p.phi0 * factor * y / ((1.0 - y) * (1.0 - y));
        return out;
    }
    const Complex z = qpow(p.q, 1.0 - 2.0 * s);
    const Complex dp = 1.0 - p.alpha_plus * z;
    const Complex dm = 1.0 - p.alpha_minus * z;
    out.near_pole = std::abs(dp) < pole_tolerance || std::abs(dm) < pole_tolerance;
    out.series_converges = std::abs(p.alpha_plus * z) < 1.0 && std::abs(p.alpha_minus * z) < 1.0;
    out.value = prefactor * (q - 1) / q * ((p.u_plus + p.u_minus) / (q - 1) + p.u_plus / dp + p.u_minus / dm);
    return out;
}

Complex leading_term(int mu, int nu, int num_vertices, int q, Complex s) {
    const double qq = q;
    return static_cast<double>(mu) / (static_cast<double>(nu) * num_vertices) / qpow(q, s * static_cast<double>(mu) + 1.0) *
           (1.0 + (qq - 1) / (1.0 - qpow(q, 1.0 - 2.0 * s)));
}

Complex bipartite_extra_term(int mu, int nu, int num_vertices, int q, Complex s) {
    const double qq = q;
    return static_cast<double>(mu) / (static_cast<double>(nu) * num_vertices) / qpow(q, s * static_cast<double>(mu) + 1.0) *
           (1.0 + (qq - 1) / (1.0 + qpow(q, 1.0 - 2.0 * s)));
}

ClosedFormValue g_closed(const RegularGraph& g, const SpectralData& spec, const ClassDescriptor& k, Vertex x,
                         Complex s) {
    ClosedFormValue out;
    out.value = 0.0;
    for (int i = 0; i < spec.size; ++i) {
        const auto params = make_spherical_params(spec.eigenvalues[static_cast<std::size_t>(i)], spec.q,
                                                  phi_zero(g, spec, k, i));
        const auto f = fourier_coefficient(params, k.mu, k.nu, s);
        out.coefficients.push_back(f.value);
        out.near_pole = out.near_pole || f.near_pole;
        out.value += f.value * spec.phi(i, x);
    }
    return out;
}

double tail_bound(int q, double re_s, int n_trunc) {
    const double r = std::pow(static_cast<double>(q), 1.0 - re_s);
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::pow(r, n_trunc + 1) / (1.0 - r);
}

Complex series_from_table(const CountTable& table, Complex s) {
    Complex sum = 0.0;
    std::uint64_t previous = 0;
    for (const CountRow& row : table.rows) {
        const std::uint64_t at = row.count - previous;
        previous = row.count;
        if (at != 0) sum += static_cast<double>(at) * qpow(table.q, -s * static_cast<double>(row.n));
    }
    return sum;
}

SeriesValue g_series(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k, const TreePath& x,
                     Complex s, int n_trunc, const CountOptions& opts) {
    SeriesValue out;
    const bool enumerate = ball_size(g.q(), n_trunc) <= opts.budget;
    const CountTable table =
        enumerate ? count_class(g, st, k, x, n_trunc, opts) : count_class_axis(g, st, k, x, n_trunc);
    out.count_method = enumerate ? "enumeration" : "axis";
    out.value = series_from_table(table, s);
    out.tail_bound = tail_bound(g.q(), s.real(), n_trunc);
    out.rigorous = s.real() > 2.0;
    return out;
}

}  // namespace treelattice
