#ifndef TREELATTICE_SPECTRAL_HPP
#define TREELATTICE_SPECTRAL_HPP

#include <complex>
#include <string>
#include <vector>

#include "treelattice/counter.hpp"
#include "treelattice/cover.hpp"
#include "treelattice/graph.hpp"
#include "treelattice/words.hpp"

namespace treelattice {

using Complex = std::complex<double>;

/// Orthonormal eigenbasis of the neighbour-averaging operator
/// (adjacency / (q+1)), eigenvalues in descending order.
struct SpectralData {
    int q = 0;
    int size = 0;
    std::vector<double> eigenvalues;
    std::vector<double> vectors;  // column-major, column i is phi_i
    double max_residual = 0.0;

    double phi(int i, Vertex x) const { return vectors[static_cast<std::size_t>(i) * size + x]; }
};

/// Throws Error if the eigensolver fails or a residual exceeds `residual_tol`.
SpectralData eigendecompose(const RegularGraph& g, double residual_tol = 1e-9);

/// Average of phi_i along the primitive closed walk of the class (the level-0
/// radial average around the axis).
double phi_zero(const RegularGraph& g, const SpectralData& spec, const ClassDescriptor& k, int i);

/// Radial-average data for one eigenvalue.
///
/// Generic branch: Phi(n) = u+ a+^n + u- a-^n with a+- the roots of
/// q a^2 - (q+1) lambda a + 1 = 0. Degenerate branch (double root
/// a = sign/sqrt(q)): Phi(n) = (1 + n c^sign) Phi(0) a^n with
/// c = (sqrt(q)-1)/(sqrt(q)+1); u+- are unused there and set to 0.
struct SphericalParams {
    double lambda = 0.0;
    int q = 0;
    double phi0 = 0.0;
    double phi1 = 0.0;
    Complex alpha_plus, alpha_minus;
    Complex u_plus, u_minus;
    bool degenerate = false;
    int sign = 1;  // sign of lambda on the degenerate branch
};

/// |(q+1)^2 lambda^2 - 4q| below this times (q+1)^2 selects the degenerate branch.
inline constexpr double degenerate_tolerance = 1e-9;

SphericalParams make_spherical_params(double lambda, int q, double phi0);

/// Closed-form Phi(n).
double spherical(const SphericalParams& p, int n);

/// Phi(0..n_max) from the level-0 seed and the three-term recursion.
std::vector<double> spherical_by_recursion(const SphericalParams& p, int n_max);

struct FourierValue {
    Complex value;
    bool near_pole = false;          // |1 - alpha q^(1-2s)| tiny
    bool series_converges = false;   // |alpha q^(1-2s)| < 1 on both roots
};

/// Fourier coefficient F_i(s) of the class generating function.
FourierValue fourier_coefficient(const SphericalParams& p, int mu, int nu, Complex s);

/// Eigenvalue-1 contribution F_0(s) phi_0(x) written directly in mu, nu, |G|, q.
Complex leading_term(int mu, int nu, int num_vertices, int q, Complex s);

/// The additional term a bipartite quotient would contribute if the
/// eigenvalue -1 coefficient had Phi(0) = 1/sqrt(|G|). Exposed so that it
/// can be compared with the direct series; g_closed does not add it.
Complex bipartite_extra_term(int mu, int nu, int num_vertices, int q, Complex s);

struct ClosedFormValue {
    Complex value;
    std::vector<Complex> coefficients;  // F_i(s)
    bool near_pole = false;
};

/// G_K(x, s) = sum_i F_i(s) phi_i(x), the meromorphic closed form.
ClosedFormValue g_closed(const RegularGraph& g, const SpectralData& spec, const ClassDescriptor& k, Vertex x,
                         Complex s);

/// sum_{n > n_trunc} 2 q^n q^(-n Re s); +inf when Re(s) <= 1.
double tail_bound(int q, double re_s, int n_trunc);

struct SeriesValue {
    Complex value;
    double tail_bound = 0.0;
    bool rigorous = false;  // Re(s) > 2
    std::string count_method;  // "enumeration" or "axis"
};

/// Direct series sum_{T in K, d(x,Tx) <= n_trunc} q^(-d s). Counts come from
/// ball enumeration when the ball fits the budget, else from count_class_axis.
SeriesValue g_series(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k, const TreePath& x,
                     Complex s, int n_trunc, const CountOptions& opts = {});

/// Same sum from a precomputed table.
Complex series_from_table(const CountTable& table, Complex s);

}  // namespace treelattice

#endif  // TREELATTICE_SPECTRAL_HPP
