#ifndef TREELATTICE_ORACLE_HPP
#define TREELATTICE_ORACLE_HPP

// Independent reference computations for tests. Each routine takes a
// deliberately different route from the library function it checks.

#include <complex>
#include <cstdint>
#include <set>
#include <vector>

#include "treelattice/cover.hpp"
#include "treelattice/graph.hpp"
#include "treelattice/words.hpp"

namespace treelattice::oracle {

/// Free reduction by repeated left-to-right scans until nothing cancels.
std::vector<Letter> naive_reduce(std::vector<Letter> letters);

/// Canonical arc cycles of every cyclically reduced closed walk of length
/// 1..mu_max, found by trying all arc sequences and taking the minimum over
/// all rotations explicitly.
std::set<std::vector<ArcId>> brute_force_classes(const RegularGraph& g, int mu_max);

/// Sphere sizes around a lift of v from an explicit breadth-first build of
/// the ball, using only the edge list.
std::vector<std::uint64_t> explicit_sphere_sizes(const RegularGraph& g, Vertex v, int radius);

struct AxisProbe {
    int mu = 0;     // min over the searched ball of d(y, w.y)
    int delta = 0;  // distance from x to the nearest y attaining it
};

/// Locates the axis of w by brute force: searches the ball of radius
/// ceil(d(x, w.x) / 2) around x for vertices of minimal displacement.
AxisProbe probe_axis(const RegularGraph& g, const SpanningTree& st, const Word& w, const TreePath& x);

/// Truncated level-set series for F(s): q^(-s mu) sum_n |L_n| q^(-2sn) Phi(n)
/// with |L_0| = mu/nu, |L_n| = (q-1) q^(n-1) mu/nu and Phi from the
/// three-term recursion.
std::complex<double> fourier_series(double lambda, int q, double phi0, int mu, int nu, std::complex<double> s,
                                    int terms);

/// Same radial recursion, written out independently of the library.
std::vector<double> radial_recursion(double lambda, int q, double phi0, int n_max);

}  // namespace treelattice::oracle

#endif  // TREELATTICE_ORACLE_HPP
