#pragma once

#include <vector>

#include "varbvp/linalg.hpp"
#include "varbvp/sequence.hpp"

namespace varbvp {

/// The (N+n) x N matrix D with (D x)(k) equal to the n-th forward
/// difference of the zero-extension of x, rows indexed by k = 1-n .. N.
struct DifferenceMatrix {
    int n = 0;
    int interior_size = 0;
    Matrix mat;

    int row_index_base() const { return 1 - n; }
};

/// Extreme eigenvalues of D^T D together with the a priori bound 4^n.
struct SpectralBounds {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double upper_bound = 0.0;
};

double binomial(int n, int i);

/// m-th forward difference of s evaluated at k = 1-n .. N (result index 0
/// corresponds to k = 1-n). m = 0 restricts s to that range. Rejects
/// m > n since the stencil would leave the extension.
std::vector<double> nth_diff(const ExtendedSequence& s, int m);

DifferenceMatrix build_operator_matrix(int interior_size, int n);

/// A = D^T diag(p) D, the matrix of the quadratic part of the energy;
/// p lives on 1-n .. N (length N+n).
Matrix weighted_gram(const DifferenceMatrix& d, const std::vector<double>& p);

/// lambda_min and lambda_max of D^T D (p = 1). lambda_max <= 4^n is
/// asserted; a violation signals a numerical defect.
SpectralBounds embedding_constants(int interior_size, int n);

}  // namespace varbvp
