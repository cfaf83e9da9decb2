#pragma once

#include <vector>

namespace varbvp {

/// A point of the solution space restricted to the interior indices
/// k = 1..N. Entries are validated to be finite; N >= 2.
class InteriorVector {
public:
    explicit InteriorVector(std::vector<double> values);

    int size() const { return static_cast<int>(values_.size()); }

    /// Value at interior index k, k in 1..N.
    double at(int k) const;

    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

/// A sequence on 1-n .. N+n whose n-wide collars at both ends vanish.
/// This is the zero-extension that realizes the Dirichlet boundary
/// conditions; higher differences of an InteriorVector are taken here.
class ExtendedSequence {
public:
    /// Zero-extends x by n indices on each side.
    ExtendedSequence(const InteriorVector& x, int n);

    /// Builds from raw values on 1-n .. N+n; the collars must be zero.
    ExtendedSequence(std::vector<double> values, int n, int interior_size);

    int n() const { return n_; }
    int interior_size() const { return interior_size_; }

    /// Value at index i, i in 1-n .. N+n.
    double at(int i) const;

    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
    int n_ = 0;
    int interior_size_ = 0;
};

ExtendedSequence extend(const InteriorVector& x, int n);

/// (sum_k |x(k)|^q)^(1/q); q = 2 is the default Euclidean norm.
/// Rejects q < 1.
double norm_q(const InteriorVector& x, double q);

double norm2(const InteriorVector& x);

}  // namespace varbvp
