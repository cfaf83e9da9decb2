#include "varbvp/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace varbvp {

InteriorVector::InteriorVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw std::invalid_argument("InteriorVector: N >= 2 required");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("InteriorVector: entries must be finite");
}

double InteriorVector::at(int k) const {
    if (k < 1 || k > size()) throw std::out_of_range("InteriorVector::at: index outside 1..N");
    return values_[static_cast<std::size_t>(k - 1)];
}

ExtendedSequence::ExtendedSequence(const InteriorVector& x, int n)
    : values_(x.values().size() + 2 * static_cast<std::size_t>(n), 0.0),
      n_(n),
      interior_size_(x.size()) {
    if (n < 1) throw std::invalid_argument("ExtendedSequence: n >= 1 required");
    for (int k = 0; k < x.size(); ++k) values_[static_cast<std::size_t>(n + k)] = x.values()[k];
}

ExtendedSequence::ExtendedSequence(std::vector<double> values, int n, int interior_size)
    : values_(std::move(values)), n_(n), interior_size_(interior_size) {
    if (n < 1) throw std::invalid_argument("ExtendedSequence: n >= 1 required");
    if (interior_size < 2) throw std::invalid_argument("ExtendedSequence: N >= 2 required");
    if (values_.size() != static_cast<std::size_t>(interior_size + 2 * n))
        throw std::invalid_argument("ExtendedSequence: length must be N + 2n");
    for (int i = 0; i < n; ++i) {
        if (values_[static_cast<std::size_t>(i)] != 0.0 ||
            values_[values_.size() - 1 - static_cast<std::size_t>(i)] != 0.0)
            throw std::invalid_argument("ExtendedSequence: boundary collars must vanish");
    }
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("ExtendedSequence: entries must be finite");
}

double ExtendedSequence::at(int i) const {
    const int lo = 1 - n_;
    const int hi = interior_size_ + n_;
    if (i < lo || i > hi) throw std::out_of_range("ExtendedSequence::at: index outside 1-n..N+n");
    return values_[static_cast<std::size_t>(i - lo)];
}

ExtendedSequence extend(const InteriorVector& x, int n) { return ExtendedSequence(x, n); }

double norm_q(const InteriorVector& x, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("norm_q: q >= 1 required");
    if (q == 2.0) return norm2(x);
    double s = 0.0;
    for (double v : x.values()) s += std::pow(std::abs(v), q);
    return std::pow(s, 1.0 / q);
}

double norm2(const InteriorVector& x) {
    double s = 0.0;
    for (double v : x.values()) s += v * v;
    return std::sqrt(s);
}

}  // namespace varbvp
