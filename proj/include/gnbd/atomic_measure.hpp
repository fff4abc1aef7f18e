#pragma once

#include <complex>
#include <cstdint>
#include <map>

namespace gnbd {

/// Finite signed measure on the integers, stored sparsely. Atoms with
/// |weight| < 1e-300 are dropped (true zero atoms of the theory, or complete
/// cancellation).
class SignedAtomicMeasure {
  public:
    using Map = std::map<std::int64_t, double>;

    SignedAtomicMeasure() = default;

    static SignedAtomicMeasure dirac(std::int64_t k, double w = 1.0) {
        SignedAtomicMeasure m;
        m.set_atom(k, w);
        return m;
    }

    void set_atom(std::int64_t k, double w);
    void add_atom(std::int64_t k, double w);

    double weight(std::int64_t k) const {
        auto it = atoms_.find(k);
        return it == atoms_.end() ? 0.0 : it->second;
    }

    const Map& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    double total_mass() const;       // sum of weights
    double total_variation() const;  // sum of |weights|

    /// Atom-wise absolute value (the total-variation measure).
    SignedAtomicMeasure abs_measure() const;

    /// Characteristic function sum(w_k e^{iuk}).
    std::complex<double> fourier(double u) const;

  private:
    static constexpr double kZeroAtom = 1e-300;
    Map atoms_;
};

/// Exact discrete convolution of two finite signed measures.
SignedAtomicMeasure convolve(const SignedAtomicMeasure& a, const SignedAtomicMeasure& b);

}  // namespace gnbd
