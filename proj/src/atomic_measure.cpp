#include "gnbd/atomic_measure.hpp"

#include <cmath>

#include "gnbd/detail/kahan.hpp"

namespace gnbd {

void SignedAtomicMeasure::set_atom(std::int64_t k, double w) {
    if (std::abs(w) < kZeroAtom)
        atoms_.erase(k);
    else
        atoms_[k] = w;
}

void SignedAtomicMeasure::add_atom(std::int64_t k, double w) {
    auto [it, inserted] = atoms_.try_emplace(k, 0.0);
    it->second += w;
    if (std::abs(it->second) < kZeroAtom) atoms_.erase(it);
}

double SignedAtomicMeasure::total_mass() const {
    detail::KahanSum<double> s;
    for (const auto& [k, w] : atoms_) s.add(w);
    return s.value();
}

double SignedAtomicMeasure::total_variation() const {
    detail::KahanSum<double> s;
    for (const auto& [k, w] : atoms_) s.add(std::abs(w));
    return s.value();
}

SignedAtomicMeasure SignedAtomicMeasure::abs_measure() const {
    SignedAtomicMeasure out;
    for (const auto& [k, w] : atoms_) out.set_atom(k, std::abs(w));
    return out;
}

std::complex<double> SignedAtomicMeasure::fourier(double u) const {
    detail::KahanSum<std::complex<double>> s;
    for (const auto& [k, w] : atoms_)
        s.add(w * std::complex<double>{std::cos(u * k), std::sin(u * k)});
    return s.value();
}

SignedAtomicMeasure convolve(const SignedAtomicMeasure& a, const SignedAtomicMeasure& b) {
    SignedAtomicMeasure out;
    for (const auto& [i, wa] : a.atoms())
        for (const auto& [j, wb] : b.atoms()) out.add_atom(i + j, wa * wb);
    return out;
}

}  // namespace gnbd
