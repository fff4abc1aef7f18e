#pragma once

namespace gnbd::detail {

// Kahan compensated accumulator; enough for the moderately cancelling sums
// (Q_k, hypergeometric terms) that stay within a few orders of the result.
template <typename T>
class KahanSum {
  public:
    void add(T term) {
        T y = term - comp_;
        T t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    T value() const { return sum_; }

  private:
    T sum_{};
    T comp_{};
};

}  // namespace gnbd::detail
