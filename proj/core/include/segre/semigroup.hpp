#ifndef SEGRE_SEMIGROUP_HPP
#define SEGRE_SEMIGROUP_HPP

#include <vector>

namespace segre {

/// Numerical semigroup generated by positive integers, normalized by the
/// gcd. Membership is decided by a table up to the conductor and by
/// divisibility beyond it, so vanishing questions over all degrees are
/// exactly decidable.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(const std::vector<long>& generators);

    long gcd() const { return g_; }
    /// Least normalized value c with everything >= c attainable.
    long conductor() const { return conductor_; }
    /// In absolute (unnormalized) units.
    long conductor_abs() const { return conductor_ * g_; }

    bool contains(long n) const;

private:
    long g_;
    long conductor_;
    std::vector<bool> attain_;  // normalized attainability table
};

}  // namespace segre

#endif
