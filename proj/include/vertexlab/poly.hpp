#pragma once

#include <vector>

#include "vertexlab/rational.hpp"

namespace vxl {

// Univariate polynomial with exact rational coefficients. The variable is
// the matrix row index in the banded-matrix application; the polynomials
// arising there are integer-valued on the integers even when coefficients
// are fractional (binomial-type).
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(const Rat& v) { return RatPoly({v}); }
    static RatPoly x();
    // The polynomial i |-> binom(i + m, m).
    static RatPoly binomial_shifted(long m);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Int& i) const;
    RatPoly shift(long k) const;  // p(x) -> p(x + k)

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    RatPoly operator-() const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  private:
    void trim();
    std::vector<Rat> c_;  // c_[k] is the coefficient of x^k; trailing zeros trimmed
};

}  // namespace vxl
