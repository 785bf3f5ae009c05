#pragma once

#include <string>
#include <vector>

#include "vertexlab/rational.hpp"

namespace vxl {

using LatticePoint = std::vector<long>;  // integer coordinates in the fixed basis
using CoVector = std::vector<Rat>;       // element of h = Lambda (x) k

LatticePoint lp_add(const LatticePoint& a, const LatticePoint& b);
LatticePoint lp_sub(const LatticePoint& a, const LatticePoint& b);
LatticePoint lp_neg(const LatticePoint& a);
LatticePoint lp_scale(long k, const LatticePoint& a);
bool lp_is_zero(const LatticePoint& a);

enum class Definiteness { PositiveDefinite, SemiPositiveDefinite, Indefinite };
std::string to_string(Definiteness d);

// An integer lattice with a symmetric bilinear form, the bimultiplicative
// sign cocycle fixed on the basis, and the radical/quotient data used by
// the root-system machinery. Immutable after construction.
class LatticeContext {
  public:
    LatticeContext(long rank, std::vector<std::vector<long>> gram);

    static LatticeContext from_json_file(const std::string& path);
    static LatticeContext from_json_text(const std::string& text);
    std::string to_json() const;

    long rank() const { return rank_; }
    const std::vector<std::vector<long>>& gram() const { return gram_; }

    long inner(const LatticePoint& a, const LatticePoint& b) const;
    Rat inner(const CoVector& a, const CoVector& b) const;
    Rat inner(const CoVector& a, const LatticePoint& b) const;
    long norm(const LatticePoint& a) const { return inner(a, a); }

    // The sign cocycle: bimultiplicative, eps(e_i,e_j) = +1 for i <= j, and
    // eps(e_j,e_i) for i < j forced by the quasisymmetry constraint.
    int epsilon(const LatticePoint& a, const LatticePoint& b) const;

    Definiteness definiteness() const { return defType_; }
    bool degenerate() const { return !radical_.empty(); }

    // Z-basis of the radical {x : (x|Lambda) = 0}; empty when nondegenerate.
    const std::vector<LatticePoint>& radical() const { return radical_; }

    // Image in the quotient by the radical (identity map when nondegenerate).
    // Requires a semi-positive definite form.
    std::vector<long> project(const LatticePoint& a) const;
    long quotient_rank() const { return rank_ - static_cast<long>(radical_.size()); }
    const std::vector<std::vector<long>>& quotient_gram() const { return quotientGram_; }
    long quotient_inner(const std::vector<long>& a, const std::vector<long>& b) const;

    // Gram matrix inverse (for dual bases / the conformal vector).
    const std::vector<std::vector<Rat>>& gram_inverse() const;

    CoVector covector(const LatticePoint& a) const;

    bool operator==(const LatticeContext& o) const {
        return rank_ == o.rank_ && gram_ == o.gram_;
    }

  private:
    void build_radical_and_quotient();

    long rank_;
    std::vector<std::vector<long>> gram_;
    std::vector<std::vector<int>> epsSignExp_;  // exponent of -1 for basis pairs
    std::vector<LatticePoint> radical_;
    std::vector<std::vector<long>> basisChange_;    // unimodular, first rows = radical
    std::vector<std::vector<Rat>> basisChangeInv_;  // rational inverse of the above
    std::vector<std::vector<long>> quotientGram_;
    Definiteness defType_ = Definiteness::PositiveDefinite;
    mutable std::vector<std::vector<Rat>> gramInv_;  // built on demand
    mutable bool gramInvBuilt_ = false;
};

}  // namespace vxl
