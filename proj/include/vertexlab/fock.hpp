#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vertexlab/lattice.hpp"
#include "vertexlab/rational.hpp"

namespace vxl {

// Normal-ordered basis monomial e_{j1}(n1)...e_{jk}(nk) v_beta with all
// n < 0, mode list sorted ascending by (n, j). Duplicates are allowed
// (bosonic modes).
struct FockMonomial {
    std::vector<std::pair<long, long>> modes;  // (n, basis index), n < 0
    LatticePoint label;

    auto operator<=>(const FockMonomial&) const = default;
};

// Exact finite linear combination of Fock monomials over one lattice.
class FockState {
  public:
    FockState() : ctx_(nullptr) {}
    explicit FockState(const LatticeContext* ctx) : ctx_(ctx) {}

    static FockState zero(const LatticeContext& ctx) { return FockState(&ctx); }
    static FockState point(const LatticeContext& ctx, const LatticePoint& beta);
    static FockState vacuum(const LatticeContext& ctx);

    const LatticeContext* context() const { return ctx_; }
    const std::map<FockMonomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const FockMonomial& m, const Rat& c);
    void add(const FockState& o, const Rat& scale = Rat(1));
    FockState operator+(const FockState& o) const;
    FockState operator-(const FockState& o) const;
    FockState operator*(const Rat& s) const;
    bool operator==(const FockState& o) const;

    // Homogeneity queries; throw when the state is not homogeneous.
    bool is_label_homogeneous() const;
    LatticePoint label() const;
    bool is_degree_homogeneous() const;
    Rat degree() const;  // of a homogeneous state
    bool is_parity_homogeneous() const;
    int parity() const;  // 0 or 1

  private:
    const LatticeContext* ctx_;
    std::map<FockMonomial, Rat> terms_;
};

Rat monomial_degree(const LatticeContext& ctx, const FockMonomial& m);
int monomial_parity(const LatticeContext& ctx, const FockMonomial& m);

// Canonical monomial from unsorted creation modes; rejects nonnegative mode
// indices.
FockState normalize(const LatticeContext& ctx, std::vector<std::pair<long, long>> modes,
                    const LatticePoint& beta);

// Action of the Heisenberg mode h(n) on a state.
FockState heis_act(const CoVector& h, long n, const FockState& s);
FockState heis_act(const LatticeContext& ctx, long basisIndex, long n, const FockState& s);

// Coefficient of z^{-n-1} in the vertex operator Gamma_alpha(z) applied to w.
FockState vertex_act(const LatticePoint& alpha, long n, const FockState& w);

// The n-th product u (n) v for any integer n.
FockState product(const FockState& u, long n, const FockState& v);

// Translation operator D.
FockState derive(const FockState& u);

// The conformal vector (1/2) sum_i a_i(-1) b_i(-1) |0> over dual bases;
// requires a nondegenerate form.
FockState omega(const LatticeContext& ctx);

// Largest n for which u (n) v can be nonzero, from the degree bound
// deg u + deg v - n - 1 >= (lab|lab)/2. Returns a very negative value for
// zero states.
long max_product_index(const FockState& u, const FockState& v);

// Exact checks of the vertex superalgebra identities.
bool check_qs(const FockState& u, const FockState& v, long n);
bool check_jacobi(const FockState& u, const FockState& v, const FockState& w, long m, long n);

// State grammar:
//   state := term (('+'|'-') term)* ; term := scalar '*'? monomial? ;
//   scalar := int ('/' int)? ; monomial := (mode)* point ;
//   mode := 'b' idx '(' negint ')' ; point := 'e[' int (',' int)* ']'
// Example: 1/2 * b1(-2) b1(-1) e[0] - 3 e[1,0]
FockState parse_state(const LatticeContext& ctx, const std::string& text);
std::string print_state(const FockState& s);

}  // namespace vxl
