#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vertexlab/fock.hpp"
#include "vertexlab/rational.hpp"

namespace vxl {

// Generator handle inside one presentation. kind 0 is reserved for the
// central element; other kinds are presentation-specific families.
struct Gen {
    int kind = 0;
    long index = 0;
    auto operator<=>(const Gen&) const = default;
};

constexpr int kCentralKind = 0;
inline Gen central_gen() { return Gen{kCentralKind, 0}; }

// Finite k[D]-combination  sum c * D^p g.
class CElement {
  public:
    CElement() = default;
    static CElement unit(Gen g, long dpow = 0, const Rat& c = Rat(1));

    const std::map<std::pair<Gen, long>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Gen g, long dpow, const Rat& c);
    void add(const CElement& o, const Rat& scale = Rat(1));
    CElement operator+(const CElement& o) const;
    CElement operator-(const CElement& o) const;
    CElement operator*(const Rat& s) const;
    CElement d() const;  // apply D (kills the central element)
    CElement d_pow(long p) const;
    bool operator==(const CElement& o) const { return terms_ == o.terms_; }

  private:
    std::map<std::pair<Gen, long>, Rat> terms_;
};

// Element of the coefficient Lie superalgebra: finite sum of modes g(n).
// The central element contributes only through c(-1).
class CoeffElement {
  public:
    static CoeffElement mode(Gen g, long n, const Rat& c = Rat(1));
    const std::map<std::pair<Gen, long>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(Gen g, long n, const Rat& c);
    void add(const CoeffElement& o, const Rat& scale = Rat(1));
    bool operator==(const CoeffElement& o) const { return terms_ == o.terms_; }

  private:
    std::map<std::pair<Gen, long>, Rat> terms_;
};

// A conformal (super)algebra presentation: generators with parity and
// degree, n-product rules (closed-form for the infinite families), an
// optional central element, and locality bounds. Product rules may be
// given for one order of a pair only; the other order is derived through
// quasisymmetry.
class Presentation {
  public:
    std::string name;
    bool hasCenter = false;

    std::function<std::vector<Gen>(long maxIdx)> gens;
    std::function<int(Gen)> parity;      // 0 or 1
    std::function<Rat(Gen)> degree;      // conformal weight
    std::function<long(Gen, Gen)> locality;  // a(n)b = 0 for n >= locality(a,b)
    std::function<std::optional<CElement>(Gen, long, Gen)> rawRule;
    std::function<std::string(Gen)> genName;

    // Product of generators for n >= 0, falling back to quasisymmetry when
    // only the reverse order is tabulated. Memoized.
    CElement gen_product(Gen a, long n, Gen b) const;

    // Bilinear product of elements through the axioms C2/C3.
    CElement cproduct(const CElement& x, long n, const CElement& y) const;

    int element_parity(const CElement& x) const;  // requires homogeneity

    // Lie bracket on coefficients: [a(m), b(n)] = sum binom(m,i) (a_i b)(m+n-i).
    CoeffElement coeff_bracket(const CoeffElement& a, const CoeffElement& b) const;
    CoeffElement coeff_of(const CElement& x, long n) const;  // mode expansion

    std::string format(const CElement& x) const;

  private:
    mutable std::mutex mu_;
    mutable std::map<std::tuple<Gen, long, Gen>, CElement> cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

// Builtin presentations: heisenberg (rank-1 by default), clifford,
// virasoro, weyl, n2, tkk, sl2. "n2ext" is the central extension of n2
// realized inside the norm-3 lattice algebra.
PresentationPtr builtin(const std::string& name);
PresentationPtr heisenberg_presentation(const std::vector<std::vector<long>>& gram);
PresentationPtr presentation_from_json_file(const std::string& path);
PresentationPtr presentation_from_json_text(const std::string& text);

struct CheckReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Verifies C1-C5 and the product grading on all generator pairs/triples
// with family index <= maxGen and product indices <= maxN.
CheckReport axioms_check(const Presentation& p, long maxGen, long maxN);

// Checks that the map generators -> FockState intertwines every n-product
// within the bounds (the central element must map to the vacuum).
CheckReport verify_morphism(const Presentation& p, const std::map<Gen, FockState>& images,
                            const LatticeContext& ctx, long maxGen, long extraN = 2);

// Standard embeddings used by the paper-level verifications; returns the
// presentation, target lattice and generator images for a named algebra:
// clifford, sl2, n2, weyl, tkk.
struct EmbeddingSetup {
    PresentationPtr pres;
    std::shared_ptr<LatticeContext> ctx;
    std::map<Gen, FockState> images;
    long defaultMaxGen = 3;
};
EmbeddingSetup embedding_setup(const std::string& name, long maxGen);

}  // namespace vxl
