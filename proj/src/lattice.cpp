#include "vertexlab/lattice.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vxl {

LatticePoint lp_add(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
LatticePoint lp_sub(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
LatticePoint lp_neg(const LatticePoint& a) {
    LatticePoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
LatticePoint lp_scale(long k, const LatticePoint& a) {
    LatticePoint r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}
bool lp_is_zero(const LatticePoint& a) {
    for (long x : a)
        if (x != 0) return false;
    return true;
}

std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::PositiveDefinite: return "positive-definite";
        case Definiteness::SemiPositiveDefinite: return "semi-positive-definite";
        default: return "indefinite";
    }
}

LatticeContext::LatticeContext(long rank, std::vector<std::vector<long>> gram)
    : rank_(rank), gram_(std::move(gram)) {
    if (rank_ <= 0) throw std::invalid_argument("lattice: rank must be positive");
    if (static_cast<long>(gram_.size()) != rank_)
        throw std::invalid_argument("lattice: gram size does not match rank");
    for (const auto& row : gram_)
        if (static_cast<long>(row.size()) != rank_)
            throw std::invalid_argument("lattice: gram is not square");
    for (long i = 0; i < rank_; ++i)
        for (long j = 0; j < rank_; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("lattice: gram is not symmetric");

    // eps(e_i,e_j) = 1 for i <= j; for i > j forced by
    // eps(a,b) = (-1)^{(a|a)(b|b)} (-1)^{(a|b)} eps(b,a).
    epsSignExp_.assign(rank_, std::vector<int>(rank_, 0));
    for (long i = 0; i < rank_; ++i)
        for (long j = 0; j < i; ++j)
            epsSignExp_[i][j] =
                static_cast<int>(((gram_[i][i] * gram_[j][j]) + gram_[i][j]) & 1L);

    build_radical_and_quotient();
}

long LatticeContext::inner(const LatticePoint& a, const LatticePoint& b) const {
    if (static_cast<long>(a.size()) != rank_ || static_cast<long>(b.size()) != rank_)
        throw std::invalid_argument("inner: rank mismatch");
    long s = 0;
    for (long i = 0; i < rank_; ++i)
        for (long j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
    return s;
}

Rat LatticeContext::inner(const CoVector& a, const CoVector& b) const {
    if (static_cast<long>(a.size()) != rank_ || static_cast<long>(b.size()) != rank_)
        throw std::invalid_argument("inner: rank mismatch");
    Rat s = 0;
    for (long i = 0; i < rank_; ++i)
        for (long j = 0; j < rank_; ++j) s += a[i] * Rat(gram_[i][j]) * b[j];
    return s;
}

Rat LatticeContext::inner(const CoVector& a, const LatticePoint& b) const {
    if (static_cast<long>(a.size()) != rank_ || static_cast<long>(b.size()) != rank_)
        throw std::invalid_argument("inner: rank mismatch");
    Rat s = 0;
    for (long i = 0; i < rank_; ++i)
        for (long j = 0; j < rank_; ++j) s += a[i] * Rat(gram_[i][j] * b[j]);
    return s;
}

int LatticeContext::epsilon(const LatticePoint& a, const LatticePoint& b) const {
    long e = 0;
    for (long i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < rank_; ++j) {
            if (b[j] == 0) continue;
            e += a[i] * b[j] * epsSignExp_[i][j];
        }
    }
    return (e & 1L) ? -1 : 1;
}

CoVector LatticeContext::covector(const LatticePoint& a) const {
    CoVector v(rank_);
    for (long i = 0; i < rank_; ++i) v[i] = Rat(a[i]);
    return v;
}

namespace {

// Row echelon over Z by Euclidean row operations; returns the transform U
// (unimodular) with U*A the echelon form. Rows of U matching zero rows of
// the echelon form span the left kernel of A.
struct ZEchelon {
    std::vector<std::vector<Int>> h;  // echelon form
    std::vector<std::vector<Int>> u;  // transform
    long rank = 0;
};

ZEchelon z_row_echelon(std::vector<std::vector<Int>> a) {
    const long rows = static_cast<long>(a.size());
    const long cols = rows ? static_cast<long>(a[0].size()) : 0;
    std::vector<std::vector<Int>> u(rows, std::vector<Int>(rows, 0));
    for (long i = 0; i < rows; ++i) u[i][i] = 1;

    long pr = 0;
    for (long c = 0; c < cols && pr < rows; ++c) {
        // Euclid all entries in column c below pr into a single row.
        while (true) {
            long best = -1;
            for (long r = pr; r < rows; ++r)
                if (a[r][c] != 0 && (best < 0 || abs(a[r][c]) < abs(a[best][c]))) best = r;
            if (best < 0) break;
            std::swap(a[pr], a[best]);
            std::swap(u[pr], u[best]);
            bool cleared = true;
            for (long r = pr + 1; r < rows; ++r) {
                if (a[r][c] == 0) continue;
                Int q = a[r][c] / a[pr][c];  // truncated division is fine for Euclid
                for (long k = 0; k < cols; ++k) a[r][k] -= q * a[pr][k];
                for (long k = 0; k < rows; ++k) u[r][k] -= q * u[pr][k];
                if (a[r][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a[pr][c] != 0) {
            if (a[pr][c] < 0) {
                for (long k = 0; k < cols; ++k) a[pr][k] = -a[pr][k];
                for (long k = 0; k < rows; ++k) u[pr][k] = -u[pr][k];
            }
            ++pr;
        }
    }
    return {std::move(a), std::move(u), pr};
}

std::vector<std::vector<Rat>> rat_inverse(const std::vector<std::vector<long>>& m) {
    const long n = static_cast<long>(m.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        a[i][n + i] = 1;
    }
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long r = c; r < n; ++r)
            if (!is_zero(a[r][c])) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::runtime_error("rat_inverse: singular matrix");
        std::swap(a[c], a[piv]);
        Rat d = a[c][c];
        for (long k = 0; k < 2 * n; ++k) a[c][k] /= d;
        for (long r = 0; r < n; ++r) {
            if (r == c || is_zero(a[r][c])) continue;
            Rat f = a[r][c];
            for (long k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

}  // namespace

void LatticeContext::build_radical_and_quotient() {
    std::vector<std::vector<Int>> g(rank_, std::vector<Int>(rank_));
    for (long i = 0; i < rank_; ++i)
        for (long j = 0; j < rank_; ++j) g[i][j] = gram_[i][j];
    ZEchelon ech = z_row_echelon(std::move(g));

    radical_.clear();
    for (long r = ech.rank; r < rank_; ++r) {
        LatticePoint v(rank_);
        for (long k = 0; k < rank_; ++k) {
            if (!ech.u[r][k].fits_slong_p())
                throw std::runtime_error("radical: kernel coordinate overflow");
            v[k] = ech.u[r][k].get_si();
        }
        radical_.push_back(std::move(v));
    }

    // Unimodular basis change with the radical as the leading rows: the
    // echelon transform U already is one (its trailing rows are the kernel),
    // so rotate kernel rows to the front.
    basisChange_.clear();
    for (long r = ech.rank; r < rank_; ++r) {
        std::vector<long> row(rank_);
        for (long k = 0; k < rank_; ++k) row[k] = static_cast<long>(ech.u[r][k].get_si());
        basisChange_.push_back(std::move(row));
    }
    for (long r = 0; r < ech.rank; ++r) {
        std::vector<long> row(rank_);
        for (long k = 0; k < rank_; ++k) {
            if (!ech.u[r][k].fits_slong_p())
                throw std::runtime_error("lattice: basis change overflow");
            row[k] = ech.u[r][k].get_si();
        }
        basisChange_.push_back(std::move(row));
    }
    basisChangeInv_ = rat_inverse(basisChange_);

    const long k = static_cast<long>(radical_.size());
    const long q = rank_ - k;
    quotientGram_.assign(q, std::vector<long>(q, 0));
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b) {
            LatticePoint va(basisChange_[k + a].begin(), basisChange_[k + a].end());
            LatticePoint vb(basisChange_[k + b].begin(), basisChange_[k + b].end());
            quotientGram_[a][b] = inner(va, vb);
        }

    // Sylvester on the (nondegenerate) quotient form.
    bool pd = true;
    {
        std::vector<std::vector<Rat>> m(q, std::vector<Rat>(q));
        for (long i = 0; i < q; ++i)
            for (long j = 0; j < q; ++j) m[i][j] = Rat(quotientGram_[i][j]);
        // leading principal minors via fraction-free-ish elimination
        Rat det = 1;
        for (long c = 0; c < q && pd; ++c) {
            if (is_zero(m[c][c])) {
                // symmetric with zero diagonal pivot on a nondegenerate form
                // cannot be positive definite
                pd = false;
                break;
            }
            det *= m[c][c];
            if (sgn(m[c][c]) <= 0) {
                pd = false;
                break;
            }
            for (long r = c + 1; r < q; ++r) {
                Rat f = m[r][c] / m[c][c];
                for (long cc = c; cc < q; ++cc) m[r][cc] -= f * m[c][cc];
            }
        }
        (void)det;
    }
    if (k == 0)
        defType_ = pd ? Definiteness::PositiveDefinite : Definiteness::Indefinite;
    else
        defType_ = pd ? Definiteness::SemiPositiveDefinite : Definiteness::Indefinite;
}

std::vector<long> LatticeContext::project(const LatticePoint& a) const {
    if (defType_ == Definiteness::Indefinite)
        throw std::invalid_argument("project: form is indefinite");
    if (static_cast<long>(a.size()) != rank_) throw std::invalid_argument("project: rank mismatch");
    const long k = static_cast<long>(radical_.size());
    std::vector<long> out(rank_ - k);
    // coordinates of a in the basisChange_ row basis: c = a * inv(basisChange_)
    for (long j = k; j < rank_; ++j) {
        Rat c = 0;
        for (long i = 0; i < rank_; ++i) c += Rat(a[i]) * basisChangeInv_[i][j];
        if (c.get_den() != 1) throw std::runtime_error("project: non-integer coordinate");
        out[j - k] = static_cast<long>(c.get_num().get_si());
    }
    return out;
}

long LatticeContext::quotient_inner(const std::vector<long>& a, const std::vector<long>& b) const {
    const long q = quotient_rank();
    if (static_cast<long>(a.size()) != q || static_cast<long>(b.size()) != q)
        throw std::invalid_argument("quotient_inner: rank mismatch");
    long s = 0;
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < q; ++j) s += a[i] * quotientGram_[i][j] * b[j];
    return s;
}

const std::vector<std::vector<Rat>>& LatticeContext::gram_inverse() const {
    if (!gramInvBuilt_) {
        gramInv_ = rat_inverse(gram_);
        gramInvBuilt_ = true;
    }
    return gramInv_;
}

LatticeContext LatticeContext::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("rank") || !j.contains("gram"))
        throw std::invalid_argument("lattice json: need fields 'rank' and 'gram'");
    long rank = j["rank"].get<long>();
    std::vector<std::vector<long>> gram;
    for (const auto& row : j["gram"]) {
        std::vector<long> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw std::invalid_argument("lattice json: gram entries must be integers");
            r.push_back(v.get<long>());
        }
        gram.push_back(std::move(r));
    }
    return LatticeContext(rank, std::move(gram));
}

LatticeContext LatticeContext::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open lattice file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string LatticeContext::to_json() const {
    nlohmann::json j;
    j["rank"] = rank_;
    j["gram"] = gram_;
    return j.dump();
}

}  // namespace vxl
