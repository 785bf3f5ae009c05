#include "vertexlab/fock.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace vxl {

namespace {

long rat_floor(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (!f.fits_slong_p()) throw std::runtime_error("rat_floor: overflow");
    return f.get_si();
}

constexpr long kNoProduct = -(1L << 40);

using TermMap = std::map<FockMonomial, Rat>;

void map_add(TermMap& into, const FockMonomial& m, const Rat& c) {
    if (is_zero(c)) return;
    auto it = into.find(m);
    if (it == into.end()) {
        into.emplace(m, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) into.erase(it);
    }
}

void map_add(TermMap& into, const TermMap& from, const Rat& scale) {
    for (const auto& [m, c] : from) map_add(into, m, c * scale);
}

FockMonomial insert_mode(const FockMonomial& m, long n, long j) {
    FockMonomial r = m;
    auto pos = std::lower_bound(r.modes.begin(), r.modes.end(), std::make_pair(n, j));
    r.modes.insert(pos, {n, j});
    return r;
}

// h(n) acting on a single monomial.
TermMap heis_act_mono(const LatticeContext& ctx, const CoVector& h, long n,
                      const FockMonomial& m, const Rat& coeff) {
    TermMap out;
    if (n < 0) {
        for (long i = 0; i < ctx.rank(); ++i) {
            if (is_zero(h[i])) continue;
            map_add(out, insert_mode(m, n, i), coeff * h[i]);
        }
        return out;
    }
    if (n == 0) {
        Rat f = ctx.inner(h, m.label);
        map_add(out, m, coeff * f);
        return out;
    }
    for (size_t pos = 0; pos < m.modes.size(); ++pos) {
        if (m.modes[pos].first != -n) continue;
        LatticePoint ej(ctx.rank(), 0);
        ej[m.modes[pos].second] = 1;
        Rat pair = ctx.inner(h, ej) * Rat(n);
        if (is_zero(pair)) continue;
        FockMonomial r = m;
        r.modes.erase(r.modes.begin() + static_cast<long>(pos));
        map_add(out, r, coeff * pair);
    }
    return out;
}

TermMap heis_act_map(const LatticeContext& ctx, const CoVector& h, long n, const TermMap& s) {
    TermMap out;
    for (const auto& [m, c] : s) {
        TermMap t = heis_act_mono(ctx, h, n, m, c);
        map_add(out, t, Rat(1));
    }
    return out;
}

Rat monomial_min_degree(const LatticeContext& ctx, const LatticePoint& label) {
    return Rat(ctx.inner(label, label)) / 2;
}

long max_index_raw(const LatticeContext& ctx, const Rat& degU, const Rat& degV,
                   const LatticePoint& labU, const LatticePoint& labV) {
    LatticePoint lam = lp_add(labU, labV);
    Rat bound = degU + degV - 1 - monomial_min_degree(ctx, lam);
    return rat_floor(bound);
}

// The coefficient of z^{-n-1} in Gamma_alpha(z) applied to one monomial.
TermMap vertex_act_mono(const LatticeContext& ctx, const LatticePoint& alpha, long n,
                        const FockMonomial& w, const Rat& coeff) {
    const LatticePoint& mu = w.label;
    CoVector ha = ctx.covector(alpha);

    // E_+(alpha,z) w: annihilation part, graded by z^{-d}.
    std::map<long, TermMap> plus;
    plus[0][w] = coeff;
    long kmax = 0;
    for (const auto& md : w.modes) kmax = std::max(kmax, -md.first);
    for (long k = 1; k <= kmax; ++k) {
        std::map<long, TermMap> additions;
        for (const auto& [d, sm] : plus) {
            TermMap cur = sm;
            for (long j = 1;; ++j) {
                cur = heis_act_map(ctx, ha, k, cur);
                if (cur.empty()) break;
                Rat scale = rat(-1, k * j);
                TermMap scaled;
                for (const auto& [m, c] : cur) scaled[m] = c * scale;
                cur = std::move(scaled);
                map_add(additions[d + k * j], cur, Rat(1));
                if (cur.empty()) break;
            }
        }
        for (auto& [d, sm] : additions) map_add(plus[d], sm, Rat(1));
    }

    const long am = ctx.inner(alpha, mu);
    const Rat eps(ctx.epsilon(alpha, mu));
    const LatticePoint shifted = lp_add(alpha, mu);

    TermMap out;
    for (const auto& [d, sm] : plus) {
        long m = d - am - n - 1;
        if (m < 0 || sm.empty()) continue;
        // label shift by e(alpha)
        TermMap base;
        for (const auto& [mm, cc] : sm) {
            FockMonomial r = mm;
            r.label = shifted;
            base[r] = cc * eps;
        }
        // weight-m part of E_-(alpha,z)
        std::map<long, TermMap> minus;
        minus[0] = std::move(base);
        for (long jj = 1; jj <= m; ++jj) {
            std::map<long, TermMap> additions;
            for (const auto& [wgt, sm2] : minus) {
                TermMap cur = sm2;
                for (long t = 1; wgt + jj * t <= m; ++t) {
                    cur = heis_act_map(ctx, ha, -jj, cur);
                    Rat scale = rat(1, jj * t);
                    TermMap scaled;
                    for (const auto& [m2, c2] : cur) scaled[m2] = c2 * scale;
                    cur = std::move(scaled);
                    if (cur.empty()) break;
                    map_add(additions[wgt + jj * t], cur, Rat(1));
                }
            }
            for (auto& [wgt, sm2] : additions) map_add(minus[wgt], sm2, Rat(1));
        }
        auto it = minus.find(m);
        if (it != minus.end()) map_add(out, it->second, Rat(1));
    }
    return out;
}

// Memoized monomial products, keyed by the Gram matrix so equal lattices
// share results and stale pointers can never alias.
struct ProductCache {
    std::mutex mu;
    std::map<std::vector<std::vector<long>>,
             std::map<std::tuple<FockMonomial, long, FockMonomial>, TermMap>>
        shards;
};

ProductCache& product_cache() {
    static ProductCache c;
    return c;
}

TermMap product_mono(const LatticeContext& ctx, const FockMonomial& mu, long n,
                     const FockMonomial& mv);

TermMap product_map(const LatticeContext& ctx, const TermMap& u, long n, const TermMap& v) {
    TermMap out;
    for (const auto& [mu, cu] : u)
        for (const auto& [mv, cv] : v) {
            TermMap t = product_mono(ctx, mu, n, mv);
            map_add(out, t, cu * cv);
        }
    return out;
}

TermMap product_mono(const LatticeContext& ctx, const FockMonomial& mu, long n,
                     const FockMonomial& mv) {
    {
        std::lock_guard<std::mutex> lk(product_cache().mu);
        auto& shard = product_cache().shards[ctx.gram()];
        auto it = shard.find({mu, n, mv});
        if (it != shard.end()) return it->second;
    }

    TermMap out;
    if (mu.modes.empty()) {
        out = vertex_act_mono(ctx, mu.label, n, mv, Rat(1));
    } else {
        // Peel the leading Heisenberg mode e_j(-k) and expand through the
        // vertex Jacobi identity with the (even) generator as outer factor.
        const long k = -mu.modes[0].first;
        const long j0 = mu.modes[0].second;
        FockMonomial rest = mu;
        rest.modes.erase(rest.modes.begin());
        CoVector ej = ctx.covector([&] {
            LatticePoint e(ctx.rank(), 0);
            e[j0] = 1;
            return e;
        }());

        const Rat degRest = monomial_degree(ctx, rest);
        const Rat degV = monomial_degree(ctx, mv);
        const long maxIdx = max_index_raw(ctx, degRest, degV, rest.label, mv.label);

        // s <= -k branch: creation modes wrap products of the remainder.
        for (long s = -k; s >= n - k - maxIdx; --s) {
            TermMap inner = product_mono(ctx, rest, n - k - s, mv);
            if (inner.empty()) continue;
            Int coeff = gbinom(Int(-k), -k - s);
            if (coeff == 0) continue;
            if ((s - k) & 1L) coeff = -coeff;
            TermMap t = heis_act_map(ctx, ej, s, inner);
            map_add(out, t, Rat(coeff));
        }

        // s >= 0 branch: annihilation on the right factor first.
        long smax = 0;
        for (const auto& md : mv.modes) smax = std::max(smax, -md.first);
        TermMap mvState{{mv, Rat(1)}};
        for (long s = 0; s <= smax; ++s) {
            TermMap hv = heis_act_map(ctx, ej, s, mvState);
            if (hv.empty()) continue;
            Int coeff = gbinom(Int(-k), s);
            if ((s - k) & 1L) coeff = -coeff;
            TermMap t;
            for (const auto& [mh, ch] : hv) {
                TermMap inner = product_mono(ctx, rest, n - k - s, mh);
                map_add(t, inner, ch);
            }
            map_add(out, t, Rat(-coeff));
        }
    }

    {
        std::lock_guard<std::mutex> lk(product_cache().mu);
        product_cache().shards[ctx.gram()].emplace(std::make_tuple(mu, n, mv), out);
    }
    return out;
}

}  // namespace

Rat monomial_degree(const LatticeContext& ctx, const FockMonomial& m) {
    Rat d = monomial_min_degree(ctx, m.label);
    for (const auto& md : m.modes) d += Rat(-md.first);
    return d;
}

int monomial_parity(const LatticeContext& ctx, const FockMonomial& m) {
    long nrm = ctx.inner(m.label, m.label);
    return static_cast<int>(((nrm % 2) + 2) % 2);
}

FockState FockState::point(const LatticeContext& ctx, const LatticePoint& beta) {
    if (static_cast<long>(beta.size()) != ctx.rank())
        throw std::invalid_argument("point: rank mismatch");
    FockState s(&ctx);
    s.terms_[FockMonomial{{}, beta}] = 1;
    return s;
}

FockState FockState::vacuum(const LatticeContext& ctx) {
    return point(ctx, LatticePoint(ctx.rank(), 0));
}

void FockState::add_term(const FockMonomial& m, const Rat& c) { map_add(terms_, m, c); }

void FockState::add(const FockState& o, const Rat& scale) {
    if (o.ctx_ && ctx_ && !(*o.ctx_ == *ctx_))
        throw std::invalid_argument("fock: lattice mismatch");
    if (!ctx_) ctx_ = o.ctx_;
    map_add(terms_, o.terms_, scale);
}

FockState FockState::operator+(const FockState& o) const {
    FockState r = *this;
    r.add(o);
    return r;
}

FockState FockState::operator-(const FockState& o) const {
    FockState r = *this;
    r.add(o, Rat(-1));
    return r;
}

FockState FockState::operator*(const Rat& s) const {
    FockState r(ctx_);
    if (is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c * s;
    return r;
}

bool FockState::operator==(const FockState& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    return terms_ == o.terms_;
}

bool FockState::is_label_homogeneous() const {
    if (terms_.empty()) return true;
    const LatticePoint& l = terms_.begin()->first.label;
    for (const auto& [m, c] : terms_)
        if (m.label != l) return false;
    return true;
}

LatticePoint FockState::label() const {
    if (terms_.empty()) throw std::invalid_argument("label: zero state");
    if (!is_label_homogeneous()) throw std::invalid_argument("label: inhomogeneous state");
    return terms_.begin()->first.label;
}

bool FockState::is_degree_homogeneous() const {
    if (terms_.empty()) return true;
    Rat d = monomial_degree(*ctx_, terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_degree(*ctx_, m) != d) return false;
    return true;
}

Rat FockState::degree() const {
    if (terms_.empty()) throw std::invalid_argument("degree: zero state");
    if (!is_degree_homogeneous()) throw std::invalid_argument("degree: inhomogeneous state");
    return monomial_degree(*ctx_, terms_.begin()->first);
}

bool FockState::is_parity_homogeneous() const {
    if (terms_.empty()) return true;
    int p = monomial_parity(*ctx_, terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (monomial_parity(*ctx_, m) != p) return false;
    return true;
}

int FockState::parity() const {
    if (terms_.empty()) return 0;
    if (!is_parity_homogeneous()) throw std::invalid_argument("parity: inhomogeneous state");
    return monomial_parity(*ctx_, terms_.begin()->first);
}

FockState normalize(const LatticeContext& ctx, std::vector<std::pair<long, long>> modes,
                    const LatticePoint& beta) {
    for (const auto& [n, j] : modes) {
        if (n >= 0) throw std::invalid_argument("normalize: mode index must be negative");
        if (j < 0 || j >= ctx.rank()) throw std::invalid_argument("normalize: bad basis index");
    }
    if (static_cast<long>(beta.size()) != ctx.rank())
        throw std::invalid_argument("normalize: rank mismatch");
    std::sort(modes.begin(), modes.end());
    FockState s(&ctx);
    s.add_term(FockMonomial{std::move(modes), beta}, Rat(1));
    return s;
}

FockState heis_act(const CoVector& h, long n, const FockState& s) {
    if (!s.context()) return s;
    const LatticeContext& ctx = *s.context();
    FockState out(&ctx);
    for (const auto& [m, c] : s.terms()) {
        TermMap t = heis_act_mono(ctx, h, n, m, c);
        for (const auto& [mm, cc] : t) out.add_term(mm, cc);
    }
    return out;
}

FockState heis_act(const LatticeContext& ctx, long basisIndex, long n, const FockState& s) {
    CoVector h(ctx.rank(), Rat(0));
    h[basisIndex] = 1;
    return heis_act(h, n, s);
}

FockState vertex_act(const LatticePoint& alpha, long n, const FockState& w) {
    if (!w.context()) return w;
    const LatticeContext& ctx = *w.context();
    FockState out(&ctx);
    for (const auto& [m, c] : w.terms()) {
        TermMap t = vertex_act_mono(ctx, alpha, n, m, c);
        for (const auto& [mm, cc] : t) out.add_term(mm, cc);
    }
    return out;
}

FockState product(const FockState& u, long n, const FockState& v) {
    if (!u.context() || !v.context()) return FockState();
    if (!(*u.context() == *v.context())) throw std::invalid_argument("product: lattice mismatch");
    const LatticeContext& ctx = *u.context();
    FockState out(&ctx);
    TermMap t = product_map(ctx, u.terms(), n, v.terms());
    for (const auto& [mm, cc] : t) out.add_term(mm, cc);
    return out;
}

FockState derive(const FockState& u) {
    if (!u.context()) return u;
    const LatticeContext& ctx = *u.context();
    FockState out(&ctx);
    for (const auto& [m, c] : u.terms()) {
        for (size_t pos = 0; pos < m.modes.size(); ++pos) {
            FockMonomial r = m;
            auto [n, j] = r.modes[pos];
            r.modes.erase(r.modes.begin() + static_cast<long>(pos));
            out.add_term(insert_mode(r, n - 1, j), c * Rat(-n));
        }
        for (long i = 0; i < ctx.rank(); ++i) {
            if (m.label[i] == 0) continue;
            out.add_term(insert_mode(m, -1, i), c * Rat(m.label[i]));
        }
    }
    return out;
}

FockState omega(const LatticeContext& ctx) {
    const auto& gi = ctx.gram_inverse();
    FockState out(&ctx);
    LatticePoint zero(ctx.rank(), 0);
    for (long i = 0; i < ctx.rank(); ++i)
        for (long k = 0; k < ctx.rank(); ++k) {
            if (is_zero(gi[i][k])) continue;
            FockMonomial m{{}, zero};
            m = insert_mode(m, -1, i);
            m = insert_mode(m, -1, k);
            out.add_term(m, gi[i][k] / 2);
        }
    return out;
}

long max_product_index(const FockState& u, const FockState& v) {
    if (u.is_zero() || v.is_zero()) return kNoProduct;
    const LatticeContext& ctx = *u.context();
    long best = kNoProduct;
    for (const auto& [mu, cu] : u.terms())
        for (const auto& [mv, cv] : v.terms())
            best = std::max(best, max_index_raw(ctx, monomial_degree(ctx, mu),
                                                monomial_degree(ctx, mv), mu.label, mv.label));
    return best;
}

bool check_qs(const FockState& u, const FockState& v, long n) {
    if (u.is_zero() || v.is_zero()) return true;
    int p = u.parity() * v.parity();
    FockState lhs = product(u, n, v);
    FockState rhs(u.context());
    long imax = max_product_index(v, u) - n;
    for (long i = 0; i <= imax; ++i) {
        FockState t = product(v, n + i, u);
        for (long d = 0; d < i; ++d) t = derive(t);
        Rat coeff = rat(Int(-1), factorial(i));
        if ((n + i) & 1L) coeff = -coeff;
        if (p) coeff = -coeff;
        rhs.add(t, coeff);
    }
    return lhs == rhs;
}

bool check_jacobi(const FockState& u, const FockState& v, const FockState& w, long m, long n) {
    if (u.is_zero() || v.is_zero() || w.is_zero()) return true;
    int p = u.parity() * v.parity();
    FockState lhs = product(product(u, n, v), m, w);
    FockState rhs(u.context());
    long smin = m + n - max_product_index(v, w);
    for (long s = n; s >= smin; --s) {
        Int coeff = gbinom(Int(n), n - s);
        if (coeff == 0) continue;
        if ((s + n) & 1L) coeff = -coeff;
        FockState inner = product(v, m + n - s, w);
        if (inner.is_zero()) continue;
        rhs.add(product(u, s, inner), Rat(coeff));
    }
    long smax2 = max_product_index(u, w);
    for (long s = 0; s <= smax2; ++s) {
        Int coeff = gbinom(Int(n), s);
        if (coeff == 0) continue;
        if ((s + n) & 1L) coeff = -coeff;
        if (p) coeff = -coeff;
        FockState inner = product(u, s, w);
        if (inner.is_zero()) continue;
        rhs.add(product(v, m + n - s, inner), Rat(-coeff));
    }
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// State grammar

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument(std::string("state parse: expected '") + c + "' at offset " +
                                        std::to_string(pos));
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw std::invalid_argument("state parse: expected integer at offset " +
                                                       std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }
};

}  // namespace

FockState parse_state(const LatticeContext& ctx, const std::string& text) {
    Lexer lx{text};
    FockState out(&ctx);
    if (lx.eof()) throw std::invalid_argument("state parse: empty input");

    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('-')) sign = -1;
        else if (lx.accept('+')) sign = 1;
        else if (!first)
            throw std::invalid_argument("state parse: expected '+' or '-' between terms");
        first = false;

        // optional scalar
        Rat coeff(sign);
        bool haveScalar = false;
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = lx.integer();
            long den = 1;
            if (lx.accept('/')) den = lx.integer();
            coeff = Rat(sign) * rat(num, den);
            haveScalar = true;
        }
        lx.accept('*');

        std::vector<std::pair<long, long>> modes;
        while (lx.peek() == 'b') {
            lx.expect('b');
            long idx = lx.integer();
            if (idx < 1 || idx > ctx.rank())
                throw std::invalid_argument("state parse: mode index out of range");
            lx.expect('(');
            long n = lx.integer();
            lx.expect(')');
            if (n >= 0) throw std::invalid_argument("state parse: mode exponent must be negative");
            modes.push_back({n, idx - 1});
        }

        LatticePoint label(ctx.rank(), 0);
        if (lx.peek() == 'e') {
            lx.expect('e');
            lx.expect('[');
            std::vector<long> coords;
            coords.push_back(lx.integer());
            while (lx.accept(',')) coords.push_back(lx.integer());
            lx.expect(']');
            if (static_cast<long>(coords.size()) != ctx.rank())
                throw std::invalid_argument("state parse: point arity does not match lattice rank");
            label = coords;
        } else if (!modes.empty()) {
            throw std::invalid_argument("state parse: modes must be followed by a point");
        } else if (!haveScalar) {
            throw std::invalid_argument("state parse: empty term");
        }
        // A bare scalar means scalar * e[0...0].
        if (is_zero(coeff)) continue;
        std::sort(modes.begin(), modes.end());
        out.add_term(FockMonomial{std::move(modes), label}, coeff);
    }
    return out;
}

std::string print_state(const FockState& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : s.terms()) {
        bool neg = sgn(c) < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1) os << to_string(mag) << " * ";
        for (const auto& [n, j] : m.modes) os << "b" << (j + 1) << "(" << n << ") ";
        os << "e[";
        for (size_t i = 0; i < m.label.size(); ++i) {
            if (i) os << ",";
            os << m.label[i];
        }
        os << "]";
    }
    return os.str();
}

}  // namespace vxl
