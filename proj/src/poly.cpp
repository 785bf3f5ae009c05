#include "vertexlab/poly.hpp"

namespace vxl {

void RatPoly::trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
}

RatPoly RatPoly::x() { return RatPoly({Rat(0), Rat(1)}); }

RatPoly RatPoly::binomial_shifted(long m) {
    // (x+1)(x+2)...(x+m) / m!
    RatPoly p = constant(Rat(1));
    for (long j = 1; j <= m; ++j) p = p * RatPoly({Rat(j), Rat(1)});
    return p * rat(Int(1), factorial(m));
}

Rat RatPoly::eval(const Int& i) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * i + *it;
    return v;
}

RatPoly RatPoly::shift(long k) const {
    if (k == 0) return *this;
    RatPoly out, xk({Rat(k), Rat(1)}), pw = constant(Rat(1));
    for (const Rat& ck : c_) {
        out = out + pw * ck;
        pw = pw * xk;
    }
    return out;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    std::vector<Rat> r = c_;
    for (Rat& v : r) v *= s;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const { return *this * Rat(-1); }

}  // namespace vxl
