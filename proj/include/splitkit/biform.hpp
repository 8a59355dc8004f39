#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "splitkit/errors.hpp"
#include "splitkit/rng.hpp"

namespace splitkit {

namespace detail {

// dense univariate helpers; index = exponent
template <class F>
void poly_trim(const F& f, std::vector<typename F::elem>& a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
std::vector<typename F::elem> poly_mul(const F& f, const std::vector<typename F::elem>& a,
                                        const std::vector<typename F::elem>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<typename F::elem> r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return r;
}

// a mod b in place (b trimmed, nonzero); returns quotient
template <class F>
std::vector<typename F::elem> poly_divmod(const F& f, std::vector<typename F::elem>& a,
                                           const std::vector<typename F::elem>& b) {
    std::vector<typename F::elem> q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, f.zero());
    auto binv = f.inv(b.back());
    while (a.size() >= b.size()) {
        auto c = f.mul(a.back(), binv);
        std::size_t off = a.size() - b.size();
        q[off] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = f.sub(a[off + i], f.mul(c, b[i]));
        poly_trim(f, a);
        if (a.empty()) break;
        while (a.size() >= b.size() && f.is_zero(a.back())) a.pop_back();
    }
    return q;
}

template <class F>
std::vector<typename F::elem> poly_gcd(const F& f, std::vector<typename F::elem> a,
                                        std::vector<typename F::elem> b) {
    poly_trim(f, a);
    poly_trim(f, b);
    while (!b.empty()) {
        poly_divmod(f, a, b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        auto iv = f.inv(a.back());
        for (auto& x : a) x = f.mul(x, iv);
    }
    return a;
}

}  // namespace detail

// Homogeneous form in (s, t). coeff(i) multiplies s^{degree-i} t^i. The zero
// form keeps its declared degree so graded-degree checks stay decidable; a
// negative declared degree forces the zero form (empty coefficient vector).
template <class F>
class BiForm {
  public:
    using elem = typename F::elem;

    BiForm(F field, int degree)
        : field_(field), degree_(degree),
          c_(degree >= 0 ? static_cast<std::size_t>(degree) + 1 : 0, field.zero()) {}

    BiForm(F field, int degree, std::vector<elem> coeffs)
        : field_(field), degree_(degree), c_(std::move(coeffs)) {
        if (degree >= 0 ? c_.size() != static_cast<std::size_t>(degree) + 1 : !c_.empty())
            throw input_error("BiForm: coefficient count does not match degree");
    }

    static BiForm monomial(F field, int degree, int texp, elem coeff) {
        BiForm b(field, degree);
        if (texp < 0 || texp > degree) throw input_error("BiForm::monomial: exponent out of range");
        b.c_[texp] = coeff;
        return b;
    }

    static BiForm random(F field, int degree, Rng& rng) {
        BiForm b(field, degree);
        for (auto& x : b.c_) x = field.random(rng);
        return b;
    }

    const F& field() const { return field_; }
    int degree() const { return degree_; }
    const std::vector<elem>& coeffs() const { return c_; }
    elem coeff(int texp) const {
        return (texp < 0 || texp > degree_) ? field_.zero() : c_[texp];
    }
    void set_coeff(int texp, elem v) { c_.at(texp) = v; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    BiForm& add_in(const BiForm& o) {
        require_same_degree(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
        return *this;
    }
    BiForm& sub_in(const BiForm& o) {
        require_same_degree(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
        return *this;
    }
    BiForm& scale_in(elem v) {
        for (auto& x : c_) x = field_.mul(x, v);
        return *this;
    }

    friend BiForm operator+(BiForm a, const BiForm& b) { return a.add_in(b); }
    friend BiForm operator-(BiForm a, const BiForm& b) { return a.sub_in(b); }

    friend BiForm operator*(const BiForm& a, const BiForm& b) {
        BiForm r(a.field_, a.degree_ + b.degree_);
        if (a.is_zero() || b.is_zero()) return r;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.field_.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = a.field_.add(r.c_[i + j], a.field_.mul(a.c_[i], b.c_[j]));
        }
        return r;
    }

    bool operator==(const BiForm& o) const {
        if (degree_ != o.degree_) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!field_.is_zero(field_.sub(c_[i], o.c_[i]))) return false;
        return true;
    }

    elem eval(elem s0, elem t0) const {
        if (degree_ < 0 || c_.empty()) return field_.zero();
        // A_w = A_{w+1} t0 + c_w s0^{D-w}, evaluated from w = D down
        elem acc = c_[degree_];
        elem sp = field_.one();
        std::vector<elem> spow;
        spow.reserve(degree_ + 1);
        spow.push_back(sp);
        for (int i = 1; i <= degree_; ++i) {
            sp = field_.mul(sp, s0);
            spow.push_back(sp);
        }
        for (int w = degree_ - 1; w >= 0; --w)
            acc = field_.add(field_.mul(acc, t0), field_.mul(c_[w], spow[degree_ - w]));
        return acc;
    }

    BiForm deriv_s() const {
        BiForm r(field_, degree_ - 1);
        for (int w = 0; w + 1 <= degree_; ++w)
            r.c_[w] = field_.mul(c_[w], field_.from_int(degree_ - w));
        return r;
    }
    BiForm deriv_t() const {
        BiForm r(field_, degree_ - 1);
        for (int w = 1; w <= degree_; ++w) r.c_[w - 1] = field_.mul(c_[w], field_.from_int(w));
        return r;
    }

    // orders of s and t dividing the form; zero form has no well-defined order
    int t_order() const {
        for (int w = 0; w <= degree_; ++w)
            if (!field_.is_zero(c_[w])) return w;
        return -1;
    }
    int s_order() const {
        for (int w = degree_; w >= 0; --w)
            if (!field_.is_zero(c_[w])) return degree_ - w;
        return -1;
    }

    // exact division; nullopt when not divisible
    std::optional<BiForm> divide_exact(const BiForm& g) const {
        if (g.is_zero()) return std::nullopt;
        if (is_zero()) return BiForm(field_, degree_ - g.degree());
        int sa = s_order(), ta = t_order();
        int sb = g.s_order(), tb = g.t_order();
        if (sa < sb || ta < tb) return std::nullopt;
        // strip content: remaining parts have nonzero first and last coefficients
        std::vector<elem> fa(c_.begin() + ta, c_.end() - sa);
        std::vector<elem> fb(g.c_.begin() + tb, g.c_.end() - sb);
        if (fa.size() < fb.size()) return std::nullopt;
        auto rem = fa;
        auto q = detail::poly_divmod(field_, rem, fb);
        if (!rem.empty()) return std::nullopt;
        int qdeg = degree_ - g.degree();
        BiForm out(field_, qdeg);
        int toff = ta - tb;
        for (std::size_t i = 0; i < q.size(); ++i) out.c_[toff + i] = q[i];
        return out;
    }

  private:
    void require_same_degree(const BiForm& o) const {
        if (degree_ != o.degree_) throw internal_error("BiForm degree mismatch");
    }

    F field_;
    int degree_;
    std::vector<elem> c_;
};

// Monic gcd of a set of forms: split off the s- and t-power content, run Euclid
// on the dehomogenizations, recombine. At least one form must be nonzero.
template <class F>
BiForm<F> gcd_set(const F& field, std::span<const BiForm<F>> forms) {
    int smin = -1, tmin = -1;
    std::vector<std::vector<typename F::elem>> parts;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        int so = f.s_order(), to = f.t_order();
        smin = (smin < 0) ? so : std::min(smin, so);
        tmin = (tmin < 0) ? to : std::min(tmin, to);
        parts.emplace_back(f.coeffs().begin() + to, f.coeffs().end() - so);
    }
    if (parts.empty()) throw input_error("gcd_set: all forms are zero");
    std::vector<typename F::elem> g = parts[0];
    for (std::size_t i = 1; i < parts.size() && g.size() != 1; ++i)
        g = detail::poly_gcd(field, g, parts[i]);
    // monic: the highest s-power coefficient is 1
    auto iv = field.inv(g.front());
    for (auto& x : g) x = field.mul(x, iv);
    int deg = smin + tmin + static_cast<int>(g.size()) - 1;
    BiForm<F> out(field, deg);
    for (std::size_t i = 0; i < g.size(); ++i) out.set_coeff(tmin + static_cast<int>(i), g[i]);
    return out;
}

template <class F>
BiForm<F> gcd_set(const F& field, const std::vector<BiForm<F>>& forms) {
    return gcd_set(field, std::span<const BiForm<F>>(forms.data(), forms.size()));
}

// constant (degree 0) nonzero form
template <class F>
bool is_unit(const BiForm<F>& f) {
    return f.degree() == 0 && !f.is_zero();
}

}  // namespace splitkit
