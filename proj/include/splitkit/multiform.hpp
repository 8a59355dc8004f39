#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "splitkit/biform.hpp"
#include "splitkit/errors.hpp"

namespace splitkit {

// Homogeneous polynomial in x_0..x_{nvars-1}, sparse monomial map. All stored
// exponent vectors sum to the declared degree; zero coefficients are dropped.
template <class F>
class MultiForm {
  public:
    using elem = typename F::elem;
    using exps = std::vector<int>;

    MultiForm(F field, int nvars, int degree) : field_(field), nvars_(nvars), degree_(degree) {
        if (nvars < 1 || degree < 0) throw input_error("MultiForm: bad shape");
    }

    static MultiForm monomial(F field, int nvars, const exps& e, elem c) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        MultiForm m(field, nvars, d);
        m.add_term(e, c);
        return m;
    }

    static MultiForm variable(F field, int nvars, int i) {
        exps e(nvars, 0);
        e.at(i) = 1;
        return monomial(field, nvars, e, field.one());
    }

    const F& field() const { return field_; }
    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::map<exps, elem>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const exps& e, elem c) {
        if (static_cast<int>(e.size()) != nvars_) throw input_error("MultiForm: exponent arity");
        if (std::accumulate(e.begin(), e.end(), 0) != degree_)
            throw input_error("MultiForm: term degree mismatch");
        for (int x : e)
            if (x < 0) throw input_error("MultiForm: negative exponent");
        auto it = t_.find(e);
        elem v = (it == t_.end()) ? c : field_.add(it->second, c);
        if (field_.is_zero(v)) {
            if (it != t_.end()) t_.erase(it);
        } else {
            t_[e] = v;
        }
    }

    MultiForm& add_in(const MultiForm& o) {
        require_compat(o, true);
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    MultiForm& sub_in(const MultiForm& o) {
        require_compat(o, true);
        for (const auto& [e, c] : o.t_) add_term(e, field_.neg(c));
        return *this;
    }
    MultiForm& scale_in(elem v) {
        if (field_.is_zero(v)) {
            t_.clear();
            return *this;
        }
        for (auto& [e, c] : t_) c = field_.mul(c, v);
        return *this;
    }

    friend MultiForm operator+(MultiForm a, const MultiForm& b) { return a.add_in(b); }
    friend MultiForm operator-(MultiForm a, const MultiForm& b) { return a.sub_in(b); }

    friend MultiForm operator*(const MultiForm& a, const MultiForm& b) {
        a.require_compat(b, false);
        MultiForm r(a.field_, a.nvars_, a.degree_ + b.degree_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                exps e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, a.field_.mul(ca, cb));
            }
        return r;
    }

    bool operator==(const MultiForm& o) const {
        if (nvars_ != o.nvars_ || degree_ != o.degree_ || t_.size() != o.t_.size()) return false;
        auto it = o.t_.begin();
        for (const auto& [e, c] : t_) {
            if (e != it->first || !field_.is_zero(field_.sub(c, it->second))) return false;
            ++it;
        }
        return true;
    }

    // formal partial derivative; exponent multiples of the characteristic drop out
    MultiForm partial(int i) const {
        if (i < 0 || i >= nvars_) throw input_error("partial: variable index out of range");
        if (degree_ == 0) return MultiForm(field_, nvars_, 0);
        MultiForm r(field_, nvars_, degree_ - 1);
        for (const auto& [e, c] : t_) {
            if (e[i] == 0) continue;
            elem v = field_.mul(c, field_.from_int(e[i]));
            if (field_.is_zero(v)) continue;
            exps e2 = e;
            e2[i] -= 1;
            r.add_term(e2, v);
        }
        return r;
    }

    // substitute a parametrization by forms of common degree e; exact
    BiForm<F> restrict_to(const std::vector<BiForm<F>>& params) const {
        if (static_cast<int>(params.size()) != nvars_)
            throw input_error("restrict: parametrization arity mismatch");
        int e = params.empty() ? 0 : params[0].degree();
        for (const auto& p : params)
            if (p.degree() != e) throw input_error("restrict: mismatched component degrees");
        BiForm<F> out(field_, degree_ * e);
        for (const auto& [ev, c] : t_) {
            BiForm<F> cur(field_, 0, {c});
            bool vanished = false;
            for (int i = 0; i < nvars_ && !vanished; ++i)
                for (int k = 0; k < ev[i]; ++k) {
                    if (params[i].is_zero()) { vanished = true; break; }
                    cur = cur * params[i];
                }
            if (!vanished) out.add_in(BiForm<F>(field_, out.degree(),
                                                pad_to(cur, out.degree())));
        }
        return out;
    }

  private:
    std::vector<elem> pad_to(const BiForm<F>& b, int deg) const {
        if (b.degree() != deg) throw internal_error("restrict: degree bookkeeping");
        return b.coeffs();
    }
    void require_compat(const MultiForm& o, bool same_degree) const {
        if (nvars_ != o.nvars_) throw internal_error("MultiForm arity mismatch");
        if (same_degree && degree_ != o.degree_) throw internal_error("MultiForm degree mismatch");
    }

    F field_;
    int nvars_;
    int degree_;
    std::map<exps, elem> t_;
};

}  // namespace splitkit
