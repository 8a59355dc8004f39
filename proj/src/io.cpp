#include "splitkit/io.hpp"

#include <cctype>
#include <cstdlib>

#include "splitkit/errors.hpp"

namespace splitkit::io {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw input_error(std::string("parse error: expected '") + c + "' at offset " +
                              std::to_string(i) + " in \"" + s + "\"");
    }
    long long integer() {
        skip_ws();
        std::size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        std::size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) throw input_error("parse error: expected integer at offset " +
                                      std::to_string(i));
        long long v = std::strtoll(s.substr(i, k - i).c_str(), nullptr, 10);
        i = k;
        return v;
    }
};

// one product of integer literals and powers of variables
void parse_term(Lexer& lx, const PrimeField& f, int nvars, long long sign,
                std::vector<std::pair<std::vector<int>, fp_t>>& out) {
    fp_t coeff = f.from_int(sign);
    std::vector<int> exps(nvars, 0);
    bool first = true;
    for (;;) {
        char c = lx.peek();
        if (c == 'x') {
            ++lx.i;
            long long vi = lx.integer();
            if (vi < 0 || vi >= nvars)
                throw input_error("variable x" + std::to_string(vi) + " out of range (nvars=" +
                                  std::to_string(nvars) + ")");
            int ex = 1;
            if (lx.accept('^')) {
                long long e = lx.integer();
                if (e < 0) throw input_error("negative exponent");
                ex = static_cast<int>(e);
            }
            exps[vi] += ex;
        } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                   ((c == '-' || c == '+') && first)) {
            coeff = f.mul(coeff, f.from_int(lx.integer()));
        } else {
            throw input_error(std::string("parse error: unexpected '") + c + "'");
        }
        first = false;
        if (!lx.accept('*')) break;
    }
    out.push_back({std::move(exps), coeff});
}

}  // namespace

FpMultiForm parse_multiform(const PrimeField& f, const std::string& text, int nvars) {
    Lexer lx{text};
    std::vector<std::pair<std::vector<int>, fp_t>> terms;
    long long sign = 1;
    if (lx.accept('-')) sign = -1;
    parse_term(lx, f, nvars, sign, terms);
    while (!lx.eof()) {
        if (lx.accept('+'))
            sign = 1;
        else if (lx.accept('-'))
            sign = -1;
        else
            throw input_error("parse error: expected '+' or '-' between terms");
        parse_term(lx, f, nvars, sign, terms);
    }
    int deg = 0;
    for (int e : terms[0].first) deg += e;
    FpMultiForm m(f, nvars, deg);
    for (auto& [e, c] : terms) m.add_term(e, c);
    return m;
}

HypersurfaceCombo parse_combo(const PrimeField& f, const std::string& text,
                              const RncModel& model) {
    struct Item {
        bool is_quadric;
        int i = 0, j = 0;
        fp_t scalar;
        std::string mf;  // empty: scalar coefficient
    };
    std::vector<Item> items;
    Lexer lx{text};
    for (;;) {
        long long sign = 1;
        if (!items.empty()) {
            if (lx.accept('+'))
                sign = 1;
            else if (lx.accept('-'))
                sign = -1;
            else
                throw input_error("combo parse error: expected '+' or '-'");
        } else if (lx.accept('-')) {
            sign = -1;
        }
        Item it;
        it.scalar = f.from_int(sign);
        // optional leading integer factor
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            it.scalar = f.mul(it.scalar, f.from_int(lx.integer()));
            lx.expect('*');
        }
        char c = lx.peek();
        if (c == 'q') {
            ++lx.i;
            lx.expect('[');
            it.is_quadric = true;
            it.i = static_cast<int>(lx.integer());
            lx.expect(',');
            it.j = static_cast<int>(lx.integer());
            lx.expect(']');
        } else if (c == 'x') {
            ++lx.i;
            lx.expect('[');
            it.is_quadric = false;
            it.j = static_cast<int>(lx.integer());
            lx.expect(']');
        } else {
            throw input_error("combo parse error: expected q[i,j] or x[j]");
        }
        if (lx.accept('*')) {
            lx.expect('(');
            int depth = 1;
            std::size_t start = lx.i;
            while (lx.i < lx.s.size() && depth > 0) {
                if (lx.s[lx.i] == '(') ++depth;
                if (lx.s[lx.i] == ')') --depth;
                ++lx.i;
            }
            if (depth != 0) throw input_error("combo parse error: unbalanced parentheses");
            it.mf = lx.s.substr(start, lx.i - 1 - start);
        }
        items.push_back(std::move(it));
        if (lx.eof()) break;
    }
    // infer the hypersurface degree
    int deg = 0;
    std::vector<FpMultiForm> coeffs;
    for (auto& it : items) {
        FpMultiForm a = it.mf.empty()
                            ? FpMultiForm::monomial(f, model.n + 1,
                                                    std::vector<int>(model.n + 1, 0), it.scalar)
                            : parse_multiform(f, it.mf, model.n + 1);
        if (!it.mf.empty() && it.scalar != f.one()) a.scale_in(it.scalar);
        int d = a.degree() + (it.is_quadric ? 2 : 1);
        deg = std::max(deg, d);
        coeffs.push_back(std::move(a));
    }
    HypersurfaceCombo h(model, deg);
    for (std::size_t idx = 0; idx < items.size(); ++idx) {
        const auto& it = items[idx];
        int want = deg - (it.is_quadric ? 2 : 1);
        if (coeffs[idx].degree() != want)
            throw input_error("combo item " + std::to_string(idx) +
                              ": coefficient degree " + std::to_string(coeffs[idx].degree()) +
                              " does not fit hypersurface degree " + std::to_string(deg));
        if (it.is_quadric) {
            auto cur = h.quadric_coeffs().find({it.i, it.j});
            if (cur != h.quadric_coeffs().end()) {
                FpMultiForm merged = cur->second;
                merged.add_in(coeffs[idx]);
                h.set_quadric_coeff(it.i, it.j, std::move(merged));
            } else {
                h.set_quadric_coeff(it.i, it.j, coeffs[idx]);
            }
        } else {
            auto cur = h.linear_coeffs().find(it.j);
            if (cur != h.linear_coeffs().end()) {
                FpMultiForm merged = cur->second;
                merged.add_in(coeffs[idx]);
                h.set_linear_coeff(it.j, std::move(merged));
            } else {
                h.set_linear_coeff(it.j, coeffs[idx]);
            }
        }
    }
    return h;
}

GradedMap parse_graded_map(const PrimeField& f, const json& j) {
    if (!j.contains("source") || !j.contains("target") || !j.contains("entries"))
        throw input_error("graded map JSON needs source, target, entries");
    std::vector<int> src = j["source"].get<std::vector<int>>();
    std::vector<int> tgt = j["target"].get<std::vector<int>>();
    const auto& ent = j["entries"];
    if (!ent.is_array() || ent.size() != tgt.size())
        throw input_error("entries: one row per target summand required");
    std::vector<std::vector<FpForm>> rows;
    for (std::size_t r = 0; r < tgt.size(); ++r) {
        const auto& row = ent[r];
        if (!row.is_array() || row.size() != src.size())
            throw input_error("entries row " + std::to_string(r) + ": wrong length");
        std::vector<FpForm> out;
        for (std::size_t c = 0; c < src.size(); ++c) {
            int deg = tgt[r] - src[c];
            const auto& cell = row[c];
            if (cell.is_null()) {
                out.emplace_back(f, deg);
                continue;
            }
            if (!cell.is_array()) throw input_error("entry must be null or a coefficient list");
            if (deg < 0) {
                for (const auto& v : cell)
                    if (f.from_int(v.get<long long>()) != 0)
                        throw input_error("nonzero entry where the degree is negative");
                out.emplace_back(f, deg);
                continue;
            }
            if (static_cast<int>(cell.size()) != deg + 1)
                throw input_error("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                  "): expected " + std::to_string(deg + 1) + " coefficients");
            FpForm b(f, deg);
            for (int w = 0; w <= deg; ++w) b.set_coeff(w, f.from_int(cell[w].get<long long>()));
            out.push_back(std::move(b));
        }
        rows.push_back(std::move(out));
    }
    return GradedMap(f, std::move(src), std::move(tgt), std::move(rows));
}

json graded_map_json(const GradedMap& m) {
    json j;
    j["source"] = m.source_degrees();
    j["target"] = m.target_degrees();
    json rows = json::array();
    for (std::size_t r = 0; r < m.target_degrees().size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.source_degrees().size(); ++c) {
            const auto& e = m.entry(r, c);
            if (e.degree() < 0 || e.is_zero()) {
                row.push_back(nullptr);
            } else {
                json cell = json::array();
                for (int w = 0; w <= e.degree(); ++w) cell.push_back(e.coeff(w));
                row.push_back(std::move(cell));
            }
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

ParamCurve<PrimeField> parse_curve(const PrimeField& f, const json& j) {
    if (!j.is_array() || j.size() < 2) throw input_error("curve JSON: array of coefficient vectors");
    const int n = static_cast<int>(j.size()) - 1;
    int e = -1;
    std::vector<FpForm> comps;
    for (const auto& cj : j) {
        if (!cj.is_array() || cj.empty()) throw input_error("curve JSON: empty component");
        if (e < 0)
            e = static_cast<int>(cj.size()) - 1;
        else if (static_cast<int>(cj.size()) != e + 1)
            throw input_error("curve JSON: mismatched component degrees");
        FpForm b(f, e);
        for (int w = 0; w <= e; ++w) b.set_coeff(w, f.from_int(cj[w].get<long long>()));
        comps.push_back(std::move(b));
    }
    return ParamCurve<PrimeField>(f, n, e, std::move(comps));
}

json splitting_json(const SplittingType& s) { return json(s.degrees()); }

json scan_report_json(const ScanReport& r) {
    json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["char"] = r.characteristic;
    j["trials"] = r.trials;
    j["balanced"] = r.balanced;
    json sp = json::array();
    for (const auto& [type, count] : r.splittings) {
        json entry;
        entry["type"] = type;
        entry["count"] = count;
        sp.push_back(std::move(entry));
    }
    j["splittings"] = std::move(sp);
    j["smooth_failures"] = r.smooth_failures;
    j["seed"] = std::to_string(r.seed);
    return j;
}

}  // namespace splitkit::io
