#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "splitkit/errors.hpp"
#include "splitkit/io.hpp"
#include "splitkit/parallel.hpp"

using namespace splitkit;
using io::json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kMismatch = 2 };

struct Options {
    std::uint32_t characteristic = kMersenne31;
    std::uint64_t seed = kDefaultSeed;
    bool seed_explicit = false;
    int trials = 0;
    std::string format = "text";
    unsigned jobs = 0;
    std::string input;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json_file(const std::string& path) {
    try {
        return json::parse(slurp(path));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad JSON input: ") + e.what());
    }
}

void emit(const Options& opt, const json& j, const std::string& text, const std::string& tsv) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else if (opt.format == "tsv")
        std::cout << tsv;
    else
        std::cout << text;
}

std::vector<int> parse_degree_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw input_error("--degrees: expected a comma-separated list");
    return out;
}

struct GridRow {
    int n, e, d;
    json payload;
    std::string text;
    std::string tsv;
};

int cmd_splitting(const Options& opt) {
    PrimeField f(opt.characteristic);
    auto m = io::parse_graded_map(f, read_json_file(opt.input));
    auto ks = kernel_splitting(m);
    json j;
    j["kernel"] = io::splitting_json(ks);
    j["generic_rank"] = generic_rank(m);
    emit(opt, j, "kernel " + ks.str() + "\n", "kernel\t" + ks.str() + "\n");
    return kOk;
}

int cmd_rnc_ci(const Options& opt, int e, int n) {
    PrimeField f(opt.characteristic);
    RncModel md(e, n);
    std::vector<HypersurfaceCombo> hs;
    std::stringstream ss(slurp(opt.input));
    std::string line;
    while (std::getline(ss, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        hs.push_back(io::parse_combo(f, line, md));
    }
    if (hs.empty()) throw input_error("rnc-ci: no combos in input");
    bool smooth = smooth_along_curve(f, hs, md);
    auto ks = kernel_splitting(ci_normal_map(f, hs, md));
    json j;
    j["e"] = e;
    j["n"] = n;
    j["smooth_along_curve"] = smooth;
    j["kernel"] = io::splitting_json(ks);
    std::string txt = "kernel " + ks.str() + (smooth ? " (smooth along curve)\n"
                                                     : " (NOT smooth along curve)\n");
    emit(opt, j, txt, "kernel\t" + ks.str() + "\t" + (smooth ? "smooth" : "singular") + "\n");
    return kOk;
}

int cmd_curve_normal(const Options& opt, int rnc_e, int rnc_n) {
    PrimeField f(opt.characteristic);
    ParamCurve<PrimeField> c = rnc_e > 0 ? rnc_curve(f, rnc_e, rnc_n)
                                         : io::parse_curve(f, read_json_file(opt.input));
    auto ns = normal_via_jacobian(c);
    json j;
    j["n"] = c.n;
    j["e"] = c.e;
    j["normal"] = io::splitting_json(ns);
    emit(opt, j, "normal bundle " + ns.str() + "\n", "normal\t" + ns.str() + "\n");
    return kOk;
}

int cmd_phi(const Options& opt, int n, int e, int d, bool grid, int n_max, int d_min, int d_max) {
    PrimeField f(opt.characteristic);
    std::vector<std::array<int, 3>> cases;
    if (grid) {
        for (int nn = 2; nn <= n_max; ++nn)
            for (int ee = 2; ee <= nn; ++ee)
                for (int dd = d_min; dd <= d_max; ++dd) cases.push_back({nn, ee, dd});
    } else {
        cases.push_back({n, e, d});
    }
    auto rows = parallel_map<json>(cases.size(), opt.jobs ? opt.jobs : default_jobs(),
                                   [&](std::size_t i) -> json {
                                       auto [nn, ee, dd] = cases[i];
                                       auto c = rnc_curve(f, ee, nn);
                                       auto r = phi_surjective(c, dd);
                                       json row;
                                       row["n"] = nn;
                                       row["e"] = ee;
                                       row["d"] = dd;
                                       row["image_dim"] = r.image_dim;
                                       row["target_dim"] = r.target_dim;
                                       row["surjective"] = r.surjective;
                                       return row;
                                   });
    json j = json::array();
    std::string txt, tsv = "n\te\td\timage\ttarget\tsurjective\n";
    for (const auto& row : rows) {
        j.push_back(row);
        char buf[160];
        std::snprintf(buf, sizeof buf, "n=%d e=%d d=%d image=%lld target=%lld %s\n",
                      row["n"].get<int>(), row["e"].get<int>(), row["d"].get<int>(),
                      row["image_dim"].get<long long>(), row["target_dim"].get<long long>(),
                      row["surjective"].get<bool>() ? "surjective" : "NOT surjective");
        txt += buf;
        std::snprintf(buf, sizeof buf, "%d\t%d\t%d\t%lld\t%lld\t%d\n", row["n"].get<int>(),
                      row["e"].get<int>(), row["d"].get<int>(), row["image_dim"].get<long long>(),
                      row["target_dim"].get<long long>(), row["surjective"].get<bool>() ? 1 : 0);
        tsv += buf;
    }
    emit(opt, j, txt, tsv);
    return kOk;
}

template <class F>
json counts_row(const F& f, int nn, int ee, int dd) {
    long long chain = chain_double_conditions(f, nn, ee, dd);
    long long dim = detail::binom(nn + dd, dd);
    json row;
    row["n"] = nn;
    row["e"] = ee;
    row["d"] = dd;
    if (ee <= nn) {
        // the degree-e rational normal curve and its chain of e lines
        auto c = rnc_curve(f, ee, nn);
        long long h0 = h0_ideal(c, dd), h0sq = h0_ideal_sq(c, dd);
        long long formula = static_cast<long long>(ee) * (nn * dd + 1) -
                            static_cast<long long>(ee - 1) * (nn + 2);
        row["h0_ideal"] = h0;
        row["h0_ideal_sq"] = h0sq;
        row["chain_conditions"] = chain;
        row["condition_formula"] = formula;
        row["h0_ideal_sq_formula"] = dim - formula;
        row["match"] = (chain == formula) && (h0sq == dim - formula);
    } else {
        // e = n+1: the chain with the modified last line
        long long formula = static_cast<long long>(dd - 1) * (nn * nn + nn) + 1;
        row["h0_ideal"] = nullptr;
        row["h0_ideal_sq"] = nullptr;
        row["chain_conditions"] = chain;
        row["condition_formula"] = formula;
        row["h0_ideal_sq_formula"] = dim - formula;
        row["match"] = (chain == formula);
    }
    return row;
}

int cmd_counts(const Options& opt, int n, int e, int d, bool grid, int n_max, int d_min,
               int d_max) {
    std::vector<std::array<int, 3>> cases;
    if (grid) {
        for (int nn = 2; nn <= n_max; ++nn)
            for (int ee = 2; ee <= nn; ++ee)
                for (int dd = d_min; dd <= d_max; ++dd) cases.push_back({nn, ee, dd});
    } else {
        cases.push_back({n, e, d});
    }
    auto rows = parallel_map<json>(
        cases.size(), opt.jobs ? opt.jobs : default_jobs(), [&](std::size_t i) -> json {
            auto [nn, ee, dd] = cases[i];
            if (opt.characteristic == 0) {
                RationalField q;
                return counts_row(q, nn, ee, dd);
            }
            PrimeField f(opt.characteristic);
            return counts_row(f, nn, ee, dd);
        });
    json j = json::array();
    std::string txt, tsv = "n\te\td\th0_ideal\th0_ideal_sq\tchain\tformula\tmatch\n";
    bool all_match = true;
    for (const auto& row : rows) {
        j.push_back(row);
        all_match = all_match && row["match"].get<bool>();
        auto num = [&](const char* key) -> std::string {
            return row[key].is_null() ? "-" : std::to_string(row[key].get<long long>());
        };
        char buf[220];
        std::snprintf(buf, sizeof buf,
                      "n=%d e=%d d=%d h0(I)=%s h0(I^2)=%s chain=%lld formula=%lld %s\n",
                      row["n"].get<int>(), row["e"].get<int>(), row["d"].get<int>(),
                      num("h0_ideal").c_str(), num("h0_ideal_sq").c_str(),
                      row["chain_conditions"].get<long long>(),
                      row["condition_formula"].get<long long>(),
                      row["match"].get<bool>() ? "ok" : "MISMATCH");
        txt += buf;
        std::snprintf(buf, sizeof buf, "%d\t%d\t%d\t%s\t%s\t%lld\t%lld\t%d\n",
                      row["n"].get<int>(), row["e"].get<int>(), row["d"].get<int>(),
                      num("h0_ideal").c_str(), num("h0_ideal_sq").c_str(),
                      row["chain_conditions"].get<long long>(),
                      row["condition_formula"].get<long long>(), row["match"].get<bool>() ? 1 : 0);
        tsv += buf;
    }
    emit(opt, j, txt, tsv);
    return all_match ? kOk : kMismatch;
}

int verify_and_report(const Options& opt, const PrimeField& f, const FamilyId& id) {
    auto v = verify_family(f, id, opt.seed);
    json j;
    j["family"] = family_tag_name(id.tag);
    if (id.n) j["n"] = id.n;
    if (id.k) j["k"] = id.k;
    if (id.e) j["e"] = id.e;
    j["char"] = f.p();
    j["computed"] = io::splitting_json(v.computed);
    j["expected"] = io::splitting_json(v.expected);
    j["match"] = v.match;
    std::string label = family_tag_name(id.tag);
    if (id.n) label += " n=" + std::to_string(id.n);
    if (id.k) label += " k=" + std::to_string(id.k);
    if (id.e) label += " e=" + std::to_string(id.e);
    std::string txt = label + ": computed " + v.computed.str() + " expected " + v.expected.str() +
                      (v.match ? " MATCH\n" : " MISMATCH\n");
    emit(opt, j, txt,
         label + "\t" + v.computed.str() + "\t" + v.expected.str() + "\t" +
             (v.match ? "1" : "0") + "\n");
    if (!v.match) {
        if (opt.format == "text")
            std::cerr << "published value failed to reproduce; offending map: "
                      << io::graded_map_json(ci_normal_map(f, build_family(f, id),
                                                           family_model(id)))
                             .dump()
                      << "\n";
        return kMismatch;
    }
    return kOk;
}

int cmd_paper(const Options& opt, const std::string& family, int n, int k, int e) {
    PrimeField f(opt.characteristic);
    if (family == "all") {
        int rc = kOk;
        for (int nn = 3; nn <= 14; ++nn)
            rc |= verify_and_report(opt, f, {FamilyTag::cor_quadric, nn, 0, 0});
        for (int nn = 5; nn <= 14; ++nn) rc |= verify_and_report(opt, f, {FamilyTag::ci_22, nn, 0, 0});
        for (int nn = 6; nn <= 14; ++nn)
            rc |= verify_and_report(opt, f, {FamilyTag::ci_222, nn, 0, 0});
        for (int kk = 2; kk <= 6; ++kk)
            rc |= verify_and_report(opt, f, {FamilyTag::quadrics_2k1, 0, kk, 0});
        for (int kk = 2; kk <= 6; ++kk)
            rc |= verify_and_report(opt, f, {FamilyTag::quadrics_2k, 0, kk, 0});
        for (int kk = 2; kk <= 6; ++kk)
            for (int ee = 3; ee <= kk + 2; ++ee)
                rc |= verify_and_report(opt, f, {FamilyTag::quadrics_k2, 0, kk, ee});
        rc |= verify_and_report(opt, f, {FamilyTag::quartic_4n1, 0, 0, 0});
        return rc ? kMismatch : kOk;
    }
    auto tag = parse_family_tag(family);
    if (!tag) throw input_error("unknown family tag: " + family);
    return verify_and_report(opt, f, {*tag, n, k, e});
}

int cmd_conjecture(const Options& opt, int k, int n, bool deep) {
    int trials = opt.trials > 0 ? opt.trials : (deep ? 25 : 3);
    if (n < 2 * k)
        std::cerr << "warning: (k=" << k << ", n=" << n
                  << ") is outside the Fano range (n >= 2k); scanning anyway\n";
    auto rep = conjecture_scan(k, n, opt.characteristic, trials, opt.seed,
                               opt.jobs ? opt.jobs : default_jobs());
    json j = io::scan_report_json(rep);
    std::string txt = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                      " char=" + std::to_string(opt.characteristic) +
                      " trials=" + std::to_string(rep.trials) +
                      " balanced=" + std::to_string(rep.balanced) +
                      " smooth_failures=" + std::to_string(rep.smooth_failures) + "\n";
    std::string tsv = "type\tcount\n";
    for (const auto& [type, count] : rep.splittings) {
        txt += "  " + SplittingType(type).str() + " x" + std::to_string(count) + "\n";
        tsv += SplittingType(type).str() + "\t" + std::to_string(count) + "\n";
    }
    // evidence is per-characteristic; never a characteristic-zero claim
    emit(opt, j, txt, tsv);
    return kOk;
}

int cmd_arith(const Options& opt, const std::string& sub, int n, const std::string& degrees,
              int e, int jj, int d) {
    json j;
    std::string txt, tsv;
    if (sub == "very-free") {
        auto dg = parse_degree_list(degrees);
        long long m = very_free_min_degree(n, dg);
        j["n"] = n;
        j["degrees"] = dg;
        j["m"] = m;
        txt = "m=" + std::to_string(m) + "\n";
        tsv = "m\t" + std::to_string(m) + "\n";
    } else if (sub == "balanced-type") {
        auto dg = parse_degree_list(degrees);
        auto b = expected_balanced(n, dg, e);
        j["n"] = n;
        j["degrees"] = dg;
        j["e"] = e;
        j["type"] = io::splitting_json(b);
        txt = "balanced type " + b.str() + "\n";
        tsv = "type\t" + b.str() + "\n";
    } else if (sub == "induction") {
        bool ok = induction_inequality(n, jj, d);
        j["n"] = n;
        j["j"] = jj;
        j["d_next"] = d;
        j["holds"] = ok;
        txt = std::string(ok ? "holds" : "FAILS") + "\n";
        tsv = "holds\t" + std::to_string(ok ? 1 : 0) + "\n";
    } else if (sub == "fano") {
        auto dg = parse_degree_list(degrees);
        bool ok = fano_check(n, dg);
        j["n"] = n;
        j["degrees"] = dg;
        j["fano"] = ok;
        txt = std::string(ok ? "fano" : "not fano") + "\n";
        tsv = "fano\t" + std::to_string(ok ? 1 : 0) + "\n";
    } else {
        throw input_error("arith: unknown subcommand " + sub);
    }
    emit(opt, j, txt, tsv);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"splitkit: exact splitting types of kernels of graded maps on the projective "
                 "line, normal bundles of rational curves, and the published families built "
                 "from them"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    if (const char* env = std::getenv("SPLITKIT_SEED")) opt.seed = std::strtoull(env, nullptr, 0);
    app.add_option("--char", opt.characteristic, "prime characteristic (default 2147483647)")
        ->capture_default_str();
    auto* seed_opt = app.add_option("--seed", opt.seed, "master seed for all sampling");
    app.add_option("--trials", opt.trials, "number of random trials where applicable");
    app.add_option("--format", opt.format, "output format: text, json, tsv")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    auto* tsv_flag = app.add_flag("--tsv", "shorthand for --format tsv");
    app.add_option("--jobs", opt.jobs, "worker cap for grid/scan subcommands");

    auto* sc_split = app.add_subcommand("splitting", "kernel splitting of a graded map (JSON file)");
    sc_split->fallthrough();
    sc_split->add_option("--input", opt.input, "graded map JSON")->required();

    auto* sc_rnc = app.add_subcommand("rnc-ci", "normal bundle in a complete intersection through "
                                                "a rational normal curve (combo DSL file)");
    sc_rnc->fallthrough();
    int rc_e = 0, rc_n = 0;
    sc_rnc->add_option("--e", rc_e, "curve degree")->required();
    sc_rnc->add_option("--n", rc_n, "ambient dimension")->required();
    sc_rnc->add_option("--input", opt.input, "one combo per line")->required();

    auto* sc_curve = app.add_subcommand("curve-normal", "ambient normal bundle of a parametrized "
                                                        "curve");
    sc_curve->fallthrough();
    int cn_e = 0, cn_n = 0;
    sc_curve->add_option("--input", opt.input, "curve JSON (array of coefficient vectors)");
    auto* rnc_opt = sc_curve->add_option("--rnc", "rational normal curve shorthand: e n")
                        ->expected(2);

    auto* sc_phi = app.add_subcommand("phi", "surjectivity of the hypersurface-to-homomorphism "
                                             "map");
    sc_phi->fallthrough();
    int ph_n = 4, ph_e = 3, ph_d = 3, ph_nmax = 7, ph_dmin = 3, ph_dmax = 6;
    bool ph_grid = false;
    sc_phi->add_option("--n", ph_n, "ambient dimension");
    sc_phi->add_option("--e", ph_e, "curve degree");
    sc_phi->add_option("--d", ph_d, "hypersurface degree");
    sc_phi->add_flag("--grid", ph_grid, "run the whole grid 2<=e<=n<=n-max");
    sc_phi->add_option("--n-max", ph_nmax, "grid bound on n");
    sc_phi->add_option("--d-min", ph_dmin, "grid lower bound on d");
    sc_phi->add_option("--d-max", ph_dmax, "grid upper bound on d");

    auto* sc_counts = app.add_subcommand("counts", "section counts of ideal powers and the "
                                                   "chain-of-lines condition system");
    sc_counts->fallthrough();
    int ct_n = 3, ct_e = 3, ct_d = 3, ct_nmax = 6, ct_dmin = 3, ct_dmax = 5;
    bool ct_grid = false;
    sc_counts->add_option("--n", ct_n, "ambient dimension");
    sc_counts->add_option("--e", ct_e, "curve degree");
    sc_counts->add_option("--d", ct_d, "hypersurface degree");
    sc_counts->add_flag("--grid", ct_grid, "run the whole grid 2<=e<=n<=n-max");
    sc_counts->add_option("--n-max", ct_nmax, "grid bound on n");
    sc_counts->add_option("--d-min", ct_dmin, "grid lower bound on d");
    sc_counts->add_option("--d-max", ct_dmax, "grid upper bound on d");

    auto* sc_paper = app.add_subcommand("paper", "verify a published splitting-type family");
    sc_paper->fallthrough();
    std::string pp_family;
    int pp_n = 0, pp_k = 0, pp_e = 0;
    sc_paper->add_option("family", pp_family, "family tag or 'all'")->required();
    sc_paper->add_option("--n", pp_n, "ambient dimension parameter");
    sc_paper->add_option("--k", pp_k, "number of quadrics");
    sc_paper->add_option("--e", pp_e, "curve degree parameter");

    auto* sc_conj = app.add_subcommand("conjecture", "random scan of complete intersections of "
                                                     "quadrics through the full curve");
    sc_conj->fallthrough();
    int cj_k = 4, cj_n = 9;
    bool cj_deep = false;
    sc_conj->add_option("--k", cj_k, "number of quadrics")->required();
    sc_conj->add_option("--n", cj_n, "ambient dimension")->required();
    sc_conj->add_flag("--deep", cj_deep, "more trials per case");

    auto* sc_arith = app.add_subcommand("arith", "exact degree-bound arithmetic");
    sc_arith->fallthrough();
    std::string ar_sub, ar_degrees;
    int ar_n = 0, ar_e = 0, ar_j = 0, ar_d = 0;
    sc_arith->add_option("what", ar_sub, "very-free | balanced-type | induction | fano")
        ->required();
    sc_arith->add_option("--n", ar_n, "ambient dimension");
    sc_arith->add_option("--degrees", ar_degrees, "comma-separated degree list");
    sc_arith->add_option("--e", ar_e, "curve degree");
    sc_arith->add_option("--j", ar_j, "number of quadrics already stacked");
    sc_arith->add_option("--d", ar_d, "next hypersurface degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    if (*tsv_flag) opt.format = "tsv";
    (void)seed_opt;

    try {
        if (*sc_split) return cmd_splitting(opt);
        if (*sc_rnc) return cmd_rnc_ci(opt, rc_e, rc_n);
        if (*sc_curve) {
            if (rnc_opt->count()) {
                auto vals = rnc_opt->as<std::vector<int>>();
                cn_e = vals.at(0);
                cn_n = vals.at(1);
            } else if (opt.input.empty()) {
                throw input_error("curve-normal: need --input or --rnc e n");
            }
            return cmd_curve_normal(opt, cn_e, cn_n);
        }
        if (*sc_phi) return cmd_phi(opt, ph_n, ph_e, ph_d, ph_grid, ph_nmax, ph_dmin, ph_dmax);
        if (*sc_counts)
            return cmd_counts(opt, ct_n, ct_e, ct_d, ct_grid, ct_nmax, ct_dmin, ct_dmax);
        if (*sc_paper) return cmd_paper(opt, pp_family, pp_n, pp_k, pp_e);
        if (*sc_conj) return cmd_conjecture(opt, cj_k, cj_n, cj_deep);
        if (*sc_arith) return cmd_arith(opt, ar_sub, ar_n, ar_degrees, ar_e, ar_j, ar_d);
    } catch (const math_error& e) {
        std::cerr << "mathematical mismatch: " << e.what() << "\noffending object: " << e.payload
                  << "\n";
        return kMismatch;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kUsage;
    } catch (const error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
