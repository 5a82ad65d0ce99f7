#include "stabctab/cli/cli.hpp"

#include "stabctab/cli/io.hpp"
#include "stabctab/error.hpp"
#include "stabctab/genfunc.hpp"
#include "stabctab/germ.hpp"
#include "stabctab/nslattice.hpp"
#include "stabctab/perverse.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <functional>
#include <ostream>

#ifndef STABCTAB_DEFAULT_DATA_DIR
#define STABCTAB_DEFAULT_DATA_DIR "data"
#endif

namespace stabctab::cli {

using Json = nlohmann::ordered_json;

int max_order() {
    const char* env = std::getenv("STABCTAB_MAX_ORDER");
    if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("STABCTAB_MAX_ORDER", "must be a nonnegative integer, got \"" + std::string(env) + "\"");
}

namespace {

struct Outcome {
    Json parameters = Json::object();
    Json results = Json::object();
    std::string provenance;
    std::vector<std::vector<std::string>> rows;  // first row is the TSV header
    int exit = kOk;
};

void emit(const std::string& command, const Outcome& o, const std::string& format, std::ostream& out) {
    if (format == "json") {
        Json j;
        j["command"] = command;
        j["parameters"] = o.parameters;
        j["results"] = o.results;
        j["provenance"] = o.provenance;
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& row : o.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
        out << "\n";
    }
}

std::string str(const Integer& v) { return v.str(); }

// ---------------------------------------------------------------------------
// Shared option groups

struct SurfaceOptions {
    std::string preset;
    std::optional<int> b1;
    std::optional<int> b2;

    void attach(CLI::App* app) {
        app->add_option("--preset", preset, "Surface preset")->check(CLI::IsMember({"enriques", "bielliptic"}));
        app->add_option("--b1", b1, "First Betti number b1(S), even")->check(CLI::NonNegativeNumber);
        app->add_option("--b2", b2, "Second Betti number b2(S)")->check(CLI::PositiveNumber);
    }

    SurfaceTopology resolve() const {
        SurfaceTopology s;
        if (!preset.empty()) {
            if (b1 || b2) throw CLI::ValidationError("--preset", "cannot be combined with --b1/--b2");
            s = preset == "enriques" ? SurfaceTopology::enriques() : SurfaceTopology::bielliptic();
        } else {
            if (!b2) throw CLI::ValidationError("--b2", "required unless --preset is given");
            s.b1 = b1.value_or(0);
            s.b2 = *b2;
        }
        try {
            s.validate();
        } catch (const InvalidSurface& e) {
            throw CLI::ValidationError("--b1", e.what());
        }
        return s;
    }

    void record(Json& params, const SurfaceTopology& s) const {
        if (!preset.empty()) params["preset"] = preset;
        params["b1"] = s.b1;
        params["b2"] = s.b2;
    }
};

void check_order(const char* flag, int value) {
    const int cap = max_order();
    if (value > cap) {
        throw CLI::ValidationError(flag, std::to_string(value) + " exceeds STABCTAB_MAX_ORDER = " + std::to_string(cap));
    }
}

// ---------------------------------------------------------------------------
// Commands

Outcome stable_betti_cmd(const SurfaceOptions& so, int max_k) {
    check_order("--max-k", max_k);
    const auto s = so.resolve();
    Outcome o;
    so.record(o.parameters, s);
    o.parameters["max_k"] = max_k;
    o.provenance = "coefficients of prod_{m>=1} (1+q^(2m-1))^b1 (1+q^(2m+1))^b1 / ((1-q^(2m))^(b2+1) (1-q^(2m+2)))";
    o.rows.push_back({"k", "b_k"});
    Json list = Json::array();
    const auto b = stable_betti_series(s, max_k);
    for (int k = 0; k <= max_k; ++k) {
        list.push_back(str(b[k]));
        o.rows.push_back({std::to_string(k), str(b[k])});
    }
    o.results["stable_betti"] = list;
    return o;
}

Outcome hilb_betti_cmd(const SurfaceOptions& so, int n, std::optional<int> k) {
    check_order("--n", n);
    const auto s = so.resolve();
    Outcome o;
    so.record(o.parameters, s);
    o.parameters["n"] = n;
    if (k) o.parameters["k"] = *k;
    o.provenance = "coefficient of z^k w^n in Goettsche's product for the Hilbert scheme of n points";
    o.rows.push_back({"n", "k", "b_k"});
    const auto table = hilb_betti_table(s, n);
    Json list = Json::array();
    for (int i = 0; i <= 4 * n; ++i) {
        if (k && i != *k) continue;
        list.push_back(str(table[n][i]));
        o.rows.push_back({std::to_string(n), std::to_string(i), str(table[n][i])});
    }
    if (k && *k > 4 * n) {
        list.push_back("0");
        o.rows.push_back({std::to_string(n), std::to_string(*k), "0"});
    }
    o.results["hilb_betti"] = list;
    return o;
}

Outcome perverse_cmd(const SurfaceOptions& so, int order, bool oracle) {
    check_order("--max-order", order);
    const auto s = so.resolve();
    Outcome o;
    so.record(o.parameters, s);
    o.parameters["max_order"] = order;
    o.parameters["oracle"] = oracle;
    o.provenance = "n^{i,j} = coefficient of q^i t^j in H(q,t) = (1-qt) prod_{m>=1} (1+q^m t^(m-1))^b1 (1+q^m t^(m+1))^b1 "
                   "/ ((1-q^(m+1) t^(m-1)) (1-q^m t^m)^b2 (1-q^(m-1) t^(m+1)))";
    const auto table = stable_perverse_table(s, order);
    o.rows.push_back({"i", "j", "n"});
    Json entries = Json::array();
    for (int m = 0; m <= order; ++m) {
        for (int i = m; i >= 0; --i) {
            const Integer v = table.at(i, m - i);
            if (v == 0) continue;
            entries.push_back({{"i", i}, {"j", m - i}, {"n", str(v)}});
            o.rows.push_back({std::to_string(i), std::to_string(m - i), str(v)});
        }
    }
    o.results["entries"] = entries;
    if (oracle) {
        o.provenance += "; oracle: induction on i through Betti numbers of relative Hilbert schemes";
        const auto report = oracle_report(s, order);
        o.results["oracle"] = report.agree ? "AGREE" : "DISAGREE";
        std::vector<std::string> line{"oracle", report.agree ? "AGREE" : "DISAGREE"};
        if (const auto& d = report.first_difference) {
            o.results["first_difference"] = {
                {"i", d->i}, {"j", d->j}, {"recursion", str(d->left)}, {"series", str(d->right)}};
            line.push_back("(" + std::to_string(d->i) + "," + std::to_string(d->j) + ") recursion=" + str(d->left) +
                           " series=" + str(d->right));
            o.exit = kVerificationFailure;
        }
        o.rows.push_back(line);
    }
    return o;
}

Outcome identity_cmd(const SurfaceOptions& so, int order, bool perturb) {
    check_order("--order", order);
    const auto s = so.resolve();
    Outcome o;
    so.record(o.parameters, s);
    o.parameters["order"] = order;
    if (perturb) o.parameters["perturb"] = true;
    o.provenance = "H(q,t)/(1-qt) = G(t, q/t) (1 - q/t) / (1 - t^2), with G Goettsche's series in (z, w)";
    const auto r = remark_identity_report(s, order, perturb);
    o.results["status"] = r.holds ? "PASS" : "FAIL";
    o.rows.push_back({"status", "q", "t", "lhs", "rhs"});
    if (r.holds) {
        o.rows.push_back({"PASS"});
    } else {
        const auto& e = *r.first_mismatch;
        o.results["mismatch"] = {{"q", e.a}, {"t", e.b}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}};
        o.rows.push_back({"FAIL", std::to_string(e.a), std::to_string(e.b), to_string(r.lhs), to_string(r.rhs)});
        o.exit = kVerificationFailure;
    }
    return o;
}

Outcome germ_cmd(const std::string& poly, const std::string& branches_file) {
    Outcome o;
    o.parameters["poly"] = poly;
    if (!branches_file.empty()) o.parameters["branches"] = branches_file;
    o.provenance = "mu = dim Q[[x,y]]/(f_x, f_y), tau = dim Q[[x,y]]/(f, f_x, f_y), "
                   "delta = dim (normalization / local ring), check mu = 2 delta - r + 1";
    const auto g = CurveGerm::parse(poly);
    std::optional<BranchSet> b;
    if (!branches_file.empty()) b = io::load_branch_file(branches_file);
    const auto inv = analyze_germ(g, b);
    o.rows.push_back({"key", "value"});
    auto put = [&](const char* key, const std::string& v) {
        o.results[key] = v;
        o.rows.push_back({key, v});
    };
    put("mu", std::to_string(inv.mu));
    put("tau", std::to_string(inv.tau));
    if (inv.mu == 0) put("smooth", "true");
    if (inv.delta) {
        put("delta", std::to_string(*inv.delta));
        put("r", std::to_string(*inv.r));
        put("milnor_formula", *inv.milnor_formula ? "OK" : "FAIL");
        if (!*inv.milnor_formula) o.exit = kVerificationFailure;
    }
    return o;
}

std::string governing_label(const CodimBound& c) {
    std::string s;
    for (std::size_t i = 0; i < c.governing.size(); ++i) s += (i ? " or " : "") + c.governing[i];
    if (c.governing.size() > 1) s += " (tie)";
    return s;
}

void put_codim(Outcome& o, const CodimBound& c) {
    Json cases = Json::array();
    for (const auto& cb : c.cases) cases.push_back({{"case", cb.label}, {"value", to_string(cb.value)}});
    o.results["codim_bound"] = to_string(c.value);
    o.results["n_bound"] = str(n_lower_bound(c.value));
    o.results["governing_case"] = governing_label(c);
    o.results["cases"] = cases;
    o.rows.push_back({"codim_bound", to_string(c.value)});
    o.rows.push_back({"n_bound", str(n_lower_bound(c.value))});
    o.rows.push_back({"governing_case", governing_label(c)});
    for (const auto& cb : c.cases) o.rows.push_back({"case " + cb.label, to_string(cb.value)});
}

struct BoundsOptions {
    std::string surface;
    std::optional<long long> beta_sq;
    std::optional<int> d, i, j;
    std::string cases = "all";
    std::optional<long long> a, b, gamma;
    std::string lambda, mu;
};

Outcome bounds_cmd(const BoundsOptions& bo) {
    Outcome o;
    o.parameters["surface"] = bo.surface;
    o.rows.push_back({"key", "value"});
    if (bo.surface == "enriques") {
        if (!bo.beta_sq) throw CLI::ValidationError("--beta-sq", "required for --surface enriques");
        if (!bo.d && !(bo.i && bo.j)) throw CLI::ValidationError("--d", "give --d, or --i and --j");
        if (bo.i.has_value() != bo.j.has_value()) throw CLI::ValidationError("--i", "--i and --j go together");
        o.parameters["beta_sq"] = *bo.beta_sq;
        o.provenance = "Enriques surface: codim >= min over cases 1.1 d sqrt(2 beta^2) - 2, 1.2 d - 1/2, "
                       "1.3 (d^2 beta^2 - 2)/4, 2.1 d/2, 2.2 d - 1/2; N >= 2 ceil(codim) - 2; "
                       "d0 = max{2, i+1, ceil((i+j+2)/2), ceil((i+j+6)/(2 sqrt(2 beta^2))), ceil(sqrt((2i+2j+6)/beta^2))}";
        if (bo.d) {
            o.parameters["d"] = *bo.d;
            o.parameters["cases"] = bo.cases;
            const auto c = enriques_codim_bound(Integer(*bo.beta_sq), *bo.d,
                                                bo.cases == "all" ? EnriquesCases::All : EnriquesCases::NefComponents);
            put_codim(o, c);
            const Integer dim = enriques_dim_ls(Integer(*bo.d) * *bo.d * *bo.beta_sq);
            o.results["dim_linear_system"] = str(dim);
            o.rows.push_back({"dim_linear_system", str(dim)});
        }
        if (bo.i) {
            o.parameters["i"] = *bo.i;
            o.parameters["j"] = *bo.j;
            const auto terms = enriques_d0_terms(Integer(*bo.beta_sq), *bo.i, *bo.j);
            const Integer d0 = enriques_d0(Integer(*bo.beta_sq), *bo.i, *bo.j);
            Json t = Json::array();
            for (const auto& v : terms) t.push_back(str(v));
            o.results["d0"] = str(d0);
            o.results["d0_terms"] = t;
            o.rows.push_back({"d0", str(d0)});
            for (std::size_t k = 0; k < terms.size(); ++k) {
                o.rows.push_back({"d0_term " + std::to_string(k + 1), str(terms[k])});
            }
        }
        return o;
    }
    if (!bo.a || !bo.b || !bo.gamma || bo.lambda.empty() || bo.mu.empty() || !bo.d) {
        throw CLI::ValidationError("--surface bielliptic", "needs --a --b --lambda --mu --gamma --d");
    }
    BiellipticParams p;
    p.a = *bo.a;
    p.b = *bo.b;
    p.gamma = *bo.gamma;
    p.lambda = parse_rational(bo.lambda);
    p.mu = parse_rational(bo.mu);
    o.parameters["a"] = *bo.a;
    o.parameters["b"] = *bo.b;
    o.parameters["lambda"] = to_string(p.lambda);
    o.parameters["mu"] = to_string(p.mu);
    o.parameters["gamma"] = *bo.gamma;
    o.parameters["d"] = *bo.d;
    o.provenance = "bielliptic surface, beta = a lambda A + b mu B with A.B = gamma: codim >= min over cases "
                   "1 d sqrt(beta^2) - 1, 2 (d a lambda - 1) mu gamma + 1 (and its mirror), "
                   "2/b2=0 d^2 a b lambda mu gamma - d b mu gamma - d a lambda gamma; N >= 2 ceil(codim) - 2";
    const auto c = bielliptic_codim_bound(p, *bo.d);
    put_codim(o, c);
    const Rational dim = bielliptic_dim_ls(p, *bo.d);
    o.results["dim_linear_system"] = to_string(dim);
    o.rows.push_back({"dim_linear_system", to_string(dim)});
    return o;
}

Outcome decompose_cmd(const std::string& lattice_file, const std::string& preset, const std::string& beta_text,
                      std::uint64_t limit) {
    if (lattice_file.empty() == preset.empty()) {
        throw CLI::ValidationError("--lattice", "give exactly one of --lattice FILE and --preset NAME");
    }
    const LatticeModel lattice = preset.empty() ? io::load_lattice(lattice_file) : *lattice_preset(preset);
    const DivisorClass beta = io::parse_divisor_class(beta_text);
    Outcome o;
    if (!lattice_file.empty()) o.parameters["lattice"] = lattice_file;
    o.parameters["lattice_name"] = lattice.name;
    o.parameters["beta"] = io::to_string(beta);
    o.provenance = "integral pairs theta_1 + theta_2 = beta with D_1.theta > 0, (n_l D_1 + D_l).theta > 0 and "
                   "N.theta >= 0 for listed nef N, searched over the region 0 < c_1 < a_1, "
                   "a_l - k_l a_1 < c_l < k_l a_1 in orthogonal coordinates";
    const auto pairs = decompose(lattice, beta, limit);
    o.rows.push_back({"theta_1", "theta_2"});
    Json list = Json::array();
    for (const auto& pr : pairs) {
        list.push_back({{"theta_1", io::to_string(pr.first)}, {"theta_2", io::to_string(pr.second)}});
        o.rows.push_back({io::to_string(pr.first), io::to_string(pr.second)});
    }
    o.results["count"] = std::to_string(pairs.size());
    o.results["pairs"] = list;
    return o;
}

// ---------------------------------------------------------------------------
// Self-verification

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

std::vector<Check> verify_all(const std::string& corpus) {
    std::vector<Check> out;
    const std::vector<SurfaceTopology> identity_surfaces{{0, 10, 1}, {2, 2, 0}, {0, 1, 0}, {4, 6, 0}};
    for (const auto& s : identity_surfaces) {
        const auto r = remark_identity_report(s, kDefaultOrder);
        std::string detail = "b1=" + std::to_string(s.b1) + " b2=" + std::to_string(s.b2) + " order 12";
        if (!r.holds) {
            detail += " first mismatch q^" + std::to_string(r.first_mismatch->a) + " t^" +
                      std::to_string(r.first_mismatch->b);
        }
        out.push_back({"identity", r.holds, detail});
    }
    for (const auto& [name, s] : {std::pair{"enriques", SurfaceTopology::enriques()},
                                  std::pair{"bielliptic", SurfaceTopology::bielliptic()}}) {
        const auto table = hilb_betti_table(s, 10);
        const auto stable = stable_betti_series(s, 8);
        std::string bad;
        for (int k = 0; k <= 8 && bad.empty(); ++k) {
            for (int n = k; n <= 10; ++n) {
                if (table[n][k] != stable[k]) {
                    bad = " differs at n=" + std::to_string(n) + " k=" + std::to_string(k);
                    break;
                }
            }
        }
        out.push_back({"stabilization", bad.empty(), std::string(name) + " k<=8, k<=n<=10" + bad});
        const auto r = oracle_report(s, 10);
        out.push_back({"oracle", r.agree, std::string(name) + " order 10"});
    }
    {
        const auto e = SurfaceTopology::enriques();
        const auto t = stable_perverse_table(e, 2);
        const bool ok = t.at(2, 0) == 1 && t.at(1, 1) == 9 && t.at(0, 2) == 1 && stable_betti(e, 2) == 11 &&
                        hilb_betti(e, 2, 2) == 11 && hilb_betti(e, 5, 2) == 11;
        out.push_back({"enriques-low-order", ok, "n^{2,0}=1 n^{1,1}=9 n^{0,2}=1 sum 11"});
    }
    for (const auto& rec : io::load_germ_corpus(corpus)) {
        const auto g = CurveGerm::parse(rec.poly);
        const auto inv = analyze_germ(g, rec.branches);
        bool ok = inv.tau <= inv.mu;
        std::string detail = rec.name + " mu=" + std::to_string(inv.mu) + " tau=" + std::to_string(inv.tau);
        if (inv.delta) {
            detail += " delta=" + std::to_string(*inv.delta) + " r=" + std::to_string(*inv.r);
            ok = ok && *inv.milnor_formula && inv.mu <= 2 * *inv.delta;
        }
        if (rec.expected) {
            const auto& x = *rec.expected;
            ok = ok && x.mu == inv.mu && x.tau == inv.tau && (!x.delta || x.delta == inv.delta) && (!x.r || x.r == inv.r);
        }
        out.push_back({"germ", ok, detail});
    }
    {
        const auto bi = bielliptic_codim_bound(BiellipticParams{1, 1, 1, 1, 2}, 3);
        const auto en = enriques_codim_bound(10, 10);
        const bool ok = enriques_d0(10, 2, 3) == 4 && bi.value == Surd(5) && n_lower_bound(bi.value) == 8 &&
                        en.value == Surd(5);
        out.push_back({"bounds", ok, "d0(10,2,3)=4, bielliptic (1,1,1,1,2) d=3 -> 5 N>=8, enriques (10,10) -> 5"});
    }
    {
        const auto lat = bielliptic_rank2_preset();
        const bool ok = decompose(lat, {1, 1}).size() == 2 && decompose(lat, {2, 2}).size() == 7;
        out.push_back({"decompose", ok, "bielliptic-rank2 beta=(1,1) -> 2 pairs, (2,2) -> 7 pairs"});
    }
    return out;
}

Outcome verify_cmd(const std::string& corpus) {
    Outcome o;
    o.parameters["corpus"] = corpus;
    o.provenance = "self-verification: generating-function identity, stabilization, recursion oracle, "
                   "low-order Enriques table, Milnor formula corpus, bound values, decomposition counts";
    o.rows.push_back({"check", "status", "detail"});
    Json list = Json::array();
    bool all = true;
    for (const auto& c : verify_all(corpus)) {
        all = all && c.ok;
        list.push_back({{"check", c.name}, {"status", c.ok ? "PASS" : "FAIL"}, {"detail", c.detail}});
        o.rows.push_back({c.name, c.ok ? "PASS" : "FAIL", c.detail});
    }
    o.results["checks"] = list;
    o.results["status"] = all ? "PASS" : "FAIL";
    if (!all) o.exit = kVerificationFailure;
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact stable invariants of moduli of one-dimensional sheaves on surfaces", "stabctab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "stabctab 0.1.0");

    std::string format = "tsv";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    };

    std::function<Outcome()> action;
    std::string command;

    SurfaceOptions so;
    int max_k = kDefaultOrder;
    auto* sb = app.add_subcommand("stable-betti", "Stable Betti numbers b_k for k <= max-k");
    so.attach(sb);
    sb->add_option("--max-k", max_k)->check(CLI::NonNegativeNumber);
    add_format(sb);
    sb->callback([&] { command = "stable-betti", action = [&] { return stable_betti_cmd(so, max_k); }; });

    int hn = 0;
    std::optional<int> hk;
    auto* hb = app.add_subcommand("hilb-betti", "Betti numbers of the Hilbert scheme of n points");
    so.attach(hb);
    hb->add_option("--n", hn)->required()->check(CLI::NonNegativeNumber);
    hb->add_option("--k", hk)->check(CLI::NonNegativeNumber);
    add_format(hb);
    hb->callback([&] { command = "hilb-betti", action = [&] { return hilb_betti_cmd(so, hn, hk); }; });

    int porder = kDefaultOrder;
    bool oracle = false;
    auto* pv = app.add_subcommand("perverse", "Stable perverse Hodge numbers n^{i,j} for i + j <= max-order");
    so.attach(pv);
    pv->add_option("--max-order", porder)->check(CLI::NonNegativeNumber);
    pv->add_flag("--oracle", oracle, "Cross-check against the relative Hilbert scheme recursion");
    add_format(pv);
    pv->callback([&] { command = "perverse", action = [&] { return perverse_cmd(so, porder, oracle); }; });

    int iorder = kDefaultOrder;
    bool perturb = false;
    auto* id = app.add_subcommand("identity", "Check H(q,t)/(1-qt) against Goettsche's series after z=t, w=q/t");
    so.attach(id);
    id->add_option("--order", iorder)->check(CLI::NonNegativeNumber);
    id->add_flag("--perturb", perturb, "Test hook: perturb one coefficient so the check must fail");
    add_format(id);
    id->callback([&] { command = "identity", action = [&] { return identity_cmd(so, iorder, perturb); }; });

    std::string poly, branches;
    auto* gm = app.add_subcommand("germ", "Milnor, Tjurina and delta invariants of a plane curve germ");
    gm->add_option("--poly", poly, "Polynomial in x, y, e.g. \"y^2 - x^3\"")->required();
    gm->add_option("--branches", branches, "Branch file (JSON, see docs/formats.md)")->check(CLI::ExistingFile);
    add_format(gm);
    gm->callback([&] { command = "germ", action = [&] { return germ_cmd(poly, branches); }; });

    BoundsOptions bo;
    auto* bd = app.add_subcommand("bounds", "Codimension bounds, N bounds and stabilization thresholds");
    bd->add_option("--surface", bo.surface)->required()->check(CLI::IsMember({"enriques", "bielliptic"}));
    bd->add_option("--beta-sq", bo.beta_sq, "beta^2 (Enriques)");
    bd->add_option("--d", bo.d)->check(CLI::PositiveNumber);
    bd->add_option("--i", bo.i)->check(CLI::NonNegativeNumber);
    bd->add_option("--j", bo.j)->check(CLI::NonNegativeNumber);
    bd->add_option("--cases", bo.cases, "Enriques cases: all, or nef-components (cases 1.x only)")
        ->check(CLI::IsMember({"all", "nef-components"}));
    bd->add_option("--a", bo.a)->check(CLI::PositiveNumber);
    bd->add_option("--b", bo.b)->check(CLI::PositiveNumber);
    bd->add_option("--lambda", bo.lambda, "Positive rational p/q");
    bd->add_option("--mu", bo.mu, "Positive rational p/q");
    bd->add_option("--gamma", bo.gamma)->check(CLI::PositiveNumber);
    add_format(bd);
    bd->callback([&] { command = "bounds", action = [&] { return bounds_cmd(bo); }; });

    std::string lattice_file, lattice_name, beta;
    std::uint64_t limit = kDefaultEnumerationLimit;
    auto* dc = app.add_subcommand("decompose", "Candidate decompositions beta = theta_1 + theta_2");
    dc->add_option("--lattice", lattice_file, "Lattice config (JSON)")->check(CLI::ExistingFile);
    dc->add_option("--preset", lattice_name)->check(CLI::IsMember({"bielliptic-rank2", "enriques"}));
    dc->add_option("--beta", beta, "Comma-separated Gram coordinates")->required();
    dc->add_option("--limit", limit, "Maximum number of lattice points to visit");
    add_format(dc);
    dc->callback([&] {
        command = "decompose", action = [&] { return decompose_cmd(lattice_file, lattice_name, beta, limit); };
    });

    std::string export_name;
    auto* le = app.add_subcommand("lattice", "Print a preset lattice as a config file");
    le->add_option("--preset", export_name)->required()->check(CLI::IsMember({"bielliptic-rank2", "enriques"}));

    std::string corpus = std::string(STABCTAB_DEFAULT_DATA_DIR) + "/germs.jsonl";
    auto* vf = app.add_subcommand("verify", "Run the self-verification suite");
    vf->add_option("--corpus", corpus, "Germ corpus (JSON lines)")->check(CLI::ExistingFile);
    add_format(vf);
    vf->callback([&] { command = "verify", action = [&] { return verify_cmd(corpus); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (le->parsed()) {
            out << io::lattice_to_json(*lattice_preset(export_name));
            return kOk;
        }
        const Outcome o = action();
        emit(command, o, format, out);
        return o.exit;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsageError;
    } catch (const InternalIdentityFailure& e) {
        err << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const InconsistentTower& e) {
        err << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace stabctab::cli
