// johnsonlab: exact computations in the weight-graded Goldman-Turaev Lie
// bialgebra, derivation algebras and their Johnson-type subalgebras.
//
// Exit codes: 0 success, 1 identity-check failure, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "jl/cache.hpp"
#include "jl/framings.hpp"
#include "jl/genus0.hpp"
#include "jl/goldman.hpp"
#include "jl/johnson.hpp"
#include "jl/pbw.hpp"
#include "jl/repring.hpp"
#include "jl/serialize.hpp"

using namespace jl;

namespace {

struct Config {
    int genus = 2;
    int punctures = 4;
    int weight = 1;
    std::string format = "table";
    std::string cache_dir;
    int jobs = 1;
};

BasisCache make_cache(const Config& cfg) {
    if (!cfg.cache_dir.empty()) return BasisCache(cfg.cache_dir);
    if (const char* env = std::getenv("JOHNSONLAB_CACHE")) return BasisCache(env);
    return BasisCache();
}

void add_common(CLI::App* cmd, Config& cfg, bool punctures = false) {
    cmd->add_option("--genus", cfg.genus, "genus of the symplectic model");
    if (punctures) cmd->add_option("--punctures", cfg.punctures, "number of punctures (boundary model)");
    cmd->add_option("--weight", cfg.weight, "weight / degree bound");
    cmd->add_option("--format", cfg.format, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--jobs", cfg.jobs, "worker threads for basis solves")->check(CLI::PositiveNumber);
    cmd->add_option("--cache-dir", cfg.cache_dir, "basis cache directory (or env JOHNSONLAB_CACHE)");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void emit_poly(const Config& cfg, const CyclicPoly& c) {
    if (cfg.format == "json")
        std::cout << cyclic_to_json(c).dump() << "\n";
    else
        std::cout << c.to_string() << "\n";
}

void emit_pair(const Config& cfg, const CyclicPair& p) {
    if (cfg.format == "json")
        std::cout << pair_to_json(p).dump() << "\n";
    else
        std::cout << p.to_string() << "\n";
}

void emit_der(const Config& cfg, const ThetaDerivation& d) {
    if (cfg.format == "json") {
        std::cout << derivation_to_json(d).dump() << "\n";
        return;
    }
    const Alphabet& a = d.alphabet();
    for (int l = 0; l < a.size(); ++l) {
        std::cout << a.letter_name(l) << " -> "
                  << (d.kind() == DerKind::Lie ? d.lie_value(l).to_string() : d.tensor_value(l).to_string())
                  << "\n";
    }
}

int run_bracket(const Config& cfg, const std::string& xs, const std::string& ys) {
    CyclicPoly x = cyclic_from_json(read_json_file(xs));
    CyclicPoly y = cyclic_from_json(read_json_file(ys));
    emit_poly(cfg, goldman_bracket(x, y));
    return 0;
}

int run_derbasis(const Config& cfg, const std::string& kind) {
    Alphabet a = Alphabet::symplectic(cfg.genus);
    DerKind k = kind == "lie" ? DerKind::Lie : DerKind::Tensor;
    BasisCache cache = make_cache(cfg);
    Subspace s = theta_der_basis_cached(cache, a, cfg.weight, k, cfg.jobs);
    if (cfg.format == "json") {
        Json arr = Json::array();
        for (auto& d : s.basis()) arr.push_back(derivation_to_json(d));
        std::cout << Json{{"dimension", s.dim()}, {"basis", arr}}.dump() << "\n";
    } else {
        std::cout << "dim Der^theta_" << cfg.weight << " (" << kind << ", g=" << cfg.genus
                  << ") = " << s.dim() << "\n";
        for (auto& [md, r] : s.multidegree_ranks()) {
            std::cout << "  multidegree (";
            for (std::size_t i = 0; i < md.size(); ++i) std::cout << (i ? "," : "") << md[i];
            std::cout << "): " << r << "\n";
        }
    }
    return 0;
}

int run_johnson(const Config& cfg) {
    Alphabet a = Alphabet::symplectic(cfg.genus);
    BasisCache cache = make_cache(cfg);
    Subspace s = johnson_image_cached(cache, a, cfg.weight);
    const char* label = cfg.genus >= 3 ? "johnson image" : "degree-1-generated subalgebra";
    if (cfg.format == "json") {
        Json arr = Json::array();
        for (auto& d : s.basis()) arr.push_back(derivation_to_json(d));
        std::cout << Json{{"space", label}, {"dimension", s.dim()}, {"basis", arr}}.dump() << "\n";
    } else {
        std::cout << label << ": dim J_" << cfg.weight << " (g=" << cfg.genus << ") = " << s.dim() << "\n";
    }
    return 0;
}

int run_pollack(const Config& cfg, int which) {
    PollackResult r = pollack_check(which);
    if (cfg.format == "json") {
        std::cout << Json{{"relation", which}, {"holds", r.holds}}.dump() << "\n";
    } else {
        std::cout << "pollack relation " << which << ": residual = " << (r.holds ? "0" : "NONZERO") << "\n";
        if (!r.holds) emit_der(cfg, r.residual);
    }
    return r.holds ? 0 : 1;
}

int run_epsilon(const Config& cfg, int two_n) {
    if (two_n % 2 != 0) throw CLI::ValidationError("--n must be even (epsilon_{2n})");
    ThetaDerivation e = epsilon_derivation(Alphabet::symplectic(1), two_n / 2);
    emit_der(cfg, e);
    return 0;
}

int run_mu(const Config& cfg, int n, const std::string& monomial) {
    Alphabet a = Alphabet::symplectic(cfg.genus);
    Word m;
    std::stringstream ss(monomial);
    std::string name;
    while (std::getline(ss, name, ',')) {
        int idx = a.letter_index(name);
        if (idx < 0) throw CLI::ValidationError("bad letter " + name);
        m += static_cast<char>(idx);
    }
    emit_der(cfg, mu_odd(a, n, m));
    return 0;
}

int run_mu2(const Config& cfg, int n) {
    Alphabet a = Alphabet::symplectic(cfg.genus);
    MuSquared ms = mu_squared(a, n);
    emit_der(cfg, ms.value);
    return 0;
}

int run_explore_mu2(const Config& cfg, int n) {
    Alphabet a = Alphabet::symplectic(cfg.genus);
    MuSquared ms = mu_squared(a, n);
    CyclicPoly c = kappa_inverse(ms.value);
    CyclicPair d = turaev_cobracket(c);
    if (cfg.format == "json") {
        std::cout << Json{{"kappa_inverse", cyclic_to_json(c)}, {"cobracket", pair_to_json(d)}}.dump()
                  << "\n";
    } else {
        std::cout << "kappa^{-1}(mu^2_" << 2 * n + 1 << "):\n  " << c.to_string() << "\n";
        std::cout << "delta kappa^{-1}(mu^2):\n  " << d.to_string() << "\n";
        std::cout << (d.is_zero() ? "cobracket vanishes\n" : "cobracket is NONZERO\n");
    }
    return 0;
}

int run_es_trace(const Config& cfg, const std::string& path) {
    ThetaDerivation d = derivation_from_json(read_json_file(path));
    emit_poly(cfg, es_trace(d));
    return 0;
}

int run_cobracket(const Config& cfg, const std::string& path, bool reduced) {
    CyclicPoly x = cyclic_from_json(read_json_file(path));
    emit_pair(cfg, reduced ? reduced_cobracket(x) : turaev_cobracket(x));
    return 0;
}

int run_kk_apply(const Config& cfg, const std::string& xpath, const std::string& wpath) {
    CyclicPoly x = cyclic_from_json(read_json_file(xpath));
    TensorPoly w = tensor_from_json(read_json_file(wpath));
    TensorPoly out = kk_action(x, w);
    if (cfg.format == "json")
        std::cout << tensor_to_json(out).dump() << "\n";
    else
        std::cout << out.to_string() << "\n";
    return 0;
}

int run_div0(const Config& cfg, const std::string& path) {
    SpecialDer0 d = sder_from_json(read_json_file(path));
    emit_poly(cfg, divergence(d));
    return 0;
}

int run_edge(const Config& cfg, const std::string& path, const std::vector<int>& rots) {
    SpecialDer0 d = sder_from_json(read_json_file(path));
    RotationData rot;
    int j = 0;
    for (int r : rots) {
        if (j == d.base()) ++j;
        rot[j++] = r;
    }
    emit_poly(cfg, edge_map(d, rot));
    return 0;
}

int run_relations(const Config& cfg) {
    std::string report;
    bool ok = relations_check(cfg.punctures - 1, &report);
    if (cfg.format == "json")
        std::cout << Json{{"punctures", cfg.punctures}, {"ok", ok}}.dump() << "\n";
    else
        std::cout << report << (ok ? "relations hold\n" : "RELATIONS FAIL\n");
    return ok ? 0 : 1;
}

int run_appendix_a(const Config& cfg, int m) {
    AppendixACheck r = appendix_a_check(m);
    bool ok = r.intermediate_ok && r.identity_ok;
    if (cfg.format == "json") {
        std::cout << Json{{"m", m},
                          {"intermediate_ok", r.intermediate_ok},
                          {"identity_ok", r.identity_ok}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "appendix A, m=" << m << ": intermediate "
                  << (r.intermediate_ok ? "ok" : "FAIL") << ", identity mod D^2 "
                  << (r.identity_ok ? "ok" : "FAIL") << "\n";
        if (!r.identity_ok) std::cout << "residual: " << r.residual.to_string() << "\n";
    }
    return ok ? 0 : 1;
}

int run_decompose(const Config& cfg, const std::string& what, int k) {
    Laurent h = defining_character(cfg.genus);
    Laurent chi(cfg.genus);
    if (what == "lambda")
        chi = lambda_op(h, k);
    else if (what == "sym")
        chi = sym_op(h, k);
    else if (what == "lambda3")
        chi = lambda_op(h, 3);
    else if (what == "lambda2lambda3")
        chi = lambda_op(lambda_op(h, 3), 2);
    else
        throw CLI::ValidationError("unknown space " + what);
    RepElement dec = decompose(chi, cfg.genus);
    if (cfg.format == "json") {
        std::cout << rep_to_json(dec).dump() << "\n";
    } else {
        for (auto& [p, m] : dec) std::cout << partition_to_string(p) << ": " << m << "\n";
    }
    return 0;
}

int run_mobius(const Config& cfg, const std::string& path, int N) {
    Json j = read_json_file(path);
    if (j.at("mode") == "dimension") {
        std::vector<Rat> phi;
        for (auto& v : j.at("phi")) phi.push_back(rat_from_string(v.get<std::string>()));
        auto h = mobius_invert_dimension(phi, N);
        Json out = Json::array();
        for (int n = 1; n <= N; ++n) out.push_back(rat_to_string(h[static_cast<std::size_t>(n)]));
        if (cfg.format == "json") {
            std::cout << Json{{"h", out}}.dump() << "\n";
        } else {
            for (int n = 1; n <= N; ++n)
                std::cout << "h_" << n << " = " << rat_to_string(h[static_cast<std::size_t>(n)]) << "\n";
        }
        return 0;
    }
    // character mode: entries are rep elements
    int g = cfg.genus;
    std::vector<Laurent> phi;
    for (auto& v : j.at("phi")) phi.push_back(rep_character(rep_from_json(v), g));
    auto h = mobius_invert_character(phi, N, g);
    Json out = Json::array();
    for (int n = 1; n <= N; ++n) out.push_back(rep_to_json(decompose(h[static_cast<std::size_t>(n)], g)));
    if (cfg.format == "json") {
        std::cout << Json{{"h", out}}.dump() << "\n";
    } else {
        for (int n = 1; n <= N; ++n) {
            std::cout << "h_" << n << " =";
            for (auto& [p, m] : decompose(h[static_cast<std::size_t>(n)], g))
                std::cout << " " << m << "*" << partition_to_string(p);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_framing(const Config& cfg, const std::string& path) {
    FramingData f = framing_from_json(read_json_file(path));
    OrbitDescriptor d = classify_orbit(f);
    if (cfg.format == "json") {
        Json j{{"arf", d.arf_invariant}, {"kind", d.kind}};
        if (d.kind == "gcd") {
            j["gcd"] = d.gcd_value;
            j["parity_consistent"] = d.parity_consistent;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << d.to_string() << "\n";
    }
    return d.kind == "gcd" && !d.parity_consistent ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight-graded Goldman-Turaev / Johnson computations"};
    app.require_subcommand(1);
    Config cfg;

    std::string xs, ys, kind = "lie", monomial, mode_path, what = "lambda3";
    std::vector<int> rots;
    int which = 1, two_n = 4, n = 1, m = 1, k = 3, N = 6;
    bool reduced = false;

    auto* bracket = app.add_subcommand("bracket", "Goldman bracket of two cyclic elements (JSON files)");
    add_common(bracket, cfg);
    bracket->add_option("x", xs)->required();
    bracket->add_option("y", ys)->required();

    auto* cob = app.add_subcommand("cobracket", "Turaev cobracket of a cyclic element (JSON file)");
    add_common(cob, cfg);
    cob->add_option("x", xs)->required();
    cob->add_flag("--reduced", reduced, "drop terms with an empty factor");

    auto* kk = app.add_subcommand("kk-apply", "apply kappa(x) to a tensor element (two JSON files)");
    add_common(kk, cfg);
    kk->add_option("x", xs)->required();
    kk->add_option("w", ys)->required();

    auto* derb = app.add_subcommand("derbasis", "basis of Der^theta in a given weight");
    add_common(derb, cfg);
    derb->add_option("--kind", kind)->check(CLI::IsMember({"lie", "tensor"}));

    auto* jim = app.add_subcommand("johnson-image", "degree-1-generated subalgebra of Der^theta");
    add_common(jim, cfg);

    auto* pol = app.add_subcommand("pollack", "check a quadratic Pollack relation");
    add_common(pol, cfg);
    pol->add_option("--which", which)->check(CLI::IsMember({1, 2}));

    auto* eps = app.add_subcommand("epsilon", "genus-1 epsilon_{2n} derivation");
    add_common(eps, cfg);
    eps->add_option("--n", two_n, "2n (even)");

    auto* mu = app.add_subcommand("mu", "Nakamura embedding value mu_{2n+1}(monomial)");
    add_common(mu, cfg);
    mu->add_option("--n", n);
    mu->add_option("--monomial", monomial, "comma-separated letters, e.g. a1,a1,b2")->required();

    auto* mu2 = app.add_subcommand("mu2", "mu^2_{2n+1}: bracket of the invariant bivector");
    add_common(mu2, cfg);
    mu2->add_option("--n", n);

    auto* xmu2 = app.add_subcommand("explore-mu2", "cobracket of kappa^{-1}(mu^2_{2n+1})");
    add_common(xmu2, cfg);
    xmu2->add_option("--n", n);

    auto* est = app.add_subcommand("es-trace", "Enomoto-Satoh trace of a derivation (JSON file)");
    add_common(est, cfg);
    est->add_option("d", xs)->required();

    auto* dv = app.add_subcommand("div0", "genus-0 divergence of a special derivation (JSON file)");
    add_common(dv, cfg, true);
    dv->add_option("d", xs)->required();

    auto* ed = app.add_subcommand("edge", "genus-0 edge map with rotation numbers");
    add_common(ed, cfg, true);
    ed->add_option("d", xs)->required();
    ed->add_option("--rot", rots, "rotation numbers for the non-base punctures in index order");

    auto* rel = app.add_subcommand("relations0", "verify the genus-0 presentation relations");
    add_common(rel, cfg, true);

    auto* apx = app.add_subcommand("appendix-a", "polylog divergence identity mod depth 2");
    add_common(apx, cfg);
    apx->add_option("--m", m)->check(CLI::PositiveNumber);

    auto* dec = app.add_subcommand("repring-decompose", "decompose a plethysm of H into irreducibles");
    add_common(dec, cfg);
    dec->add_option("--space", what, "lambda|sym|lambda3|lambda2lambda3");
    dec->add_option("--k", k);

    auto* mob = app.add_subcommand("mobius", "Moebius inversion of a graded homology series (JSON file)");
    add_common(mob, cfg);
    mob->add_option("phi", mode_path)->required();
    mob->add_option("--N", N, "truncation degree");

    auto* fra = app.add_subcommand("framing", "Arf invariant and orbit descriptor (JSON file)");
    add_common(fra, cfg);
    fra->add_option("f", xs)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bracket->parsed()) return run_bracket(cfg, xs, ys);
        if (cob->parsed()) return run_cobracket(cfg, xs, reduced);
        if (kk->parsed()) return run_kk_apply(cfg, xs, ys);
        if (derb->parsed()) return run_derbasis(cfg, kind);
        if (jim->parsed()) return run_johnson(cfg);
        if (pol->parsed()) return run_pollack(cfg, which);
        if (eps->parsed()) return run_epsilon(cfg, two_n);
        if (mu->parsed()) return run_mu(cfg, n, monomial);
        if (mu2->parsed()) return run_mu2(cfg, n);
        if (xmu2->parsed()) return run_explore_mu2(cfg, n);
        if (est->parsed()) return run_es_trace(cfg, xs);
        if (dv->parsed()) return run_div0(cfg, xs);
        if (ed->parsed()) return run_edge(cfg, xs, rots);
        if (rel->parsed()) return run_relations(cfg);
        if (apx->parsed()) return run_appendix_a(cfg, m);
        if (dec->parsed()) return run_decompose(cfg, what, k);
        if (mob->parsed()) return run_mobius(cfg, mode_path, N);
        if (fra->parsed()) return run_framing(cfg, xs);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
