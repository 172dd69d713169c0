#pragma once

// Command-line front end. Every command builds a JSON object; --format text
// prints it as "key: value" lines instead.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "henselize/henselize.hpp"
#include "henselize/sampling.hpp"

namespace henselize::cli {

using json = nlohmann::ordered_json;

enum exit_status : int { ok = 0, check_failed = 1, usage_error = 2, fault = 3 };

struct InstanceConfig {
    std::string name = "padic";
    unsigned long p = 2;

    json to_json() const {
        json j{{"instance", name}};
        if (name == "padic") j["p"] = p;
        return j;
    }
    static InstanceConfig from_json(const json& j) {
        InstanceConfig c;
        c.name = j.value("instance", std::string("padic"));
        c.p = j.value("p", 2UL);
        return c;
    }
};

/// Calls fn(preset, ring_syntax, field_syntax) for the configured instance.
template <class Fn>
json with_instance(const InstanceConfig& cfg, Fn&& fn) {
    if (cfg.name == "padic") return fn(PadicDomain(cfg.p), rational_syntax(), rational_syntax());
    if (cfg.name == "tadic") return fn(TadicDomain(), ratfunc_syntax("t"), ratfunc_syntax("t"));
    if (cfg.name == "monomial") return fn(MonomialDomain(), local_syntax<NoRelation>(), multifrac_syntax());
    if (cfg.name == "uwzero") return fn(UWZeroPreset(), local_syntax<UWZero>(), ratfunc_syntax("w"));
    if (cfg.name == "usquare") return fn(USquarePreset(), local_syntax<USquareUWZero>(), ratfunc_syntax("w"));
    throw parse_error("unknown instance '" + cfg.name + "' (expected padic, tadic, monomial, uwzero or usquare)");
}

template <class Field>
std::string show(const Field& field, const UniPoly<typename Field::element_type>& p, const std::string& var = "X") {
    return to_string(p, var, std::function<std::string(const typename Field::element_type&)>(
                                 [&field](const typename Field::element_type& c) { return field.format(c); }));
}

template <class Preset>
std::string show_ring(const Preset& ring, const UniPoly<typename Preset::element_type>& p, const std::string& var = "X") {
    return to_string(p, var, std::function<std::string(const typename Preset::element_type&)>(
                                 [&ring](const typename Preset::element_type& c) { return ring.format(c); }));
}

inline json values_json(const std::vector<ExtendedValue>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(v.to_string());
    return a;
}

template <class Field>
json polygon_json(const Field& field, const UniPoly<typename Field::element_type>& p) {
    using E = typename Field::element_type;
    NewtonPolygon np = polygon(p, field);
    json j;
    j["polynomial"] = show(field, p);
    json pts = json::array(), verts = json::array(), edges = json::array();
    for (const auto& pt : np.points) pts.push_back({pt.index, pt.value.to_string()});
    for (const auto& pt : np.vertices) verts.push_back({pt.index, pt.value.to_string()});
    for (const auto& e : np.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"slope", e.slope.to_string()}});
    j["points"] = pts;
    j["vertices"] = verts;
    j["edges"] = edges;
    j["trailing_zero_count"] = np.trailing_zero_count;
    j["isolated_slopes"] = isolated_slopes(np);
    if (field.is_zero(E(p.leading() - E(1)))) j["root_valuations"] = values_json(root_valuations(p, field));
    else j["root_valuations"] = nullptr;
    return j;
}

template <class E>
json mobius_json(const Mobius<E>& m, const std::function<std::string(const E&)>& fmt) {
    return {{"a", fmt(m.a)}, {"b", fmt(m.b)}, {"c", fmt(m.c)}, {"d", fmt(m.d)}};
}

template <class Field>
json specialize_json(const Field& field, const UniPoly<typename Field::element_type>& p, std::optional<std::size_t> k_opt) {
    using E = typename Field::element_type;
    auto ks = isolated_slopes(p, field);
    if (ks.empty()) throw precondition_error("polynomial has no isolated slope");
    const std::size_t k = k_opt ? *k_opt : ks.front();
    auto iso = isolate_root(p, k, field);
    std::function<std::string(const E&)> fmt = [&field](const E& c) { return field.format(c); };
    json j;
    j["p"] = show(field, p);
    j["k"] = k;
    j["isolated_slopes"] = ks;
    j["c"] = fmt(iso.normalization.c);
    j["root_valuation"] = iso.normalization.root_valuation.to_string();
    j["q"] = show(field, iso.normalization.q, "Y");
    j["r"] = show(field, iso.specialization.r);
    j["exact_root"] = iso.specialization.exact_root;
    if (iso.specialization.s) j["s"] = show(field, *iso.specialization.s);
    if (iso.specialization.t) {
        j["t"] = show(field, *iso.specialization.t);
        j["t_special"] = check_special(*iso.specialization.t, valuation_ring_predicates(field)).ok;
        j["nagata"] = show(field, compose(*iso.specialization.t, UniPoly<E>{E(1), E(1)}));
    }
    if (iso.specialization.nu) j["nu_mobius"] = mobius_json(*iso.specialization.nu, fmt);
    if (iso.alpha) j["alpha_mobius"] = mobius_json(*iso.alpha, fmt);
    return j;
}

template <class A>
json decision_json(const KernelDecision<A>& d, const std::function<std::string(const A&)>& fmt) {
    json j;
    if (const auto* in = std::get_if<InSf>(&d)) {
        j["decision"] = "InSf";
        j["delta_valuation"] = in->delta_valuation.to_string();
    } else {
        const auto& c = std::get<Annihilator<A>>(d);
        j["decision"] = "Annihilator";
        j["b"] = fmt(c.b);
        j["h"] = to_string(c.h, "T", fmt);
        j["k"] = c.k;
        j["N"] = c.N;
        j["identity_checked"] = c.identity_checked;
        j["reduced_identity"] = c.reduced_identity;
    }
    return j;
}

template <class A>
KernelDecision<A> decision_from_json(const json& j, const Syntax<A>& syn) {
    const std::string kind = j.at("decision").get<std::string>();
    if (kind == "InSf") return InSf{parse_extended_value(j.at("delta_valuation").get<std::string>())};
    if (kind != "Annihilator") throw parse_error("unknown decision '" + kind + "'");
    Annihilator<A> c;
    c.b = parse_with(j.at("b").get<std::string>(), syn);
    c.h = parse_polynomial(j.at("h").get<std::string>(), syn, "T");
    c.k = j.at("k").get<std::size_t>();
    c.N = j.at("N").get<unsigned>();
    c.identity_checked = j.value("identity_checked", false);
    c.reduced_identity = j.value("reduced_identity", false);
    return c;
}

template <class Base>
Syntax<AfElement<typename Base::element_type>> stage_syntax(const StageContext<Base>& ctx,
                                                            const Syntax<typename Base::element_type>& base) {
    using A = typename Base::element_type;
    using AF = AfElement<A>;
    Syntax<AF> s;
    s.constant = [&ctx, c = base.constant](const Rational& r) { return ctx.constant(c(r)); };
    for (const auto& [name, v] : base.variables) s.variables.emplace(name, ctx.constant(v));
    s.variables[ctx.var()] = ctx.alpha();
    s.divide = [&ctx](const AF& a, const AF& b) {
        if (!ctx.is_unit(b)) throw parse_error("division by a non-unit of A_f");
        return a * AF(b.den(), b.num());
    };
    return s;
}

inline unsigned default_precision() {
    if (const char* env = std::getenv("HENSELIZE_PRECISION")) {
        try {
            unsigned long v = std::stoul(env);
            if (v >= 1 && v <= 400) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw parse_error("HENSELIZE_PRECISION must be an integer between 1 and 400");
    }
    return 40;
}

// ---------------------------------------------------------------------------
// demo: the worked regression suite plus seeded property runs

struct DemoLog {
    json checks = json::array();
    bool all = true;

    void record(const std::string& name, bool pass) {
        checks.push_back({{"name", name}, {"pass", pass}});
        all = all && pass;
    }
    template <class Fn>
    void run(const std::string& name, Fn&& fn) {
        bool pass = false;
        try {
            pass = fn();
        } catch (const std::exception&) {
            pass = false;
        }
        record(name, pass);
    }
};

template <class Preset>
json demo_properties(const Preset& preset, Rng& rng, unsigned samples, DemoLog& log) {
    Sampler<Preset> s(preset);
    unsigned ch = 0, in_sf = 0, ann = 0, verified = 0, shape_faults = 0;
    for (unsigned i = 0; i < samples; ++i) {
        const int n = static_cast<int>(uniform(rng, 1, 3));
        auto f = random_nagata(rng, s, n);
        auto q = random_poly<typename Preset::element_type>(rng, n - 1, [&](Rng& r) { return s.element(r); });
        if (cayley_hamilton_check(f, q)) ++ch;
        StageContext<Preset> ctx(preset, f);
        try {
            auto d = decide_kernel(ctx, q);
            (std::holds_alternative<InSf>(d) ? in_sf : ann)++;
            if (verify_certificate(ctx, q, d)) ++verified;
        } catch (const hard_fault&) {
            ++shape_faults;
        }
    }
    log.record(preset.name() + ": Cayley-Hamilton on random samples", ch == samples);
    log.record(preset.name() + ": kernel certificates verified", verified == samples && shape_faults == 0);
    return {{"samples", samples}, {"cayley_hamilton", ch}, {"in_sf", in_sf}, {"annihilator", ann},
            {"verified", verified}, {"hard_faults", shape_faults}};
}

inline json run_demo(std::uint64_t seed, bool& all_pass) {
    DemoLog log;
    PadicField F2(2);
    const auto Q = [](long n, long d = 1) { return make_rational(n, d); };

    log.run("polygon X^2+X+2 over v2 gives {0,1}", [&] {
        QPoly p{Q(2), Q(1), Q(1)};
        return values_json(root_valuations(p, F2)) == json::array({"[0]", "[1]"}) &&
               isolated_slopes(p, F2) == std::vector<std::size_t>{0, 1};
    });
    log.run("polygon T^2+3T+4 over v2 gives {0,2}", [&] {
        return values_json(root_valuations(QPoly{Q(4), Q(3), Q(1)}, F2)) == json::array({"[0]", "[2]"});
    });
    log.run("char poly of x^2 mod X^2+X+2 is T^2+3T+4", [&] {
        QPoly f{Q(2), Q(1), Q(1)};
        return char_poly_mod(f, QPoly{Q(0), Q(0), Q(1)}) == QPoly{Q(4), Q(3), Q(1)} &&
               cayley_hamilton_check(f, QPoly{Q(0), Q(0), Q(1)});
    });
    log.run("isolated-slope chain X^2+X+2 -> X^2-X+4/9", [&] {
        auto iso = isolate_root(QPoly{Q(2), Q(1), Q(1)}, 0, F2);
        return iso.normalization.q == QPoly{Q(1), Q(-1), Q(2)} && iso.specialization.r == QPoly{Q(2), Q(3), Q(2)} &&
               *iso.specialization.s == QPoly{Q(1), Q(-1), Q(4, 9)} && *iso.specialization.t == QPoly{Q(4, 9), Q(-1), Q(1)};
    });
    log.run("special_to_nagata X^2-X+4/9 -> X^2+X+4/9", [&] {
        return special_to_nagata(QPoly{Q(4, 9), Q(-1), Q(1)}, valuation_ring_predicates(F2)) == QPoly{Q(4, 9), Q(1), Q(1)};
    });
    log.run("kbeta zero test in f=X^2+3X+2", [&] {
        BetaContext<PadicField> ctx(F2, QPoly{Q(2), Q(3), Q(1)});
        return ctx.is_zero(QPoly{Q(2), Q(1)}) && !ctx.is_zero(QPoly{Q(1), Q(1)}) &&
               ctx.valuation(QPoly{Q(1), Q(1)}).to_string() == "[0]";
    });
    log.run("kbeta valuation and inverse of beta in f=X^2+X+2", [&] {
        BetaContext<PadicField> ctx(F2, QPoly{Q(2), Q(1), Q(1)});
        auto inv = ctx.invert(QPoly::x());
        return ctx.valuation(QPoly::x()).to_string() == "[1]" && inv.rep() == QPoly{Q(-1, 2), Q(-1, 2)} &&
               ctx.is_zero(inv * ctx.beta() - ModElement<Rational>(1));
    });
    log.run("immediate description of beta to depth 3", [&] {
        BetaContext<PadicField> ctx(F2, QPoly{Q(2), Q(1), Q(1)});
        auto d = ctx.immediate_description(QPoly::x(), 3);
        return mod_floor(d.a.get_num(), Integer(8)) == 2 && d.gap >= ExtendedValue(ValueVector{4});
    });
    log.run("oracle lift of X^2+X+2 to 2^40", [&] {
        PadicCompletion comp(2, 40);
        Integer r = lift_hensel_zero(QPoly{Q(2), Q(1), Q(1)}, comp);
        return mod_floor(r, Integer(4)) == 2 && comp.is_zero(eval_in(comp, QPoly{Q(2), Q(1), Q(1)}, r));
    });
    log.run("oracle roots of (X-2)(X-12) over Z_2", [&] {
        auto o = exhaustive_root_valuations(QPoly{Q(24), Q(-14), Q(1)}, 2, 20);
        return o.unresolved == 0 && values_json(o.valuations) == json::array({"[1]", "[2]"});
    });
    log.run("kernel certificate padic f=X^2+3X+2 q=X+2", [&] {
        StageContext<PadicDomain> ctx(PadicDomain(2), QPoly{Q(2), Q(3), Q(1)});
        auto d = decide_kernel(ctx, QPoly{Q(2), Q(1)});
        const auto* c = std::get_if<Annihilator<Rational>>(&d);
        return c && c->b == 1 && c->h == QPoly{Q(-1), Q(1)} && c->k == 1 && c->N == 1 &&
               verify_certificate(ctx, QPoly{Q(2), Q(1)}, d);
    });
    log.run("kernel certificate uwzero f=X^2+X+w q=u", [&] {
        using L = LocalElement<UWZero>;
        StageContext<UWZeroPreset> ctx(UWZeroPreset(), UniPoly<L>{L::w(), L(1), L(1)});
        auto d = decide_kernel(ctx, UniPoly<L>{L::u()});
        const auto* c = std::get_if<Annihilator<L>>(&d);
        return c && c->b.to_string() == "w^2" && c->h == UniPoly<L>{L(1)} && c->k == 2 && c->N == 1 &&
               verify_certificate(ctx, UniPoly<L>{L::u()}, d);
    });
    log.run("kernel certificate usquare f=X^2+X+w q=u", [&] {
        using L = LocalElement<USquareUWZero>;
        StageContext<USquarePreset> ctx(USquarePreset(), UniPoly<L>{L::w(), L(1), L(1)});
        auto d = decide_kernel(ctx, UniPoly<L>{L::u()});
        const auto* c = std::get_if<Annihilator<L>>(&d);
        return c && c->b.to_string() == "1" && c->h == UniPoly<L>{L(1)} && c->k == 2 && c->N == 2 &&
               verify_certificate(ctx, UniPoly<L>{L::u()}, d);
    });
    log.run("theta_f(alpha) = beta", [&] {
        StageContext<PadicDomain> ctx(PadicDomain(2), QPoly{Q(4, 9), Q(1), Q(1)});
        return ctx.beta().equal(ctx.theta_f(ctx.alpha()).value, ctx.beta().beta());
    });

    Rng rng(seed);
    json props;
    props["padic"] = demo_properties(PadicDomain(2), rng, 40, log);
    props["tadic"] = demo_properties(TadicDomain(), rng, 25, log);
    props["uwzero"] = demo_properties(UWZeroPreset(), rng, 25, log);
    props["usquare"] = demo_properties(USquarePreset(), rng, 25, log);

    all_pass = log.all;
    return {{"seed", seed}, {"checks", log.checks}, {"properties", props}, {"all_pass", log.all}};
}

// ---------------------------------------------------------------------------

inline void print_text(const json& j, std::ostream& out, const std::string& prefix = "") {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            if (it->is_object()) print_text(*it, out, key);
            else if (it->is_string()) out << key << ": " << it->get<std::string>() << "\n";
            else out << key << ": " << it->dump() << "\n";
        }
    } else {
        out << (prefix.empty() ? "" : prefix + ": ") << j.dump() << "\n";
    }
}

/// Runs one command line. argv[0] is the program name.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact henselization stages, K[beta] arithmetic and kernel certificates", "henselize"};
    app.require_subcommand(1);
    app.fallthrough();

    InstanceConfig cfg;
    std::string format = "text", out_file, config_file;
    std::uint64_t seed = 1;
    app.add_option("--instance", cfg.name, "padic | tadic | monomial | uwzero | usquare");
    app.add_option("--p", cfg.p, "prime for the padic instance");
    app.add_option("--config", config_file, "JSON instance config, e.g. {\"instance\":\"padic\",\"p\":2}");
    app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "seed for randomized runs");
    app.add_option("--out", out_file, "also write the JSON result to this file");

    std::string poly_text, f_text, q_text, a_text, num_text, den_text, t2_text, in_file, kind;
    std::optional<std::size_t> k_opt;
    unsigned depth = 3;
    std::optional<unsigned> precision;

    auto* polygon_cmd = app.add_subcommand("polygon", "Newton polygon and root valuations over K");
    polygon_cmd->add_option("poly", poly_text, "polynomial in X")->required();

    auto* check_cmd = app.add_subcommand("check", "nagata | special | code predicates over V");
    check_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"nagata", "special", "code"}));
    check_cmd->add_option("poly", poly_text)->required();
    check_cmd->add_option("--a", a_text, "code point for kind=code");

    auto* spec_cmd = app.add_subcommand("specialize", "isolated slope -> Nagata -> special polynomial chain");
    spec_cmd->add_option("poly", poly_text)->required();
    spec_cmd->add_option("--k", k_opt, "isolated slope index (default: the first)");

    auto* kbeta_cmd = app.add_subcommand("kbeta", "arithmetic in K[beta]");
    kbeta_cmd->require_subcommand(1);
    std::vector<CLI::App*> kbeta_ops;
    const std::vector<std::pair<std::string, std::string>> ops{
        {"iszero", "decide q(beta) = 0"},
        {"val", "valuation of q(beta)"},
        {"invert", "inverse of q(beta), reduced mod f"},
        {"describe", "a in K with v(q(beta) - a) >= v(q(beta)) + depth"}};
    for (const auto& [op, help] : ops) {
        auto* c = kbeta_cmd->add_subcommand(op, help);
        c->add_option("--f", f_text, "Nagata polynomial over V")->required();
        c->add_option("--q", q_text, "element q(X)")->required();
        c->add_option("--depth", depth, "valuation steps for describe");
        c->fallthrough();
        kbeta_ops.push_back(c);
    }

    auto* stage_cmd = app.add_subcommand("stage", "build A_f, evaluate theta_f, extend towers");
    stage_cmd->add_option("--f", f_text, "Nagata polynomial over A")->required();
    stage_cmd->add_option("--num", num_text, "numerator of an element of A_f, in X");
    stage_cmd->add_option("--den", den_text, "denominator, constant term a unit");
    stage_cmd->add_option("--t2", t2_text, "special polynomial over A_f (class of X written x1) for a second stage");

    auto* kernel_cmd = app.add_subcommand("kernel", "kernel decision for theta_f");
    kernel_cmd->require_subcommand(1);
    auto* decide_cmd = kernel_cmd->add_subcommand("decide", "certificate for q in U_f^-1 A[X]/(f) vs ker theta_f");
    decide_cmd->add_option("--f", f_text, "Nagata polynomial over A")->required();
    decide_cmd->add_option("--q", q_text, "element q(X)")->required();
    auto* verify_cmd = kernel_cmd->add_subcommand("verify", "replay a certificate");
    verify_cmd->add_option("--in", in_file, "JSON emitted by kernel decide")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force references");
    oracle_cmd->require_subcommand(1);
    auto* lift_cmd = oracle_cmd->add_subcommand("lift", "Hensel zero of f in a truncated completion");
    lift_cmd->add_option("--f", f_text, "Nagata polynomial over V")->required();
    lift_cmd->add_option("--precision", precision, "truncation exponent N");
    auto* roots_cmd = oracle_cmd->add_subcommand("roots", "Z_p-root valuations by digit search (padic only)");
    roots_cmd->add_option("poly", poly_text, "monic polynomial over Q")->required();
    roots_cmd->add_option("--precision", precision, "truncation exponent N");

    auto* demo_cmd = app.add_subcommand("demo", "worked regression suite and seeded property runs");

    for (auto* sub : {polygon_cmd, check_cmd, spec_cmd, kbeta_cmd, stage_cmd, kernel_cmd, decide_cmd, verify_cmd,
                      oracle_cmd, lift_cmd, roots_cmd, demo_cmd})
        sub->fallthrough();

    std::vector<std::string> args(argv.rbegin(), argv.rend() - 1);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    int status = ok;
    json result;
    try {
        if (!config_file.empty()) {
            std::ifstream in(config_file);
            if (!in) throw parse_error("cannot read config file " + config_file);
            cfg = InstanceConfig::from_json(json::parse(in));
        }

        if (polygon_cmd->parsed()) {
            result = with_instance(cfg, [&](const auto& preset, const auto&, const auto& fsyn) {
                json j = polygon_json(preset.field(), parse_polynomial(poly_text, fsyn));
                j["field"] = preset.field().name();
                return j;
            });
        } else if (check_cmd->parsed()) {
            result = with_instance(cfg, [&](const auto& preset, const auto&, const auto& fsyn) {
                const auto& field = preset.field();
                auto p = parse_polynomial(poly_text, fsyn);
                auto lp = valuation_ring_predicates(field);
                CheckResult r;
                if (kind == "nagata") r = check_nagata(p, lp);
                else if (kind == "special") r = check_special(p, lp);
                else {
                    if (a_text.empty()) throw parse_error("kind=code needs --a");
                    r = check_code(p, parse_with(a_text, fsyn), lp);
                }
                return json{{"kind", kind}, {"polynomial", show(field, p)}, {"ok", r.ok}, {"diagnostics", r.diagnostics}};
            });
            if (!result["ok"].get<bool>()) status = check_failed;
        } else if (spec_cmd->parsed()) {
            result = with_instance(cfg, [&](const auto& preset, const auto&, const auto& fsyn) {
                return specialize_json(preset.field(), parse_polynomial(poly_text, fsyn), k_opt);
            });
        } else if (kbeta_cmd->parsed()) {
            std::string op;
            for (auto* c : kbeta_ops)
                if (c->parsed()) op = c->get_name();
            result = with_instance(cfg, [&](const auto& preset, const auto&, const auto& fsyn) {
                using Field = std::decay_t<decltype(preset.field())>;
                using E = typename Field::element_type;
                const Field& field = preset.field();
                BetaContext<Field> ctx(field, parse_polynomial(f_text, fsyn));
                auto q = parse_polynomial(q_text, fsyn);
                json j{{"f", show(field, ctx.f())}, {"q", show(field, q)}, {"w_n", ctx.w_n().to_string()}};
                if (op == "iszero" || op == "val") {
                    auto zt = ctx.analyze(q);
                    j["g"] = show(field, zt.g, "T");
                    j["g1"] = show(field, zt.g1, "T");
                    j["root_valuations_g"] = values_json(zt.before);
                    j["root_valuations_g1"] = values_json(zt.after);
                    j["is_zero"] = zt.zero;
                    j["valuation"] = zt.value.to_string();
                } else if (op == "invert") {
                    auto inv = ctx.invert(q);
                    j["inverse"] = ctx.format(inv);
                    j["product_is_one"] = ctx.is_zero(ctx.make(q) * inv - ModElement<E>(1));
                } else {
                    auto d = ctx.immediate_description(q, depth);
                    j["depth"] = depth;
                    j["a"] = field.format(d.a);
                    j["gap"] = d.gap.to_string();
                    j["valuation"] = ctx.valuation(q).to_string();
                }
                return j;
            });
        } else if (stage_cmd->parsed()) {
            result = with_instance(cfg, [&](const auto& preset, const auto& rsyn, const auto&) {
                using Preset = std::decay_t<decltype(preset)>;
                auto stage = std::make_shared<const StageContext<Preset>>(preset, parse_polynomial(f_text, rsyn), "x1", 1);
                const auto& field = preset.field();
                json j;
                json tower = json::array();
                tower.push_back({{"depth", 1}, {"f", show_ring(preset, stage->f())},
                                 {"theta_f", show(field, stage->beta().f())}, {"w_n", stage->beta().w_n().to_string()}});
                auto ssyn = stage_syntax(*stage, rsyn);
                auto x = num_text.empty() ? stage->alpha() : stage->make(parse_polynomial(num_text, rsyn));
                if (!den_text.empty()) x = stage->make(x.num().rep(), parse_polynomial(den_text, rsyn));
                auto img = stage->theta_f(x);
                j["element"] = stage->format(x);
                j["is_unit"] = stage->is_unit(x);
                j["residue"] = stage->is_unit(x) ? stage->residue(x).get_str() : "0";
                j["theta_f"] = stage->beta().format(img.value);
                j["valuation"] = stage->beta().valuation(img.value).to_string();
                if (!t2_text.empty()) {
                    auto t2 = parse_polynomial(t2_text, ssyn);
                    auto stage2 = tower_extend(stage, t2);
                    StageRing<Preset> ring(stage);
                    tower.push_back({{"depth", 2}, {"t", show_ring(ring, t2)}, {"f", show_ring(ring, stage2.f())},
                                     {"w_n", stage2.beta().w_n().to_string()},
                                     {"theta_f_alpha2_valuation",
                                      stage2.beta().valuation(stage2.theta_f(stage2.alpha()).value).to_string()}});
                }
                j["tower"] = tower;
                return j;
            });
        } else if (decide_cmd->parsed()) {
            result = with_instance(cfg, [&](const auto& preset, const auto& rsyn, const auto&) {
                using Preset = std::decay_t<decltype(preset)>;
                using A = typename Preset::element_type;
                StageContext<Preset> ctx(preset, parse_polynomial(f_text, rsyn));
                auto q = parse_polynomial(q_text, rsyn);
                auto d = decide_kernel(ctx, q);
                std::function<std::string(const A&)> fmt = [&preset](const A& a) { return preset.format(a); };
                json j = cfg.to_json();
                j["f"] = show_ring(preset, ctx.f());
                j["q"] = show_ring(preset, q);
                j.update(decision_json(d, fmt));
                j["verified"] = verify_certificate(ctx, q, d);
                return j;
            });
            if (!result["verified"].get<bool>()) status = check_failed;
        } else if (verify_cmd->parsed()) {
            std::ifstream in(in_file);
            if (!in) throw parse_error("cannot read " + in_file);
            json cert = json::parse(in, nullptr, false);
            if (cert.is_discarded()) throw parse_error("malformed JSON in " + in_file);
            cfg = InstanceConfig::from_json(cert);
            result = with_instance(cfg, [&](const auto& preset, const auto& rsyn, const auto&) {
                using Preset = std::decay_t<decltype(preset)>;
                StageContext<Preset> ctx(preset, parse_polynomial(cert.at("f").get<std::string>(), rsyn));
                auto q = parse_polynomial(cert.at("q").get<std::string>(), rsyn);
                auto d = decision_from_json(cert, rsyn);
                return json{{"f", show_ring(preset, ctx.f())}, {"q", show_ring(preset, q)},
                            {"decision", cert.at("decision")}, {"verified", verify_certificate(ctx, q, d)}};
            });
            if (!result["verified"].get<bool>()) status = check_failed;
        } else if (lift_cmd->parsed()) {
            const unsigned n = precision.value_or(default_precision());
            result = with_instance(cfg, [&](const auto& preset, const auto&, const auto& fsyn) -> json {
                using Field = std::decay_t<decltype(preset.field())>;
                auto f = parse_polynomial(f_text, fsyn);
                CheckResult ng = check_nagata(f, valuation_ring_predicates(preset.field()));
                if (!ng.ok) throw precondition_error("not a Nagata polynomial: " + ng.diagnostics.front());
                if constexpr (std::is_same_v<Field, PadicField>) {
                    PadicCompletion comp(preset.field().prime(), n);
                    auto r = lift_hensel_zero(f, comp);
                    auto v = comp.valuation(r);
                    return {{"f", show(preset.field(), f)}, {"precision", n}, {"root", comp.format(r)},
                            {"valuation", v ? std::to_string(*v) : "inf"},
                            {"residual_zero", comp.is_zero(eval_in(comp, f, r))}};
                } else if constexpr (std::is_same_v<Field, TadicField>) {
                    if (preset.field().var() != "t") throw precondition_error("oracle lift supports padic and tadic");
                    SeriesCompletion comp(n);
                    auto r = lift_hensel_zero(f, comp);
                    auto v = comp.valuation(r);
                    return {{"f", show(preset.field(), f)}, {"precision", n}, {"root", comp.format(r)},
                            {"valuation", v ? std::to_string(*v) : "inf"},
                            {"residual_zero", comp.is_zero(eval_in(comp, f, r))}};
                } else {
                    throw precondition_error("oracle lift supports padic and tadic");
                }
            });
        } else if (roots_cmd->parsed()) {
            const unsigned n = std::min(precision.value_or(default_precision()), 40u);
            if (cfg.name != "padic") throw precondition_error("oracle roots supports the padic instance only");
            PadicField field(cfg.p);
            auto p = parse_polynomial(poly_text, rational_syntax());
            auto o = exhaustive_root_valuations(p, cfg.p, n);
            result = {{"polynomial", show(field, p)}, {"precision", n}, {"oracle_valuations", values_json(o.valuations)},
                      {"unresolved", o.unresolved}, {"polygon_valuations", values_json(root_valuations(p, field))}};
        } else if (demo_cmd->parsed()) {
            bool all = false;
            result = run_demo(seed, all);
            if (!all) status = check_failed;
        }
    } catch (const hard_fault& e) {
        err << "hard fault: " << e.what() << "\n";
        return fault;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return usage_error;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return usage_error;
    }

    if (format == "json") out << result.dump(2) << "\n";
    else print_text(result, out);
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) {
            err << "error: cannot write " << out_file << "\n";
            return usage_error;
        }
        f << result.dump(2) << "\n";
    }
    return status;
}

} // namespace henselize::cli
