/*
   Copyright 2026 the ffdp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ffdp/reduction.hpp"

using json = nlohmann::ordered_json;
using namespace ffdp;

namespace {

// ---------------------------------------------------------------------------
// shared experiment options, mirrored 1:1 by the flat key=value config file
// ---------------------------------------------------------------------------

struct Options {
    std::uint64_t q = 0;  // prime power shortcut; overrides (p, e) when set
    std::uint64_t p = 2;
    int e = 1;
    std::string M = "t";
    std::string Q;
    std::string noise = "bernoulli:0.1";
    double delta = 0.0;
    double mu = 0.01;
    std::uint64_t budget = UINT64_MAX;
    int workers = 1;
    std::uint64_t seed = 1;
    std::string out;
    std::string config;
};

// Flat key=value config: each key mirrors a long flag of the subcommand.
// Values from the file only apply to flags absent from the command line.
void apply_config(CLI::App& cmd, const std::string& path) {
    if (path.empty()) return;
    std::ifstream f(path);
    if (!f) throw Error(Errc::ParseError, "cannot read config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(Errc::ParseError,
                        "config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        CLI::Option* o = cmd.get_option_no_throw("--" + key);
        if (o == nullptr)
            throw Error(Errc::ParseError,
                        "config line " + std::to_string(lineno) + ": unknown key " + key);
        if (o->count() > 0) continue;  // command line wins
        o->add_result(value);
        o->run_callback();
    }
}

void add_common(CLI::App& cmd, Options& opt) {
    cmd.add_option("--q", opt.q, "field size as a prime power (sets p, e)");
    cmd.add_option("--p", opt.p, "field characteristic");
    cmd.add_option("--e", opt.e, "field extension degree");
    cmd.add_option("--M", opt.M, "conductor polynomial in t");
    cmd.add_option("--Q", opt.Q, "prime polynomial in t");
    cmd.add_option("--noise", opt.noise, "noise spec: bernoulli:p | weight:t | normal:p");
    cmd.add_option("--delta", opt.delta, "assumed distinguisher advantage (0 = declared)");
    cmd.add_option("--mu", opt.mu, "per-vote failure probability");
    cmd.add_option("--budget", opt.budget, "total oracle sample budget");
    cmd.add_option("--workers", opt.workers, "parallel reduction workers");
    cmd.add_option("--seed", opt.seed, "master RNG seed");
    cmd.add_option("--out", opt.out, "write the report here instead of stdout");
    cmd.add_option("--config", opt.config, "flat key=value config file; flags override it");
}

FieldPtr make_field(const Options& opt) {
    std::uint64_t p = opt.p;
    int e = opt.e;
    if (opt.q != 0) {
        std::uint64_t q = opt.q;
        if (q < 2) throw Error(Errc::InvalidParameters, "q must be at least 2");
        std::uint64_t base = 2;
        while (q % base != 0) ++base;
        p = base;
        e = 0;
        while (q > 1) {
            if (q % base != 0)
                throw Error(Errc::InvalidParameters, "q must be a prime power");
            q /= base;
            ++e;
        }
    }
    return FieldCtx::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
}

CarlitzPtr make_ring(const Options& opt, const FieldPtr& F) {
    Poly M = parse_poly(F, opt.M);
    if (M.var() != Var::T) M = parse_poly(F, opt.M);  // constants default to T already
    std::string qs = opt.Q.empty() ? "t+1" : opt.Q;
    return CarlitzRing::make(M, parse_poly(F, qs));
}

void emit(const Options& opt, const json& doc) {
    if (opt.out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream f(opt.out);
        if (!f) throw Error(Errc::ParseError, "cannot open output file: " + opt.out);
        f << doc.dump(2) << "\n";
    }
}

// pretty-printer for polynomials in X with coefficients in F_q[T]
std::string format_bipoly(const std::vector<Poly>& xcoeffs) {
    std::string out;
    for (std::size_t k = xcoeffs.size(); k-- > 0;) {
        const Poly& c = xcoeffs[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = to_string(c);
        bool needs_parens = cs.find('+') != std::string::npos;
        if (k == 0) {
            out += needs_parens ? "(" + cs + ")" : cs;
            continue;
        }
        std::string xs = k == 1 ? "x" : "x^" + std::to_string(k);
        if (cs == "1") {
            out += xs;
        } else if (needs_parens) {
            out += "(" + cs + ")*" + xs;
        } else {
            out += cs + "*" + xs;
        }
    }
    return out.empty() ? "0" : out;
}

json ring_descriptor(const CarlitzPtr& ring) {
    json comps = json::array();
    for (int i = 0; i < ring->base()->r(); ++i)
        comps.push_back(to_string(ring->base()->component(i)));
    return json{{"q", ring->base()->ctx()->q()},
                {"M", to_string(ring->conductor())},
                {"Q", to_string(ring->modulus_prime())},
                {"e", ring->e()},
                {"f", ring->f()},
                {"r", ring->r()},
                {"n", ring->n()},
                {"modulus", to_string(ring->base()->modulus())},
                {"components", comps}};
}

NoiseModel make_noise(const Options& opt, const CarlitzPtr& ring, const std::string& basis_path) {
    NoiseSpec spec = NoiseSpec::parse(opt.noise);
    if (spec.kind != NoiseSpec::Kind::Normal) return make_noise_model(ring->base(), spec);
    if (basis_path.empty())
        throw Error(Errc::InvalidParameters,
                    "normal noise needs --basis pointing at a normal-basis report");
    std::ifstream f(basis_path);
    if (!f) throw Error(Errc::ParseError, "cannot read basis file: " + basis_path);
    json doc = json::parse(f);
    Poly gen = parse_poly(ring->base()->ctx(), doc.at("generator").get<std::string>());
    auto basis = try_normal_basis(ring, gen);
    if (!basis)
        throw Error(Errc::InvalidParameters, "stored generator does not give a normal basis");
    return NoiseModel{ring->base(), spec, std::make_shared<NormalBasis>(std::move(*basis))};
}

json sample_to_json(const Sample& s) {
    return json{{"a", to_string(s.a)}, {"b", to_string(s.b)}};
}

json report_to_json(const ReductionReport& rep) {
    json per_prime = json::array();
    for (const auto& pp : rep.per_prime)
        per_prime.push_back(json{{"component", pp.component},
                                 {"residue", to_string(pp.residue)},
                                 {"galois_unit", to_string(pp.galois_unit)}});
    return json{{"recovered_secret", to_string(rep.recovered_secret)},
                {"per_prime", per_prime},
                {"i0_found", rep.i0_found},
                {"votes", rep.votes},
                {"samples_used", rep.samples_used}};
    // wall time goes to stderr: the report itself stays seed-deterministic
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_carlitz(const Options& opt, bool poly, bool cyclotomic, bool ring_flag) {
    auto F = make_field(opt);
    Poly M = parse_poly(F, opt.M);
    if (poly) {
        std::cout << format_bipoly(carlitz_poly(M).to_bipoly()) << "\n";
    } else if (cyclotomic) {
        std::cout << format_bipoly(carlitz_cyclotomic(M).coeffs()) << "\n";
    } else if (ring_flag) {
        emit(opt, ring_descriptor(make_ring(opt, F)));
    } else {
        throw Error(Errc::InvalidParameters, "pick one of --poly, --cyclotomic, --ring");
    }
    return 0;
}

int cmd_facts(const Options& opt, std::vector<std::uint64_t> qs, int max_deg) {
    if (qs.empty()) qs = {2, 3};
    json rows = json::array();
    bool all_pass = true;
    for (std::uint64_t q : qs) {
        Options fo = opt;
        fo.q = q;
        auto F = make_field(fo);
        for (int d = 1; d <= max_deg; ++d) {
            std::uint64_t count = 1;
            for (int i = 0; i < d; ++i) count *= q;
            for (std::uint64_t code = 0; code < count; ++code) {
                Poly M = Poly::from_code(F, Var::T, code) + Poly::monomial(F, Var::T, d);
                for (Fe q0 = 0; q0 < F->q(); ++q0) {
                    Poly Q(F, Var::T, {q0, 1});
                    if ((M % Q).is_zero()) continue;
                    auto pred = predict_splitting(M, Q);
                    BiPoly phi = carlitz_cyclotomic(M);
                    Poly base = phi.specialize(F, F->neg(Q.coeff(0)));
                    auto fac = factor(base);
                    bool pass = !pred.ramified && fac.squarefree() &&
                                fac.factors.size() == pred.r;
                    for (const auto& [u, mult] : fac.factors)
                        pass = pass && mult == 1 && u.deg() == static_cast<int>(pred.f);
                    all_pass = all_pass && pass;
                    rows.push_back(json{{"q", q},
                                        {"M", to_string(M)},
                                        {"Q", to_string(Q)},
                                        {"f", pred.f},
                                        {"r", pred.r},
                                        {"pass", pass}});
                }
            }
        }
    }
    emit(opt, json{{"all_pass", all_pass}, {"rows", rows}});
    return all_pass ? 0 : 2;
}

int cmd_reduce(const Options& opt, int d, const std::string& distinguisher, int queries,
               const std::string& basis_path) {
    auto F = make_field(opt);
    auto ring = make_ring(opt, F);
    const auto& base = ring->base();
    NoiseModel noise = make_noise(opt, ring, basis_path);

    ReductionConfig cfg;
    cfg.delta = opt.delta;
    cfg.mu = opt.mu;
    cfg.max_samples = opt.budget;
    cfg.parallelism = opt.workers;

    Rng rng(opt.seed);
    json doc;
    bool success = false;
    double wall_time = 0.0;
    if (d <= 1) {
        Poly secret = base->uniform(rng);
        SampleSource oracle = [&](Rng& r) { return ffdp_sample(secret, noise, r); };
        Rng cal = rng.split(0xca11b);
        DistinguisherFactory factory = [&](int boundary, const Poly& mask) {
            Rng c = cal.split(static_cast<std::uint64_t>(boundary));
            if (distinguisher == "planted")
                return planted_distinguisher(ring, base->add(secret, mask), boundary, noise,
                                             static_cast<std::uint64_t>(queries), c);
            return ml_distinguisher(ring, noise, boundary,
                                    static_cast<std::uint64_t>(queries), c);
        };
        ReductionReport rep = full_reduction(oracle, ring, noise, factory, cfg, rng);
        success = rep.recovered_secret == secret;
        doc = report_to_json(rep);
        doc["planted_secret"] = to_string(secret);
        wall_time = rep.wall_time_sec;
    } else {
        std::vector<Poly> secrets;
        for (int k = 0; k < d; ++k) secrets.push_back(base->uniform(rng));
        MSampleSource oracle = [&](Rng& r) { return mffdp_sample(secrets, noise, r); };
        Rng cal = rng.split(0xca11b);
        MDistinguisherFactory factory = [&](int boundary, const std::vector<Poly>& masks,
                                            int target) {
            std::vector<Poly> eff;
            for (std::size_t k = 0; k < secrets.size(); ++k)
                eff.push_back(base->add(secrets[k], masks[k]));
            Rng c = cal.split(static_cast<std::uint64_t>(boundary) * 64 +
                              static_cast<std::uint64_t>(target));
            return planted_m_distinguisher(ring, eff, boundary, noise,
                                           static_cast<std::uint64_t>(queries), c);
        };
        ModuleReport rep = module_reduction(oracle, ring, d, noise, factory, cfg, rng);
        success = rep.secrets == secrets;
        json per_secret = json::array(), planted = json::array(), recovered = json::array();
        for (const auto& r : rep.per_secret) per_secret.push_back(report_to_json(r));
        for (const auto& s : secrets) planted.push_back(to_string(s));
        for (const auto& s : rep.secrets) recovered.push_back(to_string(s));
        doc = json{{"recovered_secrets", recovered},
                   {"per_secret", per_secret},
                   {"samples_used", rep.samples_used}};
        doc["planted_secrets"] = planted;
        wall_time = rep.wall_time_sec;
    }
    std::cerr << "wall_time_sec: " << wall_time << "\n";
    doc["seed"] = opt.seed;
    doc["noise"] = NoiseSpec::parse(opt.noise).to_string();
    doc["success"] = success;
    emit(opt, doc);
    return success ? 0 : 2;
}

int cmd_normal_basis(const Options& opt, int trials) {
    auto F = make_field(opt);
    auto ring = make_ring(opt, F);
    Rng rng(opt.seed);
    NormalBasis basis = find_normal_basis(ring, rng);
    Rational predicted = normal_basis_probability(F, ring->n());
    int hits = 0;
    for (int i = 0; i < trials; ++i) {
        Poly x = ring->base()->uniform(rng);
        if (try_normal_basis(ring, x)) ++hits;
    }
    emit(opt, json{{"generator", to_string(basis.generator)},
                   {"tries", basis.tries},
                   {"invertible", true},
                   {"predicted_probability",
                    json{{"num", predicted.num}, {"den", predicted.den},
                         {"value", predicted.value()}}},
                   {"empirical_probability", static_cast<double>(hits) / trials},
                   {"trials", trials}});
    return 0;
}

int cmd_sample(const Options& opt, std::uint64_t count, int d, const std::string& basis_path) {
    auto F = make_field(opt);
    auto ring = make_ring(opt, F);
    const auto& base = ring->base();
    NoiseModel noise = make_noise(opt, ring, basis_path);
    Rng rng(opt.seed);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!opt.out.empty()) {
        file.open(opt.out);
        if (!file) throw Error(Errc::ParseError, "cannot open output file: " + opt.out);
        os = &file;
    }
    if (d <= 1) {
        Poly secret = base->uniform(rng);
        for (std::uint64_t i = 0; i < count; ++i)
            *os << sample_to_json(ffdp_sample(secret, noise, rng)).dump() << "\n";
    } else {
        std::vector<Poly> secrets;
        for (int k = 0; k < d; ++k) secrets.push_back(base->uniform(rng));
        for (std::uint64_t i = 0; i < count; ++i) {
            MSample s = mffdp_sample(secrets, noise, rng);
            json as = json::array();
            for (const auto& ai : s.a) as.push_back(to_string(ai));
            *os << json{{"a", as}, {"b", to_string(s.b)}}.dump() << "\n";
        }
    }
    return 0;
}

int cmd_advantage(const Options& opt, int boundary, int queries, int trials,
                  const std::string& distinguisher, const std::string& basis_path) {
    auto F = make_field(opt);
    auto ring = make_ring(opt, F);
    const auto& base = ring->base();
    NoiseModel noise = make_noise(opt, ring, basis_path);
    Rng rng(opt.seed);
    Poly secret = base->uniform(rng);
    SampleSource oracle = [&](Rng& r) { return ffdp_sample(secret, noise, r); };
    Rng cal = rng.split(0xca11b);
    Distinguisher dist =
        distinguisher == "planted"
            ? planted_distinguisher(ring, secret, boundary, noise,
                                    static_cast<std::uint64_t>(queries), cal)
            : ml_distinguisher(ring, noise, boundary, static_cast<std::uint64_t>(queries),
                               cal);
    SampleSource structured = [&](Rng& r) {
        return hybridize(*base, oracle(r), boundary, r);
    };
    SampleSource uniformized = [&](Rng& r) {
        return hybridize(*base, oracle(r), boundary + 1, r);
    };
    AdvantageEstimate est = estimate_advantage(dist, uniformized, structured, trials, rng);
    emit(opt, json{{"advantage", est.advantage},
                   {"lo", est.lo},
                   {"hi", est.hi},
                   {"declared", dist.declared_advantage()},
                   {"boundary", boundary},
                   {"trials", trials}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Carlitz-module residue rings and the FF-DP search-to-decision reduction"};
    app.require_subcommand(1);

    Options opt;
    bool flag_poly = false, flag_cyclo = false, flag_ring = false;
    std::vector<std::uint64_t> facts_q;
    int facts_max_deg = 3;
    int d = 1, queries = 30, nb_trials = 10000, adv_boundary = 0, adv_trials = 400;
    std::uint64_t count = 10;
    std::string distinguisher = "ml", basis_path;

    auto* carlitz = app.add_subcommand("carlitz", "print [M](X), Phi_M, or a ring descriptor");
    add_common(*carlitz, opt);
    carlitz->add_flag("--poly", flag_poly, "print the Carlitz polynomial [M](X)");
    carlitz->add_flag("--cyclotomic", flag_cyclo, "print the cyclotomic polynomial Phi_M");
    carlitz->add_flag("--ring", flag_ring, "print the full ring descriptor as JSON");

    auto* facts = app.add_subcommand("facts", "splitting-prediction sweep vs factorization");
    add_common(*facts, opt);
    facts->add_option("--sweep-q", facts_q, "field sizes to sweep (default 2 3)");
    facts->add_option("--max-deg", facts_max_deg, "max conductor degree");

    auto* reduce = app.add_subcommand("reduce", "plant a secret and run the full reduction");
    add_common(*reduce, opt);
    reduce->add_option("--d", d, "module rank (1 = plain FF-DP)");
    reduce->add_option("--distinguisher", distinguisher, "ml | planted");
    reduce->add_option("--queries", queries, "samples consumed per distinguisher vote");
    reduce->add_option("--basis", basis_path, "normal-basis report (for normal noise)");

    auto* nb = app.add_subcommand("normal-basis", "find a generator, compare the probability");
    add_common(*nb, opt);
    nb->add_option("--trials", nb_trials, "Monte-Carlo trials for the empirical rate");

    auto* sample = app.add_subcommand("sample", "emit FF-DP samples as JSON lines");
    add_common(*sample, opt);
    sample->add_option("--count", count, "number of samples");
    sample->add_option("--d", d, "module rank (1 = plain FF-DP)");
    sample->add_option("--basis", basis_path, "normal-basis report (for normal noise)");

    auto* adv = app.add_subcommand("advantage", "estimate a distinguisher's advantage");
    add_common(*adv, opt);
    adv->add_option("--boundary", adv_boundary, "hybrid boundary index");
    adv->add_option("--queries", queries, "samples consumed per vote");
    adv->add_option("--trials", adv_trials, "votes per stream");
    adv->add_option("--distinguisher", distinguisher, "ml | planted");
    adv->add_option("--basis", basis_path, "normal-basis report (for normal noise)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        for (CLI::App* sub : {carlitz, facts, reduce, nb, sample, adv})
            if (sub->parsed()) apply_config(*sub, opt.config);
        if (carlitz->parsed()) return cmd_carlitz(opt, flag_poly, flag_cyclo, flag_ring);
        if (facts->parsed()) return cmd_facts(opt, facts_q, facts_max_deg);
        if (reduce->parsed()) return cmd_reduce(opt, d, distinguisher, queries, basis_path);
        if (nb->parsed()) return cmd_normal_basis(opt, nb_trials);
        if (sample->parsed()) return cmd_sample(opt, count, d, basis_path);
        if (adv->parsed())
            return cmd_advantage(opt, adv_boundary, queries, adv_trials, distinguisher,
                                 basis_path);
    } catch (const Error& e) {
        std::cerr << json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump()
                  << "\n";
        return (e.code() == Errc::ParseError || e.code() == Errc::InvalidParameters) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "Unexpected"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    return 1;
}
