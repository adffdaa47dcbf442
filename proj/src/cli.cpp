#include "semcom/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "semcom/core.hpp"
#include "semcom/csed.hpp"
#include "semcom/io.hpp"
#include "semcom/oracle.hpp"

namespace semcom {

namespace {

std::string fmt(const Rational& r) { return r.str() + " (" + r.decimal(4) + ")"; }

TieBreak parse_tie_break(const std::string& text) {
    if (text == "lexicographic") return TieBreak::lexicographic();
    if (text.rfind("seeded:", 0) == 0) {
        return TieBreak::seeded(std::stoull(text.substr(7)));
    }
    throw CLI::ValidationError(
        "--tie-break", "expected 'lexicographic' or 'seeded:<n>', got '" + text + "'");
}

void print_frontier(const RegionFrontier& f, const SemanticLanguage& lang,
                    std::ostream& out) {
    auto chain = [&](const std::vector<FrontierPoint>& pts, const char* name) {
        out << name << " boundary (" << pts.size() << " schemes):\n";
        for (std::size_t t = 0; t < pts.size(); ++t) {
            out << "  t=" << t << "  " << encoder_label(pts[t].encoder, lang)
                << "  L=" << fmt(pts[t].cost) << "  D=" << fmt(pts[t].distortion)
                << "\n";
        }
    };
    chain(f.lower, "lower");
    chain(f.upper, "upper");
}

void print_decoder(const DecodingScheme& v, const SemanticLanguage& lang,
                   std::ostream& out) {
    for (int s = 0; s < lang.num_messages(); ++s) {
        out << "  " << lang.messages[s] << " -> ";
        if (v.deterministic) {
            out << lang.meanings[(*v.deterministic)[s]];
        } else {
            bool first = true;
            for (int w = 0; w < lang.num_meanings(); ++w) {
                const Rational& p = v.matrix.at(s, w);
                if (p.is_zero()) continue;
                if (!first) out << ", ";
                out << lang.meanings[w] << ":" << p.str();
                first = false;
            }
        }
        out << "\n";
    }
}

int run_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    try {
        Model model = load_model(path);
        out << "OK: " << model.language.num_meanings() << " meanings, "
            << model.language.num_messages() << " messages\n";
        return 0;
    } catch (const SpecValidationError& e) {
        for (const auto& issue : e.issues) err << "invalid: " << issue << "\n";
        return 1;
    }
}

struct RegionOptions {
    std::string kind;
    std::string path;
    std::string tie_text = "lexicographic";
    std::string csv_path;
};

int run_region(const RegionOptions& opt, std::ostream& out) {
    Model model = load_model(opt.path);
    TieBreak tie = parse_tie_break(opt.tie_text);
    const auto& lang = model.language;

    std::string csv;
    if (opt.kind == "enc") {
        RegionFrontier f = build_frontier(lang, model.channel, model.distortion,
                                          model.cost, tie);
        out << "distortion-cost region of semantic encoding (tie-break: "
            << tie.describe() << ")\n";
        print_frontier(f, lang, out);
        csv = frontier_csv(f, lang);
    } else if (opt.kind == "dec") {
        DecodingRegion r =
            decoding_region(lang, model.channel, model.distortion, model.cost);
        out << "distortion-cost region of semantic decoding\n";
        out << "  L = " << fmt(r.cost) << " (fixed by the expression)\n";
        out << "  D in [" << fmt(r.d_min) << ", " << fmt(r.d_max) << "]\n";
        csv = decoding_csv(r);
    } else {
        CsedRegion r = csed_region(lang, model.channel, model.distortion,
                                   model.cost, tie);
        out << "distortion-cost region of combined encoding/decoding "
            << "(tie-break: " << tie.describe() << ")\n";
        out << "generator points (frontier encoders re-decoded by MAP under "
               "the receiver prior):\n";
        for (const auto& g : r.generators)
            out << "  " << g.provenance << "  L=" << fmt(g.cost)
                << "  D=" << fmt(g.distortion) << "\n";
        auto chain = [&](const std::vector<Point2>& pts, const char* name) {
            out << name << " hull chain:\n";
            for (const auto& p : pts)
                out << "  (" << fmt(p.x) << ", " << fmt(p.y) << ")\n";
        };
        chain(r.lower, "lower");
        chain(r.upper, "upper");
        csv = csed_csv(r);
    }
    if (!opt.csv_path.empty()) {
        write_file(opt.csv_path, csv);
        out << "wrote " << opt.csv_path << "\n";
    }
    return 0;
}

int run_decode(const std::string& path, const std::string& prior_text,
               bool refine, std::ostream& out) {
    Model model = load_model(path);
    const auto& lang = model.language;
    PriorChoice prior = prior_text == "tx" ? PriorChoice::transmitter
                                           : PriorChoice::receiver;
    DecodingScheme v =
        map_decoder(lang, model.channel, model.distortion, prior);
    out << "MAP decoder under the " << (prior == PriorChoice::transmitter
                                            ? "transmitter"
                                            : "receiver")
        << " prior:\n";
    print_decoder(v, lang, out);
    out << "distortion: "
        << fmt(decoder_distortion(v, lang, model.channel, model.distortion))
        << "\n";
    DecodingScheme q{lang.interpretation, std::nullopt};
    out << "language interpretation distortion: "
        << fmt(decoder_distortion(q, lang, model.channel, model.distortion))
        << "\n";
    if (refine) {
        DecodingScheme r =
            refine_interpretation(lang, model.channel, model.distortion);
        out << "refined interpretation:\n";
        print_decoder(r, lang, out);
        out << "refined distortion: "
            << fmt(decoder_distortion(r, lang, model.channel, model.distortion))
            << "\n";
    }
    return 0;
}

int run_check(const std::string& what, const std::string& path,
              std::ostream& out) {
    Model model = load_model(path);
    const auto& lang = model.language;
    if (what == "self-consistency") {
        SelfConsistencyReport rep = is_self_consistent(lang);
        out << "logically self-consistent: " << (rep.consistent ? "yes" : "no")
            << "\n";
        if (rep.counterexample) {
            out << "counterexample: meaning "
                << lang.meanings[rep.counterexample->first] << ", message "
                << lang.messages[rep.counterexample->second] << "\n";
        }
        for (int s : rep.vacuous_messages)
            out << "vacuous (never transmitted): " << lang.messages[s] << "\n";
    } else if (what == "hamming-opt") {
        HammingOptimalityReport rep =
            hamming_optimality_check(lang, model.channel, model.distortion);
        out << "receiver-prior decoding attains the optimum: "
            << (rep.ok ? "yes" : "no") << "\n";
        for (const auto& e : rep.entries) {
            if (e.contained) continue;
            out << "violated at " << lang.messages[e.message] << ": rx {";
            for (std::size_t i = 0; i < e.rx_argmax.size(); ++i)
                out << (i ? "," : "") << lang.meanings[e.rx_argmax[i]];
            out << "} vs tx {";
            for (std::size_t i = 0; i < e.tx_argmax.size(); ++i)
                out << (i ? "," : "") << lang.meanings[e.tx_argmax[i]];
            out << "}\n";
        }
    } else {  // theorem4
        RegionFrontier f = build_frontier(lang, model.channel, model.distortion,
                                          model.cost);
        Theorem4Report rep =
            check_theorem4(lang, model.channel, model.distortion, f);
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        out << "hypothesis error-free channel:   " << yn(rep.error_free_channel) << "\n";
        out << "hypothesis symmetric distortion: " << yn(rep.symmetric_distortion) << "\n";
        out << "condition 1 matched prior:       " << yn(rep.matched_prior) << "\n";
        out << "condition 2 self-consistency:    " << yn(rep.self_consistent) << "\n";
        out << "condition 3 distinct best messages:   " << yn(rep.phi_argmin_disjoint) << "\n";
        out << "condition 4 distinct decoded meanings: " << yn(rep.psi_argmin_disjoint) << "\n";
        out << "verdict: " << (rep.verdict ? "combined operation is globally optimal"
                                           : "conditions not met") << "\n";
        for (const auto& note : rep.notes) out << "  " << note << "\n";
    }
    return 0;
}

int run_compare(const std::string& path, const std::string& tie_text,
                std::ostream& out) {
    Model model = load_model(path);
    const auto& lang = model.language;
    StrategyComparison cmp =
        compare_strategies(lang, model.channel, model.distortion, model.cost,
                           parse_tie_break(tie_text));
    out << "encoding frontier:\n";
    print_frontier(cmp.frontier, lang, out);
    out << "decoding: L = " << fmt(cmp.decoding.cost) << ", D in ["
        << fmt(cmp.decoding.d_min) << ", " << fmt(cmp.decoding.d_max) << "]\n";
    out << "  interpretation as decoder: D = " << fmt(cmp.interpretation_distortion)
        << "\n";
    out << "  MAP under receiver prior:  D = " << fmt(cmp.map_rx_distortion) << "\n";
    out << "combined region lower chain:\n";
    for (const auto& p : cmp.csed.lower)
        out << "  (" << fmt(p.x) << ", " << fmt(p.y) << ")\n";
    out << "encoding floor: " << cmp.encoding_floor.provenance << " at L="
        << fmt(cmp.encoding_floor.cost) << ", D=" << fmt(cmp.encoding_floor.distortion)
        << "\n";
    out << "same encoder re-decoded by the receiver: D="
        << fmt(cmp.csed_at_floor.distortion) << "\n";
    if (cmp.csed_beats_both) {
        out << "combined operation beats both pure strategies\n";
    } else if (cmp.csed_worse_than_both) {
        out << "combined operation is worse than either pure strategy\n";
    } else {
        out << "combined operation matches the better pure strategy\n";
    }
    return 0;
}

int run_oracle(const std::string& what, const std::string& path,
               std::uint64_t budget_n, std::ostream& out) {
    Model model = load_model(path);
    const auto& lang = model.language;
    EnumerationBudget budget;
    if (budget_n > 0) {
        budget.max_encoders = budget_n;
        budget.max_decoders = budget_n;
    }
    if (what == "frontier") {
        auto pts = enumerate_encoding_points(lang, model.channel,
                                             model.distortion, model.cost, budget);
        std::vector<Point2> xy;
        for (const auto& p : pts) xy.push_back({p.cost, p.distortion});
        auto lo = lower_hull(xy);
        auto hi = upper_hull(xy);
        out << pts.size() << " deterministic encoders\n";
        RegionFrontier f = build_frontier(lang, model.channel, model.distortion,
                                          model.cost);
        bool agree = lo == normalize_chain(f.lower_points()) &&
                     hi == normalize_chain(f.upper_points());
        out << "greedy frontier matches exhaustive hull: "
            << (agree ? "yes" : "NO") << "\n";
        out << "lower envelope vertices:\n";
        for (const auto& p : lo)
            out << "  (" << fmt(p.x) << ", " << fmt(p.y) << ")\n";
        out << "upper envelope vertices:\n";
        for (const auto& p : hi)
            out << "  (" << fmt(p.x) << ", " << fmt(p.y) << ")\n";
        return agree ? 0 : 1;
    }
    if (what == "decoders") {
        auto decs =
            enumerate_decoders(lang, model.channel, model.distortion, budget);
        Rational lo = decs.front().distortion, hi = decs.front().distortion;
        for (const auto& d : decs) {
            if (d.distortion < lo) lo = d.distortion;
            if (d.distortion > hi) hi = d.distortion;
        }
        DecodingRegion region =
            decoding_region(lang, model.channel, model.distortion, model.cost);
        out << decs.size() << " deterministic decoders\n";
        out << "exhaustive D range: [" << fmt(lo) << ", " << fmt(hi) << "]\n";
        bool agree = lo == region.d_min && hi == region.d_max;
        out << "matches the analytic extremes: " << (agree ? "yes" : "NO") << "\n";
        return agree ? 0 : 1;
    }
    GlobalOptimum opt = global_optimum(lang, model.channel, model.distortion,
                                       model.cost, budget);
    out << opt.points.size()
        << " encoders, each paired with its jointly optimal decoder\n";
    out << "global lower envelope:\n";
    for (const auto& p : opt.envelope)
        out << "  (" << fmt(p.x) << ", " << fmt(p.y) << ")\n";
    return 0;
}

struct SimulateOptions {
    std::string path;
    std::string scheme = "language";
    std::string decoder = "q";
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

int run_simulate(const SimulateOptions& opt, std::ostream& out) {
    Model model = load_model(opt.path);
    const auto& lang = model.language;

    SimulationConfig config;
    config.trials = opt.trials;
    config.seed = opt.seed;

    std::optional<Rational> exact_d, exact_l;
    if (opt.scheme != "language") {
        auto colon = opt.scheme.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--scheme",
                                       "expected 'language', 'lower:<t>' or 'upper:<t>'");
        std::string chain = opt.scheme.substr(0, colon);
        if (chain != "lower" && chain != "upper")
            throw CLI::ValidationError("--scheme", "unknown chain '" + chain + "'");
        std::size_t t = std::stoul(opt.scheme.substr(colon + 1));
        RegionFrontier f = build_frontier(lang, model.channel, model.distortion,
                                          model.cost);
        const auto& pts = chain == "lower" ? f.lower : f.upper;
        if (t >= pts.size())
            throw CLI::ValidationError(
                "--scheme", "index " + std::to_string(t) + " out of range (chain has " +
                                std::to_string(pts.size()) + " schemes)");
        config.encoder = EncodingScheme::from_indices(pts[t].encoder,
                                                      lang.num_messages());
        exact_l = pts[t].cost;
        if (opt.decoder == "q") exact_d = pts[t].distortion;
        out << "scheme " << opt.scheme << " = "
            << encoder_label(pts[t].encoder, lang) << "\n";
    } else {
        exact_l = expression_cost(lang, model.cost);
        if (opt.decoder == "q") {
            DecodingScheme q{lang.interpretation, std::nullopt};
            exact_d = decoder_distortion(q, lang, model.channel, model.distortion);
        }
    }

    if (opt.decoder == "map-tx") {
        config.decoder = map_decoder(lang, model.channel, model.distortion,
                                     PriorChoice::transmitter);
    } else if (opt.decoder == "map-rx") {
        config.decoder = map_decoder(lang, model.channel, model.distortion,
                                     PriorChoice::receiver);
    } else if (opt.decoder == "refined") {
        config.decoder =
            refine_interpretation(lang, model.channel, model.distortion);
    } else if (opt.decoder != "q") {
        throw CLI::ValidationError("--decoder",
                                   "expected q, map-tx, map-rx or refined");
    }

    SimulationResult res =
        simulate(config, lang, model.channel, model.distortion, model.cost);
    out << res.trials << " trials, seed " << opt.seed << "\n";
    out << "empirical cost:       " << fmt(res.mean_cost) << "  se "
        << res.se_cost << "\n";
    out << "empirical distortion: " << fmt(res.mean_distortion) << "  se "
        << res.se_distortion << "\n";
    if (exact_l) out << "exact cost:       " << fmt(*exact_l) << "\n";
    if (exact_d) out << "exact distortion: " << fmt(*exact_d) << "\n";
    out << "received message frequencies:\n";
    for (int s = 0; s < lang.num_messages(); ++s) {
        if (res.received_counts[s] == 0) continue;
        out << "  " << lang.messages[s] << ": " << res.received_counts[s] << "\n";
    }
    return 0;
}

int run_example(const std::string& which, const std::string& out_path,
                std::ostream& out) {
    Model model = which == "gridworld" ? generate_gridworld() : generate_nodshake();
    std::string text = serialize_model(model);
    if (out_path.empty()) {
        out << text;
    } else {
        write_file(out_path, text);
        out << "wrote " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact distortion-cost analysis of semantic encoding, "
                 "decoding and their combination"};
    app.require_subcommand(1);
    int rc = 0;
    std::function<void()> action;

    auto* validate = app.add_subcommand("validate", "check a model file");
    auto validate_path = std::make_shared<std::string>();
    validate->add_option("spec", *validate_path, "model file")->required();
    validate->callback([&rc, validate_path, &out, &err] {
        rc = run_validate(*validate_path, out, err);
    });

    auto* region = app.add_subcommand("region", "compute a distortion-cost region");
    auto region_opt = std::make_shared<RegionOptions>();
    region->add_option("kind", region_opt->kind, "enc, dec or csed")
        ->required()
        ->check(CLI::IsMember({"enc", "dec", "csed"}));
    region->add_option("spec", region_opt->path, "model file")->required();
    region->add_option("--tie-break", region_opt->tie_text,
                       "lexicographic or seeded:<n>");
    region->add_option("--csv", region_opt->csv_path, "write vertices as CSV");
    region->callback([&rc, region_opt, &out] { rc = run_region(*region_opt, out); });

    auto* decode = app.add_subcommand("decode", "derive the MAP decoder");
    auto decode_path = std::make_shared<std::string>();
    auto decode_prior = std::make_shared<std::string>("rx");
    auto decode_refine = std::make_shared<bool>(false);
    decode->add_option("spec", *decode_path, "model file")->required();
    decode->add_option("--prior", *decode_prior, "tx or rx")
        ->check(CLI::IsMember({"tx", "rx"}));
    decode->add_flag("--refine", *decode_refine, "also refine the interpretation");
    decode->callback([&rc, decode_path, decode_prior, decode_refine, &out] {
        rc = run_decode(*decode_path, *decode_prior, *decode_refine, out);
    });

    auto* check = app.add_subcommand("check", "run a structural check");
    auto check_what = std::make_shared<std::string>();
    auto check_path = std::make_shared<std::string>();
    check->add_option("what", *check_what, "self-consistency, hamming-opt or theorem4")
        ->required()
        ->check(CLI::IsMember({"self-consistency", "hamming-opt", "theorem4"}));
    check->add_option("spec", *check_path, "model file")->required();
    check->callback([&rc, check_what, check_path, &out] {
        rc = run_check(*check_what, *check_path, out);
    });

    auto* compare = app.add_subcommand("compare", "compare the three strategies");
    auto compare_path = std::make_shared<std::string>();
    auto compare_tie = std::make_shared<std::string>("lexicographic");
    compare->add_option("spec", *compare_path, "model file")->required();
    compare->add_option("--tie-break", *compare_tie, "lexicographic or seeded:<n>");
    compare->callback([&rc, compare_path, compare_tie, &out] {
        rc = run_compare(*compare_path, *compare_tie, out);
    });

    auto* oracle = app.add_subcommand("oracle", "exhaustive verification");
    auto oracle_what = std::make_shared<std::string>();
    auto oracle_path = std::make_shared<std::string>();
    auto oracle_budget = std::make_shared<std::uint64_t>(0);
    oracle->add_option("what", *oracle_what, "frontier, decoders or global")
        ->required()
        ->check(CLI::IsMember({"frontier", "decoders", "global"}));
    oracle->add_option("spec", *oracle_path, "model file")->required();
    oracle->add_option("--budget", *oracle_budget, "enumeration budget");
    oracle->callback([&rc, oracle_what, oracle_path, oracle_budget, &out] {
        rc = run_oracle(*oracle_what, *oracle_path, *oracle_budget, out);
    });

    auto* simulate_cmd = app.add_subcommand("simulate", "one-shot transmission trials");
    auto sim_opt = std::make_shared<SimulateOptions>();
    simulate_cmd->add_option("spec", sim_opt->path, "model file")->required();
    simulate_cmd->add_option("--scheme", sim_opt->scheme,
                             "language, lower:<t> or upper:<t>")->required();
    simulate_cmd->add_option("--decoder", sim_opt->decoder,
                             "q, map-tx, map-rx or refined");
    simulate_cmd->add_option("--trials", sim_opt->trials, "trial count")->required();
    simulate_cmd->add_option("--seed", sim_opt->seed, "RNG seed")->required();
    simulate_cmd->callback([&rc, sim_opt, &out] { rc = run_simulate(*sim_opt, out); });

    auto* example = app.add_subcommand("example", "emit a built-in model");
    auto example_which = std::make_shared<std::string>();
    auto example_out = std::make_shared<std::string>();
    example->add_option("which", *example_which, "gridworld or nodshake")
        ->required()
        ->check(CLI::IsMember({"gridworld", "nodshake"}));
    example->add_option("--out", *example_out, "output path (default: stdout)");
    example->callback([&rc, example_which, example_out, &out] {
        rc = run_example(*example_which, *example_out, out);
    });

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());  // CLI11 consumes reversed args
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "run with --help for the command list\n";
        return 2;
    } catch (const SpecParseError& e) {
        err << "parse error";
        if (e.line > 0) err << " at line " << e.line << ", column " << e.col;
        err << ": " << e.what() << "\n";
        return 1;
    } catch (const SpecValidationError& e) {
        for (const auto& issue : e.issues) err << "invalid: " << issue << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace semcom
