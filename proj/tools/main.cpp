#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "ccodes/acceptance.hpp"
#include "ccodes/explore.hpp"

namespace {

using namespace ccodes;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;

struct GlobalOpts {
    std::string format = "table";
    std::uint64_t seed = 1;
    int threads = 0;  // 0: CCODES_THREADS or 1

    bool json() const { return format == "json"; }
    SearchConfig config() const {
        SearchConfig cfg;
        cfg.seed = seed;
        cfg.threads = threads;
        return cfg;
    }
};

void emit(const GlobalOpts& g, const nlohmann::ordered_json& j,
          const std::string& table_text) {
    if (g.json())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table_text;
}

std::string kind_name(SlidingKind k) {
    switch (k) {
        case SlidingKind::FullSize: return "full_window";
        case SlidingKind::GenTranspose: return "generator_window";
        case SlidingKind::ReverseWindow: return "reverse_window";
        case SlidingKind::PartialWindow: return "partial_window";
    }
    return "?";
}

std::string verdict_table(const std::string& mode, const MinorVerdict& v) {
    std::ostringstream os;
    os << "mode:     " << mode << "\n";
    os << "verdict:  " << (v.holds ? "true" : "false") << "\n";
    os << "checked:  " << kind_name(v.checked) << "\n";
    if (v.structural) os << "structural: yes\n";
    if (!v.note.empty()) os << "note:     " << v.note << "\n";
    if (v.witness) {
        os << "witness columns:";
        for (int c : *v.witness) os << " " << c;
        os << "\n";
    }
    return os.str();
}

nlohmann::ordered_json verdict_json(const std::string& mode, const MinorVerdict& v) {
    nlohmann::ordered_json j;
    j["mode"] = mode;
    j["verdict"] = v.holds;
    j["checked"] = kind_name(v.checked);
    j["structural"] = v.structural;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.witness) j["witness"] = *v.witness;
    return j;
}

int run_check(const GlobalOpts& g, const std::string& file, const std::string& mode) {
    std::optional<ParityCheck> h;
    std::optional<Generator> gen;
    load_code_file(file, h, gen);
    MinorVerdict v;
    if (mode == "mdp") {
        v = h ? is_mdp(*h) : is_mdp(*gen);
    } else if (mode == "reverse") {
        v = h ? is_reverse_mdp(*h) : is_reverse_mdp(*gen);
    } else {
        if (!h) throw std::invalid_argument(
            "the complete verdict is defined on the parity-check form; supply a parity_check file");
        v = is_complete_mdp(*h);
    }
    emit(g, verdict_json(mode, v), verdict_table(mode, v));
    return v.holds ? kExitTrue : kExitFalse;
}

int run_bounds(const GlobalOpts& g, const CodeParams& p, bool comparison_style) {
    BoundsReport rep = compare_bounds(p);
    std::ostringstream os;
    os << render_table(rep);
    if (comparison_style && !rep.best_sufficient.empty())
        os << "best sufficient bound: " << rep.best_sufficient << "\n";
    emit(g, to_json(rep), os.str());
    return kExitTrue;
}

int run_count(const GlobalOpts& g, const CodeParams& p, std::uint64_t q, CodeProperty prop) {
    EnumerationResult e = enumerate_and_count(p, q, g.config());
    std::uint64_t headline = 0;
    switch (prop) {
        case CodeProperty::Mdp: headline = e.mdp_codes; break;
        case CodeProperty::ReverseMdp: headline = e.reverse_codes; break;
        case CodeProperty::CompleteMdp: headline = e.complete_codes; break;
    }
    std::ostringstream os;
    os << "parameters:        (" << p.n << "," << p.k << "," << p.delta << ") over GF(" << q
       << ")\n";
    os << "total matrices:    " << e.total_matrices << "\n";
    os << "noncatastrophic:   " << e.noncatastrophic_matrices << "\n";
    os << "mdp:               " << e.mdp_matrices << " matrices, " << e.mdp_codes << " codes\n";
    os << "reverse:           " << e.reverse_matrices << " matrices, " << e.reverse_codes
       << " codes\n";
    os << "complete:          " << e.complete_matrices << " matrices, " << e.complete_codes
       << " codes\n";
    os << property_name(prop) << " codes: " << headline << "\n";
    emit(g, to_json(e), os.str());
    return headline > 0 ? kExitTrue : kExitFalse;
}

int run_search(const GlobalOpts& g, const CodeParams& p, std::uint64_t q,
               const std::string& strategy, CodeProperty prop, std::uint64_t max_tries,
               const std::string& out_file) {
    SearchConfig cfg = g.config();
    cfg.max_tries = max_tries;
    if (strategy == "random") {
        RandomSearchResult r = random_search(p, q, prop, cfg);
        std::ostringstream os;
        os << "strategy: random\n"
           << "found:    " << (r.found ? "true" : "false") << "\n"
           << "tries:    " << r.tries << "\n";
        if (r.found) os << "index:    " << r.found_index << "\n";
        emit(g, to_json(r), os.str());
        if (r.found && !out_file.empty()) save_code_file(out_file, to_json(*r.witness));
        return r.found ? kExitTrue : kExitFalse;
    }
    if (strategy == "greedy") {
        GreedyResult r = greedy_construct(p, q, cfg);
        std::ostringstream os;
        os << "strategy:    greedy\n"
           << "success:     " << (r.success ? "true" : "false") << "\n"
           << "backtracks:  " << r.backtracks << "\n"
           << "worst entry: " << r.exclusions_worst_entry << " exclusions\n";
        if (r.dual_realization) os << "dual form:   yes\n";
        if (!r.message.empty()) os << "message:     " << r.message << "\n";
        emit(g, to_json(r), os.str());
        if (r.success && !out_file.empty()) save_code_file(out_file, to_json(*r.parity));
        return r.success ? kExitTrue : kExitFalse;
    }
    if (strategy == "exhaustive") {
        EnumerationResult e = enumerate_and_count(p, q, cfg);
        std::uint64_t count = 0;
        switch (prop) {
            case CodeProperty::Mdp: count = e.mdp_matrices; break;
            case CodeProperty::ReverseMdp: count = e.reverse_matrices; break;
            case CodeProperty::CompleteMdp: count = e.complete_matrices; break;
        }
        std::ostringstream os;
        os << "strategy: exhaustive\n"
           << property_name(prop) << " matrices: " << count << "\n";
        emit(g, to_json(e), os.str());
        if (count > 0 && prop == CodeProperty::Mdp && e.first_mdp_witness && !out_file.empty())
            save_code_file(out_file, *e.first_mdp_witness);
        return count > 0 ? kExitTrue : kExitFalse;
    }
    throw std::invalid_argument("unknown strategy: " + strategy);
}

int run_probability(const GlobalOpts& g, const CodeParams& p, std::uint64_t q, CodeProperty prop,
                    std::uint64_t samples) {
    ProbabilityEstimate e = estimate_probability(p, q, prop, samples, g.config());
    std::ostringstream os;
    os << "parameters:     (" << p.n << "," << p.k << "," << p.delta << ") over GF(" << q << ")\n";
    os << "property:       " << property_name(prop) << "\n";
    os << "mode:           " << (e.exhaustive ? "exhaustive" : "monte carlo") << "\n";
    os << "samples:        " << e.samples << "\n";
    os << "unconditional:  " << e.unconditional << "\n";
    os << "conditional:    " << e.conditional << "\n";
    if (e.exact_unconditional)
        os << "exact:          " << e.exact_unconditional->str() << " (conditional "
           << e.exact_conditional->str() << ")\n";
    for (const auto& lb : e.lower_bounds)
        os << "lower bound (" << lb.source << "): " << static_cast<double>(lb.unconditional)
           << (lb.applicable ? "" : " [not applicable at this field size]") << "\n";
    emit(g, to_json(e), os.str());
    return kExitTrue;
}

int run_superregular(const GlobalOpts& g, int gamma, std::uint64_t q, bool min_field) {
    SuperregularSearchResult r =
        min_field ? superregular_min_field(gamma) : superregular_search(gamma, q);
    std::ostringstream os;
    os << "gamma:  " << r.gamma << "\n"
       << "found:  " << (r.found ? "true" : "false") << "\n"
       << "field:  " << r.q << (min_field && r.found ? " (minimal)" : "") << "\n";
    if (r.found) {
        os << "witness:";
        for (Fel v : r.witness) os << " " << v;
        os << "\n";
    }
    emit(g, to_json(r), os.str());
    return r.found ? kExitTrue : kExitFalse;
}

int run_repro() {
    std::vector<CriterionResult> results = run_acceptance(std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
    return all ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field convolutional code toolkit: verdicts, bounds, search, counting"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads (0: CCODES_THREADS or 1)")
        ->capture_default_str();

    int n = 0, k = 0, delta = 0, gamma = 0;
    std::uint64_t q = 0, samples = 0, max_tries = 100'000;
    std::string file, mode = "mdp", strategy = "random", prop_name = "mdp", out_file;
    bool min_field = false;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "code length")->required();
        cmd->add_option("--k", k, "code dimension")->required();
        cmd->add_option("--delta", delta, "code degree")->required();
    };
    const std::map<std::string, CodeProperty> prop_map = {
        {"mdp", CodeProperty::Mdp},
        {"reverse", CodeProperty::ReverseMdp},
        {"complete", CodeProperty::CompleteMdp}};

    CLI::App* c_check = app.add_subcommand("check", "verify a matrix file");
    c_check->add_option("--file", file, "matrix JSON file")->required();
    c_check->add_option("--mode", mode, "property to verify")
        ->check(CLI::IsMember({"mdp", "reverse", "complete"}));

    CLI::App* c_bounds = app.add_subcommand("bounds", "field-size bounds report");
    add_params(c_bounds);

    CLI::App* c_search = app.add_subcommand("search", "find a code with the property");
    add_params(c_search);
    c_search->add_option("--q", q, "field size")->required();
    c_search->add_option("--strategy", strategy, "random|greedy|exhaustive")
        ->check(CLI::IsMember({"random", "greedy", "exhaustive"}));
    c_search->add_option("--property", prop_name, "target property")
        ->check(CLI::IsMember({"mdp", "reverse", "complete"}));
    c_search->add_option("--max-tries", max_tries, "random-search sample budget");
    c_search->add_option("--out", out_file, "write the witness matrix file here");

    CLI::App* c_count = app.add_subcommand("count", "exhaustive family census");
    add_params(c_count);
    c_count->add_option("--q", q, "field size")->required();
    c_count->add_option("--property", prop_name, "headline property")
        ->check(CLI::IsMember({"mdp", "reverse", "complete"}));

    CLI::App* c_prob = app.add_subcommand("probability", "probability estimate / exact value");
    add_params(c_prob);
    c_prob->add_option("--q", q, "field size")->required();
    c_prob->add_option("--samples", samples, "0 = exhaustive, else monte carlo sample count");
    c_prob->add_option("--property", prop_name, "target property")
        ->check(CLI::IsMember({"mdp", "reverse", "complete"}));

    CLI::App* c_super = app.add_subcommand("superregular", "triangular Toeplitz search");
    c_super->add_option("--gamma", gamma, "matrix size")->required();
    CLI::Option* o_q = c_super->add_option("--q", q, "search this field only");
    CLI::Option* o_min = c_super->add_flag("--min-field", min_field, "find the minimal field");
    o_q->excludes(o_min);

    CLI::App* c_compare = app.add_subcommand("compare", "bound comparison table");
    add_params(c_compare);

    app.add_subcommand("repro", "run the acceptance battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (c_check->parsed()) return run_check(g, file, mode);
        if (c_bounds->parsed()) return run_bounds(g, CodeParams(n, k, delta), false);
        if (c_search->parsed())
            return run_search(g, CodeParams(n, k, delta), q, strategy, prop_map.at(prop_name),
                              max_tries, out_file);
        if (c_count->parsed())
            return run_count(g, CodeParams(n, k, delta), q, prop_map.at(prop_name));
        if (c_prob->parsed())
            return run_probability(g, CodeParams(n, k, delta), q, prop_map.at(prop_name), samples);
        if (c_super->parsed()) {
            if (!min_field && q == 0)
                throw std::invalid_argument("superregular needs --q or --min-field");
            return run_superregular(g, gamma, q, min_field);
        }
        if (c_compare->parsed()) return run_bounds(g, CodeParams(n, k, delta), true);
        return run_repro();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
