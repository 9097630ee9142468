// starfree: quotient complexity of operations on star-free languages.
//
// The integer result of every subcommand is the last line of stdout;
// diagnostics go to stderr. Exit status: 0 ok, 1 failed verification,
// 2 usage or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "starfree/starfree.hpp"

namespace sf = starfree;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::optional<std::size_t> budget;

    // complexity / aperiodic
    std::string file;

    // apply
    std::string op_name;
    std::vector<std::string> operands;
    std::string emit;
    bool show_construction = false;

    // witness
    std::string family;
    std::optional<std::size_t> m;
    std::optional<std::size_t> n;
    std::optional<std::size_t> letters;

    // verify
    std::string claim;
    bool quick = false;
    std::string verify_op;
    std::string csv;

    // star-table
    std::size_t from = 1;
    std::size_t to = 8;
    bool no_search = false;

    // enumerate
    std::size_t states = 2;
    std::size_t max_letters = 2;
    std::string filter = "aperiodic";
    bool count_only = false;
    bool no_dedupe = false;
};

std::size_t budget_of(const Options& opt) { return opt.budget ? *opt.budget : sf::search_budget_from_env(); }

sf::Dfa load_dfa(const std::string& path) { return sf::as_dfa(sf::read_automaton_file(path)); }

void emit_dfa(const std::string& target, const sf::Dfa& dfa) {
    if (target.empty()) {
        return;
    }
    if (target == "-") {
        std::cout << sf::to_json(dfa) << '\n';
    } else {
        sf::write_json_file(target, dfa);
        std::cerr << "wrote " << target << '\n';
    }
}

int run_complexity(const Options& opt) {
    std::cout << sf::quotient_complexity(load_dfa(opt.file)) << '\n';
    return kExitOk;
}

int run_apply(const Options& opt) {
    const auto op = sf::parse_operation(opt.op_name);
    if (!op) {
        throw sf::ConfigError("unknown operation '" + opt.op_name + "'");
    }
    if (opt.operands.size() != sf::arity(*op)) {
        throw sf::ConfigError(std::string(sf::to_string(*op)) + " takes " + std::to_string(sf::arity(*op)) +
                              " automaton file(s), got " + std::to_string(opt.operands.size()));
    }
    std::vector<sf::Dfa> dfas;
    for (const auto& path : opt.operands) {
        dfas.push_back(load_dfa(path));
    }
    const auto result = sf::apply(*op, dfas);
    if (opt.show_construction) {
        std::cout << "construction states: " << result.construction_states << '\n';
    }
    emit_dfa(opt.emit, result.result);
    std::cout << result.complexity << '\n';
    return kExitOk;
}

int run_witness(const Options& opt) {
    const auto family = sf::parse_witness_family(opt.family);
    if (!family) {
        std::string known;
        for (auto f : sf::all_witness_families()) {
            known += known.empty() ? "" : ", ";
            known += sf::to_string(f);
        }
        throw sf::ConfigError("unknown witness family '" + opt.family + "' (known: " + known + ")");
    }
    const auto dfa = sf::generate_witness({*family, opt.m, opt.n, opt.letters});
    emit_dfa(opt.emit, dfa);
    std::cout << sf::quotient_complexity(dfa) << '\n';
    return kExitOk;
}

int run_aperiodic(const Options& opt) {
    const auto dfa = load_dfa(opt.file);
    const auto report = sf::is_aperiodic(dfa);
    std::cout << "transition monoid size: " << report.monoid_size << '\n';
    if (report.certificate) {
        std::cout << "not aperiodic: word '" << report.certificate->word.to_string(dfa.alphabet())
                  << "' permutes " << report.certificate->subset.to_string() << '\n';
    } else {
        std::cout << "aperiodic\n";
    }
    std::cout << (report.aperiodic ? 1 : 0) << '\n';
    return kExitOk;
}

int run_verify(const Options& opt) {
    sf::ClaimParams params;
    params.m = opt.m;
    params.n = opt.n;
    params.letters = opt.letters;
    if (!opt.verify_op.empty()) {
        params.op = sf::parse_operation(opt.verify_op);
        if (!params.op) {
            throw sf::ConfigError("unknown operation '" + opt.verify_op + "'");
        }
    }
    std::vector<std::pair<sf::ClaimId, sf::ClaimParams>> runs;
    const bool all = opt.claim == "all";
    if (all) {
        if (params.m || params.n || params.letters || params.op) {
            throw sf::ConfigError("verify all takes no claim parameters");
        }
        runs = sf::claim_runs(opt.quick);
    } else {
        const auto id = sf::parse_claim_id(opt.claim);
        if (!id) {
            std::string known;
            for (auto c : sf::all_claim_ids()) {
                known += known.empty() ? "" : ", ";
                known += sf::to_string(c);
            }
            throw sf::ConfigError("unknown claim '" + opt.claim + "' (known: " + known + ", all)");
        }
        runs.emplace_back(*id, params);
    }

    std::ofstream csv;
    if (!opt.csv.empty()) {
        csv.open(opt.csv);
        if (!csv) {
            throw sf::InputError("cannot write " + opt.csv);
        }
        csv << sf::csv_header() << '\n';
    }
    const auto budget = budget_of(opt);
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::optional<std::size_t> last_computed;
    for (const auto& [id, p] : runs) {
        const auto report = sf::verify_claim(id, p, budget);
        std::cout << sf::format_report(report) << '\n';
        if (csv) {
            csv << sf::to_csv_row(report) << '\n';
        }
        if (report.status == sf::Status::Fail) {
            ++failed;
        } else if (report.status == sf::Status::Skipped) {
            ++skipped;
        }
        last_computed = report.computed;
    }
    if (skipped > 0) {
        std::cerr << skipped << " check(s) skipped: budget\n";
    }
    if (all) {
        std::cerr << runs.size() - failed - skipped << " passed, " << failed << " failed, " << skipped
                  << " skipped\n";
        std::cout << failed << '\n';
    } else if (last_computed) {
        std::cout << *last_computed << '\n';
    }
    return failed > 0 ? kExitFailed : kExitOk;
}

int run_star_table(const Options& opt) {
    const auto table = sf::star_table(opt.from, opt.to, !opt.no_search, budget_of(opt));
    std::cout << sf::format_star_table(table);
    std::size_t mismatched = 0;
    for (const auto& cell : table.cells) {
        if (!cell.matches()) {
            ++mismatched;
        }
    }
    if (!opt.csv.empty()) {
        std::ofstream csv(opt.csv);
        if (!csv) {
            throw sf::InputError("cannot write " + opt.csv);
        }
        csv << "letters,n,expected,achieved,search_max,search_class,status\n";
        for (const auto& cell : table.cells) {
            csv << cell.letters << ',' << cell.n << ',' << cell.expected << ','
                << (cell.achieved ? std::to_string(*cell.achieved) : "") << ','
                << (cell.search_max ? std::to_string(*cell.search_max) : "") << ',' << cell.search_class << ','
                << cell.status() << '\n';
        }
    }
    std::cout << mismatched << '\n';
    return mismatched > 0 ? kExitFailed : kExitOk;
}

int run_enumerate(const Options& opt) {
    const auto filter = sf::parse_filter(opt.filter);
    if (!filter) {
        throw sf::ConfigError("unknown filter '" + opt.filter + "' (all, aperiodic, nondecreasing)");
    }
    sf::EnumerationConfig cfg;
    cfg.states = opt.states;
    cfg.max_letters = opt.max_letters;
    cfg.filter = *filter;
    cfg.dedupe = !opt.no_dedupe;
    std::cerr << "letter pool: " << sf::letter_pool(cfg.states, cfg.filter).size() << " maps, "
              << sf::candidate_count(cfg) << " candidates\n";
    const auto visited = sf::enumerate_dfas(
        cfg,
        [&](const sf::Dfa& dfa) {
            if (!opt.count_only) {
                std::cout << sf::to_json(dfa) << '\n';
            }
        },
        budget_of(opt));
    std::cout << visited << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quotient complexity of operations on star-free languages"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--budget", opt.budget, "Candidate ceiling for exhaustive searches (default: STARFREE_BUDGET or 1e7)")
        ->check(CLI::PositiveNumber);

    auto* complexity = app.add_subcommand("complexity", "Print the quotient complexity of an automaton");
    complexity->add_option("file", opt.file, "DFA or NFA in JSON")->required();

    auto* apply = app.add_subcommand("apply", "Apply an operation and print the result's quotient complexity");
    apply->add_option("op", opt.op_name,
                      "complement, union, intersection, difference, symdiff, concat, star, reverse")
        ->required();
    apply->add_option("files", opt.operands, "Operand automata")->required();
    apply->add_option("--emit", opt.emit, "Write the minimal result as JSON ('-' for stdout)");
    apply->add_flag("--show-construction", opt.show_construction, "Also print the construction's reachable state count");

    auto* witness = app.add_subcommand("witness", "Build a witness automaton and print its quotient complexity");
    witness->add_option("family", opt.family, "Witness family, e.g. prod_L, star_Dn, reversal_Dn")->required();
    witness->add_option("--m", opt.m, "First operand complexity");
    witness->add_option("--n", opt.n, "Second operand complexity");
    witness->add_option("--letters", opt.letters, "Alphabet size (star_Dn)");
    witness->add_option("--emit", opt.emit, "Write the automaton as JSON ('-' for stdout)");

    auto* aperiodic = app.add_subcommand("aperiodic", "Test aperiodicity; prints 1 or 0");
    aperiodic->add_option("file", opt.file, "DFA or NFA in JSON")->required();

    auto* verify = app.add_subcommand("verify", "Check a claim (or all of them)");
    verify->add_option("claim", opt.claim, "Claim id or 'all'")->required();
    verify->add_flag("--quick", opt.quick, "With 'all': smallest parameters only");
    verify->add_option("--m", opt.m, "m");
    verify->add_option("--n", opt.n, "n");
    verify->add_option("--letters", opt.letters, "Alphabet size");
    verify->add_option("--op", opt.verify_op, "Operation (thm1, thm6_boolean)");
    verify->add_option("--csv", opt.csv, "Also write reports as CSV");

    auto* table = app.add_subcommand("star-table", "Regenerate the star complexity table");
    table->add_option("--from", opt.from, "Smallest n")->check(CLI::PositiveNumber);
    table->add_option("--to", opt.to, "Largest n")->check(CLI::PositiveNumber);
    table->add_flag("--no-search", opt.no_search, "Witness values only");
    table->add_option("--csv", opt.csv, "Also write cells as CSV");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate small DFAs of a class");
    enumerate->add_option("--states", opt.states, "State count")->check(CLI::PositiveNumber);
    enumerate->add_option("--letters", opt.max_letters, "Maximum number of distinct letters")
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--filter", opt.filter, "all, aperiodic or nondecreasing");
    enumerate->add_flag("--count", opt.count_only, "Only print the number of machines");
    enumerate->add_flag("--no-dedupe", opt.no_dedupe, "Enumerate letter tuples instead of letter sets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*complexity) return run_complexity(opt);
        if (*apply) return run_apply(opt);
        if (*witness) return run_witness(opt);
        if (*aperiodic) return run_aperiodic(opt);
        if (*verify) return run_verify(opt);
        if (*table) return run_star_table(opt);
        if (*enumerate) return run_enumerate(opt);
    } catch (const sf::ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
