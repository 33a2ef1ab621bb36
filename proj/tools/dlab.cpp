#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "commands.hpp"

#ifndef DLAB_VERSION
#define DLAB_VERSION "0.0.0"
#endif

namespace {

using dlab::cli::Json;
using dlab::cli::Options;
using dlab::cli::Outcome;

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw dlab::InternalFault("SHA-256 digest failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return out.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dlab::InputError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dlab::InputError("cannot write '" + path + "'");
    out << text;
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
    const char* v = std::getenv("DLAB_BUDGET");
    if (!v || !*v) return fallback;
    try {
        std::size_t pos = 0;
        const auto b = std::stoull(v, &pos);
        if (pos != std::string(v).size() || b == 0) throw std::invalid_argument(v);
        return b;
    } catch (const std::exception&) {
        throw dlab::InputError(std::string("DLAB_BUDGET is not a positive integer: ") + v);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regular two-level design toolkit: construction, wordlength patterns, "
                 "complementary designs and minimum aberration search"};
    app.set_version_flag("--version", DLAB_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    std::string out_path, manifest_path;
    std::optional<std::uint64_t> budget_flag;
    bool balanced = false, all_f = false;
    app.add_option("--out", out_path, "Write the JSON result here instead of stdout");
    app.add_option("--manifest", manifest_path,
                   "Write the run manifest here (default: stderr)");
    app.add_option("--threads", o.search.threads, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", o.seed, "Seed for randomized suites");

    auto family_opt = [&](CLI::App* s) {
        s->add_option("--family", o.family, "x0-5|max-5n16|x0-9|max-9n32|max-even|saturated");
    };

    auto* construct = app.add_subcommand("construct", "Build a catalog design");
    family_opt(construct);
    construct->add_option("--t", o.t, "Number of doublings")->required();
    construct->add_option("--complement-u", o.u, "Delete the preferred u-column complement");

    auto* dbl = app.add_subcommand("double", "Double a design file");
    dbl->add_option("--in", o.in_path)->required()->check(CLI::ExistingFile);
    dbl->add_option("--times", o.times, "Number of doublings")->default_val(1);

    auto* proj = app.add_subcommand("project", "Keep or drop columns of a design file");
    proj->add_option("--in", o.in_path)->required()->check(CLI::ExistingFile);
    proj->add_option("--keep", o.keep, "1-based columns to keep")->delimiter(',');
    proj->add_option("--drop", o.drop, "1-based columns to drop")->delimiter(',');

    auto* wlp = app.add_subcommand("wlp", "Wordlength pattern and resolution");
    wlp->add_option("--in", o.in_path)->check(CLI::ExistingFile);
    family_opt(wlp);
    wlp->add_option("--t", o.t);
    wlp->add_option("--max-len", o.max_len, "Truncate the pattern");

    auto* delta = app.add_subcommand("delta", "Delta_k of a complementary split");
    family_opt(delta);
    delta->add_option("--t", o.t)->required();
    delta->add_option("--complement", o.complement, "1-based deleted columns")
        ->delimiter(',')
        ->required();
    delta->add_option("--k", o.k)->check(CLI::Range(1, 64));

    auto* verify = app.add_subcommand("verify", "Run an identity or lemma check");
    verify->add_option("suite", o.suite,
                       "pless|theorem1|corollary1|lemma2|lemma3|lemma4|lemma6|lemma7|examples")
        ->required();
    family_opt(verify);
    verify->add_option("--in", o.in_path)->check(CLI::ExistingFile);
    verify->add_option("--t", o.t);
    verify->add_option("--u", o.u);
    verify->add_option("--n", o.n);
    verify->add_option("--kmax", o.kmax)->check(CLI::Range(1, 64));
    verify->add_option("--samples", o.samples)->check(CLI::Range(0, 10'000'000));

    auto* search = app.add_subcommand("search", "Sequential-criterion complement search");
    family_opt(search);
    search->add_option("--t", o.t)->required();
    search->add_option("--u", o.u)->required();
    search->add_flag("--balanced", balanced, "Balanced frequency vectors only (default)");
    search->add_flag("--all-frequencies", all_f, "Search every frequency vector");
    search->add_option("--depth", o.search.depth, "Key covers A_4..A_depth");
    search->add_option("--budget", budget_flag, "Candidate budget");
    search->add_flag("--reduce", o.search.symmetry_reduction,
                     "Fix translation symmetry (representatives only)");
    search->add_flag("!--no-unconstrained", o.search.unconstrained_check,
                     "Skip the all-frequency spot check");
    search->add_option("--max-ties", o.search.max_ties, "Column sets kept per WLP class");

    auto* bounds = app.add_subcommand("bounds", "Exact bound values and inequality checks");
    bounds->add_option("--which", o.which, "corollary2|lemma4|lemma3|lemma6|lemma7")->required();
    bounds->add_option("--t", o.t)->required();
    bounds->add_option("--n", o.n);

    auto* s6 = app.add_subcommand("reproduce-s6", "N = 256, n = 69..79 comparison table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : dlab::cli::kInvalidInput;
    }

    const auto start = std::chrono::steady_clock::now();
    CLI::App* sub = app.get_subcommands().front();
    Outcome res;
    std::vector<std::string> inputs;
    if (!o.in_path.empty()) inputs.push_back(o.in_path);
    try {
        if (balanced && all_f) throw dlab::InputError("--balanced and --all-frequencies conflict");
        o.search.balanced_only = !all_f;
        o.search.budget = budget_flag.value_or(budget_from_env(dlab::kDefaultSearchBudget));
        if (sub == construct) res = dlab::cli::cmd_construct(o);
        else if (sub == dbl) res = dlab::cli::cmd_double(o);
        else if (sub == proj) res = dlab::cli::cmd_project(o);
        else if (sub == wlp) res = dlab::cli::cmd_wlp(o);
        else if (sub == delta) res = dlab::cli::cmd_delta(o);
        else if (sub == verify) res = dlab::cli::cmd_verify(o);
        else if (sub == search) res = dlab::cli::cmd_search(o);
        else if (sub == bounds) res = dlab::cli::cmd_bounds(o);
        else if (sub == s6) res = dlab::cli::cmd_reproduce_section6(o);
    } catch (const dlab::InputError& e) {
        std::cerr << "dlab: " << e.what() << '\n';
        return dlab::cli::kInvalidInput;
    } catch (const dlab::CapacityError& e) {
        std::cerr << "dlab: " << e.what() << '\n';
        return dlab::cli::kBudgetExhausted;
    } catch (const dlab::VerificationFailure& e) {
        std::cerr << "dlab: " << e.what() << '\n';
        return dlab::cli::kVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "dlab: internal error: " << e.what() << '\n';
        return 70;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::string text = res.result.dump(2) + "\n";
    try {
        if (out_path.empty()) std::cout << text;
        else write_file(out_path, text);

        Json digests = Json::object();
        for (const auto& p : inputs) digests[p] = sha256_hex(slurp(p));
        Json args = Json::array();
        for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
        Json manifest{{"command", sub->get_name()},
                      {"parameters", args},
                      {"version", DLAB_VERSION},
                      {"inputs", digests},
                      {"output", Json{{"path", out_path.empty() ? Json(nullptr) : Json(out_path)},
                                      {"sha256", sha256_hex(text)}}},
                      {"exit_code", res.exit_code},
                      {"wall_seconds", seconds}};
        if (manifest_path.empty()) std::cerr << manifest.dump() << '\n';
        else write_file(manifest_path, manifest.dump(2) + "\n");
    } catch (const std::exception& e) {
        std::cerr << "dlab: " << e.what() << '\n';
        return dlab::cli::kInvalidInput;
    }
    return res.exit_code;
}
