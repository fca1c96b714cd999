// Command line front end: every operation reads plain flags or a block file
// and prints JSON (or the block line format) to stdout.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "akb/error.hpp"
#include "akb/rouquier.hpp"
#include "akb/serial.hpp"
#include "akb/uglov.hpp"
#include "akb/verify.hpp"

namespace {

using namespace akb;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// Shared flags naming a configuration (single or multicomponent), a block
// file, and the modulus.
struct SeedArgs {
    std::string input;
    std::string components;
    std::string charges;
    std::string partition;
    Int charge = 0;
    int e = 0;
    bool has_partition = false;
    bool has_components = false;
};

void add_seed_options(CLI::App* cmd, SeedArgs& a, bool with_input = true) {
    if (with_input)
        cmd->add_option("--input", a.input, "block file to read instead of generating");
    cmd->add_option("--components", a.components,
                    "'|'-separated component partitions, e.g. \"4,3,1|3,3\"")
        ->each([&a](const std::string&) { a.has_components = true; });
    cmd->add_option("--charges,--multicharge", a.charges, "comma-separated charges");
    cmd->add_option("--partition", a.partition, "comma-separated parts, \"\" for empty")
        ->each([&a](const std::string&) { a.has_partition = true; });
    cmd->add_option("--charge", a.charge, "charge of a single configuration");
    cmd->add_option("--e", a.e, "modulus (number of runners)");
}

MultiAbacus seed_multi(const SeedArgs& a) {
    if (a.has_components) {
        std::vector<Partition> comps = parse_components(a.components);
        std::vector<Int> ch = parse_int_list(a.charges);
        if (comps.size() != ch.size())
            throw std::invalid_argument("--components and --charges must have equal length");
        MultiAbacus m;
        m.components.reserve(comps.size());
        for (std::size_t k = 0; k < comps.size(); ++k)
            m.components.push_back({std::move(comps[k]), ch[k]});
        return m;
    }
    if (a.has_partition) return MultiAbacus{{{parse_partition(a.partition), a.charge}}};
    throw std::invalid_argument("give --components/--charges or --partition/--charge");
}

int require_modulus(const SeedArgs& a) {
    if (a.e < 1) throw std::invalid_argument("--e must be a positive modulus");
    return a.e;
}

Block seed_block(const SeedArgs& a) {
    if (!a.input.empty()) {
        Block b = block_from_text(slurp(a.input));
        if (a.e != 0 && a.e != b.e)
            throw std::invalid_argument("--e disagrees with the block file header");
        return b;
    }
    return generate_block(seed_multi(a), require_modulus(a));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"abacus combinatorics for cyclotomic blocks"};
    app.require_subcommand(1);
    int rc = 0;

    // eta: runner decomposition of one configuration, or its inverse.
    SeedArgs eta_args;
    bool eta_invert = false;
    auto* eta = app.add_subcommand("eta", "runner decomposition of a configuration");
    add_seed_options(eta, eta_args, false);
    eta->add_flag("--invert", eta_invert,
                  "rebuild the configuration from --components (quotient) and --charges");
    eta->callback([&] {
        int e = require_modulus(eta_args);
        if (eta_invert) {
            RunnerDecomposition d{parse_components(eta_args.components),
                                  parse_int_list(eta_args.charges)};
            emit(abacus_to_json(from_runner_decomposition(d, e)));
        } else {
            AbacusConfig x{parse_partition(eta_args.partition), eta_args.charge};
            emit(runner_to_json(runner_decomposition(x, e)));
        }
    });

    // core: e-core and weight of a partition.
    SeedArgs core_args;
    auto* core = app.add_subcommand("core", "e-core and weight of a partition");
    add_seed_options(core, core_args, false);
    core->callback([&] {
        int e = require_modulus(core_args);
        auto [c, w] = core_and_weight(parse_partition(core_args.partition), e);
        emit(json{{"core", partition_to_json(c)}, {"weight", w}});
    });

    // block generate | oracle | info
    auto* block = app.add_subcommand("block", "block closures and summaries");
    block->require_subcommand(1);

    SeedArgs gen_args;
    std::string gen_output;
    auto* gen = block->add_subcommand("generate", "closure of a seed under the two moves");
    add_seed_options(gen, gen_args, false);
    gen->add_option("--output", gen_output, "write the block file here instead of stdout");
    gen->callback([&] {
        Block b = generate_block(seed_multi(gen_args), require_modulus(gen_args));
        if (gen_output.empty()) {
            std::cout << block_to_text(b);
        } else {
            std::ofstream out(gen_output);
            if (!out) throw std::invalid_argument("cannot write file: " + gen_output);
            write_block(out, b);
        }
    });

    SeedArgs oracle_args;
    Int oracle_limit = kDefaultEnumerationLimit;
    std::string oracle_output;
    auto* oracle = block->add_subcommand(
        "oracle", "same block by exhaustive enumeration over all multipartitions");
    add_seed_options(oracle, oracle_args, false);
    oracle->add_option("--limit", oracle_limit, "enumeration guard");
    oracle->add_option("--output", oracle_output, "write the block file here instead of stdout");
    oracle->callback([&] {
        Block b = block_oracle(seed_multi(oracle_args), require_modulus(oracle_args),
                               oracle_limit);
        if (oracle_output.empty()) {
            std::cout << block_to_text(b);
        } else {
            std::ofstream out(oracle_output);
            if (!out) throw std::invalid_argument("cannot write file: " + oracle_output);
            write_block(out, b);
        }
    });

    SeedArgs info_args;
    auto* info = block->add_subcommand("info", "summary of a block");
    add_seed_options(info, info_args);
    info->callback([&] {
        Block b = seed_block(info_args);
        json j{{"e", b.e},
               {"bs", b.charges},
               {"n", b.n()},
               {"size", b.size()},
               {"residues", b.residues.counts},
               {"hook_weight", block_hook_weight(b)},
               {"core_block", is_core_block(b)},
               {"rouquier", is_rouquier_block(b)}};
        if (is_core_block(b)) j["base_tuple"] = base_tuple(b);
        emit(j);
    });

    // uglov fuse | split | level-rank
    auto* uglov = app.add_subcommand("uglov", "fusion and splitting of abacus levels");
    uglov->require_subcommand(1);

    SeedArgs fuse_args;
    auto* fuse_cmd = uglov->add_subcommand("fuse", "interleave components into one runner set");
    add_seed_options(fuse_cmd, fuse_args, false);
    fuse_cmd->callback([&] {
        emit(abacus_to_json(fuse(seed_multi(fuse_args), require_modulus(fuse_args))));
    });

    SeedArgs split_args;
    int split_r = 0;
    auto* split_cmd = uglov->add_subcommand("split", "deinterleave one runner set into levels");
    add_seed_options(split_cmd, split_args, false);
    split_cmd->add_option("--r", split_r, "number of levels")->required();
    split_cmd->callback([&] {
        AbacusConfig x{parse_partition(split_args.partition), split_args.charge};
        emit(multi_to_json(split(x, split_r, require_modulus(split_args))));
    });

    SeedArgs lr_args;
    auto* lr = uglov->add_subcommand("level-rank",
                                     "runner decomposition of the fused configuration");
    add_seed_options(lr, lr_args, false);
    lr->callback([&] {
        emit(runner_to_json(level_rank(seed_multi(lr_args), require_modulus(lr_args))));
    });

    // rouquier check | block | stretch-vector
    auto* rq = app.add_subcommand("rouquier", "large-charge-gap predicates");
    rq->require_subcommand(1);

    SeedArgs rqc_args;
    int rqc_r = 0;
    auto* rqc = rq->add_subcommand("check", "test one configuration or multipartition");
    add_seed_options(rqc, rqc_args, false);
    rqc->add_option("--r", rqc_r, "headroom for a single configuration");
    rqc->callback([&] {
        int e = require_modulus(rqc_args);
        if (rqc_args.has_components) {
            if (rqc_r != 0)
                throw std::invalid_argument("--r applies to a single configuration only");
            emit(json{{"rouquier",
                       is_rouquier_multipartition(seed_multi(rqc_args), e)}});
        } else {
            AbacusConfig x{parse_partition(rqc_args.partition), rqc_args.charge};
            if (rqc_r != 0)
                emit(json{{"r", rqc_r}, {"r_rouquier", is_r_rouquier_partition(x, e, rqc_r)}});
            else
                emit(json{{"rouquier", is_rouquier_partition(x, e)}});
        }
    });

    SeedArgs rqb_args;
    int rqb_r = 0;
    auto* rqb = rq->add_subcommand("block", "test a whole block");
    add_seed_options(rqb, rqb_args);
    rqb->add_option("--r", rqb_r, "headroom for a level-one block");
    rqb->callback([&] {
        Block b = seed_block(rqb_args);
        if (rqb_r != 0)
            emit(json{{"r", rqb_r}, {"r_rouquier", is_r_rouquier_block(b, rqb_r)}});
        else
            emit(json{{"rouquier", is_rouquier_block(b)}});
    });

    SeedArgs rqs_args;
    auto* rqs = rq->add_subcommand("stretch-vector",
                                   "charge stretch making the fused block pass the "
                                   "level-headroom test");
    add_seed_options(rqs, rqs_args);
    rqs->callback([&] { emit(json{{"stretch", rouquier_stretch_vector(seed_block(rqs_args))}}); });

    // stretch: add a vector to the charges.
    SeedArgs stretch_args;
    std::string stretch_s;
    auto* st = app.add_subcommand("stretch", "shift charges by a runner-indexed vector");
    add_seed_options(st, stretch_args, false);
    st->add_option("--stretch", stretch_s, "comma-separated e-entry vector")->required();
    st->callback([&] {
        int e = require_modulus(stretch_args);
        std::vector<Int> m = parse_int_list(stretch_s);
        if (stretch_args.has_components)
            emit(multi_to_json(stretch(seed_multi(stretch_args), m, e)));
        else
            emit(abacus_to_json(stretch(
                AbacusConfig{parse_partition(stretch_args.partition), stretch_args.charge}, m,
                e)));
    });

    // scopes swap | shift | valid
    auto* sc = app.add_subcommand("scopes", "runner swaps and charge shifts");
    sc->require_subcommand(1);

    SeedArgs scs_args;
    int scs_i = 0;
    auto* scs = sc->add_subcommand("swap", "swap adjacent runners (last wraps around)");
    add_seed_options(scs, scs_args, false);
    scs->add_option("--i", scs_i, "runner index, 0 <= i < e")->required();
    scs->callback([&] {
        int e = require_modulus(scs_args);
        if (scs_args.has_components)
            emit(multi_to_json(swap_runners(seed_multi(scs_args), scs_i, e)));
        else
            emit(abacus_to_json(swap_runners(
                AbacusConfig{parse_partition(scs_args.partition), scs_args.charge}, scs_i, e)));
    });

    SeedArgs scsh_args;
    auto* scsh = sc->add_subcommand("shift", "raise every charge by one");
    add_seed_options(scsh, scsh_args, false);
    scsh->callback([&] {
        if (scsh_args.has_components)
            emit(multi_to_json(shift_charge(seed_multi(scsh_args))));
        else
            emit(abacus_to_json(shift_charge(
                AbacusConfig{parse_partition(scsh_args.partition), scsh_args.charge})));
    });

    SeedArgs scv_args;
    int scv_i = 0;
    auto* scv = sc->add_subcommand("valid", "can runner i swap across this whole block");
    add_seed_options(scv, scv_args);
    scv->add_option("--i", scv_i, "runner index, 0 <= i < e")->required();
    scv->callback([&] {
        Block b = seed_block(scv_args);
        emit(json{{"i", scv_i}, {"valid", scopes_move_valid(b, scv_i)}});
    });

    // reduce staircase | normalize | replay
    auto* red = app.add_subcommand("reduce", "replayable block equivalences");
    red->require_subcommand(1);

    SeedArgs red_st_args;
    auto* red_st = red->add_subcommand("staircase", "reduce a core block to staircase form");
    add_seed_options(red_st, red_st_args);
    red_st->callback([&] {
        Block b = seed_block(red_st_args);
        auto [chain, target] = reduce_to_staircase(b);
        emit(json{{"source", block_to_json(b)},
                  {"chain", chain_to_json(chain)},
                  {"target", block_to_json(target)}});
    });

    SeedArgs red_no_args;
    auto* red_no = red->add_subcommand(
        "normalize", "stretch a core or large-gap block until the fused image passes");
    add_seed_options(red_no, red_no_args);
    red_no->callback([&] {
        Block b = seed_block(red_no_args);
        auto [chain, target] = rouquier_normalize(b);
        emit(json{{"source", block_to_json(b)},
                  {"chain", chain_to_json(chain)},
                  {"target", block_to_json(target)}});
    });

    std::string replay_input;
    auto* red_re = red->add_subcommand("replay", "re-run a recorded chain and check it");
    red_re->add_option("--input", replay_input, "JSON with source, chain, optional target")
        ->required();
    red_re->callback([&] {
        json j = json::parse(slurp(replay_input));
        Block source = block_from_json(j.at("source"));
        EquivalenceChain chain = chain_from_json(j.at("chain"));
        Block target = replay_chain(source, chain);
        bool ok = true;
        if (j.contains("target")) ok = (target == block_from_json(j.at("target")));
        emit(json{{"ok", ok}, {"target", block_to_json(target)}});
        if (!ok) rc = 1;
    });

    // verify: property sweeps.
    std::string suite = "all";
    VerifyBounds bounds;
    auto* ver = app.add_subcommand("verify", "run the property check suites");
    ver->add_option("--suite", suite, "roundtrip|oracle|uglov|rouquier|scopes|all");
    ver->add_option("--e-max", bounds.e_max, "largest modulus in the sweep");
    ver->add_option("--r-max", bounds.r_max, "largest level in the sweep");
    ver->add_option("--n-max", bounds.n_max, "largest total size in the sweep");
    ver->add_option("--window", bounds.window, "charge search window for soft checks");
    ver->add_option("--seed", bounds.seed, "random seed");
    ver->callback([&] {
        if (suite != "roundtrip" && suite != "oracle" && suite != "uglov" &&
            suite != "rouquier" && suite != "scopes" && suite != "all")
            throw CLI::ValidationError("--suite", "unknown suite: " + suite);
        bool all_pass = true;
        for (const CheckResult& r : verify_suite(suite, bounds)) {
            if (r.pass) {
                std::cout << "PASS " << r.name << " (" << r.checked << " cases)";
                if (!r.detail.empty()) std::cout << " " << r.detail;
                std::cout << "\n";
            } else {
                all_pass = false;
                std::cout << "FAIL " << r.name << " (" << r.checked << " cases): " << r.detail
                          << "\n";
            }
        }
        if (!all_pass) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex);
        return code == 0 ? 0 : 2;
    } catch (const akb::DomainError& ex) {
        std::cerr << "error: " << ex.name() << ": " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return rc;
}
