// cyclosynth: exact synthesis and verification over Clifford-cyclotomic gate sets.

#include <bit>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cyclo/embedding.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/io.hpp"
#include "cyclo/random.hpp"
#include "cyclo/synth_tower.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kInvalid = 3,
    kVerifyFailed = 4,
    kStuck = 5,
};

int level_of_degree(std::uint64_t degree) {
    if (degree < 8 || degree > (std::uint64_t{1} << 24) || !std::has_single_bit(degree)) {
        throw cyclo::InvalidInput("degree must be a power of two between 8 and 2^24, got " + std::to_string(degree));
    }
    return std::countr_zero(degree);
}

int qubits_of(const cyclo::RingMatrix &u) { return std::countr_zero(u.rows()); }

void require_level(const cyclo::RingMatrix &u, int level) {
    if (u.level() != level) {
        throw cyclo::InvalidInput("matrix entries are at level " + std::to_string(u.level()) + " but --degree gives level " +
                                  std::to_string(level));
    }
}

void print_stats(const cyclo::SynthesisResult &r) {
    nlohmann::ordered_json j;
    j["qubits"] = r.circuit.num_qubits;
    j["inputs"] = r.num_inputs;
    j["catalyst_wires"] = r.catalyst_wires;
    j["base_ancillas"] = r.base_ancillas;
    j["gates"] = r.gate_counts;
    j["reduction"] = {{"columns", r.reduction.columns},
                      {"passes", r.reduction.passes},
                      {"pair_reductions", r.reduction.pair_reductions},
                      {"conversions", r.reduction.conversions},
                      {"two_level_ops", r.reduction.ops},
                      {"max_initial_sde", r.reduction.max_initial_sde}};
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact synthesis of unitaries over D[zeta_{2^k}] into Clifford-cyclotomic circuits"};
    app.require_subcommand(1);

    std::uint64_t degree = 0;
    std::string in_path, out_path, circuit_path, unitary_path;
    bool do_verify = false, emit_stats = false, keep_macros = false;
    int qubits = 0;
    std::size_t length = 0;
    std::uint64_t seed = 0;

    auto *synth = app.add_subcommand("synth", "Synthesize a circuit for a unitary file");
    synth->add_option("--degree", degree, "Degree N = 2^k of the gate set")->required();
    synth->add_option("--in", in_path, "Input unitary (JSON)")->required();
    synth->add_option("--out", out_path, "Output circuit")->required();
    synth->add_flag("--verify", do_verify, "Check the result exactly before exiting");
    synth->add_flag("--stats", emit_stats, "Print gate and reduction statistics");
    synth->add_flag("--keep-macros", keep_macros, "Write S, SDG, X, H, CCX unexpanded");

    auto *verify = app.add_subcommand("verify", "Check a circuit against a unitary on the ancilla-zero block");
    verify->add_option("--circuit", circuit_path)->required();
    verify->add_option("--unitary", unitary_path)->required();

    auto *eval = app.add_subcommand("eval", "Write the full unitary of a circuit");
    eval->add_option("--circuit", circuit_path)->required();
    eval->add_option("--out", out_path)->required();

    auto *embed = app.add_subcommand("embed", "Apply one catalytic embedding step");
    embed->add_option("--degree", degree)->required();
    embed->add_option("--in", in_path)->required();
    embed->add_option("--out", out_path)->required();

    auto *random = app.add_subcommand("random", "Evaluate a seeded random gate word");
    random->add_option("--degree", degree)->required();
    random->add_option("--qubits", qubits)->required()->check(CLI::Range(1, 12));
    random->add_option("--length", length)->required();
    random->add_option("--seed", seed)->required();
    random->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (synth->parsed()) {
            const int level = level_of_degree(degree);
            const cyclo::RingMatrix u = cyclo::read_unitary_file(in_path);
            require_level(u, level);
            const cyclo::SynthesisResult r = cyclo::synthesize(u, qubits_of(u));
            cyclo::write_circuit_file(out_path, r.circuit, keep_macros);
            if (emit_stats) {
                print_stats(r);
            }
            if (do_verify) {
                const bool ok = cyclo::verify_circuit(r.circuit, u);
                std::cout << (ok ? "PASS" : "FAIL") << "\n";
                return ok ? kOk : kVerifyFailed;
            }
        } else if (verify->parsed()) {
            const cyclo::Circuit c = cyclo::read_circuit_file(circuit_path);
            const cyclo::RingMatrix u = cyclo::read_unitary_file(unitary_path);
            const bool ok = cyclo::verify_circuit(c, u);
            std::cout << (ok ? "PASS" : "FAIL") << "\n";
            return ok ? kOk : kVerifyFailed;
        } else if (eval->parsed()) {
            const cyclo::Circuit c = cyclo::read_circuit_file(circuit_path);
            cyclo::write_unitary_file(out_path, cyclo::eval(c));
        } else if (embed->parsed()) {
            const int level = level_of_degree(degree);
            const cyclo::RingMatrix u = cyclo::read_unitary_file(in_path);
            require_level(u, level);
            cyclo::write_unitary_file(out_path, cyclo::phi(u));
        } else if (random->parsed()) {
            const int level = level_of_degree(degree);
            const cyclo::Circuit c = cyclo::random_word(level, qubits, length, seed);
            cyclo::write_unitary_file(out_path, cyclo::eval(c));
        }
    } catch (const cyclo::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const cyclo::InvalidInput &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const cyclo::ReductionStuck &e) {
        std::cerr << "reduction stuck: " << e.what() << "\n";
        return kStuck;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kOk;
}
