// Acceptance run: one PASS/FAIL line per criterion, all checks exact.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cyclo/embedding.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/random.hpp"
#include "cyclo/synth_base.hpp"
#include "cyclo/synth_tower.hpp"
#include "oracle.hpp"

using namespace cyclo;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

// Shared across criteria 1, 8 and 9.
ReductionStats g_stats;
std::size_t g_stuck = 0;
std::size_t g_runs = 0;

// Per-case record from criterion 1, reused by criterion 2.
struct RoundTrip {
    int k;
    int m;
    int ancillas;
};
std::vector<RoundTrip> g_round_trips;

bool restricted_equals(const Circuit &c, const RingMatrix &u) {
    const RingMatrix expected =
        tensor(u, RingMatrix::column(RingVector::basis(u.level(), std::size_t{1} << c.num_ancillas(), 0)));
    return eval_restricted(c) == expected;
}

// Synthesizes, expands to primitives, and checks the ancilla-zero block.
bool synth_round_trip(const RingMatrix &u, int m, int *ancillas = nullptr) {
    ++g_runs;
    try {
        const SynthesisResult r = synthesize(u, m);
        g_stats += r.reduction;
        if (ancillas) {
            *ancillas = r.circuit.num_ancillas();
        }
        return restricted_equals(expand_macros(r.circuit), u);
    } catch (const ReductionStuck &) {
        ++g_stuck;
        return false;
    }
}

Outcome master_round_trip() {
    std::size_t ok = 0, total = 0;
    for (int k = 3; k <= 5; ++k) {
        for (int m = 1; m <= 2; ++m) {
            for (std::uint64_t s = 0; s < 25; ++s) {
                const std::uint64_t seed = 1000 * k + 100 * m + s;
                Rng rng(seed);
                const std::size_t length = static_cast<std::size_t>(rng.between(1, 30));
                const RingMatrix u = eval(random_word(k, m, length, rng));
                int anc = -1;
                const bool pass = synth_round_trip(u, m, &anc);
                g_round_trips.push_back({k, m, anc});
                ok += pass;
                ++total;
                if (!pass) {
                    std::cerr << "  round trip failed: k=" << k << " m=" << m << " seed=" << seed << "\n";
                }
            }
        }
    }
    std::ostringstream d;
    d << ok << "/" << total << " exact round trips, (k, m) in {3,4,5} x {1,2}, 25 words each";
    return {ok == total && total == 150, d.str()};
}

Outcome ancilla_bound() {
    std::ostringstream d;
    bool pass = !g_round_trips.empty();
    for (int k = 3; k <= 5; ++k) {
        int worst = -1;
        for (const RoundTrip &r : g_round_trips) {
            if (r.k == k) {
                worst = std::max(worst, r.ancillas);
                pass = pass && r.ancillas >= 0 && r.ancillas <= k - 2;
            }
        }
        d << "k=" << k << ": max " << worst << " (bound " << k - 2 << ")" << (k < 5 ? "; " : "");
    }
    return {pass, d.str()};
}

// Criteria 3 and 4 share their unitaries.
struct EmbeddingTally {
    std::size_t unitaries = 0;
    std::size_t catalytic_ok = 0;
    std::size_t catalytic_total = 0;
    std::size_t unitary_ok = 0;
};

const EmbeddingTally &embedding_tally() {
    static const EmbeddingTally tally = [] {
        EmbeddingTally t;
        std::mt19937_64 vec_rng(2024);
        for (int k = 4; k <= 6; ++k) {
            const Catalyst lam = catalyst_state(k);
            for (std::uint64_t s = 0; s < 100; ++s) {
                const int m = 1 + static_cast<int>(s % 2);
                const RingMatrix u = eval(random_word(k, m, 20, 50000 + 1000 * k + s));
                const RingMatrix v = phi(u);
                ++t.unitaries;
                t.unitary_ok += is_unitary(v);
                const RingMatrix lifted = lift_matrix(v, k);
                for (int n = 0; n < 5; ++n) {
                    const RingVector x = oracle::random_vector(vec_rng, k, u.cols());
                    ++t.catalytic_total;
                    t.catalytic_ok += apply(lifted, tensor(x, lam.state)) == tensor(apply(u, x), lam.state);
                }
            }
        }
        return t;
    }();
    return tally;
}

Outcome catalytic_condition() {
    const EmbeddingTally &t = embedding_tally();
    std::ostringstream d;
    d << t.catalytic_ok << "/" << t.catalytic_total << " vectors over " << t.unitaries << " unitaries (100 per k = 4, 5, 6)";
    return {t.catalytic_total == 1500 && t.catalytic_ok == t.catalytic_total, d.str()};
}

Outcome embedding_unitarity() {
    const EmbeddingTally &t = embedding_tally();
    std::ostringstream d;
    d << t.unitary_ok << "/" << t.unitaries << " embedded matrices unitary, " << t.unitaries - t.unitary_ok
      << " failures";
    return {t.unitaries == 300 && t.unitary_ok == t.unitaries, d.str()};
}

Outcome eigen_relation() {
    int ok = 0;
    for (int k = 3; k <= 8; ++k) {
        const Catalyst lam = catalyst_state(k);
        const RingVector image = apply(lift_matrix(lambda_matrix(k), k), lam.state);
        RingVector scaled = lam.state;
        for (auto &e : scaled.entries) {
            e = e.times_root(1);
        }
        ok += image == scaled && inner(lam.state, lam.state) == RingElement::one(k);
    }
    return {ok == 6, std::to_string(ok) + "/6 levels k = 3..8 satisfy Lambda_k lambda_k = zeta lambda_k"};
}

Outcome decomposition_bijection() {
    std::mt19937_64 rng(77);
    std::size_t ok = 0, total = 0;
    for (int k = 2; k <= 6; ++k) {
        for (int n = 0; n < 10000; ++n) {
            const RingElement x = oracle::random_element(rng, k, 1000, 6);
            const auto [a, b] = decompose(x);
            const RingElement a2 = oracle::random_element(rng, k - 1, 1000, 6);
            const RingElement b2 = oracle::random_element(rng, k - 1, 1000, 6);
            const auto [a3, b3] = decompose(recompose(a2, b2));
            ok += recompose(a, b) == x && a3 == a2 && b3 == b2;
            ++total;
        }
    }
    return {ok == total && total == 50000,
            std::to_string(ok) + "/" + std::to_string(total) + " elements, both directions, k = 2..6"};
}

Outcome gate_identities() {
    int ok = 0, total = 0;
    for (int k = 3; k <= 6; ++k) {
        const std::int64_t t = std::int64_t{1} << (k - 3);
        const RingElement s = RingElement::inv_sqrt2(k);
        const RingMatrix h = RingMatrix::from_entries(k, 2, 2, {s, s, s, -s});
        const Circuit h_word =
            make_circuit(k, 1, {Gate::hprime(0), Gate::tpow(-t, 0), Gate::x(0), Gate::tpow(-t, 0), Gate::x(0)});
        ok += eval(h_word) == h && eval(expand_macros(h_word)) == h;
        ++total;

        GateList x_word = invert(GateList{Gate::hprime(0)});
        x_word.insert(x_word.end(), {Gate::s(0), Gate::s(0), Gate::hprime(0)});
        RingMatrix x(k, 2, 2);
        x(0, 1) = x(1, 0) = RingElement::one(k);
        ok += eval(make_circuit(k, 1, x_word)) == x && eval(expand_macros(make_circuit(k, 1, x_word))) == x;
        ++total;
    }
    for (int k = 3; k <= 8; ++k) {
        const Circuit prep = make_circuit(k, 1, {Gate::h(0), Gate::tpow(1, 0)});
        ok += eval(prep).col(0) == catalyst_state(k).state;
        ++total;
    }
    return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                             " (H and X identities for k = 3..6, catalyst preparation for k = 3..8)"};
}

Outcome named_gates() {
    const auto u = [](int n, GateList g) { return eval(make_circuit(3, n, std::move(g))); };
    const std::vector<std::tuple<std::string, RingMatrix, int>> gates = {
        {"T", u(1, {Gate::tpow(1, 0)}), 1}, {"H", u(1, {Gate::h(0)}), 1},          {"S", u(1, {Gate::s(0)}), 1},
        {"X", u(1, {Gate::x(0)}), 1},       {"CX", u(2, {Gate::cx(0, 1)}), 2}, {"CCX", u(3, {Gate::ccx(0, 1, 2)}), 3},
    };
    int ok = 0;
    std::string failed;
    for (const auto &[name, m, n] : gates) {
        ++g_runs;
        ReductionStats stats;
        try {
            const Circuit c = expand_macros(base_synthesize(m, n, &stats));
            g_stats += stats;
            if (restricted_equals(c, m)) {
                ++ok;
                continue;
            }
        } catch (const ReductionStuck &) {
            ++g_stuck;
        }
        failed += " " + name;
    }
    RingMatrix toffoli = RingMatrix::identity(3, 8);
    toffoli(6, 6) = toffoli(7, 7) = RingElement::zero(3);
    toffoli(6, 7) = toffoli(7, 6) = RingElement::one(3);
    const Circuit ccx = make_circuit(3, 3, {Gate::ccx(0, 1, 2)});
    const bool macro_ok = eval(ccx) == toffoli && eval(expand_macros(ccx)) == toffoli;
    std::string d = std::to_string(ok) + "/6 named gates round-trip; CCX macro " +
                    (macro_ok ? "equals" : "differs from") + " I_6 + X";
    if (!failed.empty()) {
        d += "; failed:" + failed;
    }
    return {ok == 6 && macro_ok, d};
}

Outcome progress() {
    std::ostringstream d;
    d << g_runs << " syntheses, " << g_stuck << " stuck, " << g_stats.columns << " columns, " << g_stats.passes
      << " passes, " << g_stats.non_monotone_passes << " passes without sde decrease";
    return {g_runs > 0 && g_stuck == 0 && g_stats.non_monotone_passes == 0 && g_stats.passes > 0, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"master round trip", master_round_trip},
        {"ancilla bound", ancilla_bound},
        {"catalytic condition", catalytic_condition},
        {"embedding unitarity", embedding_unitarity},
        {"catalyst eigen-relation", eigen_relation},
        {"decompose/recompose bijection", decomposition_bijection},
        {"gate identities", gate_identities},
        {"base case named gates", named_gates},
        {"reduction progress", progress},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu [%s] %s: %s (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
