#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/circuit.hpp"
#include "cyclo/embedding.hpp"
#include "cyclo/random.hpp"
#include "oracle.hpp"

using namespace cyclo;

namespace {

const std::vector<GateKind> kAllKinds = {GateKind::HPrime, GateKind::TPow, GateKind::S,   GateKind::Sdg,
                                         GateKind::X,      GateKind::CX,   GateKind::CCX, GateKind::H};

// Random word over every gate kind, macros included.
Circuit random_macro_word(int level, int n, std::size_t length, std::uint64_t seed) {
    Rng rng(seed);
    Circuit c = make_circuit(level, n, {});
    while (c.gates.size() < length) {
        const GateKind kind = kAllKinds[rng.below(kAllKinds.size())];
        const int a = arity(kind);
        if (a > n) {
            continue;
        }
        std::vector<int> wires;
        while (static_cast<int>(wires.size()) < a) {
            const int w = static_cast<int>(rng.below(n));
            if (std::find(wires.begin(), wires.end(), w) == wires.end()) {
                wires.push_back(w);
            }
        }
        Gate g{kind, kind == GateKind::TPow ? rng.between(-40, 40) : 0, {0, 0, 0}};
        std::copy(wires.begin(), wires.end(), g.qubits.begin());
        c.gates.push_back(g);
    }
    return c;
}

RingMatrix h_matrix(int k) {
    const RingElement s = RingElement::inv_sqrt2(k);
    return RingMatrix::from_entries(k, 2, 2, {s, s, s, -s});
}

}  // namespace

TEST_CASE("gate kinds") {
    CHECK(is_primitive(GateKind::HPrime));
    CHECK(is_primitive(GateKind::TPow));
    CHECK(is_primitive(GateKind::CX));
    CHECK_FALSE(is_primitive(GateKind::H));
    CHECK(arity(GateKind::CCX) == 3);
    CHECK(gate_name(GateKind::Sdg) == "SDG");
}

TEST_CASE("every gate matrix is unitary and matches its definition") {
    for (int k = 3; k <= 6; ++k) {
        for (GateKind kind : kAllKinds) {
            Gate g{kind, 3, {0, 1, 2}};
            const RingMatrix m = gate_matrix(g, k);
            CHECK(is_unitary(m));
            const Circuit c = make_circuit(k, arity(kind), {g});
            CHECK(oracle::close(oracle::to_complex(m), oracle::simulate(c)));
        }
    }
}

TEST_CASE("eval examples") {
    const RingMatrix cx = eval(make_circuit(3, 2, {Gate::cx(0, 1)}));
    RingMatrix expected(3, 4, 4);
    for (std::size_t r : {0, 1}) {
        expected(r, r) = RingElement::one(3);
    }
    expected(2, 3) = RingElement::one(3);
    expected(3, 2) = RingElement::one(3);
    CHECK(cx == expected);

    for (int k = 2; k <= 6; ++k) {
        const RingMatrix s = eval(make_circuit(k, 1, {Gate::tpow(std::int64_t{1} << (k - 2), 0)}));
        CHECK(s == RingMatrix::diagonal({RingElement::one(k), RingElement::root_of_unity(2, 1).lift(k)}));
    }

    // X = H' S^2 H'^dagger
    for (int k = 3; k <= 6; ++k) {
        GateList gates = invert(GateList{Gate::hprime(0)});
        gates.push_back(Gate::s(0));
        gates.push_back(Gate::s(0));
        gates.push_back(Gate::hprime(0));
        CHECK(eval(make_circuit(k, 1, gates)) == eval(make_circuit(k, 1, {Gate::x(0)})));
        CHECK(eval(expand_macros(make_circuit(k, 1, gates))) == eval(make_circuit(k, 1, {Gate::x(0)})));
    }
}

TEST_CASE("H rewriting identity") {
    for (int k = 3; k <= 6; ++k) {
        const std::int64_t t = std::int64_t{1} << (k - 3);
        const Circuit c = make_circuit(k, 1, {Gate::hprime(0), Gate::tpow(-t, 0), Gate::x(0), Gate::tpow(-t, 0), Gate::x(0)});
        CHECK(eval(c) == h_matrix(k));
        CHECK(eval(expand_macros(c)) == h_matrix(k));
        CHECK(eval(make_circuit(k, 1, {Gate::h(0)})) == h_matrix(k));
    }
}

TEST_CASE("macro expansion") {
    for (int k = 3; k <= 6; ++k) {
        const Circuit h = expand_macros(make_circuit(k, 1, {Gate::h(0)}));
        for (const Gate &g : h.gates) {
            CHECK(is_primitive(g.kind));
        }
        CHECK(eval(h) == h_matrix(k));

        const Circuit s = expand_macros(make_circuit(k, 1, {Gate::s(0)}));
        REQUIRE(s.gates.size() == 1);
        CHECK(s.gates[0] == Gate::tpow(std::int64_t{1} << (k - 2), 0));

        RingMatrix toffoli = RingMatrix::identity(k, 8);
        toffoli(6, 6) = RingElement::zero(k);
        toffoli(7, 7) = RingElement::zero(k);
        toffoli(6, 7) = RingElement::one(k);
        toffoli(7, 6) = RingElement::one(k);
        const Circuit ccx = expand_macros(make_circuit(k, 3, {Gate::ccx(0, 1, 2)}));
        CHECK(eval(ccx) == toffoli);
        CHECK(eval(make_circuit(k, 3, {Gate::ccx(0, 1, 2)})) == toffoli);
    }
    CHECK_THROWS(expand_macros(make_circuit(2, 1, {Gate::h(0)})));
}

TEST_CASE("exact evaluators agree with each other and with the numeric simulator") {
    for (int k = 3; k <= 5; ++k) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const Circuit c = random_macro_word(k, 3, 25, seed * 10 + k);
            const RingMatrix u = eval(c);
            CHECK(is_unitary(u));
            CHECK(u == eval_serial(c));
            CHECK(u == eval_columns(c, std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7}, false));
            CHECK(oracle::close(oracle::to_complex(u), oracle::simulate(c), 1e-8L));
            CHECK(eval(expand_macros(c)) == u);
        }
    }
}

TEST_CASE("restricted evaluation") {
    Circuit c = random_macro_word(4, 3, 20, 77);
    c.num_inputs = 2;
    const RingMatrix r = eval_restricted(c);
    CHECK(r == block_column_restrict(eval(c), 1));
    CHECK(r == eval_restricted(c, false));
}

TEST_CASE("lift_circuit") {
    const Circuit t = make_circuit(3, 1, {Gate::tpow(1, 0)});
    CHECK(lift_circuit(t, 4).gates[0] == Gate::tpow(2, 0));
    CHECK(lift_circuit(make_circuit(3, 2, {}), 5).gates.empty());
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Circuit c = random_macro_word(3, 2, 20, seed);
        CHECK(eval(lift_circuit(c, 5)) == lift_matrix(eval(c), 5));
    }
    CHECK_THROWS(lift_circuit(make_circuit(4, 1, {}), 3));
}

TEST_CASE("invert") {
    const GateList t = invert(GateList{Gate::tpow(1, 0)});
    REQUIRE(t.size() == 1);
    CHECK(t[0] == Gate::tpow(-1, 0));
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Circuit c = random_macro_word(4, 3, 20, seed + 40);
        const Circuit inv = invert(c);
        CHECK(eval(inv) == dagger(eval(c)));
        CHECK(eval(invert(inv)) == eval(c));
        CHECK(is_identity(matmul(eval(c), eval(inv))));
    }
}

TEST_CASE("catalyst preparation") {
    for (int k = 3; k <= 8; ++k) {
        const Circuit prep = make_circuit(k, 1, {Gate::h(0), Gate::tpow(1, 0)});
        CHECK(eval(prep).col(0) == catalyst_state(k).state);
    }
}

TEST_CASE("global phase word") {
    for (int p = 1; p < 8; ++p) {
        const Circuit c = make_circuit(3, 1, {Gate::tpow(p, 0), Gate::x(0), Gate::tpow(p, 0), Gate::x(0)});
        CHECK(eval(c) == RingElement::root_of_unity(3, p) * RingMatrix::identity(3, 2));
    }
}

TEST_CASE("validation and counts") {
    CHECK_THROWS(make_circuit(3, 2, {Gate::cx(0, 0)}).validate());
    CHECK_THROWS(make_circuit(3, 2, {Gate::x(2)}).validate());
    CHECK_THROWS(eval(make_circuit(3, 1, {Gate::cx(0, 1)})));
    const auto counts = gate_counts({Gate::hprime(0), Gate::hprime(1), Gate::cx(0, 1)});
    CHECK(counts.at("HP") == 2);
    CHECK(counts.at("CX") == 1);
}
