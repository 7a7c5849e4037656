#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/errors.hpp"
#include "cyclo/io.hpp"
#include "cyclo/random.hpp"
#include "oracle.hpp"

using namespace cyclo;
using nlohmann::json;

TEST_CASE("element serialization") {
    const RingElement s = RingElement::inv_sqrt2(3);
    CHECK(element_to_json(s).dump() == R"({"k":3,"l":1,"c":["0","1","0","-1"]})");
    CHECK(element_from_json(json::parse(R"({"k":3,"l":1,"c":["2","0","0","0"]})")) == RingElement::one(3));
    CHECK(element_from_json(json::parse(R"({"k":3,"l":0,"c":[1,0,0,0]})")) == RingElement::one(3));

    std::mt19937_64 rng(1);
    for (int k = 1; k <= 6; ++k) {
        for (int n = 0; n < 20; ++n) {
            const RingElement x = oracle::random_element(rng, k, 1000000, 8);
            CHECK(element_from_json(json::parse(element_to_json(x).dump())) == x);
        }
    }
    const RingElement big = RingElement::make(2, {Integer("123456789012345678901234567890"), Integer(-1)}, 0);
    CHECK(element_from_json(json::parse(element_to_json(big).dump())) == big);
}

TEST_CASE("element parse errors") {
    CHECK_THROWS_AS(element_from_json(json::parse(R"({"k":3,"l":0,"c":["1","0","0"]})")), ParseError);
    CHECK_THROWS_AS(element_from_json(json::parse(R"({"k":3,"c":["1","0","0","0"]})")), ParseError);
    CHECK_THROWS_AS(element_from_json(json::parse(R"({"k":3,"l":-1,"c":["1","0","0","0"]})")), ParseError);
    CHECK_THROWS_AS(element_from_json(json::parse(R"({"k":3,"l":0,"c":["1.5","0","0","0"]})")), ParseError);
    CHECK_THROWS_AS(element_from_json(json::parse(R"({"k":3,"l":0,"c":["x","0","0","0"]})")), ParseError);
    CHECK_THROWS_AS(element_from_json(json::parse(R"([1,2])")), ParseError);
}

TEST_CASE("denominators other than powers of two are rejected") {
    CHECK_THROWS_AS(element_from_json(json::parse(R"({"k":3,"l":0,"c":["1","0","0","0"],"den":"3"})")),
                    InvalidInput);
    const RingElement quarter = element_from_json(json::parse(R"({"k":3,"l":0,"c":["2","0","0","0"],"den":"8"})"));
    CHECK(quarter == RingElement::make(3, {1, 0, 0, 0}, 2));
}

TEST_CASE("unitary files") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const RingMatrix u = eval(random_word(4, 2, 20, seed));
        const std::string text = write_unitary(u);
        CHECK(read_unitary(text) == u);
        CHECK(write_unitary(read_unitary(text)) == text);
    }
    const RingMatrix id = RingMatrix::identity(3, 2);
    CHECK(json::parse(write_unitary(id))["dim"] == 2);
}

TEST_CASE("unitary file rejections") {
    const std::string one = R"({"k":3,"l":0,"c":["1","0","0","0"]})";
    const std::string zero = R"({"k":3,"l":0,"c":["0","0","0","0"]})";
    const std::string zero4 = R"({"k":4,"l":0,"c":["0","0","0","0","0","0","0","0"]})";
    auto doc = [](int dim, const std::string &rows) {
        return R"({"k":3,"dim":)" + std::to_string(dim) + R"(,"entries":)" + rows + "}";
    };
    CHECK(read_unitary(doc(1, "[[" + one + "]]")) == RingMatrix::identity(3, 1));
    CHECK_THROWS_AS(read_unitary(doc(3, "[[" + one + "," + zero + "," + zero + "],[" + zero + "," + one + "," + zero +
                                            "],[" + zero + "," + zero + "," + one + "]]")),
                    InvalidInput);
    CHECK_THROWS_AS(read_unitary(doc(2, "[[" + one + "," + zero + "],[" + zero + "]]")), InvalidInput);
    CHECK_THROWS_AS(read_unitary(doc(2, "[[" + one + "," + zero + "]]")), InvalidInput);
    CHECK_THROWS_AS(read_unitary(doc(2, "[[" + one + "," + zero4 + "],[" + zero + "," + one + "]]")), InvalidInput);
    CHECK_THROWS_AS(read_unitary("{not json"), ParseError);
    CHECK_THROWS_AS(read_unitary(R"({"k":3,"entries":[]})"), ParseError);
    CHECK_THROWS_AS(read_unitary_file("/nonexistent/u.json"), ParseError);
}

TEST_CASE("circuit text") {
    Circuit c = make_circuit(4, 3, {Gate::hprime(0), Gate::tpow(-3, 1), Gate::cx(2, 0), Gate::h(1), Gate::s(2),
                                    Gate::sdg(0), Gate::x(1), Gate::ccx(0, 1, 2)});
    c.num_inputs = 2;
    const std::string kept = write_circuit(c, true);
    CHECK(kept.rfind("CYCLO 1\ndegree 16\nqubits 3\ninputs 2\nHP 0\nT -3 1\nCX 2 0\nH 1\n", 0) == 0);
    CHECK(read_circuit(kept) == c);

    const Circuit expanded = read_circuit(write_circuit(c));
    for (const Gate &g : expanded.gates) {
        CHECK(is_primitive(g.kind));
    }
    CHECK(expanded == expand_macros(c));
    CHECK(eval(expanded) == eval(c));

    const Circuit w = random_word(5, 3, 40, 9);
    CHECK(read_circuit(write_circuit(w)) == w);
    CHECK(write_circuit(read_circuit(write_circuit(w))) == write_circuit(w));
}

TEST_CASE("circuit comments and whitespace") {
    const Circuit c = read_circuit("# header comment\nCYCLO 1\n\ndegree 8   # k = 3\nqubits 2\ninputs 1\n  CX 0 1\nT 1 1 # phase\n");
    CHECK(c.level == 3);
    CHECK(c.num_qubits == 2);
    CHECK(c.num_inputs == 1);
    CHECK(c.gates == GateList{Gate::cx(0, 1), Gate::tpow(1, 1)});
}

TEST_CASE("circuit parse errors") {
    const std::string head = "CYCLO 1\ndegree 8\nqubits 2\ninputs 2\n";
    CHECK_THROWS_AS(read_circuit("CYCLO 2\ndegree 8\nqubits 1\ninputs 1\n"), ParseError);
    CHECK_THROWS_AS(read_circuit("CYCLO 1\ndegree 12\nqubits 1\ninputs 1\n"), ParseError);
    CHECK_THROWS_AS(read_circuit("CYCLO 1\nqubits 1\ndegree 8\ninputs 1\n"), ParseError);
    CHECK_THROWS_AS(read_circuit("CYCLO 1\ndegree 8\nqubits 1\ninputs 2\n"), ParseError);
    CHECK_THROWS_AS(read_circuit(head + "FOO 0\n"), ParseError);
    CHECK_THROWS_AS(read_circuit(head + "CX 0\n"), ParseError);
    CHECK_THROWS_AS(read_circuit(head + "CX 0 0\n"), ParseError);
    CHECK_THROWS_AS(read_circuit(head + "X 2\n"), ParseError);
    CHECK_THROWS_AS(read_circuit(head + "T x 0\n"), ParseError);
    CHECK_THROWS_AS(read_circuit(head + "HP -1\n"), ParseError);
    CHECK_THROWS_AS(read_circuit(""), ParseError);
}

TEST_CASE("random words are reproducible and in the primitive set") {
    const Circuit a = random_word(4, 3, 50, 123);
    CHECK(a == random_word(4, 3, 50, 123));
    CHECK_FALSE(a == random_word(4, 3, 50, 124));
    for (const Gate &g : a.gates) {
        CHECK(is_primitive(g.kind));
        if (g.kind == GateKind::TPow) {
            CHECK(g.power >= 1);
            CHECK(g.power <= 15);
        }
    }
    for (const Gate &g : random_word(3, 1, 50, 5).gates) {
        CHECK(g.kind != GateKind::CX);
    }
    CHECK_THROWS(random_word(2, 1, 5, 1));

    Rng rng(42);
    std::vector<int> hist(5);
    for (int n = 0; n < 5000; ++n) {
        ++hist[rng.below(5)];
    }
    for (int h : hist) {
        CHECK(h > 800);
    }
}
