#include <doctest.h>

#include "qgb/builders.hpp"
#include "qgb/circuit.hpp"
#include "qgb/decompose.hpp"
#include "qgb/errors.hpp"
#include "qgb/qasm.hpp"
#include "qgb/simulate.hpp"

#include "test_helpers.hpp"

using namespace qgb;

TEST_CASE("validate accepts an empty circuit") {
    Circuit c(1, 0);
    CHECK_FALSE(validate(c).has_value());
}

TEST_CASE("validate rejects duplicate qubit operands") {
    Circuit c(2, 0);
    c.cx(0, 0);
    const auto issue = validate(c);
    REQUIRE(issue.has_value());
    CHECK(issue->op_index == 0);
    CHECK(issue->rule == "duplicate-qubit");
}

TEST_CASE("validate catches out-of-range indices") {
    Circuit c(2, 1);
    c.h(0);
    c.x(2);
    const auto issue = validate(c);
    REQUIRE(issue.has_value());
    CHECK(issue->op_index == 1);
    CHECK(issue->rule == "qubit-range");

    Circuit m(2, 1);
    m.measure(0, 3);
    CHECK(validate(m)->rule == "clbit-range");
}

TEST_CASE("validate enforces the measure/clbit pairing") {
    Circuit c(1, 1);
    c.ops.push_back({GateKind::Measure, {0}, {}, {}});
    CHECK(validate(c)->rule == "measure-clbit");

    Circuit d(1, 1);
    d.ops.push_back({GateKind::H, {0}, 0, {}});
    CHECK(validate(d)->rule == "measure-clbit");
}

TEST_CASE("validate enforces the rx/angle pairing") {
    Circuit c(1, 0);
    c.ops.push_back({GateKind::Rx, {0}, {}, {}});
    CHECK(validate(c)->rule == "rx-angle");

    Circuit d(1, 0);
    d.ops.push_back({GateKind::H, {0}, {}, Angle::pi_ratio(1, 2)});
    CHECK(validate(d)->rule == "rx-angle");
}

TEST_CASE("parsed reference circuit validates clean") {
    const Circuit c = qasm::lower(qasm::parse(qgb_test::corpus_text("qgb4_unbiased.qasm")));
    CHECK_FALSE(validate(c).has_value());
}

TEST_CASE("gate_count on an empty circuit is all zeros") {
    const GateCounts counts = gate_count(Circuit(1, 0));
    CHECK(counts.by_kind.empty());
    CHECK(counts.total_active == 0);
    CHECK(counts.barriers == 0);
}

TEST_CASE("gate_count tallies the unbiased reference circuit") {
    const Circuit c = qasm::lower(qasm::parse(qgb_test::corpus_text("qgb4_unbiased.qasm")));
    const GateCounts counts = gate_count(c);
    CHECK(counts.by_kind.at(GateKind::Cswap) == 20);
    CHECK(counts.by_kind.at(GateKind::Cx) == 16);
    CHECK(counts.by_kind.at(GateKind::H) == 4);
    CHECK(counts.by_kind.at(GateKind::Reset) == 4);
    CHECK(counts.by_kind.at(GateKind::X) == 1);
    CHECK(counts.by_kind.at(GateKind::Measure) == 9);
    CHECK(counts.total_active == 54);
    CHECK(counts.barriers == 0);
}

TEST_CASE("gate_count tallies the fine-grained reference circuit") {
    const Circuit c = qasm::lower(qasm::parse(qgb_test::corpus_text("qgb4_fine_grained.qasm")));
    const GateCounts counts = gate_count(c);
    CHECK(counts.by_kind.at(GateKind::Cswap) == 20);
    CHECK(counts.by_kind.at(GateKind::Cx) == 16);
    CHECK(counts.by_kind.at(GateKind::Rx) == 10);
    CHECK(counts.by_kind.at(GateKind::Reset) == 16);
    CHECK(counts.by_kind.at(GateKind::X) == 1);
    CHECK(counts.by_kind.at(GateKind::Measure) == 9);
    CHECK(counts.by_kind.at(GateKind::Barrier) == 6);
    CHECK(counts.total_active == 72);
    CHECK(counts.barriers == 6);
}

TEST_CASE("gate_count matches a plain text tally of the corpus") {
    // Independent route: count statements straight off the source text.
    for (const char* name : {"qgb4_unbiased.qasm", "qgb4_biased.qasm", "qgb4_fine_grained.qasm"}) {
        const std::string text = qgb_test::corpus_text(name);
        std::map<std::string, int> text_tally;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            const auto start = line.find_first_not_of(" \t");
            if (start == std::string::npos) continue;
            const auto end = line.find_first_of(" (", start);
            const std::string word = line.substr(start, end - start);
            if (word == "OPENQASM" || word == "include" || word == "qreg" || word == "creg")
                continue;
            ++text_tally[word];
        }

        const GateCounts counts = gate_count(qasm::lower(qasm::parse(text)));
        for (const auto& [kind, count] : counts.by_kind) {
            CAPTURE(name);
            CAPTURE(kind_name(kind));
            CHECK(text_tally.at(kind_name(kind)) == static_cast<int>(count));
        }
        CHECK(text_tally.size() == counts.by_kind.size());
    }
}

TEST_CASE("depth of trivial layers") {
    Circuit c(2, 0);
    c.h(0);
    CHECK(depth(c) == 1);
    c.x(1);
    CHECK(depth(c) == 1); // disjoint operands share a layer
    c.cx(0, 1);
    CHECK(depth(c) == 2);
}

TEST_CASE("depth of the peg circuit is the hand-layered value") {
    // H(L1) X(L1) CSWAP(L2) CX(L3) CSWAP(L4) M1(L3) M3(L5)
    CHECK(depth(build_peg()) == 5);
}

TEST_CASE("barrier fences layers without adding depth") {
    Circuit c(2, 0);
    c.h(0);
    CHECK(depth(c) == 1);
    c.barrier({0, 1});
    CHECK(depth(c) == 1);
    c.x(1); // would share layer 1 if not fenced
    CHECK(depth(c) == 2);
}

TEST_CASE("decompose_cswap expands one cswap into 17 ops with 8 cx") {
    Circuit c(3, 0);
    c.cswap(0, 1, 2);
    const Circuit d = decompose_cswap(c);
    CHECK(d.ops.size() == 17);
    CHECK(gate_count(d).by_kind.at(GateKind::Cx) == 8);
    CHECK_FALSE(validate(d).has_value());
}

TEST_CASE("decompose_cswap on the peg gives 2*17 + 3 active ops before measures") {
    const Circuit d = decompose_cswap(build_peg());
    const GateCounts counts = gate_count(d);
    CHECK(counts.total_active - counts.by_kind.at(GateKind::Measure) == 2 * 17 + 3);
}

TEST_CASE("decompose_cswap leaves cswap-free circuits unchanged") {
    Circuit c(2, 1);
    c.h(0).cx(0, 1).measure(1, 0);
    CHECK(decompose_cswap(c) == c);
}

TEST_CASE("depth does not shrink under decomposition") {
    for (int n = 1; n <= 4; ++n) {
        const Circuit c = build_qgb(n);
        CHECK(depth(decompose_cswap(c)) >= depth(c));
    }
    const Circuit peg = build_biased_peg(Angle::pi_ratio(2, 3));
    CHECK(depth(decompose_cswap(peg)) >= depth(peg));
}

TEST_CASE("angle keeps the exact fraction and the float consistent") {
    const Angle a = Angle::pi_ratio(2, 3);
    REQUIRE(a.exact().has_value());
    CHECK(a.exact()->num == 2);
    CHECK(a.exact()->den == 3);
    CHECK(a.value() == doctest::Approx(2.0943951023931953).epsilon(1e-12));
    CHECK(a.to_qasm() == "2*pi/3");

    CHECK(Angle::pi_ratio(4, 6) == a); // stored in lowest terms
    CHECK(Angle::pi_ratio(1, 2).to_qasm() == "pi/2");
    CHECK(Angle::pi_ratio(1, 1).to_qasm() == "pi");
    CHECK(Angle::pi_ratio(-1, 4).to_qasm() == "-pi/4");
    CHECK(Angle::pi_ratio(3, 1).to_qasm() == "3*pi");
    CHECK_FALSE(Angle::radians(0.5).exact().has_value());
}
