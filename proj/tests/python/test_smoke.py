"""Smoke tests for the python bindings: one pass over every exposed surface."""

import math

import qgb


def approx(a, b, tol=1e-10):
    return abs(a - b) <= tol


def test_build_and_counts():
    board = qgb.build_qgb(4)
    assert board.num_qubits == 10
    assert board.num_clbits == 10
    assert len(board) == 54
    counts = board.gate_counts()
    assert counts == {"h": 4, "x": 1, "cx": 16, "cswap": 20, "reset": 4, "measure": 9}
    assert board.depth() > 0
    qgb.validate(board)
    assert qgb.gate_bound(4, "unbiased") == 54
    assert qgb.gate_bound(4, "biased") == 66
    assert qgb.gate_bound(4, "fine") == 61


def test_exact_distribution_is_binomial():
    dist = qgb.exact_distribution(qgb.build_qgb(2))
    assert approx(dist["000010"], 0.25)
    assert approx(dist["001000"], 0.50)
    assert approx(dist["100000"], 0.25)
    decoded = {}
    for bits, p in qgb.exact_distribution(qgb.build_qgb(4)).items():
        decoded[qgb.decode_one_hot(bits, 4)] = decoded.get(qgb.decode_one_hot(bits, 4), 0.0) + p
    pmf = qgb.binomial_pmf(4, 0.5)
    assert all(approx(decoded[k], pmf[k]) for k in range(5))


def test_qasm_round_trip():
    board = qgb.build_biased_qgb(4, "2pi/3")
    text = qgb.emit_qasm(board)
    assert "rx(2*pi/3) q[0];" in text
    back = qgb.parse_qasm(text)
    assert back == board
    assert qgb.qasm_token_equal(text, qgb.emit_qasm(back))
    try:
        qgb.parse_qasm("OPENQASM 2.0;\nqreg q[1];\ncreg c[1];\nccx q[0];\n")
    except qgb.QasmParseError:
        pass
    else:
        raise AssertionError("expected QasmParseError")


def test_shots_are_deterministic():
    board = qgb.build_qgb(2)
    a = qgb.run_shots(board, 500, seed=7)
    b = qgb.run_shots(board, 500, seed=7, workers=3)
    assert a == b
    assert sum(a.values()) == 500
    assert qgb.run_shot(board, 7, 0) == qgb.run_shot(board, 7, 0)


def test_stats_helpers():
    hist = qgb.run_shots(qgb.build_qgb(2), 400, seed=3)
    values = [qgb.decode_one_hot(bits, 2) for bits, c in hist.items() for _ in range(c)]
    assert len(values) == 400
    assert all(0 <= v <= 2 for v in values)
    sums = qgb.rescale_blocks([4] * 8 + [1], 8)
    assert sums == [32]
    stats = qgb.summary_stats([0, 4])
    assert approx(stats["mean"], 2.0) and approx(stats["variance"], 4.0)
    assert approx(qgb.total_variation({0: 1.0}, {0: 1.0}), 0.0)


def test_peg_state_and_decompose():
    amps = qgb.prefix_state(qgb.build_peg())
    assert approx(abs(amps[3]) ** 2, 0.5, 1e-12)
    assert approx(abs(amps[9]) ** 2, 0.5, 1e-12)
    peg = qgb.build_biased_peg("2pi/3")
    flat = qgb.decompose_cswap(peg)
    assert "cswap" not in flat.gate_counts()
    exact = qgb.exact_distribution(peg)
    exact_flat = qgb.exact_distribution(flat)
    assert all(approx(exact[k], exact_flat.get(k, 0.0)) for k in exact)


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
