"""Smoke test for the trapspaces_py extension module.

Build and install it first, e.g. `pip install -e crates/python --no-build-isolation`,
then run `python python/smoke_test.py`.
"""

import trapspaces_py as ts


def main():
    f = ts.Network.fixture("examples/f_ex3")
    assert f.dimension == 3
    assert f.apply("000") == "110"
    assert f.principal_trapspace("000") == "**0"
    assert f.principal_trapspace("111") == "11*"
    assert len(f.trapspaces()) == 9
    assert f.minimal_trapspaces() == ["100", "110", "101"]
    assert not f.classify()["trapping"]

    closure = f.trapping_closure()
    assert closure.classify()["trapping"]
    assert ts.trapspace_equivalence(f, closure) == [True] * 5
    assert closure == ts.Network.fixture("examples/f_ex3_closure")

    same = ts.Network.from_truth_table(f.to_truth_table())
    assert same == f and same.table == f.table

    g = ts.Network.from_expressions("x1, x1 | x2\nx2, !x1 & x2\n")
    assert g.table == [0, 1, 3, 1]

    lt = ts.Network.generate("long-transient", 5)
    assert lt.transient_and_period() == (5, 2)
    assert ts.Network.generate("negation", 3, seed=1).classify()["marseille"]

    dot = f.dot("tg", layered=True)
    assert '"001" -> "111" [color=orange];' in dot

    networks, checks, findings = ts.verify(2)
    assert networks == 256 and checks > 0 and findings == []

    try:
        ts.Network(2, [0, 1, 2])
    except ValueError as e:
        print("rejected short table:", e)
    else:
        raise AssertionError("short table accepted")

    print("smoke test passed:", f, "with", len(f.trapspaces()), "trapspaces")


if __name__ == "__main__":
    main()
