"""Smoke test for the logarr extension module.

Build and install with
    pip install maturin
    maturin build --release -m crates/py/Cargo.toml -o dist
    pip install dist/logarr-*.whl
then run `python python/smoke_test.py`.
"""

import json
from fractions import Fraction

import logarr


def main():
    a = logarr.Arrangement([[1, 0], [0, 1], [1, -1]], name="3lines")
    assert len(a) == 3 and a.dim == 2 and a.rank == 2
    assert a.char_poly() == [2, -3, 1]
    assert a.tutte() == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    assert a.beta() == 1
    assert a.bridges() == []
    assert logarr.cycle_class(a) == {(1, 1): 1, (0, 2): 1}

    k, m, n = logarr.hilbert_series(a)
    assert (m, n) == (2, 3)
    assert k == {(0, 0): 1, (0, 1): -1, (1, 1): -1, (1, 2): 1}

    for check in ["main", "recurrence", "delres", "tutte-spec", "dcplx"]:
        r = logarr.verify(a, check, tame=True)
        assert r.passed, (check, r.to_json())
    assert json.loads(logarr.verify(a, "main").to_json())["lhs"]["class"] == "h*k + k^2"

    b = logarr.Arrangement([[Fraction(1, 2), 0, 0], ["0", "1", "0"], [1, -1, 0], [0, 0, 1]], name="bridge")
    assert b.bridges() == [3]
    assert b.components() == [[0, 1, 2], [3]]
    deletion, restriction = b.restrict(3)
    assert len(deletion) == 3 and restriction.dim == 2

    assert logarr.cycle_class(logarr.Arrangement.boolean(3)) == {}
    assert logarr.verify(logarr.Arrangement.boolean(2), "monic").status == "skipped"

    braid, tame = logarr.fixture("braid4")
    assert tame and not braid.is_essential()
    assert braid.essentialize().dim == 3
    assert braid.lattice_rank_sizes() == [1, 6, 7, 1]
    assert "ziegler1" in logarr.fixture_names()
    assert "hs-oracle" in logarr.check_names()

    try:
        logarr.Arrangement([[1, 0], [2, 0]])
    except ValueError:
        pass
    else:
        raise AssertionError("parallel rows accepted")
    try:
        logarr.verify(a, "nonsense")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown check accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
