#!/usr/bin/env python3
"""Smoke test for the tcores_py extension module.

Build the module first, then run from the repo root:

    cargo build -p tcores-py --release
    cp target/release/libtcores_py.so python/tcores_py.so
    python3 python/smoke_test.py
"""

import sys

sys.path.insert(0, "python")

import tcores_py as tc


def main():
    pi = tc.Partition([4, 2])
    assert pi.norm() == 6
    assert pi.conjugate().parts() == [2, 2, 1, 1]
    assert pi.conjugate().conjugate() == pi
    assert tc.Partition.parse("4,2") == pi

    v = tc.gbg_rank(pi, 2)
    assert v.is_zero() and v.coeffs() == [0], v.pretty()

    census = tc.nu(3, 4)
    assert census["count"] == 5
    assert census["bound"] == 5
    assert census["equality"] is True

    rows = tc.table1()
    assert len(rows) == 27
    values = {value.pretty() for _, _, value in rows}
    assert len(values) == 5

    for _, nvec, value in rows:
        assert tc.gbg_formula(nvec, 3) == value
        assert tc.gbg_rank(nvec.to_core(), 3) == value

    j, jt = tc.counterexample_family(4, 5)
    holds, forced = tc.lemma14_decide(4, j, jt)
    assert holds and not forced and j != jt

    report = tc.check_identity("4.13", order=60)
    assert report["holds"], report
    report = tc.check_identity("4.39-tail.0", order=30)
    assert report["holds"], report
    assert len(tc.registry_ids()) == 33

    # t-core generating function: 3-core counts start 1,1,2,0,2,...
    assert tc.core_generating_function(3, 6)[:5] == [1, 1, 2, 0, 2]

    pi = tc.Partition([6, 4, 1])
    core, quotient = tc.decompose(pi, 3)
    assert core.parts() == [3, 1, 1]
    assert tc.recompose(core, quotient, 3) == pi

    cores = tc.st_cores(3, 4)
    assert len(cores) == 5
    assert all(c.is_t_core(3) and c.is_t_core(4) for c in cores)

    assert tc.olsson_check(3, 4, norm_bound=40)

    assert tc.gbg_injectivity(3, 4)["injective"]
    bad = tc.gbg_injectivity(4, 7)
    assert not bad["injective"]
    fibers = {value.pretty(): [p.parts() for p in pis] for value, pis in bad["collisions"]}
    assert [[], [3, 2, 1]] == sorted(fibers["0"], key=len)

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
