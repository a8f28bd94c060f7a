import itertools
import os
import random
import subprocess
import sys

import numpy as np
import pytest

from oracles import k_independence_brute
from polyind import Graph, accel, base_graph, build_extremal

PY = accel.kernels(jit=False)
JIT = accel.kernels(jit=True)


def random_graphs(seed, count, nmax=14):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, nmax)
        pairs = list(itertools.combinations(range(n), 2))
        yield Graph(n, [e for e in pairs if rng.random() < rng.uniform(0.1, 0.6)])


def test_env_flag_selects_python(monkeypatch):
    monkeypatch.setenv("POLYIND_DISABLE_JIT", "1")
    assert accel.kernels().jit is False
    monkeypatch.setenv("POLYIND_DISABLE_JIT", "0")
    assert accel.kernels().jit is True


def test_paths_are_distinct():
    assert PY.jit is False and JIT.jit is True
    assert PY.max_independent_mask is not JIT.max_independent_mask


def test_mis_paths_agree():
    for g in random_graphs(1, 80):
        a = accel.to_unsigned(PY.max_independent_mask(accel.as_masks(g.masks, False), g.n))
        b = accel.to_unsigned(JIT.max_independent_mask(accel.as_masks(g.masks, True), g.n))
        assert bin(a).count("1") == bin(b).count("1") == k_independence_brute(g.n, g.edges, 1)


def test_mis_uses_bit_63():
    # 64 isolated vertices: the answer sets the sign bit under numba
    masks = [0] * 64
    b = accel.to_unsigned(JIT.max_independent_mask(accel.as_masks(masks, True), 64))
    assert b == (1 << 64) - 1


def test_distance_paths_agree():
    for g in random_graphs(2, 40, nmax=20):
        ip, ix = g.csr
        assert np.array_equal(PY.bfs_distances(ip, ix, g.n), JIT.bfs_distances(ip, ix, g.n))


@pytest.mark.parametrize("t", [1, 2, 3])
def test_cut_paths_agree(t):
    for g in random_graphs(3, 40):
        if g.n <= t:
            continue
        ip, ix = g.csr
        assert tuple(PY.vertex_cut(ip, ix, g.n, t))[0] == tuple(JIT.vertex_cut(ip, ix, g.n, t))[0]


def test_refine_paths_agree():
    for g in random_graphs(4, 40):
        ip, ix = g.csr
        colors = np.zeros(g.n, dtype=np.int64)
        c1, t1 = PY.refine_colors(ip, ix, g.n, colors)
        c2, t2 = JIT.refine_colors(ip, ix, g.n, colors)
        assert np.array_equal(c1, c2) and int(t1) == int(t2)


def test_four_cycle_paths_agree():
    graphs = [base_graph("cube").graph, build_extremal(1, 9).result.graph, build_extremal(3, 3).result.graph]
    graphs += list(random_graphs(5, 30, nmax=10))
    for g in graphs:
        ip, ix = g.csr
        a = PY.separating_4cycle(ip, ix, g.n)
        b = JIT.separating_4cycle(ip, ix, g.n)
        assert np.array_equal(a, b)


def test_large_graph_traversal():
    g = build_extremal(7, 12).result.graph
    assert g.n > 64
    ip, ix = g.csr
    d = JIT.bfs_distances(ip, ix, g.n)
    assert (d >= 0).all()
    assert JIT.vertex_cut(ip, ix, g.n, 3)[0] == -1


def test_fallback_end_to_end():
    code = ("from polyind import accel, build_extremal, verify_certificate\n"
            "assert accel.kernels().jit is False\n"
            "rep = verify_certificate(build_extremal(2, 3).result, measure=True)\n"
            "print(rep.independence, rep.certificate_valid)\n")
    env = dict(os.environ, POLYIND_DISABLE_JIT="1")
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.split() == ["3", "True"]
