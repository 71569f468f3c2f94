"""Backend dispatch and pure-vs-compiled parity.

The compiled extension must be witness-for-witness identical to the pure
reference on every input; these tests compare them directly whenever the
extension is importable.
"""

import os
import subprocess
import sys
from array import array
from pathlib import Path

import pytest

import ringlab as rl
from ringlab import kernels
from ringlab.kernels import pure


def _subprocess_env(**overrides):
    """Propagate the package's import path so these tests also work from
    an uninstalled checkout."""
    src = str(Path(rl.__file__).resolve().parent.parent)
    env = dict(os.environ, **overrides)
    existing = env.get("PYTHONPATH", "")
    env["PYTHONPATH"] = src + (os.pathsep + existing if existing else "")
    return env


def test_backend_reports_a_known_name():
    assert kernels.backend() in ("pure", "compiled")


def test_env_forces_pure_backend():
    code = (
        "from ringlab import kernels; print(kernels.backend())"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        env=_subprocess_env(RINGLAB_KERNEL="pure"),
        capture_output=True,
        text=True,
    )
    assert out.stdout.strip() == "pure"


def test_env_rejects_unknown_backend():
    code = "import ringlab.kernels"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env=_subprocess_env(RINGLAB_KERNEL="fortran"),
        capture_output=True,
        text=True,
    )
    assert out.returncode != 0
    assert "RINGLAB_KERNEL" in out.stderr


compiled = kernels.backends().get("compiled")
needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernels not built in this checkout"
)


@needs_compiled
def test_axiom_witness_parity_on_valid_corpus(corpus):
    for s in corpus:
        ring = s.ring
        args = (ring.order, ring.add_flat, ring.mul_flat, ring.zero, ring.one)
        assert pure.ring_axiom_witness(*args) is None
        assert compiled.ring_axiom_witness(*args) is None


@needs_compiled
@pytest.mark.parametrize("cell", [(1, 1), (2, 3), (0, 2)])
def test_axiom_witness_parity_on_tampered_tables(cell):
    ring = rl.zn(6)
    i, j = cell
    flat = list(ring.mul_flat)
    flat[i * 6 + j] = (flat[i * 6 + j] + 1) % 6
    tampered = array("i", flat)
    got_pure = pure.ring_axiom_witness(6, ring.add_flat, tampered, 0, 1)
    got_compiled = compiled.ring_axiom_witness(6, ring.add_flat, tampered, 0, 1)
    assert got_pure == got_compiled
    assert got_pure is not None


@needs_compiled
def test_inverse_table_parity(corpus):
    for s in corpus:
        ring = s.ring
        assert pure.inverse_table(
            ring.order, ring.mul_flat, ring.one
        ) == compiled.inverse_table(ring.order, ring.mul_flat, ring.one)


@needs_compiled
def test_radical_members_parity(corpus):
    for s in corpus:
        ring = s.ring
        mask = rl.units(ring)
        is_unit = bytearray(ring.order)
        for a in mask:
            is_unit[a] = 1
        args = (
            ring.order,
            ring.add_flat,
            ring.mul_flat,
            ring.neg_flat,
            ring.one,
            is_unit,
        )
        assert pure.radical_members(*args) == compiled.radical_members(*args)


@needs_compiled
def test_decomposition_witness_parity(corpus):
    for s in corpus:
        if s.order > 27:
            continue
        ring = s.ring
        nil = rl.nilpotents(ring)
        projs = array("i", rl.projections(s))
        unit_list = array("i", sorted(rl.units(ring)))
        for a in ring.elements():
            commuting = array(
                "i", (b for b in nil if ring.mul(a, b) == ring.mul(b, a))
            )
            args = (
                ring.order,
                ring.add_flat,
                ring.mul_flat,
                ring.neg_flat,
                a,
                commuting,
                projs,
                unit_list,
            )
            assert pure.decomposition_witness(*args) == compiled.decomposition_witness(
                *args
            )


@needs_compiled
def test_full_reports_identical_across_backends():
    """End-to-end determinism: a subprocess pinned to the pure backend
    produces byte-identical reports to the in-process backend."""
    code = (
        "import ringlab as rl\n"
        "s = rl.showcase_ring()\n"
        "print(rl.property_report(s).to_json())\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        env=_subprocess_env(RINGLAB_KERNEL="pure"),
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0, out.stderr
    local = rl.property_report(rl.showcase_ring()).to_json()
    assert out.stdout.strip() == local
