import numpy as np
import pytest

from discordbounds.bounds import EnsembleSpec
from discordbounds.linalg import BipartiteDims
from discordbounds.states import make_rng


@pytest.fixture
def rng():
    return make_rng(20260823)


def rand_complex(rng, rows, cols=None):
    cols = rows if cols is None else cols
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def rand_hermitian(rng, n):
    z = rand_complex(rng, n)
    return (z + z.conj().T) / 2


def draw_induced(dA, dB, ancilla, seed, index=0):
    """One induced-measure state through the ensemble plumbing."""
    return EnsembleSpec("induced", ancilla).draw(BipartiteDims(dA, dB), seed, index)


def draw_npt(dA, dB, ancilla, seed, count):
    """First `count` NPT states from the seeded induced stream."""
    from discordbounds.errors import PPTError
    from discordbounds.witnesses import pt_negative_subspace

    spec = EnsembleSpec("induced", ancilla)
    dims = BipartiteDims(dA, dB)
    out = []
    index = 0
    while len(out) < count:
        rho = spec.draw(dims, seed, index)
        index += 1
        try:
            pt_negative_subspace(rho)
        except PPTError:
            continue
        out.append(rho)
    return out
