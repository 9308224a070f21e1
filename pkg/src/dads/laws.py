"""
Seeded randomized checks of the algebraic laws.

Each law draws its inputs from ``numpy.random.default_rng([seed, law_id,
trial])`` so a trial can be replayed on its own, and serial or parallel
runs agree. A trial returns None on success or a JSON-ready description
of the counterexample.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import formats
from .behavior import quotient_pairing_check, triple_perp_check
from .polysys import Polynomial, PolyVector, vec_matrix_mul
from .sampling import (random_exponent, random_poly, random_polymatrix,
                       random_polyvector, random_series, random_series_vector)
from .scalars import GF
from .shiftop import apply_matrix, apply_poly, pairing_F, shift

GF7 = GF(7)
GF5 = GF(5)
BOUND = 10


def _poly_doc(d: Polynomial) -> dict:
    return {"field": d.field.p, "r": d.r, "terms": [{"exp": list(e), "coef": c} for e, c in d.items()]}


def _vec_doc(v: PolyVector) -> list:
    return [_poly_doc(c) for c in v]


def adjoint_poly(rng, transposed=False):
    r = int(rng.integers(1, 4))
    c = random_poly(rng, GF7, r, 3)
    d = random_poly(rng, GF7, r, 3)
    W = random_series(rng, GF7, r, BOUND)
    lhs = pairing_F(c * d, W)
    rhs = pairing_F(c, apply_poly(d, W))
    if lhs != rhs:
        return {"c": _poly_doc(c), "d": _poly_doc(d), "W": formats.series_to_doc(W),
                "lhs": lhs, "rhs": rhs}
    return None


def adjoint_matrix(rng, transposed=False):
    r = int(rng.integers(1, 4))
    k = int(rng.integers(1, 4))
    l = k if transposed else int(rng.integers(1, 4))
    R = random_polymatrix(rng, GF7, r, k, l, 3)
    c = random_polyvector(rng, GF7, r, k, 3)
    W = random_series_vector(rng, GF7, r, l, BOUND)
    # the negative control applies R with the wrong (column) convention
    acting = R.transpose() if transposed else R
    lhs = pairing_F(vec_matrix_mul(c, R), W)
    rhs = pairing_F(c, apply_matrix(acting, W))
    if lhs != rhs:
        return {"c": _vec_doc(c), "R": formats.matrix_to_doc(R), "W": formats.series_to_doc(W),
                "transposed": transposed, "lhs": lhs, "rhs": rhs}
    return None


def shift_composition(rng, transposed=False):
    r = int(rng.integers(1, 4))
    a = random_exponent(rng, r, 3)
    b = random_exponent(rng, r, 3)
    W = random_series(rng, GF7, r, BOUND)
    ab = tuple(x + y for x, y in zip(a, b))
    if shift(ab, W) != shift(a, shift(b, W)):
        return {"alpha": list(a), "beta": list(b), "W": formats.series_to_doc(W)}
    return None


def _module_inputs(rng):
    r = int(rng.integers(1, 4))
    d = random_poly(rng, GF7, r, 3)
    e = random_poly(rng, GF7, r, 3)
    W = random_series(rng, GF7, r, BOUND)
    return d, e, W


def module_unit(rng, transposed=False):
    _, _, W = _module_inputs(rng)
    if apply_poly(Polynomial.one(GF7, W.r), W) != W:
        return {"W": formats.series_to_doc(W)}
    return None


def module_additive(rng, transposed=False):
    d, e, W = _module_inputs(rng)
    lhs = apply_poly(d + e, W)
    rhs = apply_poly(d, W) + apply_poly(e, W)
    # d + e may have lower degree than d or e; compare on the common ball
    b = min(lhs.bound, rhs.bound)
    if lhs.restrict(b) != rhs.restrict(b):
        return {"d": _poly_doc(d), "e": _poly_doc(e), "W": formats.series_to_doc(W)}
    return None


def module_multiplicative(rng, transposed=False):
    d, e, W = _module_inputs(rng)
    lhs = apply_poly(d * e, W)
    rhs = apply_poly(d, apply_poly(e, W))
    b = min(lhs.bound, rhs.bound)
    if lhs.restrict(b) != rhs.restrict(b):
        return {"d": _poly_doc(d), "e": _poly_doc(e), "W": formats.series_to_doc(W)}
    return None


def random_generators(rng, field, max_r=2, max_l=2, max_k=2, max_degree=2) -> list[PolyVector]:
    """A nonempty finite set P of polynomial vectors, not all zero."""
    r = int(rng.integers(1, max_r + 1))
    l = int(rng.integers(1, max_l + 1))
    k = int(rng.integers(1, max_k + 1))
    while True:
        P = [random_polyvector(rng, field, r, l, max_degree) for _ in range(k)]
        if not all(v.is_zero() for v in P):
            return P


def perp(rng, transposed=False):
    P = random_generators(rng, GF5)
    v = triple_perp_check(P, 8, 4)
    if not v:
        return {"P": [_vec_doc(x) for x in P], "D": 8, "d_max": 4, "detail": v.detail}
    return None


def quotient(rng, transposed=False):
    P = random_generators(rng, GF7)
    seed = int(rng.integers(2**32))
    v = quotient_pairing_check(P, 8, trials=1, seed=seed)
    if not v:
        return {"P": [_vec_doc(x) for x in P], "D": 8, "seed": seed, "detail": v.detail}
    return None


# law name -> (trial function, share of the requested trial count)
LAWS = {
    "adjoint-poly": (adjoint_poly, 1.0),
    "adjoint-matrix": (adjoint_matrix, 0.3),
    "shift-composition": (shift_composition, 1.0),
    "module-unit": (module_unit, 0.5),
    "module-additive": (module_additive, 0.5),
    "module-multiplicative": (module_multiplicative, 0.5),
    "perp": (perp, 0.1),
    "quotient": (quotient, 0.1),
}

SUITES = {
    "adjoint": ["adjoint-poly", "adjoint-matrix"],
    "shift": ["shift-composition"],
    "module": ["module-unit", "module-additive", "module-multiplicative"],
    "perp": ["perp"],
    "quotient": ["quotient"],
}
SUITES["all"] = [name for names in SUITES.values() for name in names]


@dataclass
class LawResult:
    name: str
    trials: int
    failures: int = 0
    first_failure: dict | None = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.failures == 0


def law_rng(seed: int, name: str, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(name.encode()), trial])


def run_law(name: str, seed: int, trials: int, transposed: bool = False) -> LawResult:
    fn, _ = LAWS[name]
    res = LawResult(name, trials)
    for t in range(trials):
        bad = fn(law_rng(seed, name, t), transposed)
        if bad is not None:
            res.failures += 1
            if res.first_failure is None:
                res.first_failure = {"law": name, "seed": seed, "trial": t, "inputs": bad}
    return res


def trial_count(name: str, trials: int) -> int:
    share = LAWS[name][1]
    return trials if share == 1.0 else int(trials * share)


def run_suite(suite: str, seed: int, trials: int, transposed: bool = False) -> list[LawResult]:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    return [run_law(name, seed, trial_count(name, trials), transposed) for name in SUITES[suite]]


def format_report(suite: str, seed: int, trials: int, results: list[LawResult]) -> str:
    lines = [f"suite={suite} seed={seed} trials={trials}"]
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        lines.append(f"{res.name:<24}{res.trials - res.failures:>6}/{res.trials:<6} {status}")
    ok = all(r.passed for r in results)
    lines.append(f"result: {'PASS' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n"


def dump_failures(results: list[LawResult], directory) -> list[Path]:
    out = []
    directory = Path(directory)
    for res in results:
        if res.first_failure is not None:
            directory.mkdir(parents=True, exist_ok=True)
            path = directory / f"counterexample-{res.name}.json"
            path.write_text(formats.dumps(res.first_failure))
            out.append(path)
    return out
