"""
Entanglement sudden death: timing and certificates.

The ESD time of a bath family is the time at which its Choi state turns
separable, i.e. the channel becomes entanglement breaking. By the
factorization law no pure input keeps its entanglement past that time.
"""
from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence
import logging
import math

import numpy as np

from .channels import (
    BathModel,
    BathParams,
    SqueezedBath,
    Superoperator,
    apply_to_all,
    apply_to_subsystem,
    choi,
    is_entanglement_breaking,
    squeezed_v_closed,
)
from .entanglement import bipartitions, is_ppt, min_pt_eigenvalue, negativity
from .states import ghz, random_pure, w_state

logger = logging.getLogger(__name__)

X_STATE_LABEL = "x-state condition"
PRINTED_LABEL = "printed sinh threshold"


# ======================================================================
# Reports
# ======================================================================

@dataclass(frozen=True)
class EsdReport:
    """
    Outcome of a separability-transition search on choi(V(t)).

    `transition_time` is the PPT end of the bracket, or None when the Choi state
    stays NPT up to `horizon`.
    """

    family: str
    transition_time: Optional[float]
    horizon: float
    bracket: Optional[tuple[float, float]]
    margins: Optional[tuple[float, float]]
    min_pt_eigenvalue_at_horizon: float
    iterations: int
    single_crossing: bool
    closed_form_time: Optional[float] = None
    closed_form_label: Optional[str] = None
    printed_threshold_time: Optional[float] = None

    @property
    def never(self) -> bool:
        return self.transition_time is None


class EsdVerdict(Enum):
    SUFFICIENT = "sufficient"
    NOT_SUFFICIENT = "not_sufficient"
    INCONCLUSIVE = "inconclusive"


# ======================================================================
# Closed forms
# ======================================================================

def thermal_threshold_x_state(params: BathParams) -> Optional[float]:
    """
    Transition time from the Choi X-state condition mu beta = x^2:
    sinh(gamma (2N+1) t / 2) = (2N+1) / (2 sqrt(N(N+1))). None at N = 0.
    """
    n = params.n_mean
    if n == 0:
        return None
    rate = params.gamma * (2 * n + 1)
    return 2.0 * math.asinh((2 * n + 1) / (2 * math.sqrt(n * (n + 1)))) / rate


def thermal_threshold_paper(params: BathParams) -> Optional[float]:
    """
    Root of sinh(gamma (1+2N) t) = 2 sqrt(N(N+1)) / (1+2N), the threshold as it is
    usually printed. Its N -> 0 limit is t -> 0; None at N = 0.
    """
    n = params.n_mean
    if n == 0:
        return None
    rate = params.gamma * (2 * n + 1)
    return math.asinh(2 * math.sqrt(n * (n + 1)) / (2 * n + 1)) / rate


# ======================================================================
# Separability transition search
# ======================================================================

def _count_sign_changes(flags: Sequence[bool]) -> int:
    return sum(1 for a, b in zip(flags, flags[1:]) if a != b)


def choi_ppt_time(
    model: BathModel,
    horizon: float,
    precision: float = 1e-8,
    tol: float = 1e-10,
    points: int = 64,
) -> EsdReport:
    """
    Scan a geometric grid on (0, horizon] for the first time choi(V(t)) is PPT,
    then bisect the bracketing interval down to `precision`.
    """
    if not horizon > 0:
        raise ValueError(f"horizon must be > 0, got {horizon!r}")
    if not precision > 0:
        raise ValueError(f"precision must be > 0, got {precision!r}")
    if points < 2:
        raise ValueError(f"points must be >= 2, got {points!r}")

    grid = np.geomspace(horizon * 1e-6, horizon, points)
    separable = [model.choi_margin(float(t)) >= -tol for t in grid]
    changes = _count_sign_changes(separable)
    single_crossing = changes <= 1 and (changes == 0 or not separable[0])
    if not single_crossing:
        logger.warning("%s: separability margin changes sign %d times on the scan grid", model.family, changes)

    at_horizon = min_pt_eigenvalue(model.choi(horizon))
    closed_form, label, printed = None, None, None
    if model.family == "thermal":
        closed_form, label = thermal_threshold_x_state(model.params), X_STATE_LABEL
        printed = thermal_threshold_paper(model.params)

    if not any(separable):
        logger.debug("%s: Choi state NPT on the whole scan up to %g", model.family, horizon)
        return EsdReport(
            family=model.family,
            transition_time=None,
            horizon=horizon,
            bracket=None,
            margins=None,
            min_pt_eigenvalue_at_horizon=at_horizon,
            iterations=0,
            single_crossing=single_crossing,
            closed_form_time=closed_form,
            closed_form_label=label if closed_form is not None else None,
            printed_threshold_time=printed,
        )

    first = separable.index(True)
    lo, hi = (0.0, float(grid[0])) if first == 0 else (float(grid[first - 1]), float(grid[first]))

    iterations = 0
    while hi - lo > precision:
        mid = 0.5 * (lo + hi)
        if model.choi_margin(mid) >= -tol:
            hi = mid
        else:
            lo = mid
        iterations += 1
    logger.debug("%s: transition bracketed in [%.12g, %.12g] after %d bisections", model.family, lo, hi, iterations)

    return EsdReport(
        family=model.family,
        transition_time=hi,
        horizon=horizon,
        bracket=(lo, hi),
        margins=(model.choi_margin(lo), model.choi_margin(hi)),
        min_pt_eigenvalue_at_horizon=at_horizon,
        iterations=iterations,
        single_crossing=single_crossing,
        closed_form_time=closed_form,
        closed_form_label=label if closed_form is not None else None,
        printed_threshold_time=printed,
    )


# ======================================================================
# Squeezed bath
# ======================================================================

@dataclass(frozen=True)
class SqueezedConditions:
    """
    Left-hand sides of the squeezed-bath separability conditions at one time.
    `c1a`, `c1b` decide; `c2`, `c3` are the printed sinh/cosh forms, for comparison.
    """

    c1a: float  # alpha nu - |z|^2
    c1b: float  # beta mu - y^2
    c2: float
    c3: float

    def separable(self, tol: float = 1e-10) -> bool:
        return self.c1a >= -tol and self.c1b >= -tol


def squeezed_conditions(params: BathParams, t: float) -> SqueezedConditions:
    v = squeezed_v_closed(params, t).mat
    nu, mu, beta, alpha = v[0, 0].real, v[0, 3].real, v[3, 0].real, v[3, 3].real
    y, z = abs(v[1, 1]), abs(v[2, 1])

    n, g = params.n_mean, params.gamma
    pre = n * (n + 1) / (2 * n + 1)
    u = 0.5 * g * (2 * n + 1) * t
    k = 0.5 * g * params.a * t
    with np.errstate(over="ignore", invalid="ignore"):
        c2 = pre * 4 * np.cosh(u) ** 2 - np.sinh(k) ** 2
        c3 = pre * 4 * np.sinh(u) ** 2 - np.cosh(k) ** 2
    return SqueezedConditions(
        c1a=float(alpha * nu - z * z),
        c1b=float(beta * mu - y * y),
        c2=float(c2),
        c3=float(c3),
    )


def squeezing_effect(
    params_base: BathParams,
    r_values: Sequence[float],
    horizon: float,
    hold: str = "n_th",
    precision: float = 1e-8,
    workers: int = 1,
) -> list[tuple[float, Optional[float]]]:
    """
    ESD time of the squeezed family for each squeezing magnitude in `r_values`.

    `hold` names the occupation kept fixed while r varies: "n_th" keeps the
    thermal occupation of `params_base`, "n_mean" keeps its effective N.
    """
    if any(r < 0 for r in r_values):
        raise ValueError("Squeezing magnitudes must be >= 0")
    if hold not in ("n_th", "n_mean"):
        raise NotImplementedError(f"Unknown occupation to hold: {hold}")

    base = params_base

    def esd_time(r: float) -> Optional[float]:
        if hold == "n_th":
            p = BathParams.squeezed(base.gamma, base.n_th, r, phi=base.phi, omega=base.omega)
        else:
            p = BathParams.from_mean(base.gamma, base.n_mean, r, phi=base.phi, omega=base.omega)
        return choi_ppt_time(SqueezedBath(p), horizon, precision).transition_time

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        times = list(pool.map(esd_time, r_values))
    return list(zip(r_values, times))


# ======================================================================
# n-qubit certificate
# ======================================================================

@dataclass(frozen=True)
class NQubitCertificate:
    """
    Full-separability certificate for n qubits, each under its own copy of V(t).

    `cut_negativities` maps a probe-state label to its negativity across every
    bipartition at `certified_time`. `tightness_negativity` is the negativity of GHZ
    with V(0.9 t*) on qubit 0 only, across the cut isolating that qubit.
    """

    n: int
    report: EsdReport
    certified_time: Optional[float]
    entanglement_breaking: Optional[bool] = None
    cuts: tuple[tuple[int, ...], ...] = ()
    cut_negativities: dict[str, tuple[float, ...]] = field(default_factory=dict)
    tightness_negativity: Optional[float] = None

    @property
    def never(self) -> bool:
        return self.certified_time is None

    @property
    def max_negativity(self) -> Optional[float]:
        if not self.cut_negativities:
            return None
        return max(max(negs) for negs in self.cut_negativities.values())

    def passed(self, tol: float = 1e-10) -> bool:
        if self.never:
            return False
        return bool(self.entanglement_breaking) and self.max_negativity <= tol


def nqubit_esd_certificate(
    n: int,
    model: BathModel,
    horizon: float,
    precision: float = 1e-8,
    seed: int = 0,
    samples: int = 5,
) -> NQubitCertificate:
    """
    Certify that V(t)^{(x) n} leaves every n-qubit pure state fully separable from the
    single-qubit Choi transition on, and spot-check GHZ, W and random states.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n!r}")
    report = choi_ppt_time(model, horizon, precision)
    if report.never:
        return NQubitCertificate(n=n, report=report, certified_time=None)

    t_cert = report.transition_time + precision
    v = model.propagator(t_cert)

    probes = {"ghz": ghz(n), "w": w_state(n)}
    for k, child in enumerate(np.random.SeedSequence(seed).spawn(samples)):
        probes[f"random-{k}"] = random_pure((2,) * n, seed=child)

    cuts = tuple(bipartitions(n))
    negs = {}
    for label, state in probes.items():
        rho = apply_to_all(v, state.to_density())
        negs[label] = tuple(negativity(rho, cut) for cut in cuts)
        logger.debug("%s: max cut negativity %.3e at t = %.12g", label, max(negs[label]), t_cert)

    one_sided = apply_to_subsystem(model.propagator(0.9 * t_cert), ghz(n).to_density(), 0)
    return NQubitCertificate(
        n=n,
        report=report,
        certified_time=t_cert,
        entanglement_breaking=is_entanglement_breaking(v),
        cuts=cuts,
        cut_negativities=negs,
        tightness_negativity=negativity(one_sided, (0,)),
    )


# ======================================================================
# Channels on higher dimensions
# ======================================================================

def esd_sufficient_general(v: Superoperator, tol: float = 1e-10) -> EsdVerdict:
    """
    Decide whether (I x v) disentangles every input, i.e. whether choi(v) is separable.

    Qubits are decided exactly by PPT. For d > 2 an NPT Choi state is
    NOT_SUFFICIENT; a PPT one is SUFFICIENT when it lies inside the separable ball
    ||rho - I/D||_F <= 1/sqrt(D(D-1)) around the maximally mixed state, and
    INCONCLUSIVE otherwise.
    """
    c = choi(v)
    ppt = is_ppt(c, 1, tol)
    if v.dim == 2:
        return EsdVerdict.SUFFICIENT if ppt else EsdVerdict.NOT_SUFFICIENT
    if not ppt:
        return EsdVerdict.NOT_SUFFICIENT

    size = v.dim * v.dim
    distance = float(np.linalg.norm(c.mat - np.eye(size) / size, "fro"))
    radius = 1.0 / math.sqrt(size * (size - 1))
    logger.debug("Choi distance from I/D: %.3e, separable-ball radius %.3e", distance, radius)
    return EsdVerdict.SUFFICIENT if distance <= radius else EsdVerdict.INCONCLUSIVE
