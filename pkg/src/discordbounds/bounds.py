"""Bound verifiers, counterexample search, and certificate reports.

Five named checks relate the 2-norm geometric discord D2, the trace-norm
discord D1, the negativity N, and witnessed entanglement E_w:

* ``eq20``            D2 >= E_w^2 / Tr(W^2)   (negativity witness; proven)
* ``eq21_historical`` D2 >= N^2 / (d-1)^2     (retracted; falsifiable)
* ``eq22``            D1 >= E_w               (needs -I <= W <= I; proven
                      on that domain, DomainError outside it)
* ``corrected_trace`` D1 >= E_w / ||W||_inf   (proven for any witness)
* ``lemma_trw2``      Tr(W^2) <= d - 1        (retracted; falsifiable)

with d = min(dA, dB). The trace-norm checks never rely on an exact D1.
They record two evidence layers: (i) a rigorous per-state inequality,
||rho - chi||_1 * ||W||_inf >= E_w for every sampled classical-quantum
chi (each instance is a Holder chain plus Tr(W chi) >= 0), and (ii) the
measured-family upper estimate D1_upper, which must itself clear the
bound since D1_upper >= D1.

A violation of a proven bound is an implementation defect, never a
discovery: ensemble drivers raise ProvenBoundViolationError instead of
collecting it (the CLI maps this to exit code 3).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import multiprocessing

import numpy as np

from .discord import (
    DiscordEstimate,
    geometric_discord_2norm_opt,
    geometric_discord_2norm_qubitA,
    trace_discord_upper,
    trace_distance_raw,
)
from .errors import ConfigError, DomainError, PPTError, ProvenBoundViolationError
from .linalg import BipartiteDims, HolderPair, schatten_norm
from .states import (
    BipartiteDensityMatrix,
    ClassicalQuantumState,
    make_rng,
    random_cq,
    random_mixed_induced,
    random_pure,
)
from .witnesses import (
    EntanglementWitness,
    negativity,
    negativity_witness,
    random_robustness_witness,
    sup_normalize,
)

MARGIN_TOL = 1e-8

BOUND_IDS = ("eq20", "eq21_historical", "eq22", "corrected_trace", "lemma_trw2")

# Bounds that hold mathematically; a violated report aborts the run.
PROVEN_BOUND_IDS = frozenset({"eq20", "eq22", "corrected_trace"})

CLI_BOUND_ALIASES = {
    "eq20": "eq20",
    "eq21": "eq21_historical",
    "eq21_historical": "eq21_historical",
    "eq22": "eq22",
    "corrected": "corrected_trace",
    "corrected_trace": "corrected_trace",
    "lemma": "lemma_trw2",
    "lemma_trw2": "lemma_trw2",
}

_STREAM_STATE = 0


@dataclass(frozen=True)
class EnsembleSpec:
    """Random-state ensemble: Haar pure or induced with an ancilla."""

    kind: str
    ancilla: int | None = None

    def __post_init__(self):
        if self.kind not in ("pure", "induced"):
            raise ConfigError(f"ensemble kind must be 'pure' or 'induced', got {self.kind!r}")
        if self.kind == "induced" and (self.ancilla is None or self.ancilla < 1):
            raise ConfigError(f"induced ensemble needs ancilla >= 1, got {self.ancilla!r}")

    @classmethod
    def parse(cls, text: str) -> "EnsembleSpec":
        if text == "pure":
            return cls("pure")
        if text.startswith("induced:"):
            try:
                return cls("induced", int(text.split(":", 1)[1]))
            except ValueError:
                pass
        raise ConfigError(f"ensemble must be 'pure' or 'induced:K', got {text!r}")

    def __str__(self) -> str:
        return "pure" if self.kind == "pure" else f"induced:{self.ancilla}"

    def draw(self, dims: BipartiteDims, seed: int, index: int) -> BipartiteDensityMatrix:
        """Deterministic draw for one sample index."""
        rng = make_rng(seed, (index, _STREAM_STATE))
        if self.kind == "pure":
            return random_pure(dims, rng, seed_provenance=(seed, index))
        return random_mixed_induced(dims, self.ancilla, rng, seed_provenance=(seed, index))


@dataclass(frozen=True)
class BoundReport:
    """Per-state verdict for one bound.

    `satisfied` is exactly `margin >= -1e-8`; vacuous reports (PPT input,
    no witness) are satisfied with zero margin and an explanatory note.
    Every quantity entering lhs or rhs appears in `quantities`.
    """

    bound_id: str
    dims: BipartiteDims
    quantities: dict
    lhs: float
    rhs: float
    margin: float
    satisfied: bool
    vacuous: bool = False
    notes: str = ""
    label: str | None = None
    seed: int | None = None
    index: int | None = None


@dataclass(frozen=True)
class CounterexampleCertificate:
    """A violated falsifiable bound with everything needed to re-verify it."""

    bound_id: str
    state: BipartiteDensityMatrix
    witness_matrix: np.ndarray | None
    quantities: dict
    lhs: float
    rhs: float
    margin: float
    recipe: dict


def _provenance(rho: BipartiteDensityMatrix):
    if rho.seed_provenance is not None and len(rho.seed_provenance) == 2:
        return int(rho.seed_provenance[0]), int(rho.seed_provenance[1])
    return None, None


def _vacuous(bound_id: str, rho: BipartiteDensityMatrix, lambda_min: float) -> BoundReport:
    seed, index = _provenance(rho)
    return BoundReport(
        bound_id=bound_id,
        dims=rho.dims,
        quantities={"N": 0.0, "pt_lambda_min": float(lambda_min)},
        lhs=0.0,
        rhs=0.0,
        margin=0.0,
        satisfied=True,
        vacuous=True,
        notes="vacuous: state is PPT within tolerance, no witness constructed",
        label=rho.label,
        seed=seed,
        index=index,
    )


def _d2(rho: BipartiteDensityMatrix, restarts: int, rng) -> DiscordEstimate:
    if rho.dims.dA == 2:
        return geometric_discord_2norm_qubitA(rho)
    return geometric_discord_2norm_opt(rho, restarts=restarts, rng=rng)


def check_eq20(
    rho: BipartiteDensityMatrix,
    rng: np.random.Generator | None = None,
    restarts: int = 20,
) -> BoundReport:
    """D2 >= E_w^2 / Tr(W^2) with the negativity witness (proven)."""
    try:
        W = negativity_witness(rho)
    except PPTError as exc:
        return _vacuous("eq20", rho, exc.lambda_min)
    d2 = _d2(rho, restarts, rng).value
    rhs = W.e_w ** 2 / W.hs_sq
    margin = d2 - rhs
    seed, index = _provenance(rho)
    return BoundReport(
        bound_id="eq20",
        dims=rho.dims,
        quantities={
            "D2": d2,
            "N": negativity(rho),
            "E_w": W.e_w,
            "trW2": W.hs_sq,
            "sup_norm": W.sup_norm,
            "m": float(W.neg_count),
            "d": float(rho.dims.min_dim),
        },
        lhs=d2,
        rhs=rhs,
        margin=margin,
        satisfied=margin >= -MARGIN_TOL,
        label=rho.label,
        seed=seed,
        index=index,
    )


def check_eq21_historical(
    rho: BipartiteDensityMatrix,
    rng: np.random.Generator | None = None,
    restarts: int = 20,
    squared: bool = True,
) -> BoundReport:
    """D2 >= N^2 / (d-1)^2, the retracted bound (expected falsifiable).

    `squared=False` checks the unsquared variant D2 >= N^2 / (d-1)
    instead. The report cross-links the sound check: it carries the eq20
    rhs/margin and the lemma margin (d-1) - m computed on the same state,
    since Tr(W^2) = m > d-1 is the root cause of violations here.
    """
    try:
        W = negativity_witness(rho)
    except PPTError as exc:
        return _vacuous("eq21_historical", rho, exc.lambda_min)
    d2 = _d2(rho, restarts, rng).value
    N = negativity(rho)
    d = rho.dims.min_dim
    denom = float(d - 1) ** 2 if squared else float(d - 1)
    rhs = N ** 2 / denom
    margin = d2 - rhs
    eq20_rhs = W.e_w ** 2 / W.hs_sq
    seed, index = _provenance(rho)
    return BoundReport(
        bound_id="eq21_historical",
        dims=rho.dims,
        quantities={
            "D2": d2,
            "N": N,
            "d": float(d),
            "denom": denom,
            "m": float(W.neg_count),
            "trW2": W.hs_sq,
            "eq20_rhs": eq20_rhs,
            "eq20_margin": d2 - eq20_rhs,
            "lemma_margin": float(d - 1) - float(W.neg_count),
        },
        lhs=d2,
        rhs=rhs,
        margin=margin,
        satisfied=margin >= -MARGIN_TOL,
        notes="historical bound, retracted; violations are expected discoveries",
        label=rho.label,
        seed=seed,
        index=index,
    )


def check_lemma_trw2(rho: BipartiteDensityMatrix) -> BoundReport:
    """Tr(W^2) <= d - 1 for the negativity witness (retracted claim).

    Tr(W^2) equals the negative-eigenvalue count m, so this fails exactly
    when rho^{T_A} has at least d negative eigenvalues.
    """
    try:
        W = negativity_witness(rho)
    except PPTError as exc:
        return _vacuous("lemma_trw2", rho, exc.lambda_min)
    d = rho.dims.min_dim
    lhs = float(d - 1)
    rhs = float(W.neg_count)
    margin = lhs - rhs
    seed, index = _provenance(rho)
    return BoundReport(
        bound_id="lemma_trw2",
        dims=rho.dims,
        quantities={
            "m": float(W.neg_count),
            "d": float(d),
            "trW2": W.hs_sq,
            "N": W.e_w,
        },
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        satisfied=margin >= -MARGIN_TOL,
        notes="retracted claim Tr(W^2) <= d-1; violations are expected discoveries",
        label=rho.label,
        seed=seed,
        index=index,
    )


def _layered_trace_evidence(
    rho: BipartiteDensityMatrix,
    W: EntanglementWitness,
    scale: float,
    offset: float,
    rhs: float,
    n_cq: int,
    rng: np.random.Generator,
    restarts: int,
):
    """Shared evidence layers for the trace-norm bounds.

    Layer (i): for each sampled CQ state chi, the margin
    trace_distance_raw(rho, chi) * scale - offset must be >= -1e-8.
    Layer (ii): D1_upper - rhs must be >= -1e-8.
    """
    cq_rng, opt_rng = rng.spawn(2)
    min_dist = math.inf
    layer_i = math.inf
    for _ in range(n_cq):
        chi = random_cq(rho.dims, cq_rng)
        dist = trace_distance_raw(rho, chi.assembled)
        if dist < min_dist:
            min_dist = dist
        m = dist * scale - offset
        if m < layer_i:
            layer_i = m
    d1_upper = trace_discord_upper(rho, restarts=restarts, rng=opt_rng).value
    layer_ii = d1_upper - rhs
    return min_dist, layer_i, d1_upper, layer_ii


def check_corrected_trace(
    rho: BipartiteDensityMatrix,
    kind: str = "negativity",
    n_cq: int = 100,
    rng: np.random.Generator | None = None,
    restarts: int = 20,
) -> BoundReport:
    """D1 >= E_w / ||W||_inf, valid for every witness normalization (proven).

    Layer (i) uses the exact per-state form of the inequality,
    ||rho - chi||_1 * ||W||_inf >= E_w for sampled CQ chi; layer (ii)
    checks the measured-family estimate D1_upper against E_w/||W||_inf.
    """
    builder = negativity_witness if kind == "negativity" else random_robustness_witness
    try:
        W = builder(rho)
    except PPTError as exc:
        return _vacuous("corrected_trace", rho, exc.lambda_min)
    if rng is None:
        rng = make_rng(0)
    rhs = W.e_w / W.sup_norm
    min_dist, layer_i, d1_upper, layer_ii = _layered_trace_evidence(
        rho, W, scale=W.sup_norm, offset=W.e_w, rhs=rhs, n_cq=n_cq, rng=rng, restarts=restarts
    )
    margin = min(layer_i, layer_ii)
    seed, index = _provenance(rho)
    return BoundReport(
        bound_id="corrected_trace",
        dims=rho.dims,
        quantities={
            "E_w": W.e_w,
            "sup_norm": W.sup_norm,
            "rhs": rhs,
            "D1_upper": d1_upper,
            "min_chi_distance": min_dist,
            "layer_i_margin": layer_i,
            "layer_ii_margin": layer_ii,
            "n_cq": float(n_cq),
        },
        lhs=d1_upper,
        rhs=rhs,
        margin=margin,
        satisfied=margin >= -MARGIN_TOL,
        notes=f"witness kind: {W.kind}; margin is min(layer i, layer ii)",
        label=rho.label,
        seed=seed,
        index=index,
    )


def check_eq22(
    rho: BipartiteDensityMatrix,
    W: EntanglementWitness | None = None,
    n_cq: int = 100,
    rng: np.random.Generator | None = None,
    restarts: int = 20,
) -> BoundReport:
    """D1 >= E_w for witnesses in the domain -I <= W <= I.

    Witnesses outside the domain raise DomainError: the bound simply does
    not apply to them, which is why the unnormalized negativity witness
    cannot be used here directly. When W is omitted the sup-normalized
    negativity witness of rho is used, which always satisfies the domain.
    """
    if W is None:
        try:
            W = sup_normalize(negativity_witness(rho))
        except PPTError as exc:
            return _vacuous("eq22", rho, exc.lambda_min)
    if W.sup_norm > 1.0 + 1e-10:
        raise DomainError(
            f"witness has ||W||_inf = {W.sup_norm:.12g} > 1; outside the -I <= W <= I domain",
            sup_norm=W.sup_norm,
        )
    if rng is None:
        rng = make_rng(0)
    rhs = W.e_w
    min_dist, layer_i, d1_upper, layer_ii = _layered_trace_evidence(
        rho, W, scale=1.0, offset=rhs, rhs=rhs, n_cq=n_cq, rng=rng, restarts=restarts
    )
    margin = min(layer_i, layer_ii)
    seed, index = _provenance(rho)
    return BoundReport(
        bound_id="eq22",
        dims=rho.dims,
        quantities={
            "E_w": W.e_w,
            "sup_norm": W.sup_norm,
            "rhs": rhs,
            "D1_upper": d1_upper,
            "min_chi_distance": min_dist,
            "layer_i_margin": layer_i,
            "layer_ii_margin": layer_ii,
            "n_cq": float(n_cq),
        },
        lhs=d1_upper,
        rhs=rhs,
        margin=margin,
        satisfied=margin >= -MARGIN_TOL,
        notes=f"witness kind: {W.kind} (normalized: {W.normalized})",
        label=rho.label,
        seed=seed,
        index=index,
    )


@dataclass(frozen=True)
class HolderChainAudit:
    """Per-link margins of the trace-bound derivation for one (rho, chi, W).

    Links: (a) ||rho-chi||_p * ||W||_q >= |Tr[(rho-chi) W]|;
           (b) Tr(W chi) >= 0 for the separable chi;
           (c) |Tr[(rho-chi) W]| >= E_w.
    """

    margin_a: float
    margin_b: float
    margin_c: float
    dist_p: float
    witness_q_norm: float
    cross_term: float
    tr_w_chi: float
    e_w: float

    @property
    def first_failing_link(self) -> str | None:
        if self.margin_a < -1e-10:
            return "a"
        if self.margin_b < -MARGIN_TOL:
            return "b"
        if self.margin_c < -MARGIN_TOL:
            return "c"
        return None


def holder_chain_audit(
    rho: BipartiteDensityMatrix,
    chi: ClassicalQuantumState,
    W: EntanglementWitness,
    pair: HolderPair,
) -> HolderChainAudit:
    """Audit every link of the chain that proves the trace-norm bounds."""
    sigma = chi.assembled
    if sigma.dims != rho.dims or W.matrix.shape != rho.matrix.shape:
        from .errors import DimsError

        raise DimsError("rho, chi and W must share the same bipartite dims")
    diff = rho.matrix - sigma.matrix
    dist_p = schatten_norm(diff, pair.p)
    w_q = schatten_norm(W.matrix, pair.q)
    cross = abs(float(np.trace(diff @ W.matrix).real))
    tr_w_chi = float(np.trace(W.matrix @ sigma.matrix).real)
    tr_w_rho = float(np.trace(W.matrix @ rho.matrix).real)
    e_w = max(0.0, -tr_w_rho)
    return HolderChainAudit(
        margin_a=dist_p * w_q - cross,
        margin_b=tr_w_chi,
        margin_c=cross - e_w,
        dist_p=dist_p,
        witness_q_norm=w_q,
        cross_term=cross,
        tr_w_chi=tr_w_chi,
        e_w=e_w,
    )


# --------------------------------------------------------------------------
# Ensemble driver


@dataclass
class BoundStats:
    satisfied: int = 0
    violated: int = 0
    vacuous: int = 0
    min_margin: float | None = None

    def absorb(self, report: BoundReport) -> None:
        if report.vacuous:
            self.vacuous += 1
            return
        if report.satisfied:
            self.satisfied += 1
        else:
            self.violated += 1
        if self.min_margin is None or report.margin < self.min_margin:
            self.min_margin = report.margin


@dataclass
class EnsembleSummary:
    dims: BipartiteDims
    ensemble: EnsembleSpec
    seed: int
    samples: int
    bound_ids: tuple
    stats: dict = field(default_factory=dict)
    reports: list = field(default_factory=list)
    certificates: list = field(default_factory=list)


def _bound_rng(seed: int, index: int, bound_id: str) -> np.random.Generator:
    return make_rng(seed, (index, 1 + BOUND_IDS.index(bound_id)))


def _check_one(
    bound_id: str,
    rho: BipartiteDensityMatrix,
    rng: np.random.Generator | None,
    n_cq: int,
    restarts: int,
    squared: bool,
) -> BoundReport:
    if bound_id == "eq20":
        return check_eq20(rho, rng=rng, restarts=restarts)
    if bound_id == "eq21_historical":
        return check_eq21_historical(rho, rng=rng, restarts=restarts, squared=squared)
    if bound_id == "eq22":
        return check_eq22(rho, n_cq=n_cq, rng=rng, restarts=restarts)
    if bound_id == "corrected_trace":
        return check_corrected_trace(rho, n_cq=n_cq, rng=rng, restarts=restarts)
    if bound_id == "lemma_trw2":
        return check_lemma_trw2(rho)
    raise ConfigError(f"unknown bound id {bound_id!r}")


def _guard_proven(report: BoundReport) -> None:
    if not report.vacuous and not report.satisfied and report.bound_id in PROVEN_BOUND_IDS:
        raise ProvenBoundViolationError(
            f"proven bound {report.bound_id} reported violated "
            f"(margin {report.margin:.3e} at dims {report.dims}, seed {report.seed}, "
            f"index {report.index}); this indicates an implementation defect",
            report=report,
        )
    # eq21 certificates must sit on states where the sound bound holds
    eq20_margin = report.quantities.get("eq20_margin")
    if eq20_margin is not None and eq20_margin < -MARGIN_TOL:
        raise ProvenBoundViolationError(
            f"eq20 margin {eq20_margin:.3e} violated on a state examined for "
            f"{report.bound_id} (seed {report.seed}, index {report.index})",
            report=report,
        )


def _certificate(
    report: BoundReport,
    rho: BipartiteDensityMatrix,
    ensemble: EnsembleSpec,
    n_cq: int,
    restarts: int,
    squared: bool,
) -> CounterexampleCertificate:
    try:
        wmat = negativity_witness(rho).matrix
    except PPTError:
        wmat = None
    return CounterexampleCertificate(
        bound_id=report.bound_id,
        state=rho,
        witness_matrix=wmat,
        quantities=dict(report.quantities),
        lhs=report.lhs,
        rhs=report.rhs,
        margin=report.margin,
        recipe={
            "seed": report.seed,
            "index": report.index,
            "ensemble": str(ensemble),
            "dims": str(report.dims),
            "n_cq": n_cq,
            "restarts": restarts,
            "squared": squared,
        },
    )


def _run_chunk(args):
    (seed, dims, ensemble, bound_ids, lo, hi, n_cq, restarts, squared, collect) = args
    out = []
    for index in range(lo, hi):
        rho = ensemble.draw(dims, seed, index)
        reports = []
        certs = []
        for bid in bound_ids:
            rep = _check_one(bid, rho, _bound_rng(seed, index, bid), n_cq, restarts, squared)
            _guard_proven(rep)
            reports.append(rep)
            if collect and not rep.satisfied and not rep.vacuous:
                certs.append(_certificate(rep, rho, ensemble, n_cq, restarts, squared))
        out.append((index, reports, certs))
    return out


def _run_ensemble(
    bound_ids,
    dims: BipartiteDims,
    ensemble: EnsembleSpec,
    samples: int,
    seed: int,
    workers: int = 1,
    n_cq: int = 100,
    restarts: int = 20,
    squared: bool = True,
    collect_certificates: bool = False,
    progress=None,
):
    """Run checks over the ensemble; yield (index, reports, certificates) in order.

    Each sample index gets its own generator streams, so results are
    byte-identical for any worker count and any chunking.
    """
    if samples < 1:
        raise ConfigError(f"samples must be >= 1, got {samples}")
    for bid in bound_ids:
        if bid not in BOUND_IDS:
            raise ConfigError(f"unknown bound id {bid!r}")
    common = (n_cq, restarts, squared, collect_certificates)
    if workers <= 1:
        done = 0
        step = max(1, samples // 20)
        for lo in range(0, samples, step):
            hi = min(lo + step, samples)
            chunk = _run_chunk((seed, dims, ensemble, tuple(bound_ids), lo, hi) + common)
            yield from chunk
            done = hi
            if progress is not None:
                progress(done, samples)
        return
    chunk_size = max(1, math.ceil(samples / (workers * 4)))
    tasks = [
        (seed, dims, ensemble, tuple(bound_ids), lo, min(lo + chunk_size, samples)) + common
        for lo in range(0, samples, chunk_size)
    ]
    ctx = multiprocessing.get_context("fork")
    done = 0
    with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
        for chunk in pool.map(_run_chunk, tasks):
            yield from chunk
            done += len(chunk)
            if progress is not None:
                progress(done, samples)


def verify_ensemble(
    bound_ids,
    dims: BipartiteDims,
    ensemble: EnsembleSpec,
    samples: int,
    seed: int,
    workers: int = 1,
    n_cq: int = 100,
    restarts: int = 20,
    squared: bool = True,
    keep_reports: bool = True,
    progress=None,
) -> EnsembleSummary:
    """Evaluate the chosen bounds over a seeded ensemble and tally results."""
    summary = EnsembleSummary(
        dims=dims,
        ensemble=ensemble,
        seed=seed,
        samples=samples,
        bound_ids=tuple(bound_ids),
        stats={bid: BoundStats() for bid in bound_ids},
    )
    for _, reports, certs in _run_ensemble(
        bound_ids,
        dims,
        ensemble,
        samples,
        seed,
        workers=workers,
        n_cq=n_cq,
        restarts=restarts,
        squared=squared,
        collect_certificates=True,
        progress=progress,
    ):
        for rep in reports:
            summary.stats[rep.bound_id].absorb(rep)
            if keep_reports:
                summary.reports.append(rep)
        summary.certificates.extend(certs)
    return summary


def falsify_search(
    bound_id: str,
    dims: BipartiteDims,
    ensemble: EnsembleSpec,
    samples: int,
    seed: int,
    workers: int = 1,
    n_cq: int = 100,
    restarts: int = 20,
    squared: bool = True,
    progress=None,
) -> list:
    """Collect counterexample certificates for one bound over the ensemble.

    Proven bounds yield an empty list on a correct implementation (any
    violation aborts via ProvenBoundViolationError instead of being
    collected). Certificates re-verify bit-stably through
    reverify_certificate.
    """
    if bound_id not in BOUND_IDS:
        raise ConfigError(f"unknown bound id {bound_id!r}")
    certificates = []
    for _, _, certs in _run_ensemble(
        [bound_id],
        dims,
        ensemble,
        samples,
        seed,
        workers=workers,
        n_cq=n_cq,
        restarts=restarts,
        squared=squared,
        collect_certificates=True,
        progress=progress,
    ):
        certificates.extend(certs)
    return certificates


def reverify_certificate(cert: CounterexampleCertificate) -> BoundReport:
    """Re-run the stored check on the stored state with the stored streams.

    The reproduced margin must match the certificate within 1e-10.
    """
    seed = cert.recipe.get("seed")
    index = cert.recipe.get("index")
    rng = None
    if seed is not None and index is not None:
        rng = _bound_rng(int(seed), int(index), cert.bound_id)
    return _check_one(
        cert.bound_id,
        cert.state,
        rng,
        int(cert.recipe.get("n_cq", 100)),
        int(cert.recipe.get("restarts", 20)),
        bool(cert.recipe.get("squared", True)),
    )
