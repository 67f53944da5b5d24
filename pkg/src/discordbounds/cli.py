"""Command-line driver.

Commands
--------
reproduce   Print the two-qubit maximally entangled worked example and
            check it against its known exact values.
compute     Evaluate all quantities and bound margins for one state file
            (or re-verify a stored counterexample certificate).
verify      Run bound checks over a seeded random ensemble.
falsify     Search an ensemble for counterexamples to one bound.

Seeds are mandatory wherever randomness is involved; there is no silent
time-based seeding. Progress and summaries go to stderr, data records to
stdout or --out, so output is pipeline-safe and byte-stable for a fixed
seed at any worker count.

Exit codes: 0 success; 2 falsify found nothing in budget; 3 a proven
bound was reported violated (implementation defect, diagnostics dumped);
64 configuration error.
"""

from __future__ import annotations

import argparse
import sys

from . import bounds as bounds_mod
from .bounds import (
    BOUND_IDS,
    CLI_BOUND_ALIASES,
    EnsembleSpec,
    check_corrected_trace,
    check_eq20,
    check_eq21_historical,
    check_eq22,
    check_lemma_trw2,
    reverify_certificate,
)
from .discord import geometric_discord_2norm_qubitA, geometric_discord_2norm_opt, trace_discord_upper
from .errors import (
    ConfigError,
    DimsError,
    DiscordBoundsError,
    FileFormatError,
    PPTError,
    ProvenBoundViolationError,
)
from .fileio import (
    certificate_from_dict,
    certificate_to_dict,
    dumps,
    load_document,
    report_to_dict,
    state_from_dict,
    write_records,
    write_table,
)
from .linalg import BipartiteDims
from .states import bell_phi_plus, make_rng
from .witnesses import negativity, negativity_witness

EXIT_OK = 0
EXIT_NONE_FOUND = 2
EXIT_PROVEN_VIOLATION = 3
EXIT_CONFIG = 64

_REPRODUCE_TARGETS = (("D2", 0.5), ("E_w", 0.5), ("trW2", 1.0), ("eq20_margin", 0.25))


class _Parser(argparse.ArgumentParser):
    """argparse with the config-error exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def _add_ensemble_flags(p: _Parser, require_bound: bool) -> None:
    p.add_argument("--dims", required=True, help="bipartite dimensions as AxB, e.g. 2x8")
    p.add_argument(
        "--ensemble", required=True, help="state ensemble: 'pure' or 'induced:K' (ancilla K)"
    )
    p.add_argument("--samples", required=True, type=int, help="number of states to draw")
    p.add_argument("--seed", required=True, type=int, help="ensemble seed (mandatory)")
    if require_bound:
        p.add_argument(
            "--bound",
            required=True,
            help="bound to attack: eq20, eq21, eq22, corrected, lemma",
        )
    else:
        p.add_argument(
            "--bound",
            default="eq20,eq21,eq22,corrected,lemma",
            help="comma-separated bound ids (default: all)",
        )
    p.add_argument("--restarts", type=int, default=20, help="optimizer restarts (default 20)")
    p.add_argument(
        "--cq-samples", type=int, default=100, help="CQ samples per trace-bound check (default 100)"
    )
    p.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument(
        "--format", choices=("records", "table"), default="records", help="output layout"
    )
    p.add_argument(
        "--unsquared",
        action="store_true",
        help="check the unsquared historical variant D2 >= N^2/(d-1)",
    )


def build_parser() -> _Parser:
    p = _Parser(
        prog="discordbounds",
        description="Verify and falsify bounds between geometric discord and witnessed entanglement.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("reproduce", help="print the two-qubit worked example and check it")

    pc = sub.add_parser("compute", help="evaluate quantities and bounds for one state file")
    pc.add_argument("state_file", help="state document (or counterexample certificate)")
    pc.add_argument("--seed", required=True, type=int, help="seed for optimizer and CQ sampling")
    pc.add_argument("--restarts", type=int, default=20)
    pc.add_argument("--cq-samples", type=int, default=100)
    pc.add_argument("--out", default=None, help="output path (default: stdout)")

    pv = sub.add_parser("verify", help="run bound checks over a seeded ensemble")
    _add_ensemble_flags(pv, require_bound=False)

    pf = sub.add_parser("falsify", help="search an ensemble for counterexamples to one bound")
    _add_ensemble_flags(pf, require_bound=True)

    return p


def _resolve_bounds(text: str) -> list:
    out = []
    for name in text.split(","):
        name = name.strip()
        if name not in CLI_BOUND_ALIASES:
            raise ConfigError(
                f"unknown bound {name!r}; choose from eq20, eq21, eq22, corrected, lemma"
            )
        bid = CLI_BOUND_ALIASES[name]
        if bid not in out:
            out.append(bid)
    if not out:
        raise ConfigError("no bounds selected")
    return out


def _open_out(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _progress_printer(tag: str):
    state = {"last": -1}

    def cb(done: int, total: int) -> None:
        pct = (100 * done) // total
        if pct >= state["last"] + 10 or done == total:
            state["last"] = pct
            print(f"{tag}: {done}/{total} ({pct}%)", file=sys.stderr)

    return cb


def cmd_reproduce() -> int:
    phi = bell_phi_plus(2)
    d2 = geometric_discord_2norm_qubitA(phi).value
    W = negativity_witness(phi)
    margin = check_eq20(phi).margin
    values = {"D2": d2, "E_w": W.e_w, "trW2": W.hs_sq, "eq20_margin": margin}
    print("worked example: maximally entangled two-qubit state (2x2)")
    for name, _ in _REPRODUCE_TARGETS:
        print(f"{name:<11} = {values[name]:.15f}")
    bad = []
    for name, target in _REPRODUCE_TARGETS:
        if abs(values[name] - target) > 1e-9:
            bad.append(f"{name}: got {values[name]:.17g}, expected {target:.17g}")
    if bad:
        print("MISMATCH beyond 1e-9:", file=sys.stderr)
        for line in bad:
            print("  " + line, file=sys.stderr)
        return 1
    return EXIT_OK


def _compute_state_doc(rho, seed: int, restarts: int, n_cq: int) -> dict:
    quantities = {}
    try:
        W = negativity_witness(rho)
        quantities.update(
            {
                "N": negativity(rho),
                "m": float(W.neg_count),
                "E_w": W.e_w,
                "trW2": W.hs_sq,
                "sup_norm": W.sup_norm,
            }
        )
        ppt = False
    except PPTError as exc:
        quantities.update({"N": 0.0, "pt_lambda_min": float(exc.lambda_min)})
        ppt = True
    if rho.dims.dA == 2:
        quantities["D2"] = geometric_discord_2norm_qubitA(rho).value
    else:
        quantities["D2"] = geometric_discord_2norm_opt(
            rho, restarts=restarts, rng=make_rng(seed, (0, 6))
        ).value
    quantities["D1_upper"] = trace_discord_upper(
        rho, restarts=restarts, rng=make_rng(seed, (0, 7))
    ).value
    reports = []
    for bid in BOUND_IDS:
        rep = bounds_mod._check_one(
            bid, rho, bounds_mod._bound_rng(seed, 0, bid), n_cq, restarts, True
        )
        reports.append(report_to_dict(rep))
    return {
        "dims": str(rho.dims),
        "label": rho.label,
        "ppt": ppt,
        "quantities": quantities,
        "bounds": reports,
    }


def cmd_compute(args) -> int:
    doc = load_document(args.state_file)
    out, close = _open_out(args.out)
    try:
        if "bound_id" in doc and "state" in doc:
            cert = certificate_from_dict(doc)
            rep = reverify_certificate(cert)
            diff = abs(rep.margin - cert.margin)
            result = {
                "certificate": certificate_to_dict(cert),
                "recomputed": report_to_dict(rep),
                "margin_abs_diff": diff,
            }
            out.write(dumps(result) + "\n")
            if diff > 1e-10:
                print(
                    f"certificate margin mismatch: stored {cert.margin:.17g}, "
                    f"recomputed {rep.margin:.17g}",
                    file=sys.stderr,
                )
                return 1
            return EXIT_OK
        rho = state_from_dict(doc)
        result = _compute_state_doc(rho, args.seed, args.restarts, args.cq_samples)
        out.write(dumps(result) + "\n")
        return EXIT_OK
    finally:
        if close:
            out.close()


def cmd_verify(args) -> int:
    dims = BipartiteDims.from_string(args.dims)
    ensemble = EnsembleSpec.parse(args.ensemble)
    bids = _resolve_bounds(args.bound)
    if args.workers < 1:
        raise ConfigError(f"--workers must be >= 1, got {args.workers}")
    out, close = _open_out(args.out)
    stats = {bid: bounds_mod.BoundStats() for bid in bids}
    docs = []
    try:
        for _, reports, _ in bounds_mod._run_ensemble(
            bids,
            dims,
            ensemble,
            args.samples,
            args.seed,
            workers=args.workers,
            n_cq=args.cq_samples,
            restarts=args.restarts,
            squared=not args.unsquared,
            collect_certificates=False,
            progress=_progress_printer("verify"),
        ):
            for rep in reports:
                stats[rep.bound_id].absorb(rep)
                doc_ = report_to_dict(rep)
                if args.format == "records":
                    write_records(out, [doc_])
                else:
                    docs.append(doc_)
        if args.format == "table":
            write_table(out, docs)
    finally:
        if close:
            out.close()
    for bid in bids:
        s = stats[bid]
        mm = "n/a" if s.min_margin is None else f"{s.min_margin:.6g}"
        print(
            f"{bid}: satisfied {s.satisfied}, violated {s.violated}, "
            f"vacuous {s.vacuous}, min margin {mm}",
            file=sys.stderr,
        )
    return EXIT_OK


def _cert_table_row(cert_doc: dict) -> dict:
    recipe = cert_doc.get("recipe", {})
    return {
        "bound_id": cert_doc.get("bound_id"),
        "dims": recipe.get("dims"),
        "seed": recipe.get("seed"),
        "index": recipe.get("index"),
        "lhs": cert_doc.get("lhs"),
        "rhs": cert_doc.get("rhs"),
        "margin": cert_doc.get("margin"),
        "satisfied": False,
        "vacuous": False,
        "notes": f"ensemble {recipe.get('ensemble')}",
        "quantities": cert_doc.get("quantities", {}),
    }


def cmd_falsify(args) -> int:
    dims = BipartiteDims.from_string(args.dims)
    ensemble = EnsembleSpec.parse(args.ensemble)
    bids = _resolve_bounds(args.bound)
    if len(bids) != 1:
        raise ConfigError("falsify expects exactly one --bound id")
    if args.workers < 1:
        raise ConfigError(f"--workers must be >= 1, got {args.workers}")
    certs = bounds_mod.falsify_search(
        bids[0],
        dims,
        ensemble,
        args.samples,
        args.seed,
        workers=args.workers,
        n_cq=args.cq_samples,
        restarts=args.restarts,
        squared=not args.unsquared,
        progress=_progress_printer("falsify"),
    )
    out, close = _open_out(args.out)
    try:
        cert_docs = [certificate_to_dict(c) for c in certs]
        if args.format == "records":
            write_records(out, cert_docs)
        else:
            write_table(out, [_cert_table_row(d) for d in cert_docs])
    finally:
        if close:
            out.close()
    print(
        f"{bids[0]}: {len(certs)} certificate(s) in {args.samples} samples "
        f"({dims}, {ensemble}, seed {args.seed})",
        file=sys.stderr,
    )
    return EXIT_OK if certs else EXIT_NONE_FOUND


def _dump_proven_violation(exc: ProvenBoundViolationError) -> None:
    print("PROVEN BOUND VIOLATION (implementation defect):", file=sys.stderr)
    print(f"  {exc}", file=sys.stderr)
    rep = exc.report
    if rep is not None:
        print(f"  bound_id: {rep.bound_id}", file=sys.stderr)
        print(f"  dims: {rep.dims}, seed: {rep.seed}, index: {rep.index}", file=sys.stderr)
        print(f"  lhs: {rep.lhs:.17g}, rhs: {rep.rhs:.17g}, margin: {rep.margin:.17g}", file=sys.stderr)
        print(f"  quantities: {dumps(dict(rep.quantities))}", file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "reproduce":
            return cmd_reproduce()
        if args.command == "compute":
            return cmd_compute(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "falsify":
            return cmd_falsify(args)
        raise ConfigError(f"unknown command {args.command!r}")
    except ProvenBoundViolationError as exc:
        _dump_proven_violation(exc)
        return EXIT_PROVEN_VIOLATION
    except (ConfigError, FileFormatError, DimsError) as exc:
        print(f"discordbounds: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FileNotFoundError as exc:
        print(f"discordbounds: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DiscordBoundsError as exc:
        print(f"discordbounds: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
