"""Command-line interface.

Commands::

    torusint integrate --space grass:2,4 --class "e[1]^4" --method both
    torusint verify    --space lg:2 --trials 20 --seed 7
    torusint dendrite  --k 2 --n 4

Exit status: 0 on success, 1 when a requested check disagrees, 2 on usage or
parse errors.  ``--json`` prints a machine-readable document; it is
byte-identical across runs for a fixed seed (timing is only included under
``--timing``, since wall-clock times are never reproducible).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .dendrite import assemble_grassmannian_formula, dendrite_orthant, moment_orthant
from .errors import ParseError, SymmetryError, TorusIntError
from .pushforward import (
    FORMS,
    build_integrand,
    abbv_pushforward,
    parse_space,
    residue_pushforward,
    specialize_at_zero,
    verification_campaign,
)
from .rational import qstr
from .symfunc import parse_class

USAGE_ERROR = 2
CHECK_FAILED = 1


def polynomial_to_json(p):
    """Graded-lex descending list of {coefficient, monomial} entries."""
    table = p.table
    out = []
    for key, coeff in p.sorted_terms():
        mono = {}
        for i, e in enumerate(table.unpack(key)):
            if e:
                mono[table.names[i]] = e
        out.append({"coefficient": qstr(coeff), "monomial": mono})
    return out


def _document(command, config, payload, timing_ms=None):
    doc = {"command": command, "config": config}
    doc.update(payload)
    if timing_ms is not None:
        doc["timing_ms"] = timing_ms
    return doc


def _emit(doc, as_json):
    if as_json:
        print(json.dumps(doc, indent=2, sort_keys=False))


def _parse_class_arg(args, space):
    try:
        return parse_class(args.class_expr, space.table, space.active_z)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR) from None


def cmd_integrate(args):
    try:
        space = parse_space(args.space)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    V = _parse_class_arg(args, space)
    config = {
        "space": args.space,
        "class": args.class_expr,
        "method": args.method,
        "form": args.form,
        "symmetrize": args.symmetrize,
        "at_zero": args.at_zero,
    }
    started = time.perf_counter()
    results = []
    values = {}
    try:
        if args.method in ("abbv", "both"):
            value = abbv_pushforward(space, V, symmetrize=args.symmetrize)
            values["abbv"] = value
            results.append({"method": "abbv", "form": None, "result": polynomial_to_json(value)})
        if args.method in ("residue", "both"):
            value = residue_pushforward(space, V, form=args.form, symmetrize=args.symmetrize)
            values["residue"] = value
            results.append(
                {"method": "residue", "form": args.form, "result": polynomial_to_json(value)}
            )
    except (SymmetryError, TorusIntError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    elapsed_ms = int((time.perf_counter() - started) * 1000)

    agreement = None
    if args.method == "both":
        agreement = values["abbv"] == values["residue"]
    payload = {"results": results, "agreement": agreement}
    if args.at_zero:
        payload["at_zero"] = {
            name: qstr(specialize_at_zero(value)) for name, value in values.items()
        }
    doc = _document("integrate", config, payload, elapsed_ms if args.timing else None)
    if args.json:
        _emit(doc, True)
    else:
        print(f"space: {space.name()}   dim = {space.dim}")
        for entry in results:
            which = entry["method"] if entry["form"] is None else f"{entry['method']} ({entry['form']})"
            value = values[entry["method"]]
            print(f"{which}: {value}")
            if args.at_zero:
                print(f"  at t=0: {qstr(specialize_at_zero(value))}")
        if agreement is not None:
            print(f"agreement: {'yes' if agreement else 'NO'}")
        if args.timing:
            print(f"elapsed: {elapsed_ms} ms")
    if agreement is False:
        return CHECK_FAILED
    return 0


def cmd_verify(args):
    try:
        space = parse_space(args.space)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.trials < 1:
        print("error: --trials must be >= 1", file=sys.stderr)
        return USAGE_ERROR
    config = {
        "space": args.space,
        "trials": args.trials,
        "max_degree": args.max_degree,
        "seed": args.seed,
        "forms": list(args.forms),
        "parallel": args.parallel,
    }
    started = time.perf_counter()
    campaign = verification_campaign(
        space,
        trials=args.trials,
        max_degree=args.max_degree,
        seed=args.seed,
        forms=args.forms,
        parallel=args.parallel,
        inject_mismatch=args.inject_mismatch,
    )
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    trials_json = [
        {"index": t.index, "degree": t.degree, "ok": t.ok, "detail": t.detail}
        for t in campaign.trials
    ]
    doc = _document(
        "verify",
        config,
        {
            "space": campaign.space,
            "passed": campaign.passed,
            "total": len(campaign.trials),
            "trials": trials_json,
        },
        elapsed_ms if args.timing else None,
    )
    if args.json:
        _emit(doc, True)
    else:
        print(f"{campaign.space}: {campaign.passed}/{len(campaign.trials)} trials passed")
        for t in campaign.trials:
            if not t.ok:
                print(f"  trial {t.index} (deg {t.degree}) FAILED: {t.detail}")
        if args.timing:
            print(f"elapsed: {elapsed_ms} ms")
    return 0 if campaign.ok else CHECK_FAILED


def cmd_dendrite(args):
    if args.k < 1 or args.n < args.k:
        print("error: need 1 <= k <= n", file=sys.stderr)
        return USAGE_ERROR
    from .pushforward import SpaceDescriptor
    from .symfunc import elementary

    space = SpaceDescriptor.grass(args.k, args.n)
    dendrite = dendrite_orthant(args.k, seed=args.seed)
    branch = dendrite.branches[0]
    orthant = moment_orthant(args.k, args.n)
    # cross-check: the assembled integrand must equal the classical one
    table = space.table
    V = elementary(1, table, args.k) ** space.dim if space.dim else elementary(0, table, args.k)
    assembled = assemble_grassmannian_formula(args.k, args.n, V, seed=args.seed)
    direct = residue_pushforward(space, V, form="rewritten")
    consistent = assembled == direct
    config = {"k": args.k, "n": args.n, "seed": args.seed}
    steps_json = [
        {
            "start": [qstr(x) for x in s.start],
            "direction": [qstr(x) for x in s.direction],
            "flipped": s.flipped,
            "wall": s.wall,
            "crossing": [qstr(x) for x in s.crossing],
        }
        for s in branch.steps
    ]
    integrand, prefactor, order = build_integrand(space, V, "rewritten")
    doc = _document(
        "dendrite",
        config,
        {
            "wall_crossings": len(branch.steps),
            "terminal_points": [[qstr(x) for x in p] for p in dendrite.terminal_points],
            "steps": steps_json,
            "euler_factor_count": len(orthant.euler_factors),
            "formula": f"(1/{args.k}!) * Res_z  prod_(i!=j)(z_i-z_j) * V(z) / prod_(i,j)(t_j-z_i)",
            "cross_check_class": str(V),
            "cross_check_ok": consistent,
        },
    )
    if args.json:
        _emit(doc, True)
    else:
        print(f"dendrite walk on the moment orthant of Hom(C^{args.k}, C^{args.n}):")
        for idx, s in enumerate(branch.steps, 1):
            flip = " (ray flipped to -l)" if s.flipped else ""
            print(
                f"  step {idx}: from ({', '.join(qstr(x) for x in s.start)}) "
                f"hit wall x_{s.wall + 1} = 0 at ({', '.join(qstr(x) for x in s.crossing)}){flip}"
            )
        print(f"  terminal fixed point: origin; {len(branch.steps)} wall crossings")
        print(f"assembled push-forward: {doc['formula']}")
        print(f"cross-check against the direct residue formula with V = {V}:")
        print(f"  value {assembled} == {direct}: {'yes' if consistent else 'NO'}")
    return 0 if consistent else CHECK_FAILED


def build_arg_parser():
    parser = argparse.ArgumentParser(
        prog="torusint",
        description="Exact torus-equivariant push-forwards over Grassmannians, "
        "by fixed-point localization and by iterated residues at infinity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--timing",
            action="store_true",
            help="include wall-clock timing (breaks byte-for-byte determinism)",
        )

    p_int = sub.add_parser("integrate", help="compute one push-forward")
    p_int.add_argument("--space", required=True, help="grass:m,n | lg:n | og-:n | og+:n | root:F:n[:m]")
    p_int.add_argument("--class", dest="class_expr", required=True, help="class expression, e.g. 's[2,1]*e[1]'")
    p_int.add_argument("--method", choices=("abbv", "residue", "both"), default="both")
    p_int.add_argument("--form", choices=FORMS, default="unified")
    p_int.add_argument("--symmetrize", action="store_true", help="average a non-symmetric class")
    p_int.add_argument("--at-zero", dest="at_zero", action="store_true", help="also report the value at t=0")
    common(p_int)
    p_int.set_defaults(func=cmd_integrate)

    p_ver = sub.add_parser("verify", help="randomized agreement campaign")
    p_ver.add_argument("--space", required=True)
    p_ver.add_argument("--trials", type=int, default=20)
    p_ver.add_argument("--max-degree", dest="max_degree", type=int, default=None)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--forms", nargs="+", choices=FORMS, default=list(FORMS))
    p_ver.add_argument("--parallel", type=int, default=1, help="worker processes")
    p_ver.add_argument(
        "--inject-mismatch",
        action="store_true",
        help="deliberately fail trial 0 (exercises the exit-status contract)",
    )
    common(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_den = sub.add_parser("dendrite", help="orthant dendrite walk and assembled formula")
    p_den.add_argument("--k", type=int, required=True)
    p_den.add_argument("--n", type=int, required=True)
    p_den.add_argument("--seed", type=int, default=0)
    common(p_den)
    p_den.set_defaults(func=cmd_dendrite)
    return parser


def main(argv=None):
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
