"""Command-line interface for cubic-composition.

Forms are written ``a0,a1,a2,a3`` in the triplicate convention, i.e. the form
``a0*x^3 + 3*a1*x^2*y + 3*a2*x*y^2 + a3*y^3``; pass ``--expanded`` to enter the
plain polynomial coefficients instead. Results go to stdout, diagnostics to
stderr. Exit codes: 0 success, 1 domain error or failed check, 2 usage or
syntax error.
"""

import argparse
import json
import logging
import re
import sys
from typing import Any, Callable, Dict, List, Optional

from cubic_composition import __version__
from cubic_composition.bijection import form_to_pair, pair_to_form
from cubic_composition.classgroup import (
    class_order,
    enumerate_classes,
    equivalent,
    identity_form,
)
from cubic_composition.cli.config import CliConfig
from cubic_composition.composition import BilinearMap, compose, tau_expansion, verify_composition
from cubic_composition.core.cubicform import CubicForm, Unimodular
from cubic_composition.core.errors import (
    DiscriminantMismatchError,
    DomainError,
    NotProjectiveError,
    ParseError,
)
from cubic_composition.core.idealmod import BalancedPair, OrientedIdeal, validate_pair
from cubic_composition.core.quadring import QuadElem
from cubic_composition.observability import ComputationObserver

logger = logging.getLogger(__name__)

# Negative integers, comma-separated integer lists and field elements such as
# "-1/2+1/2*sqrt(5)" are values, not option flags.
_NEGATIVE_VALUE = re.compile(
    r"^-(?:\d+(?:,-?\d+)*"
    r"|\d*\.\d+"
    r"|\d+(?:/\d+)?(?:\*sqrt\(-?\d+\))?(?:[+-]\d+(?:/\d+)?\*sqrt\(-?\d+\))?)$"
)


class CubicArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that accepts ``-1,-1,1,4`` as a positional value."""

    def __init__(self, *args: Any, **kwargs: Any):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VALUE


def _emit(cfg: CliConfig, payload: Any, text: str) -> None:
    if cfg.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _form(cfg: CliConfig, text: str) -> CubicForm:
    return CubicForm.parse(text, expanded=cfg.expanded)


def _same_disc(cfg: CliConfig, *forms: CubicForm) -> None:
    for f in forms:
        if f.discriminant() != cfg.disc.value:
            raise DiscriminantMismatchError(f.discriminant(), cfg.disc.value, f"form {f}")


def _build_parser() -> CubicArgumentParser:
    common = CubicArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print results as JSON")
    common.add_argument(
        "--expanded",
        action="store_true",
        help="Read forms as plain coefficients b0,b1,b2,b3 (b1, b2 divisible by 3)",
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="Log progress (-vv for debug)"
    )
    common.add_argument("--stats", action="store_true", help="Print metric statistics to stderr")

    with_disc = CubicArgumentParser(add_help=False, parents=[common])
    with_disc.add_argument("--disc", type=int, required=True, help="Discriminant D")

    parser = CubicArgumentParser(
        prog="cubic-composition",
        description="Composition of projective binary cubic forms of a fixed discriminant",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    for name, help_text in (
        ("disc", "Discriminant of a form"),
        ("hessian", "Hessian quadratic form"),
        ("covariant", "Covariant cubic form with half-integer coefficients"),
        ("projective", "Whether the Hessian is primitive"),
    ):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("form")

    act_parser = subparsers.add_parser("act", parents=[common], help="Apply a matrix of SL2(Z)")
    act_parser.add_argument("form")
    act_parser.add_argument("matrix", help="p,q,r,s meaning [[p, q], [r, s]]")

    topair = subparsers.add_parser("topair", parents=[with_disc], help="Form to balanced pair")
    topair.add_argument("form")

    toform = subparsers.add_parser("toform", parents=[with_disc], help="Balanced pair to form")
    toform.add_argument("--alpha", required=True, help="First basis element, s+t*sqrt(D)")
    toform.add_argument("--beta", required=True, help="Second basis element")
    toform.add_argument("--delta", required=True, help="The element delta")

    compose_parser = subparsers.add_parser("compose", parents=[with_disc], help="Compose two forms")
    compose_parser.add_argument("f1")
    compose_parser.add_argument("f2")

    verify = subparsers.add_parser(
        "verify", parents=[with_disc], help="Check P(X,Y) = p1'p2 + p1p2' for given X, Y"
    )
    verify.add_argument("f1")
    verify.add_argument("f2")
    verify.add_argument("P")
    verify.add_argument("--X", dest="x_map", required=True, help="m1,m2,m3,m4")
    verify.add_argument("--Y", dest="y_map", required=True, help="n1,n2,n3,n4")

    subparsers.add_parser("identity", parents=[with_disc], help="Form of the trivial class")

    equiv = subparsers.add_parser(
        "equivalent", parents=[with_disc], help="Bounded SL2(Z)-equivalence search"
    )
    equiv.add_argument("f1")
    equiv.add_argument("f2")
    equiv.add_argument("--depth", type=int, default=None, help="Search depth")

    classes = subparsers.add_parser(
        "classes", parents=[with_disc], help="Enumerate classes and their composition table"
    )
    classes.add_argument("--bound", type=int, required=True, help="Bound on |a_i|")
    classes.add_argument("--depth", type=int, default=None, help="Search depth")
    classes.add_argument("--workers", type=int, default=1, help="Processes for the scan")

    expand = subparsers.add_parser(
        "expand", parents=[with_disc], help="Coefficients of p1'p2 + p1p2'"
    )
    expand.add_argument("f1")
    expand.add_argument("f2")

    order = subparsers.add_parser("order", parents=[with_disc], help="Order of the class of a form")
    order.add_argument("form")
    order.add_argument("--depth", type=int, default=None, help="Search depth")
    return parser


def _cmd_disc(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    d = _form(cfg, ns.form).discriminant()
    _emit(cfg, {"D": d}, str(d))
    return 0


def _cmd_hessian(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    q = _form(cfg, ns.form).hessian()
    payload = {"q": list(q.coefficients), "discriminant": q.discriminant()}
    _emit(cfg, payload, str(q))
    return 0


def _cmd_covariant(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    c = _form(cfg, ns.form).covariant()
    _emit(cfg, {"c": [str(v) for v in c.coefficients]}, str(c))
    return 0


def _cmd_projective(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    result = _form(cfg, ns.form).is_projective()
    _emit(cfg, {"projective": result}, str(result).lower())
    return 0


def _cmd_act(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    result = _form(cfg, ns.form).act(Unimodular.parse(ns.matrix))
    _emit(cfg, result.to_json(), str(result))
    return 0


def _cmd_topair(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    f = _form(cfg, ns.form)
    _same_disc(cfg, f)
    pair = form_to_pair(f, cfg.disc)
    report = validate_pair(pair)
    payload: Dict[str, Any] = dict(pair.to_json())
    payload["signed_norm"] = report["signed_norm"]
    payload["balanced"] = report["passed"]
    text = "\n".join(
        [
            f"alpha: {pair.ideal.alpha}",
            f"beta: {pair.ideal.beta}",
            f"delta: {pair.delta}",
            f"signed_norm: {report['signed_norm']}",
        ]
    )
    _emit(cfg, payload, text)
    return 0


def _cmd_toform(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    disc = cfg.disc
    ideal = OrientedIdeal(QuadElem.parse(ns.alpha, disc), QuadElem.parse(ns.beta, disc))
    pair = BalancedPair(ideal, QuadElem.parse(ns.delta, disc))
    report = validate_pair(pair)
    if not report["passed"]:
        raise DomainError(f"pair {pair} is not balanced: {', '.join(report['failures'])}")
    f = pair_to_form(pair)
    _emit(cfg, f.to_json(), str(f))
    return 0


def _cmd_compose(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    f1, f2 = _form(cfg, ns.f1), _form(cfg, ns.f2)
    _same_disc(cfg, f1, f2)
    result = compose(f1, f2)
    text = "\n".join(
        [
            f"P: {result.P}",
            f"X: {','.join(map(str, result.xy.m))}",
            f"Y: {','.join(map(str, result.xy.n))}",
            f"verified: {str(result.verified).lower()}",
        ]
    )
    _emit(cfg, result.to_json(), text)
    return 0


def _cmd_verify(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    f1, f2, big_p = _form(cfg, ns.f1), _form(cfg, ns.f2), _form(cfg, ns.P)
    _same_disc(cfg, f1, f2, big_p)
    if not big_p.is_projective():
        raise NotProjectiveError(f"form {big_p} is not projective (Hessian {big_p.hessian()})")
    ok = verify_composition(f1, f2, big_p, BilinearMap.parse(ns.x_map, ns.y_map))
    _emit(cfg, {"verified": ok}, str(ok).lower())
    return 0 if ok else 1


def _cmd_identity(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    f = identity_form(cfg.disc)
    _emit(cfg, f.to_json(), str(f))
    return 0


def _cmd_equivalent(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    f1, f2 = _form(cfg, ns.f1), _form(cfg, ns.f2)
    _same_disc(cfg, f1, f2)
    verdict = equivalent(f1, f2, cfg.search_config(), obs)
    _emit(cfg, verdict.to_json(), str(verdict))
    return 0


def _cmd_classes(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    if ns.bound < 0:
        raise DomainError(f"--bound must be non-negative, got {ns.bound}")
    table = enumerate_classes(cfg.disc, ns.bound, cfg.search_config(), cfg.workers, obs)
    lines = [f"D: {table.disc.value}", f"classes: {table.order}", f"identity: {table.identity}"]
    lines += [f"{i}: {rep}" for i, rep in enumerate(table.reps)]
    lines += ["table:"] + [" ".join(map(str, row)) for row in table.table]
    _emit(cfg, table.to_json(), "\n".join(lines))
    return 0 if all(table.checks.values()) else 1


def _monomial(exps: tuple) -> str:
    names = ("x1", "y1", "x2", "y2")
    parts = [f"{n}^{e}" if e > 1 else n for n, e in zip(names, exps) if e]
    return "*".join(parts)


def _cmd_expand(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    f1, f2 = _form(cfg, ns.f1), _form(cfg, ns.f2)
    _same_disc(cfg, f1, f2)
    terms = tau_expansion(f1, f2)
    payload = {"terms": [{"monomial": list(m), "coefficient": c} for m, c in terms]}
    _emit(cfg, payload, "\n".join(f"{_monomial(m)}: {c}" for m, c in terms))
    return 0


def _cmd_order(cfg: CliConfig, ns: argparse.Namespace, obs: ComputationObserver) -> int:
    f = _form(cfg, ns.form)
    _same_disc(cfg, f)
    k = class_order(f, cfg.search_config(), obs)
    _emit(cfg, {"order": k}, str(k))
    return 0


_COMMANDS: Dict[str, Callable[[CliConfig, argparse.Namespace, ComputationObserver], int]] = {
    "disc": _cmd_disc,
    "hessian": _cmd_hessian,
    "covariant": _cmd_covariant,
    "projective": _cmd_projective,
    "act": _cmd_act,
    "topair": _cmd_topair,
    "toform": _cmd_toform,
    "compose": _cmd_compose,
    "verify": _cmd_verify,
    "identity": _cmd_identity,
    "equivalent": _cmd_equivalent,
    "classes": _cmd_classes,
    "expand": _cmd_expand,
    "order": _cmd_order,
}


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True
    )


def _print_stats(obs: ComputationObserver) -> None:
    for name, stats in obs.all_metric_stats().items():
        print(
            f"{name}: count={stats['count']} min={stats['min']:g} "
            f"max={stats['max']:g} avg={stats['avg']:g}",
            file=sys.stderr,
        )


def main(args: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI.

    Args:
        args: Optional command-line arguments

    Returns:
        Exit code
    """
    parser = _build_parser()
    ns = parser.parse_args(args)
    if not ns.command:
        parser.print_help()
        return 0

    _configure_logging(getattr(ns, "verbose", 0))
    obs = ComputationObserver()
    try:
        cfg = CliConfig.from_namespace(ns)
        code = _COMMANDS[ns.command](cfg, ns, obs)
    except ParseError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if getattr(ns, "stats", False):
        _print_stats(obs)
    return code


if __name__ == "__main__":
    sys.exit(main())


__all__ = ["CubicArgumentParser", "main"]
