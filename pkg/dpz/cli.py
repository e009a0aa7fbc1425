# dpz — exact arithmetic for del Pezzo surfaces and elliptic algebras
# Copyright (C) 2024-2026 Dr Horst Herb
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Command-line front end: ``dpz <command> [options]``.

Every command prints one report on stdout in the format chosen by
``--format`` (``text``, ``tsv`` with a header row, or one ``json``
document).  Logging goes to stderr.  Exit status is 0 on success, 1 when
an input violates a precondition of the operation and 2 on usage errors.

Negative fractions must be attached to their flag, e.g. ``--slope=-1/2``.

Usage::

    dpz roots --d 1 --count
    dpz resolution --V 1,0 --dL 1 --depth 4
    dpz moduli --slope 0 --r 1 --d 1 --format tsv
    dpz classify-slope --slope=-3/8 --format json
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction
from math import gcd

from dpz import __version__
from dpz.classify import (
    RankSpec,
    alcove_candidates,
    alcove_points,
    class_functional,
    classify_slope,
    configuration_search,
    decimation_orders,
    polarization_restrict,
    pullback_form,
)
from dpz.config import DpzConfig, load_config
from dpz.elliptic import (
    Autoequivalence,
    AutoequivalenceKind,
    DetClass,
    DivisorialBundle,
    RelationSet,
    apply_autoequivalence,
    center_series,
    chi_e,
    hilbert_series,
    hom_ext_dims,
    koszul_test,
    list_autoequivalence_kinds,
    parse_elliptic_class,
    quotient_series,
    rational_guess,
    resolution_exists,
)
from dpz.errors import DomainError, DpzError
from dpz.lattice import (
    LatticeVector,
    closest_vectors,
    highest_roots,
    parse_degree_key,
    parse_vector,
    positive_roots,
    reduce_to_alcove,
    roots_of_Qperp,
    simple_roots,
    subsystem_analyze,
    vectors_within,
)
from dpz.reports import FORMATS, TABLE, TEXT, Report, render_reports
from dpz.resolution import SequenceSpec, free_shape, minimality_report
from dpz.surface import (
    SurfaceClass,
    euler_pairing,
    line_twist_max,
    parse_surface_class,
    phi_star,
    point_class,
    rational_curve_bundle,
    structure_sheaf,
    twist_constant,
    validate_collection,
)
from dpz.templates import TemplateEngine

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

CANDIDATE_COLUMNS = ("index", "coords", "norm", "chi_max", "status")
MODULI_COLUMNS = ("slope", "r", "d", "type", "degrees", "fiber_dim", "torsion", "status")

Handler = Callable[[argparse.Namespace, DpzConfig], "list[Report] | str"]


# ---------------------------------------------------------------------------
# Argument types and shared parsing
# ---------------------------------------------------------------------------

def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact fraction: {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _degree(args: argparse.Namespace, config: DpzConfig) -> tuple[int, bool]:
    return parse_degree_key(args.d) if args.d is not None else config.degree_key


def _delta(args: argparse.Namespace, config: DpzConfig) -> int:
    return args.delta if args.delta is not None else config.delta


def _relations(args: argparse.Namespace, config: DpzConfig) -> RelationSet:
    text = args.relations if args.relations is not None else config.relations
    return RelationSet.parse(text)


def _bundle(texts: Sequence[str]) -> DivisorialBundle:
    return DivisorialBundle.of(parse_elliptic_class(t) for t in texts)


def _pairs(pairs: Sequence[tuple[int, ...]]) -> list[str]:
    return ["-".join(str(i) for i in p) for p in pairs]


# ---------------------------------------------------------------------------
# Lattice commands
# ---------------------------------------------------------------------------

def _cmd_roots(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    degree, even = _degree(args, config)
    if args.simple:
        roots = simple_roots(degree, even)
    elif args.highest:
        roots = highest_roots(degree, even)
    elif args.positive:
        roots = positive_roots(degree, even)
    else:
        roots = roots_of_Qperp(degree, even)
    key = LatticeVector.zero(degree, even).key
    if args.count:
        if args.format == TEXT:
            return f"{len(roots)}\n"
        return [Report(TABLE, ("d", "count"), ({"d": key, "count": len(roots)},))]
    rows = tuple({"index": i, "root": r.serialize()} for i, r in enumerate(roots))
    return [Report("vector", ("index", "root"), rows, f"roots d={key}", tuple(roots))]


def _cmd_alcove(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    if args.points is not None:
        points = alcove_points(args.points)
        rows = tuple(
            {"index": i, "coords": p.scaled_coords(args.points, include_affine=True)}
            for i, p in enumerate(points)
        )
        return [Report("alcove", ("index", "coords"), rows,
                       f"alcove points of level {args.points}", points)]
    if args.vector is None:
        raise DomainError("alcove needs --vector or --points")
    reduced, log = reduce_to_alcove(parse_vector(args.vector), args.mode)
    if args.mode == "finite":
        row = {"representative": reduced.serialize(), "steps": len(log)}
        return [Report("rational_vector", ("representative", "steps"), (row,),
                       "dominant representative", (reduced,))]
    scaled = reduced.scaled_coords(args.scale, include_affine=True)
    n = len(reduced.simple)
    row = {
        "representative": reduced.representative.serialize(),
        "simple": scaled[:n],
        "affine": scaled[n:],
        "steps": len(log),
    }
    return [Report("alcove", ("representative", "simple", "affine", "steps"), (row,),
                   "alcove point", (reduced,))]


def _cmd_cvp(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    target = parse_vector(args.vector)
    if args.radius is not None:
        found = vectors_within(target, args.radius)
        pairs = [(dist, v) for dist, v in found]
        title = f"lattice vectors within {args.radius}"
    else:
        best = closest_vectors(target)
        pairs = [(best.distance, v) for v in best.vectors]
        title = f"closest vectors at distance {best.distance}"
    rows = tuple({"vector": v.serialize(), "distance": dist} for dist, v in pairs)
    return [Report("vector", ("vector", "distance"), rows, title, tuple(v for _, v in pairs))]


# ---------------------------------------------------------------------------
# Surface commands
# ---------------------------------------------------------------------------

def _cmd_pairing(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    m, n = parse_surface_class(args.M), parse_surface_class(args.N)
    row = {"M": m.serialize(), "N": n.serialize(), "chi": euler_pairing(m, n)}
    return [Report(TABLE, ("M", "N", "chi"), (row,), "Euler pairing")]


def _cmd_twist(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    e, f = parse_surface_class(args.E), parse_surface_class(args.F)
    best = line_twist_max(e, f)
    constant = twist_constant(e, f)
    rows = tuple({"maximizer": d.serialize(), "value": best.value} for d in best.maximizers)
    return [Report("vector", ("maximizer", "value"), rows,
                   f"line twist maximum {best.value} (constant {constant})", best.maximizers)]


def _cmd_phistar(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    if args.curve is not None:
        curve = parse_vector(args.curve)
        if not isinstance(curve, LatticeVector):
            raise DomainError(f"curve class {args.curve!r} is not integral")
        source, image = curve.serialize(), rational_curve_bundle(curve)
    elif args.M is not None:
        m = parse_surface_class(args.M)
        source, image = m.serialize(), phi_star(m, args.mode)
    else:
        raise DomainError("phistar needs --M or --curve")
    row = {"input": source, "output": image.serialize(), "exceptional": image.is_exceptional()}
    return [Report("surface_class", ("input", "output", "exceptional"), (row,),
                   "transformed class", (image,))]


def _cmd_collection(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    classes = [parse_surface_class(c) for c in args.classes]
    dets = [DetClass.parse(d) for d in args.det] if args.det else None
    report = validate_collection(classes, dets, _relations(args, config))
    row = {
        "ok": report.ok,
        "not_exceptional": report.not_exceptional,
        "slope_violations": _pairs(report.slope_violations),
        "nonzero_pairings": [f"{i}-{j}:{v}" for i, j, v in report.nonzero_pairings],
        "root_violations": _pairs(report.root_violations),
    }
    return [Report(TABLE, tuple(row), (row,), f"collection of {len(classes)} classes")]


# ---------------------------------------------------------------------------
# Elliptic commands
# ---------------------------------------------------------------------------

def _cmd_chi_e(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    m, n = parse_elliptic_class(args.M), parse_elliptic_class(args.N)
    row: dict[str, object] = {"M": str(m), "N": str(n), "chi": chi_e(m, n)}
    if m.is_normalized() and n.is_normalized():
        row["hom"], row["ext"] = hom_ext_dims(m, n, _relations(args, config))
    return [Report(TABLE, ("M", "N", "chi", "hom", "ext"), (row,), "Euler pairing on the curve")]


def _cmd_autoeq(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    if args.list:
        rows = tuple(
            {"kind": k.kind, "description": k.description, "needs_divisorial": k.needs_divisorial}
            for k in list_autoequivalence_kinds()
        )
        return [Report(TABLE, ("kind", "description", "needs_divisorial"), rows,
                       "autoequivalence kinds")]
    if args.kind is None or args.N is None:
        raise DomainError("autoeq needs --kind and --N (or --list)")
    psi = Autoequivalence(args.dL) if args.dL is not None else None
    m = parse_elliptic_class(args.M) if args.M is not None else None
    n = parse_elliptic_class(args.N)
    if args.power < 1:
        raise DomainError(f"power must be >= 1, got {args.power}")
    images = []
    current = n
    for _ in range(args.power):
        current = apply_autoequivalence(args.kind, current, psi=psi, m=m)
        images.append(current)
    rows = tuple({"power": i + 1, "image": str(c)} for i, c in enumerate(images))
    return [Report("elliptic_class", ("power", "image"), rows, f"{args.kind} applied to {n}",
                   tuple(images))]


def _cmd_resolution(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    seq = SequenceSpec.from_bundle(_bundle(args.V), Autoequivalence(args.dL))
    shape = free_shape(seq, args.target, args.depth)
    minimal = minimality_report(shape, _relations(args, config)).minimal
    row = {"target": shape.target, "depth": shape.depth, "shape": shape.bracket(),
           "minimal": minimal}
    return [Report("shape", ("target", "depth", "shape", "minimal"), (row,),
                   "free resolution", (shape,))]


def _cmd_minimality(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    seq = SequenceSpec.from_bundle(_bundle(args.V), Autoequivalence(args.dL))
    shape = free_shape(seq, args.target, args.depth)
    relations = _relations(args, config)
    report = minimality_report(shape, relations)
    row = {
        "relations": str(relations),
        "minimal": report.minimal,
        "culprits": [f"{j}@{a}-{b}" for j, (a, b) in report.culprits],
    }
    return [Report(TABLE, ("relations", "minimal", "culprits"), (row,), shape.bracket())]


def _cmd_koszul(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    v = parse_elliptic_class(args.V)
    psi = Autoequivalence(args.dL)
    row = {
        "V": str(v),
        "dL": args.dL,
        "koszul": koszul_test((v.rank, v.deg), psi),
        "resolution": resolution_exists((v.rank, v.deg, gcd(v.rank, v.deg)), psi, v),
    }
    return [Report(TABLE, ("V", "dL", "koszul", "resolution"), (row,), "Koszul test")]


def _cmd_hilbert(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    v = _bundle(args.V)
    psi = Autoequivalence(args.dL)
    if args.series == "center":
        v.check_window(psi.dL)
        series = center_series(psi, args.n)
    elif args.series == "quotient":
        series = quotient_series(v, psi, args.n, _relations(args, config))
    else:
        series = hilbert_series(v, psi, args.n, _relations(args, config))
    title = f"{args.series} series"
    if args.guess:
        guess = rational_guess(series)
        title += f"; {guess}" if guess is not None else "; no rational guess"
    rows = tuple({"n": n, "dim": dim} for n, dim in enumerate(series))
    return [Report(TABLE, ("n", "dim"), rows, title)]


# ---------------------------------------------------------------------------
# Classification commands
# ---------------------------------------------------------------------------

def _candidate_report(cands: Sequence, title: str, reasons: bool = False) -> Report:
    columns = CANDIDATE_COLUMNS + (("reason",) if reasons else ())
    rows = tuple(
        {
            "index": i,
            "coords": c.alcove.scaled_coords(c.rank),
            "norm": c.norm,
            "chi_max": c.chi_max,
            "status": c.status.value,
            "reason": c.reason,
        }
        for i, c in enumerate(cands)
    )
    return Report("candidate", columns, rows, title, tuple(cands))


def _cmd_candidates(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    cands = alcove_candidates(args.slope, args.norm)
    return [_candidate_report(cands, f"alcove candidates of slope {args.slope}")]


def _cmd_classify_slope(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    cands = classify_slope(args.slope, args.r_max, jobs=args.jobs or config.jobs)
    return [_candidate_report(cands, f"classification of slope {args.slope}", reasons=True)]


def _moduli_report(descriptors: Sequence, title: str) -> Report:
    rows = tuple(d.row() for d in descriptors)
    return Report("moduli", MODULI_COLUMNS, rows, title, tuple(descriptors))


def _cmd_moduli(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    degree, _ = _degree(args, config)
    spec = RankSpec(args.r, args.slope)
    found = configuration_search(spec, degree, _delta(args, config), jobs=args.jobs or config.jobs)
    return [_moduli_report(found, f"moduli of slope {args.slope}, r={args.r}, d={degree}")]


def _cmd_decimate(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    orders = decimation_orders(args.degrees)
    rows = tuple({"order": g} for g in orders)
    return [Report(TABLE, ("order",), rows, f"decimation orders of {args.degrees}")]


def _fixed_class(text: str, degree: int, even: bool) -> SurfaceClass:
    if text == "point":
        return point_class(degree, even)
    if text == "structure":
        return structure_sheaf(degree, even)
    return parse_surface_class(text)


def _cmd_polarization(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    degree, even = _degree(args, config)
    form = pullback_form(degree, _delta(args, config), even)
    fixed = [class_functional(_fixed_class(t, degree, even)) for t in args.fix]
    verdict = polarization_restrict(form, fixed)
    row = {
        "definiteness": verdict.definiteness.value,
        "free_dim": verdict.free_dim,
        "kernel": " ".join("(" + ",".join(str(c) for c in k) + ")" for k in verdict.kernel),
    }
    return [Report("verdict", ("definiteness", "free_dim", "kernel"), (row,),
                   f"polarization on {','.join(form.labels)}", (verdict,))]


# ---------------------------------------------------------------------------
# Tables and configuration
# ---------------------------------------------------------------------------

ROOT_TABLE_DEGREES = range(1, 10)
SHAPE_TABLE_DEGREES = (1, 2, 3)
SHAPE_TABLE_RELATIONS = ("", "2q")
MINUS_ONE_RANGE = range(2, 10)
MINUS_TWO_RANGE = range(3, 16, 2)
MODULI_TABLE_MAX = 10


def _root_table() -> Report:
    rows = []
    for d in ROOT_TABLE_DEGREES:
        roots = roots_of_Qperp(d)
        report = subsystem_analyze(roots, d)
        rows.append({"d": d, "roots": len(roots), "type": report.type_string})
    return Report(TABLE, ("d", "roots", "type"), tuple(rows), "root systems of Q^⊥")


def _shape_table() -> Report:
    rows = []
    for dL in SHAPE_TABLE_DEGREES:  # noqa: N806
        seq = SequenceSpec.line_bundles(Autoequivalence(dL))
        shape = free_shape(seq, 0, 4)
        row: dict[str, object] = {"dL": dL, "shape": shape.bracket()}
        for text in SHAPE_TABLE_RELATIONS:
            row[f"minimal[{text or '-'}]"] = minimality_report(
                shape, RelationSet.parse(text)
            ).minimal
        rows.append(row)
    columns = ("dL", "shape") + tuple(f"minimal[{t or '-'}]" for t in SHAPE_TABLE_RELATIONS)
    return Report(TABLE, columns, tuple(rows), "resolutions of simple modules over line bundles")


def _slope_table(slopes: Sequence[Fraction], title: str, jobs: int) -> Report:
    rows = []
    for slope in slopes:
        for c in classify_slope(slope, slope.denominator, jobs=jobs):
            rows.append({
                "slope": str(slope),
                "coords": c.alcove.scaled_coords(c.rank),
                "norm": c.norm,
                "chi_max": c.chi_max,
                "status": c.status.value,
            })
    return Report(TABLE, ("slope", "coords", "norm", "chi_max", "status"), tuple(rows), title)


def _integer_moduli_table(jobs: int) -> Report:
    found = []
    for r in range(1, MODULI_TABLE_MAX):
        for d in range(1, MODULI_TABLE_MAX - r + 1):
            found.extend(configuration_search(RankSpec(r), d, jobs=jobs))
    return _moduli_report(found, "moduli of integer slope")


def _fractional_moduli_table(jobs: int) -> Report:
    cases = [(Fraction(-1, 2), r, d) for r in (1, 2, 3) for d in (1, 2, 3) if r + d <= 4]
    cases += [(Fraction(-1, 2), 9, 1), (Fraction(-1, 2), 1, 9)]
    cases += [(Fraction(-1, 3), r, d) for r, d in ((1, 1), (1, 2), (2, 1))]
    cases += [(Fraction(-1, 4), 1, 1), (Fraction(-2, 5), 1, 1)]
    found = []
    for slope, r, d in cases:
        found.extend(configuration_search(RankSpec(r, slope), d, jobs=jobs))
    return _moduli_report(found, "moduli of fractional slope")


def _cmd_tables(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    jobs = args.jobs or config.jobs
    reports = [
        _root_table(),
        _shape_table(),
        _slope_table([Fraction(-1, r) for r in MINUS_ONE_RANGE], "slope -1/r", jobs),
    ]
    if args.paper:
        reports.append(
            _slope_table([Fraction(-2, r) for r in MINUS_TWO_RANGE], "slope -2/r", jobs)
        )
        reports.append(
            _slope_table([Fraction(-3, 8), Fraction(-3, 10)], "slopes -3/8 and -3/10", jobs)
        )
        reports.append(_integer_moduli_table(jobs))
        reports.append(_fractional_moduli_table(jobs))
    logger.info("Generated %d tables", len(reports))
    return reports


def _cmd_config(args: argparse.Namespace, config: DpzConfig) -> list[Report] | str:
    reports = []
    if args.install_templates:
        if config.template_dir is None:
            raise DomainError("template_dir is not configured")
        installed = TemplateEngine(user_dir=config.template_dir).install_defaults()
        rows = tuple({"installed": str(p)} for p in installed)
        reports.append(Report(TABLE, ("installed",), rows, "installed templates"))
    rows = tuple({"key": k, "value": v} for k, v in config.to_dict().items())
    reports.append(Report("config", ("key", "value"), rows, "effective configuration", (config,)))
    return reports


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help="output format (default: text)")
    common.add_argument("--config", default=argparse.SUPPRESS, help="key=value config file")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker processes for searches")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="debug logging on stderr")
    return common


def _add_degree(p: argparse.ArgumentParser, delta: bool = False) -> None:
    p.add_argument("--d", help="degree key, 1..9 or 8F0 (default from config)")
    if delta:
        p.add_argument("--delta", type=int, help="degree of the image of [O] (default from config)")


def _add_relations(p: argparse.ArgumentParser) -> None:
    p.add_argument("--relations", help="relation generators, e.g. '2q, L-q'")


def _add_bundle(p: argparse.ArgumentParser, depth: bool = True) -> None:
    p.add_argument("--V", action="append", required=True,
                   help="summand class rank,deg[;det]; repeat for several summands")
    p.add_argument("--dL", type=int, required=True, help="degree of L")
    if depth:
        p.add_argument("--depth", type=int, default=4)
        p.add_argument("--target", type=int, default=0, help="index i of the simple module S_i")
    _add_relations(p)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="dpz", parents=[common],
        description="Exact arithmetic for del Pezzo surfaces and elliptic algebras.",
    )
    parser.add_argument("--version", action="version", version=f"dpz {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command("roots", _cmd_roots, "roots of Q^⊥")
    _add_degree(p)
    p.add_argument("--count", action="store_true")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--positive", action="store_true")
    group.add_argument("--simple", action="store_true")
    group.add_argument("--highest", action="store_true")

    p = command("alcove", _cmd_alcove, "reduce a vector to the dominant chamber or alcove")
    p.add_argument("--vector", help="d=<d>:[...]")
    p.add_argument("--mode", choices=("finite", "affine"), default="affine")
    p.add_argument("--scale", type=int, default=1, help="multiply alcove coordinates by r")
    p.add_argument("--points", type=int, metavar="R", help="list the alcove points of level R")

    p = command("cvp", _cmd_cvp, "closest vectors of Q^⊥ to a rational target")
    p.add_argument("--vector", required=True, help="d=<d>:[...]")
    p.add_argument("--radius", type=_fraction, help="list every vector within this distance²")

    p = command("pairing", _cmd_pairing, "Euler pairing χ(M, N) on the surface")
    p.add_argument("--M", required=True, help="(<rank>; d=<d>:[...]; <chi>)")
    p.add_argument("--N", required=True)

    p = command("twist", _cmd_twist, "maximum of χ(E′(−D), E) over D in Q^⊥")
    p.add_argument("--E", required=True)
    p.add_argument("--F", required=True, help="the class E′")

    p = command("phistar", _cmd_phistar, "apply Φ* or build a rational-curve bundle")
    p.add_argument("--M")
    p.add_argument("--mode", choices=("general", "anticanonical"), default="general")
    p.add_argument("--curve", help="rational curve class d=<d>:[...]")

    p = command("collection", _cmd_collection, "validate an exceptional collection")
    p.add_argument("--class", dest="classes", action="append", required=True)
    p.add_argument("--det", action="append", help="determinant of the restriction, per class")
    _add_relations(p)

    p = command("chi-e", _cmd_chi_e, "Euler pairing and Hom/Ext on the curve")
    p.add_argument("--M", required=True, help="rank,deg[;det]")
    p.add_argument("--N", required=True)
    _add_relations(p)

    p = command("autoeq", _cmd_autoeq, "apply an autoequivalence of the curve")
    p.add_argument("--kind", choices=[k.value for k in AutoequivalenceKind])
    p.add_argument("--N")
    p.add_argument("--M", help="divisorial class for PhiDiv")
    p.add_argument("--dL", type=int, help="degree of L for Psi")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--list", action="store_true")

    p = command("resolution", _cmd_resolution, "free resolution shape of a simple module")
    _add_bundle(p)

    p = command("minimality", _cmd_minimality, "minimality of the free resolution")
    _add_bundle(p)

    p = command("koszul", _cmd_koszul, "Koszulness of B_{V,Ψ}")
    p.add_argument("--V", required=True, help="rank,deg")
    p.add_argument("--dL", type=int, required=True)

    p = command("hilbert", _cmd_hilbert, "Hilbert series of B_{V,Ψ}")
    _add_bundle(p, depth=False)
    p.add_argument("--n", type=int, default=10, help="last degree")
    p.add_argument("--series", choices=("algebra", "center", "quotient"), default="algebra")
    p.add_argument("--guess", action="store_true", help="fit a rational function")

    p = command("candidates", _cmd_candidates, "alcove candidates of a slope")
    p.add_argument("--slope", type=_fraction, required=True)
    p.add_argument("--norm", type=int, help="restrict to this v²")

    p = command("classify-slope", _cmd_classify_slope, "classify the classes of a slope")
    p.add_argument("--slope", type=_fraction, required=True)
    p.add_argument("--r-max", type=int, default=15)

    p = command("moduli", _cmd_moduli, "moduli configurations and their fibers")
    p.add_argument("--slope", type=_fraction, default=Fraction(0))
    p.add_argument("--r", type=int, required=True, help="multiplicity")
    _add_degree(p, delta=True)

    p = command("decimate", _cmd_decimate, "orbifold orders of a weighted projective space")
    p.add_argument("--degrees", type=_int_list, required=True, help="e.g. 1,2,2,3")

    p = command("polarization", _cmd_polarization, "restrict the pulled-back polarization")
    _add_degree(p, delta=True)
    p.add_argument("--fix", action="append", default=[],
                   help="class whose functional is fixed: point, structure or a class")

    p = command("tables", _cmd_tables, "regenerate the reference tables")
    p.add_argument("--paper", "--full", dest="paper", action="store_true",
                   help="add the slower slope and moduli tables")

    p = command("config", _cmd_config, "print the effective configuration")
    p.add_argument("--install-templates", action="store_true")

    return parser


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------

def run(argv: Sequence[str] | None = None) -> int:
    """Run one command; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    args.format = getattr(args, "format", TEXT)
    args.jobs = getattr(args, "jobs", None)
    logging.basicConfig(
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        config = load_config(getattr(args, "config", None))
        if args.jobs is not None:
            config = config.merged(jobs=args.jobs)
        result = args.handler(args, config)
        if isinstance(result, str):
            sys.stdout.write(result)
        else:
            engine = TemplateEngine(user_dir=config.template_dir)
            sys.stdout.write(render_reports(result, args.format, engine))
    except DpzError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
