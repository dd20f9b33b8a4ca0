"""
Command line front end

Every command reads geometry/class/lattice documents, calls exactly one
library operation and prints one canonical JSON document on stdout.
Exit codes: 0 success, 1 domain error (document {"error": {...}}),
2 usage error.
"""

import argparse
import dataclasses
import re
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .core.chern import (
    ContractedClass, contract, euler_char, twist, validate_integrality,
)
from .core.config import ToolkitConfig, get_config, load_config
from .core.constants import (
    CHARGE_KIND_BASE, CHARGE_KIND_BASE_TORSION, CHARGE_KIND_MIXED, CHARGE_KIND_RELATIVE, CHARGE_KINDS,
    EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE_ERROR, LOG_LEVELS, SLOPE_NAMES, WALL_DIRECTIONS,
)
from .core.exceptions import ToolkitError
from .core.geometry import (
    DivisorClass, FibredGeometry, canonical_class, hodge_sides_1, hodge_sides_2,
)
from .core.logger import logger
from .core.rationals import format_rational, parse_rational
from .stability.pbundle import (
    ConjectureCoefficients, bmt_coefficients, conjecture_margin, corollary_window_check,
    positivity_sign_check, region_check, slope_of_OH, slope_of_shifted_canonical_twist, z_l,
)
from .stability.slopes import hn_filtration, mu_c, mu_hf, z_base, z_base_torsion
from .stability.tilt import (
    TiltParams, bogomolov_f_delta, bogomolov_h_delta, delta_bar, delta_tilde, delta_tilde_t,
    heart_membership_necessary, nu_c_alpha_beta, nu_mixed, nu_relative, slope_function_by_name,
    support_q_form, z_mixed, z_relative, z_relative_torsion,
)
from .stability.walls import (
    EnumerationBounds, FirstWall, enumerate_destabilizer_classes, first_wall, wall_alpha_sq,
    wall_curve_sample,
)
from .utils.io import (
    bounds_from_dict, candidates_from_doc, chow_from_dict, class_from_dict, class_to_dict,
    conjecture_coeffs_from_dict, dump_json, geometry_from_dict, geometry_to_dict,
    is_chow_document, lattice_from_dict, load_json,
)

Document = Dict[str, Any]

# flags whose value may legitimately start with '-'
_VALUE_FLAGS = {"--alpha-sq", "--beta", "--t", "--t0", "--l", "--beta-range", "--divisor"}
_NEGATIVE_VALUE = re.compile(r'^[-−][\d.]')


class UsageError(Exception):
    """A flag combination the parser cannot express was rejected"""


# ============================================================================
# ARGUMENT TYPES
# ============================================================================

def rational_arg(token: str) -> Fraction:
    try:
        return parse_rational(token)
    except ToolkitError as e:
        raise argparse.ArgumentTypeError(str(e))


def beta_range_arg(token: str) -> Tuple[Fraction, Fraction, int]:
    parts = token.split(':')
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected lo:hi:steps, got {token!r}")
    lo, hi = rational_arg(parts[0]), rational_arg(parts[1])
    try:
        steps = int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"steps must be an integer, got {parts[2]!r}")
    if steps < 1:
        raise argparse.ArgumentTypeError(f"steps must be >= 1, got {steps}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty beta range {token!r}")
    return lo, hi, steps


def divisor_arg(token: str) -> DivisorClass:
    parts = token.split(':')
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected x:y, got {token!r}")
    return DivisorClass(rational_arg(parts[0]), rational_arg(parts[1]))


def hint_arg(token: str) -> Optional[bool]:
    choices = {"yes": True, "no": False, "auto": None}
    if token not in choices:
        raise argparse.ArgumentTypeError(f"expected yes, no or auto, got {token!r}")
    return choices[token]


def _join_negative_values(argv: Sequence[str]) -> List[str]:
    """Rewrite ``--beta -1/2`` as ``--beta=-1/2`` so argparse keeps the value"""
    joined: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            joined.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


# ============================================================================
# DOCUMENT LOADING
# ============================================================================

def _geometry(args) -> FibredGeometry:
    if args.geometry is None:
        raise UsageError("--geometry is required")
    return geometry_from_dict(load_json(args.geometry, "geometry file"))


def _class_from_file(path: str, geom: FibredGeometry, name: str = "class file") -> ContractedClass:
    doc = load_json(path, name)
    if is_chow_document(doc):
        return contract(chow_from_dict(doc), geom)
    return class_from_dict(doc)


def _class(args, geom: FibredGeometry, attr: str = "class_file", flag: str = "--class") -> ContractedClass:
    path = getattr(args, attr, None)
    if path is None:
        raise UsageError(f"{flag} is required")
    return _class_from_file(path, geom)


_FLAGS = {"class_file": "--class"}
_BASE_KINDS = (CHARGE_KIND_BASE, CHARGE_KIND_BASE_TORSION)
_BASE_SLOPES = ("mu_hf", "mu_c")


def _need(args, *names: str):
    """Usage-check flags before any file is opened"""
    for name in names:
        if getattr(args, name, None) is None:
            flag = _FLAGS.get(name, f"--{name.replace('_', '-')}")
            raise UsageError(f"{flag} is required")


def _params(args) -> TiltParams:
    _need(args, "alpha_sq", "beta")
    return TiltParams(args.alpha_sq, args.beta, args.t).validate()


def _slope_json(slope) -> str:
    return slope.to_json()


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_geometry(args, config: ToolkitConfig) -> Document:
    _need(args, "geometry")
    geom = _geometry(args)
    doc: Document = {
        "geometry": geometry_to_dict(geom),
        "h3": format_rational(geom.h3),
        "h2f": format_rational(geom.h2f),
    }
    if geom.is_projective_bundle:
        k = canonical_class(geom)
        doc["canonical_class"] = [format_rational(k.x), format_rational(k.y)]
        doc["chi_o"] = str(1 - geom.base_genus)
    if args.divisor is not None:
        hodge = {}
        for label, sides in (("check_1", hodge_sides_1), ("check_2", hodge_sides_2)):
            lhs, rhs = sides(geom, args.divisor)
            hodge[label] = {"lhs": format_rational(lhs), "rhs": format_rational(rhs), "holds": lhs <= rhs}
        doc["hodge"] = hodge
    return doc


def cmd_twist(args, config) -> Document:
    _need(args, "geometry", "class_file", "beta")
    geom = _geometry(args)
    v = _class(args, geom)
    tw = twist(v, args.beta, geom)
    return {"twisted": {
        "beta": format_rational(tw.beta), "ch0": format_rational(tw.ch0),
        "h2_ch1b": format_rational(tw.h2_ch1b), "hf_ch1b": format_rational(tw.hf_ch1b),
        "h_ch2b": format_rational(tw.h_ch2b), "f_ch2b": format_rational(tw.f_ch2b),
        "ch3b": format_rational(tw.ch3b),
    }}


def cmd_charge(args, config) -> Document:
    _need(args, "geometry", "class_file")
    if args.kind not in _BASE_KINDS:
        _need(args, "alpha_sq", "beta")
    geom = _geometry(args)
    v = _class(args, geom)
    kind = args.kind
    if kind == CHARGE_KIND_BASE:
        charge = z_base(v, geom)
    elif kind == CHARGE_KIND_BASE_TORSION:
        charge = z_base_torsion(v)
    elif kind == CHARGE_KIND_RELATIVE:
        charge = z_relative(v, args.alpha_sq, args.beta, geom)
    elif kind == "relative-torsion":
        charge = z_relative_torsion(v, args.alpha_sq, args.beta, geom)
    else:
        charge = z_mixed(v, _params(args), geom)
    return {"charge": charge.to_json()}


def cmd_slope(args, config) -> Document:
    _need(args, "geometry", "class_file")
    if args.kind not in _BASE_KINDS:
        _need(args, "alpha_sq", "beta")
    geom = _geometry(args)
    v = _class(args, geom)
    kind = args.kind
    if kind == CHARGE_KIND_BASE:
        slope = mu_hf(v, geom)
    elif kind == CHARGE_KIND_BASE_TORSION:
        slope = mu_c(v, geom, args.c_torsion)
    elif kind == CHARGE_KIND_RELATIVE:
        slope = nu_relative(v, args.alpha_sq, args.beta, geom)
    elif kind == "c-alpha-beta":
        slope = nu_c_alpha_beta(v, _params(args), geom, args.c_torsion)
    else:
        slope = nu_mixed(v, _params(args), geom)
    return {"slope": _slope_json(slope)}


def cmd_disc(args, config) -> Document:
    _need(args, "geometry", "class_file", "beta")
    geom = _geometry(args)
    v = _class(args, geom)
    t = args.t
    return {
        "delta_bar": format_rational(delta_bar(v, args.beta, geom)),
        "delta_tilde": format_rational(delta_tilde(v, args.beta, geom)),
        "delta_tilde_t": format_rational(delta_tilde_t(v, args.beta, t, geom)),
        "support_q": format_rational(support_q_form(v, args.beta, geom)),
        "f_delta": format_rational(bogomolov_f_delta(v, geom)),
        "h_delta": format_rational(bogomolov_h_delta(v, geom)),
    }


def cmd_membership(args, config) -> Document:
    _need(args, "geometry", "class_file", "beta")
    geom = _geometry(args)
    v = _class(args, geom)
    return {"membership": heart_membership_necessary(v, args.beta, geom).to_json()}


def cmd_chi(args, config) -> Document:
    _need(args, "geometry", "class_file")
    geom = _geometry(args)
    v = _class(args, geom)
    return {"chi": format_rational(euler_char(v, geom))}


def cmd_validate(args, config) -> Document:
    doc: Document = {}
    if args.class_file is None and args.lattice is None:
        raise UsageError("validate needs --class or --lattice")
    if args.class_file is not None:
        raw = load_json(args.class_file, "class file")
        if is_chow_document(raw):
            geom = _geometry(args)
            v = _class_from_file(args.class_file, geom)
        else:
            v = class_from_dict(raw)
        doc["class"] = class_to_dict(v)
        doc["integral"] = validate_integrality(v)
    if args.lattice is not None:
        lat = lattice_from_dict(load_json(args.lattice, "lattice file"))
        doc["lattice"] = {"valid": True, "nodes": len(lat.nodes), "root": lat.root}
    return doc


def cmd_hn(args, config) -> Document:
    _need(args, "geometry", "lattice")
    if args.slope not in _BASE_SLOPES:
        _need(args, "alpha_sq", "beta")
    geom = _geometry(args)
    lat = lattice_from_dict(load_json(args.lattice, "lattice file"))
    params = None
    if args.slope not in _BASE_SLOPES:
        params = _params(args)
    slope_of = slope_function_by_name(args.slope, geom, params, args.c_torsion)
    hn = hn_filtration(lat, slope_of)
    return {
        "factors": [{"class": class_to_dict(g), "slope": _slope_json(s)} for g, s in hn.factors],
        "chain": list(hn.chain),
        "mu_plus": _slope_json(hn.mu_plus),
        "mu_minus": _slope_json(hn.mu_minus),
    }


def cmd_wall_solve(args, config) -> Document:
    _need(args, "geometry", "class_file", "other", "beta")
    geom = _geometry(args)
    v = _class(args, geom)
    w = _class(args, geom, "other", "--other")
    return {"wall": wall_alpha_sq(v, w, args.beta, args.t, geom).to_json()}


def cmd_wall_first(args, config) -> Document:
    _need(args, "geometry", "class_file", "beta", "alpha_sq", "candidates")
    geom = _geometry(args)
    v = _class(args, geom)
    candidates = candidates_from_doc(load_json(args.candidates, "candidates file"))
    result = first_wall(v, candidates, args.beta, args.t, args.alpha_sq, geom, args.direction)
    if isinstance(result, FirstWall):
        return {"wall": {
            "at_alpha_sq": format_rational(result.alpha_sq),
            "witnesses": [class_to_dict(w) for w in result.witnesses],
        }}
    return {"wall": result.to_json()}


def cmd_wall_enum(args, config: ToolkitConfig) -> Document:
    _need(args, "geometry", "class_file", "beta")
    geom = _geometry(args)
    v = _class(args, geom)
    if args.bounds is not None:
        bounds = bounds_from_dict(load_json(args.bounds, "bounds file"))
    else:
        bounds = EnumerationBounds.uniform(config.enumeration.max_abs_value, config.enumeration.lattice)
    classes = enumerate_destabilizer_classes(
        v, args.beta, args.t, geom, bounds,
        show_progress=args.progress or config.enumeration.show_progress,
    )
    return {"count": len(classes), "classes": [class_to_dict(w) for w in classes]}


def cmd_wall_scan(args, config: ToolkitConfig) -> Document:
    _need(args, "geometry", "class_file", "other", "beta_range")
    geom = _geometry(args)
    v = _class(args, geom)
    w = _class(args, geom, "other", "--other")
    lo, hi, steps = args.beta_range
    curve = wall_curve_sample(v, w, args.t, lo, hi, steps, geom)

    precision = config.scan.precision
    lines = [f"# beta  sqrt(alpha_sq) -- second column approximate, {precision} decimal digits"]
    for beta, alpha_sq in curve.points:
        alpha = np.format_float_positional(
            np.sqrt(np.float64(alpha_sq.numerator) / np.float64(alpha_sq.denominator)),
            precision=precision, unique=False, trim='k',
        )
        lines.append(f"{format_rational(beta)} {alpha}")
    return {
        "points": [{"beta": format_rational(b), "alpha_sq": format_rational(a)} for b, a in curve.points],
        "all_alpha_betas": [format_rational(b) for b in curve.all_alpha_betas],
        "plot_data_approximate": "\n".join(lines),
    }


def _need_coeffs(args):
    if not args.from_riemann_roch and args.conjecture_coeffs is None:
        raise UsageError("one of --conjecture-coeffs FILE or --from-riemann-roch is required")


def _conjecture_coeffs(args, geom: FibredGeometry) -> ConjectureCoefficients:
    _need_coeffs(args)
    if args.from_riemann_roch:
        return ConjectureCoefficients.from_riemann_roch(args.beta, geom)
    return conjecture_coeffs_from_dict(load_json(args.conjecture_coeffs, "coefficients file"))


def cmd_pb_coeffs(args, config) -> Document:
    _need(args, "geometry", "beta")
    geom = _geometry(args)
    coeffs = bmt_coefficients(args.beta, geom, args.alpha_sq)
    return {
        "coefficients": coeffs.to_json(),
        "riemann_roch_specialization": ConjectureCoefficients.from_riemann_roch(args.beta, geom).to_json(),
        "corollary_window": corollary_window_check(args.beta),
    }


def cmd_pb_region(args, config: ToolkitConfig) -> Document:
    _need(args, "geometry", "alpha_sq", "beta")
    geom = _geometry(args)
    t0 = args.t0 if args.t0 is not None else config.region.default_t0_value
    params = TiltParams(args.alpha_sq, args.beta, args.t)
    return {"region": region_check(params, t0, geom).to_json()}


def cmd_pb_margin(args, config) -> Document:
    _need(args, "geometry", "class_file", "alpha_sq", "beta")
    _need_coeffs(args)
    geom = _geometry(args)
    v = _class(args, geom)
    params = _params(args)
    coeffs = _conjecture_coeffs(args, geom)
    return {
        "margin": format_rational(conjecture_margin(v, params, coeffs, geom)),
        "coefficients": coeffs.to_json(),
    }


def cmd_pb_zl(args, config) -> Document:
    _need(args, "geometry", "class_file", "alpha_sq", "beta", "l")
    _need_coeffs(args)
    geom = _geometry(args)
    v = _class(args, geom)
    params = _params(args)
    coeffs = _conjecture_coeffs(args, geom)
    return {"zl": z_l(v, params, args.l, coeffs, geom).to_json()}


def cmd_pb_slopes(args, config) -> Document:
    _need(args, "geometry", "alpha_sq", "beta")
    geom = _geometry(args)
    params = _params(args)
    return {
        "slope_of_OH": format_rational(slope_of_OH(params, geom)),
        "slope_of_shifted_canonical_twist": format_rational(slope_of_shifted_canonical_twist(params, geom)),
    }


def cmd_pb_positivity(args, config) -> Document:
    _need(args, "geometry", "class_file", "other", "alpha_sq", "beta", "l")
    _need_coeffs(args)
    geom = _geometry(args)
    g_class = _class(args, geom)
    k_class = _class(args, geom, "other", "--other")
    params = _params(args)
    coeffs = _conjecture_coeffs(args, geom)
    return {"positivity": positivity_sign_check(g_class, k_class, params, coeffs, args.l, geom).to_json()}


# ============================================================================
# PARSER
# ============================================================================

def _common(p: argparse.ArgumentParser, *flags: str):
    """Attach the shared flags named in ``flags``"""
    if "geometry" in flags:
        p.add_argument('--geometry', metavar='FILE', help='geometry JSON file')
    if "class" in flags:
        p.add_argument('--class', dest='class_file', metavar='FILE', help='class JSON file')
    if "other" in flags:
        p.add_argument('--other', metavar='FILE', help='second class JSON file')
    if "params" in flags:
        p.add_argument('--alpha-sq', dest='alpha_sq', type=rational_arg, metavar='Q')
        p.add_argument('--beta', type=rational_arg, metavar='Q')
        p.add_argument('--t', type=rational_arg, default=Fraction(0), metavar='Q',
                       help='mixing parameter t >= 0 (default 0)')
    if "hint" in flags:
        p.add_argument('--c-torsion', dest='c_torsion', type=hint_arg, default=None,
                       metavar='yes|no|auto', help='override the C-torsion proxy')
    if "coeffs" in flags:
        group = p.add_mutually_exclusive_group()
        group.add_argument('--conjecture-coeffs', dest='conjecture_coeffs', metavar='FILE')
        group.add_argument('--from-riemann-roch', '--from-main2', dest='from_riemann_roch', action='store_true',
                           help='use the P(E) specialization of the coefficients')
        p.add_argument('--l', type=rational_arg, metavar='Q')
    p.add_argument('--json', action='store_true', help='JSON output (the default and only format)')


def _add_tilt_commands(sub):
    kinds = list(CHARGE_KINDS)

    p = sub.add_parser('charge', help='evaluate a central charge')
    _common(p, "geometry", "class", "params")
    p.add_argument('--kind', choices=kinds + ["relative-torsion"], default=CHARGE_KIND_MIXED)
    p.set_defaults(handler=cmd_charge)

    p = sub.add_parser('slope', help='evaluate a slope')
    _common(p, "geometry", "class", "params", "hint")
    p.add_argument('--kind', choices=kinds + ["c-alpha-beta"], default=CHARGE_KIND_MIXED)
    p.set_defaults(handler=cmd_slope)

    p = sub.add_parser('disc', help='discriminants of a class')
    _common(p, "geometry", "class", "params")
    p.set_defaults(handler=cmd_disc)

    p = sub.add_parser('membership', help='necessary conditions for the tilted heart')
    _common(p, "geometry", "class", "params")
    p.set_defaults(handler=cmd_membership)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='mixedtilt',
        description='Exact numerics for tilt and mixed tilt stability on fibred threefolds',
    )
    parser.add_argument('--config', '-c', metavar='FILE', help='YAML configuration file')
    parser.add_argument('--log-level', dest='log_level',
                        choices=LOG_LEVELS)
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('geometry', help='show a geometry and optional Hodge-index checks')
    _common(p, "geometry")
    p.add_argument('--divisor', type=divisor_arg, metavar='X:Y', help='divisor xH + yF')
    p.set_defaults(handler=cmd_geometry)

    p = sub.add_parser('twist', help='twisted Chern character components')
    _common(p, "geometry", "class", "params")
    p.set_defaults(handler=cmd_twist)

    _add_tilt_commands(sub)

    tilt = sub.add_parser('tilt', help='tilt charges, slopes, discriminants and membership')
    _add_tilt_commands(tilt.add_subparsers(dest='tilt_command', required=True))

    p = sub.add_parser('chi', help='Euler characteristic on P(E)')
    _common(p, "geometry", "class")
    p.set_defaults(handler=cmd_chi)

    p = sub.add_parser('hn', help='Harder-Narasimhan filtration over a subobject lattice')
    _common(p, "geometry", "params", "hint")
    p.add_argument('--lattice', metavar='FILE')
    p.add_argument('--slope', choices=SLOPE_NAMES, default='mu_hf')
    p.set_defaults(handler=cmd_hn)

    p = sub.add_parser('validate', help='lattice integrality of a class, or lattice structure')
    _common(p, "geometry", "class")
    p.add_argument('--lattice', metavar='FILE')
    p.set_defaults(handler=cmd_validate)

    wall = sub.add_parser('wall', help='walls of the mixed slope')
    wall_sub = wall.add_subparsers(dest='wall_command', required=True)

    p = wall_sub.add_parser('solve', help='alpha^2 where two classes align')
    _common(p, "geometry", "class", "other", "params")
    p.set_defaults(handler=cmd_wall_solve)

    p = wall_sub.add_parser('first', help='first wall from a starting alpha^2')
    _common(p, "geometry", "class", "params")
    p.add_argument('--candidates', metavar='FILE')
    p.add_argument('--direction', choices=WALL_DIRECTIONS, default='below')
    p.set_defaults(handler=cmd_wall_first)

    p = wall_sub.add_parser('enum', help='enumerate candidate destabilizing classes')
    _common(p, "geometry", "class", "params")
    p.add_argument('--bounds', metavar='FILE')
    p.add_argument('--progress', action='store_true', help='progress bar on stderr')
    p.set_defaults(handler=cmd_wall_enum)

    p = wall_sub.add_parser('scan', help='trace a wall as beta varies')
    _common(p, "geometry", "class", "other", "params")
    p.add_argument('--beta-range', dest='beta_range', type=beta_range_arg, metavar='A:B:STEPS')
    p.set_defaults(handler=cmd_wall_scan)

    pb = sub.add_parser('pbundle', help='projective bundle computations')
    pb_sub = pb.add_subparsers(dest='pbundle_command', required=True)

    p = pb_sub.add_parser('coeffs', help='Riemann-Roch coefficients a0, a1, a2')
    _common(p, "geometry", "params")
    p.set_defaults(handler=cmd_pb_coeffs)

    p = pb_sub.add_parser('region', help='parameter region check')
    _common(p, "geometry", "params")
    p.add_argument('--t0', type=rational_arg, metavar='Q')
    p.set_defaults(handler=cmd_pb_region)

    p = pb_sub.add_parser('margin', help='conjecture margin of a class')
    _common(p, "geometry", "class", "params", "coeffs")
    p.set_defaults(handler=cmd_pb_margin)

    p = pb_sub.add_parser('zl', help='the charge z_l')
    _common(p, "geometry", "class", "params", "coeffs")
    p.set_defaults(handler=cmd_pb_zl)

    p = pb_sub.add_parser('slopes', help='closed-form slopes of O(H) and O(K_X + H)[1]')
    _common(p, "geometry", "params")
    p.set_defaults(handler=cmd_pb_slopes)

    p = pb_sub.add_parser('positivity', help='sign check of Re z_l on G, K and G - K')
    _common(p, "geometry", "class", "other", "params", "coeffs")
    p.set_defaults(handler=cmd_pb_positivity)

    return parser


# ============================================================================
# ENTRY POINTS
# ============================================================================

def _configure(args) -> ToolkitConfig:
    config = load_config(args.config) if args.config else get_config()
    if args.log_level:
        config = dataclasses.replace(config, log_level=args.log_level)
    config.apply_logging()
    return config


def run(argv: Sequence[str]) -> Tuple[int, Optional[Document]]:
    """
    Parse ``argv`` and execute one command.

    Returns:
        (exit code, result document); the document is None on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(list(argv)))
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR), None

    handler: Callable = args.handler
    try:
        config = _configure(args)
        return EXIT_OK, handler(args, config)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR, None
    except ToolkitError as e:
        logger.debug(f"{args.command} failed: {e}")
        return EXIT_DOMAIN_ERROR, {"error": {"name": e.error_name, "message": str(e)}}


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, doc = run(sys.argv[1:] if argv is None else argv)
    if doc is not None:
        print(dump_json(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
