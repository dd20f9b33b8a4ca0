#!/usr/bin/env python3
"""
Module Test Runner

Worked examples for each toolkit module. Every function is a plain
assert-based test, so pytest collects them too.

Usage:
    python test_module.py <module_name>

Examples:
    python test_module.py chern
    python test_module.py walls
    python test_module.py all
"""

import sys
import os
import tempfile
from fractions import Fraction as Q
from pathlib import Path

# Add the project root to Python path
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

from mixedtilt.core.chern import (
    ChowClass, ContractedClass, contract, dual_class, euler_char, fiber_restriction_class, lift,
    line_bundle_class, pushforward_fiber_class, shift_class, structure_sheaf_chow,
    tensor_by_divisor, tensor_contracted, twist, validate_integrality,
)
from mixedtilt.core.geometry import (
    DivisorClass, hodge_check_1, hodge_check_2, hodge_sides_1, hodge_sides_2,
    new_generic, new_projective_bundle,
)

P2xP1 = new_projective_bundle(0, 0)
PE01 = new_projective_bundle(0, 1)

O_X = ContractedClass.of(1, 0, 0, 0, 0, 0)
O_H = ContractedClass.of(1, 0, 1, 0, Q(1, 2), 0)            # on P2xP1
O_H_01 = ContractedClass.of(1, 1, 1, Q(1, 2), Q(1, 2), Q(1, 6))  # on P(E), deg E = 1
O_F = ContractedClass.of(0, 1, 0, 0, 0, 0)
W_WALL = ContractedClass.of(2, 0, 1, -1, 0, 0)


def test_rationals():
    """Test exact value types"""
    print("=" * 80)
    print("TESTING: mixedtilt/core/rationals.py")
    print("=" * 80)

    from mixedtilt.core.exceptions import ParseError
    from mixedtilt.core.rationals import (
        ChargeValue, PLUS_INFINITY, Slope, format_rational, parse_rational,
    )

    print("\n[1/3] Testing parse_rational...")
    assert parse_rational("−23/8") == Q(-23, 8)
    assert parse_rational("4/2") == 2
    assert format_rational(parse_rational("4/2")) == "2"
    assert parse_rational("-1/2") == Q(-1, 2)
    assert parse_rational("0.25") == Q(1, 4)
    for bad in ("1/0", "abc", "1/2/3", "", "1e3"):
        try:
            parse_rational(bad)
        except ParseError as e:
            assert e.error_name == "parse-error"
        else:
            raise AssertionError(f"{bad!r} should not parse")
    print("  ✅ parse_rational working")

    print("\n[2/3] Testing Slope ordering...")
    assert Slope.finite(3) < PLUS_INFINITY
    assert PLUS_INFINITY == Slope.plus_infinity()
    assert not PLUS_INFINITY < PLUS_INFINITY
    assert max(Slope.finite(-1), PLUS_INFINITY, Slope.finite(7)) == PLUS_INFINITY
    assert PLUS_INFINITY.to_json() == "+inf"
    assert Slope.finite(Q(6, 4)).to_json() == "3/2"
    print("  ✅ Slope working")

    print("\n[3/3] Testing ChargeValue...")
    z = ChargeValue(Q(1, 2), 1)
    assert z.slope() == Slope.finite(Q(-1, 2))
    assert ChargeValue(5, 0).slope() == PLUS_INFINITY
    assert z.alignment(z.scale(3)) == 0
    assert (z - z).is_zero
    assert z.to_json() == {"re": "1/2", "im": "1"}
    print("  ✅ ChargeValue working")

    print("\n" + "=" * 80)
    print("✅ ALL RATIONALS TESTS PASSED!")
    print("=" * 80)


def test_geometry():
    """Test fibred geometry and Hodge-index checks"""
    print("=" * 80)
    print("TESTING: mixedtilt/core/geometry.py")
    print("=" * 80)

    from mixedtilt.core.exceptions import ValidationError

    print("\n[1/3] Testing constructors...")
    assert (P2xP1.h3, P2xP1.h2f, P2xP1.base_genus) == (0, 1, 0)
    assert (PE01.h3, PE01.h2f) == (1, 1)
    g = new_projective_bundle(2, -3)
    assert (g.h3, g.h2f, g.base_genus) == (-3, 1, 2)
    assert g.is_projective_bundle
    generic = new_generic(1, Q(5, 2), 3)
    assert not generic.is_projective_bundle
    for args in ((-1, 0, 1), (0, 1, 0)):
        try:
            new_generic(*args)
        except ValidationError:
            pass
        else:
            raise AssertionError(f"new_generic{args} should fail")
    print("  ✅ constructors working")

    print("\n[2/3] Testing hodge_check_1...")
    assert hodge_sides_1(P2xP1, DivisorClass(1, 1)) == (1, 1)
    assert hodge_sides_1(new_projective_bundle(0, 5), DivisorClass(0, 7)) == (0, 0)
    assert hodge_sides_1(new_projective_bundle(1, -2), DivisorClass(3, 4)) == (9, 9)
    assert hodge_check_1(new_projective_bundle(1, -2), DivisorClass(3, 4))
    print("  ✅ hodge_check_1 working")

    print("\n[3/3] Testing hodge_check_2...")
    assert hodge_sides_2(PE01, DivisorClass(1, 1)) == (3, 4)
    assert hodge_sides_2(P2xP1, DivisorClass(0, 1)) == (0, 0)
    assert hodge_sides_2(PE01, DivisorClass(1, 0)) == (1, 2)
    assert hodge_check_2(PE01, DivisorClass(1, 1))
    print("  ✅ hodge_check_2 working")

    print("\n" + "=" * 80)
    print("✅ ALL GEOMETRY TESTS PASSED!")
    print("=" * 80)


def test_chern():
    """Test Chern character arithmetic"""
    print("=" * 80)
    print("TESTING: mixedtilt/core/chern.py")
    print("=" * 80)

    print("\n[1/5] Testing twist...")
    tw = twist(O_X, -1, P2xP1)
    assert (tw.hf_ch1b, tw.f_ch2b, tw.h2_ch1b, tw.h_ch2b, tw.ch3b) == (1, Q(1, 2), 0, 0, 0)
    tw = twist(O_H_01, 1, PE01)
    assert (tw.ch0, tw.h2_ch1b, tw.hf_ch1b, tw.h_ch2b, tw.f_ch2b, tw.ch3b) == (1, 0, 0, 0, 0, 0)
    tw = twist(W_WALL, 0, P2xP1)
    assert (tw.ch0, tw.h2_ch1b, tw.hf_ch1b, tw.h_ch2b, tw.f_ch2b, tw.ch3b) == W_WALL.components()
    print("  ✅ twist working")

    print("\n[2/5] Testing tensor_by_divisor / contract / lift...")
    O = structure_sheaf_chow()
    assert tensor_by_divisor(O, DivisorClass(1, 0), PE01) == ChowClass(1, 1, 0, Q(1, 2), 0, Q(1, 6))
    assert tensor_by_divisor(O, DivisorClass(0, 5), PE01) == ChowClass(1, 0, 5, 0, 0, 0)
    assert tensor_by_divisor(ChowClass(2, 1, -1, 0, 3, 1), DivisorClass(0, 0), PE01) == ChowClass(2, 1, -1, 0, 3, 1)
    assert contract(ChowClass(1, 1, 0, Q(1, 2), 0, 0), P2xP1) == O_H
    assert contract(ChowClass(1, 1, 0, Q(1, 2), 0, Q(1, 6)), PE01) == O_H_01
    assert contract(O, P2xP1) == O_X
    assert lift(O_H, P2xP1) == ChowClass(1, 1, 0, Q(1, 2), 0, 0)
    assert lift(ContractedClass(), P2xP1).is_zero
    assert line_bundle_class(P2xP1, DivisorClass(1, 0)) == O_H
    print("  ✅ tensor_by_divisor, contract, lift working")

    print("\n[3/5] Testing duals, shifts and fiber classes...")
    assert dual_class(O_X) == ContractedClass.of(-1, 0, 0, 0, 0, 0)
    assert dual_class(O_H) == ContractedClass.of(-1, 0, 1, 0, Q(-1, 2), 0)
    assert shift_class(W_WALL, 0) == W_WALL
    assert shift_class(O_F, 1) == ContractedClass.of(0, -1, 0, 0, 0, 0)
    assert shift_class(W_WALL, 2) == W_WALL
    assert pushforward_fiber_class(P2xP1, 1, 0, 0) == O_F
    assert pushforward_fiber_class(PE01, 1, 1, Q(1, 2)) == ContractedClass.of(0, 1, 0, 1, 0, Q(1, 2))
    assert pushforward_fiber_class(PE01, 0, 0, 0).is_zero
    assert fiber_restriction_class(O_H_01, PE01) == pushforward_fiber_class(PE01, 1, 1, Q(1, 2))
    assert fiber_restriction_class(O_X, PE01) == ContractedClass.of(0, 1, 0, 0, 0, 0)
    assert fiber_restriction_class(ContractedClass.of(0, 4, 0, 2, 0, 9), PE01).is_zero
    print("  ✅ duals and fiber classes working")

    print("\n[4/5] Testing euler_char...")
    for g in range(4):
        for e in (-2, 0, 3):
            assert euler_char(O_X, new_projective_bundle(g, e)) == 1 - g
    assert euler_char(O_H, P2xP1) == 3
    assert euler_char(O_H_01, PE01) == 4
    # O(-H) is acyclic on P2xP1
    assert euler_char(tensor_contracted(O_X, DivisorClass(-1, 0), P2xP1), P2xP1) == 0
    print("  ✅ euler_char working")

    print("\n[5/5] Testing validate_integrality...")
    assert validate_integrality(ContractedClass.of(1, 0, 0, 0, 0, Q(1, 6)))
    assert not validate_integrality(ContractedClass.of(1, 0, 0, Q(1, 3), 0, 0))
    assert validate_integrality(ContractedClass.of(0, 1, 0, Q(1, 2), Q(-1, 2), 0))
    print("  ✅ validate_integrality working")

    print("\n" + "=" * 80)
    print("✅ ALL CHERN TESTS PASSED!")
    print("=" * 80)


def test_slopes():
    """Test base slopes, charges and HN filtrations"""
    print("=" * 80)
    print("TESTING: mixedtilt/stability/slopes.py")
    print("=" * 80)

    from mixedtilt.core.exceptions import InconsistentHintError, LatticeError, NotAFiltrationError
    from mixedtilt.core.rationals import ChargeValue, PLUS_INFINITY, Slope
    from mixedtilt.stability.slopes import (
        RelativeSlope, SubobjectLattice, all_chains, chain_factors, hn_filtration,
        mu_c, mu_hf, z_base, z_base_torsion,
    )

    print("\n[1/4] Testing mu_hf and mu_c...")
    assert mu_hf(O_H, P2xP1) == Slope.finite(1)
    assert mu_hf(O_H_01, PE01) == Slope.finite(1)
    assert mu_hf(O_F, P2xP1) == PLUS_INFINITY
    assert mu_hf(O_X, P2xP1) == Slope.finite(0)
    assert mu_c(O_F, P2xP1) == Slope.finite(0)
    assert mu_c(ContractedClass.of(0, 1, 0, 1, 0, Q(1, 2)), PE01) == Slope.finite(1)
    assert mu_c(ContractedClass.of(0, 0, 0, 1, 0, 0), PE01) == PLUS_INFINITY
    try:
        mu_c(O_X, P2xP1, c_torsion_hint=True)
    except InconsistentHintError as e:
        assert e.error_name == "inconsistent-hint"
    else:
        raise AssertionError("hint on a rank-one class should be rejected")
    print("  ✅ mu_hf and mu_c working")

    print("\n[2/4] Testing base charges...")
    assert z_base(O_H_01, PE01) == ChargeValue(-1, 1)
    assert z_base(O_F, PE01).is_zero
    assert z_base(ContractedClass(), PE01).is_zero
    assert z_base_torsion(fiber_restriction_class(O_H_01, PE01)) == z_base(O_H_01, PE01)
    assert z_base_torsion(ContractedClass()).is_zero
    assert z_base_torsion(ContractedClass.of(0, 1, 0, 3, 0, 0)) == ChargeValue(-3, 1)
    print("  ✅ base charges working")

    print("\n[3/4] Testing hn_filtration...")
    slope = RelativeSlope(P2xP1)
    single = SubobjectLattice({"v": O_H}, (), "v")
    hn = hn_filtration(single, slope)
    assert hn.factors == ((O_H, Slope.finite(1)),)

    a = ContractedClass.of(1, 0, 2, 0, 0, 0)
    b = ContractedClass.of(1, 0, 1, 0, 0, 0)
    two = SubobjectLattice({"a": a, "v": a + b}, (("a", "v"),), "v")
    hn = hn_filtration(two, slope)
    assert hn.factors == ((a, Slope.finite(2)), (b, Slope.finite(1)))
    assert (hn.mu_plus, hn.mu_minus) == (Slope.finite(2), Slope.finite(1))
    assert hn.chain == ("a", "v")

    a = ContractedClass.of(1, 0, 1, 0, 0, 0)
    b = ContractedClass.of(1, 0, 3, 0, 0, 0)
    c = ContractedClass.of(1, 0, 2, 0, 0, 0)
    chain = SubobjectLattice(
        {"A": a, "AB": a + b, "ABC": a + b + c}, (("A", "AB"), ("AB", "ABC")), "ABC",
    )
    hn = hn_filtration(chain, slope)
    assert hn.factors == ((a + b + c, Slope.finite(2)),)
    decreasing = [
        ch for ch in all_chains(chain)
        if all(x[1] > y[1] for x, y in zip(chain_factors(chain, ch, slope),
                                           chain_factors(chain, ch, slope)[1:]))
    ]
    assert decreasing == [hn.chain]

    bad = SubobjectLattice(
        {"A": O_X, "R": ContractedClass.of(Q(1, 2), 0, -1, 0, 0, 0)}, (("A", "R"),), "R",
    )
    try:
        hn_filtration(bad, slope)
    except NotAFiltrationError:
        pass
    else:
        raise AssertionError("increasing slopes must be reported")
    print("  ✅ hn_filtration working")

    print("\n[4/4] Testing lattice validation...")
    broken = [
        ({"v": O_X}, (), "w"),
        ({"v": O_X, "z": ContractedClass()}, (("z", "v"),), "v"),
        ({"v": O_X, "a": O_H}, (("a", "v"), ("v", "a")), "v"),
        ({"v": O_X, "a": O_X}, (("a", "v"),), "v"),
        ({"v": O_X, "a": O_H}, (), "v"),
        ({"v": O_X}, (("v", "v"),), "v"),
        # zero quotient only through a chain of inclusions
        ({"v": O_X, "b": O_X + O_H, "a": O_X}, (("a", "b"), ("b", "v")), "v"),
        # v/a is not b/0
        ({"v": O_X + O_H + O_F, "a": O_X, "b": O_H}, (("a", "v"), ("b", "v")), "v"),
        # a and b sit under two incomparable nodes
        ({"v": (O_X + O_H).scale(3), "u": O_X + O_H, "w": O_X + O_H, "a": O_X, "b": O_H},
         (("a", "u"), ("b", "u"), ("a", "w"), ("b", "w"), ("u", "v"), ("w", "v")), "v"),
    ]
    for nodes, edges, root in broken:
        try:
            SubobjectLattice(nodes, edges, root)
        except LatticeError as e:
            assert e.error_name == "invalid-lattice"
        else:
            raise AssertionError(f"lattice {nodes}, {edges} should be rejected")

    diamond = SubobjectLattice({"a": O_X, "b": O_H, "v": O_X + O_H}, (("a", "v"), ("b", "v")), "v")
    hn = hn_filtration(diamond, slope)
    assert hn.factors == ((O_H, Slope.finite(1)), (O_X, Slope.finite(0)))
    assert hn.chain == ("b", "v")
    print("  ✅ lattice validation working")

    print("\n" + "=" * 80)
    print("✅ ALL SLOPES TESTS PASSED!")
    print("=" * 80)


def test_tilt():
    """Test tilt charges, slopes, discriminants and thresholds"""
    print("=" * 80)
    print("TESTING: mixedtilt/stability/tilt.py")
    print("=" * 80)

    from mixedtilt.core.exceptions import ThresholdError, ValidationError
    from mixedtilt.core.rationals import ChargeValue, PLUS_INFINITY, Slope
    from mixedtilt.stability.slopes import SubobjectLattice, hn_filtration
    from mixedtilt.stability.tilt import (
        MembershipReport, TiltParams, delta_bar, delta_tilde, delta_tilde_t,
        heart_membership_necessary, kernel_seminegativity_check, nu_c_alpha_beta, nu_mixed,
        nu_relative, q_form, slope_function_by_name, support_q_form, t_stability_threshold,
        t_stability_threshold_from_lattice, z_mixed, z_relative,
    )

    print("\n[1/6] Testing relative tilt...")
    assert z_relative(O_X, 1, -1, P2xP1) == ChargeValue(0, 1)
    assert z_relative(O_F, 3, 2, P2xP1).is_zero
    assert z_relative(O_H, 1, 0, P2xP1) == ChargeValue(0, 1)
    assert nu_relative(O_H, 1, 0, P2xP1) == Slope.finite(0)
    assert nu_relative(O_X, 1, 0, P2xP1) == PLUS_INFINITY
    assert nu_relative(O_X, 1, -1, P2xP1) == Slope.finite(0)
    print("  ✅ relative tilt working")

    print("\n[2/6] Testing mixed tilt...")
    p = TiltParams(1, 0, 2)
    assert z_mixed(O_H, p, P2xP1) == ChargeValue(Q(1, 2), 1)
    assert nu_mixed(O_H, p, P2xP1) == Slope.finite(Q(-1, 2))
    assert z_mixed(O_F, TiltParams(1, Q(3, 2), 1), P2xP1) == ChargeValue(Q(3, 2), 0)
    assert z_mixed(ContractedClass(), p, P2xP1).is_zero
    assert nu_mixed(O_X, TiltParams(5, 0, 3), P2xP1) == PLUS_INFINITY
    assert nu_mixed(W_WALL, TiltParams(1, Q(-1, 2), 0), P2xP1) == Slope.finite(-1)
    for bad in (TiltParams(0, 0, 0), TiltParams(1, 0, -1)):
        try:
            bad.validate()
        except ValidationError:
            pass
        else:
            raise AssertionError(f"{bad} should not validate")
    print("  ✅ mixed tilt working")

    print("\n[3/6] Testing nu_C^{alpha,beta} and heart membership...")
    o_f1 = ContractedClass.of(0, 1, 0, 1, 0, Q(1, 2))
    assert nu_c_alpha_beta(o_f1, TiltParams(1, 0), PE01) == Slope.finite(0)
    assert nu_c_alpha_beta(O_H, TiltParams(2, Q(-1, 3)), P2xP1) == nu_relative(O_H, 2, Q(-1, 3), P2xP1)
    assert nu_c_alpha_beta(ContractedClass.of(0, 0, 0, 0, 0, 1), TiltParams(1, 0), P2xP1) == PLUS_INFINITY

    report = heart_membership_necessary(O_F, 0, P2xP1)
    assert report.verdict == MembershipReport.CONSISTENT_DEGENERATE
    assert set(report.flags) == {"hf_ch1b_zero", "ch0_zero", "h_ch2b_zero", "f_ch2b_zero"}
    assert heart_membership_necessary(O_H, 0, P2xP1).verdict == MembershipReport.CONSISTENT
    report = heart_membership_necessary(O_X, Q(1, 2), P2xP1)
    assert report.is_violation and report.reason.startswith("clause 1")
    report = heart_membership_necessary(ContractedClass.of(0, 0, 0, 0, 0, -1), 0, P2xP1)
    assert report.is_violation and report.reason.startswith("clause 3")
    print("  ✅ nu_C and membership working")

    print("\n[4/6] Testing discriminants...")
    v = ContractedClass.of(1, 0, 0, -1, 0, 0)
    assert delta_bar(v, Q(-1, 2), P2xP1) == 0
    assert delta_bar(ContractedClass.of(0, 0, 1, 0, 1, 0), Q(7, 3), P2xP1) == 1
    assert support_q_form(ContractedClass.of(0, 0, 1, 0, 1, 0), 0, P2xP1) == 1
    assert support_q_form(O_H, 0, P2xP1) == 0
    assert delta_tilde(v, Q(-1, 2), P2xP1) == 1
    assert delta_tilde(ContractedClass(), 3, P2xP1) == 0
    assert delta_tilde_t(v, Q(-1, 2), 1, P2xP1) == Q(9, 8)
    assert delta_tilde_t(v, Q(-1, 2), 0, P2xP1) == delta_tilde(v, Q(-1, 2), P2xP1)
    # line bundles: (a - beta)^2 e / 2, independent of the F-degree
    pe3 = new_projective_bundle(1, 3)
    for y in (-2, 0, 5):
        l = line_bundle_class(pe3, DivisorClass(2, y))
        assert delta_bar(l, Q(1, 3), pe3) == 0
        assert delta_tilde(l, 0, pe3) == 6
        assert delta_tilde(l, Q(1, 2), pe3) == Q(27, 8)
        assert delta_tilde_t(l, 0, 4, pe3) == 6 + 2 * 4
    print("  ✅ discriminants working")

    print("\n[5/6] Testing q_form and kernel semi-negativity...")
    assert q_form(1, DivisorClass(1, 2), 3, 1, P2xP1) == 0
    assert q_form(2, DivisorClass(0, 9), 5, 4, PE01) == -10
    assert q_form(0, DivisorClass(1, 1), 7, 0, PE01) == 2
    assert q_form(2, DivisorClass(0, 5), 2, 0, P2xP1) == -4
    assert q_form(1, DivisorClass(0, 0), 8, 3, P2xP1) == -8
    assert kernel_seminegativity_check(1, 0, P2xP1, samples=200, seed=7)
    assert kernel_seminegativity_check(4, 3, PE01, samples=200, seed=8)
    print("  ✅ q_form working")

    print("\n[6/6] Testing t-stability threshold and slope functions...")
    assert t_stability_threshold(Slope.finite(2), Slope.finite(1), Slope.finite(3), None) == 0
    assert t_stability_threshold(Slope.finite(2), Slope.finite(1), Slope.finite(3), Slope.finite(1)) == Q(1, 2)
    assert t_stability_threshold(Slope.finite(0), Slope.finite(1), Slope.finite(3), Slope.finite(1)) == 0
    for args in ((PLUS_INFINITY, Slope.finite(1), Slope.finite(3), Slope.finite(1)),
                 (Slope.finite(2), Slope.finite(1), Slope.finite(1), Slope.finite(1))):
        try:
            t_stability_threshold(*args)
        except ThresholdError as e:
            assert e.error_name == "undefined-threshold"
        else:
            raise AssertionError("threshold should be undefined")
    single = SubobjectLattice({"v": O_H}, (), "v")
    assert t_stability_threshold_from_lattice(single, 1, 0, P2xP1) == 0

    mixed = slope_function_by_name("nu_mixed", P2xP1, TiltParams(1, 0, 2))
    assert mixed(O_H) == Slope.finite(Q(-1, 2))
    assert hn_filtration(single, mixed).mu_plus == Slope.finite(Q(-1, 2))
    try:
        slope_function_by_name("nu_relative", P2xP1)
    except ValidationError:
        pass
    else:
        raise AssertionError("tilt slopes need parameters")
    print("  ✅ thresholds and slope functions working")

    print("\n" + "=" * 80)
    print("✅ ALL TILT TESTS PASSED!")
    print("=" * 80)


def test_walls():
    """Test the wall solver and destabilizer enumeration"""
    print("=" * 80)
    print("TESTING: mixedtilt/stability/walls.py")
    print("=" * 80)

    from mixedtilt.core.chern import ideal_sheaf_of_point_class
    from mixedtilt.core.exceptions import EmptyAmbientError
    from mixedtilt.stability.walls import (
        ALL_ALPHA, NO_WALL, EnumerationBounds, FirstWall, WallSolution,
        enumerate_destabilizer_classes, first_wall, wall_alpha_sq, wall_curve_sample,
    )

    print("\n[1/4] Testing wall_alpha_sq...")
    assert wall_alpha_sq(O_X, W_WALL, Q(-1, 2), 0, P2xP1) == WallSolution.at(1)
    assert wall_alpha_sq(O_X, W_WALL, Q(-1, 2), 0, P2xP1).to_json() == {"at_alpha_sq": "1"}
    for beta, t in ((0, 0), (Q(-1, 2), 3), (2, Q(1, 3))):
        assert wall_alpha_sq(O_X, ideal_sheaf_of_point_class(), beta, t, P2xP1) == ALL_ALPHA
    assert wall_alpha_sq(O_X, O_H, -1, 0, P2xP1) == NO_WALL
    assert NO_WALL.to_json() == {"no_wall": True}
    print("  ✅ wall_alpha_sq working")

    print("\n[2/4] Testing first_wall...")
    result = first_wall(O_X, [W_WALL], Q(-1, 2), 0, 4, P2xP1)
    assert result == FirstWall(Q(1), (W_WALL,))
    result = first_wall(O_X, [W_WALL, O_H, W_WALL], Q(-1, 2), 0, 4, P2xP1)
    assert result.witnesses == (W_WALL, W_WALL)
    assert first_wall(O_X, [W_WALL], Q(-1, 2), 0, Q(1, 2), P2xP1, "above") == FirstWall(Q(1), (W_WALL,))
    assert first_wall(O_X, [W_WALL], Q(-1, 2), 0, Q(1, 2), P2xP1) == NO_WALL
    assert first_wall(O_X, [O_H, ideal_sheaf_of_point_class()], -1, 0, 4, P2xP1) == NO_WALL
    print("  ✅ first_wall working")

    print("\n[3/4] Testing enumerate_destabilizer_classes...")
    found = enumerate_destabilizer_classes(O_X, Q(-1, 2), 0, P2xP1, EnumerationBounds.uniform(2))
    assert ContractedClass.of(0, 1, 0, 0, 0, 0) in found
    assert ContractedClass.of(1, -1, 0, 0, 0, 0) in found
    assert W_WALL not in found
    assert found == sorted(found, key=ContractedClass.sort_key)
    assert all(0 <= twist(w, Q(-1, 2), P2xP1).hf_ch1b <= Q(1, 2) for w in found)
    assert enumerate_destabilizer_classes(O_X, Q(-1, 2), 0, P2xP1, EnumerationBounds.uniform(0)) == []
    try:
        enumerate_destabilizer_classes(O_X, 0, 0, P2xP1, EnumerationBounds.uniform(1))
    except EmptyAmbientError:
        pass
    else:
        raise AssertionError("HF.ch1^b(v) = 0 leaves no subobjects")
    print(f"  {len(found)} candidates in the box")
    print("  ✅ enumerate_destabilizer_classes working")

    print("\n[4/4] Testing wall_curve_sample...")
    curve = wall_curve_sample(O_X, W_WALL, 0, Q(-1, 2), Q(-1, 2), 1, P2xP1)
    assert curve.points == ((Q(-1, 2), Q(1)),)
    curve = wall_curve_sample(O_X, ideal_sheaf_of_point_class(), 0, -1, 0, 5, P2xP1)
    assert curve.points == () and len(curve.all_alpha_betas) == 5
    curve = wall_curve_sample(O_X, W_WALL, 0, Q(-3, 4), Q(-1, 4), 3, P2xP1)
    assert [b for b, _ in curve.points] == [b for b in (Q(-3, 4), Q(-1, 2), Q(-1, 4))
                                            if wall_alpha_sq(O_X, W_WALL, b, 0, P2xP1).is_wall]
    print("  ✅ wall_curve_sample working")

    print("\n" + "=" * 80)
    print("✅ ALL WALLS TESTS PASSED!")
    print("=" * 80)


def test_pbundle():
    """Test the projective bundle layer"""
    print("=" * 80)
    print("TESTING: mixedtilt/stability/pbundle.py")
    print("=" * 80)

    from mixedtilt.core.exceptions import (
        InvalidCoefficientsError, PoleError, UnsupportedGeometryError,
    )
    from mixedtilt.stability.pbundle import (
        ConjectureCoefficients, bmt_coefficients, canonical_class, chern_contractions,
        conjecture_margin, corollary_window_check, positivity_sign_check, region_check,
        slope_of_OH, slope_of_shifted_canonical_twist, z_l,
    )
    from mixedtilt.stability.tilt import TiltParams, nu_mixed, z_mixed

    print("\n[1/5] Testing canonical class and Chern contractions...")
    assert canonical_class(P2xP1) == DivisorClass(-3, -2)
    assert canonical_class(new_projective_bundle(1, 0)) == DivisorClass(-3, 0)
    assert canonical_class(PE01) == DivisorClass(-3, -1)
    cc = chern_contractions(P2xP1)
    assert cc.c1_with(DivisorClass(1, 0)) == 2
    assert cc.c1c1_plus_c2_with(DivisorClass(1, 0)) == 18
    assert chern_contractions(new_projective_bundle(3, 4)).chi_o == -2
    try:
        canonical_class(new_generic(0, 1, 1))
    except UnsupportedGeometryError as e:
        assert e.error_name == "unsupported-geometry"
    else:
        raise AssertionError("generic geometry has no Chow ring")
    print("  ✅ canonical class working")

    print("\n[2/5] Testing bmt_coefficients...")
    coeffs = bmt_coefficients(0, P2xP1)
    assert (coeffs.a0, coeffs.a1, coeffs.a2) == (0, Q(-1, 2), -1)
    assert coeffs.rhs(O_H, P2xP1) == 1
    assert euler_char(tensor_contracted(O_H, DivisorClass(-1, 0), P2xP1), P2xP1) == 1
    assert bmt_coefficients(0, P2xP1, alpha_sq=Q(7, 3)) == coeffs
    print("  ✅ bmt_coefficients working")

    print("\n[3/5] Testing conjecture_margin and z_l...")
    plain = ConjectureCoefficients(1, 0, 0, 0, 0)
    params = TiltParams(1, 0, 0)
    assert conjecture_margin(ContractedClass(), params, plain, P2xP1) == 0
    assert conjecture_margin(O_F, params, plain, P2xP1) == 1
    rr = ConjectureCoefficients.from_riemann_roch(0, P2xP1)
    assert conjecture_margin(O_H, params, rr, P2xP1) == -1
    try:
        conjecture_margin(O_F, params, ConjectureCoefficients(0, 1, 1, 1, 1), P2xP1)
    except InvalidCoefficientsError:
        pass
    else:
        raise AssertionError("a1 <= 0 must be rejected")
    p = TiltParams(Q(1, 3), Q(-1, 2), 2)
    for v in (O_X, O_H, W_WALL, O_F):
        assert z_l(v, p, 2, plain, P2xP1).im == -z_mixed(v, p, P2xP1).re
    assert z_l(ContractedClass(), p, 2, plain, P2xP1).is_zero
    print("  ✅ conjecture_margin and z_l working")

    print("\n[4/5] Testing region_check and closed-form slopes...")
    report = region_check(TiltParams(Q(1, 4), Q(-1, 2), 1), 0, P2xP1)
    assert report.passed
    assert report.diagnostics["threshold"] == "-23/8"
    assert "t0_note" in report.diagnostics
    assert not region_check(TiltParams(4, 0, 100), 0, P2xP1).passed
    assert not region_check(TiltParams(4, 0, 100), 5, P2xP1).passed
    assert not region_check(TiltParams(Q(1, 4), Q(-1, 2), -1), 0, P2xP1).passed

    assert slope_of_OH(TiltParams(1, 0, 2), P2xP1) == Q(-1, 2)
    p = TiltParams(Q(1, 4), Q(-1, 2), 1)
    assert slope_of_shifted_canonical_twist(p, P2xP1) == Q(-31, 12)
    k_plus_h = line_bundle_class(P2xP1, canonical_class(P2xP1) + DivisorClass(1, 0))
    assert nu_mixed(shift_class(k_plus_h, 1), p, P2xP1).value == Q(-31, 12)
    for bad, fn in ((TiltParams(1, 1, 0), slope_of_OH),
                    (TiltParams(1, -2, 0), slope_of_shifted_canonical_twist)):
        try:
            fn(bad, P2xP1)
        except PoleError as e:
            assert e.error_name == "pole-at-beta"
        else:
            raise AssertionError("pole must be reported")
    print("  ✅ region_check and closed forms working")

    print("\n[5/5] Testing corollary window and positivity bookkeeping...")
    assert corollary_window_check(Q(-1, 2))
    for beta in (0, -1, Q(1, 2), Q(-3, 2)):
        assert not corollary_window_check(beta)
    g_class = ContractedClass.of(0, -1, 0, 0, 0, 0)
    k_class = ContractedClass.of(0, 0, 1, 0, 0, 0)
    report = positivity_sign_check(g_class, k_class, TiltParams(1, 0, 0), plain, 1, P2xP1)
    assert report.hypotheses_hold and report.conclusion_holds
    assert (report.re_g, report.re_k, report.re_e) == (-1, 1, -2)
    print("  ✅ corollary window and positivity working")

    print("\n" + "=" * 80)
    print("✅ ALL PBUNDLE TESTS PASSED!")
    print("=" * 80)


def test_config():
    """Test configuration loading and validation"""
    print("=" * 80)
    print("TESTING: mixedtilt/core/config.py")
    print("=" * 80)

    from mixedtilt.core.config import ToolkitConfig
    from mixedtilt.core.exceptions import ConfigurationError

    print("\n[1/3] Testing defaults...")
    config = ToolkitConfig()
    config.validate()
    assert config.sampling.seed == 20240229
    assert config.enumeration.max_abs_value == 1
    assert config.region.default_t0_value == 0
    print("  ✅ defaults working")

    print("\n[2/3] Testing from_dict / YAML round trip...")
    config = ToolkitConfig.from_dict({"sampling": {"seed": 5}, "scan": {"precision": 3},
                                      "enumeration": {"max_abs": "3/2"}})
    assert config.sampling.seed == 5 and config.scan.precision == 3
    assert config.enumeration.max_abs_value == Q(3, 2)
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "config.yaml"
        config.save_to_yaml(path)
        loaded = ToolkitConfig.from_yaml(path)
    assert loaded.to_dict() == config.to_dict()
    bundled = ToolkitConfig.from_yaml(Path(project_root) / "mixedtilt_config.yaml")
    assert bundled.to_dict() == ToolkitConfig().to_dict()
    print("  ✅ YAML round trip working")

    print("\n[3/3] Testing invalid configuration...")
    for bad in ({"log_level": "LOUD"}, {"scan": {"precision": -1}}, {"region": {"default_t0": "-1"}},
                {"enumeration": {"max_abs": "x"}}, [1, 2],
                {"enumeration": {"max_abs": 0.5}}, {"region": {"default_t0": 0.5}}):
        try:
            ToolkitConfig.from_dict(bad)
        except ConfigurationError:
            pass
        else:
            raise AssertionError(f"{bad} should be rejected")
    try:
        ToolkitConfig.from_yaml(Path(project_root) / "no_such_config.yaml")
    except ConfigurationError:
        pass
    else:
        raise AssertionError("missing file should be rejected")
    print("  ✅ invalid configuration rejected")

    print("\n" + "=" * 80)
    print("✅ ALL CONFIG TESTS PASSED!")
    print("=" * 80)


def test_io():
    """Test JSON document readers"""
    print("=" * 80)
    print("TESTING: mixedtilt/utils/io.py")
    print("=" * 80)

    from mixedtilt.core.exceptions import DataError, LatticeError
    from mixedtilt.utils.io import (
        bounds_from_dict, candidates_from_doc, chow_from_dict, chow_to_dict, class_from_dict,
        class_to_dict, geometry_from_dict, geometry_to_dict, lattice_from_dict, lattice_to_dict,
    )

    print("\n[1/3] Testing geometry and class documents...")
    assert geometry_from_dict({"kind": "projective_bundle", "genus": 0, "deg_e": 0}) == P2xP1
    generic = geometry_from_dict({"kind": "generic", "genus": 1, "h3": "5/2", "h2f": "1"})
    assert (generic.h3, generic.h2f) == (Q(5, 2), 1)
    assert geometry_from_dict(geometry_to_dict(generic)) == generic
    doc = {"ch0": "1", "h2_ch1": "0", "hf_ch1": "1", "h_ch2": "0", "f_ch2": "1/2", "ch3": "0"}
    assert class_from_dict(doc) == O_H
    assert class_to_dict(O_H) == doc
    assert chow_from_dict(chow_to_dict(ChowClass(1, 1, 0, Q(1, 2), 0, Q(1, 6)))) == ChowClass(1, 1, 0, Q(1, 2), 0, Q(1, 6))
    for bad in ({"kind": "torus", "genus": 0}, {"kind": "projective_bundle", "genus": "0", "deg_e": 0},
                {"kind": "projective_bundle", "genus": 0, "deg_e": "1/2"}):
        try:
            geometry_from_dict(bad)
        except DataError:
            pass
        else:
            raise AssertionError(f"{bad} should be rejected")
    try:
        class_from_dict(dict(doc, ch3=0.5))
    except DataError:
        pass
    else:
        raise AssertionError("floats are not exact")
    print("  ✅ geometry and class documents working")

    print("\n[2/3] Testing lattices and candidates...")
    lat_doc = {"root": "v", "nodes": {"a": class_to_dict(O_X), "v": class_to_dict(O_X + O_H)},
               "edges": [["a", "v"]]}
    lat = lattice_from_dict(lat_doc)
    assert lat.is_below("a", "v") and lattice_to_dict(lat) == lat_doc
    try:
        lattice_from_dict(dict(lat_doc, edges=[["a", "v"], ["v", "a"]]))
    except LatticeError:
        pass
    else:
        raise AssertionError("cycles must be rejected")
    assert candidates_from_doc([doc]) == [O_H]
    assert candidates_from_doc({"candidates": [doc, doc]}) == [O_H, O_H]
    print("  ✅ lattices and candidates working")

    print("\n[3/3] Testing bounds...")
    assert bounds_from_dict({"max_abs": "2"}).max_abs == (2,) * 6
    bounds = bounds_from_dict({"max_abs": ["1", "0", "2", "1/2", "0", "1/6"], "lattice": False, "grid": 2})
    assert bounds.values(3) == [Q(-1, 2), 0, Q(1, 2)]
    assert bounds_from_dict({"max_abs": "1"}).values(5)[0] == -1
    print("  ✅ bounds working")

    print("\n" + "=" * 80)
    print("✅ ALL IO TESTS PASSED!")
    print("=" * 80)


MODULES = {
    "rationals": test_rationals,
    "geometry": test_geometry,
    "chern": test_chern,
    "slopes": test_slopes,
    "tilt": test_tilt,
    "walls": test_walls,
    "pbundle": test_pbundle,
    "config": test_config,
    "io": test_io,
}


def main():
    if len(sys.argv) < 2:
        print("=" * 80)
        print("MODULE TEST RUNNER")
        print("=" * 80)
        print("\nUsage: python test_module.py <module_name>")
        print("\nAvailable modules:")
        for name, fn in MODULES.items():
            print(f"  {name:<10} - {fn.__doc__}")
        print("  all        - Run all tests")
        print("\nExample:")
        print("  python test_module.py chern")
        print("=" * 80)
        return

    module_name = sys.argv[1].lower()

    try:
        if module_name == "all":
            for fn in MODULES.values():
                fn()
                print("\n")
        elif module_name in MODULES:
            MODULES[module_name]()
        else:
            print(f"❌ Unknown module: {module_name}")
            print("Run without arguments to see available modules")
            sys.exit(1)

    except Exception as e:
        print(f"\n❌ Error: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    main()
