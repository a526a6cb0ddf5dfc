"""Cohomology of groups and flag manifolds through the lattice complex."""

import random

import pytest

from tdual_lie.errors import NotACycle
from tdual_lie.flagcoh import (
    build_complex,
    chern_classes,
    class_in_h3,
    cohomology,
    dualizability_report,
    h2_of_K,
    h3_of_K,
    h4_of_B,
    is_cycle,
    sym_invariants,
)
from tdual_lie.rootdata import basic_form, named_group
from tdual_lie.zlinalg import IntMatrix


def level_twist_matrix(rd, level):
    """u(lam) = level * <lam, .> as a weight-coordinate matrix (exact)."""
    from fractions import Fraction

    from tdual_lie.rootdata import _cartan_inverse

    n = rd.rank
    g = basic_form(rd, level).gram
    inv = _cartan_inverse(rd.cartan)
    b = rd.integral.basis
    out = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            out[j][k] = sum(
                Fraction(g[j, i]) * inv[i][t] * b[t, k] for i in range(n) for t in range(n)
            )
    assert all(v.denominator == 1 for row in out for v in row)
    return IntMatrix([[int(v) for v in row] for row in out], cols=n)


def test_sym_invariants_ranks():
    assert sym_invariants(named_group("A1")).rank == 1
    assert sym_invariants(named_group("A2")).rank == 1
    two_a1 = named_group("SU(2)")
    from tdual_lie.rootdata import build

    prod = build([("A", 1), ("A", 1)])
    assert sym_invariants(prod).rank == 2
    assert two_a1.rank == 1


def test_sym_invariants_a1_generator():
    # The reflection flips the weight, so the square survives.
    inv = sym_invariants(named_group("A1"))
    assert inv.basis == IntMatrix([[1]])


def test_sym_invariants_a2_generator_invariant():
    rd = named_group("A2")
    inv = sym_invariants(rd)
    gen = inv.basis.column(0)
    from tdual_lie.zlinalg import Lattice, LatticeMap, sym2_map

    w = Lattice.standard(2)
    for i in range(2):
        m = sym2_map(LatticeMap(w, w, rd.reflection_on_weights(i))).matrix
        assert m.apply(gen) == gen


def test_complex_ranks():
    a1 = build_complex(named_group("SU(2)"))
    assert a1.c0_rank() == 0 and a1.c1_rank() == 1
    assert h4_of_B(named_group("SU(2)")).same_type(h4_of_B(named_group("SO(3)")))

    so3 = build_complex(named_group("SO(3)"))
    assert so3.char_basis == IntMatrix([[2]])  # restriction is times 2

    a2 = build_complex(named_group("SU(3)"))
    assert a2.c0_rank() == 1 and a2.c1_rank() == 4
    # quotient sym^2 / invariants has rank 3 - 1 = 2
    assert a2.sym2_rank() - a2.invariants.rank == 2


def test_complex_is_complex_everywhere():
    names = ["SU(2)", "SO(3)", "PSU(3)", "SU(4)", "SU(5)", "Spin(5)", "Sp(3)",
             "Spin(8)", "G2", "F4"]
    for name in names:
        build_complex(named_group(name))  # asserts d21 o d20 = 0 internally


def test_h3_examples():
    for name in ["SU(2)", "SO(3)", "SU(3)"]:
        g = h3_of_K(named_group(name))
        assert g.free_rank == 1 and g.torsion == (), name


def test_h3_simply_connected_rank_counts_factors():
    from tdual_lie.rootdata import build

    for comps in [[("A", 1)], [("A", 2)], [("A", 3)], [("A", 4)], [("B", 2)],
                  [("C", 3)], [("D", 4)], [("G", 2)]]:
        g = h3_of_K(build(comps))
        assert g.free_rank == 1 and g.torsion == (), comps
    two = build([("A", 1), ("A", 2)])
    g = h3_of_K(two)
    assert g.free_rank == 2 and g.torsion == ()


def test_h2_examples():
    assert h2_of_K(named_group("SU(2)")).is_trivial()
    assert h2_of_K(named_group("SO(3)")).torsion == (2,)
    assert h2_of_K(named_group("PSU(3)")).torsion == (3,)
    assert h2_of_K(named_group("SU(4)")).is_trivial()


def test_h4_base_ranks_with_weyl_oracle():
    def coxeter_length_count(rd, target):
        """Number of Weyl elements of length `target`, by BFS word length."""
        gens = [rd.reflection_on_coweights(i) for i in range(rd.rank)]
        ident = IntMatrix.identity(rd.rank)
        depth = {ident: 0}
        frontier = [ident]
        d = 0
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    u = g @ w
                    if u not in depth:
                        depth[u] = d + 1
                        nxt.append(u)
            frontier = nxt
            d += 1
        return sum(1 for v in depth.values() if v == target)

    a1 = named_group("A1")
    a2 = named_group("A2")
    # Betti number b4 of the flag manifold counts length-2 Weyl elements.
    assert h4_of_B(a1).free_rank == coxeter_length_count(a1, 2) == 0
    assert h4_of_B(a2).free_rank == coxeter_length_count(a2, 2) == 2
    assert h4_of_B(a1).torsion == () and h4_of_B(a2).torsion == ()


def test_h4_base_torsion_free_across_types():
    for name in ["SU(2)", "SO(3)", "SU(3)", "PSU(3)", "SU(4)", "B2", "C3", "G2"]:
        g = h4_of_B(named_group(name))
        assert g.torsion == (), name


def test_chern_classes():
    assert chern_classes(named_group("SU(2)")).classes == ((1,),)
    assert chern_classes(named_group("SO(3)")).classes == ((2,),)
    su3 = chern_classes(named_group("SU(3)"))
    assert su3.classes == ((1, 0), (0, 1))  # characters = weights, identity


def test_is_cycle_su2_all_k():
    rd = named_group("SU(2)")
    for k in range(-3, 4):
        assert is_cycle(rd, IntMatrix([[k]]))


def test_is_cycle_su3():
    rd = named_group("SU(3)")
    assert is_cycle(rd, level_twist_matrix(rd, 1))
    assert is_cycle(rd, level_twist_matrix(rd, 2))
    # x_1 (x) w_1 alone is not Weyl-invariant after symmetrization.
    assert not is_cycle(rd, IntMatrix([[1, 0], [0, 0]]))


def test_cycle_invariant_under_boundaries():
    rd = named_group("SU(3)")
    cx = build_complex(rd)
    rng = random.Random(8)
    u = level_twist_matrix(rd, 1)
    for _ in range(20):
        coeffs = [rng.randint(-3, 3) for _ in range(cx.c0_rank())]
        moved = u + cx.boundary_of(coeffs)
        assert is_cycle(rd, moved)
        assert class_in_h3(rd, moved) == class_in_h3(rd, u)
    bad = IntMatrix([[1, 0], [0, 0]])
    for _ in range(5):
        coeffs = [rng.randint(-3, 3) for _ in range(cx.c0_rank())]
        assert not is_cycle(rd, bad + cx.boundary_of(coeffs))


def test_class_in_h3_su2():
    rd = named_group("SU(2)")
    for k in range(-2, 5):
        free, tors = class_in_h3(rd, IntMatrix([[k]]))
        assert tors == ()
        assert [abs(x) for x in free] == [abs(k)]
    zero_free, zero_tors = class_in_h3(rd, IntMatrix([[0]]))
    assert zero_free == (0,) and zero_tors == ()


def test_class_in_h3_requires_cycle():
    rd = named_group("SU(3)")
    with pytest.raises(NotACycle):
        class_in_h3(rd, IntMatrix([[1, 0], [0, 0]]))


def test_quadratic_form_route_agrees():
    """Independent cycle test: u is a cycle iff the quadratic polynomial
    X -> <u(iota X), X> on the coroot lattice lies in the invariant lattice."""
    from tdual_lie.zlinalg import solve_columns

    rng = random.Random(12)
    for name in ["SU(2)", "SU(3)", "SO(3)", "PSU(3)", "Spin(5)"]:
        rd = named_group(name)
        cx = build_complex(rd)
        n = rd.rank
        for _ in range(25):
            u = IntMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
            # v = u o iota on the coroot basis, in weight coordinates.
            coroots_in_lam = solve_columns(rd.integral.basis, rd.cartan)
            v = u @ coroots_in_lam
            coeffs = [0] * cx.sym2_rank()
            for idx, (i, j) in enumerate(cx.mono_pairs):
                coeffs[idx] = v[i, j] + v[j, i] if i != j else v[i, i]
            target = IntMatrix.from_columns([tuple(coeffs)])
            if cx.invariants.rank:
                poly_route = solve_columns(cx.invariants.basis, target) is not None
            else:
                poly_route = all(x == 0 for x in target.column(0))
            assert poly_route == cx.is_cycle(u), (name, u)


def test_dualizability_reports():
    rng = random.Random(5)
    for name in ["SU(3)", "SO(3)"]:
        rd = named_group(name)
        cx = build_complex(rd)
        base = level_twist_matrix(rd, 1)
        for trial in range(10):
            k = rng.randint(-3, 3)
            coeffs = [rng.randint(-2, 2) for _ in range(cx.c0_rank())]
            u = base.scale(k) + cx.boundary_of(coeffs)
            rep = dualizability_report(rd, u)
            assert rep.dualizable
            assert rep.is_cycle
    for k in (-2, 0, 1, 5):
        rep = dualizability_report(named_group("SU(2)"), IntMatrix([[k]]))
        assert rep.dualizable and rep.is_cycle
    big = dualizability_report(named_group("SU(4)"))
    assert big.dualizable and big.wedge3_kernel_rank == 0


def test_cohomology_report_shape():
    rep = cohomology(named_group("SO(3)"))
    d = rep.as_dict()
    assert d["H2_K"]["invariant_factors"] == [2]
    assert d["H3_K"] == {"free_rank": 1, "invariant_factors": [], "pretty": "Z"}
    assert d["H2_B"]["free_rank"] == 1
    assert not d["H4_B_torsion_discrepancy"]
