import random

import pytest
from hypothesis import given, strategies as st

from layerline.errors import BudgetExceeded, CompNotApplicable, NotAutomorphism, PreconditionViolated
from layerline.graph import bipartition, cycle_graph
from layerline.layers import LayerParams, SubsetVertex, build_b, build_line_b
from layerline.perms import (
    AutElement,
    Permutation,
    apply_to_mask,
    closure,
    fixed_vertex_for_involution,
    induced_line_automorphism,
    induced_vertex_action,
    is_automorphism,
    is_k_homogeneous,
    is_k_transitive,
    is_sharply_k_transitive,
    orbit,
    symmetric_group_generators,
)


def perms(n):
    return st.permutations(range(n)).map(lambda p: Permutation(tuple(p)))


@st.composite
def involutions(draw, n):
    pts = draw(st.permutations(range(n)))
    a = draw(st.integers(1, n // 2))
    images = list(range(n))
    for i in range(a):
        x, y = pts[2 * i], pts[2 * i + 1]
        images[x], images[y] = y, x
    return Permutation(tuple(images))


class TestPermutation:
    def test_cycle_notation_roundtrip(self):
        p = Permutation.from_cycles("(1 3 2)(4 5)", 6)
        assert p.images == (2, 0, 1, 4, 3, 5)
        assert str(p) == "(1 3 2)(4 5)"
        assert p.cycle_type() == (1, 2, 3) and p.order() == 6
        assert Permutation.from_cycles([[0, 2, 1], [3, 4]], 6, offset=0) == p

    def test_composition_applies_right_first(self):
        a = Permutation.from_cycles("(1 2)", 3)
        b = Permutation.from_cycles("(2 3)", 3)
        assert (a * b)(1) == a(b(1)) == 2

    @pytest.mark.parametrize("text", ["(1 1)", "(1 9)", "1 2", "(1 2)(2 3)"])
    def test_bad_notation(self, text):
        with pytest.raises(ValueError):
            Permutation.from_cycles(text, 4)

    @given(perms(7), perms(7), perms(7))
    def test_group_laws(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert (a * a.inverse()).is_identity()
        assert Permutation.from_cycles(a.cycle_notation(), 7) == a


class TestMaskAction:
    @given(perms(8), st.integers(0, 255))
    def test_matches_set_image(self, p, mask):
        elems = {i for i in range(8) if mask >> i & 1}
        assert apply_to_mask(p, mask) == sum(1 << p(i) for i in elems)

    @given(perms(6), perms(6))
    def test_vertex_action_is_homomorphism(self, a, b):
        p = LayerParams(6, 2)
        g = build_b(p)
        fa, fb = induced_vertex_action(a, p, g), induced_vertex_action(b, p, g)
        assert induced_vertex_action(a * b, p, g) == fa * fb
        assert is_automorphism(g, fa)

    @given(perms(5), st.booleans())
    def test_middle_actions_are_automorphisms(self, a, comp):
        p = LayerParams(5, 2)
        g = build_b(p)
        f = induced_vertex_action(AutElement(a, comp), p, g)
        assert is_automorphism(g, f)
        low, high = bipartition(g)
        # f_a keeps the two layers; complementation swaps them
        assert {f(v) for v in low} == (high if comp else low)

    def test_complement_needs_middle_layers(self):
        with pytest.raises(CompNotApplicable):
            induced_vertex_action(AutElement(Permutation.identity(6), True), LayerParams(6, 2))

    @given(perms(6))
    def test_shadows_preserved(self, a):
        # the neighbourhood of a k-set is sent to the neighbourhood of its image
        p = LayerParams(6, 2)
        g = build_b(p)
        f = induced_vertex_action(a, p, g)
        for v in range(0, g.order, 5):
            assert {f(u) for u in g.neighbor_sets[v]} == set(g.neighbor_sets[f(v)])


class TestLineAction:
    @given(perms(5), perms(5))
    def test_homomorphism(self, a, b):
        p = LayerParams(5, 1)
        g = build_b(p)
        lg, table = build_line_b(p)
        fa, fb = (induced_vertex_action(x, p, g) for x in (a, b))
        la = induced_line_automorphism(fa, g, table)
        lb = induced_line_automorphism(fb, g, table)
        assert induced_line_automorphism(fa * fb, g, table) == la * lb
        assert is_automorphism(lg, la)

    def test_rejects_non_automorphism(self):
        g = cycle_graph(5)
        with pytest.raises(NotAutomorphism):
            induced_line_automorphism(Permutation.from_cycles("(1 2)", 5), g)


class TestGroupHelpers:
    def test_symmetric_generators(self):
        for n in range(2, 7):
            assert len(closure(symmetric_group_generators(n))) == [1, 1, 2, 6, 24, 120, 720][n]

    def test_orbit_and_budget(self):
        c = Permutation.from_cycles("(1 2 3 4 5)", 5)
        assert orbit(0, [c]) == set(range(5))
        with pytest.raises(BudgetExceeded):
            closure(symmetric_group_generators(6), budget=100)

    def test_transitivity_levels(self):
        s5 = symmetric_group_generators(5)
        c5 = [Permutation.from_cycles("(1 2 3 4 5)", 5)]
        assert is_k_transitive(s5, 5, 5)
        assert is_k_homogeneous(c5, 5, 1) and not is_k_homogeneous(c5, 5, 2)
        assert is_sharply_k_transitive(closure(c5), 5, 1)
        assert not is_sharply_k_transitive(closure(s5), 5, 2)


class TestFixedVertex:
    def test_case_small_support(self):
        p = LayerParams(9, 4)
        lo, hi = fixed_vertex_for_involution(Permutation.from_cycles("(1 2)", 9), p)
        assert str(lo) == "{1,2,3,4}" and str(hi) == "{1,2,3,4,9}"

    def test_case_large_support(self):
        p = LayerParams(9, 4)
        lo, hi = fixed_vertex_for_involution(Permutation.from_cycles("(1 2)(3 4)(5 6)", 9), p)
        assert str(lo) == "{1,2,3,4}" and str(hi) == "{1,2,3,4,9}"

    def test_preconditions(self):
        with pytest.raises(PreconditionViolated):
            fixed_vertex_for_involution(Permutation.from_cycles("(1 2)", 7), LayerParams(7, 3))
        with pytest.raises(PreconditionViolated):
            fixed_vertex_for_involution(Permutation.from_cycles("(1 2 3)", 5), LayerParams(5, 2))
        with pytest.raises(PreconditionViolated):
            fixed_vertex_for_involution(Permutation.identity(5), LayerParams(5, 2))
        with pytest.raises(PreconditionViolated):
            fixed_vertex_for_involution(Permutation.from_cycles("(1 2)", 8), LayerParams(8, 3))

    @pytest.mark.parametrize("k", [2, 4, 6, 8])
    def test_fixed_by_random_involutions(self, k):
        n = 2 * k + 1
        p = LayerParams(n, k)
        rng = random.Random(k)
        for _ in range(100):
            pts = list(range(n))
            rng.shuffle(pts)
            images = list(range(n))
            for i in range(rng.randint(1, k)):
                images[pts[2 * i]], images[pts[2 * i + 1]] = pts[2 * i + 1], pts[2 * i]
            theta = Permutation(tuple(images))
            lo, hi = fixed_vertex_for_involution(theta, p)
            assert (lo.weight, hi.weight) == (k, k + 1) and lo.mask & hi.mask == lo.mask
            assert apply_to_mask(theta, lo.mask) == lo.mask
            assert apply_to_mask(theta, hi.mask) == hi.mask

    @given(involutions(9))
    def test_line_vertex_fixed_by_induced_map(self, theta):
        p = LayerParams(9, 4)
        g = build_b(p)
        lg, table = build_line_b(p)
        lo, hi = fixed_vertex_for_involution(theta, p)
        idx = {lab.mask: i for i, lab in enumerate(g.labels)}
        e = table.index((idx[lo.mask], idx[hi.mask]))
        line_map = induced_line_automorphism(induced_vertex_action(theta, p, g), g, table)
        assert line_map(e) == e
        assert SubsetVertex.of(lo.elements, 9) == lo
