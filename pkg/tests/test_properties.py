import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from strongadm._kernels import available_backends
from strongadm.af import ArgumentationFramework, parse_apx, parse_tgf, serialize_apx, serialize_tgf
from strongadm.construct import construct_for, grounded_with_minmax
from strongadm.labelling import (
    INFINITY,
    Labelling,
    format_certificate,
    parse_certificate,
)
from strongadm.oracle import (
    OracleLimit,
    enumerate_all_strongly_admissible_labellings,
    enumerate_strongly_admissible_sets,
    minimal_strongly_admissible_for,
)
from strongadm.pipeline import small_strongly_admissible
from strongadm.prune import prune_unchecked
from strongadm.semantics import (
    args2lab,
    compute_minmax,
    grounded_extension_fixpoint,
    is_admissible_labelling,
    is_strongly_admissible_labelling,
    lab_leq,
    lab_size,
    verify_minmax,
)


@st.composite
def frameworks(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    edges = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=n * n,
        )
    )
    return ArgumentationFramework([f"a{i}" for i in range(n)], edges)


def brute_minmax(af, lab):
    # Jacobi iteration of the two defining equations, starting from all-inf;
    # the finite frontier grows by at least one argument per round.
    codes = lab.codes
    values = {x: INFINITY for x in range(af.n) if codes[x] != 0}
    for _ in range(af.n + 2):
        new = {}
        for x in values:
            if codes[x] == 1:
                new[x] = (
                    max(
                        (values[y] for y in af.attackers_of[x] if codes[y] == 2),
                        default=0,
                    )
                    + 1
                )
            else:
                new[x] = (
                    min(
                        (values[y] for y in af.attackers_of[x] if codes[y] == 1),
                        default=INFINITY,
                    )
                    + 1
                )
        values = new
    return values


def all_admissible_labellings(af):
    labs = []
    for codes in itertools.product((0, 1, 2), repeat=af.n):
        lab = Labelling(af, bytes(codes))
        if is_admissible_labelling(af, lab):
            labs.append(lab)
    return labs


@given(frameworks(max_n=5))
@settings(max_examples=60, deadline=None)
def test_minmax_matches_fixpoint_iteration(af):
    for lab in all_admissible_labellings(af):
        mm = compute_minmax(af, lab)
        assert mm == brute_minmax(af, lab)
        assert verify_minmax(af, lab, mm)


@given(frameworks())
@settings(max_examples=100, deadline=None)
def test_grounded_run_equals_fixpoint(af):
    r = grounded_with_minmax(af)
    assert r.lab == args2lab(af, grounded_extension_fixpoint(af))
    assert verify_minmax(af, r.lab, r.mm)
    assert all(v != INFINITY for v in r.mm.values())


@given(frameworks())
@settings(max_examples=100, deadline=None)
def test_construct_succeeds_exactly_on_grounded_members(af):
    from strongadm.errors import NotInGroundedError

    grounded = grounded_extension_fixpoint(af)
    for a in range(af.n):
        try:
            r = construct_for(af, a)
        except NotInGroundedError:
            assert a not in grounded
            continue
        assert a in grounded
        assert r.lab.codes[a] == 1
        assert is_strongly_admissible_labelling(af, r.lab)
        assert verify_minmax(af, r.lab, r.mm)


@given(frameworks())
@settings(max_examples=100, deadline=None)
def test_pipeline_shrinks_below_construct(af):
    grounded = grounded_with_minmax(af)
    for a in sorted(grounded.lab.in_args):
        r1 = construct_for(af, a)
        r3 = small_strongly_admissible(af, a)
        assert lab_leq(r3.lab, r1.lab)
        assert lab_size(r3.lab) <= lab_size(r1.lab) <= lab_size(grounded.lab)
        assert is_strongly_admissible_labelling(af, r3.lab)
        assert verify_minmax(af, r3.lab, r3.mm)
        # pruning keeps the construction's numbers
        assert all(r1.mm[x] == v for x, v in r3.mm.items())


@given(frameworks())
@settings(max_examples=100, deadline=None)
def test_queue_orders_non_descending(af):
    runs = [grounded_with_minmax(af)]
    for a in sorted(runs[0].lab.in_args):
        runs.append(construct_for(af, a))
    for r in runs:
        enq = [r.mm[x] for x in r.enqueue_order]
        deq = [r.mm[x] for x in r.dequeue_order]
        assert enq == sorted(enq)
        assert deq == sorted(deq)
        assert list(r.dequeue_order) == list(r.enqueue_order[: len(deq)])


@given(frameworks())
@settings(max_examples=100, deadline=None)
def test_prune_idempotent(af):
    grounded = grounded_with_minmax(af)
    for a in sorted(grounded.lab.in_args):
        r = construct_for(af, a)
        once = prune_unchecked(af, a, r.lab, r.mm)
        twice = prune_unchecked(af, a, once.lab, once.mm)
        assert once.lab == twice.lab
        assert once.mm == twice.mm


@given(frameworks(max_n=6))
@settings(max_examples=60, deadline=None)
def test_oracle_routes_agree(af):
    limit = OracleLimit(subset_max_n=6, labelling_max_n=6)
    sets = enumerate_strongly_admissible_sets(af, limit)
    labs = enumerate_all_strongly_admissible_labellings(af, limit)
    assert set(sets) == {lab.in_args for lab in labs}

    grounded = grounded_extension_fixpoint(af)
    for a in sorted(grounded):
        _, _, size = minimal_strongly_admissible_for(af, a, limit)
        brute = min(
            lab_size(lab) for lab in labs if lab.codes[a] == 1
        )
        assert size == brute


@given(frameworks(max_n=6))
@settings(max_examples=60, deadline=None)
def test_every_strongly_admissible_labelling_below_grounded(af):
    limit = OracleLimit(subset_max_n=6, labelling_max_n=6)
    top = args2lab(af, grounded_extension_fixpoint(af))
    for lab in enumerate_all_strongly_admissible_labellings(af, limit):
        assert lab_leq(lab, top)


@given(frameworks())
@settings(max_examples=100, deadline=None)
def test_backends_agree(af):
    backends = available_backends()
    if len(backends) < 2:
        return
    base, *rest = backends
    g_base = grounded_with_minmax(af, backend=base)
    for other in rest:
        g_other = grounded_with_minmax(af, backend=other)
        assert g_base.lab == g_other.lab
        assert g_base.mm == g_other.mm
        assert g_base.enqueue_order == g_other.enqueue_order
        assert g_base.dequeue_order == g_other.dequeue_order
    for a in sorted(g_base.lab.in_args):
        r_base = construct_for(af, a, backend=base)
        p_base = prune_unchecked(af, a, r_base.lab, r_base.mm, backend=base)
        for other in rest:
            r_other = construct_for(af, a, backend=other)
            assert r_base.lab == r_other.lab
            assert r_base.mm == r_other.mm
            assert r_base.enqueue_order == r_other.enqueue_order
            p_other = prune_unchecked(af, a, r_other.lab, r_other.mm, backend=other)
            assert p_base.lab == p_other.lab
            assert p_base.mm == p_other.mm


@given(frameworks())
@settings(max_examples=100, deadline=None)
def test_certificate_text_roundtrip(af):
    r = grounded_with_minmax(af)
    lab, mm = parse_certificate(af, format_certificate(r.lab, r.mm))
    assert lab == r.lab
    assert mm == r.mm


@given(frameworks(max_n=12))
@settings(max_examples=100, deadline=None)
def test_serialization_roundtrips(af):
    assert parse_tgf(serialize_tgf(af)) == af
    assert parse_apx(serialize_apx(af)) == af
