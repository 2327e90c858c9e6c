import pytest

from conich1.classes import (
    ClassSpec,
    build_group,
    class_catalog,
    class_generators,
    field_labeling,
    smallest_param_tuples,
    verify_class,
)
from conich1.conditions import relative_minimality
from conich1.groups import all_subgroups, are_conjugate, closure, sylow2
from conich1.signedperm import parse_element


def test_field_labeling_f5():
    L = field_labeling(5, 1)
    assert L.lab((0,)) == 5
    assert [L.lab((a,)) for a in range(1, 5)] == [1, 2, 3, 4]
    assert L.gamma == (2,)  # smallest generator of F_5^*


def test_field_labeling_f7_generator_cycle():
    L = field_labeling(7, 1)
    assert L.elem(L.gamma_labels()[1]) == L.gamma == (3,)
    assert L.gamma_labels() == [1, 3, 2, 6, 4, 5]


def test_field_labeling_f9():
    L = field_labeling(3, 2)
    assert L.q == 9
    assert L.lab((0, 1)) == 3  # the class of x
    assert L.lab((1, 1)) == 4  # the class of 1 + x
    labels = sorted(L.lab(L.elem(k)) for k in range(1, 10))
    assert labels == list(range(1, 10))


def test_field_labeling_rejects_bad_p():
    with pytest.raises(ValueError):
        field_labeling(2, 1)
    with pytest.raises(ValueError):
        field_labeling(9, 1)
    with pytest.raises(ValueError):
        field_labeling(5, 0)


def test_class_spec_validation():
    with pytest.raises(ValueError):
        ClassSpec(25, {"n": 1})
    with pytest.raises(ValueError):
        ClassSpec(1, {"p": 3})
    with pytest.raises(ValueError):
        ClassSpec(2, {"p": 4, "r": 1})
    with pytest.raises(ValueError):
        ClassSpec(1, {"n": 0})


def test_class1_generators_catalog_form():
    gens, N, profile = class_generators(ClassSpec(1, {"n": 1}))
    assert N == 4 and profile == (3, 1)
    assert gens[0] == parse_element("c1 c2 c3 c4 (2,3)", 4)
    assert gens[1] == parse_element("(1,2,3)", 4)


def test_class2_f5_and_f7():
    gens, N, profile = class_generators(ClassSpec(2, {"p": 5, "r": 1}))
    assert N == 6 and profile == (5, 1)
    assert closure(gens).order == 20
    gens, N, _ = class_generators(ClassSpec(2, {"p": 7, "r": 1}))
    assert gens[0] == parse_element("c1 c2 c3 c4 c5 c6 c7 c8 (1,3,2,6,4,5)", 8)
    assert gens[1] == parse_element("(1,2,3,4,5,6,7)", 8)


def test_class11_shape():
    gens, N, profile = class_generators(ClassSpec(11, {"n": 1}))
    assert N == 5 and len(gens) == 3 and profile == (3, 2)


def test_verify_class_18_sylow_is_dihedral():
    rep = verify_class(ClassSpec(18, {"n": 1}))
    assert rep.all_ok and rep.sylow2_order == 8
    P = sylow2(build_group(ClassSpec(18, {"n": 1})))
    orders = sorted(g.order() for g in P.elements)
    assert orders == [1, 2, 2, 2, 2, 2, 4, 4]  # D_4, not Q_8 or C_8


def test_verify_class_19():
    assert verify_class(ClassSpec(19, {"p": 3, "r": 1})).all_ok


def test_class7_divisibility_remark():
    # 2n2+1 | 2n1+1 collapses the group to D_{2n1+1}
    grp = build_group(ClassSpec(7, {"n1": 4, "n2": 1}))
    assert grp.order == 18  # D_9
    # coprime block sizes give the class-5 group
    a = build_group(ClassSpec(7, {"n1": 1, "n2": 2}))
    b = build_group(ClassSpec(5, {"n1": 1, "n2": 2}))
    assert a.order == b.order == 30
    assert are_conjugate(a, b)


def test_class5_order_formula():
    for n1, n2 in [(1, 1), (1, 2), (2, 2)]:
        grp = build_group(ClassSpec(5, {"n1": n1, "n2": n2}))
        assert grp.order == (2 * n1 + 1) * (2 * n2 + 1) * 2


def test_class14_class16_identification():
    # 4 | p^r - 1: class 14 is the plain Frobenius group and class 16 adds a
    # central flip; otherwise both close to the same C_{p^r} : C_{2(p^r-1)}
    for p, r in [(3, 1), (5, 1), (7, 1), (3, 2)]:
        q = p**r
        g14 = build_group(ClassSpec(14, {"p": p, "r": r}))
        g16 = build_group(ClassSpec(16, {"p": p, "r": r}))
        if (q - 1) % 4 == 0:
            assert g14.order == q * (q - 1)
            assert g16.order == 2 * q * (q - 1)
            # central flip with a Frobenius complement
            assert len(g16.center_encs()) == 2
            assert any(
                H.order == q * (q - 1) and len(H.enc_set & g16.center_encs()) == 1
                for H in all_subgroups(g16).subgroups
            )
        else:
            assert g14.enc_set == g16.enc_set
            assert g14.order == 2 * q * (q - 1)


def test_remark_trivial_summand_elimination():
    # inside the class-3 ambient the three-generator subgroup fixes the shared
    # index, so relative minimality fails; dropping it (class 5) repairs it
    gens, N, _ = class_generators(ClassSpec(3, {"n1": 1, "n2": 1}))
    a, b, a2, b2 = gens
    sub = closure([a * a2, b, b2], n=N)
    assert not relative_minimality(sub)
    assert relative_minimality(build_group(ClassSpec(5, {"n1": 1, "n2": 1})))


def test_building_block_products_pass():
    for spec in (ClassSpec(3, {"n1": 1, "n2": 2}), ClassSpec(4, {"n": 1, "p": 3, "r": 1})):
        rep = verify_class(spec)
        assert rep.all_ok


def test_smallest_param_tuples_deterministic():
    assert [s.params for s in smallest_param_tuples(1)] == [{"n": 1}, {"n": 2}]
    assert [s.params for s in smallest_param_tuples(2)] == [
        {"p": 3, "r": 1},
        {"p": 5, "r": 1},
    ]
    assert [s.params for s in smallest_param_tuples(3)] == [
        {"n1": 1, "n2": 1},
        {"n1": 1, "n2": 2},
    ]
    specs = smallest_param_tuples(4)
    assert [s.params for s in specs] == [
        {"n": 1, "p": 3, "r": 1},
        {"n": 2, "p": 3, "r": 1},
    ]


def test_all_generators_stay_in_wdn():
    from conich1.signedperm import sigma

    for cid in range(1, 25):
        for spec in smallest_param_tuples(cid, count=2):
            gens, N, _ = class_generators(spec)
            assert all(g.n == N and sigma(g) == 1 for g in gens)


def test_class_catalog_complete():
    cat = class_catalog()
    assert len(cat) == 24
    for entry in cat:
        for key in ("id", "name", "parameters", "ambient_rank", "orbit_profile", "sylow2", "example_generators"):
            assert key in entry


def test_d4_sylow_classes_11_18_22_24():
    # the four families whose Sylow 2-subgroup is the dihedral group of
    # order 8; its H^1 vanishes even though it is nonabelian
    from conich1.cohomology import h1_oracle

    for cid in (11, 18, 22, 24):
        spec = smallest_param_tuples(cid, count=1)[0]
        P = sylow2(build_group(spec))
        assert P.order == 8
        assert sorted(g.order() for g in P.elements) == [1, 2, 2, 2, 2, 2, 4, 4]
        assert h1_oracle(P).f2_rank == 0


def test_experimental_family_smoke():
    # experiment fixture only: no acceptance weight, no correctness claim
    from conich1.classes import experimental_family
    from conich1.enumeration import TABLE_ROWS

    gens, N = experimental_family(1)
    grp = closure(gens, n=N)
    assert grp.order == 24
    assert any(
        row.name == "S_4" and are_conjugate(grp, row.build(6)) for row in TABLE_ROWS[6]
    )
    gens, N = experimental_family(2)
    grp2 = closure(gens, n=N)
    assert grp2.order == 320 and N == 10
    from conich1.cohomology import h1_condition

    assert h1_condition(grp2).ok is not False  # open question; record, don't claim
