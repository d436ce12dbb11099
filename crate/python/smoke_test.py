"""Smoke test for the pyteich0 extension (build with `pip install --no-build-isolation crates/py`)."""

import pyteich0 as t


def test_braid_relations():
    a = t.Braid(3, [(1, 1), (2, 1), (1, 1)])
    b = t.Braid(3, [(2, 1), (1, 1), (2, 1)])
    assert a == b
    assert not t.Braid(3, [(1, 1)]).equals(t.Braid(3, [(2, 1)]))
    h = t.Braid.special("half_twist", 4)
    assert (h * h).equals(t.Braid.special("full_twist", 4))
    assert h.perm() == [4, 3, 2, 1]
    assert t.Braid(4, [(1, 1)]).star().letters == [(3, 1)]
    assert (a * a.inverse()).equals(t.Braid(3, []))
    assert t.Braid.special("full_twist", 3).equals_mod_center(t.Braid(3, []))


def test_lie_dimensions():
    assert t.lie_dims("p", 3, 4) == [0, 0, 0, 0]
    assert t.lie_dims("p", 4, 3) == [2, 1, 2]
    assert t.lie_dims("free", 2, 5) == [2, 1, 2, 3, 6]
    z = t.bch_free2([["1", "0"], ["0"]], [["0", "1"], ["0"]], 2)
    assert z == [["1", "1"], ["1/2"]]


def test_associator():
    a = t.Associator.solve(3, "1")
    assert a.is_valid()
    assert a.log_phi[1] == ["1/24"]
    b = t.Associator.from_dict(a.to_dict())
    assert b.log_phi == a.log_phi
    g = a.eval(t.Braid.special("full_twist", 3), "(..).")
    assert g["perm"] == [1, 2, 3]


def test_gt():
    assert t.GtElement.discrete(1).check()["valid"]
    assert not t.GtElement.discrete(3).check()["hexagon"]
    e = t.GtElement.solve("3", 3, 0)
    assert e.check()["valid"]
    a = t.Associator.solve(3, "1")
    assert e.act(a).mu == "3"
    g = e.to_grt(a)
    assert g["relations"]["valid"] and g["grt"]["c"] == "3"
    assert (e * e).lam == "9"


def test_quotients_and_verify():
    assert len(t.quotient_objects("cyc", ["a", "b", "c"])) == 2
    assert len(t.quotient_objects("dih", ["a", "b", "c", "d"])) == 3
    assert len(t.teichmuller_objects(["a", "b", "c", "d"])) == 6
    ok, report = t.verify("braid", 3)
    assert ok and report.startswith("seed=0 N=3 mu=1")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
