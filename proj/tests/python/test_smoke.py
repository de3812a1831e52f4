"""End-to-end smoke tests for the python module against the fixture corpus."""

import os
import pathlib

import pytest

import equilift

FIXTURES = pathlib.Path(
    os.environ.get(
        "EQUILIFT_FIXTURES",
        pathlib.Path(__file__).resolve().parents[2] / "fixtures",
    )
)


def fixture(name):
    return equilift.load(str(FIXTURES / name))


def test_group_helpers():
    assert equilift.group_order("Q8") == 8
    assert equilift.group_names("S3") == ["e", "(23)", "(12)", "(123)", "(132)", "(13)"]
    with pytest.raises(equilift.InputError):
        equilift.group_names("E8")


def test_instance_blocks():
    inst = fixture("lift_mobius_z4.json")
    assert inst.version == 1
    assert inst.blocks == ["lift"]


def test_round_trip():
    inst = fixture("homogeneous_s3_a3.json")
    text = equilift.dumps(inst)
    again = equilift.loads(text)
    assert equilift.dumps(again) == text


def test_check_site_pseudocircle():
    rep = equilift.check_site(fixture("site_pseudocircle.json"))
    assert rep["report_version"] == 1
    assert rep["command"] == "check-site"
    assert rep["topology"]["ok"] is True
    assert rep["sheaf"]["ok"] is True


def test_check_site_broken():
    rep = equilift.check_site(fixture("site_broken_stability.json"))
    assert rep["topology"]["ok"] is False
    assert rep["topology"]["issues"]


def test_classify_circle_s3():
    rep = equilift.classify(fixture("classify_circle3_s3.json"), degree=1)
    assert rep["classes"]["count"] == 3


def test_classify_degree2_needs_abelian_band():
    with pytest.raises(equilift.UnsupportedError):
        equilift.classify(fixture("classify_circle3_s3.json"), degree=2)


def test_lift_quaternionic_instance():
    rep = equilift.lift(fixture("lift_q8.json"))
    assert rep["c1"]["ok"] is True
    assert rep["split"] is False
    assert rep["factor_set_coboundary"] is False
    assert rep["direct_agrees"] is True


def test_lift_with_workers_matches():
    one = equilift.lift(fixture("lift_trivial.json"), workers=1)
    many = equilift.lift(fixture("lift_trivial.json"), workers=4)
    assert one == many
    assert one["classes"]["count"] == 2


def test_homogeneous_quotient():
    rep = equilift.homogeneous(fixture("homogeneous_s3_a3.json"))
    assert rep["realized"] is True
    assert rep["points"] == 12
    assert rep["equivariant_automorphisms"]["count"] == 3
    assert rep["equivariant_automorphisms"]["certificate_ok"] is True


def test_clutch_verdicts():
    good = equilift.clutch(fixture("clutch_z3_s3.json"))
    assert good["accepted"] is True and good["split"] is True
    bad = equilift.clutch(fixture("clutch_rejected.json"))
    assert bad["accepted"] is False and "failing" in bad


def test_malformed_instance_raises():
    with pytest.raises(equilift.InputError):
        equilift.loads('{"version": 99}')
