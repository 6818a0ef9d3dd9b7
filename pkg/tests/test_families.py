import json
import shutil

import numpy as np
import pytest

from pyramidal.classification import Case1, Case2, Case3, classify, is_3_pyramidal_definition
from pyramidal.errors import (EvenOrderH, EvenOrderY, InvalidAOrder, NoIndex3NormalSubgroup,
                              ParseError, ReferenceDataMissing, ValidationFailed)
from pyramidal.families import (REFERENCE_NAMES, build_homocyclic_case3, build_reference,
                                corpus, corpus_document, load_reference,
                                make_homocyclic_case3, make_s3_times_h, make_suzuki64_case2,
                                parse_corpus_document, parse_shorthand, resolve,
                                symmetric_group, alternating_group)
from pyramidal.kernel import cyclic_group
from pyramidal.maps import are_isomorphic
from pyramidal.structure import (center, derived_subgroup, is_normal, odd_core,
                                 sylow_subgroup)

DATA = __import__("pyramidal").__path__[0] + "/data"


def test_s3_times_h():
    assert are_isomorphic(make_s3_times_h("cyclic:1"), symmetric_group(3))
    g = make_s3_times_h("cyclic:5")
    assert g.order == 30 and is_3_pyramidal_definition(g)
    g = make_s3_times_h("abelian:3,9")
    assert g.order == 162 and is_3_pyramidal_definition(g)
    assert isinstance(classify(make_s3_times_h("cyclic:7")).verdict, Case1)
    with pytest.raises(EvenOrderH):
        make_s3_times_h("cyclic:4")


def test_homocyclic_family():
    g = make_homocyclic_case3(1)
    assert g.order == 12 and are_isomorphic(g, alternating_group(4))
    g = make_homocyclic_case3(2)
    assert g.order == 48 and is_3_pyramidal_definition(g)
    assert classify(g).verdict == Case3(2)


@pytest.mark.parametrize("y, x_order", [("cyclic:9", 3), ("metacyclic:7,3,2", 7),
                                        ("abelian:3,3", 3), ("cyclic:15", 5)])
def test_homocyclic_odd_core_is_x(y, x_order):
    con = build_homocyclic_case3(2 if x_order == 3 else 1, y)
    g = con.group
    assert is_3_pyramidal_definition(g)
    assert con.x_image.order == x_order
    assert odd_core(g) == con.x_image


def test_homocyclic_144_odd_core_order_3():
    g = make_homocyclic_case3(2, "cyclic:9")
    assert g.order == 144 and odd_core(g).order == 3


def test_homocyclic_with_explicit_witness():
    con = build_homocyclic_case3(1, "cyclic:9", x_seeds=[3])
    assert con.x_image.order == 3
    with pytest.raises(NoIndex3NormalSubgroup):
        build_homocyclic_case3(1, "cyclic:9", x_seeds=[1])


def test_homocyclic_errors():
    with pytest.raises(EvenOrderY):
        make_homocyclic_case3(1, "cyclic:6")
    with pytest.raises(NoIndex3NormalSubgroup):
        make_homocyclic_case3(1, "cyclic:5")


@pytest.mark.parametrize("a, order", [(3, 192), (15, 960)])
def test_suzuki_case2(a, order):
    g = make_suzuki64_case2(a)
    assert g.order == order and is_3_pyramidal_definition(g)
    assert classify(g).verdict == Case2(a)


def test_suzuki_case2_bad_order():
    with pytest.raises(InvalidAOrder):
        make_suzuki64_case2(5)


def test_reference_suzuki64():
    n = load_reference("suzuki64")
    assert n.order == 64
    assert int((n.element_orders == 2).sum()) == 3
    assert center(n).order == 4 and center(n) == derived_subgroup(n)


def test_reference_nonnormal_sylow():
    g = load_reference("nonnormal_sylow_example")
    assert g.order == 1296 and is_3_pyramidal_definition(g)
    assert not is_normal(g, sylow_subgroup(g, 2))


@pytest.mark.parametrize("name", REFERENCE_NAMES)
def test_bundled_data_matches_construction(name):
    shipped, built = load_reference(name), build_reference(name)
    assert shipped.order == built.order
    if shipped.order <= 64:
        assert are_isomorphic(shipped, built)


def _copy_data(tmp_path):
    d = tmp_path / "ref"
    shutil.copytree(DATA, d)
    return d


def test_corrupted_reference_is_rejected(tmp_path):
    d = _copy_data(tmp_path)
    p = d / "suzuki64.json"
    doc = json.loads(p.read_text())
    doc["generators"] = doc["generators"][:2]
    p.write_text(json.dumps(doc))
    with pytest.raises(ValidationFailed) as err:
        load_reference("suzuki64", d)
    assert err.value.check == "order 64"


def test_replaced_reference_fails_named_check(tmp_path):
    # a group of order 64 with 3 involutions that is abelian: C8 x C8
    d = _copy_data(tmp_path)
    from pyramidal.kernel import group_document
    from pyramidal.maps import homocyclic_carrier
    (d / "suzuki64.json").write_text(json.dumps(group_document(homocyclic_carrier(3))))
    with pytest.raises(ValidationFailed) as err:
        load_reference("suzuki64", d)
    assert err.value.check == "nonabelian"


def test_unparseable_and_missing_reference(tmp_path):
    d = _copy_data(tmp_path)
    (d / "suzuki64.json").write_text("{not json")
    with pytest.raises(ValidationFailed):
        load_reference("suzuki64", d)
    (d / "suzuki64.json").unlink()
    with pytest.raises(ReferenceDataMissing):
        load_reference("suzuki64", d)
    with pytest.raises(ReferenceDataMissing):
        load_reference("nope")


def test_corpus_contents():
    small = {e["name"]: e for e in corpus("small")}
    assert small["S3"]["expected"] == "positive"
    assert small["D4"]["expected"] == "negative"
    assert small["C4^2:C3"]["expected"] == "positive"
    assert 55 <= len(small) <= 70
    full = corpus("full")
    assert 90 <= len(full) <= 110
    assert corpus("full") == full


def test_small_corpus_orders_and_tags():
    for e in corpus("small"):
        g = resolve(e["spec"])
        assert g.order <= 200
        assert is_3_pyramidal_definition(g) == (e["expected"] == "positive"), e["name"]


def test_corpus_document_roundtrip():
    doc = json.loads(json.dumps(corpus_document("small")))
    assert doc["format"] == "corpus/v1"
    assert parse_corpus_document(doc) == corpus("small")
    with pytest.raises(ParseError):
        parse_corpus_document({"format": "corpus/v1", "entries": [{"expected": "positive"}]})


def test_shorthand():
    assert parse_shorthand("cyclic:7") == {"kind": "cyclic", "k": 7}
    assert resolve("alternating:4*cyclic:3").order == 36
    assert resolve({"kind": "semidirect", "normal": "homocyclic:1", "acting": "cyclic:9",
                    "action": "gamma"}).order == 36
    for bad in ("cyclic:x", "wat:3", {"kind": "zzz"}, {"no": "kind"}):
        with pytest.raises(ParseError):
            resolve(bad)


def test_perm_spec():
    g = resolve({"kind": "perm", "degree": 3, "generators": [[1, 0, 2], [0, 2, 1]]})
    assert g.order == 6
