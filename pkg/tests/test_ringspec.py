import pytest

from orelab.corpus import corpus_names, corpus_spec
from orelab.finring import RingError, product_coords
from orelab.ringspec import RingSpecError, parse_ring

F4_TABLE = """table{ elements=[0,1,a,b];
  add=[[0,1,a,b],[1,0,b,a],[a,b,0,1],[b,a,1,0]];
  mul=[[0,0,0,0],[0,1,a,b],[0,a,b,1],[0,b,1,a]];
  one=1 }"""


@pytest.mark.parametrize("spec,size", [
    ("zmod(12)", 12), ("matrix(zmod(2), 2)", 16), ("triangular(zmod(3),2)", 27),
    ("product(zmod(2),zmod(3),zmod(2))", 12), ("group_algebra(zmod(2), C3)", 8),
    ("group_algebra(zmod(2),S3)", 64), ("quotient(zmod(12),[4])", 4), (F4_TABLE, 4),
])
def test_sizes(spec, size):
    assert parse_ring(spec).size == size


def test_whitespace_insensitive():
    a = parse_ring("product( zmod(2) ,\n zmod(3) )")
    b = parse_ring("product(zmod(2),zmod(3))")
    assert (a.add == b.add).all() and (a.mul == b.mul).all()
    assert a.label == b.label == "product(zmod(2),zmod(3))"


def test_product_ids_are_lexicographic():
    R = parse_ring("product(zmod(2),zmod(3))")
    assert [product_coords(R, x) for x in range(6)] == [(i, j) for i in range(2) for j in range(3)]


def test_table_field_is_f4():
    R = parse_ring(F4_TABLE)
    assert R.units_mask == 0b1110
    assert R.name(2) == "a"


@pytest.mark.parametrize("text,pos", [
    ("zmod(6", 6), ("zmod(1)", 0), ("matrix(zmod(2) 2)", 15), ("blah(3)", 0), ("zmod(6) x", 8),
    ("zmod(6)$", 7),
])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(RingSpecError) as exc:
        parse_ring(text)
    assert exc.value.pos == pos


def test_bad_table_is_axiom_error():
    text = "table{elements=[0,1]; add=[[0,1],[1,0]]; mul=[[0,0],[0,1]]; one=0}"
    with pytest.raises(RingError):
        parse_ring(text)
    text = "table{elements=[0,1]; add=[[0,1],[1,1]]; mul=[[0,0],[0,1]]; one=1}"
    with pytest.raises(RingError) as exc:
        parse_ring(text)
    assert "inverse" in exc.value.axiom or "commutative" in exc.value.axiom


def test_corpus_files_parse():
    names = corpus_names()
    assert len(names) >= 10
    for required in ("z2", "z4", "z6", "z8", "z9", "z12", "m2f2", "t2f2", "z2xz3", "f2c2"):
        assert required in names
    for n in names:
        assert parse_ring(corpus_spec(n)).size >= 2
