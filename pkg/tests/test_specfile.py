from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from anngraph.ring import build_rings
from anngraph.specfile import SpecSyntaxError, format_spec, parse_spec
from anngraph.corpus import _algebra_family

AN_SPEC = """
# the local ring of order 32
ring "AN" algebra base=4 gens=x:2,y:2,z:2 rel x*x = 2; rel y*y = 2; rel z*z = 0; rel x*y = 0; rel x*z = 0; rel y*z = 2
"""


def test_zn_line():
    [p] = parse_spec('ring "Z4" zn 4')
    assert p.kind == "zn" and p.modulus == 4 and p.name == "Z4"


def test_an_line():
    [p] = parse_spec(AN_SPEC)
    assert p.kind == "algebra" and p.order == 32
    assert build_rings([p])["AN"].order == 32


def test_continuation_lines():
    text = 'ring "D" algebra base=2 gens=x:2,y:2\n rel x*x = 0\n rel x*y = 0; rel y*y = 0\n'
    [p] = parse_spec(text)
    assert len(p.relations) == 3


def test_forward_reference():
    with pytest.raises(SpecSyntaxError) as err:
        parse_spec('ring "P" product Z4 Z4\nring "Z4" zn 4\n')
    assert err.value.line == 1


@pytest.mark.parametrize(
    "text, line",
    [
        ('ring "A" zn 4\nring "A" zn 6\n', 2),
        ('ring "A" zn four\n', 1),
        ('ring "A" ring 4\n', 1),
        ('\n\nring A zn 4\n', 3),
        ('ring "D" algebra base=2 gens=x:2 rel x*x = 1 + *\n', 1),
        ('ring "D" algebra base=2 gens=x:2 rel x x = 0\n', 1),
        ('ring "D" algebra base=2 gens=x:2,y:2 rel x*x = 0\n', 1),
        ("rel x*x = 0\n", 1),
    ],
)
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(SpecSyntaxError) as err:
        parse_spec(text)
    assert err.value.line == line
    assert f"line {line}" in str(err.value)


def test_round_trip_fixed_family():
    pres = [p for p in _algebra_family() if p.kind == "algebra"]
    text = format_spec(pres)
    assert parse_spec(text) == pres
    assert format_spec(parse_spec(text)) == text


@given(
    st.lists(st.integers(2, 300), min_size=1, max_size=6, unique=True),
    st.integers(0, 3),
)
def test_round_trip_zn_and_products(moduli, nprod):
    text = "".join(f'ring "Z{m}" zn {m}\n' for m in moduli)
    names = [f"Z{m}" for m in moduli]
    for k in range(min(nprod, len(names) - 1)):
        text += f'ring "P{k}" product {" ".join(names[: k + 2])}\n'
    pres = parse_spec(text)
    assert parse_spec(format_spec(pres)) == pres
