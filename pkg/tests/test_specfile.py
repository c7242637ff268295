from fractions import Fraction as F

import pytest

from homchar.hopf import builtin
from homchar.specfile import SpecError, label_name, load_algebra, parse_spec, render, structure_constants

from conftest import FINITE

Z2 = """\
# functions on Z/2
[meta]
name = z2-file

[basis]
e0 0
e1 0

[unit]
e0 + e1

[product]
e0 e0 -> e0   # idempotents
e1 e1 -> e1

[coproduct]
e0 -> e0|e0 + e1⊗e1
e1 -> e0|e1 + e1|e0

[counit]
e0 -> 1
e1 -> 0
"""


@pytest.mark.parametrize("name", FINITE)
def test_round_trip(name):
    A = builtin(name)
    B = parse_spec(render(A))
    assert B.axioms_ok
    assert structure_constants(A, rename=label_name) == structure_constants(B)
    assert render(B) == render(A).replace(f"name = {A.name}", f"name = {B.meta['name']}")


def test_hand_written_file():
    A = parse_spec(Z2)
    assert A.axioms_ok
    assert A.meta["name"] == "z2-file"
    assert structure_constants(A) == structure_constants(builtin("z2"), rename=label_name)


def test_fractional_coefficients():
    text = """\
[basis]
u 0
t 1
[unit]
u
[product]
u u -> u
u t -> t
t u -> t
[coproduct]
u -> u|u
t -> 1/2*u|t + 1/2*t|u + 1/2*u|t + 1/2*t|u
[counit]
u -> 1
t -> 0
"""
    A = parse_spec(text)
    assert A.axioms_ok
    assert A.coproduct_basis("t") == {("u", "t"): F(1), ("t", "u"): F(1)}


def test_differential_section():
    text = """\
[basis]
u 0
s -1
t 0
[unit]
u
[product]
u u -> u
u s -> s
s u -> s
u t -> t
t u -> t
[coproduct]
u -> u|u
s -> u|s + s|u
t -> u|t + t|u
[counit]
u -> 1
s -> 0
t -> 0
[differential]
s -> -t
"""
    A = parse_spec(text)
    assert A.d_basis("s") == {"t": F(-1)}
    assert A.d_basis("t") == {}


def test_missing_counit_names_label():
    text = Z2.replace("e1 -> 0\n", "")
    with pytest.raises(SpecError, match="'e1' has no counit"):
        parse_spec(text)


def test_missing_coproduct_names_label():
    text = Z2.replace("e1 -> e0|e1 + e1|e0\n", "")
    with pytest.raises(SpecError, match="'e1' has no coproduct"):
        parse_spec(text)


def test_undeclared_label_position():
    text = Z2.replace("e1 e1 -> e1", "e1 e1 -> e2")
    with pytest.raises(SpecError) as err:
        parse_spec(text)
    assert "undeclared label 'e2'" in str(err.value)
    assert (err.value.line, err.value.col) == (14, 10)


def test_syntax_error_position():
    text = Z2.replace("e0 -> e0|e0 + e1⊗e1", "e0 -> e0|e0 + 2 e1|e1")
    with pytest.raises(SpecError) as err:
        parse_spec(text)
    assert err.value.line == 17
    assert err.value.col == 17
    assert "missing '*'" in err.value.msg


@pytest.mark.parametrize("bad,msg", [
    ("e0 -> 1/0", "zero denominator"),
    ("e0 -> $", "unexpected character"),
    ("e0 -> e0|e0", "0 tensor factor"),
])
def test_other_errors(bad, msg):
    text = Z2.replace("e0 -> 1", bad)
    with pytest.raises(SpecError, match=msg):
        parse_spec(text)


def test_duplicate_and_unknown_section():
    with pytest.raises(SpecError, match="declared twice"):
        parse_spec(Z2.replace("e1 0\n", "e1 0\ne1 0\n"))
    with pytest.raises(SpecError, match="unknown section"):
        parse_spec(Z2.replace("[unit]", "[units]"))


def test_broken_coassociativity_is_reported():
    A = parse_spec(Z2.replace("e1 -> e0|e1 + e1|e0", "e1 -> e0|e1 + 2*e1|e0"))
    assert not A.axioms_ok
    bad = {c.name: c.detail for c in A.axiom_report if not c.ok}
    assert "axiom.coassociativity" in bad
    assert "e1|e0|e1" in bad["axiom.coassociativity"]


def test_load_algebra(tmp_path):
    p = tmp_path / "z2.alg"
    p.write_text(Z2, encoding="utf-8")
    assert load_algebra(str(p)).meta["name"] == "z2-file"
    assert load_algebra("z2").name == builtin("z2").name
    with pytest.raises(KeyError, match="unknown algebra"):
        load_algebra("no-such-algebra")
