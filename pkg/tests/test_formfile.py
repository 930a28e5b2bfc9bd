"""Form-file grammar: parsing, parameter binding, errors, round trips."""

import pytest

from foliation_lab.formfile import FormFile, FormSyntaxError, parse_form
from foliation_lab.foliation import ValidationError
from foliation_lab.qalgebra import poly_str

SIMPLE = """
n = 3
e = 2
vars x0 x1 x2 x3
w = x0*dx1 - x1*dx0
"""

FAMILY = """
# family member
n = 3
e = 3
vars x y z u
t = 1
w = (x + (1+t)*y)*z*dx - x*z*dy - x*(x + t*y)*dz
"""


def test_parse_simple():
    ff = parse_form(SIMPLE)
    assert (ff.n, ff.e) == (3, 2)
    assert [poly_str(c, ff.names) for c in ff.coefficients] == ["-x1", "x0", "0", "0"]
    form = ff.build()
    assert form.e == 2


def test_parse_family_binding():
    ff = parse_form(FAMILY)
    got = poly_str(ff.coefficients[0], ff.names)
    assert got == "x*z + 2*y*z"


def test_unbound_parameter():
    text = SIMPLE.replace("x0*dx1", "s*x0*dx1")
    with pytest.raises(FormSyntaxError) as err:
        parse_form(text)
    assert err.value.code == "unbound-parameter"
    assert err.value.line == 5


def test_syntax_error_position():
    with pytest.raises(FormSyntaxError) as err:
        parse_form("n = 3\ne = 2\nvars x0 x1 x2 x3\nw = x0*dx1 ยง")
    assert err.value.line == 4


def test_missing_differential():
    with pytest.raises(FormSyntaxError):
        parse_form("n = 3\ne = 2\nvars x0 x1 x2 x3\nw = x0*x1")


def test_double_differential():
    with pytest.raises(FormSyntaxError):
        parse_form("n = 3\ne = 2\nvars x0 x1 x2 x3\nw = dx0*dx1")


def test_inhomogeneous_coefficient():
    with pytest.raises(FormSyntaxError) as err:
        parse_form("n = 3\ne = 3\nvars x0 x1 x2 x3\nw = (x0 + x0^2)*dx1 - x1*dx0")
    assert err.value.code == "inhomogeneous-coefficient"


def test_validation_error_surfaces():
    with pytest.raises(ValidationError) as err:
        parse_form("n = 3\ne = 2\nvars x0 x1 x2 x3\nw = x0*dx0").build()
    assert err.value.code == "euler-violation"


def test_rational_literals():
    ff = parse_form("n = 3\ne = 2\nvars x0 x1 x2 x3\nw = 3/2*x0*dx1 - 3/2*x1*dx0")
    assert poly_str(ff.coefficients[1], ff.names) == "3/2*x0"


def test_roundtrip_canonical():
    ff = parse_form(SIMPLE)
    text = ff.to_text()
    ff2 = parse_form(text)
    assert ff2.coefficients == ff.coefficients
    assert ff2.to_text() == text  # printing is idempotent on canonical files


def test_roundtrip_family():
    ff = parse_form(FAMILY)
    ff2 = parse_form(ff.to_text())
    assert ff2.coefficients == ff.coefficients


def test_reserved_names_rejected():
    with pytest.raises(FormSyntaxError):
        parse_form("n = 3\ne = 2\nvars w x1 x2 x3\nw = x1*dw")


def test_multiline_expression():
    text = ("n = 3\ne = 2\nvars x0 x1 x2 x3\n"
            "w = x0*dx1\n  - x1*dx0\n")
    ff = parse_form(text)
    assert poly_str(ff.coefficients[0], ff.names) == "-x1"
