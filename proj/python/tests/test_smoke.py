import pytest

import ttkernel

CONSTANTS = """
postulate A
postulate B (x : A)
postulate f : (x : A) -> B x
"""

ARITH = r"""
def add : Nat -> Nat -> Nat := \m. \n. ind(m; _. Nat; n; _ r. succ r)
def mul : Nat -> Nat -> Nat := \m. \n. ind(m; _. Nat; 0; _ r. add n r)
"""


def test_load_signature():
    sig = ttkernel.load_signature(CONSTANTS)
    assert len(sig) == 3
    assert "f" in sig
    assert sig.names() == ["A", "B", "f"]


def test_arithmetic():
    sig = ttkernel.load_signature(ARITH)
    assert ttkernel.normalize(sig, "add 2 3") == "5"
    assert ttkernel.normalize(sig, "mul 3 3") == "9"
    assert ttkernel.oracle_normalize(sig, "mul 2 3") == "6"
    assert ttkernel.equal(sig, "add 2 2", "mul 2 2")
    assert not ttkernel.equal(sig, "add 2 2", "5")


def test_eta_long_output():
    sig = ttkernel.load_signature(CONSTANTS)
    assert ttkernel.normalize(sig, "f", "(x : A) -> B x") == r"\x0. f x0"
    # an unapplied constant is a lambda, so it needs its type
    with pytest.raises(ttkernel.KernelTypeError):
        ttkernel.infer_type(sig, "f")
    arith = ttkernel.load_signature(ARITH)
    assert ttkernel.infer_type(arith, "add") == "Nat -> Nat -> Nat"
    assert ttkernel.infer_type(arith, "add 1") == "Nat -> Nat"


def test_errors():
    with pytest.raises(ttkernel.ParseError) as err:
        ttkernel.load_signature("def x : Nat := ind(0; _. Nat; 0)")
    assert err.value.line == 1
    with pytest.raises(ttkernel.KernelTypeError) as err:
        ttkernel.load_signature("def x : Nat := \\y. y")
    assert err.value.code == "Mismatch"
    sig = ttkernel.Signature()
    with pytest.raises(ttkernel.KernelTypeError) as err:
        ttkernel.normalize(sig, "\\x. x")
    assert err.value.code == "CannotInfer"


def test_fuzz():
    sig = ttkernel.load_signature(CONSTANTS)
    report = ttkernel.fuzz(sig, count=30, seed=9, size=10)
    assert report["cases"] == 30
    assert report["failures"] == 0, report["details"]
