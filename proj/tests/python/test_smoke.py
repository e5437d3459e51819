import schouten

TM_R2 = """
doc algebroid
chart
  base x1 x2
end
structure
  frames d_x1 d_x2
  anchor d_x1 x1 = 1
  anchor d_x2 x2 = 1
end
"""


def tensor(terms, space="section"):
    lines = ["doc tensor", "chart", "  base x1 x2", "end", f"space {space}",
             "generators d_x1 d_x2"]
    lines += [f"term {m} = {c}" for m, c in terms]
    return "\n".join(lines) + "\n"


def test_check_algebroid():
    assert schouten.check_algebroid(TM_R2).startswith("PASS")


def test_scalar_arithmetic():
    chart = schouten.Chart(["x", "y"])
    a = schouten.Scalar.parse(chart, "x + 1")
    b = schouten.Scalar.parse(chart, "x - 1")
    assert str(a * b) == "x^2 - 1"
    assert str(a.partial("x")) == "1"


def test_sn_bracket_classical():
    # [x1 d_2, d_1] = -d_2
    out = schouten.sn_bracket(TM_R2, tensor([("d_x2", "x1")]), tensor([("d_x1", "1")]))
    assert "term d_x2 = -1" in out


def test_canonical_roundtrip():
    canon = schouten.canonical(TM_R2)
    assert schouten.canonical(canon) == canon


def test_suite_runs_deterministically():
    ok1, text1 = schouten.run_suite("sn-jacobi", seed=11, cases=4)
    ok2, text2 = schouten.run_suite("sn-jacobi", seed=11, cases=4)
    assert ok1 and ok2
    assert text1 == text2


def test_complete_lift():
    # (x1 d_1)^c = x1 d_x1 + y1 d_y1 on the total space
    tm_r1 = """
doc algebroid
chart
  base x
end
structure
  frames d_x
  anchor d_x x = 1
end
"""
    x_field = """
doc tensor
chart
  base x
end
space section
generators d_x
term d_x = x
"""
    out = schouten.lift("complete", tm_r1, x_field)
    assert "term d_x = x" in out
    assert "term d_y1 = y1" in out
