import pytest

from appbasis.fileio import FormatError, parse, parse_orders, parse_shift, serialize
from appbasis.polymat import PolyMat

from conftest import P, P7, pm, rand_instance


def test_round_trip_no_orders():
    F = rand_instance(0, 3, 2, (4, 4))
    G, orders = parse(serialize(F))
    assert G == F and orders is None


def test_round_trip_with_orders():
    F = rand_instance(1, 2, 3, (5, 2, 3), P7)
    text = serialize(F, orders=(5, 2, 3))
    G, orders = parse(text)
    assert G == F and orders == (5, 2, 3)


def test_serialize_zero_matrix_round_trip():
    F = PolyMat.zeros(P7, 2, 2)
    G, _ = parse(serialize(F))
    assert G == F and G.m == 2 and G.n == 2


def test_parse_minimal_document():
    text = "POLYMAT 1\nmodulus 7\ndims 2 1\n0 0 : 1\n1 0 : 1 1\n"
    G, orders = parse(text)
    assert G == pm(P7, [[[1]], [[1, 1]]])
    assert orders is None


def test_parse_blank_lines_in_body():
    text = "POLYMAT 1\nmodulus 7\ndims 1 1\n\n0 0 : 3\n\n"
    G, _ = parse(text)
    assert G == pm(P7, [[[3]]])


def test_parse_errors_carry_line_numbers():
    cases = [
        ("WRONG 9\nmodulus 7\ndims 1 1\n", 1),
        ("POLYMAT 1\nmodulus 6\ndims 1 1\n", 2),
        ("POLYMAT 1\nmodulus 7\ndims 0 1\n", 3),
        ("POLYMAT 1\nmodulus 7\ndims 1 1\n2 0 : 1\n", 4),
        ("POLYMAT 1\nmodulus 7\ndims 1 1\n0 0 1\n", 4),
        ("POLYMAT 1\nmodulus 7\ndims 1 2\norders 3\n", 4),
    ]
    for text, lineno in cases:
        with pytest.raises(FormatError) as exc:
            parse(text)
        assert exc.value.lineno == lineno
        assert str(exc.value).startswith(f"line {lineno}:")


def test_parse_duplicate_entry_rejected():
    text = "POLYMAT 1\nmodulus 7\ndims 1 1\n0 0 : 1\n0 0 : 2\n"
    with pytest.raises(FormatError):
        parse(text)


def test_parse_missing_header_fields():
    with pytest.raises(FormatError):
        parse("POLYMAT 1\nmodulus 7\n")
    with pytest.raises(FormatError):
        parse("POLYMAT 1\ndims 1 1\n")


def test_parse_shift_macros():
    assert parse_shift("uniform", 3, 5) == [0, 0, 0]
    assert parse_shift("hermite", 3, 5) == [5, 10, 15]
    assert parse_shift("1,-2,0", 3, 5) == [1, -2, 0]
    with pytest.raises(ValueError):
        parse_shift("1,2", 3, 5)
    with pytest.raises(ValueError):
        parse_shift("a,b,c", 3, 5)


def test_parse_orders_spec():
    assert parse_orders("4", 3) == (4, 4, 4)
    assert parse_orders("4,2,1", 3) == (4, 2, 1)
    with pytest.raises(ValueError):
        parse_orders("4,2", 3)
    with pytest.raises(ValueError):
        parse_orders("-1", 2)
