import csv
import io
import json
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given, strategies as st

from cicy_curves.configuration import RowSumViolation, canonical_form, validate_configuration
from cicy_curves.finiteness import finiteness_certificate
from cicy_curves.formats import (
    MatrixSpecError,
    census_from_json,
    census_to_csv,
    census_to_json,
    census_to_text,
    certificate_to_json,
    format_zset,
    parse_matrix_spec,
    parse_matrix_text,
    render_matrix_text,
    zset_table_csv,
)

SCHEMAS = Path(__file__).resolve().parents[1] / "docs" / "schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def test_json_round_trip_byte_identical(census):
    text = census_to_json(census)
    back = census_from_json(text)
    assert [e.matrix for e in back] == [e.matrix for e in census]
    assert census_to_json(back) == text


def test_census_json_schema(census):
    jsonschema.validate(json.loads(census_to_json(census)), schema("census"))


def test_census_from_json_rejects_noncanonical(census):
    objs = json.loads(census_to_json(census))
    assert objs[4]["matrix"] == [[2, 0], [1, 4]]
    objs[4]["matrix"] = [[0, 2], [4, 1]]
    with pytest.raises(MatrixSpecError):
        census_from_json(json.dumps(objs))
    objs = json.loads(census_to_json(census))
    objs[3]["codim"] += 1
    with pytest.raises(MatrixSpecError):
        census_from_json(json.dumps(objs))


def test_csv(census):
    rows = list(csv.DictReader(io.StringIO(census_to_csv(census))))
    assert len(rows) == 57
    assert rows[2]["matrix"] == "1;1/3;2"
    assert rows[1]["z_set"].startswith("(2,2), (2,3)")
    for row, e in zip(rows, census):
        top, bottom = row["matrix"].split("/")
        assert [int(x) for x in top.split(";")] == list(e.matrix.entries[0])
        assert [int(x) for x in bottom.split(";")] == list(e.matrix.entries[1])
        assert int(row["codim"]) == e.codim


def test_text_rendering_reparses(census):
    text = census_to_text(census)
    assert text.count("★") == 16
    for e in census:
        rendered = render_matrix_text(e.matrix, star=e.has_p1_factor, label=e.duplicate_class)
        assert rendered in text
        assert canonical_form(parse_matrix_text(rendered)) == e.matrix


def test_text_layout():
    A = validate_configuration((2, 3), [[2, 1], [0, 4]])
    assert render_matrix_text(A, label="I") == "  [P^2 | 2 1 ] (I)\n  [P^3 | 0 4 ]"


@pytest.mark.parametrize(
    "spec",
    ['{"dims":[2,3],"matrix":[[2,1],[0,4]]}', "[P^2 | 2 1 ]\n[P^3 | 0 4 ]", "[P2|2 1][P3|0 4]"],
)
def test_parse_matrix_spec(spec):
    assert parse_matrix_spec(spec).entries == ((2, 1), (0, 4))


def test_parse_matrix_spec_file(tmp_path):
    p = tmp_path / "m.json"
    p.write_text('{"dims":[3,3],"matrix":[[3,1,0],[0,1,3]]}')
    assert parse_matrix_spec(f"@{p}").m == 3
    with pytest.raises(MatrixSpecError):
        parse_matrix_spec(f"@{tmp_path / 'missing.json'}")


@pytest.mark.parametrize(
    "spec",
    ['{"dims":[2],"matrix":[[3],[3]]}', '{"dims":[2,2],"matrix":[[3.0],[3]]}', '{"matrix":[[3],[3]]}', "garbage", "[1, 2]"],
)
def test_parse_matrix_spec_errors(spec):
    with pytest.raises(MatrixSpecError):
        parse_matrix_spec(spec)


def test_parse_matrix_spec_validation_error():
    with pytest.raises(RowSumViolation):
        parse_matrix_spec('{"dims":[2,2],"matrix":[[2],[3]]}')


@given(st.sampled_from(range(57)))
def test_matrix_schema(i):
    from cicy_curves.ground_truth import APPENDIX_A

    e = APPENDIX_A[i]
    jsonschema.validate(validate_configuration(e.dims, e.rows).to_dict(), schema("matrix"))


def test_certificate_json_schema():
    A = validate_configuration((2, 3), [[2, 1], [0, 4]])
    for d in [(1, 1), (2, 3), (1, 5), (3, 3)]:
        jsonschema.validate(json.loads(certificate_to_json(finiteness_certificate(A, d))), schema("certificate"))


def test_format_zset_and_table():
    zs = {(2, 4), (2, 3)}
    assert format_zset(zs) == "(2,3), (2,4)"
    A = validate_configuration((2, 3), [[2, 1], [0, 4]])
    assert zset_table_csv([(A, zs)]) == 'm,a1,a2,matrix,z_set\n2,2,3,2;1/0;4,"(2,3), (2,4)"\n'
