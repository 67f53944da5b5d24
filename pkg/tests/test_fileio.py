import io
import math

import numpy as np
import pytest

from discordbounds.bounds import (
    EnsembleSpec,
    check_eq20,
    falsify_search,
    reverify_certificate,
)
from discordbounds.errors import FileFormatError, NotPSDError
from discordbounds.fileio import (
    certificate_from_dict,
    certificate_to_dict,
    dumps,
    format_float,
    load_document,
    loads,
    matrix_from_lists,
    matrix_to_lists,
    read_certificate,
    read_state,
    read_witness,
    report_to_dict,
    state_from_dict,
    state_to_dict,
    witness_from_dict,
    witness_to_dict,
    write_certificate,
    write_records,
    write_state,
    write_table,
    write_witness,
)
from discordbounds.linalg import BipartiteDims
from discordbounds.states import bell_phi_plus, make_rng, random_mixed_induced
from discordbounds.witnesses import negativity_witness

D23 = BipartiteDims(2, 3)


class TestFloatFormat:
    def test_round_trip_exact(self):
        for x in (1 / 3, 0.1, 2 / 3, 1e-300, 1e300, -0.0, 5.0, np.pi, 1 + 1e-15):
            assert float(format_float(x)) == x

    def test_non_finite_rejected(self):
        for x in (math.inf, -math.inf, math.nan):
            with pytest.raises(FileFormatError):
                format_float(x)


class TestDumps:
    def test_keys_sorted(self):
        assert dumps({"b": 1, "a": 2}) == '{"a": 2, "b": 1}'

    def test_bool_before_int(self):
        # bool is an int subclass; serialization must keep it boolean
        assert dumps({"x": True}) == '{"x": true}'
        assert dumps(False) == "false"

    def test_nested(self):
        doc = {"m": [[1.5, 2], [True, None]], "s": "hi"}
        assert dumps(doc) == '{"m": [[1.5, 2], [true, null]], "s": "hi"}'

    def test_numpy_scalars(self):
        assert dumps(np.float64(0.5)) == "0.5"
        assert dumps(np.int64(3)) == "3"

    def test_unserializable(self):
        with pytest.raises(FileFormatError):
            dumps(object())

    def test_deterministic(self):
        doc = {"z": 1 / 3, "a": [0.1, 0.2]}
        assert dumps(doc) == dumps(doc)


class TestLoads:
    def test_diagnostic_position(self):
        with pytest.raises(FileFormatError) as exc:
            loads('{"a": }')
        assert "line 1" in str(exc.value)

    def test_non_object_rejected(self):
        with pytest.raises(FileFormatError):
            loads("[1, 2]")


class TestMatrixLists:
    def test_round_trip(self, rng):
        M = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        assert np.array_equal(matrix_from_lists(matrix_to_lists(M)), M)

    def test_row_count_diagnostic(self):
        with pytest.raises(FileFormatError) as exc:
            matrix_from_lists([[[1.0, 0.0]]], side=2)
        assert "1 rows" in str(exc.value)

    def test_ragged_row_diagnostic(self):
        with pytest.raises(FileFormatError) as exc:
            matrix_from_lists([[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0]]])
        assert "row 1" in str(exc.value)

    def test_bad_entry_diagnostic(self):
        with pytest.raises(FileFormatError) as exc:
            matrix_from_lists([[[1.0, 0.0], [0.0]], [[0.0, 0.0], [1.0, 0.0]]])
        assert "[0][1]" in str(exc.value)


class TestStateDocuments:
    def test_round_trip_bitwise(self, tmp_path):
        rho = random_mixed_induced(D23, 4, make_rng(3), seed_provenance=(3, 0))
        path = tmp_path / "state.json"
        write_state(path, rho)
        back = read_state(path)
        assert np.array_equal(back.matrix, rho.matrix)
        assert back.dims == rho.dims
        assert back.seed_provenance == (3, 0)

    def test_label_preserved(self, tmp_path):
        path = tmp_path / "phi.json"
        write_state(path, bell_phi_plus(2))
        assert read_state(path).label == "phi_plus_2"

    def test_invalid_matrix_rejected_on_read(self):
        # keep the document Hermitian with unit trace but break positivity
        doc = state_to_dict(bell_phi_plus(2))
        doc["matrix"][0][3] = [5.0, 0.0]
        doc["matrix"][3][0] = [5.0, 0.0]
        with pytest.raises(NotPSDError):
            state_from_dict(doc)

    def test_missing_fields(self):
        with pytest.raises(FileFormatError):
            state_from_dict({"dims": [2, 2]})
        with pytest.raises(FileFormatError):
            state_from_dict({"matrix": []})
        with pytest.raises(FileFormatError):
            state_from_dict({"dims": [2], "matrix": []})


class TestWitnessDocuments:
    def test_round_trip_bitwise(self, tmp_path):
        W = negativity_witness(bell_phi_plus(2))
        path = tmp_path / "w.json"
        write_witness(path, W)
        back = read_witness(path)
        assert np.array_equal(back.matrix, W.matrix)
        assert back.kind == W.kind
        assert back.e_w == W.e_w
        assert back.hs_sq == W.hs_sq
        assert back.sup_norm == W.sup_norm
        assert back.neg_count == W.neg_count

    def test_missing_scalar_field(self):
        doc = witness_to_dict(negativity_witness(bell_phi_plus(2)))
        del doc["e_w"]
        with pytest.raises(FileFormatError):
            witness_from_dict(doc)


@pytest.fixture(scope="module")
def cert():
    certs = falsify_search(
        "eq21_historical", BipartiteDims(2, 32), EnsembleSpec("induced", 40), 1, seed=77
    )
    assert len(certs) == 1
    return certs[0]


class TestCertificateDocuments:
    def test_round_trip_bitwise(self, cert, tmp_path):
        path = tmp_path / "cert.json"
        write_certificate(path, cert)
        back = read_certificate(path)
        assert np.array_equal(back.state.matrix, cert.state.matrix)
        assert np.array_equal(back.witness_matrix, cert.witness_matrix)
        assert back.margin == cert.margin
        assert back.recipe == cert.recipe

    def test_reverifies_after_round_trip(self, cert, tmp_path):
        path = tmp_path / "cert.json"
        write_certificate(path, cert)
        rep = reverify_certificate(read_certificate(path))
        assert abs(rep.margin - cert.margin) <= 1e-10
        assert not rep.satisfied

    def test_missing_field(self, cert):
        doc = certificate_to_dict(cert)
        del doc["recipe"]
        with pytest.raises(FileFormatError):
            certificate_from_dict(doc)


@pytest.fixture(scope="module")
def docs():
    reports = [check_eq20(EnsembleSpec("induced", 4).draw(D23, 5, i)) for i in range(3)]
    return [report_to_dict(r) for r in reports]


class TestRecordsAndTable:
    def test_records_one_line_each(self, docs):
        buf = io.StringIO()
        write_records(buf, docs)
        lines = buf.getvalue().splitlines()
        assert len(lines) == 3
        for line, doc in zip(lines, docs):
            assert loads(line) == loads(dumps(doc))

    def test_table_header_and_quantity_columns(self, docs):
        buf = io.StringIO()
        write_table(buf, docs)
        lines = buf.getvalue().splitlines()
        header = lines[0].split(",")
        assert header[:3] == ["bound_id", "dims", "seed"]
        assert all(c.startswith("q_") for c in header[11:])
        assert "q_D2" in header
        assert len(lines) == 4

    def test_table_booleans_and_floats(self, docs):
        buf = io.StringIO()
        write_table(buf, docs)
        body = buf.getvalue().splitlines()[1]
        assert "true" in body
        # full 17-digit float text survives the CSV cell
        margin_text = format_float(docs[0]["margin"])
        assert margin_text in body

    def test_load_document_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_document(tmp_path / "nope.json")
