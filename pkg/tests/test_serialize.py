"""Format tests: hex conventions, round-trips, deterministic bytes."""

import json

import pytest

from qdf import block_of, build_family, develop, desarguesian_spread, build_relative_family, hexagon_of, multiplicity_profile, verify_2design
from qdf.serialize import (
    block_to_dict,
    design_to_dict,
    element_hex,
    family_from_dict,
    family_to_dict,
    gdd_to_dict,
    hex_width,
    hexagon_to_list,
    profile_to_csv,
    report_to_dict,
    to_json_bytes,
)
from oracles import cached_field


def test_hex_width_and_padding():
    assert [hex_width(n) for n in (3, 5, 9, 13, 15)] == [1, 2, 3, 4, 4]
    assert element_hex(7, 3) == "7"
    assert element_hex(7, 5) == "07"
    assert element_hex(511, 9) == "1ff"
    assert element_hex(0x1abc, 13) == "1abc"


def test_block_and_hexagon_serialization():
    f = cached_field(9)
    b = block_of(f, 300)
    d = block_to_dict(b, 9)
    assert d["seed"] == "12c"
    assert len(d["elements"]) == 7 and d["elements"][1] == "12c"
    assert all(len(s) == 3 for s in d["elements"])
    h = hexagon_to_list(hexagon_of(f, 300), 9)
    assert len(h) == 6 and h[0] == "12c" and h[1] == "12d"


def test_family_round_trip():
    f = cached_field(5)
    fam = build_family(f)
    d = family_to_dict(fam)
    assert list(d.keys()) == ["n", "modulus", "lambda", "blocks"]
    assert d["n"] == 5 and d["modulus"] == f.modulus and d["lambda"] == 7
    assert len(d["blocks"]) == 5 and all(len(row) == 7 for row in d["blocks"])
    back = family_from_dict(json.loads(to_json_bytes(d)))
    assert back.ctx == f
    assert back.lambda_claim == 7
    assert [b.elements for b in back.base_blocks] == [b.elements for b in fam.base_blocks]


def test_family_from_dict_rejects_malformed_blocks():
    f = cached_field(5)
    d = family_to_dict(build_family(f))
    short = {**d, "blocks": [d["blocks"][0][:6]]}
    with pytest.raises(ValueError):
        family_from_dict(short)
    shuffled = {**d, "blocks": [list(reversed(d["blocks"][0]))]}
    with pytest.raises(ValueError):
        family_from_dict(shuffled)


def test_design_and_gdd_dict_shapes():
    f = cached_field(9)
    fam = build_family(f)
    design = develop(fam)
    dd = design_to_dict(design)
    assert list(dd.keys()) == ["n", "modulus", "v", "k", "lambda", "orbits"]
    assert dd["v"] == 511 and dd["k"] == 7
    reps = {(o["length"], o["replication"]) for o in dd["orbits"]}
    assert (73, 7) in reps and (511, 1) in reps

    rf = build_relative_family(fam)
    gd = gdd_to_dict(desarguesian_spread(f), develop(rf))
    assert list(gd.keys()) == ["n", "modulus", "g", "lambda", "spread", "orbits"]
    assert gd["g"] == 3 and len(gd["spread"]) == 73 and len(gd["orbits"]) == 84


def test_report_dict_contains_no_timing():
    f = cached_field(5)
    rep = verify_2design(develop(build_family(f)))
    d = report_to_dict(rep, 5)
    assert d["pass"] is True
    assert "timing" not in d
    assert d["pair_coverage_min"] == d["pair_coverage_max"] == 7


def test_profile_csv_shape():
    f = cached_field(3)
    csv = profile_to_csv(multiplicity_profile(build_family(f)), 3)
    lines = csv.strip().split("\n")
    assert lines[0] == "t_hex,count"
    assert lines[1:] == [f"{t:x},7" for t in range(2, 8)]


def test_json_bytes_deterministic():
    f = cached_field(5)
    fam = build_family(f)
    assert to_json_bytes(family_to_dict(fam)) == to_json_bytes(family_to_dict(build_family(cached_field(5))))
    assert to_json_bytes(family_to_dict(fam)).endswith(b"\n")
