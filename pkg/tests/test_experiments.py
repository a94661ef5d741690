import json
import math

import numpy as np
import pytest

from sympgroth.experiments import (
    SHARPNESS_FLOOR,
    SweepReport,
    blt_sweep,
    fourier_block_matrix,
    sharpness_sweep,
    tame_bench,
)
from sympgroth.grothendieck import KG_UPPER
from sympgroth.linalg import numerical_rank
from sympgroth.rng import trial_rng

# abs_sum and inf->1 norm of the Fourier blocks, from an entry-by-entry
# construction and full sign enumeration
FOURIER_ORACLE = {
    1: (2.0, 2.0, 0.7071067811865477),
    2: (5.6568542494923815, 2.8284271247461907, 1.0),
    4: (16.0, 8.0, 0.7071067811865475),
    8: (49.94112549695436, 15.313708498984768, 0.8153009687409363),
}


def test_sharpness_matches_oracle():
    rep = sharpness_sweep([1, 2, 4, 8])
    assert rep.all_hold
    for row in rep.rows:
        total, norm, ratio = FOURIER_ORACLE[row.parameter]
        assert row.lhs == pytest.approx(total, rel=1e-12)
        assert row.rhs == pytest.approx(math.sqrt(2 * row.parameter) * norm, rel=1e-12)
        assert row.ratio == pytest.approx(ratio, rel=1e-12)
        assert SHARPNESS_FLOOR - 1e-9 <= row.ratio <= 3 * KG_UPPER + 1e-9


@pytest.mark.parametrize("m", [1, 2, 4, 8])
def test_padded_rank(m):
    assert numerical_rank(fourier_block_matrix(m, 2 * m + 3)) == 2 * m


def test_fourier_block_padding_error():
    with pytest.raises(ValueError):
        fourier_block_matrix(4, 7)


def test_sharpness_beyond_enumeration_uses_upper_bound():
    rep = sharpness_sweep([16])
    row = rep.rows[0]
    assert row.note == "upper-bound norm"
    assert row.ratio >= SHARPNESS_FLOOR - 1e-9


def test_blt_small():
    rep = blt_sweep([1, 2], N=6, trials=10, seed=3)
    assert rep.all_hold
    assert set(rep.empirical_cn) == {1, 2}
    for row in rep.rows:
        assert row.rhs == pytest.approx(3 * KG_UPPER * math.sqrt(2 * row.parameter))


def test_sweeps_are_reproducible():
    a = blt_sweep([1, 2], N=6, trials=5, seed=11)
    b = blt_sweep([1, 2], N=6, trials=5, seed=11)
    assert [r.lhs for r in a.rows] == [r.lhs for r in b.rows]


def test_trial_streams_are_order_independent():
    x = trial_rng(7, 2, 3).standard_normal(4)
    trial_rng(7, 2, 1).standard_normal(100)
    np.testing.assert_array_equal(trial_rng(7, 2, 3).standard_normal(4), x)
    assert not np.array_equal(trial_rng(7, 2, 4).standard_normal(4), x)


def test_tame_bench_rows():
    rep = tame_bench([1, 2], N=6, trials=2, seed=0)
    assert rep.all_hold
    labels = [r.parameter for r in rep.rows]
    assert labels[:4] == ["n=1:basis", "n=1:random0", "n=1:random1", "n=1:isotropic"]
    ex2 = next(r for r in rep.rows if r.parameter == "n=2:basis")
    assert math.sqrt(ex2.lhs) >= 4 - 1e-8
    assert ex2.lhs <= 3 * KG_UPPER * 4 * 4


def test_report_json_round_trip():
    rep = tame_bench([1], N=4, trials=1)
    back = SweepReport.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert back == rep
    rep = blt_sweep([1], N=4, trials=3)
    back = SweepReport.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert back == rep
    lines = list(rep.csv_lines())
    assert lines[0].startswith("parameter,lhs,rhs")
    assert len(lines) == 2
