# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import pytest

import poishare


def path3():
    return poishare.Instance(3, 3, [(0, 1), (1, 2)])


def test_instance_round_trip(tmp_path):
    inst = poishare.Instance(4, 3, [(0, 1), (1, 2), (2, 3)], [(0, 2)], social_hop_radius=2)
    path = tmp_path / "inst.json"
    inst.save(str(path))
    back = poishare.Instance.load(str(path))
    assert back.to_json() == inst.to_json()
    assert back.sensing_edges == [(0, 1), (1, 2), (2, 3)]
    assert back.social_hop_radius == 2
    assert "nodes=4" in repr(back)


def test_validate_reports_violations():
    assert poishare.validate(path3()) == []
    bad = poishare.Instance(2, 3, [(0, 1)])
    assert poishare.validate(bad)


def test_welfare_on_the_path():
    average, per_user = poishare.welfare(path3(), [])
    assert per_user == [1.0, 2.0, 1.0]
    assert average == pytest.approx(4.0 / 3.0)
    assert poishare.welfare(path3(), [1], route="both")[0] == 2.0
    assert poishare.walk_welfare(path3(), [[0, 1]])[0] == 2.0


def test_solve_static():
    out = poishare.solve_static(path3(), 1)
    assert out["selection"] == [1]
    assert out["welfare"] == 2.0
    assert out["ratio"] <= 1.0
    assert out["bound"] == 1.0


def test_solve_mobile():
    out = poishare.solve_mobile(path3(), hops=1, k=1)
    assert out["walks"] == [[0, 1]]
    assert out["welfare"] == 2.0
    adjusted = poishare.solve_mobile(path3(), hops=1, k=2, adjusted=True)
    assert len({w[0] for w in adjusted["walks"]}) == 2


def test_errors_map_to_python_exceptions():
    with pytest.raises(poishare.InputError):
        poishare.solve_static(path3(), 4)
    with pytest.raises(ValueError):
        poishare.Instance.from_json("not json")
    one_user = poishare.Instance(3, 1, [(0, 1), (1, 2)])
    with pytest.raises(poishare.InfeasibleError):
        poishare.solve_mobile(one_user, hops=1, k=2)


def test_sweep_and_generate():
    inst = poishare.generate(seed=3, node_count=8, user_count=8, social_mean=2.0)
    assert inst.to_json() == poishare.generate(seed=3, node_count=8, user_count=8,
                                                social_mean=2.0).to_json()
    rows = poishare.sweep(inst, 1, 3)
    assert len(rows) == 12
    assert all(r["ratio"] <= 1.0 + 1e-9 for r in rows if r["algorithm"] != "bound")


def test_bounds():
    assert poishare.static_bound(1, 5) == 1.0
    assert poishare.mobile_bound(2, 4, 2) == pytest.approx(0.875)
