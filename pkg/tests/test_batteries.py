import sys
from pathlib import Path

import numpy as np
import pytest

# Ensure the project root is on the import path for tests without installation
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from lieball.batteries import (
    Battery,
    embedding_specs,
    run_battery,
    sample_domain_iv,
    sample_embedding_input,
)
from lieball.domainiv import in_domain_iv
from lieball.errors import BadParams, DomainViolation
from lieball.symspace import EmbeddingType, embed, in_lieball


def _failures(items):
    return [f"{item.name}: {item.detail}" for item in items if not item.passed]


@pytest.mark.parametrize(
    "battery,n_values,samples",
    [
        (Battery.THEOREM1, [2, 3], 1),
        (Battery.THEOREM1, None, 1),
        (Battery.APPENDIX_A, None, 1),
        (Battery.APPENDIX_B, [1, 2], 6),
        (Battery.EMBEDDINGS, [2], 2),
        (Battery.EMBEDDINGS, [3, 4], 2),
        (Battery.LEMMA_FORMS, None, 1),
    ],
)
def test_battery_passes(battery, n_values, samples):
    items = run_battery(battery, n_values, samples=samples)
    assert items
    assert _failures(items) == []


def test_appendix_a_names_its_checks():
    names = [item.name for item in run_battery(Battery.APPENDIX_A)]
    assert any("Lie triple" in name for name in names)
    assert any("parabolic" in name for name in names)


def test_battery_rejects_out_of_range_n():
    with pytest.raises(BadParams):
        run_battery(Battery.THEOREM1, [9])
    with pytest.raises(BadParams):
        run_battery(Battery.EMBEDDINGS, [0])


def test_embedding_specs_cover_every_type():
    kinds = {spec.kind for spec in embedding_specs(3)}
    assert kinds == set(EmbeddingType)
    assert not [s for s in embedding_specs(3) if s.kind is EmbeddingType.I1 and s.k > 1]


def test_samples_land_on_the_right_side():
    rng = np.random.default_rng(3)
    for spec in embedding_specs(3):
        assert in_lieball(embed(spec, sample_embedding_input(spec, rng)))
        with pytest.raises(DomainViolation):
            embed(spec, sample_embedding_input(spec, rng, inside=False))


def test_narrow_domain_samples_are_inside():
    rng = np.random.default_rng(0)
    assert all(in_domain_iv(sample_domain_iv(rng, 3)) for _ in range(20))


def test_batteries_are_deterministic():
    first = run_battery(Battery.APPENDIX_B, [2], seed=5, samples=4)
    second = run_battery(Battery.APPENDIX_B, [2], seed=5, samples=4)
    assert first == second


def test_unitary_embedding_checks_pass_for_every_k():
    items = run_battery(Battery.EMBEDDINGS, [4, 6], samples=1)
    unitary = [item for item in items if item.name.startswith("I1")]
    assert unitary
    assert _failures(unitary) == []


def test_lemma_forms_cover_the_complex_and_quaternionic_cases():
    items = run_battery(Battery.LEMMA_FORMS)
    names = " ".join(item.name for item in items)
    assert "su(2) on C^2" in names
    assert "so*(4)" in names
    assert "SU2_real is of quaternionic type" in names
    assert _failures(items) == []
