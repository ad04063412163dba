from analysis.experiments.spectra_experiment import SpectraExperiment
from config.config_loader import parse_config
from consts.path_consts import PHASE_SHIFTS_FILE_NAME
from consts.scattering_consts import BORN_PHASE_SHIFT
from models.check_status import CheckStatus


def test_spectra_experiment_on_a_small_grid(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    config = parse_config({'tag': 'spectra', 'grid': {'r_max': 20.0, 'n_r': 400, 'k_max': 8.0, 'n_k': 64}})
    outcome = SpectraExperiment(config).run()
    checks = {check.name: check for check in outcome.checks}

    assert {'no_bound_states', 'completeness_defect', 'spherical_well_phase_shift', 'born_relative_error',
            'radiation_defect'} <= set(checks)
    assert checks['no_bound_states'].status == CheckStatus.PASS
    assert checks['spherical_well_phase_shift'].status == CheckStatus.PASS
    assert BORN_PHASE_SHIFT in outcome.artifacts[PHASE_SHIFTS_FILE_NAME].columns
