import pytest

from libkovalevskaya.bifurcation import Window
from libkovalevskaya.config import OUT_ENV_VAR, ConfigError, RunConfig, read_config_file, \
    resolve_config


def _write(tmp_path, text):
    path = tmp_path / 'run.cfg'
    path.write_text(text)
    return str(path)


def test_defaults():
    config = resolve_config(environ={})
    assert config.kappa == -1.0
    assert config.out == '.'
    assert config.window is None
    assert config.spec.c1 == 1.0
    assert config.orbit.a == -2.0


def test_precedence(tmp_path):
    path = _write(tmp_path, "# run settings\nout = from_file\ngrid = 12\nprobe-budget = 256\n")
    environ = {OUT_ENV_VAR: 'from_env'}
    assert resolve_config(environ=environ).out == 'from_env'
    config = resolve_config(config_file=path, environ=environ)
    assert config.out == 'from_file'
    assert config.grid == 12
    assert config.probe_budget == 256
    config = resolve_config(flags={'out': 'from_flag', 'grid': None}, config_file=path,
                            environ=environ)
    assert config.out == 'from_flag'
    assert config.grid == 12


def test_window_needs_all_edges():
    flags = {'h_min': -1.0, 'h_max': 4.0, 'k_min': 0.0}
    assert resolve_config(flags, environ={}).window is None
    flags['k_max'] = 5.0
    assert resolve_config(flags, environ={}).window == Window(-1.0, 4.0, 0.0, 5.0)


def test_k_spec_overrides_c1_of_k_only():
    config = resolve_config({'k_c1': 2.0}, environ={})
    assert config.spec.c1 == 1.0
    assert config.k_spec.c1 == 2.0
    assert resolve_config(environ={}).k_spec == resolve_config(environ={}).spec


def test_none_values_fall_back_to_unset(tmp_path):
    assert read_config_file(_write(tmp_path, "k_c1 = none\n")) == {'k_c1': 'none'}
    assert resolve_config(config_file=_write(tmp_path, "k_c1 = none\n"), environ={}).k_c1 is None


@pytest.mark.parametrize('text', [
    "colour = red\n",
    "grid = many\n",
    "grid = 1\n",
    "budget = 0\n",
    "hmin = 0\n",
    "h_min = 1\nh_max = 0\nk_min = 0\nk_max = 1\n",
    "no equals sign here\n",
])
def test_invalid_files(tmp_path, text):
    with pytest.raises(ConfigError):
        resolve_config(config_file=_write(tmp_path, text), environ={})


def test_round_trip_through_get_config():
    config = resolve_config({'a': 1.5, 'seed': 7}, environ={})
    assert RunConfig.from_config(config.get_config()) == config
