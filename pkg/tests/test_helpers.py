"""Tests for configuration, input helpers and text rendering"""

import os
from fractions import Fraction

import pytest

from src.algebra import log_hessian, parse_laurent
from src.ui import TextComponents
from src.utils import AppConfig, ConfigError, load_config, parse_point, read_expression


@pytest.fixture
def clean_env(tmp_path):
    names = ("LOGHESSE_LOG_LEVEL", "LOGHESSE_FUZZ_WORKERS")
    saved = {name: os.environ.pop(name, None) for name in names}
    yield tmp_path
    # load_dotenv writes into os.environ
    for name, value in saved.items():
        os.environ.pop(name, None)
        if value is not None:
            os.environ[name] = value


def test_defaults(clean_env):
    assert load_config(str(clean_env / "missing.env")) == AppConfig()


def test_env_file(clean_env):
    env = clean_env / ".env"
    env.write_text("LOGHESSE_LOG_LEVEL=debug\nLOGHESSE_FUZZ_WORKERS=4\n")
    config = load_config(str(env))
    assert config == AppConfig(log_level='DEBUG', fuzz_workers=4)


@pytest.mark.parametrize("name,value", [
    ('LOGHESSE_LOG_LEVEL', 'chatty'),
    ('LOGHESSE_FUZZ_WORKERS', 'many'),
    ('LOGHESSE_FUZZ_WORKERS', '0'),
])
def test_invalid_values(clean_env, monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        load_config(str(clean_env / "missing.env"))


def test_parse_point():
    assert parse_point("1, -2/3,4") == [1, Fraction(-2, 3), 4]
    for bad in ("1,,2", "1/0", "0.5", "1e3", "x"):
        with pytest.raises(ValueError):
            parse_point(bad)


def test_read_expression(tmp_path):
    path = tmp_path / "expr"
    path.write_text("  x1 + 1\n")
    assert read_expression(f"@{path}") == "x1 + 1"
    assert read_expression("x2") == "x2"


def test_render_matrix_aligns_columns():
    text = TextComponents.render_matrix(log_hessian(parse_laurent("x1 + x2 + x1*x2", 2)))
    assert text.splitlines() == ["[ x2 + 1      x1 ]", "[     x2  x1 + 1 ]"]


def test_render_projective_point_and_rows():
    assert TextComponents.render_projective_point([Fraction(1), Fraction(-1, 2)]) == "(1 : -1/2)"
    assert TextComponents.render_integer_rows([]) == "(empty)"
    assert TextComponents.render_integer_rows([[1, -1], [0, 2]]) == "(1, -1); (0, 2)"
