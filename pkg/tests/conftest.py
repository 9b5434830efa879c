import json

import pytest

from src.config import reset_config
from tests.strategies import biquadratic_field, cbrt5_field, cyclotomic5_field, inv_sqrt5_field, sqrt5_field


@pytest.fixture(autouse=True)
def fresh_config():
    reset_config()
    yield
    reset_config()


@pytest.fixture
def sqrt5():
    return sqrt5_field()


@pytest.fixture
def cbrt5():
    return cbrt5_field()


@pytest.fixture
def cyclotomic5():
    return cyclotomic5_field()


@pytest.fixture
def biquadratic():
    return biquadratic_field()


@pytest.fixture
def inv_sqrt5():
    return inv_sqrt5_field()


@pytest.fixture
def write_json(tmp_path):
    """把对象写成 JSON 文件并返回路径字符串"""
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding='utf-8')
        return str(path)
    return write
