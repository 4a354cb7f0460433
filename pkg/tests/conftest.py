import os

import pytest

from config.settings import Settings, load_settings


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    """Keep developer `.env` files and HODGE_LEVELS_* variables out of the tests."""
    monkeypatch.setattr("config.settings.load_dotenv", lambda *args, **kwargs: False)
    for name in list(os.environ):
        if name.startswith("HODGE_LEVELS_"):
            monkeypatch.delenv(name)
    load_settings.cache_clear()
    yield
    load_settings.cache_clear()


@pytest.fixture
def settings() -> Settings:
    return Settings()
